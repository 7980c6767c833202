#include "hfmap/polygon_lab.hpp"

#include "hfmap/disjoint_sets.hpp"
#include "hfmap/errors.hpp"
#include "hfmap/fixtures.hpp"
#include "hfmap/map_assembler.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <limits>
#include <optional>
#include <sstream>

namespace hfmap {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

int wrap_side(int k, std::size_t sides) {
    const int n = static_cast<int>(sides);
    return ((k - 1) % n + n) % n + 1;
}

std::optional<int> rule_partner(int k, std::size_t sides) {
    if (k % 4 == 2) {
        return wrap_side(k + 3, sides);
    }
    if (k % 4 == 3) {
        return wrap_side(k + 9, sides);
    }
    return std::nullopt;
}

} // namespace

Circuit parse_circuit(std::string_view text, const NameTable& names) {
    Circuit c;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        if (!token.empty()) {
            c.seq.push_back(names.resolve(token));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (c.seq.size() > 1 && c.seq.back() == c.seq.front()) {
        c.seq.pop_back();
    }
    if (c.seq.empty()) {
        throw InvalidArgument("empty circuit");
    }
    return c;
}

std::string format_circuit(const Circuit& c, const NameTable& names) {
    std::string out;
    for (const HFCoord& u : c.seq) {
        out += names.label(u);
        out += ", ";
    }
    out += names.label(c.seq.front());
    return out;
}

Circuit bring_circuit() {
    Circuit c;
    for (auto name : fixtures::kBringCircuit) {
        c.seq.push_back(bring_names().resolve(name));
    }
    return c;
}

bool validate_circuit(const Circuit& c, const HeckeParams& p) {
    if (c.seq.empty()) {
        return false;
    }
    for (std::size_t i = 0; i < c.seq.size(); ++i) {
        if (!adjacent(c.seq[i], c.seq[(i + 1) % c.seq.size()], p)) {
            return false;
        }
    }
    return true;
}

std::vector<Circuit> search_circuits(const HFCoord& start, std::size_t length,
                                     const std::set<std::size_t>& pole_positions, const HeckeParams& p) {
    if (length > kMaxCircuitSearchLength) {
        throw ResourceLimit("circuit search length " + std::to_string(length) + " exceeds the bound of " +
                            std::to_string(kMaxCircuitSearchLength));
    }
    std::vector<Circuit> found;
    if (length == 0) {
        return found;
    }
    const CoordGraph graph = build_coordinate_graph(p);
    const auto root = static_cast<std::uint32_t>(graph.index_of(start));
    if (is_pole(start) != pole_positions.contains(0)) {
        return found;
    }

    constexpr auto kFar = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(graph.vertices.size(), kFar);
    dist[root] = 0;
    std::deque<std::uint32_t> queue{root};
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        for (auto v : graph.neighbours[u]) {
            if (dist[v] == kFar) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }

    std::vector<std::uint32_t> path{root};
    const auto dfs = [&](auto&& self) -> void {
        const std::size_t i = path.size();
        if (i == length) {
            const auto& last = graph.neighbours[path.back()];
            if (std::binary_search(last.begin(), last.end(), root)) {
                Circuit c;
                for (auto idx : path) {
                    c.seq.push_back(graph.vertices[idx]);
                }
                found.push_back(std::move(c));
            }
            return;
        }
        const bool want_pole = pole_positions.contains(i);
        for (auto v : graph.neighbours[path.back()]) {
            if (is_pole(graph.vertices[v]) != want_pole || dist[v] > length - i) {
                continue;
            }
            path.push_back(v);
            self(self);
            path.pop_back();
        }
    };
    dfs(dfs);
    return found;
}

std::vector<HFCoord> BoundarySequence::span_interior(std::size_t s) const {
    const std::size_t begin = pole_slots[s % pole_slots.size()];
    const std::size_t end = pole_slots[(s + 1) % pole_slots.size()];
    std::vector<HFCoord> out;
    for (std::size_t i = (begin + 1) % slots.size(); i != end; i = (i + 1) % slots.size()) {
        out.push_back(slots[i]);
    }
    return out;
}

std::vector<HFCoord> translation_orbit(const HFCoord& u, const HeckeParams& p) {
    const ProjMatrix T = generators(p).T;
    std::vector<HFCoord> orbit{u};
    for (HFCoord v = apply(T, u, p); v != u; v = apply(T, v, p)) {
        orbit.push_back(v);
    }
    return orbit;
}

BoundarySequence boundary_from_circuit(const Circuit& c, const HeckeParams& p) {
    if (c.seq.empty() || c.seq.size() % 3 != 0) {
        throw VerificationError("circuit length " + std::to_string(c.seq.size()) + " is not a multiple of 3");
    }
    for (std::size_t i = 0; i < c.seq.size(); ++i) {
        if (is_pole(c.seq[i]) != (i % 3 == 0)) {
            throw VerificationError("circuit position " + std::to_string(i) +
                                    (i % 3 == 0 ? " should be a pole" : " should not be a pole"));
        }
    }
    if (!validate_circuit(c, p)) {
        throw VerificationError("circuit has a non-adjacent step");
    }

    const ProjMatrix T = generators(p).T;
    BoundarySequence b;
    b.params = p;
    std::vector<HFCoord> block = c.seq;
    for (std::uint32_t k = 0; k < p.n; ++k) {
        b.slots.insert(b.slots.end(), block.begin(), block.end());
        for (HFCoord& u : block) {
            u = apply(T, u, p);
        }
    }
    for (std::size_t i = 0; i < b.slots.size(); ++i) {
        if (!adjacent(b.slots[i], b.slots[(i + 1) % b.slots.size()], p)) {
            throw VerificationError("boundary slots " + std::to_string(i) + " and " +
                                    std::to_string((i + 1) % b.slots.size()) + " are not adjacent");
        }
        if (is_pole(b.slots[i])) {
            b.pole_slots.push_back(i);
        }
    }
    if (b.pole_slots.size() * 3 != b.slots.size()) {
        throw VerificationError("boundary has " + std::to_string(b.pole_slots.size()) + " poles on " +
                                std::to_string(b.slots.size()) + " slots");
    }
    return b;
}

std::map<HFCoord, std::size_t> pole_multiset(const BoundarySequence& b) {
    std::map<HFCoord, std::size_t> out;
    for (std::size_t i : b.pole_slots) {
        ++out[b.slots[i]];
    }
    return out;
}

PairingTable::PairingTable(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    const std::size_t sides = 2 * pairs_.size();
    partner_.assign(sides, 0);
    for (auto [a, b] : pairs_) {
        const auto in_range = [sides](int k) { return k >= 1 && static_cast<std::size_t>(k) <= sides; };
        if (!in_range(a) || !in_range(b) || a == b) {
            throw InvalidArgument("pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ") is not a pair of distinct sides in 1.." + std::to_string(sides));
        }
        if (partner_[a - 1] != 0 || partner_[b - 1] != 0) {
            throw InvalidArgument("side " + std::to_string(partner_[a - 1] != 0 ? a : b) + " is paired twice");
        }
        partner_[a - 1] = b;
        partner_[b - 1] = a;
    }
}

PairingTable parse_pairing(std::istream& in) {
    std::vector<std::pair<int, int>> pairs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        std::istringstream fields(line);
        int a = 0;
        int b = 0;
        std::string rest;
        if (!(fields >> a >> b) || (fields >> rest)) {
            throw InvalidArgument("pairing line " + std::to_string(line_no) + " is not of the form 'i j'");
        }
        pairs.emplace_back(a, b);
    }
    return PairingTable(std::move(pairs));
}

PairingTable parse_pairing(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_pairing(in);
}

std::string format_pairing(const PairingTable& t) {
    std::string out;
    for (auto [a, b] : t.pairs()) {
        out += std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return out;
}

PairingTable bring_pairing() {
    return PairingTable({fixtures::kSidePairings.begin(), fixtures::kSidePairings.end()});
}

bool pairing_rule_check(const PairingTable& t) {
    for (int k = 1; static_cast<std::size_t>(k) <= t.sides(); ++k) {
        if (const auto want = rule_partner(k, t.sides()); want && t.partner(k) != *want) {
            return false;
        }
    }
    return t.sides() > 0;
}

std::vector<PairingTable> rule_matchings(std::size_t sides) {
    std::vector<PairingTable> out;
    if (sides == 0 || sides % 2 != 0) {
        return out;
    }
    std::vector<int> partner(sides + 1, 0);
    std::vector<std::pair<int, int>> chosen;
    const auto allowed = [&](int a, int b) {
        const auto ra = rule_partner(a, sides);
        const auto rb = rule_partner(b, sides);
        return (!ra || *ra == b) && (!rb || *rb == a);
    };
    const auto search = [&](auto&& self) -> void {
        int first = 0;
        for (int k = 1; static_cast<std::size_t>(k) <= sides; ++k) {
            if (partner[k] == 0) {
                first = k;
                break;
            }
        }
        if (first == 0) {
            out.emplace_back(chosen);
            return;
        }
        for (int other = first + 1; static_cast<std::size_t>(other) <= sides; ++other) {
            if (partner[other] != 0 || !allowed(first, other)) {
                continue;
            }
            partner[first] = other;
            partner[other] = first;
            chosen.emplace_back(first, other);
            self(self);
            chosen.pop_back();
            partner[first] = 0;
            partner[other] = 0;
        }
    };
    search(search);
    return out;
}

PairingTable pairing_from_side_labels(std::span<const HFCoord> labels) {
    std::map<HFCoord, std::vector<int>> sides_of;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        sides_of[labels[k]].push_back(static_cast<int>(k + 1));
    }
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [label, sides] : sides_of) {
        if (sides.size() != 2) {
            throw VerificationError("label " + to_string(label) + " is carried by " + std::to_string(sides.size()) +
                                    " sides, expected 2");
        }
        pairs.emplace_back(sides[0], sides[1]);
    }
    std::sort(pairs.begin(), pairs.end());
    return PairingTable(std::move(pairs));
}

CornerPartition vertex_classes(const PairingTable& t) {
    const std::size_t sides = t.sides();
    DisjointSets corners(sides);
    const auto corner = [sides](int k) { return static_cast<std::size_t>(wrap_side(k, sides) - 1); };
    for (auto [i, j] : t.pairs()) {
        corners.unite(corner(i), corner(j + 1));
        corners.unite(corner(i + 1), corner(j));
    }
    std::map<std::size_t, std::vector<int>> by_root;
    for (std::size_t k = 0; k < sides; ++k) {
        by_root[corners.find(k)].push_back(static_cast<int>(k + 1));
    }
    CornerPartition out;
    for (auto& [root, members] : by_root) {
        out.classes.push_back(std::move(members));
    }
    std::sort(out.classes.begin(), out.classes.end());
    out.vertices = out.classes.size();
    out.edges = sides / 2;
    out.faces = 1;
    out.euler_characteristic = static_cast<std::int64_t>(out.vertices) - static_cast<std::int64_t>(out.edges) + 1;
    if (out.euler_characteristic % 2 != 0) {
        throw VerificationError("glued polygon has odd Euler characteristic");
    }
    out.genus = (2 - out.euler_characteristic) / 2;
    return out;
}

std::vector<HFCoord> bring_side_labels() {
    std::vector<HFCoord> out;
    for (auto name : fixtures::kSideLabels) {
        out.push_back(bring_names().resolve(name));
    }
    return out;
}

SideLabelReport side_label_analysis(const BoundarySequence& b, std::span<const HFCoord> side_labels) {
    SideLabelReport report;
    const std::size_t sides = b.sides();
    const HeckeParams& p = b.params;
    std::vector<std::vector<HFCoord>> interiors;
    for (std::size_t s = 0; s < sides; ++s) {
        interiors.push_back(b.span_interior(s));
        const auto& in = interiors.back();
        report.spans.emplace_back(in.empty() ? HFCoord{} : in.front(), in.empty() ? HFCoord{} : in.back());
    }

    std::set<HFCoord> distinct;
    for (const HFCoord& u : side_labels) {
        ++report.label_multiplicity[u];
        distinct.insert(u);
    }
    report.every_label_twice = !side_labels.empty() &&
                               std::all_of(report.label_multiplicity.begin(), report.label_multiplicity.end(),
                                           [](const auto& kv) { return kv.second == 2; });

    std::set<HFCoord> covered;
    for (const HFCoord& u : side_labels) {
        if (covered.contains(u)) {
            continue;
        }
        auto orbit = translation_orbit(u, p);
        covered.insert(orbit.begin(), orbit.end());
        report.label_orbits.push_back(std::move(orbit));
    }
    report.labels_are_orbit_union = covered == distinct;

    report.translation_equivariant = false;
    if (sides == side_labels.size() && sides % p.n == 0) {
        const std::size_t step = sides / p.n;
        const ProjMatrix T = generators(p).T;
        report.translation_equivariant = true;
        for (std::size_t k = 0; k < sides; ++k) {
            if (side_labels[(k + step) % sides] != apply(T, side_labels[k], p)) {
                report.translation_equivariant = false;
                break;
            }
        }
    }

    if (side_labels.size() == sides) {
        for (bool reversed : {false, true}) {
            for (std::size_t offset = 0; offset < sides; ++offset) {
                bool ok = true;
                for (std::size_t k = 0; k < sides && ok; ++k) {
                    const std::size_t span = reversed ? (offset + sides - k) % sides : (offset + k) % sides;
                    const auto& in = interiors[span];
                    ok = std::find(in.begin(), in.end(), side_labels[k]) != in.end();
                }
                if (ok) {
                    report.alignments.push_back({offset, reversed});
                }
            }
        }
    }

    for (const HFCoord& u : distinct) {
        std::size_t count = 0;
        for (const auto& in : interiors) {
            count += static_cast<std::size_t>(std::count(in.begin(), in.end(), u));
        }
        report.interior_occurrences[u] = count;
    }
    return report;
}

std::vector<HFCoord> corner_labels(const BoundarySequence& b, const SideAlignment& alignment) {
    const std::size_t sides = b.sides();
    std::vector<HFCoord> out;
    for (std::size_t k = 0; k < sides; ++k) {
        const std::size_t span =
            alignment.reversed ? (alignment.offset + sides - k) % sides : (alignment.offset + k) % sides;
        const std::size_t pole = alignment.reversed ? (span + 1) % sides : span;
        out.push_back(b.slots[b.pole_slots[pole]]);
    }
    return out;
}

bool corner_labels_consistent(const CornerPartition& partition, std::span<const HFCoord> labels) {
    for (const auto& cls : partition.classes) {
        for (int k : cls) {
            if (static_cast<std::size_t>(k) > labels.size() || labels[k - 1] != labels[cls.front() - 1]) {
                return false;
            }
        }
    }
    return true;
}

} // namespace hfmap
