#include "hfmap/farey_coords.hpp"

#include "hfmap/errors.hpp"
#include "hfmap/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace hfmap {

namespace {

struct Column {
    RingElem x;
    RingElem y;
};

Column column_of(const HFCoord& u, const HeckeParams& p) {
    if (!p.has_parity()) {
        return {{u.num, 0}, {u.den, 0}};
    }
    if (u.kind == Kind::A) {
        return {{u.num, 0}, {0, u.den}};
    }
    return {{0, u.num}, {u.den, 0}};
}

HFCoord read_column(const Column& col, const HeckeParams& p) {
    if (!p.has_parity()) {
        if (col.x.irr != 0 || col.y.irr != 0) {
            throw CorruptElement("irrational component in a q = 3 column");
        }
        return normalize(Kind::A, col.x.rat, col.y.rat, p);
    }
    if (col.x.irr == 0 && col.y.rat == 0) {
        return normalize(Kind::A, col.x.rat, col.y.irr, p);
    }
    if (col.x.rat == 0 && col.y.irr == 0) {
        return normalize(Kind::B, col.x.irr, col.y.rat, p);
    }
    throw CorruptElement("column (" + to_string(col.x, p.ring()) + ", " + to_string(col.y, p.ring()) +
                         ") is neither a kind A nor a kind B cusp");
}

void require_odd(const HeckeParams& p) {
    p.validate();
    if (p.n % 2 == 0) {
        throw InvalidArgument("coordinate enumeration needs odd n, got " + std::to_string(p.n));
    }
}

} // namespace

std::string to_string(const HFCoord& u) {
    return std::string(u.kind == Kind::A ? "A:" : "B:") + std::to_string(u.num) + "/" + std::to_string(u.den);
}

HFCoord parse_coord(std::string_view text, const HeckeParams& p) {
    const auto fail = [&] { return InvalidArgument("malformed coordinate '" + std::string(text) + "'"); };
    if (text.size() < 5 || text[1] != ':' || (text[0] != 'A' && text[0] != 'B')) {
        throw fail();
    }
    const auto slash = text.find('/', 2);
    if (slash == std::string_view::npos) {
        throw fail();
    }
    std::int64_t num = 0;
    std::int64_t den = 0;
    const auto num_part = text.substr(2, slash - 2);
    const auto den_part = text.substr(slash + 1);
    auto r1 = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
    auto r2 = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
    if (r1.ec != std::errc{} || r1.ptr != num_part.data() + num_part.size() || r2.ec != std::errc{} ||
        r2.ptr != den_part.data() + den_part.size()) {
        throw fail();
    }
    return normalize(text[0] == 'A' ? Kind::A : Kind::B, num, den, p);
}

HFCoord normalize(Kind kind, std::int64_t a, std::int64_t c, const HeckeParams& p) {
    p.validate();
    if (!p.has_parity() && kind != Kind::A) {
        throw InvalidArgument("q = 3 coordinates have a single kind");
    }
    const Residue ra = reduce(a, p.n);
    const Residue rc = reduce(c, p.n);
    if (std::gcd(std::gcd(ra, rc), p.n) != 1) {
        throw InvalidArgument("(" + std::to_string(a) + ", " + std::to_string(c) + ") is not primitive mod " +
                              std::to_string(p.n));
    }
    const Residue na = ra == 0 ? 0 : p.n - ra;
    const Residue nc = rc == 0 ? 0 : p.n - rc;
    if (std::pair{na, nc} < std::pair{ra, rc}) {
        return {kind, na, nc};
    }
    return {kind, ra, rc};
}

std::vector<HFCoord> enumerate_coords(const HeckeParams& p) {
    require_odd(p);
    std::set<HFCoord> found;
    const std::vector<Kind> kinds = p.has_parity() ? std::vector{Kind::A, Kind::B} : std::vector{Kind::A};
    for (Kind kind : kinds) {
        for (std::uint32_t a = 0; a < p.n; ++a) {
            for (std::uint32_t c = 0; c < p.n; ++c) {
                if (std::gcd(std::gcd(a, c), p.n) == 1) {
                    found.insert(normalize(kind, a, c, p));
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

bool adjacent(const HFCoord& u, const HFCoord& v, const HeckeParams& p) {
    const std::int64_t n = p.n;
    std::int64_t det = 0;
    if (!p.has_parity()) {
        det = std::int64_t{u.num} * v.den - std::int64_t{v.num} * u.den;
    } else {
        if (u.kind == v.kind) {
            return false;
        }
        const HFCoord& a = u.kind == Kind::A ? u : v;
        const HFCoord& b = u.kind == Kind::A ? v : u;
        det = std::int64_t{a.num} * b.den - std::int64_t{p.m()} * b.num * a.den;
    }
    const std::int64_t r = ((det % n) + n) % n;
    return r == 1 || r == n - 1;
}

HFCoord cusp_of(const ProjMatrix& g, const HeckeParams& p) {
    return read_column({g.e11, g.e21}, p);
}

HFCoord apply(const ProjMatrix& g, const HFCoord& u, const HeckeParams& p) {
    const RingParams r = p.ring();
    const Column col = column_of(u, p);
    const RingElem x = ring_add(ring_mul(g.e11, col.x, r), ring_mul(g.e12, col.y, r), r);
    const RingElem y = ring_add(ring_mul(g.e21, col.x, r), ring_mul(g.e22, col.y, r), r);
    return read_column({x, y}, p);
}

std::vector<HFCoord> poles(const HeckeParams& p) {
    std::vector<HFCoord> out;
    for (const HFCoord& u : enumerate_coords(p)) {
        if (is_pole(u)) {
            out.push_back(u);
        }
    }
    return out;
}

NameTable::NameTable(HeckeParams p, const std::vector<Entry>& rows) : params_(p) {
    std::set<HFCoord> seen;
    std::set<std::string> names;
    for (const Entry& row : rows) {
        Entry e = row;
        e.coord = normalize(row.printed.kind, row.printed.num, row.printed.den, p);
        if (!seen.insert(e.coord).second || !names.insert(e.name).second) {
            throw VerificationError("name table row " + e.name + " duplicates an earlier coordinate or name");
        }
        entries_.push_back(std::move(e));
    }
}

std::optional<HFCoord> NameTable::find(std::string_view name) const {
    for (const Entry& e : entries_) {
        if (e.name == name) {
            return e.coord;
        }
    }
    return std::nullopt;
}

std::optional<std::string> NameTable::name_of(const HFCoord& u) const {
    for (const Entry& e : entries_) {
        if (e.coord == u) {
            return e.name;
        }
    }
    return std::nullopt;
}

std::string NameTable::label(const HFCoord& u) const {
    return name_of(u).value_or(to_string(u));
}

HFCoord NameTable::resolve(std::string_view token) const {
    if (auto u = find(token)) {
        return *u;
    }
    if (token.find(':') != std::string_view::npos) {
        return parse_coord(token, params_);
    }
    throw InvalidArgument("unknown coordinate label '" + std::string(token) + "'");
}

namespace {

template <std::size_t N>
NameTable make_table(HeckeParams p, const std::array<fixtures::NamedFraction, N>& rows) {
    std::vector<NameTable::Entry> entries;
    for (const auto& row : rows) {
        const HFCoord printed{row.kind == 'A' ? Kind::A : Kind::B, static_cast<Residue>(row.num),
                              static_cast<Residue>(row.den)};
        entries.push_back({std::string(row.name), printed, printed});
    }
    return NameTable(p, entries);
}

} // namespace

const NameTable& bring_names() {
    static const NameTable table = make_table({4, 5}, fixtures::kBringTable);
    return table;
}

const NameTable& cube_names() {
    static const NameTable table = make_table({4, 3}, fixtures::kCubeFractions);
    return table;
}

const NameTable* names_for(const HeckeParams& p) {
    if (p == HeckeParams{4, 5}) {
        return &bring_names();
    }
    if (p == HeckeParams{4, 3}) {
        return &cube_names();
    }
    return nullptr;
}

std::string printed_form(const HFCoord& u, const HeckeParams& p) {
    const std::string num = std::to_string(u.num);
    const std::string den = std::to_string(u.den);
    if (!p.has_parity()) {
        return num + "/" + den;
    }
    const std::string root = p.m() == 2 ? "√2" : "√3";
    return u.kind == Kind::A ? num + "/(" + den + root + ")" : num + root + "/" + den;
}

} // namespace hfmap
