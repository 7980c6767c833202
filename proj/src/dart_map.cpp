#include "hfmap/dart_map.hpp"

#include "hfmap/errors.hpp"

#include <limits>
#include <string>

namespace hfmap {

namespace {

constexpr std::uint32_t kUnlabelled = std::numeric_limits<std::uint32_t>::max();

void require_permutation(std::span<const Dart> perm, const char* what) {
    std::vector<bool> hit(perm.size(), false);
    for (Dart d : perm) {
        if (d >= perm.size() || hit[d]) {
            throw VerificationError(std::string(what) + " is not a permutation");
        }
        hit[d] = true;
    }
}

std::optional<std::size_t> uniform_length(const std::vector<std::vector<Dart>>& cs) {
    if (cs.empty()) {
        return std::nullopt;
    }
    const std::size_t len = cs.front().size();
    for (const auto& c : cs) {
        if (c.size() != len) {
            return std::nullopt;
        }
    }
    return len;
}

} // namespace

MapStructure make_map(DartPerm sigma, DartPerm alpha) {
    if (sigma.size() != alpha.size()) {
        throw VerificationError("sigma and alpha act on different dart sets");
    }
    require_permutation(sigma, "sigma");
    require_permutation(alpha, "alpha");
    for (Dart d = 0; d < alpha.size(); ++d) {
        if (alpha[d] == d || alpha[alpha[d]] != d) {
            throw VerificationError("alpha is not a fixed-point-free involution at dart " + std::to_string(d));
        }
    }
    DartPerm phi(sigma.size());
    for (Dart d = 0; d < sigma.size(); ++d) {
        phi[d] = alpha[sigma[d]];
    }
    return {std::move(sigma), std::move(alpha), std::move(phi)};
}

std::vector<std::vector<Dart>> cycles(std::span<const Dart> perm) {
    std::vector<std::vector<Dart>> out;
    std::vector<bool> seen(perm.size(), false);
    for (Dart start = 0; start < perm.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<Dart> cycle;
        for (Dart d = start; !seen[d]; d = perm[d]) {
            seen[d] = true;
            cycle.push_back(d);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::size_t count_cycles(std::span<const Dart> perm) {
    std::size_t count = 0;
    std::vector<bool> seen(perm.size(), false);
    for (Dart start = 0; start < perm.size(); ++start) {
        if (seen[start]) {
            continue;
        }
        ++count;
        for (Dart d = start; !seen[d]; d = perm[d]) {
            seen[d] = true;
        }
    }
    return count;
}

bool is_connected(const MapStructure& map) {
    if (map.darts() == 0) {
        return true;
    }
    std::vector<bool> seen(map.darts(), false);
    std::vector<Dart> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Dart d = stack.back();
        stack.pop_back();
        for (Dart e : {map.sigma[d], map.alpha[d]}) {
            if (!seen[e]) {
                seen[e] = true;
                ++reached;
                stack.push_back(e);
            }
        }
    }
    return reached == map.darts();
}

MapInvariants compute_invariants(const MapStructure& map) {
    const auto vertex_cycles = cycles(map.sigma);
    const auto face_cycles = cycles(map.phi);
    MapInvariants inv;
    inv.darts = map.darts();
    inv.vertices = vertex_cycles.size();
    inv.edges = count_cycles(map.alpha);
    inv.faces = face_cycles.size();
    inv.euler_characteristic = static_cast<std::int64_t>(inv.vertices) - static_cast<std::int64_t>(inv.edges) +
                               static_cast<std::int64_t>(inv.faces);
    if ((2 - inv.euler_characteristic) % 2 != 0) {
        throw VerificationError("odd Euler characteristic " + std::to_string(inv.euler_characteristic) +
                                " for an oriented map");
    }
    inv.genus = (2 - inv.euler_characteristic) / 2;
    inv.vertex_valency = uniform_length(vertex_cycles);
    inv.face_size = uniform_length(face_cycles);
    return inv;
}

std::vector<std::uint32_t> canonical_form(const MapStructure& map, Dart root) {
    const std::size_t n = map.darts();
    std::vector<std::uint32_t> label(n, kUnlabelled);
    std::vector<Dart> order;
    order.reserve(n);
    label[root] = 0;
    order.push_back(root);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Dart d = order[head];
        for (Dart e : {map.sigma[d], map.alpha[d]}) {
            if (label[e] == kUnlabelled) {
                label[e] = static_cast<std::uint32_t>(order.size());
                order.push_back(e);
            }
        }
    }
    std::vector<std::uint32_t> code;
    code.reserve(2 * order.size() + 1);
    code.push_back(static_cast<std::uint32_t>(order.size()));
    for (Dart d : order) {
        code.push_back(label[map.sigma[d]]);
        code.push_back(label[map.alpha[d]]);
    }
    return code;
}

} // namespace hfmap
