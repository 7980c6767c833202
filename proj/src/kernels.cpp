#include "hfmap/kernels.hpp"

#include "hfmap/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hfmap::kernels {

namespace {

std::uint32_t coord_index(std::span<const HFCoord> coords, const HFCoord& u) {
    const auto it = std::lower_bound(coords.begin(), coords.end(), u);
    if (it == coords.end() || *it != u) {
        throw CorruptElement("coordinate " + to_string(u) + " missing from the coordinate list");
    }
    return static_cast<std::uint32_t>(it - coords.begin());
}

void fill_mult_row(const FiniteHeckeGroup& group, std::int64_t a, MultTable& table) {
    const std::size_t n = group.order();
    for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = group.mult(static_cast<ElementId>(a), static_cast<ElementId>(b));
    }
}

void fill_adjacency_row(std::span<const HFCoord> coords, const HeckeParams& p, std::int64_t u,
                        AdjacencyMatrix& adj) {
    const std::size_t c = coords.size();
    for (std::size_t v = 0; v < c; ++v) {
        adj[u * c + v] = adjacent(coords[u], coords[v], p) ? 1 : 0;
    }
}

void fill_action_row(const FiniteHeckeGroup& group, std::span<const HFCoord> coords, std::int64_t g,
                     ActionTable& action) {
    const std::size_t c = coords.size();
    const ProjMatrix& m = group.element(static_cast<ElementId>(g));
    for (std::size_t u = 0; u < c; ++u) {
        action[g * c + u] = coord_index(coords, apply(m, coords[u], group.params()));
    }
}

std::size_t row_violations(const ActionTable& action, const AdjacencyMatrix& adj, std::size_t c, std::int64_t g) {
    std::size_t bad = 0;
    const std::uint32_t* image = action.data() + g * c;
    for (std::size_t u = 0; u < c; ++u) {
        for (std::size_t v = 0; v < c; ++v) {
            if (adj[u * c + v] != adj[std::size_t{image[u]} * c + image[v]]) {
                ++bad;
            }
        }
    }
    return bad;
}

std::vector<Dart> collect(const std::vector<std::uint8_t>& flags) {
    std::vector<Dart> out;
    for (Dart d = 0; d < flags.size(); ++d) {
        if (flags[d] != 0) {
            out.push_back(d);
        }
    }
    return out;
}

bool code_matches(const MapStructure& map, Dart root, std::span<const std::uint32_t> code) {
    const auto candidate = canonical_form(map, root);
    return std::equal(candidate.begin(), candidate.end(), code.begin(), code.end());
}

// Exceptions must not escape an OpenMP region; keep the first and rethrow
// after the loop.
class FirstError {
public:
    template <typename F>
    void run(F&& body) noexcept {
        try {
            body();
        } catch (...) {
#pragma omp critical(hfmap_first_error)
            if (!error_) {
                error_ = std::current_exception();
            }
        }
    }
    void rethrow() const {
        if (error_) {
            std::rethrow_exception(error_);
        }
    }

private:
    std::exception_ptr error_;
};

} // namespace

namespace serial {

MultTable mult_table(const FiniteHeckeGroup& group) {
    const auto n = static_cast<std::int64_t>(group.order());
    MultTable table(group.order() * group.order());
    for (std::int64_t a = 0; a < n; ++a) {
        fill_mult_row(group, a, table);
    }
    return table;
}

AdjacencyMatrix adjacency_matrix(std::span<const HFCoord> coords, const HeckeParams& p) {
    const auto c = static_cast<std::int64_t>(coords.size());
    AdjacencyMatrix adj(coords.size() * coords.size());
    for (std::int64_t u = 0; u < c; ++u) {
        fill_adjacency_row(coords, p, u, adj);
    }
    return adj;
}

ActionTable action_table(const FiniteHeckeGroup& group, std::span<const HFCoord> coords) {
    const auto n = static_cast<std::int64_t>(group.order());
    ActionTable action(group.order() * coords.size());
    for (std::int64_t g = 0; g < n; ++g) {
        fill_action_row(group, coords, g, action);
    }
    return action;
}

std::size_t equivariance_violations(const ActionTable& action, const AdjacencyMatrix& adj, std::size_t coord_count) {
    const auto rows = static_cast<std::int64_t>(coord_count == 0 ? 0 : action.size() / coord_count);
    std::size_t bad = 0;
    for (std::int64_t g = 0; g < rows; ++g) {
        bad += row_violations(action, adj, coord_count, g);
    }
    return bad;
}

std::vector<Dart> matching_roots(const MapStructure& map, std::span<const std::uint32_t> code) {
    std::vector<std::uint8_t> flags(map.darts(), 0);
    for (Dart r = 0; r < map.darts(); ++r) {
        flags[r] = code_matches(map, r, code) ? 1 : 0;
    }
    return collect(flags);
}

} // namespace serial

namespace omp {

MultTable mult_table(const FiniteHeckeGroup& group) {
    const auto n = static_cast<std::int64_t>(group.order());
    MultTable table(group.order() * group.order());
    FirstError errors;
#pragma omp parallel for schedule(static)
    for (std::int64_t a = 0; a < n; ++a) {
        errors.run([&] { fill_mult_row(group, a, table); });
    }
    errors.rethrow();
    return table;
}

AdjacencyMatrix adjacency_matrix(std::span<const HFCoord> coords, const HeckeParams& p) {
    const auto c = static_cast<std::int64_t>(coords.size());
    AdjacencyMatrix adj(coords.size() * coords.size());
    FirstError errors;
#pragma omp parallel for schedule(static)
    for (std::int64_t u = 0; u < c; ++u) {
        errors.run([&] { fill_adjacency_row(coords, p, u, adj); });
    }
    errors.rethrow();
    return adj;
}

ActionTable action_table(const FiniteHeckeGroup& group, std::span<const HFCoord> coords) {
    const auto n = static_cast<std::int64_t>(group.order());
    ActionTable action(group.order() * coords.size());
    FirstError errors;
#pragma omp parallel for schedule(static)
    for (std::int64_t g = 0; g < n; ++g) {
        errors.run([&] { fill_action_row(group, coords, g, action); });
    }
    errors.rethrow();
    return action;
}

std::size_t equivariance_violations(const ActionTable& action, const AdjacencyMatrix& adj, std::size_t coord_count) {
    const auto rows = static_cast<std::int64_t>(coord_count == 0 ? 0 : action.size() / coord_count);
    std::size_t bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
    for (std::int64_t g = 0; g < rows; ++g) {
        bad += row_violations(action, adj, coord_count, g);
    }
    return bad;
}

std::vector<Dart> matching_roots(const MapStructure& map, std::span<const std::uint32_t> code) {
    const auto n = static_cast<std::int64_t>(map.darts());
    std::vector<std::uint8_t> flags(map.darts(), 0);
    FirstError errors;
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t r = 0; r < n; ++r) {
        errors.run([&] { flags[r] = code_matches(map, static_cast<Dart>(r), code) ? 1 : 0; });
    }
    errors.rethrow();
    return collect(flags);
}

} // namespace omp

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace hfmap::kernels
