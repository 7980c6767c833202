#include "hfmap/map_assembler.hpp"

#include "hfmap/errors.hpp"
#include "hfmap/kernels.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace hfmap {

MapStructure build_algebraic_map(const FiniteHeckeGroup& group) {
    DartPerm sigma(group.order());
    DartPerm alpha(group.order());
    for (ElementId g = 0; g < group.order(); ++g) {
        sigma[g] = group.times_T(g);
        alpha[g] = group.times_S(g);
    }
    return make_map(std::move(sigma), std::move(alpha));
}

MapStructure permutation_model_map(const S5Oracle& oracle) {
    const auto& elements = oracle.group.elements();
    DartPerm sigma(elements.size());
    DartPerm alpha(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
        sigma[i] = static_cast<Dart>(oracle.group.index_of(elements[i] * oracle.y));
        alpha[i] = static_cast<Dart>(oracle.group.index_of(elements[i] * oracle.x));
    }
    return make_map(std::move(sigma), std::move(alpha));
}

MapStructure permutation_model_map() {
    return permutation_model_map(s5_oracle());
}

std::size_t CoordGraph::index_of(const HFCoord& u) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
    if (it == vertices.end() || *it != u) {
        throw InvalidArgument("coordinate " + to_string(u) + " is not a vertex of the graph");
    }
    return static_cast<std::size_t>(it - vertices.begin());
}

CoordGraph build_coordinate_graph(const HeckeParams& p) {
    CoordGraph graph;
    graph.params = p;
    graph.vertices = enumerate_coords(p);
    const std::size_t c = graph.vertices.size();
    const auto adj = kernels::omp::adjacency_matrix(graph.vertices, p);
    graph.neighbours.resize(c);
    for (std::uint32_t u = 0; u < c; ++u) {
        for (std::uint32_t v = 0; v < c; ++v) {
            if (adj[u * c + v] != 0) {
                graph.neighbours[u].push_back(v);
                if (u < v) {
                    graph.edges.emplace_back(u, v);
                }
            }
        }
    }
    return graph;
}

bool is_bipartite(const CoordGraph& g) {
    std::vector<int> side(g.vertices.size(), -1);
    for (std::uint32_t s = 0; s < g.vertices.size(); ++s) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        std::deque<std::uint32_t> queue{s};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto v : g.neighbours[u]) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::size_t girth(const CoordGraph& g) {
    constexpr auto kInf = std::numeric_limits<std::size_t>::max();
    std::size_t best = kInf;
    const std::size_t n = g.vertices.size();
    for (std::uint32_t s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, kInf);
        std::vector<std::uint32_t> parent(n, std::numeric_limits<std::uint32_t>::max());
        dist[s] = 0;
        std::deque<std::uint32_t> queue{s};
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop_front();
            for (auto v : g.neighbours[u]) {
                if (dist[v] == kInf) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (parent[u] != v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best == kInf ? 0 : best;
}

std::vector<std::size_t> degrees(const CoordGraph& g) {
    std::vector<std::size_t> out;
    out.reserve(g.neighbours.size());
    for (const auto& nb : g.neighbours) {
        out.push_back(nb.size());
    }
    return out;
}

namespace {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::vector<std::vector<bool>> adjacency_of(std::size_t order, const EdgeList& edges) {
    std::vector<std::vector<bool>> adj(order, std::vector<bool>(order, false));
    for (auto [u, v] : edges) {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    return adj;
}

bool extend(std::size_t next, std::vector<std::int64_t>& image, std::vector<bool>& used,
            const std::vector<std::vector<bool>>& a, const std::vector<std::vector<bool>>& b) {
    const std::size_t n = a.size();
    if (next == n) {
        return true;
    }
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand]) {
            continue;
        }
        bool consistent = true;
        for (std::size_t prev = 0; prev < next && consistent; ++prev) {
            consistent = a[next][prev] == b[cand][static_cast<std::size_t>(image[prev])];
        }
        if (!consistent) {
            continue;
        }
        image[next] = static_cast<std::int64_t>(cand);
        used[cand] = true;
        if (extend(next + 1, image, used, a, b)) {
            return true;
        }
        used[cand] = false;
    }
    return false;
}

} // namespace

bool graphs_isomorphic(std::size_t order, const EdgeList& a, const EdgeList& b) {
    if (a.size() != b.size()) {
        return false;
    }
    const auto adj_a = adjacency_of(order, a);
    const auto adj_b = adjacency_of(order, b);
    std::vector<std::size_t> deg_a(order, 0);
    std::vector<std::size_t> deg_b(order, 0);
    for (std::size_t i = 0; i < order; ++i) {
        deg_a[i] = static_cast<std::size_t>(std::count(adj_a[i].begin(), adj_a[i].end(), true));
        deg_b[i] = static_cast<std::size_t>(std::count(adj_b[i].begin(), adj_b[i].end(), true));
    }
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) {
        return false;
    }
    std::vector<std::int64_t> image(order, -1);
    std::vector<bool> used(order, false);
    return extend(0, image, used, adj_a, adj_b);
}

EdgeList cube_graph_edges() {
    EdgeList edges;
    for (std::uint32_t u = 0; u < 8; ++u) {
        for (std::uint32_t bit = 1; bit < 8; bit <<= 1) {
            const std::uint32_t v = u ^ bit;
            if (u < v) {
                edges.emplace_back(u, v);
            }
        }
    }
    return edges;
}

CorrespondenceReport correspondence_check(const FiniteHeckeGroup& group, const MapStructure& map,
                                          const CoordGraph& graph) {
    CorrespondenceReport report;
    const HeckeParams& p = group.params();
    report.coordinates = graph.vertices.size();
    report.graph_edges = graph.edges.size();
    if (map.darts() != group.order()) {
        report.violations.push_back("map and group sizes differ");
        return report;
    }

    std::vector<HFCoord> cusp(group.order());
    for (ElementId g = 0; g < group.order(); ++g) {
        cusp[g] = cusp_of(group.element(g), p);
    }

    std::map<HFCoord, std::size_t> orbit_of_coord;
    const auto vertex_cycles = cycles(map.sigma);
    report.vertex_orbits = vertex_cycles.size();
    for (std::size_t i = 0; i < vertex_cycles.size(); ++i) {
        const HFCoord first = cusp[vertex_cycles[i].front()];
        for (Dart d : vertex_cycles[i]) {
            if (cusp[d] != first) {
                report.violations.push_back("sigma-orbit " + std::to_string(i) + " has two cusps " +
                                            to_string(first) + " and " + to_string(cusp[d]));
                break;
            }
        }
        if (!orbit_of_coord.emplace(first, i).second) {
            report.violations.push_back("cusp " + to_string(first) + " is hit by two sigma-orbits");
        }
    }
    for (const HFCoord& u : graph.vertices) {
        if (!orbit_of_coord.contains(u)) {
            report.violations.push_back("coordinate " + to_string(u) + " is not the cusp of any sigma-orbit");
        }
    }
    if (orbit_of_coord.size() != graph.vertices.size()) {
        report.violations.push_back("cusp images and coordinates differ in number");
    }

    std::set<std::pair<std::uint32_t, std::uint32_t>> projected;
    const auto edge_cycles = cycles(map.alpha);
    report.edge_orbits = edge_cycles.size();
    for (const auto& edge : edge_cycles) {
        const HFCoord u = cusp[edge[0]];
        const HFCoord v = cusp[edge[1]];
        if (!adjacent(u, v, p)) {
            report.violations.push_back("edge orbit projects to non-adjacent " + to_string(u) + " -- " +
                                        to_string(v));
            continue;
        }
        auto a = static_cast<std::uint32_t>(graph.index_of(u));
        auto b = static_cast<std::uint32_t>(graph.index_of(v));
        if (a > b) {
            std::swap(a, b);
        }
        if (!projected.emplace(a, b).second) {
            report.violations.push_back("two edge orbits project to " + to_string(u) + " -- " + to_string(v));
        }
    }
    for (const auto& e : graph.edges) {
        if (projected.contains(e)) {
            ++report.matched_edges;
        } else {
            report.violations.push_back("graph edge " + to_string(graph.vertices[e.first]) + " -- " +
                                        to_string(graph.vertices[e.second]) + " has no edge orbit");
        }
    }
    report.ok = report.violations.empty();
    return report;
}

bool is_isomorphic(const MapStructure& a, const MapStructure& b) {
    if (a.darts() != b.darts()) {
        return false;
    }
    if (a.darts() == 0) {
        return true;
    }
    return !kernels::omp::matching_roots(a, canonical_form(b, 0)).empty();
}

std::size_t automorphism_count(const MapStructure& map) {
    if (map.darts() == 0) {
        return 0;
    }
    return kernels::omp::matching_roots(map, canonical_form(map, 0)).size();
}

MapReport map_report(const FiniteHeckeGroup& group, const MapStructure& map) {
    return {group.params(), group.order(), compute_invariants(map)};
}

nlohmann::ordered_json to_json(const MapReport& report) {
    nlohmann::ordered_json j;
    j["q"] = report.params.q;
    j["n"] = report.params.n;
    j["darts"] = report.invariants.darts;
    j["vertices"] = report.invariants.vertices;
    j["edges"] = report.invariants.edges;
    j["faces"] = report.invariants.faces;
    j["genus"] = report.invariants.genus;
    j["group_order"] = report.group_order;
    return j;
}

} // namespace hfmap
