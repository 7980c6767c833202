#pragma once

// Regular maps built two ways: as dart systems from a finite group, and as
// graphs on Hecke-Farey coordinates. The cusp map g -> g(infinity) bridges the
// two.

#include "hfmap/dart_map.hpp"
#include "hfmap/farey_coords.hpp"
#include "hfmap/hecke_group.hpp"
#include "hfmap/perm_group.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hfmap {

// Darts are group elements; sigma(g) = g*T, alpha(g) = g*S, so phi(g) = g*R.
MapStructure build_algebraic_map(const FiniteHeckeGroup& group);

// Darts are the elements of <x, y> in S_5; sigma(g) = g*y, alpha(g) = g*x.
MapStructure permutation_model_map(const S5Oracle& oracle);
MapStructure permutation_model_map();

struct CoordGraph {
    HeckeParams params;
    std::vector<HFCoord> vertices; // sorted
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // i < j, sorted
    std::vector<std::vector<std::uint32_t>> neighbours;

    std::size_t index_of(const HFCoord& u) const;
};

// Rejects even n.
CoordGraph build_coordinate_graph(const HeckeParams& p);

// Plain undirected graph helpers used on coordinate graphs.
bool is_bipartite(const CoordGraph& g);
// Length of a shortest cycle, 0 for a forest.
std::size_t girth(const CoordGraph& g);
std::vector<std::size_t> degrees(const CoordGraph& g);
// Backtracking isomorphism test for small graphs given as edge lists on
// vertices 0..order-1.
bool graphs_isomorphic(std::size_t order, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& a,
                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& b);
// Edge list of the 3-cube on vertices 0..7.
std::vector<std::pair<std::uint32_t, std::uint32_t>> cube_graph_edges();

struct CorrespondenceReport {
    bool ok = false;
    std::size_t vertex_orbits = 0;
    std::size_t coordinates = 0;
    std::size_t edge_orbits = 0;
    std::size_t graph_edges = 0;
    std::size_t matched_edges = 0;
    std::vector<std::string> violations;
};

// Checks that cusp_of is constant on sigma-orbits and induces a bijection onto
// the coordinates, and that alpha-orbits project exactly onto the adjacency
// edges. map must be build_algebraic_map(group).
CorrespondenceReport correspondence_check(const FiniteHeckeGroup& group, const MapStructure& map,
                                          const CoordGraph& graph);

// Canonical code over all roots of a compared against root 0 of b.
bool is_isomorphic(const MapStructure& a, const MapStructure& b);
// Number of roots whose code equals that of root 0, i.e. |Aut(map)|.
std::size_t automorphism_count(const MapStructure& map);

struct MapReport {
    HeckeParams params;
    std::size_t group_order = 0;
    MapInvariants invariants;
};

MapReport map_report(const FiniteHeckeGroup& group, const MapStructure& map);

// {"q","n","darts","vertices","edges","faces","genus","group_order"} in that order.
nlohmann::ordered_json to_json(const MapReport& report);

} // namespace hfmap
