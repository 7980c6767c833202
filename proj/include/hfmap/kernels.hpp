#pragma once

// Data-parallel kernels behind the exhaustive checks. Each kernel has a serial
// reference in kernels::serial and an OpenMP version in kernels::omp with the
// same signature; both produce identical output. The library entry points use
// the OpenMP versions.

#include "hfmap/dart_map.hpp"
#include "hfmap/farey_coords.hpp"
#include "hfmap/hecke_group.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hfmap::kernels {

// Row-major |G| x |G| table, entry a*|G| + b is the index of a*b.
using MultTable = std::vector<ElementId>;
// Row-major |C| x |C| 0/1 adjacency matrix over a coordinate list.
using AdjacencyMatrix = std::vector<std::uint8_t>;
// Row-major |G| x |C| table, entry g*|C| + u is the index of g(coords[u]).
using ActionTable = std::vector<std::uint32_t>;

namespace serial {

MultTable mult_table(const FiniteHeckeGroup& group);
AdjacencyMatrix adjacency_matrix(std::span<const HFCoord> coords, const HeckeParams& p);
// coords must be sorted (as returned by enumerate_coords).
ActionTable action_table(const FiniteHeckeGroup& group, std::span<const HFCoord> coords);
std::size_t equivariance_violations(const ActionTable& action, const AdjacencyMatrix& adj, std::size_t coord_count);
// Roots r of map with canonical_form(map, r) == code, ascending.
std::vector<Dart> matching_roots(const MapStructure& map, std::span<const std::uint32_t> code);

} // namespace serial

namespace omp {

MultTable mult_table(const FiniteHeckeGroup& group);
AdjacencyMatrix adjacency_matrix(std::span<const HFCoord> coords, const HeckeParams& p);
ActionTable action_table(const FiniteHeckeGroup& group, std::span<const HFCoord> coords);
std::size_t equivariance_violations(const ActionTable& action, const AdjacencyMatrix& adj, std::size_t coord_count);
std::vector<Dart> matching_roots(const MapStructure& map, std::span<const std::uint32_t> code);

} // namespace omp

// Number of threads the OpenMP kernels will use (1 without OpenMP).
int max_threads();

} // namespace hfmap::kernels
