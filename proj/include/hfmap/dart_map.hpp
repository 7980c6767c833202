#pragma once

// Oriented maps as dart systems: a vertex rotation sigma and an edge
// involution alpha on a finite dart set. Faces are the cycles of
// phi = alpha o sigma (sigma applied first).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hfmap {

using Dart = std::uint32_t;
using DartPerm = std::vector<Dart>;

struct MapStructure {
    DartPerm sigma;
    DartPerm alpha;
    DartPerm phi;

    std::size_t darts() const { return sigma.size(); }
};

// Fills phi from sigma and alpha after validating both are permutations of
// the same size and alpha is a fixed-point-free involution. Throws
// VerificationError otherwise.
MapStructure make_map(DartPerm sigma, DartPerm alpha);

struct MapInvariants {
    std::size_t darts = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    std::int64_t euler_characteristic = 0;
    std::int64_t genus = 0;
    // Common cycle length, or nullopt when cycle lengths differ.
    std::optional<std::size_t> vertex_valency;
    std::optional<std::size_t> face_size;
};

std::vector<std::vector<Dart>> cycles(std::span<const Dart> perm);
std::size_t count_cycles(std::span<const Dart> perm);

// <sigma, alpha> acts transitively on darts.
bool is_connected(const MapStructure& map);

MapInvariants compute_invariants(const MapStructure& map);

// Rooted canonical code: darts are relabelled in BFS order from root, trying
// sigma before alpha; the code lists (label(sigma d), label(alpha d)) for each
// dart in label order. Two connected maps are isomorphic iff some root of
// one yields the code of a fixed root of the other.
std::vector<std::uint32_t> canonical_form(const MapStructure& map, Dart root);

} // namespace hfmap
