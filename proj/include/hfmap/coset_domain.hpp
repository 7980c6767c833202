#pragma once

// Combinatorial fundamental domain for H_q(n) assembled from copies of the
// fundamental region of H_q, one per coset.
//
// The region of H_q has corners infinity, p+, i, p- (p+ fixed by R = TS,
// p- = T^-1 p+) and sides R (infinity..p+), A2 (p+..i), A1 (i..p-) and
// L (p-..infinity). T carries L onto R and S carries A1 onto A2, so copy g
// is glued to copy gT along R and to copy gS along A2.
//
// A BFS spanning tree of these gluings assembles one disc; each remaining
// gluing pairs two boundary sides of that disc by an exact element of H_q
// which must reduce to +-I mod n.

#include "hfmap/exact_ring.hpp"
#include "hfmap/hecke_group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hfmap {

struct CosetDomainReport {
    HeckeParams params;
    std::size_t copies = 0;          // |G|
    std::size_t tree_gluings = 0;    // |G| - 1
    std::size_t boundary_pairs = 0;  // side pairs of the disc, |G| + 1
    std::size_t congruent_pairings = 0; // pairing elements that are +-I mod n
    std::size_t vertices = 0;        // corner classes after all gluings
    std::size_t cusp_vertices = 0;
    std::size_t elliptic2_vertices = 0; // classes of i
    std::size_t elliptic_q_vertices = 0; // classes of p+-
    std::int64_t euler_characteristic = 0;
    std::int64_t genus = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

CosetDomainReport coset_domain_check(const FiniteHeckeGroup& group);

} // namespace hfmap
