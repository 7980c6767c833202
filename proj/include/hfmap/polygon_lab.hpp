#pragma once

// Farey circuits, the boundary of the fundamental polygon they generate under
// translation, side pairings and the vertex classes of the glued surface.

#include "hfmap/farey_coords.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfmap {

// A closed walk; the closing vertex (equal to the first) is not stored.
struct Circuit {
    std::vector<HFCoord> seq;
};

// Comma-separated labels resolved through the name table, or raw
// "kind:num/den" coordinates. A trailing repeat of the first vertex is dropped.
Circuit parse_circuit(std::string_view text, const NameTable& names);
std::string format_circuit(const Circuit& c, const NameTable& names);

// The 12-vertex circuit through H2, poles at positions 0, 3, 6, 9.
Circuit bring_circuit();

// Every consecutive pair, including last -> first, is adjacent. Vertices and
// edges may repeat.
bool validate_circuit(const Circuit& c, const HeckeParams& p);

inline constexpr std::size_t kMaxCircuitSearchLength = 16;

// All closed walks of the given length from start whose pole positions are
// exactly pole_positions, in lexicographic order of coordinate indices.
// Throws ResourceLimit when length exceeds kMaxCircuitSearchLength.
std::vector<Circuit> search_circuits(const HFCoord& start, std::size_t length,
                                     const std::set<std::size_t>& pole_positions, const HeckeParams& p);

struct BoundarySequence {
    HeckeParams params;
    std::vector<HFCoord> slots;
    std::vector<std::size_t> pole_slots;

    std::size_t sides() const { return pole_slots.size(); }
    // Interior slots of side span s, between pole slots s and s+1.
    std::vector<HFCoord> span_interior(std::size_t s) const;
};

// Concatenates T^k(c) for k = 0..n-1. The circuit must have a pole exactly at
// every third position starting at 0. Throws VerificationError on a seam or
// pole violation.
BoundarySequence boundary_from_circuit(const Circuit& c, const HeckeParams& p);

std::map<HFCoord, std::size_t> pole_multiset(const BoundarySequence& b);

// Orbit of u under repeated translation by lambda, starting at u.
std::vector<HFCoord> translation_orbit(const HFCoord& u, const HeckeParams& p);

class PairingTable {
public:
    PairingTable() = default;
    // Throws InvalidArgument unless pairs form a perfect matching on
    // {1..2*pairs.size()}.
    explicit PairingTable(std::vector<std::pair<int, int>> pairs);

    std::size_t sides() const { return partner_.size(); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int partner(int side) const { return partner_.at(static_cast<std::size_t>(side - 1)); }
    bool contains(int a, int b) const { return partner(a) == b; }

    friend bool operator==(const PairingTable& x, const PairingTable& y) { return x.partner_ == y.partner_; }

private:
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> partner_;
};

// Lines "i j" (1-based), '#' starts a comment, blank lines ignored.
PairingTable parse_pairing(std::istream& in);
PairingTable parse_pairing(std::string_view text);
std::string format_pairing(const PairingTable& t);

PairingTable bring_pairing();

// Side k = 2 (mod 4) pairs with k+3 and side k = 3 (mod 4) with k+9, indices
// taken cyclically in 1..sides.
bool pairing_rule_check(const PairingTable& t);

// Every perfect matching on sides 1..sides that satisfies the rule above.
std::vector<PairingTable> rule_matchings(std::size_t sides);

// Pairs the sides carrying equal labels; throws VerificationError unless
// every label occurs exactly twice.
PairingTable pairing_from_side_labels(std::span<const HFCoord> labels);

struct CornerPartition {
    // 1-based corner indices; each class sorted, classes ordered by minimum.
    std::vector<std::vector<int>> classes;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 1;
    std::int64_t euler_characteristic = 0;
    std::int64_t genus = 0;
};

// Pairing (i, j) glues side i to side j reversed: a_i = a_{j+1} and
// a_{i+1} = a_j, indices cyclic with a_{sides+1} = a_1.
CornerPartition vertex_classes(const PairingTable& t);

struct SideAlignment {
    std::size_t offset = 0; // side k sits on span (offset +- (k-1)) mod sides
    bool reversed = false;
};

struct SideLabelReport {
    std::vector<std::pair<HFCoord, HFCoord>> spans;
    // Translation orbits covering the distinct side labels, each starting at
    // the label's first appearance.
    std::vector<std::vector<HFCoord>> label_orbits;
    std::map<HFCoord, std::size_t> label_multiplicity;
    bool every_label_twice = false;
    bool labels_are_orbit_union = false;
    // label of side k + sides/n equals the translate of label of side k.
    bool translation_equivariant = false;
    // Alignments under which every side label lies in its span's interior.
    std::vector<SideAlignment> alignments;
    // How often each side label occurs among all span interiors.
    std::map<HFCoord, std::size_t> interior_occurrences;
};

SideLabelReport side_label_analysis(const BoundarySequence& b, std::span<const HFCoord> side_labels);

// The side labels shipped with the library, resolved through bring_names().
std::vector<HFCoord> bring_side_labels();

// Pole label at each corner a_1..a_sides under an alignment.
std::vector<HFCoord> corner_labels(const BoundarySequence& b, const SideAlignment& alignment);

// Each corner class carries a single pole label.
bool corner_labels_consistent(const CornerPartition& partition, std::span<const HFCoord> labels);

} // namespace hfmap
