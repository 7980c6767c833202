#pragma once

// Reference data for Bring's map M_4(5), the cube M_4(3) and the icosahedron
// M_3(5), embedded so that every check runs without external files.

#include <array>
#include <string_view>
#include <utility>
#include <vector>

namespace hfmap::fixtures {

struct NamedFraction {
    std::string_view name;
    char kind; // 'A' or 'B'
    int num;
    int den;
};

// Named coordinates of M_4(5), one row per vertex.
extern const std::array<NamedFraction, 24> kBringTable;

// The eight Hecke-Farey fractions modulo 3.
extern const std::array<NamedFraction, 8> kCubeFractions;

// The twelve Farey fractions modulo 5 (a/c pairs).
extern const std::array<std::pair<int, int>, 12> kIcosahedronFractions;

// Poles of M_4(5).
extern const std::array<std::string_view, 4> kBringPoles;

// The 12-vertex Farey circuit through H2 (closing vertex omitted).
extern const std::array<std::string_view, 12> kBringCircuit;

// Label carried by each of the 20 polygon sides, sides 1..20.
extern const std::array<std::string_view, 20> kSideLabels;

// Side pairings of the 20-gon, 1-based.
extern const std::array<std::pair<int, int>, 10> kSidePairings;

} // namespace hfmap::fixtures
