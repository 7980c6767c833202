#include "hfmap/fixtures.hpp"

namespace hfmap::fixtures {

const std::array<NamedFraction, 24> kBringTable = {{
    {"A1", 'A', 1, 0}, {"B1", 'A', 2, 0}, {"C1", 'A', 0, 1}, {"D1", 'A', 1, 1},
    {"E1", 'A', 2, 1}, {"F1", 'A', 3, 1}, {"G1", 'A', 4, 1}, {"H1", 'A', 0, 2},
    {"I1", 'A', 1, 2}, {"J1", 'A', 3, 2}, {"K1", 'A', 2, 2}, {"L1", 'A', 4, 2},
    {"A2", 'B', 0, 1}, {"B2", 'B', 0, 2}, {"C2", 'B', 1, 0}, {"D2", 'B', 1, 1},
    {"E2", 'B', 1, 2}, {"F2", 'B', 1, 3}, {"G2", 'B', 1, 4}, {"H2", 'B', 2, 0},
    {"I2", 'B', 2, 1}, {"J2", 'B', 2, 2}, {"K2", 'B', 2, 3}, {"L2", 'B', 2, 4},
}};

const std::array<NamedFraction, 8> kCubeFractions = {{
    {"1/(0√2)", 'A', 1, 0}, {"0/(1√2)", 'A', 0, 1}, {"1/(1√2)", 'A', 1, 1}, {"1/(2√2)", 'A', 1, 2},
    {"0√2/1", 'B', 0, 1}, {"2√2/1", 'B', 2, 1}, {"1√2/0", 'B', 1, 0}, {"1√2/1", 'B', 1, 1},
}};

const std::array<std::pair<int, int>, 12> kIcosahedronFractions = {{
    {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2},
}};

const std::array<std::string_view, 4> kBringPoles = {"A1", "B1", "C2", "H2"};

const std::array<std::string_view, 12> kBringCircuit = {
    "H2", "E1", "F2", "B1", "J2", "K1", "C2", "L1", "E2", "B1", "F2", "D1",
};

const std::array<std::string_view, 20> kSideLabels = {
    "K2", "B2", "L1", "I1", "B2", "J2", "J1", "H1", "J2", "F2",
    "K1", "L1", "F2", "E2", "I1", "J1", "E2", "K2", "H1", "K1",
};

const std::array<std::pair<int, int>, 10> kSidePairings = {{
    {2, 5}, {6, 9}, {10, 13}, {14, 17}, {18, 1}, {3, 12}, {7, 16}, {11, 20}, {15, 4}, {19, 8},
}};

} // namespace hfmap::fixtures
