#include "hfmap/errors.hpp"
#include "hfmap/fixtures.hpp"
#include "hfmap/polygon_lab.hpp"

#include "doctest.h"

#include <algorithm>
#include <sstream>

using namespace hfmap;

namespace {

const HeckeParams kBring{4, 5};

HFCoord named(const char* name) {
    return bring_names().resolve(name);
}

PairingTable antipodal_pairing() {
    std::vector<std::pair<int, int>> pairs;
    for (int k = 1; k <= 10; ++k) {
        pairs.emplace_back(k, k + 10);
    }
    return PairingTable(pairs);
}

} // namespace

TEST_CASE("the embedded circuit") {
    const Circuit c = bring_circuit();
    REQUIRE(c.seq.size() == 12);
    CHECK(validate_circuit(c, kBring));
    CHECK(format_circuit(c, bring_names()) == "H2, E1, F2, B1, J2, K1, C2, L1, E2, B1, F2, D1, H2");
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(is_pole(c.seq[i]) == (i % 3 == 0));
    }
}

TEST_CASE("circuit parsing") {
    const Circuit c = parse_circuit("H2, E1, F2, B1, J2, K1, C2, L1, E2, B1, F2, D1, H2", bring_names());
    CHECK(c.seq == bring_circuit().seq);
    const Circuit raw = parse_circuit("B:2/0,A:2/1", bring_names());
    CHECK(raw.seq == std::vector<HFCoord>{named("H2"), named("E1")});
    CHECK_THROWS_AS(parse_circuit("H2, Q7", bring_names()), InvalidArgument);
}

TEST_CASE("tampered circuits fail validation") {
    Circuit c = bring_circuit();
    std::swap(c.seq[1], c.seq[2]);
    CHECK_FALSE(validate_circuit(c, kBring));
    Circuit d = bring_circuit();
    d.seq.pop_back(); // D1 -> H2 closure lost; F2 -> H2 is not an edge
    CHECK_FALSE(validate_circuit(d, kBring));
}

TEST_CASE("exhaustive circuit search: frozen counts") {
    const auto twelve = search_circuits(named("H2"), 12, {0, 3, 6, 9}, kBring);
    CHECK(twelve.size() == 80000);
    CHECK(std::any_of(twelve.begin(), twelve.end(), [](const Circuit& c) { return c.seq == bring_circuit().seq; }));
    for (std::size_t i = 0; i < twelve.size(); i += 997) {
        CHECK(validate_circuit(twelve[i], kBring));
    }
    CHECK(search_circuits(named("H2"), 4, {0}, kBring).size() == 40);
    CHECK(search_circuits(named("H2"), 3, {0}, kBring).empty());
}

TEST_CASE("circuit search limits") {
    CHECK_THROWS_AS(search_circuits(named("H2"), kMaxCircuitSearchLength + 1, {0}, kBring), ResourceLimit);
}

TEST_CASE("boundary from the circuit") {
    const auto b = boundary_from_circuit(bring_circuit(), kBring);
    REQUIRE(b.slots.size() == 60);
    CHECK(b.sides() == 20);
    CHECK(b.slots[12] == named("H2"));
    CHECK(b.slots[13] == named("G1"));
    CHECK(b.slots[14] == named("E2"));
    const std::map<HFCoord, std::size_t> poles{{named("H2"), 5}, {named("C2"), 5}, {named("B1"), 10}};
    CHECK(pole_multiset(b) == poles);
    for (std::size_t k = 0; k < 20; ++k) {
        CHECK(b.pole_slots[k] == 3 * k);
        CHECK(b.span_interior(k).size() == 2);
    }
}

TEST_CASE("boundary construction rejects bad circuits") {
    Circuit c = bring_circuit();
    std::rotate(c.seq.begin(), c.seq.begin() + 1, c.seq.end());
    CHECK_THROWS_AS(boundary_from_circuit(c, kBring), VerificationError);
    Circuit d = bring_circuit();
    std::swap(d.seq[1], d.seq[2]);
    CHECK_THROWS_AS(boundary_from_circuit(d, kBring), VerificationError);
}

TEST_CASE("translation orbits") {
    CHECK(translation_orbit(named("H2"), kBring) == std::vector<HFCoord>{named("H2")});
    CHECK(translation_orbit(named("F2"), kBring) ==
          std::vector<HFCoord>{named("F2"), named("E2"), named("K2"), named("B2"), named("J2")});
    CHECK(translation_orbit(named("K1"), kBring) ==
          std::vector<HFCoord>{named("K1"), named("I1"), named("H1"), named("L1"), named("J1")});
    CHECK(translation_orbit(named("E1"), kBring).at(1) == named("G1"));
}

TEST_CASE("pairing tables: parse, format, validation") {
    const PairingTable t = bring_pairing();
    CHECK(t.sides() == 20);
    CHECK(t.partner(2) == 5);
    CHECK(t.partner(5) == 2);
    CHECK(t.partner(1) == 18);
    CHECK(t.contains(19, 8));
    CHECK(parse_pairing(format_pairing(t)) == t);
    CHECK(parse_pairing("# comment\n\n1 2  # first\n3 4\n") == PairingTable({{1, 2}, {3, 4}}));
    std::istringstream in("2 1\n");
    CHECK(parse_pairing(in).partner(1) == 2);
    CHECK_THROWS_AS(PairingTable({{1, 2}, {2, 3}}), InvalidArgument);
    CHECK_THROWS_AS(PairingTable({{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(PairingTable({{1, 5}, {2, 3}}), InvalidArgument);
    CHECK_THROWS_AS(parse_pairing("1 x\n"), InvalidArgument);
    CHECK_THROWS_AS(parse_pairing("1 2 3\n"), InvalidArgument);
}

TEST_CASE("the side rule") {
    CHECK(pairing_rule_check(bring_pairing()));
    auto pairs = bring_pairing().pairs();
    for (auto& [a, b] : pairs) {
        if (a == 2) {
            b = 9;
        } else if (a == 6) {
            b = 5;
        }
    }
    CHECK_FALSE(pairing_rule_check(PairingTable(pairs)));
    CHECK_FALSE(pairing_rule_check(antipodal_pairing()));
    CHECK_FALSE(pairing_rule_check(PairingTable()));
    const auto matchings = rule_matchings(20);
    REQUIRE(matchings.size() == 1);
    CHECK(matchings.front() == bring_pairing());
}

TEST_CASE("vertex classes of the glued 20-gon") {
    const auto part = vertex_classes(bring_pairing());
    const std::vector<std::vector<int>> expected{
        {1, 3, 5, 7, 9, 11, 13, 15, 17, 19}, {2, 6, 10, 14, 18}, {4, 8, 12, 16, 20}};
    CHECK(part.classes == expected);
    CHECK(part.vertices == 3);
    CHECK(part.edges == 10);
    CHECK(part.faces == 1);
    CHECK(part.euler_characteristic == -6);
    CHECK(part.genus == 4);
}

TEST_CASE("antipodal gluing gives a single vertex and genus 5") {
    const auto part = vertex_classes(antipodal_pairing());
    CHECK(part.vertices == 1);
    CHECK(part.genus == 5);
}

TEST_CASE("side label analysis") {
    const auto b = boundary_from_circuit(bring_circuit(), kBring);
    const auto labels = bring_side_labels();
    REQUIRE(labels.size() == 20);
    CHECK(labels.front() == named("K2"));
    const auto r = side_label_analysis(b, labels);
    CHECK(r.spans.size() == 20);
    CHECK(r.every_label_twice);
    CHECK(r.labels_are_orbit_union);
    CHECK(r.translation_equivariant);
    CHECK(r.label_orbits.size() == 2);
    for (const auto& [u, k] : r.label_multiplicity) {
        CHECK(k == 2);
    }
    // Exactly one placement of the labels puts each one inside its span.
    REQUIRE(r.alignments.size() == 1);
    CHECK(r.alignments[0].offset == 11);
    CHECK_FALSE(r.alignments[0].reversed);
    // Across all 20 spans the first orbit occurs four times per label and the
    // second twice.
    for (const char* name : {"F2", "E2", "K2", "B2", "J2"}) {
        CHECK(r.interior_occurrences.at(named(name)) == 4);
    }
    for (const char* name : {"K1", "I1", "H1", "L1", "J1"}) {
        CHECK(r.interior_occurrences.at(named(name)) == 2);
    }
}

TEST_CASE("equal side labels reproduce the pairing") {
    CHECK(pairing_from_side_labels(bring_side_labels()) == bring_pairing());
    auto labels = bring_side_labels();
    labels[0] = named("A1");
    CHECK_THROWS_AS(pairing_from_side_labels(labels), VerificationError);
}

TEST_CASE("corner labels are constant on corner classes") {
    const auto b = boundary_from_circuit(bring_circuit(), kBring);
    const auto r = side_label_analysis(b, bring_side_labels());
    REQUIRE(r.alignments.size() == 1);
    const auto corners = corner_labels(b, r.alignments[0]);
    REQUIRE(corners.size() == 20);
    CHECK(corners[0] == named("B1"));
    CHECK(corners[1] == named("H2"));
    CHECK(corners[3] == named("C2"));
    CHECK(std::count(corners.begin(), corners.end(), named("H2")) == 5);
    CHECK(std::count(corners.begin(), corners.end(), named("B1")) == 10);
    CHECK(corner_labels_consistent(vertex_classes(bring_pairing()), corners));
    CHECK_FALSE(corner_labels_consistent(vertex_classes(antipodal_pairing()), corners));
}

TEST_CASE("fixture tables are self-consistent") {
    CHECK(fixtures::kSidePairings.size() == 10);
    for (auto [a, b] : fixtures::kSidePairings) {
        CHECK(fixtures::kSideLabels[a - 1] == fixtures::kSideLabels[b - 1]);
    }
}
