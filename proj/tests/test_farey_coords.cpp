#include "hfmap/errors.hpp"
#include "hfmap/farey_coords.hpp"
#include "hfmap/fixtures.hpp"

#include "doctest.h"

#include <map>
#include <set>

using namespace hfmap;

namespace {

HFCoord named(const char* name) {
    return bring_names().resolve(name);
}

} // namespace

TEST_CASE("normalize: sign-canonical representatives") {
    const HeckeParams p45{4, 5};
    CHECK(normalize(Kind::B, 4, 2, p45) == HFCoord{Kind::B, 1, 3});
    CHECK(normalize(Kind::B, 4, 2, p45) == named("F2"));
    CHECK(normalize(Kind::A, 1, 0, p45) == named("A1"));
    CHECK(normalize(Kind::A, -4, 5, p45) == HFCoord{Kind::A, 1, 0});
    // (1,2) and (2,1) are negatives mod 3; the lexicographic minimum is (1,2).
    const HeckeParams p43{4, 3};
    CHECK(normalize(Kind::B, 1, 2, p43) == HFCoord{Kind::B, 1, 2});
    CHECK(normalize(Kind::B, 2, 1, p43) == HFCoord{Kind::B, 1, 2});
    CHECK(cube_names().resolve("2√2/1") == HFCoord{Kind::B, 1, 2});
}

TEST_CASE("normalize rejects non-primitive pairs and kind B for q = 3") {
    CHECK_THROWS_AS(normalize(Kind::A, 0, 0, {4, 5}), InvalidArgument);
    CHECK_THROWS_AS(normalize(Kind::A, 3, 6, {4, 9}), InvalidArgument);
    CHECK_NOTHROW(normalize(Kind::A, 3, 2, {4, 9}));
    CHECK_THROWS_AS(normalize(Kind::B, 1, 0, {3, 5}), InvalidArgument);
}

TEST_CASE("coordinate counts equal |G|/n") {
    const std::map<std::pair<int, std::uint32_t>, std::size_t> expected{
        {{4, 5}, 24}, {{4, 3}, 8}, {{3, 5}, 12}, {{4, 7}, 48}, {{6, 5}, 24}, {{3, 7}, 24}, {{4, 9}, 72}};
    for (const auto& [qn, count] : expected) {
        const HeckeParams p{qn.first, qn.second};
        const auto coords = enumerate_coords(p);
        CHECK(coords.size() == count);
        CHECK(std::set<HFCoord>(coords.begin(), coords.end()).size() == count);
        CHECK(std::is_sorted(coords.begin(), coords.end()));
        CHECK(enumerate_group(p).order() == count * p.n);
    }
}

TEST_CASE("even n is rejected") {
    CHECK_THROWS_AS(enumerate_coords({4, 4}), InvalidArgument);
    CHECK_THROWS_AS(enumerate_coords({4, 6}), InvalidArgument);
}

TEST_CASE("text round trip") {
    const HeckeParams p{4, 5};
    for (const HFCoord& u : enumerate_coords(p)) {
        CHECK(parse_coord(to_string(u), p) == u);
    }
    CHECK(to_string(named("A1")) == "A:1/0");
    CHECK(parse_coord("B:4/2", p) == named("F2"));
    CHECK_THROWS_AS(parse_coord("C:1/2", p), InvalidArgument);
    CHECK_THROWS_AS(parse_coord("A:1", p), InvalidArgument);
}

TEST_CASE("the Bring name table is a bijection onto the coordinates") {
    const auto& t = bring_names();
    CHECK(t.size() == 24);
    std::set<HFCoord> coords;
    std::set<std::string> names;
    for (const auto& e : t.entries()) {
        coords.insert(e.coord);
        names.insert(e.name);
        CHECK(t.name_of(e.coord) == e.name);
        CHECK(t.find(e.name) == e.coord);
    }
    const auto all = enumerate_coords({4, 5});
    CHECK(coords == std::set<HFCoord>(all.begin(), all.end()));
    CHECK(names.size() == 24);
    CHECK_FALSE(t.find("Z9").has_value());
    CHECK_THROWS_AS(t.resolve("Z9"), InvalidArgument);
    CHECK(t.resolve("A:2/1") == named("E1"));
}

TEST_CASE("the cube fractions are the eight coordinates mod 3") {
    const auto& t = cube_names();
    CHECK(t.size() == 8);
    std::set<HFCoord> coords;
    for (const auto& e : t.entries()) {
        coords.insert(e.coord);
    }
    const auto all = enumerate_coords({4, 3});
    CHECK(coords == std::set<HFCoord>(all.begin(), all.end()));
}

TEST_CASE("adjacency examples") {
    const HeckeParams p{4, 5};
    CHECK(adjacent(named("H2"), named("E1"), p));
    CHECK(adjacent(named("A1"), named("A2"), p));
    CHECK(named("A2") == HFCoord{Kind::B, 0, 1});
    for (const HFCoord& u : enumerate_coords(p)) {
        CHECK_FALSE(adjacent(u, u, p));
    }
}

TEST_CASE("adjacency is symmetric and each vertex has valency n") {
    for (HeckeParams p : {HeckeParams{4, 5}, HeckeParams{3, 5}, HeckeParams{6, 5}, HeckeParams{4, 7}}) {
        const auto coords = enumerate_coords(p);
        for (const auto& u : coords) {
            std::size_t degree = 0;
            for (const auto& v : coords) {
                CHECK(adjacent(u, v, p) == adjacent(v, u, p));
                degree += adjacent(u, v, p) ? 1 : 0;
                if (p.q != 3 && u.kind == v.kind) {
                    CHECK_FALSE(adjacent(u, v, p));
                }
            }
            CHECK(degree == p.n);
        }
    }
}

TEST_CASE("cusp_of on generators") {
    const HeckeParams p{4, 5};
    const auto gens = generators(p);
    CHECK(cusp_of(canonical(identity_matrix(), p.ring()), p) == HFCoord{Kind::A, 1, 0});
    CHECK(cusp_of(gens.S, p) == HFCoord{Kind::B, 0, 1});
    CHECK(cusp_of(gens.R, p) == HFCoord{Kind::B, 1, 1});
}

TEST_CASE("cusp_of is onto with fibres of size n and is invariant under right T") {
    for (HeckeParams p : {HeckeParams{4, 5}, HeckeParams{4, 3}, HeckeParams{3, 5}, HeckeParams{6, 5}}) {
        const auto g = enumerate_group(p);
        std::map<HFCoord, std::size_t> fibre;
        for (ElementId a = 0; a < g.order(); ++a) {
            const HFCoord u = cusp_of(g.element(a), p);
            ++fibre[u];
            CHECK(cusp_of(g.element(g.times_T(a)), p) == u);
        }
        CHECK(fibre.size() == enumerate_coords(p).size());
        for (const auto& [u, k] : fibre) {
            CHECK(k == p.n);
        }
    }
}

TEST_CASE("apply: translations and inversion") {
    const HeckeParams p{4, 5};
    const auto gens = generators(p);
    CHECK(apply(gens.T, named("E1"), p) == named("G1"));
    CHECK(apply(gens.T, named("H2"), p) == named("H2"));
    CHECK(apply(gens.T, named("F2"), p) == named("E2"));
    CHECK(apply(gens.T, HFCoord{Kind::A, 1, 1}, p) == normalize(Kind::A, 3, 1, p));
    CHECK(apply(gens.T, HFCoord{Kind::B, 1, 2}, p) == normalize(Kind::B, 3, 2, p));
    CHECK(apply(gens.S, HFCoord{Kind::A, 2, 1}, p) == normalize(Kind::B, 1, 3, p));
    CHECK(apply(gens.S, HFCoord{Kind::B, 1, 3}, p) == normalize(Kind::A, 3, 4, p));
}

TEST_CASE("apply is a group action compatible with cusp_of") {
    for (HeckeParams p : {HeckeParams{4, 5}, HeckeParams{3, 5}, HeckeParams{4, 3}}) {
        const auto g = enumerate_group(p);
        const auto coords = enumerate_coords(p);
        const HFCoord inf{Kind::A, 1, 0};
        for (ElementId a = 0; a < g.order(); ++a) {
            CHECK(apply(g.element(a), inf, p) == cusp_of(g.element(a), p));
            for (ElementId b = 0; b < g.order(); b += 11) {
                for (const auto& u : coords) {
                    CHECK(apply(g.element(g.mult(a, b)), u, p) == apply(g.element(a), apply(g.element(b), u, p), p));
                }
            }
        }
    }
}

TEST_CASE("translation orbits: poles fixed, everything else in orbits of size n") {
    const HeckeParams p{4, 5};
    const ProjMatrix t = generators(p).T;
    std::set<HFCoord> seen;
    std::size_t fixed = 0;
    for (const HFCoord& u : enumerate_coords(p)) {
        if (seen.contains(u)) {
            continue;
        }
        std::size_t size = 0;
        HFCoord v = u;
        do {
            seen.insert(v);
            v = apply(t, v, p);
            ++size;
        } while (v != u);
        if (is_pole(u)) {
            CHECK(size == 1);
            ++fixed;
        } else {
            CHECK(size == 5);
        }
    }
    CHECK(fixed == 4);
}

TEST_CASE("poles") {
    const auto p45 = poles({4, 5});
    CHECK(std::set<HFCoord>(p45.begin(), p45.end()) ==
          std::set<HFCoord>{named("A1"), named("B1"), named("C2"), named("H2")});
    for (auto name : fixtures::kBringPoles) {
        CHECK(is_pole(bring_names().resolve(name)));
    }
    CHECK(poles({3, 5}) == std::vector<HFCoord>{{Kind::A, 1, 0}, {Kind::A, 2, 0}});
    CHECK(poles({4, 3}) == std::vector<HFCoord>{{Kind::A, 1, 0}, {Kind::B, 1, 0}});
}

TEST_CASE("the adjacency rule is the determinant condition") {
    const HeckeParams p{4, 5};
    const auto g = enumerate_group(p);
    const RingParams ring = p.ring();
    for (ElementId a = 0; a < g.order(); ++a) {
        const ProjMatrix& m = g.element(a);
        if (g.parity(a) != Parity::Even) {
            continue;
        }
        const HFCoord u = cusp_of(m, p);
        const HFCoord v{Kind::B, m.e12.irr, m.e22.rat};
        CHECK(mat_det(m, ring) == RingElem{1, 0});
        CHECK(adjacent(u, normalize(Kind::B, v.num, v.den, p), p));
    }
}

TEST_CASE("printed forms") {
    const HeckeParams p{4, 5};
    CHECK(printed_form(HFCoord{Kind::A, 1, 0}, p) == "1/(0√2)");
    CHECK(printed_form(HFCoord{Kind::B, 2, 0}, p) == "2√2/0");
}
