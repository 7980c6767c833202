#include "hfmap/errors.hpp"
#include "hfmap/map_assembler.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace hfmap;

namespace {

// Same map with darts renamed by a random permutation.
MapStructure relabel(const MapStructure& m, std::uint32_t seed) {
    std::vector<Dart> perm(m.darts());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    DartPerm sigma(m.darts());
    DartPerm alpha(m.darts());
    for (Dart d = 0; d < m.darts(); ++d) {
        sigma[perm[d]] = perm[m.sigma[d]];
        alpha[perm[d]] = perm[m.alpha[d]];
    }
    return make_map(sigma, alpha);
}

} // namespace

TEST_CASE("algebraic map invariants") {
    struct Row {
        HeckeParams p;
        std::size_t v, e, f;
        std::int64_t genus;
    };
    for (const Row& r : {Row{{4, 5}, 24, 60, 30, 4}, Row{{4, 3}, 8, 12, 6, 0}, Row{{3, 5}, 12, 30, 20, 0},
                         Row{{4, 7}, 48, 168, 84, 19}, Row{{6, 5}, 24, 60, 20, 9}}) {
        CAPTURE(r.p.to_string());
        const auto group = enumerate_group(r.p);
        const auto inv = compute_invariants(build_algebraic_map(group));
        CHECK(inv.darts == group.order());
        CHECK(inv.vertices == r.v);
        CHECK(inv.edges == r.e);
        CHECK(inv.faces == r.f);
        CHECK(inv.genus == r.genus);
        CHECK(inv.vertex_valency == r.p.n);
        CHECK(inv.face_size == static_cast<std::size_t>(r.p.q));
        CHECK(static_cast<std::int64_t>(inv.vertices) - static_cast<std::int64_t>(inv.edges) +
                  static_cast<std::int64_t>(inv.faces) ==
              2 - 2 * inv.genus);
        CHECK(2 * inv.edges == inv.darts);
    }
}

TEST_CASE("maps also exist for even n") {
    const auto inv = compute_invariants(build_algebraic_map(enumerate_group({4, 6})));
    CHECK(inv.darts == 96);
    CHECK(inv.vertices == 16);
    CHECK(inv.faces == 24);
}

TEST_CASE("make_map validation") {
    CHECK_THROWS_AS(make_map({0, 1}, {0, 1}), VerificationError);    // alpha has fixed points
    CHECK_THROWS_AS(make_map({0, 0}, {1, 0}), VerificationError);    // sigma not a permutation
    CHECK_THROWS_AS(make_map({0, 1, 2}, {1, 0}), VerificationError); // size mismatch
    const auto m = make_map({1, 0}, {1, 0});
    CHECK(m.phi == DartPerm{0, 1});
}

TEST_CASE("permutation model of the S5 oracle") {
    const auto inv = compute_invariants(permutation_model_map());
    CHECK(inv.darts == 120);
    CHECK(inv.vertices == 24);
    CHECK(inv.edges == 60);
    CHECK(inv.faces == 30);
    CHECK(inv.genus == 4);
    CHECK(inv.face_size == 4u);
    CHECK(inv.vertex_valency == 5u);
}

TEST_CASE("rooted canonical forms decide isomorphism") {
    const auto bring = build_algebraic_map(enumerate_group({4, 5}));
    CHECK(is_isomorphic(bring, bring));
    CHECK(is_isomorphic(relabel(bring, 7), bring));
    CHECK(is_isomorphic(bring, relabel(bring, 11)));
    CHECK(is_isomorphic(permutation_model_map(), bring));
    const auto cube = build_algebraic_map(enumerate_group({4, 3}));
    const auto ico = build_algebraic_map(enumerate_group({3, 5}));
    CHECK_FALSE(is_isomorphic(cube, ico));
    // The dual of Bring's map has the same darts but swaps vertex and face roles.
    const auto dual = make_map(bring.phi, bring.alpha);
    CHECK(compute_invariants(dual).vertices == 30);
    CHECK_FALSE(is_isomorphic(dual, bring));
}

TEST_CASE("canonical form depends only on the rooted structure") {
    const auto m = build_algebraic_map(enumerate_group({4, 3}));
    const auto code = canonical_form(m, 0);
    CHECK(code.front() == m.darts());
    CHECK(code.size() == 1 + 2 * m.darts());
    CHECK(canonical_form(m, 5) == code); // regular map: every root looks the same
}

TEST_CASE("automorphism count equals the group order") {
    for (HeckeParams p : {HeckeParams{4, 5}, HeckeParams{4, 3}, HeckeParams{3, 5}, HeckeParams{6, 5}}) {
        const auto group = enumerate_group(p);
        CHECK(automorphism_count(build_algebraic_map(group)) == group.order());
    }
    CHECK(automorphism_count(permutation_model_map()) == 120);
}

TEST_CASE("coordinate graphs") {
    const auto g45 = build_coordinate_graph({4, 5});
    CHECK(g45.vertices.size() == 24);
    CHECK(g45.edges.size() == 60);
    for (std::size_t d : degrees(g45)) {
        CHECK(d == 5);
    }
    CHECK(is_bipartite(g45));
    CHECK(girth(g45) == 4);

    const auto cube = build_coordinate_graph({4, 3});
    CHECK(cube.edges.size() == 12);
    CHECK(is_bipartite(cube));
    CHECK(girth(cube) == 4);
    CHECK(graphs_isomorphic(8, cube.edges, cube_graph_edges()));

    const auto ico = build_coordinate_graph({3, 5});
    CHECK(ico.edges.size() == 30);
    CHECK_FALSE(is_bipartite(ico));
    CHECK(girth(ico) == 3);
    CHECK_FALSE(graphs_isomorphic(12, ico.edges, {}));

    CHECK(is_bipartite(build_coordinate_graph({4, 7})));
    CHECK_THROWS_AS(build_coordinate_graph({4, 6}), InvalidArgument);
}

TEST_CASE("graph isomorphism negatives") {
    auto edges = cube_graph_edges();
    edges.back() = {0, 7};
    CHECK_FALSE(graphs_isomorphic(8, edges, cube_graph_edges()));
}

TEST_CASE("correspondence between darts and coordinates") {
    for (HeckeParams p : {HeckeParams{4, 5}, HeckeParams{4, 3}, HeckeParams{3, 5}, HeckeParams{6, 5},
                          HeckeParams{4, 7}}) {
        const auto group = enumerate_group(p);
        const auto graph = build_coordinate_graph(p);
        const auto r = correspondence_check(group, build_algebraic_map(group), graph);
        CHECK(r.ok);
        CHECK(r.violations.empty());
        CHECK(r.vertex_orbits == graph.vertices.size());
        CHECK(r.coordinates == graph.vertices.size());
        CHECK(r.edge_orbits == graph.edges.size());
        CHECK(r.matched_edges == graph.edges.size());
    }
}

TEST_CASE("correspondence detects a map that does not match the coordinates") {
    const auto group = enumerate_group({4, 5});
    auto map = build_algebraic_map(group);
    // Exchange the partners of two edges so that dart 0 is joined to a
    // non-adjacent coordinate.
    const HeckeParams p{4, 5};
    const auto cusp = [&](Dart d) { return cusp_of(group.element(d), p); };
    const Dart a = 0;
    Dart b = 0;
    while (cusp(b) == cusp(a) || adjacent(cusp(a), cusp(map.alpha[b]), p) || cusp(map.alpha[b]) == cusp(a)) {
        ++b;
    }
    const Dart a2 = map.alpha[a];
    const Dart b2 = map.alpha[b];
    map.alpha[a] = b2;
    map.alpha[b2] = a;
    map.alpha[b] = a2;
    map.alpha[a2] = b;
    const auto r = correspondence_check(group, make_map(map.sigma, map.alpha), build_coordinate_graph({4, 5}));
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("JSON export has exactly the documented keys in order") {
    const auto group = enumerate_group({4, 5});
    const auto j = to_json(map_report(group, build_algebraic_map(group)));
    CHECK(j.dump() == R"({"q":4,"n":5,"darts":120,"vertices":24,"edges":60,"faces":30,"genus":4,"group_order":120})");
}
