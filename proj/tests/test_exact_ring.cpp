#include "hfmap/errors.hpp"
#include "hfmap/exact_ring.hpp"

#include "doctest.h"

#include <cmath>
#include <cstdint>

using namespace hfmap;

TEST_CASE("quadratic integer arithmetic") {
    CHECK(quad_mul({1, 1}, {1, -1}, 2) == QuadInt{-1, 0});
    CHECK(quad_add({3, -2}, {-3, 2}) == QuadInt{0, 0});
    CHECK(quad_sub({3, 1}, {1, 1}) == QuadInt{2, 0});
}

TEST_CASE("overflow is reported, not wrapped") {
    CHECK_THROWS_AS(quad_mul({INT64_MAX / 2, 0}, {3, 0}, 2), ResourceLimit);
    CHECK_THROWS_AS(quad_add({INT64_MAX, 0}, {1, 0}), ResourceLimit);
}

TEST_CASE("exact generators have determinant one and reduce to the finite generators") {
    for (int q : {3, 4, 6}) {
        const std::int64_t m = q == 3 ? 1 : (q == 4 ? 2 : 3);
        const auto e = exact_generators(q);
        CHECK(exact_det(e.S, m) == QuadInt{1, 0});
        CHECK(exact_det(e.T, m) == QuadInt{1, 0});
        CHECK(exact_mul(e.T, e.T_inv, m) == exact_identity());
        const HeckeParams p{q, 5};
        const auto g = generators(p);
        CHECK(reduce(e.S, p.ring()) == g.S);
        CHECK(reduce(e.T, p.ring()) == g.T);
    }
    CHECK_THROWS_AS(exact_generators(5), InvalidArgument);
}

TEST_CASE("R = TS has order q projectively") {
    for (int q : {3, 4, 6}) {
        const std::int64_t m = q == 3 ? 1 : (q == 4 ? 2 : 3);
        const auto e = exact_generators(q);
        const ExactMatrix r = exact_mul(e.T, e.S, m);
        ExactMatrix acc = exact_identity();
        for (int k = 0; k < q; ++k) {
            acc = exact_mul(acc, r, m);
        }
        CHECK(exact_sign_normalize(acc) == exact_identity());
    }
}

TEST_CASE("cusps are stored in lowest terms") {
    CHECK(make_cusp(2, 4, 6) == Cusp{false, 1, 2, 3});
    CHECK(make_cusp(1, 0, -2) == Cusp{false, -1, 0, 2});
    CHECK(make_cusp(0, 0, 5) == Cusp{false, 0, 0, 1});
    CHECK_THROWS_AS(make_cusp(1, 0, 0), InvalidArgument);
}

TEST_CASE("cusp_ratio rationalizes the denominator") {
    // 1 / sqrt 2 = sqrt 2 / 2
    CHECK(cusp_ratio({1, 0}, {0, 1}, 2) == make_cusp(0, 1, 2));
    // sqrt 2 / 1
    CHECK(cusp_ratio({0, 1}, {1, 0}, 2) == make_cusp(0, 1, 1));
    CHECK(cusp_ratio({1, 0}, {0, 0}, 2).infinite);
    const Cusp c = cusp_ratio({1, 1}, {1, -1}, 2); // (1+r2)/(1-r2) = -(3 + 2 r2)
    CHECK(c == make_cusp(-3, -2, 1));
    CHECK(c.value(2) == doctest::Approx((1 + std::sqrt(2.0)) / (1 - std::sqrt(2.0))));
}

TEST_CASE("cusp text form") {
    CHECK(cusp_infinity().to_string(2) == "inf");
    CHECK(make_cusp(0, 1, 2).to_string(2) == "1r2/2");
    CHECK(make_cusp(3, -1, 1).to_string(2) == "(3-1r2)");
}
