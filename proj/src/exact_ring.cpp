#include "hfmap/exact_ring.hpp"

#include "hfmap/errors.hpp"

#include <cmath>
#include <numeric>

namespace hfmap {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw ResourceLimit("integer overflow in exact arithmetic");
    }
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw ResourceLimit("integer overflow in exact arithmetic");
    }
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    return checked_mul(a, -1);
}

} // namespace

QuadInt quad_add(QuadInt x, QuadInt y) {
    return {checked_add(x.rat, y.rat), checked_add(x.irr, y.irr)};
}

QuadInt quad_neg(QuadInt x) {
    return {checked_neg(x.rat), checked_neg(x.irr)};
}

QuadInt quad_sub(QuadInt x, QuadInt y) {
    return quad_add(x, quad_neg(y));
}

QuadInt quad_mul(QuadInt x, QuadInt y, std::int64_t m) {
    return {checked_add(checked_mul(x.rat, y.rat), checked_mul(m, checked_mul(x.irr, y.irr))),
            checked_add(checked_mul(x.rat, y.irr), checked_mul(x.irr, y.rat))};
}

RingElem reduce(QuadInt x, const RingParams& p) {
    return {reduce(x.rat, p.n), reduce(x.irr, p.n)};
}

ExactGenerators exact_generators(int q) {
    if (q != 3 && q != 4 && q != 6) {
        throw InvalidArgument("q must be 3, 4 or 6, got " + std::to_string(q));
    }
    const QuadInt lambda = q == 3 ? QuadInt{1, 0} : QuadInt{0, 1};
    const QuadInt zero{0, 0};
    const QuadInt one{1, 0};
    return {{zero, {-1, 0}, one, zero}, {one, lambda, zero, one}, {one, quad_neg(lambda), zero, one}};
}

ExactGenerators exact_generators(const HeckeParams& p) {
    p.validate();
    return exact_generators(p.q);
}

ExactMatrix exact_identity() {
    return {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
}

ExactMatrix exact_mul(const ExactMatrix& a, const ExactMatrix& b, std::int64_t m) {
    const auto dot = [m](QuadInt w, QuadInt x, QuadInt y, QuadInt z) {
        return quad_add(quad_mul(w, x, m), quad_mul(y, z, m));
    };
    return {dot(a.e11, b.e11, a.e12, b.e21), dot(a.e11, b.e12, a.e12, b.e22), dot(a.e21, b.e11, a.e22, b.e21),
            dot(a.e21, b.e12, a.e22, b.e22)};
}

QuadInt exact_det(const ExactMatrix& a, std::int64_t m) {
    return quad_sub(quad_mul(a.e11, a.e22, m), quad_mul(a.e12, a.e21, m));
}

ExactMatrix exact_adjugate(const ExactMatrix& a) {
    return {a.e22, quad_neg(a.e12), quad_neg(a.e21), a.e11};
}

ExactMatrix exact_sign_normalize(const ExactMatrix& a) {
    for (std::int64_t c : {a.e11.rat, a.e11.irr, a.e12.rat, a.e12.irr, a.e21.rat, a.e21.irr, a.e22.rat, a.e22.irr}) {
        if (c > 0) {
            return a;
        }
        if (c < 0) {
            return {quad_neg(a.e11), quad_neg(a.e12), quad_neg(a.e21), quad_neg(a.e22)};
        }
    }
    return a;
}

ProjMatrix reduce(const ExactMatrix& a, const RingParams& p) {
    return canonical({reduce(a.e11, p), reduce(a.e12, p), reduce(a.e21, p), reduce(a.e22, p)}, p);
}

Cusp cusp_infinity() {
    return {true, 0, 0, 1};
}

Cusp make_cusp(std::int64_t rat, std::int64_t irr, std::int64_t den) {
    if (den == 0) {
        throw InvalidArgument("finite cusp with zero denominator");
    }
    if (den < 0) {
        rat = checked_neg(rat);
        irr = checked_neg(irr);
        den = checked_neg(den);
    }
    const std::int64_t g = std::gcd(std::gcd(rat, irr), den);
    return {false, rat / g, irr / g, den / g};
}

Cusp cusp_ratio(QuadInt num, QuadInt den, std::int64_t m) {
    if (is_zero(den)) {
        return cusp_infinity();
    }
    // num / den = num * conj(den) / norm(den).
    const QuadInt conj{den.rat, checked_neg(den.irr)};
    const QuadInt top = quad_mul(num, conj, m);
    const std::int64_t norm = quad_mul(den, conj, m).rat;
    if (norm == 0) {
        throw InvalidArgument("zero divisor in Q(sqrt m)");
    }
    return make_cusp(top.rat, top.irr, norm);
}

double Cusp::value(std::int64_t m) const {
    if (infinite) {
        return INFINITY;
    }
    return (static_cast<double>(rat) + static_cast<double>(irr) * std::sqrt(static_cast<double>(m))) /
           static_cast<double>(den);
}

std::string Cusp::to_string(std::int64_t m) const {
    if (infinite) {
        return "inf";
    }
    std::string out;
    if (irr == 0) {
        out = std::to_string(rat);
    } else if (rat == 0) {
        out = std::to_string(irr) + "r" + std::to_string(m);
    } else {
        out = "(" + std::to_string(rat) + (irr > 0 ? "+" : "") + std::to_string(irr) + "r" + std::to_string(m) + ")";
    }
    return den == 1 ? out : out + "/" + std::to_string(den);
}

} // namespace hfmap
