#pragma once

// Exact arithmetic in Z[sqrt(m)] for matrices of the infinite Hecke group and
// cusps in Q(sqrt(m)) u {infinity}. All operations are overflow-checked and
// throw ResourceLimit rather than wrap.

#include "hfmap/hecke_group.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace hfmap {

struct QuadInt {
    std::int64_t rat = 0;
    std::int64_t irr = 0;

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
    friend auto operator<=>(const QuadInt&, const QuadInt&) = default;
};

QuadInt quad_add(QuadInt x, QuadInt y);
QuadInt quad_sub(QuadInt x, QuadInt y);
QuadInt quad_mul(QuadInt x, QuadInt y, std::int64_t m);
QuadInt quad_neg(QuadInt x);
inline bool is_zero(QuadInt x) { return x.rat == 0 && x.irr == 0; }
RingElem reduce(QuadInt x, const RingParams& p);

struct ExactMatrix {
    QuadInt e11, e12, e21, e22;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;
    friend auto operator<=>(const ExactMatrix&, const ExactMatrix&) = default;
};

struct ExactGenerators {
    ExactMatrix S;
    ExactMatrix T;
    ExactMatrix T_inv;
};

ExactGenerators exact_generators(int q);
ExactGenerators exact_generators(const HeckeParams& p);
ExactMatrix exact_identity();
ExactMatrix exact_mul(const ExactMatrix& a, const ExactMatrix& b, std::int64_t m);
QuadInt exact_det(const ExactMatrix& a, std::int64_t m);
// Adjugate; the inverse for determinant-one matrices.
ExactMatrix exact_adjugate(const ExactMatrix& a);
// Of a and -a, the one whose first nonzero component is positive.
ExactMatrix exact_sign_normalize(const ExactMatrix& a);
ProjMatrix reduce(const ExactMatrix& a, const RingParams& p);

// (rat + irr*sqrt(m)) / den in lowest terms with den > 0, or infinity.
struct Cusp {
    bool infinite = false;
    std::int64_t rat = 0;
    std::int64_t irr = 0;
    std::int64_t den = 1;

    friend bool operator==(const Cusp&, const Cusp&) = default;
    friend auto operator<=>(const Cusp&, const Cusp&) = default;

    double value(std::int64_t m) const;
    std::string to_string(std::int64_t m) const;
};

Cusp cusp_infinity();
Cusp make_cusp(std::int64_t rat, std::int64_t irr, std::int64_t den);
// num / den for exact num, den; infinity when den = 0.
Cusp cusp_ratio(QuadInt num, QuadInt den, std::int64_t m);

} // namespace hfmap
