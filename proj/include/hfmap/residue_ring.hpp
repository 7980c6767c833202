#pragma once

// Arithmetic in Z_n[sqrt(m)] and projective 2x2 matrices over it.
//
// An element rat + irr*sqrt(m) is stored with both components reduced into
// [0, n). m = 1 is used for the modular group; there lambda = 1 is carried in
// the rational component and irr stays zero throughout.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace hfmap {

using Residue = std::uint32_t;

struct RingParams {
    std::uint32_t n = 0; // modulus, n >= 3
    std::uint32_t m = 0; // radicand, one of 1, 2, 3

    void validate() const;
    friend bool operator==(const RingParams&, const RingParams&) = default;
};

struct RingElem {
    Residue rat = 0;
    Residue irr = 0;

    friend bool operator==(const RingElem&, const RingElem&) = default;
    friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

inline bool is_zero(RingElem x) { return x.rat == 0 && x.irr == 0; }

RingElem ring_elem(std::int64_t rat, std::int64_t irr, const RingParams& p);
RingElem ring_add(RingElem x, RingElem y, const RingParams& p);
RingElem ring_sub(RingElem x, RingElem y, const RingParams& p);
RingElem ring_neg(RingElem x, const RingParams& p);
RingElem ring_mul(RingElem x, RingElem y, const RingParams& p);

std::string to_string(RingElem x, const RingParams& p);

// Reduce an arbitrary integer into [0, n).
Residue reduce(std::int64_t v, std::uint32_t n);

struct ProjMatrix {
    RingElem e11, e12, e21, e22;

    friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;
    friend auto operator<=>(const ProjMatrix&, const ProjMatrix&) = default;

    // Components in scan order: e11.rat, e11.irr, e12.rat, ..., e22.irr.
    std::array<Residue, 8> components() const;
};

ProjMatrix identity_matrix();

// Of g and -g, the one whose component tuple is lexicographically smaller.
// For odd n this is exactly "first nonzero component is <= its negation".
ProjMatrix canonical(const ProjMatrix& g, const RingParams& p);
ProjMatrix negate(const ProjMatrix& g, const RingParams& p);

ProjMatrix mat_mul(const ProjMatrix& g, const ProjMatrix& h, const RingParams& p);
RingElem mat_det(const ProjMatrix& g, const RingParams& p);

// Throws CorruptElement unless det(g) is +1 or -1.
ProjMatrix mat_inv(const ProjMatrix& g, const RingParams& p);

bool proj_eq(const ProjMatrix& g, const ProjMatrix& h, const RingParams& p);

std::string to_string(const ProjMatrix& g, const RingParams& p);

struct ProjMatrixHash {
    std::size_t operator()(const ProjMatrix& g) const noexcept;
};

} // namespace hfmap
