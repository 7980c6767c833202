#pragma once

// The finite quotient H_q / H_q(n) of a Hecke group by its principal
// congruence subgroup, enumerated as projective matrices over Z_n[sqrt(m)].

#include "hfmap/residue_ring.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hfmap {

inline constexpr std::size_t kDefaultGroupBound = 1'000'000;

struct HeckeParams {
    int q = 0;           // 3, 4 or 6
    std::uint32_t n = 0; // modulus, n >= 3

    void validate() const;

    // lambda_q^2: 1, 2, 3 for q = 3, 4, 6.
    std::uint32_t m() const;
    RingParams ring() const { return {n, m()}; }
    // lambda_q as a ring element: 1 for q = 3, sqrt(m) otherwise.
    RingElem lambda() const;
    bool has_parity() const { return q != 3; }

    std::string to_string() const;
    friend bool operator==(const HeckeParams&, const HeckeParams&) = default;
};

enum class Parity : std::uint8_t { Even, Odd };

inline Parity operator^(Parity a, Parity b) {
    return a == b ? Parity::Even : Parity::Odd;
}

struct Generators {
    ProjMatrix S; // z -> -1/z
    ProjMatrix T; // z -> z + lambda
    ProjMatrix R; // T*S
};

Generators generators(const HeckeParams& p);

using ElementId = std::uint32_t;

class FiniteHeckeGroup {
public:
    const HeckeParams& params() const { return params_; }
    std::size_t order() const { return elements_.size(); }

    const ProjMatrix& element(ElementId i) const { return elements_[i]; }
    std::span<const ProjMatrix> elements() const { return elements_; }

    ElementId identity() const { return 0; }
    ElementId gen_S() const { return gen_s_; }
    ElementId gen_T() const { return gen_t_; }
    ElementId gen_R() const { return gen_r_; }

    // Index of g in the group; throws CorruptElement if absent.
    ElementId index_of(const ProjMatrix& g) const;
    bool contains(const ProjMatrix& g) const;

    ElementId mult(ElementId a, ElementId b) const;
    ElementId inverse(ElementId a) const;

    // Right multiplication by S and T, precomputed during enumeration.
    ElementId times_S(ElementId a) const { return right_s_[a]; }
    ElementId times_T(ElementId a) const { return right_t_[a]; }

    // Only for q = 4 or 6; throws InvalidArgument for q = 3.
    Parity parity(ElementId a) const;

    std::size_t element_order(ElementId a) const;

private:
    friend FiniteHeckeGroup enumerate_group(const HeckeParams&, std::size_t);

    HeckeParams params_;
    std::vector<ProjMatrix> elements_;
    std::unordered_map<ProjMatrix, ElementId, ProjMatrixHash> index_;
    std::vector<ElementId> right_s_;
    std::vector<ElementId> right_t_;
    std::vector<Parity> parity_;
    ElementId gen_s_ = 0;
    ElementId gen_t_ = 0;
    ElementId gen_r_ = 0;
};

// Breadth-first closure of {S, T} under right multiplication. Element 0 is the
// identity; indices follow BFS discovery order with S tried before T.
// Throws ResourceLimit once more than max_elements elements are found.
FiniteHeckeGroup enumerate_group(const HeckeParams& p, std::size_t max_elements = kDefaultGroupBound);

// |H_q : H_q(n)| in closed form. The q = 3 case is the projective index of
// Gamma(n) in PSL(2, Z). Throws InvalidArgument for n <= 2.
std::uint64_t parson_index(const HeckeParams& p);

// Even pattern: diagonal purely rational, off-diagonal purely irrational.
// Odd pattern: the transpose. Throws CorruptElement if neither matches and
// InvalidArgument for q = 3.
Parity parity(const ProjMatrix& g, const HeckeParams& p);

// Least k >= 1 with g^k projectively the identity.
std::size_t element_order(const ProjMatrix& g, const RingParams& p);

} // namespace hfmap
