#include "hfmap/hecke_group.hpp"

#include "hfmap/errors.hpp"

#include <deque>
#include <numeric>

namespace hfmap {

void HeckeParams::validate() const {
    if (q != 3 && q != 4 && q != 6) {
        throw InvalidArgument("q must be 3, 4 or 6, got " + std::to_string(q));
    }
    if (n <= 2) {
        throw InvalidArgument("n must be greater than 2, got " + std::to_string(n));
    }
}

std::uint32_t HeckeParams::m() const {
    switch (q) {
    case 3: return 1;
    case 4: return 2;
    case 6: return 3;
    default: throw InvalidArgument("q must be 3, 4 or 6, got " + std::to_string(q));
    }
}

RingElem HeckeParams::lambda() const {
    return q == 3 ? RingElem{1, 0} : RingElem{0, 1};
}

std::string HeckeParams::to_string() const {
    return "(q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")";
}

Generators generators(const HeckeParams& p) {
    p.validate();
    const RingParams r = p.ring();
    const RingElem zero{0, 0};
    const RingElem one{1, 0};
    const ProjMatrix S = canonical({zero, ring_neg(one, r), one, zero}, r);
    const ProjMatrix T = canonical({one, p.lambda(), zero, one}, r);
    return {S, T, mat_mul(T, S, r)};
}

Parity parity(const ProjMatrix& g, const HeckeParams& p) {
    if (!p.has_parity()) {
        throw InvalidArgument("parity is undefined for q = 3");
    }
    const bool even = g.e11.irr == 0 && g.e22.irr == 0 && g.e12.rat == 0 && g.e21.rat == 0;
    const bool odd = g.e11.rat == 0 && g.e22.rat == 0 && g.e12.irr == 0 && g.e21.irr == 0;
    if (even == odd) {
        throw CorruptElement("matrix " + to_string(g, p.ring()) + " matches neither parity pattern");
    }
    return even ? Parity::Even : Parity::Odd;
}

std::size_t element_order(const ProjMatrix& g, const RingParams& p) {
    const ProjMatrix id = canonical(identity_matrix(), p);
    const ProjMatrix base = canonical(g, p);
    ProjMatrix power = base;
    std::size_t k = 1;
    while (power != id) {
        power = mat_mul(power, base, p);
        ++k;
    }
    return k;
}

FiniteHeckeGroup enumerate_group(const HeckeParams& p, std::size_t max_elements) {
    p.validate();
    const RingParams r = p.ring();
    const Generators gens = generators(p);

    FiniteHeckeGroup group;
    group.params_ = p;

    const auto intern = [&](const ProjMatrix& g) -> ElementId {
        auto [it, inserted] = group.index_.try_emplace(g, static_cast<ElementId>(group.elements_.size()));
        if (inserted) {
            if (group.elements_.size() >= max_elements) {
                throw ResourceLimit("group " + p.to_string() + " exceeds the enumeration bound of " +
                                    std::to_string(max_elements) + " elements");
            }
            group.elements_.push_back(g);
        }
        return it->second;
    };

    intern(canonical(identity_matrix(), r));
    for (std::size_t head = 0; head < group.elements_.size(); ++head) {
        const ProjMatrix g = group.elements_[head];
        group.right_s_.push_back(intern(mat_mul(g, gens.S, r)));
        group.right_t_.push_back(intern(mat_mul(g, gens.T, r)));
    }

    group.gen_s_ = group.index_of(gens.S);
    group.gen_t_ = group.index_of(gens.T);
    group.gen_r_ = group.index_of(gens.R);

    if (p.has_parity()) {
        group.parity_.reserve(group.elements_.size());
        for (const ProjMatrix& g : group.elements_) {
            group.parity_.push_back(parity(g, p));
        }
    }
    return group;
}

ElementId FiniteHeckeGroup::index_of(const ProjMatrix& g) const {
    const auto it = index_.find(canonical(g, params_.ring()));
    if (it == index_.end()) {
        throw CorruptElement("matrix " + to_string(g, params_.ring()) + " is not in group " + params_.to_string());
    }
    return it->second;
}

bool FiniteHeckeGroup::contains(const ProjMatrix& g) const {
    return index_.contains(canonical(g, params_.ring()));
}

ElementId FiniteHeckeGroup::mult(ElementId a, ElementId b) const {
    return index_of(mat_mul(elements_[a], elements_[b], params_.ring()));
}

ElementId FiniteHeckeGroup::inverse(ElementId a) const {
    return index_of(mat_inv(elements_[a], params_.ring()));
}

Parity FiniteHeckeGroup::parity(ElementId a) const {
    if (!params_.has_parity()) {
        throw InvalidArgument("parity is undefined for q = 3");
    }
    return parity_[a];
}

std::size_t FiniteHeckeGroup::element_order(ElementId a) const {
    return hfmap::element_order(elements_[a], params_.ring());
}

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        primes.push_back(n);
    }
    return primes;
}

} // namespace

std::uint64_t parson_index(const HeckeParams& p) {
    p.validate();
    const std::uint64_t n = p.n;
    // Work with numerator/denominator so the result stays an exact integer:
    // n^3 * prod (p^2 - 1) / p^2 is integral because every p^2 divides n^2.
    std::uint64_t value = n * n * n;
    const std::uint64_t m = p.m();
    const bool ramified = p.q != 3 && n % m == 0;
    for (std::uint64_t prime : prime_divisors(n)) {
        if (ramified && prime == m) {
            value = value / m * (m - 1);
        } else {
            value = value / (prime * prime) * (prime * prime - 1);
        }
    }
    if (p.q == 3) {
        value /= 2;
    }
    return value;
}

} // namespace hfmap
