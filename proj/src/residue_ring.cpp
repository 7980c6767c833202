#include "hfmap/residue_ring.hpp"

#include "hfmap/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hfmap {

void RingParams::validate() const {
    if (n < 3) {
        throw InvalidArgument("modulus must be at least 3, got " + std::to_string(n));
    }
    if (m < 1 || m > 3) {
        throw InvalidArgument("radicand must be 1, 2 or 3, got " + std::to_string(m));
    }
}

Residue reduce(std::int64_t v, std::uint32_t n) {
    auto r = v % static_cast<std::int64_t>(n);
    if (r < 0) {
        r += n;
    }
    return static_cast<Residue>(r);
}

RingElem ring_elem(std::int64_t rat, std::int64_t irr, const RingParams& p) {
    return {reduce(rat, p.n), reduce(irr, p.n)};
}

RingElem ring_add(RingElem x, RingElem y, const RingParams& p) {
    return {static_cast<Residue>((std::uint64_t{x.rat} + y.rat) % p.n),
            static_cast<Residue>((std::uint64_t{x.irr} + y.irr) % p.n)};
}

RingElem ring_neg(RingElem x, const RingParams& p) {
    return {x.rat == 0 ? 0 : p.n - x.rat, x.irr == 0 ? 0 : p.n - x.irr};
}

RingElem ring_sub(RingElem x, RingElem y, const RingParams& p) {
    return ring_add(x, ring_neg(y, p), p);
}

RingElem ring_mul(RingElem x, RingElem y, const RingParams& p) {
    const std::uint64_t n = p.n;
    const std::uint64_t rr = (std::uint64_t{x.rat} * y.rat) % n;
    const std::uint64_t ii = (std::uint64_t{x.irr} * y.irr) % n;
    const std::uint64_t ri = (std::uint64_t{x.rat} * y.irr) % n;
    const std::uint64_t ir = (std::uint64_t{x.irr} * y.rat) % n;
    return {static_cast<Residue>((rr + p.m * ii) % n), static_cast<Residue>((ri + ir) % n)};
}

std::string to_string(RingElem x, const RingParams& p) {
    std::ostringstream os;
    os << x.rat << '+' << x.irr << "r" << p.m;
    return os.str();
}

std::array<Residue, 8> ProjMatrix::components() const {
    return {e11.rat, e11.irr, e12.rat, e12.irr, e21.rat, e21.irr, e22.rat, e22.irr};
}

ProjMatrix identity_matrix() {
    return {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
}

ProjMatrix negate(const ProjMatrix& g, const RingParams& p) {
    return {ring_neg(g.e11, p), ring_neg(g.e12, p), ring_neg(g.e21, p), ring_neg(g.e22, p)};
}

ProjMatrix canonical(const ProjMatrix& g, const RingParams& p) {
    const ProjMatrix neg = negate(g, p);
    return neg.components() < g.components() ? neg : g;
}

ProjMatrix mat_mul(const ProjMatrix& g, const ProjMatrix& h, const RingParams& p) {
    const auto dot = [&p](RingElem a, RingElem b, RingElem c, RingElem d) {
        return ring_add(ring_mul(a, b, p), ring_mul(c, d, p), p);
    };
    return canonical({dot(g.e11, h.e11, g.e12, h.e21), dot(g.e11, h.e12, g.e12, h.e22),
                      dot(g.e21, h.e11, g.e22, h.e21), dot(g.e21, h.e12, g.e22, h.e22)},
                     p);
}

RingElem mat_det(const ProjMatrix& g, const RingParams& p) {
    return ring_sub(ring_mul(g.e11, g.e22, p), ring_mul(g.e12, g.e21, p), p);
}

ProjMatrix mat_inv(const ProjMatrix& g, const RingParams& p) {
    const RingElem det = mat_det(g, p);
    const RingElem one{1, 0};
    if (det != one && det != ring_neg(one, p)) {
        throw CorruptElement("matrix " + to_string(g, p) + " has determinant " + to_string(det, p) +
                             ", expected +-1");
    }
    // The adjugate is the inverse up to the sign det, which is projectively trivial.
    return canonical({g.e22, ring_neg(g.e12, p), ring_neg(g.e21, p), g.e11}, p);
}

bool proj_eq(const ProjMatrix& g, const ProjMatrix& h, const RingParams& p) {
    return canonical(g, p) == canonical(h, p);
}

std::string to_string(const ProjMatrix& g, const RingParams& p) {
    return "[[" + to_string(g.e11, p) + ", " + to_string(g.e12, p) + "], [" + to_string(g.e21, p) + ", " +
           to_string(g.e22, p) + "]]";
}

std::size_t ProjMatrixHash::operator()(const ProjMatrix& g) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Residue c : g.components()) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

} // namespace hfmap
