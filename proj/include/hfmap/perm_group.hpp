#pragma once

// Permutation groups on {1, ..., degree}, used as an independent model of the
// rotation group of Bring's map via (1,5), (5,4,3,2,1), (2,3,4,5) in S_5.
//
// Composition convention: (a * b)(i) = a(b(i)), i.e. the right factor is
// applied first. Under this convention x * y * z is the identity.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace hfmap {

class Permutation {
public:
    Permutation() = default;
    static Permutation identity(std::size_t degree);
    // Points are 1-based, e.g. from_cycles(5, {{5, 4, 3, 2, 1}}).
    static Permutation from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<int>> cycles);

    std::size_t degree() const { return image_.size(); }
    // 1-based image of a 1-based point.
    int operator()(int point) const { return image_[point - 1] + 1; }

    Permutation inverse() const;
    bool is_identity() const;
    std::size_t order() const;
    std::string cycle_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> image_; // 0-based
};

class PermGroup {
public:
    // BFS closure of the generators under right multiplication; element 0 is
    // the identity.
    PermGroup(std::vector<Permutation> generators);

    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::size_t index_of(const Permutation& g) const;

private:
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::map<Permutation, std::size_t> index_;
};

struct S5Oracle {
    Permutation x; // (1,5), image of the order-2 generator
    Permutation y; // (5,4,3,2,1), image of the order-5 generator
    Permutation z; // (2,3,4,5), image of the order-4 generator
    PermGroup group; // <x, y>
};

S5Oracle s5_oracle();

} // namespace hfmap
