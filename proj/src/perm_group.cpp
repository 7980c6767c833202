#include "hfmap/perm_group.hpp"

#include "hfmap/errors.hpp"

#include <numeric>

namespace hfmap {

Permutation Permutation::identity(std::size_t degree) {
    Permutation p;
    p.image_.resize(degree);
    std::iota(p.image_.begin(), p.image_.end(), std::uint8_t{0});
    return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<int>> cycles) {
    Permutation p = identity(degree);
    for (const auto& cycle : cycles) {
        const std::vector<int> pts(cycle);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const int from = pts[i];
            const int to = pts[(i + 1) % pts.size()];
            if (from < 1 || to < 1 || static_cast<std::size_t>(from) > degree ||
                static_cast<std::size_t>(to) > degree) {
                throw InvalidArgument("cycle point out of range for degree " + std::to_string(degree));
            }
            p.image_[from - 1] = static_cast<std::uint8_t>(to - 1);
        }
    }
    return p;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) {
        inv.image_[image_[i]] = static_cast<std::uint8_t>(i);
    }
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != i) {
            return false;
        }
    }
    return true;
}

std::size_t Permutation::order() const {
    std::size_t k = 1;
    Permutation power = *this;
    while (!power.is_identity()) {
        power = power * *this;
        ++k;
    }
    return k;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t start = 0; start < image_.size(); ++start) {
        if (seen[start] || image_[start] == start) {
            continue;
        }
        out += '(';
        std::size_t i = start;
        bool first = true;
        while (!seen[i]) {
            seen[i] = true;
            if (!first) {
                out += ',';
            }
            out += std::to_string(i + 1);
            first = false;
            i = image_[i];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
        throw InvalidArgument("cannot compose permutations of different degree");
    }
    Permutation c;
    c.image_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) {
        c.image_[i] = a.image_[b.image_[i]];
    }
    return c;
}

PermGroup::PermGroup(std::vector<Permutation> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw InvalidArgument("permutation group needs at least one generator");
    }
    const Permutation id = Permutation::identity(generators_.front().degree());
    elements_.push_back(id);
    index_.emplace(id, 0);
    for (std::size_t head = 0; head < elements_.size(); ++head) {
        for (const Permutation& gen : generators_) {
            Permutation next = elements_[head] * gen;
            if (index_.try_emplace(next, elements_.size()).second) {
                elements_.push_back(std::move(next));
            }
        }
    }
}

std::size_t PermGroup::index_of(const Permutation& g) const {
    const auto it = index_.find(g);
    if (it == index_.end()) {
        throw CorruptElement("permutation " + g.cycle_string() + " is not in the group");
    }
    return it->second;
}

S5Oracle s5_oracle() {
    Permutation x = Permutation::from_cycles(5, {{1, 5}});
    Permutation y = Permutation::from_cycles(5, {{5, 4, 3, 2, 1}});
    Permutation z = Permutation::from_cycles(5, {{2, 3, 4, 5}});
    PermGroup group({x, y});
    return {std::move(x), std::move(y), std::move(z), std::move(group)};
}

} // namespace hfmap
