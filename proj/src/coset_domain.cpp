#include "hfmap/coset_domain.hpp"

#include "hfmap/disjoint_sets.hpp"

#include <array>
#include <map>
#include <set>

namespace hfmap {

namespace {

enum Corner : std::size_t { kCusp = 0, kPlus = 1, kI = 2, kMinus = 3 };

std::size_t corner(ElementId g, Corner c) {
    return std::size_t{g} * 4 + c;
}

} // namespace

CosetDomainReport coset_domain_check(const FiniteHeckeGroup& group) {
    const HeckeParams& p = group.params();
    const RingParams ring = p.ring();
    const std::int64_t m = p.m();
    const ExactGenerators gens = exact_generators(p);
    const std::size_t order = group.order();

    CosetDomainReport report;
    report.params = p;
    report.copies = order;

    // Exact representative of every coset along the BFS tree.
    std::vector<ExactMatrix> rep(order);
    std::vector<bool> reached(order, false);
    std::set<std::pair<ElementId, char>> tree;
    rep[group.identity()] = exact_identity();
    reached[group.identity()] = true;
    std::vector<ElementId> queue{group.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const ElementId g = queue[head];
        for (char gen : {'S', 'T'}) {
            const ElementId h = gen == 'S' ? group.times_S(g) : group.times_T(g);
            if (!reached[h]) {
                reached[h] = true;
                rep[h] = exact_mul(rep[g], gen == 'S' ? gens.S : gens.T, m);
                tree.emplace(g, gen);
                queue.push_back(h);
            }
        }
    }
    if (queue.size() != order) {
        report.violations.push_back("gluing graph is disconnected");
    }
    for (ElementId g = 0; g < order; ++g) {
        if (exact_det(rep[g], m) != QuadInt{1, 0}) {
            report.violations.push_back("coset representative " + std::to_string(g) + " has determinant != 1");
        }
        if (reduce(rep[g], ring) != group.element(g)) {
            report.violations.push_back("coset representative " + std::to_string(g) + " reduces to the wrong element");
        }
    }
    report.tree_gluings = tree.size();

    const ProjMatrix identity = canonical(identity_matrix(), ring);
    DisjointSets corners(order * 4);
    for (ElementId g = 0; g < order; ++g) {
        for (char gen : {'S', 'T'}) {
            const ElementId h = gen == 'S' ? group.times_S(g) : group.times_T(g);
            if (gen == 'T') {
                corners.unite(corner(g, kCusp), corner(h, kCusp));
                corners.unite(corner(g, kPlus), corner(h, kMinus));
            } else {
                corners.unite(corner(g, kPlus), corner(h, kMinus));
                corners.unite(corner(g, kI), corner(h, kI));
            }
            if (tree.contains({g, gen})) {
                continue;
            }
            ++report.boundary_pairs;
            const ExactMatrix pairing =
                exact_mul(exact_mul(rep[g], gen == 'S' ? gens.S : gens.T, m), exact_adjugate(rep[h]), m);
            if (reduce(pairing, ring) == identity) {
                ++report.congruent_pairings;
            } else {
                report.violations.push_back("side pairing between copies " + std::to_string(g) + " and " +
                                            std::to_string(h) + " is not +-I mod " + std::to_string(p.n));
            }
        }
    }

    std::map<std::size_t, std::set<std::size_t>> kinds_by_class;
    for (std::size_t c = 0; c < order * 4; ++c) {
        kinds_by_class[corners.find(c)].insert(c % 4);
    }
    report.vertices = kinds_by_class.size();
    for (const auto& [root, kinds] : kinds_by_class) {
        if (kinds.contains(kCusp)) {
            ++report.cusp_vertices;
            if (kinds.size() != 1) {
                report.violations.push_back("a cusp is identified with an interior point");
            }
        } else if (kinds.contains(kI)) {
            ++report.elliptic2_vertices;
            if (kinds.size() != 1) {
                report.violations.push_back("an order-2 point is identified with an order-q point");
            }
        } else {
            ++report.elliptic_q_vertices;
        }
    }
    report.euler_characteristic = static_cast<std::int64_t>(report.vertices) -
                                  static_cast<std::int64_t>(report.boundary_pairs) + 1;
    if (report.euler_characteristic % 2 != 0) {
        report.violations.push_back("odd Euler characteristic");
    }
    report.genus = (2 - report.euler_characteristic) / 2;
    return report;
}

} // namespace hfmap
