#include "hfmap/acceptance.hpp"

#include "hfmap/coset_domain.hpp"
#include "hfmap/fixtures.hpp"
#include "hfmap/kernels.hpp"
#include "hfmap/map_assembler.hpp"
#include "hfmap/render.hpp"
#include "hfmap/xml_check.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <set>
#include <sstream>

namespace hfmap {

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        out += (out.empty() ? "" : "; ") + p;
    }
    return out;
}

std::string invariants_text(const MapInvariants& inv) {
    std::ostringstream os;
    os << "darts=" << inv.darts << " V=" << inv.vertices << " E=" << inv.edges << " F=" << inv.faces
       << " g=" << inv.genus;
    return os.str();
}

HFCoord named(const char* name) {
    return bring_names().resolve(name);
}

std::set<HFCoord> as_set(const std::vector<HFCoord>& v) {
    return {v.begin(), v.end()};
}

CriterionResult index_formula() {
    Check c;
    const auto i45 = parson_index({4, 5});
    const auto i43 = parson_index({4, 3});
    c.expect(i45 == 120, "index(4,5)=" + std::to_string(i45));
    c.expect(i43 == 24, "index(4,3)=" + std::to_string(i43));
    std::string orders;
    for (HeckeParams p : {HeckeParams{3, 5}, HeckeParams{4, 3}, HeckeParams{4, 5}, HeckeParams{4, 7},
                          HeckeParams{6, 5}}) {
        const auto order = enumerate_group(p).order();
        const auto index = parson_index(p);
        c.expect(order == index, p.to_string() + ": |G|=" + std::to_string(order) + " index=" + std::to_string(index));
        orders += (orders.empty() ? "" : " ") + p.to_string() + "=" + std::to_string(order);
    }
    return {1, "index formula", c.ok, c.ok ? orders : join(c.notes)};
}

CriterionResult bring_map() {
    Check c;
    const HeckeParams p{4, 5};
    const auto group = enumerate_group(p);
    const auto map = build_algebraic_map(group);
    const auto inv = compute_invariants(map);
    c.expect(inv.darts == 120 && inv.vertices == 24 && inv.edges == 60 && inv.faces == 30 && inv.genus == 4,
             invariants_text(inv));
    c.expect(inv.vertex_valency == 5u, "vertex valency is not uniformly 5");
    c.expect(inv.face_size == 4u, "faces are not all quadrilaterals");
    const auto graph = build_coordinate_graph(p);
    const auto report = correspondence_check(group, map, graph);
    c.expect(report.ok, "correspondence: " + join(report.violations));
    std::set<HFCoord> table;
    for (const auto& e : bring_names().entries()) {
        table.insert(e.coord);
    }
    c.expect(table.size() == 24 && table == as_set(graph.vertices), "name table differs from the coordinate set");
    return {2, "Bring's map {5,4}, genus 4", c.ok, c.ok ? invariants_text(inv) + ", 24 named vertices" : join(c.notes)};
}

CriterionResult cube() {
    Check c;
    const HeckeParams p{4, 3};
    const auto inv = compute_invariants(build_algebraic_map(enumerate_group(p)));
    c.expect(inv.vertices == 8 && inv.edges == 12 && inv.faces == 6 && inv.genus == 0, invariants_text(inv));
    const auto graph = build_coordinate_graph(p);
    std::set<HFCoord> listed;
    for (const auto& e : cube_names().entries()) {
        listed.insert(e.coord);
    }
    c.expect(listed.size() == 8 && listed == as_set(graph.vertices), "fraction list differs from coordinates");
    c.expect(graph.vertices.size() == 8 && graphs_isomorphic(8, graph.edges, cube_graph_edges()),
             "coordinate graph is not the cube graph");
    return {3, "cube M4(3)", c.ok, c.ok ? invariants_text(inv) + ", graph = Q3" : join(c.notes)};
}

CriterionResult icosahedron() {
    Check c;
    const HeckeParams p{3, 5};
    const auto inv = compute_invariants(build_algebraic_map(enumerate_group(p)));
    c.expect(inv.vertices == 12 && inv.edges == 30 && inv.faces == 20 && inv.genus == 0, invariants_text(inv));
    std::vector<HFCoord> listed;
    for (auto [a, cc] : fixtures::kIcosahedronFractions) {
        listed.push_back(normalize(Kind::A, a, cc, p));
    }
    std::size_t edges = 0;
    for (std::size_t i = 0; i < listed.size(); ++i) {
        for (std::size_t j = i + 1; j < listed.size(); ++j) {
            edges += adjacent(listed[i], listed[j], p) ? 1 : 0;
        }
    }
    c.expect(as_set(listed).size() == 12 && as_set(listed) == as_set(enumerate_coords(p)),
             "fraction list differs from coordinates");
    c.expect(edges == 30, "adjacency rule gives " + std::to_string(edges) + " edges");
    return {4, "icosahedron M3(5)", c.ok, c.ok ? invariants_text(inv) + ", 30 Farey edges" : join(c.notes)};
}

CriterionResult oracle_equivalence() {
    Check c;
    const auto oracle = s5_oracle();
    c.expect(oracle.group.order() == 120, "|<x,y>|=" + std::to_string(oracle.group.order()));
    c.expect(oracle.x.order() == 2 && oracle.y.order() == 5 && oracle.z.order() == 4, "generator orders");
    c.expect((oracle.x * oracle.y * oracle.z).is_identity(), "xyz != 1");
    const auto perm_map = permutation_model_map(oracle);
    const auto matrix_map = build_algebraic_map(enumerate_group({4, 5}));
    c.expect(is_isomorphic(perm_map, matrix_map), "rooted canonical forms differ");
    return {5, "S5 oracle equivalence", c.ok, c.ok ? "order 120, orders 2/5/4, maps isomorphic" : join(c.notes)};
}

CriterionResult circuit_boundary(const AcceptanceInputs& in) {
    Check c;
    const HeckeParams p{4, 5};
    const Circuit circuit = in.circuit.value_or(bring_circuit());
    c.expect(circuit.seq.size() == 12, "circuit length " + std::to_string(circuit.seq.size()));
    c.expect(validate_circuit(circuit, p), "circuit has a non-adjacent step");
    if (c.ok) {
        const auto b = boundary_from_circuit(circuit, p);
        c.expect(b.slots.size() == 60, "boundary has " + std::to_string(b.slots.size()) + " slots");
        const std::map<HFCoord, std::size_t> expected{{named("H2"), 5}, {named("C2"), 5}, {named("B1"), 10}};
        c.expect(pole_multiset(b) == expected, "pole multiset differs");
    }
    const auto shift = [&](const char* name) { return translation_orbit(named(name), p).at(1); };
    c.expect(shift("E1") == named("G1"), "E1 + lambda != G1");
    c.expect(shift("F2") == named("E2"), "F2 + lambda != E2");
    c.expect(translation_orbit(named("H2"), p).size() == 1, "H2 is not fixed by translation");
    return {6, "circuit and boundary", c.ok, c.ok ? "12-circuit valid, 60 slots, poles H2:5 C2:5 B1:10" : join(c.notes)};
}

CriterionResult pairing_genus(const AcceptanceInputs& in) {
    Check c;
    const PairingTable t = in.pairing.value_or(bring_pairing());
    c.expect(t.sides() == 20, "pairing has " + std::to_string(t.sides()) + " sides");
    c.expect(pairing_rule_check(t), "pairing violates the side rule");
    const auto matchings = rule_matchings(20);
    c.expect(matchings.size() == 1 && matchings.front() == t,
             std::to_string(matchings.size()) + " rule matchings, pairing is not the unique one");
    if (t.sides() == 20) {
        const auto part = vertex_classes(t);
        const std::vector<std::vector<int>> expected{
            {1, 3, 5, 7, 9, 11, 13, 15, 17, 19}, {2, 6, 10, 14, 18}, {4, 8, 12, 16, 20}};
        c.expect(part.classes == expected, std::to_string(part.classes.size()) + " corner classes, not the expected three");
        c.expect(part.vertices == 3 && part.edges == 10 && part.faces == 1 && part.genus == 4,
                 "V=" + std::to_string(part.vertices) + " E=" + std::to_string(part.edges) +
                     " g=" + std::to_string(part.genus));
    }
    return {7, "pairing and genus", c.ok, c.ok ? "unique rule matching, classes 10/5/5, 3-10+1=-6, g=4" : join(c.notes)};
}

CriterionResult side_labels() {
    Check c;
    const HeckeParams p{4, 5};
    const auto o1 = translation_orbit(named("F2"), p);
    const auto o2 = translation_orbit(named("K1"), p);
    const std::vector<HFCoord> e1{named("F2"), named("E2"), named("K2"), named("B2"), named("J2")};
    const std::vector<HFCoord> e2{named("K1"), named("I1"), named("H1"), named("L1"), named("J1")};
    c.expect(o1 == e1, "orbit of F2 differs");
    c.expect(o2 == e2, "orbit of K1 differs");
    const auto labels = bring_side_labels();
    std::map<HFCoord, std::size_t> mult;
    for (const auto& u : labels) {
        ++mult[u];
    }
    std::set<HFCoord> orbits(o1.begin(), o1.end());
    orbits.insert(o2.begin(), o2.end());
    std::set<HFCoord> distinct;
    for (const auto& [u, k] : mult) {
        distinct.insert(u);
        c.expect(k == 2, bring_names().label(u) + " appears " + std::to_string(k) + " times");
    }
    c.expect(labels.size() == 20, "expected 20 side labels");
    c.expect(orbits.size() == 10 && distinct == orbits, "distinct labels differ from the two orbits");
    return {8, "side label orbits", c.ok, c.ok ? "two orbits of 5, 10 labels each used twice" : join(c.notes)};
}

CriterionResult properties() {
    Check c;
    std::string summary;
    for (HeckeParams p : {HeckeParams{4, 3}, HeckeParams{4, 5}, HeckeParams{3, 5}, HeckeParams{4, 7},
                          HeckeParams{6, 5}}) {
        const auto group = enumerate_group(p);
        const auto coords = enumerate_coords(p);
        const auto adj = kernels::omp::adjacency_matrix(coords, p);
        const auto action = kernels::omp::action_table(group, coords);
        const auto bad = kernels::omp::equivariance_violations(action, adj, coords.size());
        c.expect(bad == 0, p.to_string() + ": " + std::to_string(bad) + " equivariance violations");
        const auto graph = build_coordinate_graph(p);
        if (p.q == 4) {
            c.expect(is_bipartite(graph), p.to_string() + ": graph not bipartite");
        }
        const auto map = build_algebraic_map(group);
        const auto corr = correspondence_check(group, map, graph);
        c.expect(corr.ok, p.to_string() + ": " + join(corr.violations));
        const auto inv = compute_invariants(map);
        const auto domain = coset_domain_check(group);
        c.expect(domain.ok(), p.to_string() + ": " + join(domain.violations));
        c.expect(domain.euler_characteristic == inv.euler_characteristic,
                 p.to_string() + ": domain chi " + std::to_string(domain.euler_characteristic) + " vs map chi " +
                     std::to_string(inv.euler_characteristic));
        summary += (summary.empty() ? "chi " : " ") + p.to_string() + "=" + std::to_string(inv.euler_characteristic);
    }
    return {9, "equivariance, bipartiteness, correspondence, domain", c.ok, c.ok ? summary : join(c.notes)};
}

CriterionResult rendering() {
    Check c;
    const Cusp inf = cusp_infinity();
    const Cusp zero = make_cusp(0, 0, 1);
    const Cusp inv_root = make_cusp(0, 1, 2);
    const Cusp root = make_cusp(0, 1, 1);
    const auto d2 = universal_geodesics(4, 2);
    std::set<Cusp> ends;
    for (const auto& g : d2) {
        ends.insert(g.a);
        ends.insert(g.b);
    }
    for (const Cusp& v : {inf, zero, inv_root, root}) {
        c.expect(ends.contains(v), "depth 2 misses vertex " + v.to_string(2));
    }
    const auto d3 = universal_geodesics(4, 3);
    for (const auto& e : {make_geodesic(inf, zero), make_geodesic(zero, inv_root), make_geodesic(inv_root, root),
                          make_geodesic(root, inf)}) {
        c.expect(d3.contains(e), "depth 3 misses edge " + e.a.to_string(2) + " -- " + e.b.to_string(2));
    }

    RenderConfig cfg;
    cfg.depth = 3;
    for (Model model : {Model::Disk, Model::HalfPlane}) {
        cfg.model = model;
        const auto svg = render_universal(4, cfg);
        const auto xml = check_xml(svg);
        c.expect(xml.ok && xml.root == "svg", "universal SVG: " + xml.error);
        c.expect(count_elements(svg, "path") == d3.size(), "path count differs from geodesic count");
        c.expect(svg == render_universal(4, cfg), "universal SVG not deterministic");
    }

    const std::vector<std::tuple<HeckeParams, std::size_t, std::size_t>> graphs{
        {{4, 5}, 24, 60}, {{4, 3}, 8, 12}, {{3, 5}, 12, 30}};
    for (const auto& [p, v, e] : graphs) {
        const auto dot = render_quotient(p, GraphFormat::Dot);
        std::size_t nodes = 0;
        std::size_t edges = 0;
        std::istringstream lines(dot);
        for (std::string line; std::getline(lines, line);) {
            if (line.find(" -- ") != std::string::npos) {
                ++edges;
            } else if (line.starts_with("  \"")) {
                ++nodes;
            }
        }
        c.expect(nodes == v && edges == e, p.to_string() + " DOT has " + std::to_string(nodes) + " nodes, " +
                                               std::to_string(edges) + " edges");
        c.expect(dot == render_quotient(p, GraphFormat::Dot), p.to_string() + " DOT not deterministic");
        const auto svg = render_quotient(p, GraphFormat::Svg);
        c.expect(check_xml(svg).ok, p.to_string() + " quotient SVG malformed");
    }

    const auto boundary = boundary_from_circuit(bring_circuit(), {4, 5});
    const auto report = side_label_analysis(boundary, bring_side_labels());
    const auto polygon = render_polygon(boundary, bring_pairing(), report.alignments.empty() ? SideAlignment{}
                                                                                            : report.alignments[0]);
    c.expect(check_xml(polygon).ok, "polygon SVG malformed: " + check_xml(polygon).error);
    c.expect(polygon == render_polygon(boundary, bring_pairing(),
                                       report.alignments.empty() ? SideAlignment{} : report.alignments[0]),
             "polygon SVG not deterministic");
    return {10, "rendering", c.ok,
            c.ok ? "principal face present, DOT counts exact, SVG well-formed and repeatable" : join(c.notes)};
}

CriterionResult guarded(int id, const std::string& title, const std::function<CriterionResult()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return {id, title, false, std::string("exception: ") + e.what()};
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceInputs& inputs) {
    return {
        guarded(1, "index formula", index_formula),
        guarded(2, "Bring's map {5,4}, genus 4", bring_map),
        guarded(3, "cube M4(3)", cube),
        guarded(4, "icosahedron M3(5)", icosahedron),
        guarded(5, "S5 oracle equivalence", oracle_equivalence),
        guarded(6, "circuit and boundary", [&] { return circuit_boundary(inputs); }),
        guarded(7, "pairing and genus", [&] { return pairing_genus(inputs); }),
        guarded(8, "side label orbits", side_labels),
        guarded(9, "equivariance, bipartiteness, correspondence, domain", properties),
        guarded(10, "rendering", rendering),
    };
}

std::string format_results(const std::vector<CriterionResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << (r.id < 10 ? " " : "") << r.id << "  " << r.title << "  ("
           << r.detail << ")\n";
    }
    return os.str();
}

nlohmann::ordered_json results_json(const std::vector<CriterionResult>& results) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    return {{"passed", all_passed(results)}, {"criteria", arr}};
}

} // namespace hfmap
