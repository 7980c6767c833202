// hfmap: command-line front end for the Hecke-Farey map library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "hfmap/acceptance.hpp"
#include "hfmap/coset_domain.hpp"
#include "hfmap/errors.hpp"
#include "hfmap/map_assembler.hpp"
#include "hfmap/polygon_lab.hpp"
#include "hfmap/render.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

using namespace hfmap;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
    int q = 4;
    std::uint32_t n = 5;
    bool json = false;
    std::string out;

    bool check = false;
    bool names = false;
    bool poles_only = false;

    std::string verify;
    bool search = false;
    bool list = false;
    bool boundary = false;
    std::string start = "H2";
    std::size_t length = 12;
    std::vector<std::size_t> pole_positions{0, 3, 6, 9};

    bool classes = false;
    bool genus = false;
    bool rule_check = false;
    bool labels = false;
    std::string pairing_file;
    std::string circuit_text;

    std::string what = "universal";
    std::string model = "disk";
    int depth = 4;
    std::string format = "svg";
};

std::size_t group_bound() {
    if (const char* env = std::getenv("HFMAP_MAX_GROUP")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string_view(env).size() && v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
        }
        throw InvalidArgument(std::string("HFMAP_MAX_GROUP must be a positive integer, got '") + env + "'");
    }
    return kDefaultGroupBound;
}

HeckeParams params_of(const Options& o) {
    HeckeParams p{o.q, o.n};
    p.validate();
    return p;
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot open output file " + o.out);
    }
    f << text;
    if (!f) {
        throw InvalidArgument("failed writing " + o.out);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw InvalidArgument("cannot read " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

PairingTable load_pairing(const Options& o) {
    return o.pairing_file.empty() ? bring_pairing() : parse_pairing(read_file(o.pairing_file));
}

// "builtin", a file holding a circuit, or an inline comma-separated circuit.
Circuit load_circuit(const std::string& source) {
    if (source.empty() || source == "builtin") {
        return bring_circuit();
    }
    std::string text = source;
    if (std::filesystem::is_regular_file(source)) {
        text = read_file(source);
    }
    std::string flat;
    for (char c : text) {
        flat += (c == '\n' || c == '\r') ? ',' : c;
    }
    while (!flat.empty() && (flat.back() == ',' || flat.back() == ' ')) {
        flat.pop_back();
    }
    return parse_circuit(flat, bring_names());
}

std::string label(const HFCoord& u, const HeckeParams& p) {
    const NameTable* names = names_for(p);
    return names ? names->label(u) : to_string(u);
}

int cmd_index(const Options& o) {
    const HeckeParams p = params_of(o);
    const auto index = parson_index(p);
    std::cout << index << '\n';
    if (!o.check) {
        return kOk;
    }
    const auto order = enumerate_group(p, group_bound()).order();
    if (order != index) {
        std::cout << "check FAILED: enumerated order " << order << '\n';
        return kFailed;
    }
    std::cout << "check OK: enumerated order " << order << '\n';
    return kOk;
}

int cmd_map(const Options& o) {
    const HeckeParams p = params_of(o);
    const auto group = enumerate_group(p, group_bound());
    const auto map = build_algebraic_map(group);
    const MapReport report = map_report(group, map);
    const MapInvariants& inv = report.invariants;

    std::vector<std::string> problems;
    if (static_cast<std::int64_t>(inv.vertices) - static_cast<std::int64_t>(inv.edges) +
            static_cast<std::int64_t>(inv.faces) !=
        2 - 2 * inv.genus) {
        problems.push_back("Euler relation violated");
    }
    if (inv.vertex_valency != o.n || inv.face_size != static_cast<std::size_t>(o.q)) {
        problems.push_back("vertex valency or face size differs from (n, q)");
    }
    const auto domain = coset_domain_check(group);
    if (!domain.ok() || domain.euler_characteristic != inv.euler_characteristic) {
        problems.push_back("coset domain disagrees with the map");
    }
    if (o.n % 2 == 1) {
        const auto corr = correspondence_check(group, map, build_coordinate_graph(p));
        if (!corr.ok) {
            problems.push_back("coordinate correspondence failed");
        }
    }
    if (automorphism_count(map) != group.order()) {
        problems.push_back("automorphism count differs from the group order");
    }

    if (o.json) {
        emit(o, to_json(report).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << p.to_string() << '\n'
           << "group order   " << report.group_order << '\n'
           << "darts         " << inv.darts << '\n'
           << "vertices      " << inv.vertices << " (valency " << inv.vertex_valency.value_or(0) << ")\n"
           << "edges         " << inv.edges << '\n'
           << "faces         " << inv.faces << " (size " << inv.face_size.value_or(0) << ")\n"
           << "euler char    " << inv.euler_characteristic << '\n'
           << "genus         " << inv.genus << '\n';
        if (p == HeckeParams{4, 5}) {
            os << "note: " << inv.vertices << " vertices of valency 5 and " << inv.faces
               << " quadrilateral faces; 30 vertices with 24 faces would describe the dual map\n";
        }
        emit(o, os.str());
    }
    for (const auto& why : problems) {
        std::cerr << "cross-check FAILED: " << why << '\n';
    }
    return problems.empty() ? kOk : kFailed;
}

int cmd_coords(const Options& o) {
    const HeckeParams p = params_of(o);
    const std::vector<HFCoord> list = o.poles_only ? poles(p) : enumerate_coords(p);
    const NameTable* names = names_for(p);
    std::ostringstream os;
    if (o.names && names) {
        // Name-table order.
        for (const auto& e : names->entries()) {
            if (o.poles_only && !is_pole(e.coord)) {
                continue;
            }
            os << e.name << '\t' << printed_form(e.printed, p) << '\t' << to_string(e.coord) << '\n';
        }
    } else {
        for (const HFCoord& u : list) {
            os << to_string(u);
            if (names) {
                os << '\t' << names->label(u);
            }
            os << '\n';
        }
    }
    emit(o, os.str());
    return kOk;
}

int cmd_circuit(const Options& o) {
    const HeckeParams p{4, 5};
    if (o.search) {
        const HFCoord start = bring_names().resolve(o.start);
        const std::set<std::size_t> positions(o.pole_positions.begin(), o.pole_positions.end());
        const auto found = search_circuits(start, o.length, positions, p);
        std::ostringstream os;
        os << found.size() << " closed walks\n";
        if (o.list) {
            for (const auto& c : found) {
                os << format_circuit(c, bring_names()) << '\n';
            }
        }
        emit(o, os.str());
        return kOk;
    }
    const Circuit c = load_circuit(o.verify);
    std::ostringstream os;
    bool ok = true;
    for (std::size_t i = 0; i < c.seq.size(); ++i) {
        const HFCoord& u = c.seq[i];
        const HFCoord& v = c.seq[(i + 1) % c.seq.size()];
        if (!adjacent(u, v, p)) {
            os << "not adjacent: " << label(u, p) << " -> " << label(v, p) << '\n';
            ok = false;
        }
    }
    if (c.seq.empty()) {
        os << "empty circuit\n";
        ok = false;
    }
    if (ok && o.boundary) {
        const auto b = boundary_from_circuit(c, p);
        os << "boundary " << b.slots.size() << " slots, " << b.sides() << " sides\n";
        for (std::size_t i = 0; i < b.slots.size(); ++i) {
            os << i << '\t' << label(b.slots[i], p) << (is_pole(b.slots[i]) ? "\tpole" : "") << '\n';
        }
        for (const auto& [u, k] : pole_multiset(b)) {
            os << "pole " << label(u, p) << " x" << k << '\n';
        }
    }
    os << format_circuit(c, bring_names()) << '\n' << (ok ? "OK" : "FAILED") << '\n';
    emit(o, os.str());
    return ok ? kOk : kFailed;
}

int cmd_polygon(const Options& o) {
    const HeckeParams p{4, 5};
    const PairingTable t = load_pairing(o);
    const bool all = !(o.classes || o.genus || o.rule_check || o.labels);
    bool ok = true;
    std::ostringstream os;
    if (all || o.rule_check) {
        const bool rule = pairing_rule_check(t);
        const auto matchings = rule_matchings(t.sides());
        const bool unique = matchings.size() == 1 && matchings.front() == t;
        os << "rule check: " << (rule ? "OK" : "FAILED") << '\n'
           << "matchings satisfying the rule: " << matchings.size() << (unique ? " (this pairing)" : "") << '\n';
        ok = ok && rule && unique;
    }
    if (all || o.classes || o.genus) {
        const auto part = vertex_classes(t);
        if (all || o.classes) {
            for (const auto& cls : part.classes) {
                os << "class (" << cls.size() << "):";
                for (int k : cls) {
                    os << " a" << k;
                }
                os << '\n';
            }
        }
        if (all || o.genus) {
            os << "V=" << part.vertices << " E=" << part.edges << " F=" << part.faces
               << " chi=" << part.euler_characteristic << " genus=" << part.genus << '\n';
        }
    }
    if (all || o.labels) {
        const auto b = boundary_from_circuit(load_circuit(o.circuit_text), p);
        const auto labels = bring_side_labels();
        const auto report = side_label_analysis(b, labels);
        for (const auto& orbit : report.label_orbits) {
            os << "orbit:";
            for (const auto& u : orbit) {
                os << ' ' << label(u, p);
            }
            os << '\n';
        }
        os << "every label twice: " << (report.every_label_twice ? "yes" : "no") << '\n'
           << "labels are the orbit union: " << (report.labels_are_orbit_union ? "yes" : "no") << '\n'
           << "translation equivariant: " << (report.translation_equivariant ? "yes" : "no") << '\n';
        for (const auto& a : report.alignments) {
            os << "alignment: side k on span (" << a.offset << (a.reversed ? " - " : " + ") << "(k-1)) mod "
               << b.sides() << '\n';
        }
        const bool derived = pairing_from_side_labels(labels) == t;
        os << "pairing from equal side labels: " << (derived ? "matches" : "differs") << '\n';
        bool consistent = false;
        if (!report.alignments.empty()) {
            const auto corners = corner_labels(b, report.alignments.front());
            consistent = corner_labels_consistent(vertex_classes(t), corners);
            os << "corner labels:";
            for (const auto& u : corners) {
                os << ' ' << label(u, p);
            }
            os << '\n';
        }
        os << "corner labels constant on classes: " << (consistent ? "yes" : "no") << '\n';
        ok = ok && report.every_label_twice && report.labels_are_orbit_union && report.translation_equivariant &&
             report.alignments.size() == 1 && derived && consistent;
    }
    emit(o, os.str());
    return ok ? kOk : kFailed;
}

int cmd_render(const Options& o) {
    if (o.what == "universal") {
        if (o.q != 3 && o.q != 4 && o.q != 6) {
            throw InvalidArgument("q must be 3, 4 or 6");
        }
        RenderConfig cfg;
        cfg.model = o.model == "halfplane" ? Model::HalfPlane : Model::Disk;
        cfg.depth = o.depth;
        emit(o, render_universal(o.q, cfg));
        return kOk;
    }
    if (o.what == "quotient") {
        emit(o, render_quotient(params_of(o), o.format == "dot" ? GraphFormat::Dot : GraphFormat::Svg));
        return kOk;
    }
    const HeckeParams p{4, 5};
    const auto b = boundary_from_circuit(load_circuit(o.circuit_text), p);
    const auto report = side_label_analysis(b, bring_side_labels());
    emit(o, render_polygon(b, load_pairing(o), report.alignments.empty() ? SideAlignment{} : report.alignments[0]));
    return kOk;
}

int cmd_domain(const Options& o) {
    const HeckeParams p = params_of(o);
    const auto group = enumerate_group(p, group_bound());
    const auto r = coset_domain_check(group);
    const auto inv = compute_invariants(build_algebraic_map(group));
    std::ostringstream os;
    os << p.to_string() << '\n'
       << "copies            " << r.copies << '\n'
       << "tree gluings      " << r.tree_gluings << '\n'
       << "side pairs        " << r.boundary_pairs << '\n'
       << "congruent pairs   " << r.congruent_pairings << '\n'
       << "vertices          " << r.vertices << " (cusps " << r.cusp_vertices << ", order 2: " << r.elliptic2_vertices
       << ", order " << p.q << ": " << r.elliptic_q_vertices << ")\n"
       << "euler char        " << r.euler_characteristic << " (map: " << inv.euler_characteristic << ")\n"
       << "genus             " << r.genus << '\n';
    for (const auto& v : r.violations) {
        os << "violation: " << v << '\n';
    }
    const bool ok = r.ok() && r.euler_characteristic == inv.euler_characteristic;
    os << (ok ? "OK" : "FAILED") << '\n';
    emit(o, os.str());
    return ok ? kOk : kFailed;
}

int cmd_verify(const Options& o) {
    AcceptanceInputs in;
    if (!o.pairing_file.empty()) {
        in.pairing = load_pairing(o);
    }
    if (!o.circuit_text.empty()) {
        in.circuit = load_circuit(o.circuit_text);
    }
    const auto results = run_acceptance(in);
    emit(o, o.json ? results_json(results).dump(2) + "\n" : format_results(results));
    return all_passed(results) ? kOk : kFailed;
}

void add_qn(CLI::App* cmd, Options& o) {
    cmd->add_option("--q", o.q, "Hecke group parameter (3, 4 or 6)")->check(CLI::IsMember({3, 4, 6}));
    cmd->add_option("--n", o.n, "modulus (n >= 3)")->check(CLI::Range(3u, 1000000u));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hecke-Farey coordinates and regular maps modulo n"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hfmap 1.0.0");
    Options o;
    std::function<int(const Options&)> run;

    auto* index = app.add_subcommand("index", "index of the principal congruence subgroup");
    add_qn(index, o);
    index->add_flag("--check", o.check, "also enumerate the group and compare");
    index->callback([&] { run = cmd_index; });

    auto* map = app.add_subcommand("map", "vertices, edges, faces and genus of M_q(n)");
    add_qn(map, o);
    map->add_flag("--json", o.json, "emit JSON");
    map->add_option("--out", o.out, "output file");
    map->callback([&] { run = cmd_map; });

    auto* coords = app.add_subcommand("coords", "Hecke-Farey coordinates modulo n");
    add_qn(coords, o);
    coords->add_flag("--names", o.names, "print the name table where one exists");
    coords->add_flag("--poles", o.poles_only, "only coordinates with denominator 0");
    coords->add_option("--out", o.out, "output file");
    coords->callback([&] { run = cmd_coords; });

    auto* circuit = app.add_subcommand("circuit", "Farey circuits on M_4(5)");
    auto* verify_opt = circuit->add_option("--verify", o.verify, "'builtin' (default), a file, or a comma-separated circuit");
    auto* search_flag = circuit->add_flag("--search", o.search, "enumerate closed walks");
    verify_opt->excludes(search_flag);
    circuit->add_flag("--boundary", o.boundary, "with --verify, print the translated boundary");
    circuit->add_flag("--list", o.list, "with --search, print every walk");
    circuit->add_option("--start", o.start, "start vertex for --search");
    circuit->add_option("--length", o.length, "walk length for --search");
    circuit->add_option("--poles", o.pole_positions, "pole positions for --search")->delimiter(',');
    circuit->add_option("--out", o.out, "output file");
    circuit->callback([&] { run = cmd_circuit; });

    auto* polygon = app.add_subcommand("polygon", "the 20-gon: side pairings, corner classes, genus");
    polygon->add_flag("--classes", o.classes, "corner equivalence classes");
    polygon->add_flag("--genus", o.genus, "V, E, F and genus of the glued surface");
    polygon->add_flag("--rule-check", o.rule_check, "check the side rule and uniqueness");
    polygon->add_flag("--labels", o.labels, "side label analysis");
    polygon->add_option("--pairing", o.pairing_file, "pairing table file")->check(CLI::ExistingFile);
    polygon->add_option("--circuit", o.circuit_text, "circuit generating the boundary");
    polygon->add_option("--out", o.out, "output file");
    polygon->callback([&] { run = cmd_polygon; });

    auto* render = app.add_subcommand("render", "SVG or DOT drawings");
    render->add_option("what", o.what, "universal, quotient or polygon")
        ->check(CLI::IsMember({"universal", "quotient", "polygon"}));
    add_qn(render, o);
    render->add_option("--model", o.model, "disk or halfplane")->check(CLI::IsMember({"disk", "halfplane"}));
    render->add_option("--depth", o.depth, "maximum word length")->check(CLI::Range(0, kMaxRenderDepth));
    render->add_option("--format", o.format, "svg or dot (quotient only)")->check(CLI::IsMember({"svg", "dot"}));
    render->add_option("--pairing", o.pairing_file, "pairing table file (polygon)")->check(CLI::ExistingFile);
    render->add_option("--circuit", o.circuit_text, "circuit generating the boundary (polygon)");
    render->add_option("--out", o.out, "output file");
    render->callback([&] { run = cmd_render; });

    auto* domain = app.add_subcommand("domain", "coset fundamental domain check");
    add_qn(domain, o);
    domain->add_option("--out", o.out, "output file");
    domain->callback([&] { run = cmd_domain; });

    auto* verify = app.add_subcommand("verify", "run every acceptance check");
    verify->add_flag("--json", o.json, "emit JSON");
    verify->add_option("--pairing", o.pairing_file, "pairing table file")->check(CLI::ExistingFile);
    verify->add_option("--circuit", o.circuit_text, "circuit file or comma-separated circuit");
    verify->add_option("--out", o.out, "output file");
    verify->callback([&] { run = cmd_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        return run(o);
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kFailed;
    } catch (const CorruptElement& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kFailed;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
}
