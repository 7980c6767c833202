#include "hfmap/errors.hpp"
#include "hfmap/render.hpp"
#include "hfmap/xml_check.hpp"

#include "doctest.h"

#include <cmath>
#include <regex>
#include <set>
#include <sstream>

using namespace hfmap;

namespace {

const Cusp kInf = cusp_infinity();
const Cusp kZero = make_cusp(0, 0, 1);
const Cusp kInvRoot2 = make_cusp(0, 1, 2);
const Cusp kRoot2 = make_cusp(0, 1, 1);

std::set<Cusp> endpoints(const std::set<Geodesic>& gs) {
    std::set<Cusp> out;
    for (const auto& g : gs) {
        out.insert(g.a);
        out.insert(g.b);
    }
    return out;
}

std::vector<std::string> path_data(const std::string& svg) {
    std::vector<std::string> out;
    const std::regex re("<path d=\"([^\"]*)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
        out.push_back((*it)[1]);
    }
    return out;
}

std::pair<std::size_t, std::size_t> dot_counts(const std::string& dot) {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
        if (line.find(" -- ") != std::string::npos) {
            ++edges;
        } else if (line.starts_with("  \"")) {
            ++nodes;
        }
    }
    return {nodes, edges};
}

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) {
        ++n;
    }
    return n;
}

} // namespace

TEST_CASE("depth 0 is the imaginary axis") {
    const auto gs = universal_geodesics(4, 0);
    REQUIRE(gs.size() == 1);
    CHECK(*gs.begin() == make_geodesic(kZero, kInf));
}

TEST_CASE("geodesic endpoints are ordered and distinct") {
    CHECK(make_geodesic(kInf, kZero) == make_geodesic(kZero, kInf));
    CHECK_THROWS_AS(make_geodesic(kZero, kZero), InvalidArgument);
}

TEST_CASE("the principal face appears") {
    const auto d2 = endpoints(universal_geodesics(4, 2));
    for (const Cusp& v : {kInf, kZero, kInvRoot2, kRoot2}) {
        CHECK(d2.contains(v));
    }
    const auto d3 = universal_geodesics(4, 3);
    CHECK(d3.contains(make_geodesic(kInf, kZero)));
    CHECK(d3.contains(make_geodesic(kZero, kInvRoot2)));
    CHECK(d3.contains(make_geodesic(kInvRoot2, kRoot2)));
    CHECK(d3.contains(make_geodesic(kRoot2, kInf)));
    // The edge from 1/sqrt2 to sqrt2 needs a word of length three.
    CHECK_FALSE(universal_geodesics(4, 2).contains(make_geodesic(kInvRoot2, kRoot2)));
}

TEST_CASE("edge count grows strictly with depth") {
    for (int q : {3, 4, 6}) {
        std::size_t previous = 0;
        for (int depth = 0; depth <= 7; ++depth) {
            const std::size_t now = universal_geodesics(q, depth).size();
            CHECK(now > previous);
            previous = now;
        }
    }
}

TEST_CASE("modular group at depth 1: the axis and its translates") {
    const auto gs = universal_geodesics(3, 1);
    CHECK(gs.contains(make_geodesic(make_cusp(1, 0, 1), kInf)));
    CHECK(gs.contains(make_geodesic(make_cusp(-1, 0, 1), kInf)));
    CHECK(gs.size() == 3); // S fixes the axis
}

TEST_CASE("depth bound") {
    CHECK_THROWS_AS(universal_geodesics(4, kMaxRenderDepth + 1), ResourceLimit);
    CHECK_THROWS_AS(universal_geodesics(4, -1), ResourceLimit);
    CHECK_THROWS_AS(universal_geodesics(5, 1), InvalidArgument);
}

TEST_CASE("universal SVG: well-formed, one path per geodesic, no duplicates, repeatable") {
    for (int q : {3, 4, 6}) {
        for (Model model : {Model::Disk, Model::HalfPlane}) {
            RenderConfig cfg;
            cfg.model = model;
            cfg.depth = 4;
            const std::string svg = render_universal(q, cfg);
            const auto xml = check_xml(svg);
            CHECK(xml.ok);
            CHECK(xml.root == "svg");
            const auto paths = path_data(svg);
            CHECK(paths.size() == universal_geodesics(q, 4).size());
            CHECK(svg == render_universal(q, cfg));
        }
    }
}

TEST_CASE("disk arcs are orthogonal to the boundary circle") {
    RenderConfig cfg;
    cfg.depth = 3;
    const std::string svg = render_universal(4, cfg);
    const double centre = cfg.width / 2.0;
    const double radius = cfg.width / 2.0 - 10.0;
    const std::regex arc(R"(M (\S+) (\S+) A (\S+) \S+ 0 0 ([01]) (\S+) (\S+))");
    std::size_t arcs = 0;
    for (const auto& d : path_data(svg)) {
        std::smatch m;
        if (!std::regex_match(d, m, arc)) {
            continue;
        }
        ++arcs;
        const double x1 = std::stod(m[1]), y1 = std::stod(m[2]), r = std::stod(m[3]);
        const int sweep = std::stoi(m[4]);
        const double x2 = std::stod(m[5]), y2 = std::stod(m[6]);
        // Centre of the minor arc per the SVG endpoint parameterization.
        const double mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
        const double dx = x2 - x1, dy = y2 - y1;
        const double half = std::hypot(dx, dy) / 2;
        const double h = std::sqrt(std::max(0.0, r * r - half * half));
        const double nx = -dy / (2 * half), ny = dx / (2 * half);
        // Large-arc 0 with sweep 1 puts the centre on the left of the chord (screen coordinates).
        const double sign = sweep == 1 ? 1.0 : -1.0;
        const double cx = mx + sign * h * nx, cy = my + sign * h * ny;
        const double dist2 = (cx - centre) * (cx - centre) + (cy - centre) * (cy - centre);
        CHECK(dist2 == doctest::Approx(radius * radius + r * r).epsilon(0.01));
    }
    CHECK(arcs > 10);
}

TEST_CASE("quotient exports carry the coordinate graph") {
    const std::vector<std::tuple<HeckeParams, std::size_t, std::size_t>> cases{
        {{4, 5}, 24, 60}, {{4, 3}, 8, 12}, {{3, 5}, 12, 30}, {{6, 5}, 24, 60}};
    for (const auto& [p, v, e] : cases) {
        const auto dot = render_quotient(p, GraphFormat::Dot);
        CHECK(dot.starts_with("graph "));
        CHECK(dot_counts(dot) == std::pair{v, e});
        const auto svg = render_quotient(p, GraphFormat::Svg);
        CHECK(check_xml(svg).ok);
        CHECK(count_elements(svg, "line") == e);
        CHECK(count_elements(svg, "circle") == v);
    }
    CHECK(render_quotient({4, 5}, GraphFormat::Dot).find("\"D1\" -- \"H2\"") != std::string::npos);
    CHECK_THROWS_AS(render_quotient({4, 6}, GraphFormat::Dot), InvalidArgument);
}

TEST_CASE("polygon drawing") {
    const auto b = boundary_from_circuit(bring_circuit(), {4, 5});
    const auto report = side_label_analysis(b, bring_side_labels());
    REQUIRE(report.alignments.size() == 1);
    const std::string svg = render_polygon(b, bring_pairing(), report.alignments[0]);
    const auto xml = check_xml(svg);
    CHECK(xml.ok);
    CHECK(count(svg, "class=\"corner\"") == 20);
    CHECK(count(svg, "class=\"side\"") == 20);
    CHECK(count(svg, "class=\"side-number\"") == 20);
    CHECK(count(svg, ">H2</text>") == 5);
    CHECK(count(svg, ">B1</text>") == 10);
    CHECK(count(svg, ">C2</text>") == 5);
    std::set<std::string> styles;
    const std::regex pair_re("data-pair=\"(\\d+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), pair_re); it != std::sregex_iterator(); ++it) {
        styles.insert((*it)[1]);
    }
    CHECK(styles.size() == 10);
    // Styles are numbered by smaller side: 1-18 first, then 2-5.
    CHECK(svg.find("data-side=\"1\" data-pair=\"0\"") != std::string::npos);
    CHECK(svg.find("data-side=\"18\" data-pair=\"0\"") != std::string::npos);
    CHECK(svg.find("data-side=\"2\" data-pair=\"1\"") != std::string::npos);
    CHECK(svg.find("data-side=\"5\" data-pair=\"1\"") != std::string::npos);
    CHECK_THROWS_AS(render_polygon(b, PairingTable({{1, 2}})), InvalidArgument);
}

TEST_CASE("xml checker") {
    CHECK(check_xml("<a><b x=\"1\"/>t &amp; &#38; &#x26;</a>").ok);
    CHECK(check_xml("<?xml version=\"1.0\"?>\n<!-- c --><a/>\n").ok);
    CHECK_FALSE(check_xml("<a><b></a></b>").ok);
    CHECK_FALSE(check_xml("<a/><b/>").ok);
    CHECK_FALSE(check_xml("<a x=1/>").ok);
    CHECK_FALSE(check_xml("<a x=\"1\" x=\"2\"/>").ok);
    CHECK_FALSE(check_xml("<a>&bogus;</a>").ok);
    CHECK_FALSE(check_xml("<a>").ok);
    CHECK_FALSE(check_xml("text").ok);
    CHECK_FALSE(check_xml("").ok);
    CHECK(count_elements("<g><path/><path d=\"\"/><pathx/></g>", "path") == 2);
}
