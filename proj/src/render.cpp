#include "hfmap/render.hpp"

#include "hfmap/errors.hpp"
#include "hfmap/map_assembler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace hfmap {

namespace {

std::int64_t radicand(int q) {
    return q == 3 ? 1 : (q == 4 ? 2 : 3);
}

std::string num(double v) {
    if (std::abs(v) < 5e-4) {
        v = 0.0;
    }
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3f", v);
    return buf.data();
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string svg_open(double width, double height, std::string_view title) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
       << "  <title>" << xml_escape(title) << "</title>\n";
    return os.str();
}

struct Point {
    double x;
    double y;
};

// Boundary point of the disk for a real cusp under z -> (z - i)/(z + i).
Point disk_boundary(const Cusp& c, std::int64_t m) {
    if (c.infinite) {
        return {1.0, 0.0};
    }
    const double x = c.value(m);
    const double d = x * x + 1.0;
    return {(x * x - 1.0) / d, -2.0 * x / d};
}

std::string disk_path(const Geodesic& g, std::int64_t m, double centre, double radius) {
    const Point u = disk_boundary(g.a, m);
    const Point v = disk_boundary(g.b, m);
    const Point p1{centre + radius * u.x, centre - radius * u.y};
    const Point p2{centre + radius * v.x, centre - radius * v.y};
    const double cross_uv = u.x * v.y - u.y * v.x;
    std::string d = "M " + num(p1.x) + " " + num(p1.y) + " ";
    if (std::abs(cross_uv) < 1e-9) {
        return d + "L " + num(p2.x) + " " + num(p2.y);
    }
    const double dot = std::clamp(u.x * v.x + u.y * v.y, -1.0, 1.0);
    const double arc_radius = radius * std::tan(std::acos(dot) / 2.0);
    // The arc bulges towards the centre, so its own centre lies on the far side
    // of the chord; pick the sweep accordingly (screen coordinates, y down).
    const double chord_x = p2.x - p1.x;
    const double chord_y = p2.y - p1.y;
    const double side = chord_x * (centre - p1.y) - chord_y * (centre - p1.x);
    const int sweep = side < 0 ? 1 : 0;
    return d + "A " + num(arc_radius) + " " + num(arc_radius) + " 0 0 " + std::to_string(sweep) + " " +
           num(p2.x) + " " + num(p2.y);
}

std::string halfplane_path(const Geodesic& g, std::int64_t m, const RenderConfig& cfg, double scale,
                           double height) {
    const auto px = [&](double x) { return (x - cfg.x_min) * scale; };
    if (g.b.infinite || g.a.infinite) {
        const Cusp& finite = g.a.infinite ? g.b : g.a;
        const double x = px(finite.value(m));
        return "M " + num(x) + " " + num(height) + " L " + num(x) + " 0.000";
    }
    double a = g.a.value(m);
    double b = g.b.value(m);
    if (a > b) {
        std::swap(a, b);
    }
    const double r = (b - a) / 2.0 * scale;
    return "M " + num(px(a)) + " " + num(height) + " A " + num(r) + " " + num(r) + " 0 0 1 " + num(px(b)) + " " +
           num(height);
}

} // namespace

Geodesic make_geodesic(const Cusp& x, const Cusp& y) {
    if (x == y) {
        throw InvalidArgument("geodesic endpoints coincide");
    }
    return x < y ? Geodesic{x, y} : Geodesic{y, x};
}

std::set<Geodesic> universal_geodesics(int q, int depth) {
    if (depth < 0 || depth > kMaxRenderDepth) {
        throw ResourceLimit("render depth " + std::to_string(depth) + " outside 0.." +
                            std::to_string(kMaxRenderDepth));
    }
    const ExactGenerators gens = exact_generators(q);
    const std::int64_t m = radicand(q);
    std::set<ExactMatrix> seen{exact_identity()};
    std::vector<ExactMatrix> frontier{exact_identity()};
    std::set<Geodesic> out;
    const auto record = [&](const ExactMatrix& g) {
        out.insert(make_geodesic(cusp_ratio(g.e12, g.e22, m), cusp_ratio(g.e11, g.e21, m)));
    };
    record(exact_identity());
    for (int level = 0; level < depth; ++level) {
        std::vector<ExactMatrix> next;
        for (const ExactMatrix& g : frontier) {
            for (const ExactMatrix* gen : {&gens.S, &gens.T, &gens.T_inv}) {
                const ExactMatrix h = exact_sign_normalize(exact_mul(g, *gen, m));
                if (seen.insert(h).second) {
                    record(h);
                    next.push_back(h);
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::string render_universal(int q, const RenderConfig& cfg) {
    const auto geodesics = universal_geodesics(q, cfg.depth);
    const std::int64_t m = radicand(q);
    std::ostringstream os;
    const std::string title = "universal " + std::to_string(q) + "-gonal map, depth " + std::to_string(cfg.depth);
    if (cfg.model == Model::Disk) {
        const double size = cfg.width;
        const double centre = size / 2.0;
        const double radius = size / 2.0 - 10.0;
        os << svg_open(size, size, title);
        os << "  <circle cx=\"" << num(centre) << "\" cy=\"" << num(centre) << "\" r=\"" << num(radius)
           << "\" fill=\"none\" stroke=\"gray\"/>\n";
        os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"" << num(cfg.stroke_width) << "\">\n";
        for (const Geodesic& g : geodesics) {
            os << "    <path d=\"" << disk_path(g, m, centre, radius) << "\"/>\n";
        }
    } else {
        const double scale = cfg.width / (cfg.x_max - cfg.x_min);
        const double height = cfg.y_max * scale;
        os << svg_open(cfg.width, height, title);
        os << "  <g fill=\"none\" stroke=\"black\" stroke-width=\"" << num(cfg.stroke_width) << "\">\n";
        for (const Geodesic& g : geodesics) {
            os << "    <path d=\"" << halfplane_path(g, m, cfg, scale, height) << "\"/>\n";
        }
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

std::string render_quotient(const HeckeParams& p, GraphFormat format) {
    const CoordGraph graph = build_coordinate_graph(p);
    const NameTable* names = names_for(p);
    const auto label = [&](const HFCoord& u) { return names ? names->label(u) : to_string(u); };
    const std::string title = "M" + std::to_string(p.q) + "(" + std::to_string(p.n) + ")";
    std::ostringstream os;
    if (format == GraphFormat::Dot) {
        os << "graph \"" << title << "\" {\n";
        for (const HFCoord& u : graph.vertices) {
            os << "  \"" << label(u) << "\";\n";
        }
        for (auto [a, b] : graph.edges) {
            os << "  \"" << label(graph.vertices[a]) << "\" -- \"" << label(graph.vertices[b]) << "\";\n";
        }
        os << "}\n";
        return os.str();
    }

    const double size = 800.0;
    const double centre = size / 2.0;
    const std::size_t count = graph.vertices.size();
    // Kind A evenly on the outer ring, kind B evenly on the inner ring.
    std::array<std::size_t, 2> per_kind{};
    for (const HFCoord& u : graph.vertices) {
        ++per_kind[static_cast<std::size_t>(u.kind)];
    }
    std::array<std::size_t, 2> seen{};
    std::vector<Point> at;
    for (std::size_t i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(graph.vertices[i].kind);
        const double r = k == 0 ? 340.0 : 200.0;
        const double t = std::numbers::pi / 2.0 +
                         2.0 * std::numbers::pi * static_cast<double>(seen[k]++) / static_cast<double>(per_kind[k]);
        at.push_back({centre + r * std::cos(t), centre - r * std::sin(t)});
    }
    os << svg_open(size, size, title);
    os << "  <g stroke=\"black\" stroke-width=\"1\">\n";
    for (auto [a, b] : graph.edges) {
        os << "    <line x1=\"" << num(at[a].x) << "\" y1=\"" << num(at[a].y) << "\" x2=\"" << num(at[b].x)
           << "\" y2=\"" << num(at[b].y) << "\"/>\n";
    }
    os << "  </g>\n  <g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < count; ++i) {
        os << "    <circle cx=\"" << num(at[i].x) << "\" cy=\"" << num(at[i].y)
           << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n"
           << "    <text x=\"" << num(at[i].x + 6) << "\" y=\"" << num(at[i].y - 6) << "\">"
           << xml_escape(label(graph.vertices[i])) << "</text>\n";
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

std::string render_polygon(const BoundarySequence& b, const PairingTable& t, const SideAlignment& alignment) {
    const std::size_t sides = b.sides();
    if (t.sides() != sides) {
        throw InvalidArgument("pairing table has " + std::to_string(t.sides()) + " sides, polygon has " +
                              std::to_string(sides));
    }
    static constexpr std::array<const char*, 10> kColours = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                             "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    static constexpr std::array<const char*, 3> kDashes = {"none", "8 4", "2 3"};

    const NameTable* names = names_for(b.params);
    const auto label = [&](const HFCoord& u) { return names ? names->label(u) : to_string(u); };
    const auto corners = corner_labels(b, alignment);

    const double size = 800.0;
    const double centre = size / 2.0;
    const double radius = 320.0;
    std::vector<Point> corner_at;
    for (std::size_t k = 0; k < sides; ++k) {
        const double a = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * static_cast<double>(k) /
                                                      static_cast<double>(sides);
        corner_at.push_back({centre + radius * std::cos(a), centre - radius * std::sin(a)});
    }

    // Style index per pair, in order of the pair's smaller side.
    std::vector<std::size_t> style(sides + 1, 0);
    std::size_t next_style = 0;
    for (int k = 1; static_cast<std::size_t>(k) <= sides; ++k) {
        if (t.partner(k) > k) {
            style[k] = next_style;
            style[t.partner(k)] = next_style;
            ++next_style;
        }
    }

    std::ostringstream os;
    os << svg_open(size, size, std::to_string(sides) + "-gon with side pairings");
    os << "  <circle cx=\"" << num(centre) << "\" cy=\"" << num(centre) << "\" r=\"390\" fill=\"none\" "
       << "stroke=\"lightgray\"/>\n";
    os << "  <g stroke-width=\"3\" fill=\"none\">\n";
    for (std::size_t k = 1; k <= sides; ++k) {
        const Point& p1 = corner_at[k - 1];
        const Point& p2 = corner_at[k % sides];
        const std::size_t s = style[k];
        os << "    <line class=\"side\" data-side=\"" << k << "\" data-pair=\"" << s << "\" x1=\"" << num(p1.x)
           << "\" y1=\"" << num(p1.y) << "\" x2=\"" << num(p2.x) << "\" y2=\"" << num(p2.y) << "\" stroke=\""
           << kColours[s % kColours.size()] << "\" stroke-dasharray=\"" << kDashes[(s / kColours.size()) % 3]
           << "\"/>\n";
    }
    os << "  </g>\n  <g font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">\n";
    for (std::size_t k = 1; k <= sides; ++k) {
        const Point& c = corner_at[k - 1];
        const double ox = (c.x - centre) / radius;
        const double oy = (c.y - centre) / radius;
        os << "    <text class=\"corner\" data-corner=\"" << k << "\" x=\"" << num(c.x + 22 * ox) << "\" y=\""
           << num(c.y + 22 * oy + 4) << "\">" << xml_escape(label(corners[k - 1])) << "</text>\n";
    }
    for (std::size_t k = 1; k <= sides; ++k) {
        const Point& p1 = corner_at[k - 1];
        const Point& p2 = corner_at[k % sides];
        const Point mid{(p1.x + p2.x) / 2.0, (p1.y + p2.y) / 2.0};
        const double ox = (mid.x - centre);
        const double oy = (mid.y - centre);
        const double len = std::hypot(ox, oy);
        const std::size_t span =
            alignment.reversed ? (alignment.offset + sides - (k - 1)) % sides : (alignment.offset + k - 1) % sides;
        std::string interior;
        for (const HFCoord& u : b.span_interior(span)) {
            interior += (interior.empty() ? "" : " ") + label(u);
        }
        os << "    <text class=\"side-number\" data-side=\"" << k << "\" x=\"" << num(mid.x + 16 * ox / len)
           << "\" y=\"" << num(mid.y + 16 * oy / len + 4) << "\">" << k << "</text>\n";
        os << "    <text class=\"side-interior\" data-side=\"" << k << "\" font-size=\"10\" x=\""
           << num(mid.x - 22 * ox / len) << "\" y=\"" << num(mid.y - 22 * oy / len + 4) << "\">"
           << xml_escape(interior) << "</text>\n";
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

} // namespace hfmap
