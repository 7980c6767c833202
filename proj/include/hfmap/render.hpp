#pragma once

// SVG and DOT output. Identity and deduplication decisions are exact; floating
// point appears only when projecting to drawing coordinates.

#include "hfmap/exact_ring.hpp"
#include "hfmap/farey_coords.hpp"
#include "hfmap/polygon_lab.hpp"

#include <set>
#include <string>
#include <vector>

namespace hfmap {

// Image of the imaginary axis; endpoints ordered a < b as exact tuples.
struct Geodesic {
    Cusp a;
    Cusp b;

    friend bool operator==(const Geodesic&, const Geodesic&) = default;
    friend auto operator<=>(const Geodesic&, const Geodesic&) = default;
};

Geodesic make_geodesic(const Cusp& x, const Cusp& y);

enum class Model { HalfPlane, Disk };

struct RenderConfig {
    Model model = Model::Disk;
    int depth = 4;
    double width = 800.0;
    // Half-plane viewport: real part in [x_min, x_max], imaginary part in [0, y_max].
    double x_min = -3.0;
    double x_max = 3.0;
    double y_max = 2.0;
    double stroke_width = 1.0;
};

inline constexpr int kMaxRenderDepth = 12;

// Distinct images of the imaginary axis under words of length <= depth in
// {S, T, T^-1}. Throws ResourceLimit when depth exceeds kMaxRenderDepth.
std::set<Geodesic> universal_geodesics(int q, int depth);

std::string render_universal(int q, const RenderConfig& cfg);

enum class GraphFormat { Svg, Dot };

// Coordinate graph of M_q(n) with name-table labels where available. Rejects even n.
std::string render_quotient(const HeckeParams& p, GraphFormat format);

// Schematic regular polygon: corners carry pole labels, sides are numbered and
// show their interior labels, paired sides share a stroke style.
std::string render_polygon(const BoundarySequence& b, const PairingTable& t, const SideAlignment& alignment = {});

} // namespace hfmap
