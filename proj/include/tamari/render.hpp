#pragma once

// SVG drawings of meandering diagrams, smooth drawings and blossoming trees.
// Axis points are spaced `unit` apart; upper arcs are blue, lower arcs red.

#include <string>
#include <vector>

#include "tamari/blossoming.hpp"
#include "tamari/intervals.hpp"
#include "tamari/meandering.hpp"

namespace tamari {

struct Style {
    double unit = 40;
    double margin = 20;
    double point_radius = 4;
    double bud_length = 14;
    std::string upper_color = "#1f5fd6";
    std::string lower_color = "#d62a2a";
};

struct ArcShape {
    double left;    ///< x of the left endpoint
    double right;   ///< x of the right endpoint
    bool upper;     ///< drawn above the axis
};

struct Figure {
    std::string svg;
    double width = 0;
    double height = 0;
    std::vector<ArcShape> arcs;  ///< every emitted arc, in emission order
};

Figure render_meandering(const MeanderingDiagram& m, const Style& style = {});
/// Upper tree above the axis, lower tree below, leaves at 0..n.
Figure render_smooth(const TamariInterval& interval, const Style& style = {});
/// delta(b) layout with buds drawn as arrows along the axis.
Figure render_blossoming(const BlossomingTree& b, const Style& style = {});

/// No two arcs meet except at shared endpoints (semicircles on one side
/// intersect iff their spans interleave strictly).
bool arcs_disjoint(const Figure& f);

}  // namespace tamari
