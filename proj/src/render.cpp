#include "tamari/render.hpp"

#include <algorithm>
#include <cstdio>

namespace tamari {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

struct Canvas {
    const Style& style;
    int points;  // axis positions 0..points-1
    std::vector<ArcShape> arcs;
    std::vector<std::string> colors;
    std::vector<std::pair<int, bool>> dots;  // (position, black)
    std::vector<std::pair<int, int>> buds;   // (position, direction)

    double x(double pos) const { return style.margin + style.unit * pos; }

    void arc(int from, int to, bool upper, const std::string& color) {
        arcs.push_back({x(std::min(from, to)), x(std::max(from, to)), upper});
        colors.push_back(color);
    }
};

Figure finish(const Canvas& c) {
    const Style& s = c.style;
    double up_r = 0;
    double lo_r = 0;
    for (const ArcShape& a : c.arcs) {
        double& r = a.upper ? up_r : lo_r;
        r = std::max(r, (a.right - a.left) / 2);
    }
    Figure f;
    f.width = 2 * s.margin + s.unit * std::max(c.points - 1, 0);
    f.height = 2 * s.margin + up_r + lo_r;
    f.arcs = c.arcs;
    const std::string axis = num(s.margin + up_r);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(f.width) + "\" height=\"" + num(f.height) +
           "\" viewBox=\"0 0 " + num(f.width) + " " + num(f.height) + "\">\n";
    if (!c.buds.empty()) {
        svg += "<defs><marker id=\"bud\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
               "markerHeight=\"6\" orient=\"auto\"><path d=\"M0 0 L10 5 L0 10 z\" fill=\"#333\"/></marker></defs>\n";
    }
    svg += "<g fill=\"none\" stroke-width=\"2\">\n";
    for (std::size_t i = 0; i < c.arcs.size(); ++i) {
        const ArcShape& a = c.arcs[i];
        const std::string r = num((a.right - a.left) / 2);
        svg += "<path class=\"arc " + std::string(a.upper ? "upper" : "lower") + "\" stroke=\"" + c.colors[i] +
               "\" d=\"M" + num(a.left) + " " + axis + " A" + r + " " + r + " 0 0 " + (a.upper ? "1" : "0") + " " +
               num(a.right) + " " + axis + "\"/>\n";
    }
    svg += "</g>\n";
    for (const auto& [pos, dir] : c.buds) {
        svg += "<line class=\"bud\" x1=\"" + num(c.x(pos)) + "\" y1=\"" + axis + "\" x2=\"" +
               num(c.x(pos) + dir * s.bud_length) + "\" y2=\"" + axis +
               "\" stroke=\"#333\" stroke-width=\"1.5\" marker-end=\"url(#bud)\"/>\n";
    }
    for (const auto& [pos, black] : c.dots) {
        svg += "<circle class=\"" + std::string(black ? "black" : "white") + "\" cx=\"" + num(c.x(pos)) + "\" cy=\"" +
               axis + "\" r=\"" + num(s.point_radius) + (black ? "\" fill=\"#000\"/>\n" : "\" fill=\"#fff\" stroke=\"#000\"/>\n");
    }
    svg += "</svg>\n";
    f.svg = std::move(svg);
    return f;
}

Canvas meandering_canvas(const MeanderingDiagram& m, const Style& style) {
    Canvas c{style, 2 * m.size() + 1, {}, {}, {}, {}};
    for (int t = 1; t <= m.size(); ++t) {
        c.arc(2 * m.up(t), 2 * t - 1, true, style.upper_color);
        c.arc(2 * t - 1, 2 * m.lo(t), false, style.lower_color);
    }
    for (int p = 0; p <= 2 * m.size(); ++p) c.dots.emplace_back(p, p % 2 == 0);
    return c;
}

}  // namespace

Figure render_meandering(const MeanderingDiagram& m, const Style& style) {
    return finish(meandering_canvas(m, style));
}

Figure render_smooth(const TamariInterval& interval, const Style& style) {
    const int n = interval.size();
    Canvas c{style, n + 1, {}, {}, {}, {}};
    for (const Arc& a : smooth_arcs(interval.upper())) c.arc(a.left, a.right, true, style.upper_color);
    for (const Arc& a : smooth_arcs(interval.lower())) c.arc(a.left, a.right, false, style.lower_color);
    for (int k = 0; k <= n; ++k) c.dots.emplace_back(k, true);
    return finish(c);
}

Figure render_blossoming(const BlossomingTree& b, const Style& style) {
    const MeanderingDiagram m = delta(b);
    Canvas c = meandering_canvas(m, style);
    // Right and left bud of every black point, pointing along the axis.
    for (int k = 0; k <= m.size(); ++k) {
        c.buds.emplace_back(2 * k, 1);
        c.buds.emplace_back(2 * k, -1);
    }
    return finish(c);
}

bool arcs_disjoint(const Figure& f) {
    for (std::size_t i = 0; i < f.arcs.size(); ++i) {
        const ArcShape& a = f.arcs[i];
        if (!(a.left < a.right)) return false;
        for (std::size_t j = i + 1; j < f.arcs.size(); ++j) {
            const ArcShape& b = f.arcs[j];
            if (a.upper != b.upper) continue;
            if (a.left == b.left && a.right == b.right) return false;
            if ((a.left < b.left && b.left < a.right && a.right < b.right) ||
                (b.left < a.left && a.left < b.right && b.right < a.right)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace tamari
