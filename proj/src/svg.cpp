#include "obsroute/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace obsroute {

namespace {

struct Mapper {
    double x0, y1, scale;
    double sx(const Point& p) const { return (p.xd - x0) * scale; }
    double sy(const Point& p) const { return (y1 - p.yd) * scale; }
};

std::string fmt(double v) {
    char buf[40];
    // display-only rounding; the data files stay exact
    snprintf(buf, sizeof buf, "%.6f", v + 0.0);
    return std::string(buf);
}

void emit_ring(std::ostringstream& out, const Mapper& m, const std::vector<Point>& ring) {
    for (size_t i = 0; i < ring.size(); ++i) {
        out << (i == 0 ? "M " : "L ") << fmt(m.sx(ring[i])) << ' ' << fmt(m.sy(ring[i])) << ' ';
    }
    out << "Z ";
}

}  // namespace

std::string render_svg(const Instance& inst, const PolygonWithHoles* region, const Tour* tour) {
    const Box& b = inst.box();
    const double w = b.width_d(), h = b.height_d();
    const double scale = 900.0 / std::max(w, h);
    Mapper m{to_double(b.x0), to_double(b.y1), scale};
    const double W = w * scale, H = h * scale;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(W) << "\" height=\""
        << fmt(H) << "\" viewBox=\"0 0 " << fmt(W) << ' ' << fmt(H) << "\">\n";
    out << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
           "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" "
           "stroke=\"#888888\" stroke-width=\"1\"/></pattern></defs>\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << fmt(W) << "\" height=\"" << fmt(H)
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";

    if (region) {
        out << "<path fill=\"#dbeafe\" stroke=\"#1d4ed8\" stroke-width=\"1\" "
               "fill-rule=\"evenodd\" d=\"";
        std::ostringstream path;
        emit_ring(path, m, region->outer);
        for (const auto& hole : region->holes) emit_ring(path, m, hole);
        out << path.str() << "\"/>\n";
        for (const auto& hole : region->holes) {
            std::ostringstream hp;
            emit_ring(hp, m, hole);
            out << "<path fill=\"url(#hatch)\" stroke=\"none\" d=\"" << hp.str() << "\"/>\n";
        }
    }

    for (const auto& c : inst.obstacles()) {
        std::ostringstream p;
        emit_ring(p, m, c.vertices());
        out << "<path fill=\"#9ca3af\" stroke=\"#374151\" stroke-width=\"1\" d=\"" << p.str()
            << "\"/>\n";
    }

    if (tour && !tour->vertices.empty()) {
        if (tour->vertices.size() >= 2) {
            std::ostringstream p;
            emit_ring(p, m, tour->vertices);
            out << "<path fill=\"none\" stroke=\"#dc2626\" stroke-width=\"2\" d=\"" << p.str()
                << "\"/>\n";
        }
        for (const auto& [i, wpt] : tour->witness) {
            (void)i;
            out << "<circle cx=\"" << fmt(m.sx(wpt)) << "\" cy=\"" << fmt(m.sy(wpt))
                << "\" r=\"3\" fill=\"#2563eb\"/>\n";
        }
        out << "<circle cx=\"" << fmt(m.sx(tour->vertices.front())) << "\" cy=\""
            << fmt(m.sy(tour->vertices.front())) << "\" r=\"4\" fill=\"#dc2626\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace obsroute
