#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>

#include "model.hpp"

namespace monsky {

/// SVG of a drawing: one polygon per living triangle (negatively oriented
/// ones shaded), one polygon per constraint, vertex dots with labels.
inline std::string render_svg(const ConstrainedTriangulation &ct, const std::map<std::string, Point> &pts,
                              double size = 400) {
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    for (const auto &[v, p] : pts) {
        double x = p.x.get_d(), y = p.y.get_d();
        if (first) minx = maxx = x, miny = maxy = y, first = false;
        minx = std::min(minx, x), maxx = std::max(maxx, x);
        miny = std::min(miny, y), maxy = std::max(maxy, y);
    }
    double span = std::max({maxx - minx, maxy - miny, 1e-9});
    const double margin = 20;
    double scale = (size - 2 * margin) / span;
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    // y axis flipped so the drawing appears as in the plane
    auto sx = [&](const Point &p) { return fmt(margin + (p.x.get_d() - minx) * scale); };
    auto sy = [&](const Point &p) { return fmt(size - margin - (p.y.get_d() - miny) * scale); };
    auto poly = [&](const auto &verts) {
        std::string s;
        for (const auto &v : verts) s += (s.empty() ? "" : " ") + sx(pts.at(v)) + "," + sy(pts.at(v));
        return s;
    };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
    out += "<title>" + ct.name + "</title>\n";
    for (const auto &id : living_triangles(ct)) {
        const auto &t = ct.triangles[static_cast<std::size_t>(ct.triangle_index(id))];
        bool negative = orientation(pts.at(t.verts[0]), pts.at(t.verts[1]), pts.at(t.verts[2])) < 0;
        out += "<polygon class=\"living" + std::string(negative ? " negative" : "") + "\" data-id=\"" + id +
               "\" points=\"" + poly(t.verts) + "\" fill=\"" + (negative ? "#e8a0a0" : "#ffffff") +
               "\" fill-opacity=\"0.7\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t i = 0; i < ct.constraints.size(); ++i) {
        out += "<polygon class=\"constraint\" data-id=\"c" + std::to_string(i + 1) + "\" points=\"" +
               poly(ct.constraint_vertices(i)) + "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"3\"/>\n";
    }
    for (const auto &v : ct.vertices) {
        if (!pts.count(v)) continue;
        out += "<circle cx=\"" + sx(pts.at(v)) + "\" cy=\"" + sy(pts.at(v)) + "\" r=\"3\" fill=\"#000000\"/>\n";
        out += "<text x=\"" + sx(pts.at(v)) + "\" y=\"" + sy(pts.at(v)) + "\" dx=\"5\" dy=\"-5\" font-size=\"12\">" + v +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace monsky
