#include "kepoly/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace kepoly {

namespace {

std::string num(double d) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", d);
    return buf;
}

struct Pt {
    double x, y;
};

Pt to_pt(const Vec2& v) { return {v.x.to_double(), v.y.to_double()}; }

void line(std::ostringstream& out, const char* cls, Pt a, Pt b, const char* extra = "") {
    out << "  <line class=\"" << cls << "\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y)
        << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y) << "\"" << extra << "/>\n";
}

} // namespace

std::string render_figure(const CaseRecord& rec, const Verdict& verdict) {
    std::vector<Pt> verts;
    for (const Vec2& v : verdict.polytope_vertices)
        verts.push_back(to_pt(v));

    double xmin = verts[0].x, xmax = verts[0].x, ymin = verts[0].y, ymax = verts[0].y;
    for (const Pt& p : verts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double span = std::max(xmax - xmin, ymax - ymin);
    const double margin = 0.1 * span;
    const double bx = xmin - margin, by = ymin - margin;
    const double bw = (xmax - xmin) + 2 * margin, bh = (ymax - ymin) + 2 * margin;
    const double sw = 0.004 * span;       // stroke width in viewport units
    const double dot = 0.012 * span;      // marker radius
    const double ray_len = 3.0 * span;    // long enough to leave the viewport

    Pt apex = to_pt(verdict.two_rho_theta);
    Pt bar = to_pt(verdict.barycenter);

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\""
        << num(560.0 * bh / bw) << "\" viewBox=\"" << num(bx) << " " << num(-(by + bh)) << " "
        << num(bw) << " " << num(bh) << "\">\n";
    out << " <defs>\n"
        << "  <marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
           "markerHeight=\"7\" orient=\"auto-start-reverse\">\n"
        << "   <path d=\"M 0 0 L 10 5 L 0 10 z\"/>\n"
        << "  </marker>\n"
        << " </defs>\n";
    // Native math coordinates; the group flips the y axis for display.
    out << " <g transform=\"scale(1 -1)\" stroke-width=\"" << num(sw) << "\" fill=\"none\" stroke=\"black\">\n";

    out << "  <path id=\"polytope\" fill=\"#e8f0fe\" stroke=\"#1a56b0\" d=\"";
    for (std::size_t i = 0; i < verts.size(); ++i)
        out << (i == 0 ? "M " : "L ") << num(verts[i].x) << " " << num(verts[i].y) << " ";
    out << "Z\"/>\n";

    for (const Vec2& gen : verdict.cone_generators) {
        Pt g = to_pt(gen);
        double glen = std::hypot(g.x, g.y);
        Pt tip{apex.x + g.x / glen * ray_len, apex.y + g.y / glen * ray_len};
        std::string extra = " stroke=\"#c02020\" stroke-dasharray=\"" + num(4 * sw) + " " + num(3 * sw) + "\"";
        line(out, "cone-ray", apex, tip, extra.c_str());
    }

    const RootSystem& rs = realize(rec.restricted_type);
    for (const Vec2& alpha : rs.simple_roots)
        line(out, "simple-root", Pt{0, 0}, to_pt(alpha), " stroke=\"#202020\" marker-end=\"url(#arrow)\"");
    for (const Vec2& w : rs.fundamental_weights)
        line(out, "fundamental-weight", Pt{0, 0}, to_pt(w), " stroke=\"#208020\" marker-end=\"url(#arrow)\"");

    out << "  <circle id=\"two-rho\" cx=\"" << num(apex.x) << "\" cy=\"" << num(apex.y) << "\" r=\""
        << num(dot) << "\" fill=\"#c02020\" stroke=\"none\"/>\n";
    out << "  <circle id=\"barycenter\" cx=\"" << num(bar.x) << "\" cy=\"" << num(bar.y)
        << "\" r=\"" << num(dot) << "\" fill=\"#1a56b0\" stroke=\"none\"/>\n";
    out << " </g>\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace kepoly
