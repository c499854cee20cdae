#include "tropdual/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "tropdual/error.hpp"
#include "tropdual/tropical_curve.hpp"

namespace tropdual {
namespace {

constexpr double kUnit = 64.0;
constexpr double kMargin = 32.0;
constexpr double kOverhang = 2.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Frame {
    double xmin, ymax;  // lattice coordinates of the top-left corner
    double offset_x;    // pixel offset of the panel
    [[nodiscard]] double px(double x) const { return offset_x + kMargin + (x - xmin) * kUnit; }
    [[nodiscard]] double py(double y) const { return kMargin + (ymax - y) * kUnit; }
};

double coord(const Exponent& e, std::size_t k) { return k < e.size() ? e[k] : 0.0; }

}  // namespace

std::string render_svg(const TropPolynomial& f, SignConvention sign) {
    if (f.nvars() > 2) throw UnsupportedShape("rendering is only available for one or two variables");
    Subdivision s = induced_subdivision(f, sign);

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const auto& e : s.polytope.lattice_nodes) {
        double x = coord(e, 0), y = coord(e, 1);
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        }
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    Frame poly_frame{xmin, ymax, 0};
    double poly_w = (xmax - xmin) * kUnit + 2 * kMargin;
    double poly_h = (ymax - ymin) * kUnit + 2 * kMargin;

    std::ostringstream body;
    body << "<g id=\"subdivision\">\n";
    for (const auto& cell : s.cells) {
        body << "<polygon points=\"";
        for (const auto& c : cell.corners) body << num(poly_frame.px(coord(c, 0))) << ',' << num(poly_frame.py(coord(c, 1))) << ' ';
        body << "\" fill=\"#dde8f5\" stroke=\"#1f4e8c\" stroke-width=\"2\"/>\n";
    }
    for (const auto& node : s.polytope.lattice_nodes) {
        bool appears = std::binary_search(s.appearing_nodes.begin(), s.appearing_nodes.end(), node);
        body << "<circle cx=\"" << num(poly_frame.px(coord(node, 0))) << "\" cy=\"" << num(poly_frame.py(coord(node, 1)))
             << "\" r=\"5\" fill=\"" << (appears ? "#1f4e8c" : "#ffffff") << "\" stroke=\"#1f4e8c\"/>\n";
    }
    body << "</g>\n";

    double width = poly_w;
    double height = poly_h;
    if (f.nvars() == 2 && s.polytope.dim >= 1) {
        TropicalCurve curve = tropical_curve(s);
        std::vector<std::pair<double, double>> anchors;
        for (const auto& v : curve.vertices) anchors.emplace_back(v.x.to_double(), v.y.to_double());
        for (const auto& l : curve.lines) anchors.emplace_back(l.px.to_double(), l.py.to_double());
        double cx0 = anchors.front().first, cx1 = cx0, cy0 = anchors.front().second, cy1 = cy0;
        for (const auto& [x, y] : anchors) {
            cx0 = std::min(cx0, x);
            cx1 = std::max(cx1, x);
            cy0 = std::min(cy0, y);
            cy1 = std::max(cy1, y);
        }
        cx0 -= kOverhang;
        cx1 += kOverhang;
        cy0 -= kOverhang;
        cy1 += kOverhang;
        Frame cf{cx0, cy1, poly_w};
        double cw = (cx1 - cx0) * kUnit;
        double ch = (cy1 - cy0) * kUnit;
        double reach = (cx1 - cx0) + (cy1 - cy0);
        auto segment = [&](double x0, double y0, double x1, double y1) {
            body << "<line x1=\"" << num(cf.px(x0)) << "\" y1=\"" << num(cf.py(y0)) << "\" x2=\"" << num(cf.px(x1))
                 << "\" y2=\"" << num(cf.py(y1)) << "\"/>\n";
        };
        body << "<clipPath id=\"curve-view\"><rect x=\"" << num(cf.px(cx0)) << "\" y=\"" << num(cf.py(cy1))
             << "\" width=\"" << num(cw) << "\" height=\"" << num(ch) << "\"/></clipPath>\n";
        body << "<rect x=\"" << num(cf.px(cx0)) << "\" y=\"" << num(cf.py(cy1)) << "\" width=\"" << num(cw)
             << "\" height=\"" << num(ch) << "\" fill=\"none\" stroke=\"#999999\"/>\n";
        body << "<g id=\"curve\" clip-path=\"url(#curve-view)\" stroke=\"#b3261e\" stroke-width=\"3\">\n";
        for (const auto& e : curve.edges) {
            const auto& a = curve.vertices[e.from];
            const auto& b = curve.vertices[e.to];
            segment(a.x.to_double(), a.y.to_double(), b.x.to_double(), b.y.to_double());
        }
        for (const auto& r : curve.rays) {
            const auto& a = curve.vertices[r.from];
            double len = std::hypot(static_cast<double>(r.direction[0]), static_cast<double>(r.direction[1]));
            double t = reach / len;
            segment(a.x.to_double(), a.y.to_double(), a.x.to_double() + t * r.direction[0],
                    a.y.to_double() + t * r.direction[1]);
        }
        for (const auto& l : curve.lines) {
            double len = std::hypot(static_cast<double>(l.direction[0]), static_cast<double>(l.direction[1]));
            double t = reach / len;
            double x = l.px.to_double(), y = l.py.to_double();
            segment(x - t * l.direction[0], y - t * l.direction[1], x + t * l.direction[0], y + t * l.direction[1]);
        }
        body << "</g>\n<g id=\"curve-vertices\" fill=\"#b3261e\">\n";
        for (const auto& v : curve.vertices) {
            body << "<circle cx=\"" << num(cf.px(v.x.to_double())) << "\" cy=\"" << num(cf.py(v.y.to_double()))
                 << "\" r=\"4\"/>\n";
        }
        body << "</g>\n";
        width += cw + 2 * kMargin;
        height = std::max(height, ch + 2 * kMargin);
    }

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    os << body.str() << "</svg>\n";
    return os.str();
}

}  // namespace tropdual
