#include "tropdual/tropical_curve.hpp"

#include <numeric>

#include "tropdual/error.hpp"

namespace tropdual {
namespace {

Direction primitive(std::int64_t x, std::int64_t y) {
    std::int64_t g = std::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
    return {x / g, y / g};
}

// Gradient of the affine function through three lifted points.
std::pair<Rational, Rational> gradient(const Subdivision& s, const Cell& cell) {
    const Exponent& p = cell.corners[0];
    const Exponent& q = cell.corners[1];
    const Exponent& r = cell.corners[2];
    Rational hp = s.heights.at(p), hq = s.heights.at(q), hr = s.heights.at(r);
    std::int64_t xq = q[0] - p[0], yq = q[1] - p[1], xr = r[0] - p[0], yr = r[1] - p[1];
    Rational det(xq * yr - xr * yq);
    Rational gx = ((hq - hp) * Rational(yr) - (hr - hp) * Rational(yq)) / det;
    Rational gy = (Rational(xq) * (hr - hp) - Rational(xr) * (hq - hp)) / det;
    return {gx, gy};
}

Rational dot(const Rational& ax, const Rational& ay, const Direction& d) {
    return ax * Rational(d[0]) + ay * Rational(d[1]);
}

Rational cross(const Rational& ax, const Rational& ay, const Direction& d) {
    return ax * Rational(d[1]) - ay * Rational(d[0]);
}

}  // namespace

bool TropicalCurve::contains(const Rational& x, const Rational& y) const {
    for (const auto& e : edges) {
        const auto& a = vertices[e.from];
        const auto& b = vertices[e.to];
        Rational ux = b.x - a.x, uy = b.y - a.y, wx = x - a.x, wy = y - a.y;
        if (wx * uy - wy * ux != Rational(0)) continue;
        Rational t = wx * ux + wy * uy;
        if (t >= Rational(0) && t <= ux * ux + uy * uy) return true;
    }
    for (const auto& r : rays) {
        const auto& a = vertices[r.from];
        Rational wx = x - a.x, wy = y - a.y;
        if (cross(wx, wy, r.direction) == Rational(0) && dot(wx, wy, r.direction) >= Rational(0)) return true;
    }
    for (const auto& l : lines) {
        if (cross(x - l.px, y - l.py, l.direction) == Rational(0)) return true;
    }
    for (const auto& v : vertices) {
        if (v.x == x && v.y == y) return true;
    }
    return false;
}

TropicalCurve tropical_curve(const TropPolynomial& f, SignConvention sign) {
    if (f.nvars() != 2) throw UnsupportedShape("tropical curves are only built for two variables");
    return tropical_curve(induced_subdivision(f, sign));
}

TropicalCurve tropical_curve(const Subdivision& s) {
    if (s.polytope.nvars != 2 || !s.cells_computed) {
        throw UnsupportedShape("tropical curves are only built for two variables");
    }
    TropicalCurve curve;
    curve.sign = s.sign;
    if (s.polytope.dim == 0) return curve;

    if (s.polytope.dim == 1) {
        for (const auto& cell : s.cells) {
            const Exponent& p = cell.corners[0];
            const Exponent& q = cell.corners[1];
            std::int64_t ex = q[0] - p[0], ey = q[1] - p[1];
            Direction d = primitive(ex, ey);
            std::int64_t steps = d[0] != 0 ? ex / d[0] : ey / d[1];
            // Tie of the two endpoint terms: d·x = (h_q - h_p) / steps.
            Rational level = (s.heights.at(q) - s.heights.at(p)) / Rational(steps);
            Rational scale = level / Rational(d[0] * d[0] + d[1] * d[1]);
            curve.lines.push_back({scale * Rational(d[0]), scale * Rational(d[1]), {-d[1], d[0]}, p, q});
        }
        return curve;
    }

    std::vector<std::size_t> vertex_of(s.cells.size());
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        auto [gx, gy] = gradient(s, s.cells[c]);
        vertex_of[c] = curve.vertices.size();
        curve.vertices.push_back({gx, gy, c});
    }
    for (const auto& edge : subdivision_edges(s)) {
        if (edge.cells.size() == 2) {
            curve.edges.push_back({vertex_of[edge.cells[0]], vertex_of[edge.cells[1]], edge.a, edge.b});
            continue;
        }
        // Boundary edge: walk the owning cell to recover its ccw orientation.
        const auto& corners = s.cells[edge.cells[0]].corners;
        for (std::size_t k = 0; k < corners.size(); ++k) {
            const Exponent& u = corners[k];
            const Exponent& w = corners[(k + 1) % corners.size()];
            if (!((u == edge.a && w == edge.b) || (u == edge.b && w == edge.a))) continue;
            Direction outward = primitive(w[1] - u[1], u[0] - w[0]);
            curve.rays.push_back({vertex_of[edge.cells[0]], outward, edge.a, edge.b});
            break;
        }
    }
    return curve;
}

}  // namespace tropdual
