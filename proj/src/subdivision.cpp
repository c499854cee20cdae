#include "tropdual/subdivision.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "tropdual/error.hpp"

namespace tropdual {
namespace {

using P2 = std::array<std::int64_t, 2>;

P2 to_p2(const Exponent& e) { return {e[0], e.size() > 1 ? e[1] : 0}; }

std::int64_t cross(const P2& o, const P2& a, const P2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counter-clockwise hull without collinear boundary points.
std::vector<std::size_t> strict_hull(const std::vector<P2>& pts) {
    std::vector<std::size_t> idx(pts.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    if (idx.size() <= 2) return idx;
    std::vector<std::size_t> hull(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i : idx) {
        while (k >= 2 && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
        std::size_t i = idx[t];
        while (k >= lower && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

Exponent make_exp(std::size_t nvars, const P2& p) {
    Exponent e(nvars);
    e[0] = static_cast<int>(p[0]);
    if (nvars > 1) e[1] = static_cast<int>(p[1]);
    return e;
}

std::int64_t igcd(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

NewtonPolytope planar_polytope(const TropPolynomial& f) {
    NewtonPolytope poly;
    poly.nvars = f.nvars();
    std::vector<P2> pts;
    for (const auto& e : f.support()) pts.push_back(to_p2(e));
    auto hull = strict_hull(pts);
    for (std::size_t i : hull) poly.vertices.push_back(make_exp(poly.nvars, pts[i]));
    if (hull.size() == 1) {
        poly.dim = 0;
        poly.lattice_nodes = poly.vertices;
        return poly;
    }
    if (hull.size() == 2) {
        poly.dim = 1;
        P2 a = pts[hull[0]];
        P2 b = pts[hull[1]];
        std::int64_t g = igcd(b[0] - a[0], b[1] - a[1]);
        for (std::int64_t s = 0; s <= g; ++s) {
            poly.lattice_nodes.push_back(
                make_exp(poly.nvars, {a[0] + s * (b[0] - a[0]) / g, a[1] + s * (b[1] - a[1]) / g}));
        }
        std::sort(poly.lattice_nodes.begin(), poly.lattice_nodes.end());
        return poly;
    }
    poly.dim = 2;
    std::int64_t xmin = pts[hull[0]][0], xmax = xmin, ymin = pts[hull[0]][1], ymax = ymin;
    for (std::size_t i : hull) {
        xmin = std::min(xmin, pts[i][0]);
        xmax = std::max(xmax, pts[i][0]);
        ymin = std::min(ymin, pts[i][1]);
        ymax = std::max(ymax, pts[i][1]);
    }
    for (std::int64_t x = xmin; x <= xmax; ++x) {
        for (std::int64_t y = ymin; y <= ymax; ++y) {
            bool inside = true;
            for (std::size_t k = 0; k < hull.size() && inside; ++k) {
                inside = cross(pts[hull[k]], pts[hull[(k + 1) % hull.size()]], {x, y}) >= 0;
            }
            if (inside) poly.lattice_nodes.push_back(make_exp(poly.nvars, {x, y}));
        }
    }
    return poly;
}

bool is_quadric_support(const TropPolynomial& f) {
    for (const auto& e : f.support()) {
        int total = 0;
        for (int v : e) {
            if (v < 0) return false;
            total += v;
        }
        if (total > 2) return false;
    }
    return true;
}

NewtonPolytope quadric_polytope(const TropPolynomial& f) {
    const std::size_t n = f.nvars();
    if (!is_quadric_support(f)) {
        throw UnsupportedShape("supports in three or more variables must be quadrics (total degree <= 2)");
    }
    NewtonPolytope poly;
    poly.nvars = n;
    poly.dim = static_cast<int>(n);
    poly.vertices.emplace_back(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 2;
        poly.vertices.push_back(e);
    }
    for (const auto& v : poly.vertices) {
        if (f.coefficient(v).is_neg_inf()) {
            throw UnsupportedShape("quadric support must contain the origin and every 2e_i");
        }
    }
    poly.lattice_nodes.emplace_back(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Exponent e(n, 0);
            e[i] += 1;
            e[j] += 1;
            poly.lattice_nodes.push_back(e);
        }
        Exponent e(n, 0);
        e[i] = 1;
        poly.lattice_nodes.push_back(e);
    }
    std::sort(poly.lattice_nodes.begin(), poly.lattice_nodes.end());
    return poly;
}

std::vector<Exponent> sorted_union_of_corners(const std::vector<Cell>& cells) {
    std::set<Exponent> nodes;
    for (const auto& c : cells) nodes.insert(c.corners.begin(), c.corners.end());
    return {nodes.begin(), nodes.end()};
}

void subdivide_segment(Subdivision& s) {
    const auto& poly = s.polytope;
    P2 a = to_p2(poly.vertices.front());
    P2 b = to_p2(poly.vertices.back());
    std::int64_t g = igcd(b[0] - a[0], b[1] - a[1]);
    P2 d{(b[0] - a[0]) / g, (b[1] - a[1]) / g};
    std::int64_t dd = d[0] * d[0] + d[1] * d[1];

    struct Lifted {
        std::int64_t t;
        Rational h;
        Exponent e;
    };
    std::vector<Lifted> pts;
    for (const auto& [e, h] : s.heights) {
        P2 p = to_p2(e);
        pts.push_back({((p[0] - a[0]) * d[0] + (p[1] - a[1]) * d[1]) / dd, h, e});
    }
    std::sort(pts.begin(), pts.end(), [](const Lifted& x, const Lifted& y) { return x.t < y.t; });

    auto turn = [](const Lifted& o, const Lifted& p, const Lifted& q) {
        return Rational(p.t - o.t) * (q.h - o.h) - (p.h - o.h) * Rational(q.t - o.t);
    };
    std::vector<std::size_t> lower;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (lower.size() >= 2 && turn(pts[lower[lower.size() - 2]], pts[lower.back()], pts[i]) <= Rational(0)) {
            lower.pop_back();
        }
        lower.push_back(i);
    }
    for (std::size_t k = 0; k + 1 < lower.size(); ++k) {
        const Lifted& lo = pts[lower[k]];
        const Lifted& hi = pts[lower[k + 1]];
        Cell cell;
        cell.dim = 1;
        cell.corners = {lo.e, hi.e};
        for (const auto& p : pts) {
            if (p.t < lo.t || p.t > hi.t) continue;
            if (turn(lo, hi, p) == Rational(0)) cell.points.push_back(p.e);
        }
        std::sort(cell.points.begin(), cell.points.end());
        s.cells.push_back(std::move(cell));
    }
}

void subdivide_polygon(Subdivision& s) {
    std::vector<P2> pts;
    std::vector<Rational> h;
    std::vector<Exponent> exps;
    for (const auto& [e, height] : s.heights) {
        pts.push_back(to_p2(e));
        h.push_back(height);
        exps.push_back(e);
    }
    const std::size_t m = pts.size();
    std::set<std::vector<std::size_t>> faces;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                std::int64_t det = cross(pts[i], pts[j], pts[k]);
                if (det == 0) continue;
                Rational dxj(pts[j][0] - pts[i][0]), dyj(pts[j][1] - pts[i][1]);
                Rational dxk(pts[k][0] - pts[i][0]), dyk(pts[k][1] - pts[i][1]);
                Rational dhj = h[j] - h[i], dhk = h[k] - h[i];
                Rational gx = (dhj * dyk - dhk * dyj) / Rational(det);
                Rational gy = (dxj * dhk - dxk * dhj) / Rational(det);
                Rational c = h[i] - gx * Rational(pts[i][0]) - gy * Rational(pts[i][1]);
                std::vector<std::size_t> on_plane;
                bool lower_face = true;
                for (std::size_t q = 0; q < m && lower_face; ++q) {
                    Rational gap = h[q] - (gx * Rational(pts[q][0]) + gy * Rational(pts[q][1]) + c);
                    if (gap < Rational(0)) lower_face = false;
                    if (gap == Rational(0)) on_plane.push_back(q);
                }
                if (lower_face) faces.insert(std::move(on_plane));
            }
        }
    }
    for (const auto& face : faces) {
        Cell cell;
        cell.dim = 2;
        std::vector<P2> face_pts;
        for (std::size_t q : face) {
            face_pts.push_back(pts[q]);
            cell.points.push_back(exps[q]);
        }
        for (std::size_t q : strict_hull(face_pts)) cell.corners.push_back(exps[face[q]]);
        s.cells.push_back(std::move(cell));
    }
}

void classify_quadric_nodes(Subdivision& s) {
    const std::size_t n = s.polytope.nvars;
    std::set<Exponent> appearing(s.polytope.vertices.begin(), s.polytope.vertices.end());
    for (const auto& node : s.polytope.lattice_nodes) {
        if (appearing.count(node) || !s.heights.count(node)) continue;
        // Every non-corner node of 2Δ_n is the midpoint of an edge.
        Exponent u(n, 0), v(n, 0);
        std::vector<std::size_t> ones;
        for (std::size_t k = 0; k < n; ++k) {
            if (node[k] == 1) ones.push_back(k);
        }
        u[ones[0]] = 2;
        if (ones.size() == 2) v[ones[1]] = 2;
        Rational chord = (s.heights.at(u) + s.heights.at(v)) * Rational(1, 2);
        if (s.heights.at(node) < chord) appearing.insert(node);
    }
    s.appearing_nodes.assign(appearing.begin(), appearing.end());
}

}  // namespace

SignConvention parse_sign_convention(std::string_view text) {
    if (text == "examples") return SignConvention::examples;
    if (text == "kapranov") return SignConvention::kapranov;
    throw InputError("unknown sign convention '" + std::string(text) + "' (expected examples or kapranov)");
}

std::string_view to_string(SignConvention s) { return s == SignConvention::examples ? "examples" : "kapranov"; }

std::string_view to_string(NodeClass c) {
    switch (c) {
        case NodeClass::maximal_in_nodes: return "maximal_in_nodes";
        case NodeClass::minimal_in_nodes: return "minimal_in_nodes";
        case NodeClass::neither: break;
    }
    return "neither";
}

NewtonPolytope newton_polytope(const TropPolynomial& f) {
    f.require_nonempty();
    if (f.nvars() <= 2) return planar_polytope(f);
    return quadric_polytope(f);
}

Subdivision induced_subdivision(const TropPolynomial& f, SignConvention sign) {
    Subdivision s;
    s.polytope = newton_polytope(f);
    s.sign = sign;
    for (const auto& [e, a] : f.terms()) s.heights.emplace(e, Rational(sign_value(sign)) * a.value());

    if (f.nvars() > 2) {
        s.cells_computed = false;
        classify_quadric_nodes(s);
        return s;
    }
    switch (s.polytope.dim) {
        case 0: {
            Cell cell;
            cell.points = s.polytope.vertices;
            cell.corners = s.polytope.vertices;
            s.cells.push_back(std::move(cell));
            break;
        }
        case 1: subdivide_segment(s); break;
        default: subdivide_polygon(s); break;
    }
    s.appearing_nodes = sorted_union_of_corners(s.cells);
    return s;
}

NodeClass node_classification(const Subdivision& s) {
    if (s.appearing_nodes == s.polytope.lattice_nodes) return NodeClass::maximal_in_nodes;
    std::vector<Exponent> corners = s.polytope.vertices;
    std::sort(corners.begin(), corners.end());
    if (s.appearing_nodes == corners) return NodeClass::minimal_in_nodes;
    return NodeClass::neither;
}

bool is_complete(const Subdivision& s) {
    if (s.polytope.nvars != 2 || !s.cells_computed) {
        throw InputError("completeness is only defined for planar subdivisions");
    }
    for (const auto& cell : s.cells) {
        if (cell.dim == 2) {
            if (cell.corners.size() != 3) return false;
            std::int64_t det = cross(to_p2(cell.corners[0]), to_p2(cell.corners[1]), to_p2(cell.corners[2]));
            if (det != 1 && det != -1) return false;
        } else if (cell.dim == 1) {
            P2 a = to_p2(cell.corners[0]);
            P2 b = to_p2(cell.corners[1]);
            if (igcd(b[0] - a[0], b[1] - a[1]) != 1) return false;
        }
    }
    return true;
}

std::vector<SubdivisionEdge> subdivision_edges(const Subdivision& s) {
    if (!s.cells_computed || s.polytope.nvars > 2) {
        throw UnsupportedShape("edges are only available for planar subdivisions");
    }
    std::map<std::pair<Exponent, Exponent>, std::vector<std::size_t>> edges;
    auto add = [&](const Exponent& a, const Exponent& b, std::size_t cell) {
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        edges[key].push_back(cell);
    };
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        const auto& corners = s.cells[c].corners;
        if (s.cells[c].dim == 2) {
            for (std::size_t k = 0; k < corners.size(); ++k) add(corners[k], corners[(k + 1) % corners.size()], c);
        } else if (s.cells[c].dim == 1) {
            add(corners[0], corners[1], c);
        }
    }
    std::vector<SubdivisionEdge> out;
    for (auto& [key, cells] : edges) out.push_back({key.first, key.second, std::move(cells)});
    return out;
}

}  // namespace tropdual
