#include "tropdual/report.hpp"

#include <sstream>

#include "tropdual/symbolic.hpp"
#include "tropdual/tropical_curve.hpp"

namespace tropdual {
namespace {

std::string join_exponents(const std::vector<Exponent>& v) {
    std::string out;
    for (const auto& e : v) {
        if (!out.empty()) out += ' ';
        out += exponent_string(e);
    }
    return out.empty() ? "none" : out;
}

std::string point_string(const Rational& x, const Rational& y) { return "(" + x.str() + "," + y.str() + ")"; }

std::string direction_string(const Direction& d) {
    return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + ")";
}

std::string entry_string(const EntryIndex& e) { return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")"; }

}  // namespace

std::string exponent_string(const Exponent& e) {
    std::string out = "(";
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(e[k]);
    }
    return out + ")";
}

std::string layout_string(const TropMatrix& m) {
    std::string out = "(";
    bool first = true;
    auto put = [&](const TropValue& v) {
        if (!first) out += ',';
        first = false;
        out += v.str();
    };
    for (std::size_t i = 0; i < m.size(); ++i) put(m.at(i, i));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) put(m.at(i, j));
    }
    return out + ")";
}

std::string subdivision_report(const TropPolynomial& f, SignConvention sign) {
    Subdivision s = induced_subdivision(f, sign);
    std::ostringstream os;
    os << "sign = " << to_string(sign) << '\n';
    os << "nvars = " << s.polytope.nvars << '\n';
    os << "polytope_dim = " << s.polytope.dim << '\n';
    os << "vertices = " << join_exponents(s.polytope.vertices) << '\n';
    os << "lattice_nodes = " << join_exponents(s.polytope.lattice_nodes) << '\n';
    os << "appearing_nodes = " << join_exponents(s.appearing_nodes) << '\n';
    os << "classification = " << to_string(node_classification(s)) << '\n';
    if (s.polytope.nvars == 2) os << "complete = " << (is_complete(s) ? "true" : "false") << '\n';
    if (!s.cells_computed) {
        os << "cells = not computed (nodes decided by edge-midpoint convexity)\n";
        return os.str();
    }
    os << "cells = " << s.cells.size() << '\n';
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        os << "cell " << c + 1 << ": dim " << s.cells[c].dim << ", corners " << join_exponents(s.cells[c].corners)
           << ", points " << join_exponents(s.cells[c].points) << '\n';
    }
    return os.str();
}

std::string curve_report(const TropPolynomial& f, SignConvention sign) {
    TropicalCurve curve = tropical_curve(f, sign);
    std::ostringstream os;
    os << "sign = " << to_string(sign) << '\n';
    os << "vertices = " << curve.vertices.size() << '\n';
    for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
        os << "vertex " << v + 1 << ": " << point_string(curve.vertices[v].x, curve.vertices[v].y) << ", dual cell "
           << curve.vertices[v].cell + 1 << '\n';
    }
    os << "edges = " << curve.edges.size() << '\n';
    for (const auto& e : curve.edges) {
        os << "edge: vertex " << e.from + 1 << " -- vertex " << e.to + 1 << ", dual " << exponent_string(e.dual_a)
           << "-" << exponent_string(e.dual_b) << '\n';
    }
    os << "rays = " << curve.rays.size() << '\n';
    for (const auto& r : curve.rays) {
        os << "ray: from vertex " << r.from + 1 << " direction " << direction_string(r.direction) << ", dual "
           << exponent_string(r.dual_a) << "-" << exponent_string(r.dual_b) << '\n';
    }
    if (!curve.lines.empty()) {
        os << "lines = " << curve.lines.size() << '\n';
        for (const auto& l : curve.lines) {
            os << "line: through " << point_string(l.px, l.py) << " direction " << direction_string(l.direction)
               << ", dual " << exponent_string(l.dual_a) << "-" << exponent_string(l.dual_b) << '\n';
        }
    }
    return os.str();
}

std::string dual_report(const QuadricMatrix& a) {
    QuadricMatrix dual = dual_quadric(a);
    QuadricMatrix double_dual = dual_quadric(dual);
    TropDetResult det = trop_det(a.matrix());
    std::ostringstream os;
    os << "dual = " << dual.matrix().str() << '\n';
    os << "dual_layout = " << layout_string(dual.matrix()) << '\n';
    os << "double_dual_layout = " << layout_string(double_dual.matrix()) << '\n';
    os << "tropdet = " << det.value << ", achievers " << det.achiever_count
       << (det.degenerate ? ", degenerate" : "") << '\n';
    bool finite_diag = true;
    for (std::size_t i = 0; i < a.size(); ++i) finite_diag = finite_diag && a.at(i, i).is_finite();
    if (finite_diag) {
        os << "distortion_class = " << to_string(classify_by_distortion(distortion_matrix(a))) << '\n';
    }
    bool dual_finite_diag = true;
    for (std::size_t i = 0; i < dual.size(); ++i) dual_finite_diag = dual_finite_diag && dual.at(i, i).is_finite();
    if (dual_finite_diag) {
        os << "dual_distortion_class = " << to_string(classify_by_distortion(distortion_matrix(dual))) << '\n';
    }
    return os.str();
}

std::string regularity_report(const QuadricMatrix& a) {
    RegularityVerdict v = is_regular(a);
    std::ostringstream os;
    os << to_string(v.status);
    if (v.status == RegularityStatus::regular) os << ", lifting_constant = " << v.lifting_constant;
    if (v.witness) os << ", witness " << entry_string(v.witness->reference) << " vs " << entry_string(v.witness->violating);
    os << '\n';
    os << "double_dual_layout = " << layout_string(v.double_dual) << '\n';
    os << "tropdet = " << trop_det(a.matrix()).value << '\n';
    return os.str();
}

OracleCheck oracle_check(const QuadricMatrix& a) {
    const std::size_t n = a.size();
    SymbolicMatrix adj = sym_adjoint(symbolic_quadric_matrix(n));
    std::map<std::string, TropValue> val;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) val[quadric_entry_name(n, i, j)] = a.at(i - 1, j - 1);
    }
    QuadricMatrix dual = dual_quadric(a);
    OracleCheck out{true, {}};
    std::ostringstream body;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            TropValue classical = tropicalize(adj.at(i, j), val);
            bool same = classical == dual.at(i, j);
            out.agree = out.agree && same;
            body << "entry (" << i + 1 << "," << j + 1 << "): tropical " << dual.at(i, j) << ", classical " << classical
                 << (same ? "" : "  MISMATCH") << '\n';
        }
    }
    out.report = std::string("oracle-check: ") + (out.agree ? "agree" : "mismatch") + '\n' + body.str();
    return out;
}

}  // namespace tropdual
