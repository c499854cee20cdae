#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropdual/error.hpp"
#include "tropdual/io.hpp"
#include "tropdual/quadric.hpp"
#include "tropdual/report.hpp"
#include "tropdual/subdivision.hpp"
#include "tropdual/svg.hpp"
#include "tropdual/tropical_curve.hpp"

namespace py = pybind11;
using namespace tropdual;

namespace {

// Values cross the boundary as strings ("p/q" or "-inf"); the Python layer
// converts to and from Fraction.
std::vector<std::string> strs(const std::vector<TropValue>& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

QuadricMatrix quadric(std::size_t n, const std::vector<std::string>& upper) {
    std::vector<TropValue> v;
    for (const auto& s : upper) v.push_back(TropValue::parse(s));
    return QuadricMatrix::from_upper(n, v);
}

TropPolynomial poly(std::size_t nvars, const std::vector<std::pair<std::vector<int>, std::string>>& terms) {
    TropPolynomial f(nvars);
    for (const auto& [e, c] : terms) f.add_term(e, TropValue::parse(c));
    f.require_nonempty();
    return f;
}

}  // namespace

PYBIND11_MODULE(_tropdual, m) {
    m.doc() = "Exact tropical quadric duality";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<UnsupportedShape>(m, "UnsupportedShape", PyExc_ValueError);
    py::register_exception<OverflowError>(m, "OverflowError", PyExc_ArithmeticError);

    m.def("trop_det", [](std::size_t n, const std::vector<std::string>& upper) {
        TropDetResult r = trop_det(quadric(n, upper).matrix());
        return py::make_tuple(r.value.str(), r.achiever_count, r.degenerate);
    });
    m.def("dual_quadric", [](std::size_t n, const std::vector<std::string>& upper) {
        return strs(dual_quadric(quadric(n, upper)).upper());
    });
    m.def("distortion_matrix", [](std::size_t n, const std::vector<std::string>& upper) {
        return strs(distortion_matrix(quadric(n, upper)).matrix().upper());
    });
    m.def("is_regular", [](std::size_t n, const std::vector<std::string>& upper) {
        RegularityVerdict v = is_regular(quadric(n, upper));
        py::object witness = py::none();
        if (v.witness) {
            witness = py::make_tuple(py::make_tuple(v.witness->reference.i, v.witness->reference.j),
                                     py::make_tuple(v.witness->violating.i, v.witness->violating.j));
        }
        py::object lambda = py::none();
        if (v.status == RegularityStatus::regular) lambda = py::str(v.lifting_constant.str());
        return py::make_tuple(std::string(to_string(v.status)), lambda, witness);
    });
    m.def("classify_by_distortion", [](std::size_t n, const std::vector<std::string>& upper) {
        return std::string(to_string(classify_by_distortion(distortion_matrix(quadric(n, upper)))));
    });
    m.def("node_classification",
          [](std::size_t nvars, const std::vector<std::pair<std::vector<int>, std::string>>& terms,
             const std::string& sign) {
              return std::string(
                  to_string(node_classification(induced_subdivision(poly(nvars, terms), parse_sign_convention(sign)))));
          });
    m.def("appearing_nodes",
          [](std::size_t nvars, const std::vector<std::pair<std::vector<int>, std::string>>& terms,
             const std::string& sign) {
              return induced_subdivision(poly(nvars, terms), parse_sign_convention(sign)).appearing_nodes;
          });
    m.def("curve_counts",
          [](std::size_t nvars, const std::vector<std::pair<std::vector<int>, std::string>>& terms,
             const std::string& sign) {
              TropicalCurve c = tropical_curve(poly(nvars, terms), parse_sign_convention(sign));
              return py::make_tuple(c.vertices.size(), c.edges.size(), c.rays.size(), c.lines.size());
          });
    m.def("render_svg",
          [](std::size_t nvars, const std::vector<std::pair<std::vector<int>, std::string>>& terms,
             const std::string& sign) { return render_svg(poly(nvars, terms), parse_sign_convention(sign)); });
    m.def("oracle_check", [](std::size_t n, const std::vector<std::string>& upper) {
        return oracle_check(quadric(n, upper)).agree;
    });
    m.def("parse_document", [](const std::string& text) { return serialize(parse_document(text)); });
}
