#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropdual/subdivision.hpp"

namespace tropdual {

using Direction = std::array<std::int64_t, 2>;

struct CurveVertex {
    Rational x;
    Rational y;
    /// Index of the dual 2-cell in Subdivision::cells.
    std::size_t cell = 0;
};

struct CurveEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    Exponent dual_a;
    Exponent dual_b;
};

struct CurveRay {
    std::size_t from = 0;
    /// Primitive, orthogonal to dual_b - dual_a and pointing away from the cell.
    Direction direction{};
    Exponent dual_a;
    Exponent dual_b;
};

/// Full line, only produced when the Newton polytope is a segment.
struct CurveLine {
    Rational px;
    Rational py;
    Direction direction{};
    Exponent dual_a;
    Exponent dual_b;
};

/// Corner locus of x -> max(ω·x - sign·a_ω), built as the complex dual to
/// the induced subdivision.
struct TropicalCurve {
    SignConvention sign = SignConvention::examples;
    std::vector<CurveVertex> vertices;
    std::vector<CurveEdge> edges;
    std::vector<CurveRay> rays;
    std::vector<CurveLine> lines;

    [[nodiscard]] std::size_t one_cell_count() const { return edges.size() + rays.size() + lines.size(); }
    /// Exact geometric membership test on the computed cells.
    [[nodiscard]] bool contains(const Rational& x, const Rational& y) const;
};

/// Throws UnsupportedShape unless nvars == 2.
[[nodiscard]] TropicalCurve tropical_curve(const TropPolynomial& f, SignConvention sign = SignConvention::examples);
/// Same, reusing a subdivision already computed for f.
[[nodiscard]] TropicalCurve tropical_curve(const Subdivision& s);

}  // namespace tropdual
