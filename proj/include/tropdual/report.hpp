#pragma once

#include <string>

#include "tropdual/quadric.hpp"
#include "tropdual/subdivision.hpp"

namespace tropdual {

/// Plain-text reports with a fixed line order, one per CLI command.
[[nodiscard]] std::string subdivision_report(const TropPolynomial& f, SignConvention sign);
[[nodiscard]] std::string curve_report(const TropPolynomial& f, SignConvention sign);
[[nodiscard]] std::string dual_report(const QuadricMatrix& a);
[[nodiscard]] std::string regularity_report(const QuadricMatrix& a);

struct OracleCheck {
    bool agree = false;
    std::string report;
};

/// Tropical adjoint of `a` vs. the tropicalised classical adjoint of the
/// generic symmetric matrix with Val(c_k) = a_k.
[[nodiscard]] OracleCheck oracle_check(const QuadricMatrix& a);

/// "(a1,a2,...)" with the diagonal first, then the upper triangle row by row.
[[nodiscard]] std::string layout_string(const TropMatrix& m);
[[nodiscard]] std::string exponent_string(const Exponent& e);

}  // namespace tropdual
