#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "tropdual/quadric.hpp"
#include "tropdual/trop_polynomial.hpp"

namespace tropdual {

using Document = std::variant<QuadricMatrix, TropPolynomial>;

/// Parses {"kind":"matrix","n":N,"upper":[...]} or
/// {"kind":"poly","vars":V,"terms":[{"exp":[...],"coef":"p/q"}]}.
/// Values are quoted rationals or "-inf"; integers are also accepted.
/// Throws InputError with a message starting "malformed document",
/// "non-integer exponent" or "empty support".
[[nodiscard]] Document parse_document(std::string_view text);

/// Canonical single-line JSON; parse_document(serialize(d)) == d.
[[nodiscard]] std::string serialize(const Document& d);

/// The document as a polynomial (matrices via poly_from_matrix).
[[nodiscard]] TropPolynomial as_polynomial(const Document& d);
/// The document as a quadric matrix (polynomials via matrix_from_poly).
[[nodiscard]] QuadricMatrix as_matrix(const Document& d);

}  // namespace tropdual
