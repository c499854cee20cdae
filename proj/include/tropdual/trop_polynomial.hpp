#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tropdual/trop_value.hpp"

namespace tropdual {

using Exponent = std::vector<int>;

/// ⊕ over monomials a_ω ⊙ x^ω, stored as exponent -> coefficient.
///
/// Inserting an exponent twice keeps the ⊕ (max) of the coefficients.
/// -inf coefficients are the semiring zero and are never stored, so the
/// stored exponents are exactly the support.
class TropPolynomial {
public:
    explicit TropPolynomial(std::size_t nvars);

    /// Throws InputError when the exponent length differs from nvars.
    void add_term(const Exponent& exponent, const TropValue& coefficient);

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] const std::map<Exponent, TropValue>& terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::vector<Exponent> support() const;
    /// Coefficient of x^exponent, -inf when absent.
    [[nodiscard]] TropValue coefficient(const Exponent& exponent) const;

    /// Throws InputError when no finite term is stored.
    void require_nonempty() const;

    /// Adds c to every coefficient.
    [[nodiscard]] TropPolynomial shifted(const Rational& c) const;

    friend bool operator==(const TropPolynomial&, const TropPolynomial&) = default;

    [[nodiscard]] std::string str() const;

private:
    std::size_t nvars_;
    std::map<Exponent, TropValue> terms_;
};

/// max over terms of a_ω + ω·x.
[[nodiscard]] TropValue eval(const TropPolynomial& f, std::span<const Rational> x);

/// Exponents attaining eval(f, x) when every height is replaced by
/// `sign`·a_ω and the objective is ω·x − sign·a_ω.
[[nodiscard]] std::vector<Exponent> maximizing_terms(const TropPolynomial& f, std::span<const Rational> x, int sign);

}  // namespace tropdual
