#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tropdual/trop_polynomial.hpp"
#include "tropdual/trop_value.hpp"

namespace tropdual {

/// Variable name -> positive exponent. Absent variables have exponent 0.
using Monomial = std::map<std::string, int>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class SymbolicPoly {
public:
    SymbolicPoly() = default;
    SymbolicPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)
    SymbolicPoly(long c) : SymbolicPoly(mpq_class(c)) {}  // NOLINT(google-explicit-constructor)

    static SymbolicPoly var(const std::string& name);
    static SymbolicPoly monomial(const Monomial& m, const mpq_class& c = 1);

    [[nodiscard]] const std::map<Monomial, mpq_class>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::set<std::string> variables() const;
    [[nodiscard]] int degree(const std::string& v) const;
    [[nodiscard]] int total_degree() const;
    /// Coefficient of v^k as a polynomial in the other variables.
    [[nodiscard]] SymbolicPoly coefficient_in(const std::string& v, int k) const;
    [[nodiscard]] SymbolicPoly derivative(const std::string& v) const;
    [[nodiscard]] SymbolicPoly substitute(const std::string& v, const SymbolicPoly& by) const;
    /// Replaces the listed variables by numbers; the others stay symbolic.
    [[nodiscard]] SymbolicPoly evaluate(const std::map<std::string, mpq_class>& values) const;
    [[nodiscard]] SymbolicPoly pow(unsigned k) const;

    /// Divided by the rational content, first term (in storage order) positive.
    [[nodiscard]] SymbolicPoly primitive_part() const;
    /// Divided by the largest monomial in `vars` that divides every term.
    [[nodiscard]] SymbolicPoly strip_monomial_content(const std::set<std::string>& vars) const;

    SymbolicPoly operator-() const;
    friend SymbolicPoly operator+(const SymbolicPoly& a, const SymbolicPoly& b);
    friend SymbolicPoly operator-(const SymbolicPoly& a, const SymbolicPoly& b);
    friend SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b);
    SymbolicPoly& operator+=(const SymbolicPoly& o) { return *this = *this + o; }
    SymbolicPoly& operator-=(const SymbolicPoly& o) { return *this = *this - o; }
    SymbolicPoly& operator*=(const SymbolicPoly& o) { return *this = *this * o; }
    friend bool operator==(const SymbolicPoly& a, const SymbolicPoly& b) { return a.terms_ == b.terms_; }

    [[nodiscard]] std::string str() const;

private:
    void add(const Monomial& m, const mpq_class& c);
    std::map<Monomial, mpq_class> terms_;
};

/// True when a = q·b for a nonzero rational q (both nonzero).
[[nodiscard]] bool proportional(const SymbolicPoly& a, const SymbolicPoly& b);

class SymbolicMatrix {
public:
    SymbolicMatrix(std::size_t n, std::vector<SymbolicPoly> entries);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] const SymbolicPoly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    [[nodiscard]] SymbolicMatrix scaled(const SymbolicPoly& s) const;
    [[nodiscard]] SymbolicMatrix evaluate(const std::map<std::string, mpq_class>& values) const;
    [[nodiscard]] bool is_symmetric() const;

    friend bool operator==(const SymbolicMatrix& a, const SymbolicMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

private:
    std::size_t n_;
    std::vector<SymbolicPoly> entries_;
};

/// Laplace expansion with memoisation over column subsets.
[[nodiscard]] SymbolicPoly det(const SymbolicMatrix& m);
/// Classical adjugate: transpose of the cofactor matrix.
[[nodiscard]] SymbolicMatrix adjugate(const SymbolicMatrix& m);
/// C* := -Adj(C). Requires n >= 2.
[[nodiscard]] SymbolicMatrix sym_adjoint(const SymbolicMatrix& m);

/// Symmetric N×N matrix named c1..cN on the diagonal, then the upper
/// triangle row by row (for N = 3: c4 = (1,2), c5 = (1,3), c6 = (2,3)).
[[nodiscard]] SymbolicMatrix symbolic_quadric_matrix(std::size_t n);
/// Name of entry (i, j) (1-based) in symbolic_quadric_matrix(n).
[[nodiscard]] std::string quadric_entry_name(std::size_t n, std::size_t i, std::size_t j);

/// Determinant of the Sylvester matrix of p and q in `var`.
[[nodiscard]] SymbolicPoly sylvester_resultant(const SymbolicPoly& p, const SymbolicPoly& q, const std::string& var);
/// Same with formal degrees, which may exceed the actual degrees.
[[nodiscard]] SymbolicPoly sylvester_resultant(const SymbolicPoly& p, const SymbolicPoly& q, const std::string& var,
                                               int deg_p, int deg_q);

struct DualCurve {
    /// Resultant before any stripping, in alpha0..alpha2 and the coefficients.
    SymbolicPoly resultant;
    /// Rational and alpha-monomial content removed.
    SymbolicPoly projective;
    /// projective at (alpha0, alpha1, alpha2) = (-a0, -a1, 1).
    SymbolicPoly affine;
};

/// Dual of a plane curve homogeneous of degree 2 or 3 in t0, t1, t2.
/// The tangent line is alpha0·t0 + alpha1·t1 + alpha2·t2 = 0.
[[nodiscard]] DualCurve dual_plane_curve(const SymbolicPoly& f);

/// Tropical linear forms of the monomials: each monomial keeps its
/// exponents, scalars and signs are dropped. Read as an ⊕ of ⊙-products.
using TropicalForm = std::set<Monomial>;

[[nodiscard]] TropicalForm tropicalize_symbolic(const SymbolicPoly& p);
/// Renders "2a6 ⊕ a2⊙a3" with variable names mapped through `rename`.
[[nodiscard]] std::string tropical_form_str(const TropicalForm& form,
                                            const std::map<std::string, std::string>& rename = {});

/// Every variable must be mapped; throws InputError otherwise.
[[nodiscard]] TropValue tropicalize(const SymbolicPoly& p, const std::map<std::string, TropValue>& val);
/// Variables in `free_vars` become the polynomial's variables, in order.
[[nodiscard]] TropPolynomial tropicalize(const SymbolicPoly& p, const std::map<std::string, TropValue>& val,
                                         const std::vector<std::string>& free_vars);

}  // namespace tropdual
