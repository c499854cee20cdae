#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tropdual/trop_matrix.hpp"
#include "tropdual/trop_polynomial.hpp"

namespace tropdual {

/// Symmetric (n+1)×(n+1) matrix of the quadric x̄ A x̄ᵀ with x̄ = (x_1..x_n, 1).
class QuadricMatrix {
public:
    /// Throws InputError unless the grid is symmetric.
    explicit QuadricMatrix(const TropMatrix& m);
    static QuadricMatrix from_upper(std::size_t n, const std::vector<TropValue>& upper);

    [[nodiscard]] std::size_t size() const { return m_.size(); }
    [[nodiscard]] const TropValue& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
    [[nodiscard]] const TropMatrix& matrix() const { return m_; }
    [[nodiscard]] std::vector<TropValue> upper() const { return m_.upper(); }

    friend bool operator==(const QuadricMatrix& a, const QuadricMatrix& b) { return a.m_ == b.m_; }

private:
    TropMatrix m_;
};

/// ε_ij = a_ij - (a_ii + a_jj)/2, zero on the diagonal, -inf where a_ij is.
class DistortionMatrix {
public:
    /// Throws InputError if the grid is not symmetric or the diagonal is not 0.
    explicit DistortionMatrix(const TropMatrix& eps);

    [[nodiscard]] std::size_t size() const { return m_.size(); }
    [[nodiscard]] const TropValue& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
    [[nodiscard]] const TropMatrix& matrix() const { return m_; }

private:
    TropMatrix m_;
};

/// Support must lie in 2Δ_n; the constant term lands at index n+1.
[[nodiscard]] QuadricMatrix matrix_from_poly(const TropPolynomial& f);
[[nodiscard]] TropPolynomial poly_from_matrix(const QuadricMatrix& a);

/// The tropical adjoint. Requires size >= 2.
[[nodiscard]] QuadricMatrix dual_quadric(const QuadricMatrix& a);

/// Throws InputError when a diagonal entry is -inf.
[[nodiscard]] DistortionMatrix distortion_matrix(const QuadricMatrix& a);

/// G_ij = g_ij + Σ_{l≠i,j} a_ll, g_ii = 0, g_ij = (a_ii + a_jj)/2. 1-based.
[[nodiscard]] TropValue g_factor(const QuadricMatrix& a, std::size_t i, std::size_t j);

/// (G_ij, TropDet of the (i,j)-minor of the distortion matrix). Their sum is
/// the (i,j)-minor determinant of `a`. 1-based.
[[nodiscard]] std::pair<TropValue, TropValue> decompose_minor(const QuadricMatrix& a, std::size_t i, std::size_t j);

enum class DistortionClass { all_negative, all_positive, mixed };

[[nodiscard]] std::string_view to_string(DistortionClass c);

/// Sign pattern of the off-diagonal entries. -inf counts as negative; any
/// zero entry makes the pattern mixed. A 1×1 matrix is all_negative.
[[nodiscard]] DistortionClass classify_by_distortion(const DistortionMatrix& e);

enum class RegularityStatus { regular, not_regular, degenerate };

[[nodiscard]] std::string_view to_string(RegularityStatus s);

struct EntryIndex {
    std::size_t i = 0;  // 1-based
    std::size_t j = 0;
    friend bool operator==(const EntryIndex&, const EntryIndex&) = default;
};

struct RegularityWitness {
    /// Entry that fixed the candidate constant.
    EntryIndex reference;
    /// First entry disagreeing with it (or with the -inf pattern).
    EntryIndex violating;
};

struct RegularityVerdict {
    RegularityStatus status = RegularityStatus::degenerate;
    /// Set when regular.
    TropValue lifting_constant;
    std::optional<RegularityWitness> witness;
    TropMatrix double_dual{1, {NEG_INF}};
};

/// Compares a**_ij - a_ij over the upper triangle in row-major order.
[[nodiscard]] RegularityVerdict is_regular(const QuadricMatrix& a);

enum class CriterionMode { non_strict, strict };

/// For all-negative ε: ε_ji vs max_{k≠i,j} ε_jk + max_{h≠i,j} ε_hi for all
/// i ≠ j. Empty maxima are -inf. `strict` uses >, the default uses >=.
/// Throws InputError if an off-diagonal entry is >= 0.
[[nodiscard]] bool negative_regularity_criterion(const DistortionMatrix& e,
                                                 CriterionMode mode = CriterionMode::non_strict);

/// Closed form ε_ji ⊕ (max_{k≠i,j} ε_jk ⊙ max_{h≠i,j} ε_hi), 0 when i == j.
/// Same precondition as the criterion. 1-based.
[[nodiscard]] TropValue minor_formula_negative(const DistortionMatrix& e, std::size_t i, std::size_t j);

}  // namespace tropdual
