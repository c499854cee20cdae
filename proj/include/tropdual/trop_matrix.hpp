#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tropdual/trop_value.hpp"

namespace tropdual {

/// Square matrix over the max-plus semiring.
///
/// Rows and columns remember the 1-based index they had in the matrix they
/// were cut from, so minors of minors can still be reported in primal terms.
class TropMatrix {
public:
    /// Row-major entries; throws InputError if n == 0, the entry count is
    /// not n*n, or `symmetric` is set for a non-symmetric grid.
    TropMatrix(std::size_t n, std::vector<TropValue> entries, bool symmetric = false);
    TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows, bool symmetric = false);

    /// Symmetric matrix from its row-major upper triangle (n(n+1)/2 values).
    static TropMatrix from_upper(std::size_t n, const std::vector<TropValue>& upper);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] bool symmetric() const { return symmetric_; }
    /// 0-based access.
    [[nodiscard]] const TropValue& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    [[nodiscard]] const std::vector<TropValue>& entries() const { return entries_; }
    /// Row-major upper triangle, the inverse of from_upper.
    [[nodiscard]] std::vector<TropValue> upper() const;

    [[nodiscard]] const std::vector<std::size_t>& row_labels() const { return row_labels_; }
    [[nodiscard]] const std::vector<std::size_t>& col_labels() const { return col_labels_; }

    [[nodiscard]] TropMatrix transposed() const;
    [[nodiscard]] bool is_symmetric_grid() const;

    friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    [[nodiscard]] std::string str() const;

private:
    std::size_t n_;
    std::vector<TropValue> entries_;
    bool symmetric_;
    std::vector<std::size_t> row_labels_;
    std::vector<std::size_t> col_labels_;

    friend TropMatrix trop_minor(const TropMatrix& m, std::size_t i, std::size_t j);
};

struct TropDetResult {
    TropValue value;
    /// Number of permutations attaining `value`.
    std::uint64_t achiever_count = 0;
    /// Two or more permutations attain the maximum.
    bool degenerate = false;
};

/// Largest side accepted by trop_det; achiever counting needs full enumeration.
inline constexpr std::size_t kMaxDeterminantSize = 8;

/// max over permutations of the sum of selected entries, with achiever count.
/// Throws UnsupportedShape for n > kMaxDeterminantSize.
[[nodiscard]] TropDetResult trop_det(const TropMatrix& m);

/// Deletes row i and column j (1-based, as in reports). Requires n >= 2.
/// The result is marked symmetric when m is symmetric and i == j.
[[nodiscard]] TropMatrix trop_minor(const TropMatrix& m, std::size_t i, std::size_t j);

/// out(i, j) = trop_det(trop_minor(m, i, j)).value. Requires n >= 2.
[[nodiscard]] TropMatrix trop_adjoint(const TropMatrix& m);

}  // namespace tropdual
