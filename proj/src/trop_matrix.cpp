#include "tropdual/trop_matrix.hpp"

#include <numeric>
#include <sstream>

#include "tropdual/error.hpp"

namespace tropdual {
namespace {

std::vector<std::size_t> iota_labels(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t{1});
    return labels;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("overflow while scaling determinant entries");
    return out;
}

// Depth-first walk over permutations; entries are pre-scaled to integers so
// the inner loop is plain integer addition.
struct PermutationSearch {
    std::size_t n;
    const std::vector<std::int64_t>& scaled;
    const std::vector<char>& finite;
    __int128 best = 0;
    std::uint64_t count = 0;
    bool found = false;

    void run(std::size_t row, unsigned used, __int128 partial) {
        if (row == n) {
            if (!found || partial > best) {
                best = partial;
                count = 1;
                found = true;
            } else if (partial == best) {
                ++count;
            }
            return;
        }
        for (std::size_t col = 0; col < n; ++col) {
            if ((used >> col) & 1U) continue;
            std::size_t idx = row * n + col;
            if (!finite[idx]) continue;
            run(row + 1, used | (1U << col), partial + scaled[idx]);
        }
    }
};

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

TropMatrix::TropMatrix(std::size_t n, std::vector<TropValue> entries, bool symmetric)
    : n_(n), entries_(std::move(entries)), symmetric_(symmetric), row_labels_(iota_labels(n)),
      col_labels_(iota_labels(n)) {
    if (n_ == 0) throw InputError("matrix size must be positive");
    if (entries_.size() != n_ * n_) throw InputError("matrix entry count does not match size");
    if (symmetric_ && !is_symmetric_grid()) throw InputError("matrix marked symmetric is not symmetric");
}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<TropValue>> rows, bool symmetric)
    : TropMatrix(rows.size(),
                 [&] {
                     std::vector<TropValue> flat;
                     for (const auto& row : rows) {
                         if (row.size() != rows.size()) throw InputError("matrix rows must have equal length");
                         flat.insert(flat.end(), row.begin(), row.end());
                     }
                     return flat;
                 }(),
                 symmetric) {}

TropMatrix TropMatrix::from_upper(std::size_t n, const std::vector<TropValue>& upper) {
    if (upper.size() != n * (n + 1) / 2) throw InputError("upper triangle has wrong number of entries");
    std::vector<TropValue> flat(n * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            flat[i * n + j] = upper[k];
            flat[j * n + i] = upper[k];
            ++k;
        }
    }
    return TropMatrix(n, std::move(flat), true);
}

std::vector<TropValue> TropMatrix::upper() const {
    std::vector<TropValue> out;
    out.reserve(n_ * (n_ + 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) out.push_back(at(i, j));
    }
    return out;
}

TropMatrix TropMatrix::transposed() const {
    std::vector<TropValue> flat(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) flat[j * n_ + i] = at(i, j);
    }
    TropMatrix t(n_, std::move(flat), symmetric_);
    t.row_labels_ = col_labels_;
    t.col_labels_ = row_labels_;
    return t;
}

bool TropMatrix::is_symmetric_grid() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

std::string TropMatrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

TropDetResult trop_det(const TropMatrix& m) {
    const std::size_t n = m.size();
    if (n > kMaxDeterminantSize) {
        throw UnsupportedShape("tropical determinant is limited to size " + std::to_string(kMaxDeterminantSize));
    }
    std::int64_t lcm = 1;
    for (const auto& e : m.entries()) {
        if (e.is_finite()) lcm = checked_mul(lcm / std::gcd(lcm, e.value().den()), e.value().den());
    }
    std::vector<std::int64_t> scaled(n * n, 0);
    std::vector<char> finite(n * n, 0);
    for (std::size_t k = 0; k < n * n; ++k) {
        const auto& e = m.entries()[k];
        if (!e.is_finite()) continue;
        finite[k] = 1;
        scaled[k] = checked_mul(e.value().num(), lcm / e.value().den());
    }
    PermutationSearch search{n, scaled, finite};
    search.run(0, 0U, 0);

    TropDetResult result;
    if (!search.found) {
        result.value = NEG_INF;
        result.achiever_count = factorial(n);
    } else {
        if (search.best > INT64_MAX || search.best < INT64_MIN) throw OverflowError("determinant overflow");
        result.value = TropValue(Rational(static_cast<std::int64_t>(search.best), lcm));
        result.achiever_count = search.count;
    }
    result.degenerate = result.achiever_count >= 2;
    return result;
}

TropMatrix trop_minor(const TropMatrix& m, std::size_t i, std::size_t j) {
    const std::size_t n = m.size();
    if (n < 2) throw InputError("minor requires a matrix of size at least 2");
    if (i < 1 || i > n || j < 1 || j > n) throw InputError("minor index out of range");
    std::vector<TropValue> flat;
    flat.reserve((n - 1) * (n - 1));
    for (std::size_t r = 0; r < n; ++r) {
        if (r == i - 1) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (c == j - 1) continue;
            flat.push_back(m.at(r, c));
        }
    }
    TropMatrix out(n - 1, std::move(flat), m.symmetric() && i == j);
    out.row_labels_.clear();
    out.col_labels_.clear();
    for (std::size_t r = 0; r < n; ++r) {
        if (r != i - 1) out.row_labels_.push_back(m.row_labels_[r]);
        if (r != j - 1) out.col_labels_.push_back(m.col_labels_[r]);
    }
    return out;
}

TropMatrix trop_adjoint(const TropMatrix& m) {
    const std::size_t n = m.size();
    if (n < 2) throw InputError("adjoint requires a matrix of size at least 2");
    std::vector<TropValue> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.symmetric() && j < i) {
                flat[i * n + j] = flat[j * n + i];
                continue;
            }
            flat[i * n + j] = trop_det(trop_minor(m, i + 1, j + 1)).value;
        }
    }
    return TropMatrix(n, std::move(flat), m.symmetric());
}

}  // namespace tropdual
