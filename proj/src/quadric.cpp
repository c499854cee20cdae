#include "tropdual/quadric.hpp"

#include <string>

#include "tropdual/error.hpp"

namespace tropdual {
namespace {

const Rational kHalf(1, 2);

void check_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n || j > n) {
        throw InputError("index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range for size " +
                         std::to_string(n));
    }
}

void require_negative(const DistortionMatrix& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (i != j && e.at(i, j) >= TropValue(0)) {
                throw InputError("every off-diagonal distortion must be negative");
            }
        }
    }
}

// max over k ∉ {skip1, skip2} of e(row, k) when by_row, else e(k, col).
TropValue partial_max(const DistortionMatrix& e, std::size_t fixed, bool by_row, std::size_t skip1,
                      std::size_t skip2) {
    TropValue best = NEG_INF;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (k == skip1 || k == skip2) continue;
        best = t_add(best, by_row ? e.at(fixed, k) : e.at(k, fixed));
    }
    return best;
}

}  // namespace

QuadricMatrix::QuadricMatrix(const TropMatrix& m) : m_(m) {
    if (!m.is_symmetric_grid()) throw InputError("quadric matrix must be symmetric");
}

QuadricMatrix QuadricMatrix::from_upper(std::size_t n, const std::vector<TropValue>& upper) {
    return QuadricMatrix(TropMatrix::from_upper(n, upper));
}

DistortionMatrix::DistortionMatrix(const TropMatrix& eps) : m_(eps) {
    if (!eps.is_symmetric_grid()) throw InputError("distortion matrix must be symmetric");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (eps.at(i, i) != TropValue(0)) throw InputError("distortion matrix must have a zero diagonal");
    }
}

QuadricMatrix matrix_from_poly(const TropPolynomial& f) {
    const std::size_t n = f.nvars();
    const std::size_t size = n + 1;
    std::vector<TropValue> grid(size * size, NEG_INF);
    for (const auto& [e, a] : f.terms()) {
        std::vector<std::size_t> slots;
        for (std::size_t k = 0; k < n; ++k) {
            if (e[k] < 0) throw InputError("quadric exponents must be non-negative");
            for (int r = 0; r < e[k]; ++r) slots.push_back(k);
        }
        if (slots.size() > 2) throw UnsupportedShape("support is not quadric: total degree exceeds 2");
        while (slots.size() < 2) slots.push_back(n);
        grid[slots[0] * size + slots[1]] = a;
        grid[slots[1] * size + slots[0]] = a;
    }
    return QuadricMatrix(TropMatrix(size, std::move(grid), true));
}

TropPolynomial poly_from_matrix(const QuadricMatrix& a) {
    const std::size_t n = a.size() - 1;
    TropPolynomial f(n);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
            Exponent e(n, 0);
            if (i < n) ++e[i];
            if (j < n) ++e[j];
            f.add_term(e, a.at(i, j));
        }
    }
    return f;
}

QuadricMatrix dual_quadric(const QuadricMatrix& a) { return QuadricMatrix(trop_adjoint(a.matrix())); }

DistortionMatrix distortion_matrix(const QuadricMatrix& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i, i).is_neg_inf()) throw InputError("distortion needs a finite diagonal");
    }
    std::vector<TropValue> eps(n * n, TropValue(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const TropValue& aij = a.at(i, j);
            eps[i * n + j] = aij.is_neg_inf()
                                 ? NEG_INF
                                 : TropValue(aij.value() - kHalf * (a.at(i, i).value() + a.at(j, j).value()));
        }
    }
    return DistortionMatrix(TropMatrix(n, std::move(eps), true));
}

TropValue g_factor(const QuadricMatrix& a, std::size_t i, std::size_t j) {
    const std::size_t n = a.size();
    check_index(n, i, j);
    --i;
    --j;
    TropValue g = i == j ? TropValue(0) : t_mul(t_scale(kHalf, a.at(i, i)), t_scale(kHalf, a.at(j, j)));
    for (std::size_t l = 0; l < n; ++l) {
        if (l != i && l != j) g = t_mul(g, a.at(l, l));
    }
    return g;
}

std::pair<TropValue, TropValue> decompose_minor(const QuadricMatrix& a, std::size_t i, std::size_t j) {
    check_index(a.size(), i, j);
    DistortionMatrix e = distortion_matrix(a);
    return {g_factor(a, i, j), trop_det(trop_minor(e.matrix(), i, j)).value};
}

std::string_view to_string(DistortionClass c) {
    switch (c) {
        case DistortionClass::all_negative: return "all_negative";
        case DistortionClass::all_positive: return "all_positive";
        case DistortionClass::mixed: break;
    }
    return "mixed";
}

DistortionClass classify_by_distortion(const DistortionMatrix& e) {
    bool any_nonneg = false;
    bool any_nonpos = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (e.at(i, j) >= TropValue(0)) any_nonneg = true;
            if (e.at(i, j) <= TropValue(0)) any_nonpos = true;
        }
    }
    if (!any_nonneg) return DistortionClass::all_negative;
    if (!any_nonpos) return DistortionClass::all_positive;
    return DistortionClass::mixed;
}

std::string_view to_string(RegularityStatus s) {
    switch (s) {
        case RegularityStatus::regular: return "regular";
        case RegularityStatus::not_regular: return "not_regular";
        case RegularityStatus::degenerate: break;
    }
    return "degenerate";
}

RegularityVerdict is_regular(const QuadricMatrix& a) {
    RegularityVerdict verdict;
    verdict.double_dual = dual_quadric(dual_quadric(a)).matrix();
    const TropMatrix& dd = verdict.double_dual;
    std::optional<EntryIndex> reference;
    Rational lambda;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i; j < a.size(); ++j) {
            EntryIndex here{i + 1, j + 1};
            const TropValue& x = a.at(i, j);
            const TropValue& y = dd.at(i, j);
            if (x.is_finite() != y.is_finite()) {
                verdict.status = RegularityStatus::degenerate;
                verdict.witness = RegularityWitness{reference.value_or(here), here};
                return verdict;
            }
            if (x.is_neg_inf()) continue;
            Rational diff = y.value() - x.value();
            if (!reference) {
                reference = here;
                lambda = diff;
            } else if (diff != lambda) {
                verdict.status = RegularityStatus::not_regular;
                verdict.witness = RegularityWitness{*reference, here};
                return verdict;
            }
        }
    }
    if (!reference) {
        verdict.status = RegularityStatus::degenerate;
        return verdict;
    }
    verdict.status = RegularityStatus::regular;
    verdict.lifting_constant = lambda;
    return verdict;
}

bool negative_regularity_criterion(const DistortionMatrix& e, CriterionMode mode) {
    require_negative(e);
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (i == j) continue;
            TropValue rhs = t_mul(partial_max(e, j, true, i, j), partial_max(e, i, false, i, j));
            const TropValue& lhs = e.at(j, i);
            bool holds = mode == CriterionMode::strict ? lhs > rhs : lhs >= rhs;
            if (!holds) return false;
        }
    }
    return true;
}

TropValue minor_formula_negative(const DistortionMatrix& e, std::size_t i, std::size_t j) {
    check_index(e.size(), i, j);
    require_negative(e);
    if (i == j) return TropValue(0);
    --i;
    --j;
    return t_add(e.at(j, i), t_mul(partial_max(e, j, true, i, j), partial_max(e, i, false, i, j)));
}

}  // namespace tropdual
