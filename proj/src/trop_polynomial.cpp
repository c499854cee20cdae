#include "tropdual/trop_polynomial.hpp"

#include <sstream>

#include "tropdual/error.hpp"

namespace tropdual {
namespace {

Rational dot(const Exponent& w, std::span<const Rational> x) {
    Rational s;
    for (std::size_t k = 0; k < w.size(); ++k) s += x[k] * Rational(w[k]);
    return s;
}

}  // namespace

TropPolynomial::TropPolynomial(std::size_t nvars) : nvars_(nvars) {
    if (nvars_ == 0) throw InputError("polynomial needs at least one variable");
}

void TropPolynomial::add_term(const Exponent& exponent, const TropValue& coefficient) {
    if (exponent.size() != nvars_) throw InputError("exponent length does not match the number of variables");
    if (coefficient.is_neg_inf()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) it->second = t_add(it->second, coefficient);
}

std::vector<Exponent> TropPolynomial::support() const {
    std::vector<Exponent> out;
    out.reserve(terms_.size());
    for (const auto& [e, _] : terms_) out.push_back(e);
    return out;
}

TropValue TropPolynomial::coefficient(const Exponent& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? NEG_INF : it->second;
}

void TropPolynomial::require_nonempty() const {
    if (terms_.empty()) throw InputError("polynomial has empty support");
}

TropPolynomial TropPolynomial::shifted(const Rational& c) const {
    TropPolynomial out(nvars_);
    for (const auto& [e, a] : terms_) out.add_term(e, t_mul(a, TropValue(c)));
    return out;
}

std::string TropPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, a] : terms_) {
        os << (first ? "" : " + ") << a << "*x^(";
        for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
        os << ')';
        first = false;
    }
    return os.str();
}

TropValue eval(const TropPolynomial& f, std::span<const Rational> x) {
    if (x.size() != f.nvars()) throw InputError("evaluation point has wrong dimension");
    TropValue best = NEG_INF;
    for (const auto& [e, a] : f.terms()) best = t_add(best, t_mul(a, TropValue(dot(e, x))));
    return best;
}

std::vector<Exponent> maximizing_terms(const TropPolynomial& f, std::span<const Rational> x, int sign) {
    if (x.size() != f.nvars()) throw InputError("evaluation point has wrong dimension");
    std::vector<Exponent> best_terms;
    Rational best;
    for (const auto& [e, a] : f.terms()) {
        Rational v = dot(e, x) - Rational(sign) * a.value();
        if (best_terms.empty() || v > best) {
            best = v;
            best_terms.assign(1, e);
        } else if (v == best) {
            best_terms.push_back(e);
        }
    }
    return best_terms;
}

}  // namespace tropdual
