#include "tropdual/symbolic.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "tropdual/error.hpp"

namespace tropdual {
namespace {

int exponent_of(const Monomial& m, const std::string& v) {
    auto it = m.find(v);
    return it == m.end() ? 0 : it->second;
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b) out[v] += e;
    return out;
}

const std::set<std::string> kAlpha{"alpha0", "alpha1", "alpha2"};

}  // namespace

SymbolicPoly::SymbolicPoly(const mpq_class& c) { add({}, c); }

SymbolicPoly SymbolicPoly::var(const std::string& name) { return monomial({{name, 1}}); }

SymbolicPoly SymbolicPoly::monomial(const Monomial& m, const mpq_class& c) {
    SymbolicPoly p;
    Monomial clean;
    for (const auto& [v, e] : m) {
        if (e < 0) throw InputError("negative exponent in symbolic monomial");
        if (e > 0) clean[v] = e;
    }
    p.add(clean, c);
    return p;
}

void SymbolicPoly::add(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

std::set<std::string> SymbolicPoly::variables() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m) out.insert(v);
    }
    return out;
}

int SymbolicPoly::degree(const std::string& v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) d = std::max(d, exponent_of(m, v));
    return d;
}

int SymbolicPoly::total_degree() const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [v, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

SymbolicPoly SymbolicPoly::coefficient_in(const std::string& v, int k) const {
    SymbolicPoly out;
    for (const auto& [m, c] : terms_) {
        if (exponent_of(m, v) != k) continue;
        Monomial rest = m;
        rest.erase(v);
        out.add(rest, c);
    }
    return out;
}

SymbolicPoly SymbolicPoly::derivative(const std::string& v) const {
    SymbolicPoly out;
    for (const auto& [m, c] : terms_) {
        int e = exponent_of(m, v);
        if (e == 0) continue;
        Monomial lowered = m;
        if (e == 1) {
            lowered.erase(v);
        } else {
            lowered[v] = e - 1;
        }
        out.add(lowered, c * e);
    }
    return out;
}

SymbolicPoly SymbolicPoly::pow(unsigned k) const {
    SymbolicPoly out(1);
    for (unsigned i = 0; i < k; ++i) out *= *this;
    return out;
}

SymbolicPoly SymbolicPoly::substitute(const std::string& v, const SymbolicPoly& by) const {
    std::map<int, SymbolicPoly> powers;
    SymbolicPoly out;
    for (const auto& [m, c] : terms_) {
        int e = exponent_of(m, v);
        Monomial rest = m;
        rest.erase(v);
        if (e == 0) {
            out.add(rest, c);
            continue;
        }
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, by.pow(static_cast<unsigned>(e))).first;
        out += monomial(rest, c) * it->second;
    }
    return out;
}

SymbolicPoly SymbolicPoly::evaluate(const std::map<std::string, mpq_class>& values) const {
    SymbolicPoly out;
    for (const auto& [m, c] : terms_) {
        mpq_class coef = c;
        Monomial rest;
        for (const auto& [v, e] : m) {
            auto it = values.find(v);
            if (it == values.end()) {
                rest[v] = e;
                continue;
            }
            mpq_class p = 1;
            for (int i = 0; i < e; ++i) p *= it->second;
            coef *= p;
        }
        out.add(rest, coef);
    }
    return out;
}

SymbolicPoly SymbolicPoly::primitive_part() const {
    if (terms_.empty()) return {};
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, c.get_num());
        den_lcm = lcm(den_lcm, c.get_den());
    }
    mpq_class content(num_gcd, den_lcm);
    if (terms_.begin()->second < 0) content = -content;
    SymbolicPoly out;
    for (const auto& [m, c] : terms_) out.add(m, c / content);
    return out;
}

SymbolicPoly SymbolicPoly::strip_monomial_content(const std::set<std::string>& vars) const {
    if (terms_.empty()) return {};
    Monomial common;
    for (const auto& v : vars) {
        int lowest = exponent_of(terms_.begin()->first, v);
        for (const auto& [m, c] : terms_) lowest = std::min(lowest, exponent_of(m, v));
        if (lowest > 0) common[v] = lowest;
    }
    SymbolicPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial reduced = m;
        for (const auto& [v, e] : common) {
            if ((reduced[v] -= e) == 0) reduced.erase(v);
        }
        out.add(reduced, c);
    }
    return out;
}

SymbolicPoly SymbolicPoly::operator-() const {
    SymbolicPoly out;
    for (const auto& [m, c] : terms_) out.add(m, -c);
    return out;
}

SymbolicPoly operator+(const SymbolicPoly& a, const SymbolicPoly& b) {
    SymbolicPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add(m, c);
    return out;
}

SymbolicPoly operator-(const SymbolicPoly& a, const SymbolicPoly& b) { return a + (-b); }

SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b) {
    SymbolicPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add(multiply(ma, mb), ca * cb);
    }
    return out;
}

std::string SymbolicPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpq_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (mag != 1 || m.empty()) {
            os << mag.get_str();
            wrote = true;
        }
        for (const auto& [v, e] : m) {
            if (wrote) os << "*";
            os << v;
            if (e > 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

bool proportional(const SymbolicPoly& a, const SymbolicPoly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    return a.primitive_part() == b.primitive_part();
}

SymbolicMatrix::SymbolicMatrix(std::size_t n, std::vector<SymbolicPoly> entries) : n_(n), entries_(std::move(entries)) {
    if (n == 0 || entries_.size() != n * n) throw InputError("symbolic matrix needs n*n entries with n > 0");
}

SymbolicMatrix SymbolicMatrix::scaled(const SymbolicPoly& s) const {
    std::vector<SymbolicPoly> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e * s);
    return {n_, std::move(out)};
}

SymbolicMatrix SymbolicMatrix::evaluate(const std::map<std::string, mpq_class>& values) const {
    std::vector<SymbolicPoly> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.evaluate(values));
    return {n_, std::move(out)};
}

bool SymbolicMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!(at(i, j) == at(j, i))) return false;
        }
    }
    return true;
}

SymbolicPoly det(const SymbolicMatrix& m) {
    const std::size_t n = m.size();
    if (n > 20) throw UnsupportedShape("symbolic determinant limited to 20x20");
    std::vector<std::optional<SymbolicPoly>> memo(std::size_t{1} << n);
    // Minor on rows popcount(used).. n-1 and the columns not in `used`.
    auto rec = [&](auto&& self, std::size_t used, std::size_t row) -> SymbolicPoly {
        if (row == n) return SymbolicPoly(1);
        if (memo[used]) return *memo[used];
        SymbolicPoly total;
        int sign = 1;
        for (std::size_t col = 0; col < n; ++col) {
            if (used & (std::size_t{1} << col)) continue;
            const SymbolicPoly& entry = m.at(row, col);
            if (!entry.is_zero()) {
                SymbolicPoly term = entry * self(self, used | (std::size_t{1} << col), row + 1);
                total += sign > 0 ? term : -term;
            }
            sign = -sign;
        }
        memo[used] = total;
        return total;
    };
    return rec(rec, 0, 0);
}

SymbolicMatrix adjugate(const SymbolicMatrix& m) {
    const std::size_t n = m.size();
    if (n < 2) throw InputError("adjugate needs n >= 2");
    std::vector<SymbolicPoly> out(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            std::vector<SymbolicPoly> minor;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i != r && j != c) minor.push_back(m.at(i, j));
                }
            }
            SymbolicPoly cof = det(SymbolicMatrix(n - 1, std::move(minor)));
            out[c * n + r] = (r + c) % 2 == 0 ? cof : -cof;
        }
    }
    return {n, std::move(out)};
}

SymbolicMatrix sym_adjoint(const SymbolicMatrix& m) { return adjugate(m).scaled(SymbolicPoly(-1)); }

std::string quadric_entry_name(std::size_t n, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n || j > n) throw InputError("quadric entry index out of range");
    if (i > j) std::swap(i, j);
    if (i == j) return "c" + std::to_string(i);
    std::size_t k = n;
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = r + 1; c <= n; ++c) {
            ++k;
            if (r == i && c == j) return "c" + std::to_string(k);
        }
    }
    return {};
}

SymbolicMatrix symbolic_quadric_matrix(std::size_t n) {
    std::vector<SymbolicPoly> entries;
    entries.reserve(n * n);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) entries.push_back(SymbolicPoly::var(quadric_entry_name(n, i, j)));
    }
    return {n, std::move(entries)};
}

SymbolicPoly sylvester_resultant(const SymbolicPoly& p, const SymbolicPoly& q, const std::string& var) {
    return sylvester_resultant(p, q, var, p.degree(var), q.degree(var));
}

SymbolicPoly sylvester_resultant(const SymbolicPoly& p, const SymbolicPoly& q, const std::string& var, int deg_p,
                                 int deg_q) {
    if (p.is_zero() || q.is_zero()) throw InputError("resultant of the zero polynomial");
    if (deg_p < p.degree(var) || deg_q < q.degree(var)) throw InputError("formal degree below actual degree");
    const auto size = static_cast<std::size_t>(deg_p + deg_q);
    if (size == 0) return SymbolicPoly(1);
    std::vector<SymbolicPoly> grid(size * size);
    for (int r = 0; r < deg_q; ++r) {
        for (int k = 0; k <= deg_p; ++k) grid[r * size + r + k] = p.coefficient_in(var, deg_p - k);
    }
    for (int r = 0; r < deg_p; ++r) {
        for (int k = 0; k <= deg_q; ++k) grid[(deg_q + r) * size + r + k] = q.coefficient_in(var, deg_q - k);
    }
    return det(SymbolicMatrix(size, std::move(grid)));
}

DualCurve dual_plane_curve(const SymbolicPoly& f) {
    int t_degree = -1;
    for (const auto& [m, c] : f.terms()) {
        int t = exponent_of(m, "t0") + exponent_of(m, "t1") + exponent_of(m, "t2");
        if (t_degree >= 0 && t != t_degree) throw InputError("curve must be homogeneous in t0, t1, t2");
        t_degree = t;
    }
    if (t_degree < 2 || t_degree > 3) throw UnsupportedShape("dual curves are computed for degree 2 or 3 only");

    const SymbolicPoly u = SymbolicPoly::var("u");
    const SymbolicPoly v = SymbolicPoly::var("v");
    const SymbolicPoly a0 = SymbolicPoly::var("alpha0");
    const SymbolicPoly a1 = SymbolicPoly::var("alpha1");
    const SymbolicPoly a2 = SymbolicPoly::var("alpha2");
    // Points of the line alpha·t = 0, parametrised by (u, v), denominators cleared.
    SymbolicPoly on_line = f.substitute("t0", -(a1 * u + a2 * v)).substitute("t1", a0 * u).substitute("t2", a0 * v);
    // Both partials are homogeneous of degree d-1 in (u, v); set v = 1 and keep the formal degree.
    SymbolicPoly fu = on_line.derivative("u").substitute("v", SymbolicPoly(1));
    SymbolicPoly fv = on_line.derivative("v").substitute("v", SymbolicPoly(1));
    if (fu.is_zero() || fv.is_zero()) throw InputError("degenerate curve: a tangent-condition polynomial vanishes");

    DualCurve out;
    out.resultant = sylvester_resultant(fu, fv, "u", t_degree - 1, t_degree - 1);
    if (out.resultant.is_zero()) throw InputError("degenerate curve: resultant vanishes identically");
    out.projective = out.resultant.strip_monomial_content(kAlpha).primitive_part();
    out.affine = out.projective.substitute("alpha0", -SymbolicPoly::var("a0"))
                     .substitute("alpha1", -SymbolicPoly::var("a1"))
                     .substitute("alpha2", SymbolicPoly(1));
    return out;
}

TropicalForm tropicalize_symbolic(const SymbolicPoly& p) {
    TropicalForm out;
    for (const auto& [m, c] : p.terms()) out.insert(m);
    return out;
}

std::string tropical_form_str(const TropicalForm& form, const std::map<std::string, std::string>& rename) {
    if (form.empty()) return "-inf";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& m : form) {
        if (!first_term) os << " ⊕ ";
        first_term = false;
        if (m.empty()) {
            os << "0";
            continue;
        }
        bool first_factor = true;
        for (const auto& [v, e] : m) {
            if (!first_factor) os << "⊙";
            first_factor = false;
            auto it = rename.find(v);
            if (e > 1) os << e;
            os << (it == rename.end() ? v : it->second);
        }
    }
    return os.str();
}

TropValue tropicalize(const SymbolicPoly& p, const std::map<std::string, TropValue>& val) {
    TropValue out = NEG_INF;
    for (const auto& [m, c] : p.terms()) {
        TropValue term(0);
        for (const auto& [v, e] : m) {
            auto it = val.find(v);
            if (it == val.end()) throw InputError("no valuation given for variable " + v);
            term = t_mul(term, t_scale(Rational(e), it->second));
        }
        out = t_add(out, term);
    }
    return out;
}

TropPolynomial tropicalize(const SymbolicPoly& p, const std::map<std::string, TropValue>& val,
                           const std::vector<std::string>& free_vars) {
    TropPolynomial out(free_vars.size());
    for (const auto& [m, c] : p.terms()) {
        TropValue coef(0);
        Exponent e(free_vars.size(), 0);
        for (const auto& [v, k] : m) {
            auto slot = std::find(free_vars.begin(), free_vars.end(), v);
            if (slot != free_vars.end()) {
                e[static_cast<std::size_t>(slot - free_vars.begin())] = k;
                continue;
            }
            auto it = val.find(v);
            if (it == val.end()) throw InputError("no valuation given for variable " + v);
            coef = t_mul(coef, t_scale(Rational(k), it->second));
        }
        out.add_term(e, coef);
    }
    return out;
}

}  // namespace tropdual
