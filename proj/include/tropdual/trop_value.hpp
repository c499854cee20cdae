#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "tropdual/rational.hpp"

namespace tropdual {

/// Element of the max-plus semiring: an exact rational or the bottom element.
///
/// The bottom element (written "-inf") is the identity of ⊕ and absorbing
/// for ⊙. Ordering places it below every finite value.
class TropValue {
public:
    /// Defaults to the bottom element.
    constexpr TropValue() = default;
    TropValue(Rational value) : finite_(true), value_(value) {}  // NOLINT(google-explicit-constructor)
    TropValue(std::int64_t value) : TropValue(Rational(value)) {}  // NOLINT(google-explicit-constructor)

    static constexpr TropValue neg_inf() { return TropValue(); }

    /// Accepts "-inf" or any Rational literal.
    static TropValue parse(std::string_view text);

    [[nodiscard]] bool is_finite() const { return finite_; }
    [[nodiscard]] bool is_neg_inf() const { return !finite_; }
    /// Finite value; throws InputError on the bottom element.
    [[nodiscard]] const Rational& value() const;
    [[nodiscard]] std::string str() const { return finite_ ? value_.str() : "-inf"; }

    friend bool operator==(const TropValue& a, const TropValue& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const TropValue& a, const TropValue& b) {
        if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
        return a.value_ <=> b.value_;
    }
    friend std::ostream& operator<<(std::ostream& os, const TropValue& v) { return os << v.str(); }

private:
    bool finite_ = false;
    Rational value_;
};

inline const TropValue NEG_INF = TropValue::neg_inf();

/// a ⊕ b = max(a, b).
[[nodiscard]] TropValue t_add(const TropValue& a, const TropValue& b);
/// a ⊙ b = a + b, with -inf absorbing.
[[nodiscard]] TropValue t_mul(const TropValue& a, const TropValue& b);
/// q·a for a rational q; fixes -inf.
[[nodiscard]] TropValue t_scale(const Rational& q, const TropValue& a);

}  // namespace tropdual
