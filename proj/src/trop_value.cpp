#include "tropdual/trop_value.hpp"

#include "tropdual/error.hpp"

namespace tropdual {

TropValue TropValue::parse(std::string_view text) {
    if (text == "-inf") return neg_inf();
    return TropValue(Rational::parse(text));
}

const Rational& TropValue::value() const {
    if (!finite_) throw InputError("value() requested on -inf");
    return value_;
}

TropValue t_add(const TropValue& a, const TropValue& b) { return a < b ? b : a; }

TropValue t_mul(const TropValue& a, const TropValue& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return NEG_INF;
    return TropValue(a.value() + b.value());
}

TropValue t_scale(const Rational& q, const TropValue& a) {
    if (a.is_neg_inf()) return NEG_INF;
    return TropValue(q * a.value());
}

}  // namespace tropdual
