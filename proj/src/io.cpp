#include "tropdual/io.hpp"

#include <json.hpp>

#include "tropdual/error.hpp"

namespace tropdual {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& why) { throw InputError("malformed document: " + why); }

TropValue parse_value(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return TropValue::parse(v.get<std::string>());
        } catch (const InputError& e) {
            malformed(where + ": " + e.what());
        }
    }
    if (v.is_number_integer()) return TropValue(v.get<std::int64_t>());
    malformed(where + " must be a quoted rational or \"-inf\"");
}

const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end()) malformed(std::string("missing field \"") + name + "\"");
    return *it;
}

std::size_t positive_size(const json& v, const char* name) {
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) {
        malformed(std::string("\"") + name + "\" must be a positive integer");
    }
    return v.get<std::size_t>();
}

QuadricMatrix parse_matrix(const json& doc) {
    std::size_t n = positive_size(field(doc, "n"), "n");
    const json& upper = field(doc, "upper");
    if (!upper.is_array()) malformed("\"upper\" must be an array");
    if (upper.size() != n * (n + 1) / 2) {
        malformed("\"upper\" must hold n(n+1)/2 = " + std::to_string(n * (n + 1) / 2) + " entries");
    }
    std::vector<TropValue> values;
    for (std::size_t k = 0; k < upper.size(); ++k) values.push_back(parse_value(upper[k], "upper[" + std::to_string(k) + "]"));
    return QuadricMatrix::from_upper(n, values);
}

TropPolynomial parse_poly(const json& doc) {
    std::size_t vars = positive_size(field(doc, "vars"), "vars");
    const json& terms = field(doc, "terms");
    if (!terms.is_array()) malformed("\"terms\" must be an array");
    TropPolynomial f(vars);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string where = "terms[" + std::to_string(t) + "]";
        if (!terms[t].is_object()) malformed(where + " must be an object");
        const json& exp = field(terms[t], "exp");
        if (!exp.is_array() || exp.size() != vars) {
            malformed(where + ".exp must be an array of " + std::to_string(vars) + " exponents");
        }
        Exponent e;
        for (const auto& x : exp) {
            if (!x.is_number_integer()) throw InputError("non-integer exponent in " + where + ": " + x.dump());
            e.push_back(x.get<int>());
        }
        f.add_term(e, parse_value(field(terms[t], "coef"), where + ".coef"));
    }
    if (f.empty()) throw InputError("empty support: the polynomial has no finite term");
    return f;
}

}  // namespace

Document parse_document(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(std::string("not valid JSON (") + e.what() + ")");
    }
    if (!doc.is_object()) malformed("top level must be an object");
    const json& kind = field(doc, "kind");
    if (kind == "matrix") return parse_matrix(doc);
    if (kind == "poly") return parse_poly(doc);
    malformed("\"kind\" must be \"matrix\" or \"poly\"");
}

std::string serialize(const Document& d) {
    ordered_json out;
    if (const auto* m = std::get_if<QuadricMatrix>(&d)) {
        out["kind"] = "matrix";
        out["n"] = m->size();
        out["upper"] = ordered_json::array();
        for (const auto& v : m->upper()) out["upper"].push_back(v.str());
    } else {
        const auto& f = std::get<TropPolynomial>(d);
        out["kind"] = "poly";
        out["vars"] = f.nvars();
        out["terms"] = ordered_json::array();
        for (const auto& [e, a] : f.terms()) {
            ordered_json term;
            term["exp"] = e;
            term["coef"] = a.str();
            out["terms"].push_back(term);
        }
    }
    return out.dump();
}

TropPolynomial as_polynomial(const Document& d) {
    if (const auto* m = std::get_if<QuadricMatrix>(&d)) return poly_from_matrix(*m);
    return std::get<TropPolynomial>(d);
}

QuadricMatrix as_matrix(const Document& d) {
    if (const auto* m = std::get_if<QuadricMatrix>(&d)) return *m;
    return matrix_from_poly(std::get<TropPolynomial>(d));
}

}  // namespace tropdual
