#include "monoclif/json_io.hpp"

namespace monoclif {

namespace {

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int require_int(const Json& j, const char* key) {
    const Json& v = require_field(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::string require_string(const Json& j, const char* key) {
    const Json& v = require_field(j, key);
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<int> exps_from_json(const Json& j, int m) {
    if (!j.is_array()) throw ParseError("exponent tuple must be an array");
    std::vector<int> out;
    for (const Json& e : j) {
        if (!e.is_number_integer() || e.get<int>() < 0)
            throw ParseError("exponents must be nonnegative integers");
        out.push_back(e.get<int>());
    }
    if (static_cast<int>(out.size()) != m) throw ParseError("exponent tuple arity mismatch");
    return out;
}

} // namespace

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
    return Rational::from_string(j.get<std::string>());
}

Json to_json(const MultiVector& v) {
    Json out = Json::array();
    for (const auto& [mask, c] : v.terms()) {
        Json term;
        term["blade"] = blade_indices(mask);
        term["re"] = c.re.str();
        term["im"] = c.im.str();
        out.push_back(std::move(term));
    }
    return out;
}

MultiVector multivector_from_json(const Json& j, int m) {
    if (!j.is_array()) throw ParseError("MultiVector must be an array of blade terms");
    MultiVector v(m);
    for (const Json& term : j) {
        const Json& blade = require_field(term, "blade");
        if (!blade.is_array()) throw ParseError("blade must be an array of indices");
        std::vector<int> indices;
        for (const Json& idx : blade) {
            if (!idx.is_number_integer()) throw ParseError("blade indices must be integers");
            indices.push_back(idx.get<int>());
        }
        BladeMask mask;
        try {
            mask = blade_from_indices(indices, m);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        const CRational c(rational_from_json(require_field(term, "re")),
                          rational_from_json(require_field(term, "im")));
        v.add_term(mask, c);
    }
    return v;
}

Json to_json(const CliffPoly& p) {
    Json out;
    out["m"] = p.dimension();
    out["role"] = role_string(p.role());
    Json terms = Json::array();
    for (const auto& [mono, c] : p.terms()) {
        Json term;
        term["exp"] = mono.exps;
        term["coeff"] = to_json(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

CliffPoly cliffpoly_from_json(const Json& j) {
    const int m = require_int(j, "m");
    if (m < 2 || m > 8) throw ParseError("CliffPoly: m out of the supported range [2,8]");
    const VarRole role = role_from_string(require_string(j, "role"));
    CliffPoly p(m, role);
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw ParseError("'terms' must be an array");
    for (const Json& term : terms) {
        const Monomial mono{exps_from_json(require_field(term, "exp"), m)};
        p.add_term(mono, multivector_from_json(require_field(term, "coeff"), m));
    }
    return p;
}

Json to_json(const BiPoly& p) {
    Json out;
    out["m"] = p.dimension();
    out["role"] = role_string(p.role(Slot::First));
    out["role_u"] = role_string(p.role(Slot::Second));
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms()) {
        Json term;
        term["exp"] = key.first.exps;
        term["exp_u"] = key.second.exps;
        term["coeff"] = to_json(c);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

BiPoly bipoly_from_json(const Json& j) {
    const int m = require_int(j, "m");
    if (m < 2 || m > 8) throw ParseError("BiPoly: m out of the supported range [2,8]");
    const VarRole first = role_from_string(require_string(j, "role"));
    const VarRole second = role_from_string(require_string(j, "role_u"));
    if (first == second) throw ParseError("BiPoly: slots need distinct roles");
    BiPoly p(m, first, second);
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw ParseError("'terms' must be an array");
    for (const Json& term : terms) {
        const Monomial a{exps_from_json(require_field(term, "exp"), m)};
        const Monomial b{exps_from_json(require_field(term, "exp_u"), m)};
        p.add_term({a, b}, multivector_from_json(require_field(term, "coeff"), m));
    }
    return p;
}

Json to_json(const GaussianSection& g) {
    Json out;
    out["c"] = g.weight_c.str();
    out["poly"] = to_json(g.poly);
    return out;
}

GaussianSection gaussian_section_from_json(const Json& j) {
    const Rational c = rational_from_json(require_field(j, "c"));
    CliffPoly poly = cliffpoly_from_json(require_field(j, "poly"));
    if (c.sign() <= 0) throw ParseError("GaussianSection: weight must be positive");
    return GaussianSection(std::move(poly), c);
}

Json to_json(const FischerParts& parts) {
    Json out;
    out["k"] = parts.k;
    Json arr = Json::array();
    for (const CliffPoly& p : parts.parts) arr.push_back(to_json(p));
    out["parts"] = std::move(arr);
    return out;
}

FischerParts fischer_parts_from_json(const Json& j) {
    FischerParts out;
    out.k = require_int(j, "k");
    const Json& arr = require_field(j, "parts");
    if (!arr.is_array()) throw ParseError("'parts' must be an array");
    for (const Json& p : arr) out.parts.push_back(cliffpoly_from_json(p));
    return out;
}

Json to_json(const HermiteCoeffs& h) {
    Json out;
    out["s"] = h.s;
    out["k"] = h.k;
    out["m"] = h.m;
    Json arr = Json::array();
    for (const Rational& c : h.coeffs) arr.push_back(c.str());
    out["coeffs"] = std::move(arr);
    return out;
}

HermiteCoeffs hermite_coeffs_from_json(const Json& j) {
    HermiteCoeffs out;
    out.s = require_int(j, "s");
    out.k = require_int(j, "k");
    out.m = require_int(j, "m");
    const Json& arr = require_field(j, "coeffs");
    if (!arr.is_array()) throw ParseError("'coeffs' must be an array");
    for (const Json& c : arr) out.coeffs.push_back(rational_from_json(c));
    return out;
}

Json to_json(const ZonalTable& table) {
    Json out;
    out["m"] = table.m;
    out["K"] = table.K;
    out["route"] = zonal_route_string(table.route);
    Json arr = Json::array();
    for (const auto& [ks, value] : table.entries) {
        Json entry;
        entry["k"] = ks.first;
        entry["s"] = ks.second;
        entry["value"] = to_json(value);
        arr.push_back(std::move(entry));
    }
    out["entries"] = std::move(arr);
    return out;
}

ZonalTable zonal_table_from_json(const Json& j) {
    ZonalTable table;
    table.m = require_int(j, "m");
    table.K = require_int(j, "K");
    table.route = zonal_route_from_string(require_string(j, "route"));
    const Json& arr = require_field(j, "entries");
    if (!arr.is_array()) throw ParseError("'entries' must be an array");
    bool roles_set = false;
    for (const Json& entry : arr) {
        const int k = require_int(entry, "k");
        const int s = require_int(entry, "s");
        BiPoly value = bipoly_from_json(require_field(entry, "value"));
        if (!roles_set) {
            table.role_first = value.role(Slot::First);
            table.role_second = value.role(Slot::Second);
            roles_set = true;
        }
        table.entries.emplace(std::make_pair(k, s), std::move(value));
    }
    return table;
}

} // namespace monoclif
