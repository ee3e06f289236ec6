#pragma once

#include <json.hpp>

#include "monoclif/calculus.hpp"
#include "monoclif/fischer.hpp"
#include "monoclif/hermite.hpp"
#include "monoclif/kernels.hpp"

namespace monoclif {

/// All output uses ordered_json with terms emitted in canonical order, so a
/// value serializes to the same bytes every time.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r); // "p/q"
Json to_json(const MultiVector& v);
Json to_json(const CliffPoly& p);
Json to_json(const BiPoly& p);
Json to_json(const GaussianSection& g);
Json to_json(const FischerParts& parts);
Json to_json(const HermiteCoeffs& h);
Json to_json(const ZonalTable& table);

/// Parsers throw ParseError on malformed input.
Rational rational_from_json(const Json& j);
MultiVector multivector_from_json(const Json& j, int m);
CliffPoly cliffpoly_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);
GaussianSection gaussian_section_from_json(const Json& j);
FischerParts fischer_parts_from_json(const Json& j);
HermiteCoeffs hermite_coeffs_from_json(const Json& j);
ZonalTable zonal_table_from_json(const Json& j);

Json parse_json_text(const std::string& text);

} // namespace monoclif
