#pragma once

#include <string>

#include "json.hpp"

#include "stargate/fieldforge.hpp"
#include "stargate/gseries.hpp"
#include "stargate/starcheck.hpp"

namespace stargate {

/// All documents carry "schema": 1; readers reject other versions.
inline constexpr int schema_version = 1;

/// Insertion-ordered JSON so repeated runs emit byte-identical reports.
using Json = nlohmann::ordered_json;

/// Parse + schema-version check. Throws argument_error with a field path on
/// malformed input.
Json parse_document(const std::string& text);

Rational rational_from_json(const Json& j, const std::string& path);
NumberField field_from_json(const Json& j, const std::string& path);
RatMatrix matrix_from_json(const Json& j, const std::string& path);
AlbertDescriptor albert_from_json(const Json& j, const std::string& path);
PointDescriptor point_from_json(const Json& j);
TruncatedSeries series_from_json(const Json& j);

Json to_json(const Rational& q);
Json to_json(const Integer& n);
Json to_json(const NumberField& f);
Json to_json(const RatMatrix& m);
Json to_json(const AlbertDescriptor& d);
Json to_json(const PointDescriptor& p);
Json to_json(const FiltrationProfile& p);
Json report_to_json(const StarReport& report);
Json recipe_to_json(const ForgeRecipe& recipe);

} // namespace stargate
