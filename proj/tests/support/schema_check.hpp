#pragma once

#include <string>

#include <json.hpp>

namespace sirkit::testing {

// Validates `instance` against the subset of JSON Schema draft 2020-12 used
// by schemas/report.schema.json: type (string or array of strings), enum,
// required, properties, additionalProperties:false, items, minimum, and
// document-local "#/..." $ref. Returns an empty string when the instance
// conforms, otherwise a "<path>: <problem>" description of the first failure.
std::string schema_errors(const nlohmann::json& schema,
                          const nlohmann::json& instance);

} // namespace sirkit::testing
