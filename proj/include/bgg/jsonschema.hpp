#pragma once

#include <json.hpp>

#include <string>

namespace bgg {

// Minimal structural JSON-schema checker covering the subset used by the
// shipped schema: type, properties, required, additionalProperties, items,
// enum, minimum, pattern.
struct SchemaResult {
    bool ok = true;
    std::string error; // first violation, with a JSON-pointer-ish path
};

SchemaResult validate_schema(const nlohmann::json& value, const nlohmann::json& schema);

} // namespace bgg
