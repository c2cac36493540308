#include "bgg/jsonschema.hpp"

#include <regex>

namespace bgg {

namespace {

SchemaResult fail(const std::string& path, const std::string& what) {
    return {false, path + ": " + what};
}

bool type_matches(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

SchemaResult check(const nlohmann::json& v, const nlohmann::json& s, const std::string& path) {
    if (s.contains("type")) {
        const std::string t = s.at("type").get<std::string>();
        if (!type_matches(v, t)) return fail(path, "expected type " + t);
    }
    if (s.contains("enum")) {
        bool hit = false;
        for (const auto& e : s.at("enum"))
            if (e == v) hit = true;
        if (!hit) return fail(path, "value not in enum");
    }
    if (s.contains("minimum") && v.is_number()) {
        if (v.get<double>() < s.at("minimum").get<double>())
            return fail(path, "below minimum");
    }
    if (s.contains("pattern") && v.is_string()) {
        const std::regex re(s.at("pattern").get<std::string>());
        if (!std::regex_search(v.get<std::string>(), re))
            return fail(path, "pattern mismatch");
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& r : s.at("required"))
                if (!v.contains(r.get<std::string>()))
                    return fail(path, "missing required key '" + r.get<std::string>() + "'");
        const auto* props = s.contains("properties") ? &s.at("properties") : nullptr;
        for (auto it = v.begin(); it != v.end(); ++it) {
            const std::string child = path + "/" + it.key();
            if (props && props->contains(it.key())) {
                SchemaResult r = check(it.value(), props->at(it.key()), child);
                if (!r.ok) return r;
            } else if (s.contains("additionalProperties")) {
                const auto& ap = s.at("additionalProperties");
                if (ap.is_boolean()) {
                    if (!ap.get<bool>()) return fail(child, "unexpected key");
                } else {
                    SchemaResult r = check(it.value(), ap, child);
                    if (!r.ok) return r;
                }
            }
        }
    }
    if (v.is_array() && s.contains("items")) {
        for (size_t i = 0; i < v.size(); ++i) {
            SchemaResult r = check(v[i], s.at("items"), path + "/" + std::to_string(i));
            if (!r.ok) return r;
        }
    }
    return {};
}

} // namespace

SchemaResult validate_schema(const nlohmann::json& value, const nlohmann::json& schema) {
    return check(value, schema, "");
}

} // namespace bgg
