#pragma once

// Validator for the JSON Schema subset used by schemas/report.schema.json:
// type, enum, required, properties, additionalProperties (boolean),
// items, minItems, maxItems, minProperties, maxProperties, minimum,
// anyOf and local "#/$defs/..." references.

#include <json.hpp>

#include <fstream>
#include <string>
#include <vector>

namespace discseq::testing {

class SchemaValidator {
public:
    explicit SchemaValidator(nlohmann::json root) : root_(std::move(root)) {}

    static SchemaValidator from_file(const std::string& path)
    {
        std::ifstream in(path);
        return SchemaValidator(nlohmann::json::parse(in));
    }

    // Empty when valid.
    std::vector<std::string> validate(const nlohmann::json& doc) const
    {
        std::vector<std::string> errors;
        check(root_, doc, "$", errors);
        return errors;
    }

private:
    nlohmann::json root_;

    const nlohmann::json& resolve(const nlohmann::json& schema) const
    {
        if (!schema.contains("$ref"))
            return schema;
        auto ref = schema["$ref"].get<std::string>();
        return resolve(root_.at(nlohmann::json::json_pointer(ref.substr(1))));
    }

    static bool has_type(const nlohmann::json& v, const std::string& t)
    {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        if (t == "number") return v.is_number();
        if (t == "integer")
            return v.is_number_integer() || (v.is_number_float() && v.get<double>() == static_cast<double>(static_cast<long long>(v.get<double>())));
        return false;
    }

    void check(const nlohmann::json& raw, const nlohmann::json& v, const std::string& at,
               std::vector<std::string>& errors) const
    {
        const auto& s = resolve(raw);
        if (s.contains("anyOf")) {
            bool any = false;
            for (const auto& alt : s["anyOf"]) {
                std::vector<std::string> sub;
                check(alt, v, at, sub);
                any = any || sub.empty();
            }
            if (!any)
                errors.push_back(at + ": no anyOf alternative matches");
        }
        if (s.contains("type")) {
            bool ok = false;
            if (s["type"].is_array()) {
                for (const auto& t : s["type"])
                    ok = ok || has_type(v, t.get<std::string>());
            } else {
                ok = has_type(v, s["type"].get<std::string>());
            }
            if (!ok) {
                errors.push_back(at + ": wrong type");
                return;
            }
        }
        if (s.contains("enum")) {
            bool found = false;
            for (const auto& e : s["enum"])
                found = found || e == v;
            if (!found)
                errors.push_back(at + ": not in enum");
        }
        if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>())
            errors.push_back(at + ": below minimum");
        if (v.is_object()) {
            if (s.contains("required"))
                for (const auto& k : s["required"])
                    if (!v.contains(k.get<std::string>()))
                        errors.push_back(at + ": missing " + k.get<std::string>());
            if (s.contains("minProperties") && v.size() < s["minProperties"].get<std::size_t>())
                errors.push_back(at + ": too few properties");
            if (s.contains("maxProperties") && v.size() > s["maxProperties"].get<std::size_t>())
                errors.push_back(at + ": too many properties");
            const bool closed = s.contains("additionalProperties") && s["additionalProperties"] == false;
            for (const auto& [k, child] : v.items()) {
                if (s.contains("properties") && s["properties"].contains(k))
                    check(s["properties"][k], child, at + "." + k, errors);
                else if (closed)
                    errors.push_back(at + ": unexpected key " + k);
            }
        }
        if (v.is_array()) {
            if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>())
                errors.push_back(at + ": too few items");
            if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>())
                errors.push_back(at + ": too many items");
            if (s.contains("items"))
                for (std::size_t i = 0; i < v.size(); ++i)
                    check(s["items"], v[i], at + "[" + std::to_string(i) + "]", errors);
        }
    }
};

} // namespace discseq::testing
