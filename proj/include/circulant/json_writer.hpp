#pragma once

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "errors.hpp"

namespace circulant {

// Fixed float rendering: 17 significant digits (round-trip exact for IEEE
// doubles), negative zero normalized, non-finite values rejected since JSON
// cannot carry them.
inline std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw DomainError("non-finite value cannot be serialized as JSON");
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

namespace detail {

inline void append_json_string(const std::string& s, std::string& out) {
    out += '"';
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

inline void append_canonical(const nlohmann::json& j, std::string& out) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: out += "null"; break;
        case nlohmann::json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case nlohmann::json::value_t::number_integer:
            out += std::to_string(j.get<std::int64_t>());
            break;
        case nlohmann::json::value_t::number_unsigned:
            out += std::to_string(j.get<std::uint64_t>());
            break;
        case nlohmann::json::value_t::number_float: out += format_double(j.get<double>()); break;
        case nlohmann::json::value_t::string: append_json_string(j.get<std::string>(), out); break;
        case nlohmann::json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                append_canonical(item, out);
            }
            out += ']';
            break;
        }
        case nlohmann::json::value_t::object: {
            // nlohmann's default object is a std::map, so iteration is
            // already key-sorted; rendering follows that canonical order.
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                append_json_string(key, out);
                out += ':';
                append_canonical(value, out);
            }
            out += '}';
            break;
        }
        default:
            throw DomainError("unsupported JSON value type");
    }
}

} // namespace detail

// Compact, key-sorted, fixed-format rendering: parsing the output and
// re-rendering it reproduces the bytes exactly.
inline std::string canonical_json(const nlohmann::json& j) {
    std::string out;
    detail::append_canonical(j, out);
    return out;
}

} // namespace circulant
