#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ksl/linalg.hpp"

namespace ksl {

/// Minimal JSON document with a canonical text form: object keys sorted
/// (std::map order), floats printed with 17 significant digits, no
/// insignificant whitespace. Byte-identical output for identical content.
struct JsonValue {
    using Array = std::vector<JsonValue>;
    using Object = std::map<std::string, JsonValue>;
    std::variant<std::nullptr_t, bool, double, std::string, Array, Object> v = nullptr;

    JsonValue() = default;
    JsonValue(std::nullptr_t) {}
    JsonValue(bool b) : v(b) {}
    JsonValue(double d) : v(d) {}
    JsonValue(int i) : v(static_cast<double>(i)) {}
    JsonValue(const char* s) : v(std::string(s)) {}
    JsonValue(std::string s) : v(std::move(s)) {}
    JsonValue(Array a) : v(std::move(a)) {}
    JsonValue(Object o) : v(std::move(o)) {}
};

JsonValue json_complex(cplx z);  // {"im": ..., "re": ...}
std::string json_number(double d);
std::string json_dump(const JsonValue& value);

}  // namespace ksl
