#include "ksl/report.hpp"

#include <cstdio>

namespace ksl {

namespace {

void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void dump_into(std::string& out, const JsonValue& value) {
    struct Visitor {
        std::string& out;
        void operator()(std::nullptr_t) { out += "null"; }
        void operator()(bool b) { out += b ? "true" : "false"; }
        void operator()(double d) { out += json_number(d); }
        void operator()(const std::string& s) { escape_into(out, s); }
        void operator()(const JsonValue::Array& a) {
            out += '[';
            for (size_t i = 0; i < a.size(); ++i) {
                if (i) out += ',';
                dump_into(out, a[i]);
            }
            out += ']';
        }
        void operator()(const JsonValue::Object& o) {
            out += '{';
            bool first = true;
            for (const auto& [k, v] : o) {
                if (!first) out += ',';
                first = false;
                escape_into(out, k);
                out += ':';
                dump_into(out, v);
            }
            out += '}';
        }
    };
    std::visit(Visitor{out}, value.v);
}

}  // namespace

std::string json_number(double d) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
}

JsonValue json_complex(cplx z) {
    JsonValue::Object o;
    o["im"] = z.imag();
    o["re"] = z.real();
    return o;
}

std::string json_dump(const JsonValue& value) {
    std::string out;
    dump_into(out, value);
    return out;
}

}  // namespace ksl
