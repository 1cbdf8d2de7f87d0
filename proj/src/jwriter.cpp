#include "hypereq/jwriter.hpp"

#include <cstdio>

#include "hypereq/scalar.hpp"

namespace hypereq {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (ch < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += static_cast<char>(ch);
                }
        }
    }
    return out;
}

namespace {

void pad(std::string& out, int indent, int depth) {
    out += '\n';
    out.append(static_cast<std::size_t>(indent) * static_cast<std::size_t>(depth), ' ');
}

}  // namespace

void JValue::write(std::string& out, int indent, int depth) const {
    const bool pretty = indent >= 0;
    if (std::holds_alternative<std::nullptr_t>(data_)) {
        out += "null";
    } else if (const bool* b = std::get_if<bool>(&data_)) {
        out += *b ? "true" : "false";
    } else if (const std::int64_t* n = std::get_if<std::int64_t>(&data_)) {
        out += std::to_string(*n);
    } else if (const double* d = std::get_if<double>(&data_)) {
        out += format_double17(*d);
    } else if (const std::string* s = std::get_if<std::string>(&data_)) {
        out += '"';
        out += json_escape(*s);
        out += '"';
    } else if (const Array* a = std::get_if<Array>(&data_)) {
        if (a->empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const JValue& item : *a) {
            if (!first) out += ',';
            first = false;
            if (pretty) pad(out, indent, depth + 1);
            item.write(out, indent, depth + 1);
        }
        if (pretty) pad(out, indent, depth);
        out += ']';
    } else {
        const Object& o = std::get<Object>(data_);
        if (o.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, value] : o) {
            if (!first) out += ',';
            first = false;
            if (pretty) pad(out, indent, depth + 1);
            out += '"';
            out += json_escape(key);
            out += "\":";
            if (pretty) out += ' ';
            value.write(out, indent, depth + 1);
        }
        if (pretty) pad(out, indent, depth);
        out += '}';
    }
}

std::string JValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

}  // namespace hypereq
