#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace hypereq {

// JSON document builder with deterministic output: object keys emit in sorted
// order (std::map), doubles always carry 17 significant digits, and no locale
// state is consulted. Identical values dump to identical bytes.
class JValue {
public:
    using Array = std::vector<JValue>;
    using Object = std::map<std::string, JValue>;

    JValue() : data_(nullptr) {}
    JValue(std::nullptr_t) : data_(nullptr) {}
    JValue(bool b) : data_(b) {}
    JValue(int v) : data_(static_cast<std::int64_t>(v)) {}
    JValue(long v) : data_(static_cast<std::int64_t>(v)) {}
    JValue(long long v) : data_(static_cast<std::int64_t>(v)) {}
    JValue(double v) : data_(v) {}
    JValue(const char* s) : data_(std::string(s)) {}
    JValue(std::string s) : data_(std::move(s)) {}
    JValue(Array a) : data_(std::move(a)) {}
    JValue(Object o) : data_(std::move(o)) {}

    // indent < 0 yields the compact form; indent >= 0 pretty-prints with that
    // many spaces per nesting level. No trailing newline either way.
    std::string dump(int indent = -1) const;

private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object>
        data_;

    void write(std::string& out, int indent, int depth) const;
};

std::string json_escape(const std::string& s);

}  // namespace hypereq
