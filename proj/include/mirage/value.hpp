#ifndef MIRAGE_VALUE_HPP
#define MIRAGE_VALUE_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <variant>

namespace mirage {

class Object;
using ObjectPtr = std::shared_ptr<Object>;
using JsStringPtr = std::shared_ptr<const std::string>;

/// Symbols compare by id; well-known ids are fixed so natives can reference
/// them without a registry lookup.
struct JsSymbol {
    uint32_t id = 0;
    JsStringPtr description;
    bool operator==(const JsSymbol& o) const { return id == o.id; }
};

namespace well_known {
inline constexpr uint32_t iterator = 1;
inline constexpr uint32_t async_iterator = 2;
inline constexpr uint32_t to_primitive = 3;
inline constexpr uint32_t to_string_tag = 4;
inline constexpr uint32_t has_instance = 5;
inline constexpr uint32_t first_dynamic = 16;
}  // namespace well_known

struct Undefined {
    bool operator==(const Undefined&) const { return true; }
};
struct JsNull {
    bool operator==(const JsNull&) const { return true; }
};

class Value {
public:
    Value() : v_(Undefined{}) {}
    Value(bool b) : v_(b) {}
    Value(double d) : v_(d) {}
    Value(int i) : v_(static_cast<double>(i)) {}
    Value(uint32_t i) : v_(static_cast<double>(i)) {}
    Value(int64_t i) : v_(static_cast<double>(i)) {}
    Value(size_t i) : v_(static_cast<double>(i)) {}
    Value(JsStringPtr s) : v_(std::move(s)) {}
    Value(const JsSymbol& s) : v_(s) {}
    Value(ObjectPtr o) : v_(std::move(o)) {}
    Value(const std::string& s) : v_(std::make_shared<const std::string>(s)) {}
    Value(std::string&& s) : v_(std::make_shared<const std::string>(std::move(s))) {}
    Value(const char* s) : v_(std::make_shared<const std::string>(s)) {}

    static Value undefined() { return Value(); }
    static Value null() {
        Value v;
        v.v_ = JsNull{};
        return v;
    }

    bool is_undefined() const { return std::holds_alternative<Undefined>(v_); }
    bool is_null() const { return std::holds_alternative<JsNull>(v_); }
    bool is_nullish() const { return is_undefined() || is_null(); }
    bool is_bool() const { return std::holds_alternative<bool>(v_); }
    bool is_number() const { return std::holds_alternative<double>(v_); }
    bool is_string() const { return std::holds_alternative<JsStringPtr>(v_); }
    bool is_symbol() const { return std::holds_alternative<JsSymbol>(v_); }
    bool is_object() const { return std::holds_alternative<ObjectPtr>(v_); }

    bool as_bool() const { return std::get<bool>(v_); }
    double as_number() const { return std::get<double>(v_); }
    const std::string& as_string() const { return *std::get<JsStringPtr>(v_); }
    const JsStringPtr& string_ptr() const { return std::get<JsStringPtr>(v_); }
    const JsSymbol& as_symbol() const { return std::get<JsSymbol>(v_); }
    const ObjectPtr& as_object() const { return std::get<ObjectPtr>(v_); }

    /// Strict === on primitives; objects by identity. (NaN !== NaN, +0 === -0.)
    bool strict_equals(const Value& o) const {
        if (v_.index() != o.v_.index()) return false;
        if (is_number()) return as_number() == o.as_number();
        if (is_string()) return as_string() == o.as_string();
        if (is_symbol()) return as_symbol().id == o.as_symbol().id;
        if (is_object()) return as_object().get() == o.as_object().get();
        if (is_bool()) return as_bool() == o.as_bool();
        return true;  // undefined / null
    }

    /// Index of the held alternative; equal indices mean equal JS types.
    size_t type_index() const { return v_.index(); }

    /// SameValueZero (used by includes, Map keys): NaN matches NaN.
    bool same_value_zero(const Value& o) const {
        if (is_number() && o.is_number()) {
            double a = as_number(), b = o.as_number();
            if (std::isnan(a) && std::isnan(b)) return true;
            return a == b;
        }
        return strict_equals(o);
    }

private:
    std::variant<Undefined, JsNull, bool, double, JsStringPtr, JsSymbol, ObjectPtr> v_;
};

/// Number-to-string with ECMAScript formatting: shortest round-trip digits,
/// fixed notation for exponents in (-7, 21), scientific outside.
inline std::string js_number_to_string(double d) {
    if (std::isnan(d)) return "NaN";
    if (d == 0) return "0";  // covers -0
    if (std::isinf(d)) return d > 0 ? "Infinity" : "-Infinity";

    std::string sign;
    if (d < 0) {
        sign = "-";
        d = -d;
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), d, std::chars_format::scientific);
    std::string sci(buf, res.ptr);
    // sci looks like "1.2345e+08" or "5e-07"
    size_t epos = sci.find('e');
    std::string digits = sci.substr(0, epos);
    int exp = std::atoi(sci.c_str() + epos + 1);
    size_t dot = digits.find('.');
    if (dot != std::string::npos) digits.erase(dot, 1);
    // digits now "12345", value = 0.digits * 10^(exp+1)
    int n = exp + 1;  // decimal point position relative to digit string
    int k = static_cast<int>(digits.size());

    std::string out;
    if (k <= n && n <= 21) {
        out = digits + std::string(static_cast<size_t>(n - k), '0');
    } else if (0 < n && n <= 21) {
        out = digits.substr(0, static_cast<size_t>(n)) + "." + digits.substr(static_cast<size_t>(n));
    } else if (-6 < n && n <= 0) {
        out = "0." + std::string(static_cast<size_t>(-n), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (k > 1) out += "." + digits.substr(1);
        out += "e";
        out += n - 1 >= 0 ? "+" : "-";
        out += std::to_string(std::abs(n - 1));
    }
    return sign + out;
}

inline bool is_js_whitespace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

/// String-to-number per ToNumber: whitespace-trimmed, hex/octal/binary
/// prefixes, Infinity, empty string is 0, anything else NaN.
inline double js_string_to_number(const std::string& s) {
    size_t begin = 0, end = s.size();
    while (begin < end && is_js_whitespace(s[begin])) begin++;
    while (end > begin && is_js_whitespace(s[end - 1])) end--;
    if (begin == end) return 0;
    std::string t = s.substr(begin, end - begin);

    auto radix_value = [](const std::string& digits, int radix) -> double {
        if (digits.empty()) return std::nan("");
        double v = 0;
        for (char c : digits) {
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'z') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'Z') d = c - 'A' + 10;
            else return std::nan("");
            if (d >= radix) return std::nan("");
            v = v * radix + d;
        }
        return v;
    };

    if (t.size() > 2 && t[0] == '0') {
        if (t[1] == 'x' || t[1] == 'X') return radix_value(t.substr(2), 16);
        if (t[1] == 'o' || t[1] == 'O') return radix_value(t.substr(2), 8);
        if (t[1] == 'b' || t[1] == 'B') return radix_value(t.substr(2), 2);
    }

    std::string body = t;
    std::string sign;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        sign = body.substr(0, 1);
        body = body.substr(1);
    }
    if (body == "Infinity") return sign == "-" ? -INFINITY : INFINITY;

    // Validate strict decimal syntax; strtod accepts more than JS does
    // (hex floats, "nan", trailing junk).
    size_t i = 0;
    bool any_digit = false;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) { i++; any_digit = true; }
    if (i < body.size() && body[i] == '.') {
        i++;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) { i++; any_digit = true; }
    }
    if (!any_digit) return std::nan("");
    if (i < body.size() && (body[i] == 'e' || body[i] == 'E')) {
        i++;
        if (i < body.size() && (body[i] == '+' || body[i] == '-')) i++;
        if (i >= body.size() || !std::isdigit(static_cast<unsigned char>(body[i]))) return std::nan("");
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) i++;
    }
    if (i != body.size()) return std::nan("");
    return std::strtod((sign + body).c_str(), nullptr);
}

/// ToInt32 (used by bitwise operators and shifts).
inline int32_t js_to_int32(double d) {
    if (std::isnan(d) || std::isinf(d)) return 0;
    double m = std::trunc(d);
    double two32 = 4294967296.0;
    m = std::fmod(m, two32);
    if (m < 0) m += two32;
    uint32_t u = static_cast<uint32_t>(m);
    return static_cast<int32_t>(u);
}

inline uint32_t js_to_uint32(double d) { return static_cast<uint32_t>(js_to_int32(d)); }

/// Index of a canonical array-index string, or SIZE_MAX.
inline size_t array_index_of(const std::string& key) {
    if (key.empty() || key.size() > 10) return SIZE_MAX;
    if (key == "0") return 0;
    if (key[0] == '0') return SIZE_MAX;
    uint64_t v = 0;
    for (char c : key) {
        if (c < '0' || c > '9') return SIZE_MAX;
        v = v * 10 + static_cast<uint64_t>(c - '0');
        if (v > 0xFFFFFFFFull) return SIZE_MAX;
    }
    if (v >= 4294967295ull) return SIZE_MAX;  // 2^32-1 is not an index
    return static_cast<size_t>(v);
}

}  // namespace mirage

#endif
