#ifndef MIRAGE_DETAIL_NATIVES_STRING_HPP
#define MIRAGE_DETAIL_NATIVES_STRING_HPP

#include <cctype>
#include <cstdio>
#include <regex>

namespace mirage {

namespace detail {

/// Best-effort bridge from guest regular expressions to std::regex.
/// Patterns using features std::regex lacks (lookbehind, named backreferences,
/// unicode property classes) fail to compile and become never-matching, so
/// string scanning stays total.
class JsRegex {
public:
    JsRegex(const std::string& pattern, const std::string& flags) {
        for (char f : flags) {
            switch (f) {
                case 'i': icase_ = true; break;
                case 'g': global_ = true; break;
                case 'm': multiline_ = true; break;
                case 's': dotall_ = true; break;
                case 'y': sticky_ = true; break;
                default: break;  // u and others change nothing here
            }
        }
        auto syntax = std::regex::ECMAScript;
        if (icase_) syntax |= std::regex::icase;
        if (multiline_) syntax |= std::regex::multiline;
        try {
            re_ = std::regex(translate(pattern), syntax);
            valid_ = true;
        } catch (const std::regex_error&) {
            valid_ = false;
        }
    }

    bool valid() const { return valid_; }
    bool global() const { return global_; }
    bool sticky() const { return sticky_; }

    /// Search from a byte offset. Returns false when invalid or no match.
    bool search(const std::string& subject, size_t from, std::smatch& m) const {
        if (!valid_ || from > subject.size()) return false;
        std::regex_constants::match_flag_type mf = std::regex_constants::match_default;
        if (from > 0) mf |= std::regex_constants::match_prev_avail;
        if (sticky_) mf |= std::regex_constants::match_continuous;
        try {
            return std::regex_search(subject.cbegin() + static_cast<ptrdiff_t>(from),
                                     subject.cend(), m, re_, mf);
        } catch (const std::regex_error&) {
            return false;
        }
    }

private:
    // Rewrites the constructs std::regex spells differently: named groups
    // drop to plain groups (same indices), and with the s flag `.` widens
    // to [\s\S]. Everything else passes through untouched.
    std::string translate(const std::string& p) const {
        std::string out;
        out.reserve(p.size());
        bool in_class = false;
        for (size_t i = 0; i < p.size(); i++) {
            char c = p[i];
            if (c == '\\' && i + 1 < p.size()) {
                out += c;
                out += p[i + 1];
                i++;
                continue;
            }
            if (in_class) {
                out += c;
                if (c == ']') in_class = false;
                continue;
            }
            if (c == '[') {
                in_class = true;
                out += c;
                continue;
            }
            // JS tolerates bare `{`, `}`, and `]` as literals when they do not
            // form a quantifier or class; std::regex rejects the pattern. Keep
            // well-formed {n}/{n,}/{n,m} quantifiers, escape the rest.
            if (c == '{' || c == '}' || c == ']') {
                if (c == '{') {
                    size_t j = i + 1;
                    bool digits = false;
                    while (j < p.size() && std::isdigit(static_cast<unsigned char>(p[j]))) {
                        j++;
                        digits = true;
                    }
                    if (digits && j < p.size() && p[j] == ',') {
                        j++;
                        while (j < p.size() && std::isdigit(static_cast<unsigned char>(p[j]))) j++;
                    }
                    if (digits && j < p.size() && p[j] == '}') {
                        out.append(p, i, j - i + 1);
                        i = j;
                        continue;
                    }
                }
                out += '\\';
                out += c;
                continue;
            }
            if (c == '.' && dotall_) {
                out += "[\\s\\S]";
                continue;
            }
            if (c == '(' && i + 2 < p.size() && p[i + 1] == '?' && p[i + 2] == '<' &&
                i + 3 < p.size() && p[i + 3] != '=' && p[i + 3] != '!') {
                size_t close = p.find('>', i + 3);
                if (close != std::string::npos) {
                    out += '(';
                    i = close;
                    continue;
                }
            }
            out += c;
        }
        return out;
    }

    std::regex re_;
    bool valid_ = false;
    bool icase_ = false;
    bool global_ = false;
    bool multiline_ = false;
    bool dotall_ = false;
    bool sticky_ = false;
};

inline double js_parse_int(const std::string& input, double radix_arg) {
    size_t i = 0;
    while (i < input.size() && is_js_whitespace(input[i])) i++;
    int sign = 1;
    if (i < input.size() && (input[i] == '+' || input[i] == '-')) {
        if (input[i] == '-') sign = -1;
        i++;
    }
    int radix = 0;
    if (!std::isnan(radix_arg) && radix_arg != 0) {
        double r = std::trunc(radix_arg);
        if (r < 2 || r > 36) return std::numeric_limits<double>::quiet_NaN();
        radix = static_cast<int>(r);
    }
    if ((radix == 0 || radix == 16) && i + 1 < input.size() && input[i] == '0' &&
        (input[i + 1] == 'x' || input[i + 1] == 'X')) {
        i += 2;
        radix = 16;
    }
    if (radix == 0) radix = 10;
    auto digit_of = [&](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'z') return c - 'a' + 10;
        if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
        return -1;
    };
    double out = 0;
    size_t digits = 0;
    while (i < input.size()) {
        int d = digit_of(input[i]);
        if (d < 0 || d >= radix) break;
        out = out * radix + d;
        digits++;
        i++;
    }
    if (digits == 0) return std::numeric_limits<double>::quiet_NaN();
    return sign * out;
}

inline double js_parse_float(const std::string& input) {
    size_t i = 0;
    while (i < input.size() && is_js_whitespace(input[i])) i++;
    std::string body = input.substr(i);
    if (body.rfind("Infinity", 0) == 0 || body.rfind("+Infinity", 0) == 0) {
        return std::numeric_limits<double>::infinity();
    }
    if (body.rfind("-Infinity", 0) == 0) return -std::numeric_limits<double>::infinity();
    const char* start = body.c_str();
    char* end = nullptr;
    double v = std::strtod(start, &end);
    if (end == start) return std::numeric_limits<double>::quiet_NaN();
    // strtod accepts hex and "inf"/"nan" spellings that parseFloat rejects.
    std::string consumed(start, static_cast<size_t>(end - start));
    for (char c : consumed) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-' || c == '.' ||
              c == 'e' || c == 'E')) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    }
    return v;
}

inline std::string symbol_display(const JsSymbol& sym) {
    return "Symbol(" + (sym.description ? *sym.description : "") + ")";
}

/// Integer-and-fraction rendering for Number.prototype.toString(radix).
inline std::string double_to_radix(double value, int radix) {
    if (std::isnan(value)) return "NaN";
    if (std::isinf(value)) return value > 0 ? "Infinity" : "-Infinity";
    const char* digits = "0123456789abcdefghijklmnopqrstuvwxyz";
    bool negative = value < 0;
    value = std::fabs(value);
    double ipart = std::floor(value);
    double fpart = value - ipart;
    std::string whole;
    if (ipart == 0) {
        whole = "0";
    } else {
        while (ipart >= 1) {
            int d = static_cast<int>(std::fmod(ipart, radix));
            whole.insert(whole.begin(), digits[d]);
            ipart = std::floor(ipart / radix);
            if (whole.size() > 1100) break;  // ~2^1024 in base 2
        }
    }
    std::string frac;
    for (int i = 0; i < 32 && fpart > 0; i++) {
        fpart *= radix;
        int d = static_cast<int>(std::floor(fpart));
        frac += digits[d];
        fpart -= d;
    }
    std::string out = negative ? "-" : "";
    out += whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

}  // namespace detail

/// Builds the array RegExp.prototype.exec and String.prototype.match return:
/// group strings plus index and input data properties.
inline Value Interpreter::build_match_result(const std::smatch& m, const std::string& subject,
                                             size_t base_offset) {
    std::vector<Value> groups;
    for (size_t g = 0; g < m.size(); g++) {
        if (m[g].matched) {
            groups.push_back(heap_.str(m[g].str()));
        } else {
            groups.push_back(Value());
        }
    }
    auto arr = make_array(std::move(groups));
    detail::def_slot(heap_, arr, PropertyKey("index"),
                     Value(static_cast<double>(base_offset + m.position(0))));
    detail::def_slot(heap_, arr, PropertyKey("input"), heap_.str(subject));
    return Value(std::static_pointer_cast<Object>(arr));
}

// ---------------------------------------------------------------------------
// String
// ---------------------------------------------------------------------------

inline void Interpreter::setup_string_builtin() {
    auto this_str = [this](const NativeCallInfo& info) -> std::string {
        const Value& self = info.this_value;
        if (self.is_string()) return self.as_string();
        if (BoxedObject* box = as_boxed(self)) {
            if (box->primitive.is_string()) return box->primitive.as_string();
        }
        return to_string_value(self);
    };

    FunctionPtr ctor = native_fn(
        "String",
        [this](const NativeCallInfo& info) -> Value {
            std::string s;
            if (!info.args.empty()) {
                Value v = info.args[0];
                s = v.is_symbol() ? detail::symbol_display(v.as_symbol()) : to_string_value(v);
            }
            if (!info.new_target.is_undefined()) {
                auto box = heap_.make<BoxedObject>();
                box->primitive = heap_.str(s);
                box->set_prototype(string_proto_);
                box->set_class_name("String");
                return Value(std::static_pointer_cast<Object>(box));
            }
            return heap_.str(std::move(s));
        },
        1, "String");
    ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
    detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(string_proto_), false,
                     false);
    detail::def_slot(heap_, string_proto_, PropertyKey("constructor"), Value(ctor_obj));
    detail::def_slot(heap_, global_, PropertyKey("String"), Value(ctor_obj));

    auto add_static = [&](const std::string& name, NativeFn fn, size_t arity) {
        FunctionPtr f = native_fn(name, std::move(fn), arity, "String." + name);
        detail::def_slot(heap_, ctor_obj, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
    };
    add_static(
        "fromCharCode",
        [this](const NativeCallInfo& info) -> Value {
            std::u16string out;
            for (const Value& v : info.args) {
                out += static_cast<char16_t>(js_to_uint32(to_number(v)) & 0xFFFF);
            }
            return heap_.str(detail::utf16_to_utf8(out));
        },
        1);
    add_static(
        "fromCodePoint",
        [this](const NativeCallInfo& info) -> Value {
            std::u16string out;
            for (const Value& v : info.args) {
                double d = to_number(v);
                if (std::isnan(d) || d < 0 || d > 0x10FFFF || d != std::floor(d)) {
                    throw_error("RangeError", "Invalid code point " + js_number_to_string(d));
                }
                uint32_t cp = static_cast<uint32_t>(d);
                if (cp <= 0xFFFF) {
                    out += static_cast<char16_t>(cp);
                } else {
                    cp -= 0x10000;
                    out += static_cast<char16_t>(0xD800 + (cp >> 10));
                    out += static_cast<char16_t>(0xDC00 + (cp & 0x3FF));
                }
            }
            return heap_.str(detail::utf16_to_utf8(out));
        },
        1);
    add_static(
        "raw",
        [this](const NativeCallInfo& info) -> Value {
            // Tagged templates arrive as one pre-cooked string.
            Value first = info.arg(0);
            if (first.is_string()) return first;
            if (first.is_object()) {
                Value raw = get_property(first, PropertyKey("raw"), current_loc_, true);
                if (ArrayObject* arr = as_array(raw)) {
                    std::string out;
                    for (size_t i = 0; i < arr->elements.size(); i++) {
                        out += to_string_value(arr->elements[i]);
                        if (i + 1 < info.args.size() && i + 1 < arr->elements.size()) {
                            out += to_string_value(info.args[i + 1]);
                        }
                    }
                    return heap_.str(std::move(out));
                }
            }
            return heap_.str("");
        },
        1);

    auto method = [&](const std::string& name, NativeFn fn, size_t arity = 0) {
        add_method(string_proto_, name, std::move(fn), arity);
    };

    method("toString", [this, this_str](const NativeCallInfo& info) -> Value {
        return heap_.str(this_str(info));
    });
    method("valueOf", [this, this_str](const NativeCallInfo& info) -> Value {
        return heap_.str(this_str(info));
    });
    method("charAt", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        double i = to_number(info.arg(0));
        if (std::isnan(i)) i = 0;
        if (i < 0 || i >= static_cast<double>(u.size())) return heap_.str("");
        return heap_.str(detail::utf16_to_utf8(std::u16string(1, u[static_cast<size_t>(i)])));
    }, 1);
    method("charCodeAt", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        double i = to_number(info.arg(0));
        if (std::isnan(i)) i = 0;
        if (i < 0 || i >= static_cast<double>(u.size())) {
            return Value(std::numeric_limits<double>::quiet_NaN());
        }
        return Value(static_cast<double>(u[static_cast<size_t>(i)]));
    }, 1);
    method("codePointAt", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        double i = to_number(info.arg(0));
        if (std::isnan(i)) i = 0;
        if (i < 0 || i >= static_cast<double>(u.size())) return Value();
        size_t idx = static_cast<size_t>(i);
        char16_t c = u[idx];
        if (c >= 0xD800 && c <= 0xDBFF && idx + 1 < u.size() && u[idx + 1] >= 0xDC00 &&
            u[idx + 1] <= 0xDFFF) {
            uint32_t cp = 0x10000 + ((c - 0xD800) << 10) + (u[idx + 1] - 0xDC00);
            return Value(static_cast<double>(cp));
        }
        return Value(static_cast<double>(c));
    }, 1);
    method("at", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        double rel = info.arg(0).is_undefined() ? 0 : to_number(info.arg(0));
        if (std::isnan(rel)) rel = 0;
        double idx = rel < 0 ? static_cast<double>(u.size()) + rel : rel;
        if (idx < 0 || idx >= static_cast<double>(u.size())) return Value();
        return heap_.str(detail::utf16_to_utf8(std::u16string(1, u[static_cast<size_t>(idx)])));
    }, 1);
    method("indexOf", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        std::u16string needle = detail::utf8_to_utf16(to_string_value(info.arg(0)));
        double from = info.args.size() > 1 ? to_number(info.arg(1)) : 0;
        size_t start = (std::isnan(from) || from < 0) ? 0 : static_cast<size_t>(from);
        if (start > u.size()) start = u.size();
        size_t pos = u.find(needle, start);
        return Value(pos == std::u16string::npos ? -1.0 : static_cast<double>(pos));
    }, 1);
    method("lastIndexOf", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        std::u16string needle = detail::utf8_to_utf16(to_string_value(info.arg(0)));
        size_t pos = u.rfind(needle);
        return Value(pos == std::u16string::npos ? -1.0 : static_cast<double>(pos));
    }, 1);
    method("includes", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string hay = this_str(info);
        std::string needle = to_string_value(info.arg(0));
        return Value(hay.find(needle) != std::string::npos);
    }, 1);
    method("startsWith", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        std::u16string needle = detail::utf8_to_utf16(to_string_value(info.arg(0)));
        double from = info.args.size() > 1 ? to_number(info.arg(1)) : 0;
        size_t start = (std::isnan(from) || from < 0) ? 0 : static_cast<size_t>(from);
        if (start > u.size() || start + needle.size() > u.size()) return Value(false);
        return Value(u.compare(start, needle.size(), needle) == 0);
    }, 1);
    method("endsWith", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        std::u16string needle = detail::utf8_to_utf16(to_string_value(info.arg(0)));
        size_t end = u.size();
        if (info.args.size() > 1 && !info.arg(1).is_undefined()) {
            double e = to_number(info.arg(1));
            end = (std::isnan(e) || e < 0) ? 0 : std::min<size_t>(static_cast<size_t>(e), u.size());
        }
        if (needle.size() > end) return Value(false);
        return Value(u.compare(end - needle.size(), needle.size(), needle) == 0);
    }, 1);
    auto resolve_range = [this](const NativeCallInfo& info, size_t len, bool clamp_negative,
                                size_t& start, size_t& end) {
        auto resolve = [&](const Value& v, size_t fallback) -> size_t {
            if (v.is_undefined()) return fallback;
            double d = to_number(v);
            if (std::isnan(d)) return 0;
            if (d < 0) {
                if (clamp_negative) return 0;
                double k = static_cast<double>(len) + d;
                return k < 0 ? 0 : static_cast<size_t>(k);
            }
            return d > static_cast<double>(len) ? len : static_cast<size_t>(d);
        };
        start = resolve(info.arg(0), 0);
        end = resolve(info.arg(1), len);
    };
    method("slice", [this, this_str, resolve_range](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        size_t start = 0, end = 0;
        resolve_range(info, u.size(), false, start, end);
        if (start >= end) return heap_.str("");
        return heap_.str(detail::utf16_to_utf8(u.substr(start, end - start)));
    }, 2);
    method("substring", [this, this_str, resolve_range](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        size_t start = 0, end = 0;
        resolve_range(info, u.size(), true, start, end);
        if (start > end) std::swap(start, end);
        return heap_.str(detail::utf16_to_utf8(u.substr(start, end - start)));
    }, 2);
    method("substr", [this, this_str](const NativeCallInfo& info) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        double from = info.arg(0).is_undefined() ? 0 : to_number(info.arg(0));
        if (std::isnan(from)) from = 0;
        if (from < 0) from = std::max(0.0, static_cast<double>(u.size()) + from);
        if (from >= static_cast<double>(u.size())) return heap_.str("");
        size_t start = static_cast<size_t>(from);
        size_t count = u.size() - start;
        if (!info.arg(1).is_undefined()) {
            double c = to_number(info.arg(1));
            count = (std::isnan(c) || c < 0) ? 0 : std::min<size_t>(static_cast<size_t>(c), count);
        }
        return heap_.str(detail::utf16_to_utf8(u.substr(start, count)));
    }, 2);
    method("toUpperCase", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return heap_.str(std::move(s));
    });
    method("toLowerCase", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return heap_.str(std::move(s));
    });
    method("toLocaleUpperCase", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return heap_.str(std::move(s));
    });
    method("toLocaleLowerCase", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return heap_.str(std::move(s));
    });
    method("trim", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        size_t b = 0, e = s.size();
        while (b < e && is_js_whitespace(s[b])) b++;
        while (e > b && is_js_whitespace(s[e - 1])) e--;
        return heap_.str(s.substr(b, e - b));
    });
    method("trimStart", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        size_t b = 0;
        while (b < s.size() && is_js_whitespace(s[b])) b++;
        return heap_.str(s.substr(b));
    });
    method("trimEnd", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        size_t e = s.size();
        while (e > 0 && is_js_whitespace(s[e - 1])) e--;
        return heap_.str(s.substr(0, e));
    });
    auto pad = [this, this_str](const NativeCallInfo& info, bool at_start) -> Value {
        std::u16string u = detail::utf8_to_utf16(this_str(info));
        double target = to_number(info.arg(0));
        if (std::isnan(target) || target <= static_cast<double>(u.size())) {
            return heap_.str(detail::utf16_to_utf8(u));
        }
        size_t want = std::min<size_t>(static_cast<size_t>(target), 1u << 20);
        std::u16string fill = info.arg(1).is_undefined()
                                  ? std::u16string(u" ")
                                  : detail::utf8_to_utf16(to_string_value(info.arg(1)));
        if (fill.empty()) return heap_.str(detail::utf16_to_utf8(u));
        std::u16string padding;
        while (u.size() + padding.size() < want) padding += fill;
        padding.resize(want - u.size());
        heap_.charge(padding.size());
        return heap_.str(detail::utf16_to_utf8(at_start ? padding + u : u + padding));
    };
    method("padStart", [pad](const NativeCallInfo& info) -> Value { return pad(info, true); }, 2);
    method("padEnd", [pad](const NativeCallInfo& info) -> Value { return pad(info, false); }, 2);
    method("repeat", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        double n = to_number(info.arg(0));
        if (std::isnan(n)) n = 0;
        if (n < 0 || std::isinf(n)) throw_error("RangeError", "Invalid count value");
        size_t count = static_cast<size_t>(n);
        if (count * s.size() > (1u << 24)) throw_error("RangeError", "Invalid string length");
        heap_.charge(count * s.size());
        std::string out;
        out.reserve(count * s.size());
        for (size_t i = 0; i < count; i++) out += s;
        return heap_.str(std::move(out));
    }, 1);
    method("concat", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string out = this_str(info);
        for (const Value& v : info.args) out += to_string_value(v);
        heap_.charge(out.size());
        return heap_.str(std::move(out));
    }, 1);
    method("localeCompare", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string a = this_str(info);
        std::string b = to_string_value(info.arg(0));
        return Value(a < b ? -1.0 : a > b ? 1.0 : 0.0);
    }, 1);
    method("normalize", [this, this_str](const NativeCallInfo& info) -> Value {
        return heap_.str(this_str(info));
    });

    // -- pattern-driven methods --

    auto regex_of = [this](const Value& v) -> std::pair<std::string, std::string> {
        if (RegExpObject* re = as_regexp(v)) return {re->pattern, re->flags};
        // A literal string compiles as a pattern, matching the host language.
        return {to_string_value(v), ""};
    };
    method("search", [this, this_str, regex_of](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        auto [pattern, flags] = regex_of(info.arg(0));
        detail::JsRegex re(pattern, flags);
        std::smatch m;
        if (!re.search(s, 0, m)) return Value(-1.0);
        return Value(static_cast<double>(m.position(0)));
    }, 1);
    method("match", [this, this_str, regex_of](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        auto [pattern, flags] = regex_of(info.arg(0));
        detail::JsRegex re(pattern, flags);
        if (!re.global()) {
            std::smatch m;
            if (!re.search(s, 0, m)) return Value::null();
            return build_match_result(m, s, 0);
        }
        std::vector<Value> hits;
        size_t from = 0;
        std::smatch m;
        while (from <= s.size() && re.search(s, from, m)) {
            limits_.tick();
            hits.push_back(heap_.str(m.str(0)));
            size_t advance = static_cast<size_t>(m.position(0)) + m.str(0).size();
            from += advance > 0 ? advance : 1;
        }
        if (hits.empty()) return Value::null();
        return Value(std::static_pointer_cast<Object>(make_array(std::move(hits))));
    }, 1);
    method("matchAll", [this, this_str, regex_of](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        auto [pattern, flags] = regex_of(info.arg(0));
        detail::JsRegex re(pattern, flags);
        std::vector<Value> hits;
        size_t from = 0;
        std::smatch m;
        while (from <= s.size() && re.search(s, from, m)) {
            limits_.tick();
            hits.push_back(build_match_result(m, s, from));
            size_t advance = static_cast<size_t>(m.position(0)) + m.str(0).size();
            from += advance > 0 ? advance : 1;
        }
        return Value(std::static_pointer_cast<Object>(make_array(std::move(hits))));
    }, 1);
    method("split", [this, this_str](const NativeCallInfo& info) -> Value {
        std::string s = this_str(info);
        Value sep = info.arg(0);
        size_t limit = SIZE_MAX;
        if (!info.arg(1).is_undefined()) {
            double l = to_number(info.arg(1));
            limit = (std::isnan(l) || l < 0) ? 0 : static_cast<size_t>(l);
        }
        std::vector<Value> parts;
        if (sep.is_undefined() || limit == 0) {
            if (limit != 0) parts.push_back(heap_.str(s));
            return Value(std::static_pointer_cast<Object>(make_array(std::move(parts))));
        }
        if (RegExpObject* re_obj = as_regexp(sep)) {
            detail::JsRegex re(re_obj->pattern, re_obj->flags);
            size_t from = 0;
            std::smatch m;
            while (parts.size() < limit && from <= s.size() && re.search(s, from, m)) {
                limits_.tick();
                size_t at = from + static_cast<size_t>(m.position(0));
                size_t len = m.str(0).size();
                if (len == 0) {
                    if (at >= s.size()) break;
                    at = from;
                    len = 0;
                    parts.push_back(heap_.str(s.substr(from, 1)));
                    from += 1;
                    continue;
                }
                parts.push_back(heap_.str(s.substr(from, at - from)));
                from = at + len;
            }
            if (parts.size() < limit) parts.push_back(heap_.str(s.substr(from)));
            return Value(std::static_pointer_cast<Object>(make_array(std::move(parts))));
        }
        std::string needle = to_string_value(sep);
        if (needle.empty()) {
            std::u16string u = detail::utf8_to_utf16(s);
            size_t i = 0;
            while (i < u.size() && parts.size() < limit) {
                size_t len = 1;
                if (u[i] >= 0xD800 && u[i] <= 0xDBFF && i + 1 < u.size()) len = 2;
                parts.push_back(heap_.str(detail::utf16_to_utf8(u.substr(i, len))));
                i += len;
            }
            return Value(std::static_pointer_cast<Object>(make_array(std::move(parts))));
        }
        size_t from = 0;
        while (parts.size() < limit) {
            size_t at = s.find(needle, from);
            if (at == std::string::npos) break;
            parts.push_back(heap_.str(s.substr(from, at - from)));
            from = at + needle.size();
        }
        if (parts.size() < limit) parts.push_back(heap_.str(s.substr(from)));
        return Value(std::static_pointer_cast<Object>(make_array(std::move(parts))));
    }, 2);

    auto expand_replacement = [this](const std::string& tmpl, const std::smatch& m,
                                     const std::string& subject, size_t match_at) -> std::string {
        std::string out;
        for (size_t i = 0; i < tmpl.size(); i++) {
            if (tmpl[i] != '$' || i + 1 >= tmpl.size()) {
                out += tmpl[i];
                continue;
            }
            char c = tmpl[i + 1];
            if (c == '$') {
                out += '$';
                i++;
            } else if (c == '&') {
                out += m.str(0);
                i++;
            } else if (c == '`') {
                out += subject.substr(0, match_at);
                i++;
            } else if (c == '\'') {
                out += subject.substr(match_at + m.str(0).size());
                i++;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t g = static_cast<size_t>(c - '0');
                size_t used = 1;
                if (i + 2 < tmpl.size() && std::isdigit(static_cast<unsigned char>(tmpl[i + 2]))) {
                    size_t g2 = g * 10 + static_cast<size_t>(tmpl[i + 2] - '0');
                    if (g2 < m.size()) {
                        g = g2;
                        used = 2;
                    }
                }
                if (g >= 1 && g < m.size()) {
                    if (m[g].matched) out += m.str(g);
                    i += used;
                } else {
                    out += tmpl[i];
                }
            } else {
                out += tmpl[i];
            }
        }
        return out;
    };
    auto replacement_for = [this, expand_replacement](const Value& repl, const std::smatch& m,
                                                      const std::string& subject,
                                                      size_t match_at) -> std::string {
        if (is_callable(repl)) {
            std::vector<Value> args;
            for (size_t g = 0; g < m.size(); g++) {
                args.push_back(m[g].matched ? heap_.str(m.str(g)) : Value());
            }
            args.push_back(Value(static_cast<double>(match_at)));
            args.push_back(heap_.str(subject));
            return to_string_value(call_value(repl, Value(), std::move(args), current_loc_));
        }
        return expand_replacement(to_string_value(repl), m, subject, match_at);
    };
    auto do_replace = [this, this_str, replacement_for](const NativeCallInfo& info,
                                                        bool replace_all) -> Value {
        std::string s = this_str(info);
        Value pat = info.arg(0);
        Value repl = info.arg(1);
        if (RegExpObject* re_obj = as_regexp(pat)) {
            if (replace_all && re_obj->flags.find('g') == std::string::npos) {
                throw_error("TypeError",
                            "replaceAll must be called with a global RegExp");
            }
            detail::JsRegex re(re_obj->pattern, re_obj->flags);
            bool all = replace_all || re.global();
            std::string out;
            size_t from = 0;
            std::smatch m;
            while (from <= s.size() && re.search(s, from, m)) {
                limits_.tick();
                size_t at = from + static_cast<size_t>(m.position(0));
                out += s.substr(from, at - from);
                out += replacement_for(repl, m, s, at);
                size_t len = m.str(0).size();
                if (len == 0) {
                    if (at < s.size()) out += s[at];
                    from = at + 1;
                } else {
                    from = at + len;
                }
                if (!all) break;
            }
            out += from <= s.size() ? s.substr(from) : "";
            heap_.charge(out.size());
            return heap_.str(std::move(out));
        }
        std::string needle = to_string_value(pat);
        std::string out;
        size_t from = 0;
        while (true) {
            size_t at = s.find(needle, from);
            if (at == std::string::npos) break;
            out += s.substr(from, at - from);
            if (is_callable(repl)) {
                Value r = call_value(repl, Value(),
                                     {heap_.str(needle), Value(static_cast<double>(at)),
                                      heap_.str(s)},
                                     current_loc_);
                out += to_string_value(r);
            } else {
                std::string tmpl = to_string_value(repl);
                std::string expanded;
                for (size_t i = 0; i < tmpl.size(); i++) {
                    if (tmpl[i] == '$' && i + 1 < tmpl.size() && tmpl[i + 1] == '&') {
                        expanded += needle;
                        i++;
                    } else if (tmpl[i] == '$' && i + 1 < tmpl.size() && tmpl[i + 1] == '$') {
                        expanded += '$';
                        i++;
                    } else {
                        expanded += tmpl[i];
                    }
                }
                out += expanded;
            }
            from = at + (needle.empty() ? 1 : needle.size());
            if (needle.empty() && at < s.size()) out += s[at];
            if (!replace_all) break;
            limits_.tick();
        }
        out += from <= s.size() ? s.substr(from) : "";
        heap_.charge(out.size());
        return heap_.str(std::move(out));
    };
    method("replace", [do_replace](const NativeCallInfo& info) -> Value {
        return do_replace(info, false);
    }, 2);
    method("replaceAll", [do_replace](const NativeCallInfo& info) -> Value {
        return do_replace(info, true);
    }, 2);
}

// ---------------------------------------------------------------------------
// Number and Boolean
// ---------------------------------------------------------------------------

inline void Interpreter::setup_number_boolean_builtins() {
    auto this_num = [this](const NativeCallInfo& info) -> double {
        const Value& self = info.this_value;
        if (self.is_number()) return self.as_number();
        if (BoxedObject* box = as_boxed(self)) {
            if (box->primitive.is_number()) return box->primitive.as_number();
        }
        return to_number(self);
    };

    FunctionPtr num_ctor = native_fn(
        "Number",
        [this](const NativeCallInfo& info) -> Value {
            double d = info.args.empty() ? 0 : to_number(info.args[0]);
            if (!info.new_target.is_undefined()) {
                auto box = heap_.make<BoxedObject>();
                box->primitive = Value(d);
                box->set_prototype(number_proto_);
                box->set_class_name("Number");
                return Value(std::static_pointer_cast<Object>(box));
            }
            return Value(d);
        },
        1, "Number");
    ObjectPtr num_obj = std::static_pointer_cast<Object>(num_ctor);
    detail::def_slot(heap_, num_obj, PropertyKey("prototype"), Value(number_proto_), false, false);
    detail::def_slot(heap_, number_proto_, PropertyKey("constructor"), Value(num_obj));
    detail::def_slot(heap_, global_, PropertyKey("Number"), Value(num_obj));

    auto num_const = [&](const char* name, double v) {
        detail::def_slot(heap_, num_obj, PropertyKey(name), Value(v), false, false);
    };
    num_const("MAX_SAFE_INTEGER", 9007199254740991.0);
    num_const("MIN_SAFE_INTEGER", -9007199254740991.0);
    num_const("MAX_VALUE", std::numeric_limits<double>::max());
    num_const("MIN_VALUE", std::numeric_limits<double>::denorm_min());
    num_const("EPSILON", std::numeric_limits<double>::epsilon());
    num_const("POSITIVE_INFINITY", std::numeric_limits<double>::infinity());
    num_const("NEGATIVE_INFINITY", -std::numeric_limits<double>::infinity());
    num_const("NaN", std::numeric_limits<double>::quiet_NaN());

    auto num_static = [&](const std::string& name, NativeFn fn, size_t arity) {
        FunctionPtr f = native_fn(name, std::move(fn), arity, "Number." + name);
        detail::def_slot(heap_, num_obj, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
    };
    num_static(
        "isInteger",
        [](const NativeCallInfo& info) -> Value {
            const Value& v = info.arg(0);
            return Value(v.is_number() && std::isfinite(v.as_number()) &&
                         v.as_number() == std::trunc(v.as_number()));
        },
        1);
    num_static(
        "isSafeInteger",
        [](const NativeCallInfo& info) -> Value {
            const Value& v = info.arg(0);
            return Value(v.is_number() && std::isfinite(v.as_number()) &&
                         v.as_number() == std::trunc(v.as_number()) &&
                         std::fabs(v.as_number()) <= 9007199254740991.0);
        },
        1);
    num_static(
        "isFinite",
        [](const NativeCallInfo& info) -> Value {
            const Value& v = info.arg(0);
            return Value(v.is_number() && std::isfinite(v.as_number()));
        },
        1);
    num_static(
        "isNaN",
        [](const NativeCallInfo& info) -> Value {
            const Value& v = info.arg(0);
            return Value(v.is_number() && std::isnan(v.as_number()));
        },
        1);
    num_static(
        "parseInt",
        [this](const NativeCallInfo& info) -> Value {
            return Value(detail::js_parse_int(to_string_value(info.arg(0)),
                                              info.arg(1).is_undefined() ? 0
                                                                         : to_number(info.arg(1))));
        },
        2);
    num_static(
        "parseFloat",
        [this](const NativeCallInfo& info) -> Value {
            return Value(detail::js_parse_float(to_string_value(info.arg(0))));
        },
        1);

    add_method(number_proto_, "toString", [this, this_num](const NativeCallInfo& info) -> Value {
        double d = this_num(info);
        if (info.arg(0).is_undefined()) return heap_.str(js_number_to_string(d));
        double r = to_number(info.arg(0));
        if (std::isnan(r) || r < 2 || r > 36) {
            throw_error("RangeError", "toString() radix must be between 2 and 36");
        }
        int radix = static_cast<int>(r);
        if (radix == 10) return heap_.str(js_number_to_string(d));
        return heap_.str(detail::double_to_radix(d, radix));
    }, 1);
    add_method(number_proto_, "toFixed", [this, this_num](const NativeCallInfo& info) -> Value {
        double digits = info.arg(0).is_undefined() ? 0 : to_number(info.arg(0));
        if (std::isnan(digits) || digits < 0 || digits > 100) {
            throw_error("RangeError", "toFixed() digits argument must be between 0 and 100");
        }
        double d = this_num(info);
        if (std::isnan(d)) return heap_.str("NaN");
        if (std::fabs(d) >= 1e21) return heap_.str(js_number_to_string(d));
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%.*f", static_cast<int>(digits), d);
        return heap_.str(buf);
    }, 1);
    add_method(number_proto_, "toPrecision", [this, this_num](const NativeCallInfo& info) -> Value {
        double d = this_num(info);
        if (info.arg(0).is_undefined()) return heap_.str(js_number_to_string(d));
        double p = to_number(info.arg(0));
        if (std::isnan(p) || p < 1 || p > 100) {
            throw_error("RangeError", "toPrecision() argument must be between 1 and 100");
        }
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%.*g", static_cast<int>(p), d);
        return heap_.str(buf);
    }, 1);
    add_method(number_proto_, "toLocaleString", [this, this_num](const NativeCallInfo& info) -> Value {
        return heap_.str(js_number_to_string(this_num(info)));
    });
    add_method(number_proto_, "valueOf", [this_num](const NativeCallInfo& info) -> Value {
        return Value(this_num(info));
    });

    FunctionPtr bool_ctor = native_fn(
        "Boolean",
        [this](const NativeCallInfo& info) -> Value {
            bool b = to_boolean(info.arg(0));
            if (!info.new_target.is_undefined()) {
                auto box = heap_.make<BoxedObject>();
                box->primitive = Value(b);
                box->set_prototype(boolean_proto_);
                box->set_class_name("Boolean");
                return Value(std::static_pointer_cast<Object>(box));
            }
            return Value(b);
        },
        1, "Boolean");
    ObjectPtr bool_obj = std::static_pointer_cast<Object>(bool_ctor);
    detail::def_slot(heap_, bool_obj, PropertyKey("prototype"), Value(boolean_proto_), false,
                     false);
    detail::def_slot(heap_, boolean_proto_, PropertyKey("constructor"), Value(bool_obj));
    detail::def_slot(heap_, global_, PropertyKey("Boolean"), Value(bool_obj));

    auto this_bool = [this](const NativeCallInfo& info) -> bool {
        const Value& self = info.this_value;
        if (self.is_bool()) return self.as_bool();
        if (BoxedObject* box = as_boxed(self)) {
            if (box->primitive.is_bool()) return box->primitive.as_bool();
        }
        return to_boolean(self);
    };
    add_method(boolean_proto_, "toString", [this, this_bool](const NativeCallInfo& info) -> Value {
        return heap_.str(this_bool(info) ? "true" : "false");
    });
    add_method(boolean_proto_, "valueOf", [this_bool](const NativeCallInfo& info) -> Value {
        return Value(this_bool(info));
    });
}

}  // namespace mirage

#endif
