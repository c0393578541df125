#ifndef MIRAGE_DETAIL_NATIVES_LIB_HPP
#define MIRAGE_DETAIL_NATIVES_LIB_HPP

#include <cinttypes>
#include <cstdio>

#include "json.hpp"

namespace mirage {

namespace detail {

inline constexpr double kFixedNowMs = 1'700'000'000'000.0;  // deterministic clock

inline int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q--;
    return q;
}

inline int64_t days_from_civil(int64_t y, unsigned m, unsigned d) {
    y -= m <= 2;
    int64_t era = (y >= 0 ? y : y - 399) / 400;
    uint64_t yoe = static_cast<uint64_t>(y - era * 400);
    uint64_t doy = (153 * (m > 2 ? m - 3 : m + 9) + 2) / 5 + d - 1;
    uint64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<int64_t>(doe) - 719468;
}

inline void civil_from_days(int64_t z, int64_t& y, unsigned& m, unsigned& d) {
    z += 719468;
    int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    uint64_t doe = static_cast<uint64_t>(z - era * 146097);
    uint64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    int64_t yr = static_cast<int64_t>(yoe) + era * 400;
    uint64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    uint64_t mp = (5 * doy + 2) / 153;
    d = static_cast<unsigned>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<unsigned>(mp < 10 ? mp + 3 : mp - 9);
    y = yr + (m <= 2);
}

struct DateParts {
    int64_t year = 1970;
    unsigned month = 1;  // 1..12
    unsigned day = 1;
    int64_t hour = 0, minute = 0, second = 0, milli = 0;
    int weekday = 4;  // 0 = Sunday
};

inline bool date_parts_of(double ms, DateParts& out) {
    if (std::isnan(ms) || std::fabs(ms) > 8.64e15) return false;
    int64_t total = static_cast<int64_t>(std::floor(ms));
    int64_t days = floor_div(total, 86'400'000);
    int64_t rem = total - days * 86'400'000;
    out.hour = rem / 3'600'000;
    out.minute = (rem / 60'000) % 60;
    out.second = (rem / 1000) % 60;
    out.milli = rem % 1000;
    civil_from_days(days, out.year, out.month, out.day);
    out.weekday = static_cast<int>(((days % 7) + 7 + 4) % 7);
    return true;
}

inline double ms_from_parts(const DateParts& p) {
    int64_t days = days_from_civil(p.year, p.month, p.day);
    return static_cast<double>(days) * 86'400'000.0 + static_cast<double>(p.hour) * 3'600'000.0 +
           static_cast<double>(p.minute) * 60'000.0 + static_cast<double>(p.second) * 1000.0 +
           static_cast<double>(p.milli);
}

inline const char* kWeekdayNames[] = {"Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat"};
inline const char* kMonthNames[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                    "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

inline std::string iso_date_string(double ms) {
    DateParts p;
    if (!date_parts_of(ms, p)) return "Invalid Date";
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%04" PRId64 "-%02u-%02uT%02" PRId64 ":%02" PRId64
                                    ":%02" PRId64 ".%03" PRId64 "Z",
                  p.year, p.month, p.day, p.hour, p.minute, p.second, p.milli);
    return buf;
}

inline std::string readable_date_string(double ms) {
    DateParts p;
    if (!date_parts_of(ms, p)) return "Invalid Date";
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "%s %s %02u %04" PRId64 " %02" PRId64 ":%02" PRId64 ":%02" PRId64
                  " GMT+0000 (Coordinated Universal Time)",
                  kWeekdayNames[p.weekday], kMonthNames[p.month - 1], p.day, p.year, p.hour,
                  p.minute, p.second);
    return buf;
}

inline std::string utc_date_string(double ms) {
    DateParts p;
    if (!date_parts_of(ms, p)) return "Invalid Date";
    char buf[64];
    std::snprintf(buf, sizeof(buf),
                  "%s, %02u %s %04" PRId64 " %02" PRId64 ":%02" PRId64 ":%02" PRId64 " GMT",
                  kWeekdayNames[p.weekday], p.day, kMonthNames[p.month - 1], p.year, p.hour,
                  p.minute, p.second);
    return buf;
}

/// Accepts the ISO-8601 subset Date.parse must handle plus nothing fancier;
/// anything else is NaN.
inline double parse_date_string(const std::string& s) {
    int64_t y = 0;
    unsigned mo = 1, d = 1;
    int h = 0, mi = 0;
    double sec = 0;
    int consumed = 0;
    long long yy = 0;
    unsigned mm = 0, dd = 0;
    if (std::sscanf(s.c_str(), "%lld-%u-%u%n", &yy, &mm, &dd, &consumed) != 3) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (mm < 1 || mm > 12 || dd < 1 || dd > 31) return std::numeric_limits<double>::quiet_NaN();
    y = yy;
    mo = mm;
    d = dd;
    size_t pos = static_cast<size_t>(consumed);
    double tz_offset_ms = 0;
    if (pos < s.size() && (s[pos] == 'T' || s[pos] == ' ')) {
        pos++;
        int n2 = 0;
        if (std::sscanf(s.c_str() + pos, "%d:%d%n", &h, &mi, &n2) != 2) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        pos += static_cast<size_t>(n2);
        if (pos < s.size() && s[pos] == ':') {
            pos++;
            int n3 = 0;
            if (std::sscanf(s.c_str() + pos, "%lf%n", &sec, &n3) != 1) {
                return std::numeric_limits<double>::quiet_NaN();
            }
            pos += static_cast<size_t>(n3);
        }
        if (pos < s.size()) {
            if (s[pos] == 'Z') {
                pos++;
            } else if (s[pos] == '+' || s[pos] == '-') {
                int sign = s[pos] == '-' ? -1 : 1;
                int oh = 0, om = 0;
                int n4 = 0;
                if (std::sscanf(s.c_str() + pos + 1, "%d:%d%n", &oh, &om, &n4) == 2) {
                    tz_offset_ms = sign * (oh * 3'600'000.0 + om * 60'000.0);
                    pos += 1 + static_cast<size_t>(n4);
                }
            }
        }
    }
    if (pos != s.size()) return std::numeric_limits<double>::quiet_NaN();
    DateParts p;
    p.year = y;
    p.month = mo;
    p.day = d;
    p.hour = h;
    p.minute = mi;
    p.second = static_cast<int64_t>(sec);
    p.milli = static_cast<int64_t>(std::round((sec - std::floor(sec)) * 1000));
    return ms_from_parts(p) - tz_offset_ms;
}

inline bool uri_unreserved(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '_' || c == '.' || c == '!' || c == '~' || c == '*' || c == '\'' ||
           c == '(' || c == ')';
}

inline bool uri_reserved(char c) {
    switch (c) {
        case ';': case '/': case '?': case ':': case '@': case '&':
        case '=': case '+': case '$': case ',': case '#':
            return true;
        default:
            return false;
    }
}

inline int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

/// JSON string literal with the minimal escapes; non-ASCII bytes pass through
/// as UTF-8, matching how the host language serializes by default.
inline std::string json_quote(const std::string& s) {
    std::string out = "\"";
    char buf[8];
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    out += "\"";
    return out;
}

}  // namespace detail

inline void Interpreter::add_getter(const ObjectPtr& obj, const std::string& name, NativeFn fn) {
    heap_.charge(Heap::kPropertyCost);
    PropertySlot slot;
    slot.is_accessor = true;
    slot.enumerable = false;
    slot.getter = std::static_pointer_cast<Object>(native_fn(name, std::move(fn)));
    obj->define_own(PropertyKey(name), std::move(slot));
}

// ---------------------------------------------------------------------------
// Symbol
// ---------------------------------------------------------------------------

inline void Interpreter::setup_symbol_builtin() {
    FunctionPtr ctor = native_fn(
        "Symbol",
        [this](const NativeCallInfo& info) -> Value {
            if (!info.new_target.is_undefined()) {
                throw_error("TypeError", "Symbol is not a constructor");
            }
            std::string desc =
                info.arg(0).is_undefined() ? "" : to_string_value(info.arg(0));
            return Value(make_symbol(desc));
        },
        0, "Symbol");
    ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
    detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(symbol_proto_), false,
                     false);
    detail::def_slot(heap_, symbol_proto_, PropertyKey("constructor"), Value(ctor_obj));
    detail::def_slot(heap_, global_, PropertyKey("Symbol"), Value(ctor_obj));

    auto well_known_value = [&](const char* name, uint32_t id) {
        JsSymbol sym;
        sym.id = id;
        sym.description = std::make_shared<const std::string>(std::string("Symbol.") + name);
        detail::def_slot(heap_, ctor_obj, PropertyKey(name), Value(sym), false, false);
    };
    well_known_value("iterator", well_known::iterator);
    well_known_value("asyncIterator", well_known::async_iterator);
    well_known_value("toPrimitive", well_known::to_primitive);
    well_known_value("toStringTag", well_known::to_string_tag);
    well_known_value("hasInstance", well_known::has_instance);

    auto registry = std::make_shared<std::map<std::string, JsSymbol>>();
    FunctionPtr for_fn = native_fn(
        "for",
        [this, registry](const NativeCallInfo& info) -> Value {
            std::string key = to_string_value(info.arg(0));
            auto it = registry->find(key);
            if (it != registry->end()) return Value(it->second);
            JsSymbol sym = make_symbol(key);
            (*registry)[key] = sym;
            return Value(sym);
        },
        1, "Symbol.for");
    detail::def_slot(heap_, ctor_obj, PropertyKey("for"),
                     Value(std::static_pointer_cast<Object>(for_fn)));
    FunctionPtr key_for = native_fn(
        "keyFor",
        [registry](const NativeCallInfo& info) -> Value {
            if (!info.arg(0).is_symbol()) return Value();
            for (const auto& [key, sym] : *registry) {
                if (sym.id == info.arg(0).as_symbol().id) return Value(key);
            }
            return Value();
        },
        1, "Symbol.keyFor");
    detail::def_slot(heap_, ctor_obj, PropertyKey("keyFor"),
                     Value(std::static_pointer_cast<Object>(key_for)));

    auto this_symbol = [this](const NativeCallInfo& info) -> JsSymbol {
        if (info.this_value.is_symbol()) return info.this_value.as_symbol();
        if (BoxedObject* box = as_boxed(info.this_value)) {
            if (box->primitive.is_symbol()) return box->primitive.as_symbol();
        }
        throw_error("TypeError", "Receiver is not a symbol");
    };
    add_method(symbol_proto_, "toString", [this, this_symbol](const NativeCallInfo& info) -> Value {
        return heap_.str(detail::symbol_display(this_symbol(info)));
    });
    add_method(symbol_proto_, "valueOf", [this_symbol](const NativeCallInfo& info) -> Value {
        return Value(this_symbol(info));
    });
    add_getter(symbol_proto_, "description", [this, this_symbol](const NativeCallInfo& info) -> Value {
        JsSymbol sym = this_symbol(info);
        if (!sym.description) return Value();
        return Value(sym.description);
    });
}

// ---------------------------------------------------------------------------
// Error family
// ---------------------------------------------------------------------------

inline void Interpreter::setup_error_builtins() {
    ObjectPtr base_ctor;
    for (const char* kind :
         {"Error", "TypeError", "RangeError", "ReferenceError", "SyntaxError", "EvalError",
          "URIError"}) {
        std::string kind_s = kind;
        ObjectPtr proto = error_protos_.at(kind_s);
        FunctionPtr ctor = native_fn(
            kind_s,
            [this, kind_s](const NativeCallInfo& info) -> Value {
                std::string msg =
                    info.arg(0).is_undefined() ? "" : to_string_value(info.arg(0));
                return Value(make_error(kind_s, msg));
            },
            1, kind_s);
        ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
        detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(proto), false, false);
        detail::def_slot(heap_, proto, PropertyKey("constructor"), Value(ctor_obj));
        detail::def_slot(heap_, proto, PropertyKey("name"), Value(kind_s));
        detail::def_slot(heap_, proto, PropertyKey("message"), Value(""));
        detail::def_slot(heap_, global_, PropertyKey(kind), Value(ctor_obj));
        if (kind_s == "Error") {
            base_ctor = ctor_obj;
        } else {
            // Subclass constructors chain to Error the way the builtins do.
            ctor->set_prototype(base_ctor);
        }
    }
    add_method(error_proto_, "toString", [this](const NativeCallInfo& info) -> Value {
        std::string name = "Error";
        std::string msg;
        if (info.this_value.is_object()) {
            Value n = get_property(info.this_value, PropertyKey("name"), current_loc_, true);
            if (!n.is_undefined()) name = to_string_value(n);
            Value m = get_property(info.this_value, PropertyKey("message"), current_loc_, true);
            if (!m.is_undefined()) msg = to_string_value(m);
        }
        if (msg.empty()) return heap_.str(std::move(name));
        return heap_.str(name + ": " + msg);
    });
}

// ---------------------------------------------------------------------------
// Math and JSON
// ---------------------------------------------------------------------------

inline void Interpreter::setup_math_json_builtins() {
    ObjectPtr math = make_object();
    math->set_class_name("Math");
    math->event_path = "Math";
    detail::def_slot(heap_, global_, PropertyKey("Math"), Value(math));

    auto mconst = [&](const char* name, double v) {
        detail::def_slot(heap_, math, PropertyKey(name), Value(v), false, false);
    };
    mconst("PI", 3.141592653589793);
    mconst("E", 2.718281828459045);
    mconst("LN2", 0.6931471805599453);
    mconst("LN10", 2.302585092994046);
    mconst("LOG2E", 1.4426950408889634);
    mconst("LOG10E", 0.4342944819032518);
    mconst("SQRT2", 1.4142135623730951);
    mconst("SQRT1_2", 0.7071067811865476);

    auto unary = [&](const char* name, double (*fn)(double)) {
        FunctionPtr f = native_fn(
            name,
            [this, fn](const NativeCallInfo& info) -> Value {
                return Value(fn(to_number(info.arg(0))));
            },
            1, std::string("Math.") + name);
        detail::def_slot(heap_, math, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
    };
    unary("abs", +[](double x) { return std::fabs(x); });
    unary("floor", +[](double x) { return std::floor(x); });
    unary("ceil", +[](double x) { return std::ceil(x); });
    unary("trunc", +[](double x) { return std::trunc(x); });
    unary("round", +[](double x) {
        if (std::isnan(x) || std::isinf(x)) return x;
        return std::floor(x + 0.5);
    });
    unary("sqrt", +[](double x) { return std::sqrt(x); });
    unary("cbrt", +[](double x) { return std::cbrt(x); });
    unary("exp", +[](double x) { return std::exp(x); });
    unary("expm1", +[](double x) { return std::expm1(x); });
    unary("log", +[](double x) { return std::log(x); });
    unary("log2", +[](double x) { return std::log2(x); });
    unary("log10", +[](double x) { return std::log10(x); });
    unary("log1p", +[](double x) { return std::log1p(x); });
    unary("sin", +[](double x) { return std::sin(x); });
    unary("cos", +[](double x) { return std::cos(x); });
    unary("tan", +[](double x) { return std::tan(x); });
    unary("asin", +[](double x) { return std::asin(x); });
    unary("acos", +[](double x) { return std::acos(x); });
    unary("atan", +[](double x) { return std::atan(x); });
    unary("sinh", +[](double x) { return std::sinh(x); });
    unary("cosh", +[](double x) { return std::cosh(x); });
    unary("tanh", +[](double x) { return std::tanh(x); });
    unary("asinh", +[](double x) { return std::asinh(x); });
    unary("acosh", +[](double x) { return std::acosh(x); });
    unary("atanh", +[](double x) { return std::atanh(x); });
    unary("sign", +[](double x) {
        if (std::isnan(x) || x == 0) return x;
        return x > 0 ? 1.0 : -1.0;
    });
    unary("fround", +[](double x) { return static_cast<double>(static_cast<float>(x)); });

    auto add_math = [&](const char* name, NativeFn fn, size_t arity) {
        FunctionPtr f = native_fn(name, std::move(fn), arity, std::string("Math.") + name);
        detail::def_slot(heap_, math, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
    };
    add_math(
        "pow",
        [this](const NativeCallInfo& info) -> Value {
            return Value(std::pow(to_number(info.arg(0)), to_number(info.arg(1))));
        },
        2);
    add_math(
        "atan2",
        [this](const NativeCallInfo& info) -> Value {
            return Value(std::atan2(to_number(info.arg(0)), to_number(info.arg(1))));
        },
        2);
    add_math(
        "max",
        [this](const NativeCallInfo& info) -> Value {
            double best = -std::numeric_limits<double>::infinity();
            for (const Value& v : info.args) {
                double d = to_number(v);
                if (std::isnan(d)) return Value(d);
                if (d > best) best = d;
            }
            return Value(best);
        },
        2);
    add_math(
        "min",
        [this](const NativeCallInfo& info) -> Value {
            double best = std::numeric_limits<double>::infinity();
            for (const Value& v : info.args) {
                double d = to_number(v);
                if (std::isnan(d)) return Value(d);
                if (d < best) best = d;
            }
            return Value(best);
        },
        2);
    add_math(
        "hypot",
        [this](const NativeCallInfo& info) -> Value {
            double sum = 0;
            for (const Value& v : info.args) {
                double d = to_number(v);
                sum += d * d;
            }
            return Value(std::sqrt(sum));
        },
        2);
    add_math(
        "imul",
        [this](const NativeCallInfo& info) -> Value {
            int32_t a = js_to_int32(to_number(info.arg(0)));
            int32_t b = js_to_int32(to_number(info.arg(1)));
            return Value(static_cast<double>(
                static_cast<int32_t>(static_cast<uint32_t>(a) * static_cast<uint32_t>(b))));
        },
        2);
    add_math(
        "clz32",
        [this](const NativeCallInfo& info) -> Value {
            uint32_t x = js_to_uint32(to_number(info.arg(0)));
            int n = 0;
            while (n < 32 && (x & 0x80000000u) == 0) {
                x <<= 1;
                n++;
            }
            return Value(static_cast<double>(n));
        },
        1);
    add_math(
        "random",
        [](const NativeCallInfo&) -> Value {
            return Value(0.5);  // fixed for reproducible runs
        },
        0);

    // ---- JSON ----
    ObjectPtr json = make_object();
    json->set_class_name("JSON");
    json->event_path = "JSON";
    detail::def_slot(heap_, global_, PropertyKey("JSON"), Value(json));

    // A heap-allocated recursive functor so the parse lambda below can capture
    // a stable copy.
    auto convert = std::make_shared<std::function<Value(const nlohmann::ordered_json&)>>();
    *convert = [this, convert](const nlohmann::ordered_json& j) -> Value {
        switch (j.type()) {
            case nlohmann::ordered_json::value_t::null:
                return Value::null();
            case nlohmann::ordered_json::value_t::boolean:
                return Value(j.get<bool>());
            case nlohmann::ordered_json::value_t::number_integer:
                return Value(static_cast<double>(j.get<int64_t>()));
            case nlohmann::ordered_json::value_t::number_unsigned:
                return Value(static_cast<double>(j.get<uint64_t>()));
            case nlohmann::ordered_json::value_t::number_float:
                return Value(j.get<double>());
            case nlohmann::ordered_json::value_t::string:
                return heap_.str(j.get<std::string>());
            case nlohmann::ordered_json::value_t::array: {
                std::vector<Value> items;
                items.reserve(j.size());
                for (const auto& item : j) items.push_back((*convert)(item));
                return Value(std::static_pointer_cast<Object>(make_array(std::move(items))));
            }
            case nlohmann::ordered_json::value_t::object: {
                ObjectPtr obj = make_object();
                for (auto it = j.begin(); it != j.end(); ++it) {
                    heap_.charge(Heap::kPropertyCost);
                    obj->set_own(PropertyKey(it.key()), (*convert)(it.value()));
                }
                return Value(obj);
            }
            default:
                return Value();
        }
    };

    FunctionPtr parse_fn = native_fn(
        "parse",
        [this, convert](const NativeCallInfo& info) -> Value {
            std::string text = to_string_value(info.arg(0));
            heap_.charge(text.size());
            nlohmann::ordered_json doc =
                nlohmann::ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
            if (doc.is_discarded()) {
                throw_error("SyntaxError", "Unexpected token in JSON");
            }
            Value result = (*convert)(doc);
            Value reviver = info.arg(1);
            if (!is_callable(reviver)) return result;
            std::function<Value(const Value&, const std::string&, const Value&)> walk =
                [&](const Value& holder, const std::string& key, const Value& val) -> Value {
                Value v = val;
                if (v.is_object()) {
                    if (ArrayObject* arr = as_array(v)) {
                        for (size_t i = 0; i < arr->elements.size(); i++) {
                            Value nv = walk(v, std::to_string(i), arr->elements[i]);
                            arr->elements[i] = nv;
                        }
                    } else {
                        for (const std::string& k : v.as_object()->own_string_keys(true)) {
                            PropertySlot* slot = v.as_object()->find_own(PropertyKey(k));
                            if (slot == nullptr || slot->is_accessor) continue;
                            Value nv = walk(v, k, slot->value);
                            if (nv.is_undefined()) {
                                v.as_object()->delete_own(PropertyKey(k));
                            } else {
                                slot = v.as_object()->find_own(PropertyKey(k));
                                if (slot != nullptr) slot->value = nv;
                            }
                        }
                    }
                }
                return call_value(reviver, holder, {heap_.str(key), v}, current_loc_);
            };
            ObjectPtr root = make_object();
            heap_.charge(Heap::kPropertyCost);
            root->set_own(PropertyKey(""), result);
            return walk(Value(root), "", result);
        },
        2, "JSON.parse");
    detail::def_slot(heap_, json, PropertyKey("parse"),
                     Value(std::static_pointer_cast<Object>(parse_fn)));

    FunctionPtr stringify_fn = native_fn(
        "stringify",
        [this](const NativeCallInfo& info) -> Value {
            Value replacer = info.arg(1);
            std::vector<std::string> allow_list;
            bool has_allow_list = false;
            if (ArrayObject* arr = as_array(replacer)) {
                has_allow_list = true;
                for (const Value& v : arr->elements) {
                    if (v.is_string() || v.is_number()) allow_list.push_back(to_string_value(v));
                }
            }
            bool replacer_fn = is_callable(replacer);

            std::string gap;
            Value space = info.arg(2);
            if (space.is_number()) {
                int n = static_cast<int>(std::min(10.0, std::max(0.0, space.as_number())));
                gap.assign(static_cast<size_t>(n), ' ');
            } else if (space.is_string()) {
                gap = space.as_string().substr(0, 10);
            }

            std::vector<const Object*> stack;
            std::function<bool(const std::string&, Value, const std::string&, std::string&)>
                serialize = [&](const std::string& key, Value v, const std::string& indent,
                                std::string& out) -> bool {
                limits_.tick();
                if (v.is_object()) {
                    Value to_json =
                        get_property(v, PropertyKey("toJSON"), current_loc_, true);
                    if (is_callable(to_json) && as_mock(to_json) == nullptr) {
                        v = call_value(to_json, v, {heap_.str(key)}, current_loc_);
                    }
                }
                if (replacer_fn) {
                    v = call_value(replacer, Value(), {heap_.str(key), v}, current_loc_);
                }
                if (BoxedObject* box = as_boxed(v)) v = box->primitive;
                if (v.is_null()) {
                    out += "null";
                    return true;
                }
                if (v.is_bool()) {
                    out += v.as_bool() ? "true" : "false";
                    return true;
                }
                if (v.is_number()) {
                    double d = v.as_number();
                    out += std::isfinite(d) ? js_number_to_string(d) : "null";
                    return true;
                }
                if (v.is_string()) {
                    out += detail::json_quote(v.as_string());
                    return true;
                }
                if (!v.is_object()) return false;  // undefined, symbol
                if (is_callable(v) && as_mock(v) == nullptr) return false;
                const Object* raw = v.as_object().get();
                for (const Object* seen : stack) {
                    if (seen == raw) {
                        throw_error("TypeError", "Converting circular structure to JSON");
                    }
                }
                stack.push_back(raw);
                std::string inner_indent = indent + gap;
                std::string sep_open = gap.empty() ? "" : "\n" + inner_indent;
                std::string sep_item = gap.empty() ? "," : ",\n" + inner_indent;
                std::string sep_close = gap.empty() ? "" : "\n" + indent;
                if (ArrayObject* arr = as_array(v)) {
                    out += "[";
                    for (size_t i = 0; i < arr->elements.size(); i++) {
                        out += i == 0 ? sep_open : sep_item;
                        std::string piece;
                        if (serialize(std::to_string(i), arr->elements[i], inner_indent, piece)) {
                            out += piece;
                        } else {
                            out += "null";
                        }
                    }
                    if (!arr->elements.empty()) out += sep_close;
                    out += "]";
                } else {
                    out += "{";
                    bool first = true;
                    std::vector<std::string> keys = v.as_object()->own_string_keys(true);
                    if (has_allow_list) {
                        std::vector<std::string> kept;
                        for (const std::string& want : allow_list) {
                            for (const std::string& k : keys) {
                                if (k == want) {
                                    kept.push_back(k);
                                    break;
                                }
                            }
                        }
                        keys = std::move(kept);
                    }
                    for (const std::string& k : keys) {
                        Value pv = get_property(v, PropertyKey(k), current_loc_, true);
                        std::string piece;
                        if (!serialize(k, pv, inner_indent, piece)) continue;
                        out += first ? sep_open : sep_item;
                        first = false;
                        out += detail::json_quote(k);
                        out += gap.empty() ? ":" : ": ";
                        out += piece;
                    }
                    if (!first) out += sep_close;
                    out += "}";
                }
                stack.pop_back();
                heap_.charge(out.size());
                return true;
            };
            std::string out;
            if (!serialize("", info.arg(0), "", out)) return Value();
            return heap_.str(std::move(out));
        },
        3, "JSON.stringify");
    detail::def_slot(heap_, json, PropertyKey("stringify"),
                     Value(std::static_pointer_cast<Object>(stringify_fn)));
}

// ---------------------------------------------------------------------------
// RegExp
// ---------------------------------------------------------------------------

inline std::shared_ptr<RegExpObject> Interpreter::make_regexp(const std::string& pattern,
                                                              const std::string& flags) {
    std::string seen;
    for (char f : flags) {
        if (std::string("dgimsuvy").find(f) == std::string::npos ||
            seen.find(f) != std::string::npos) {
            throw_error("SyntaxError",
                        "Invalid regular expression flags '" + flags + "'");
        }
        seen += f;
    }
    auto re = heap_.make<RegExpObject>();
    re->set_prototype(regexp_proto_);
    re->pattern = pattern;
    re->flags = flags;
    detail::def_slot(heap_, std::static_pointer_cast<Object>(re), PropertyKey("lastIndex"),
                     Value(0.0), false, true);
    return re;
}

inline void Interpreter::setup_regexp_builtin() {
    FunctionPtr ctor = native_fn(
        "RegExp",
        [this](const NativeCallInfo& info) -> Value {
            std::string pattern;
            std::string flags;
            Value p = info.arg(0);
            if (RegExpObject* src = as_regexp(p)) {
                pattern = src->pattern;
                flags = src->flags;
            } else if (!p.is_undefined()) {
                pattern = to_string_value(p);
            }
            if (!info.arg(1).is_undefined()) flags = to_string_value(info.arg(1));
            return Value(std::static_pointer_cast<Object>(make_regexp(pattern, flags)));
        },
        2, "RegExp");
    ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
    detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(regexp_proto_), false,
                     false);
    detail::def_slot(heap_, regexp_proto_, PropertyKey("constructor"), Value(ctor_obj));
    detail::def_slot(heap_, global_, PropertyKey("RegExp"), Value(ctor_obj));

    auto this_regexp = [this](const NativeCallInfo& info) -> RegExpObject* {
        RegExpObject* re = as_regexp(info.this_value);
        if (re == nullptr) {
            throw_error("TypeError", "Receiver is not a RegExp");
        }
        return re;
    };
    auto flag_getter = [&](const char* name, char flag) {
        add_getter(regexp_proto_, name, [this_regexp, flag](const NativeCallInfo& info) -> Value {
            return Value(this_regexp(info)->flags.find(flag) != std::string::npos);
        });
    };
    flag_getter("global", 'g');
    flag_getter("ignoreCase", 'i');
    flag_getter("multiline", 'm');
    flag_getter("dotAll", 's');
    flag_getter("sticky", 'y');
    flag_getter("unicode", 'u');
    add_getter(regexp_proto_, "source", [this, this_regexp](const NativeCallInfo& info) -> Value {
        const std::string& p = this_regexp(info)->pattern;
        return heap_.str(p.empty() ? "(?:)" : p);
    });
    add_getter(regexp_proto_, "flags", [this, this_regexp](const NativeCallInfo& info) -> Value {
        return heap_.str(this_regexp(info)->flags);
    });

    // exec and test share the lastIndex state machine; offsets are byte
    // positions into the UTF-8 subject.
    auto run_exec = [this, this_regexp](const NativeCallInfo& info) -> Value {
        RegExpObject* re_obj = this_regexp(info);
        std::string subject = to_string_value(info.arg(0));
        detail::JsRegex re(re_obj->pattern, re_obj->flags);
        bool tracks_last = re.global() || re.sticky();
        size_t from = 0;
        ObjectPtr self = info.this_value.as_object();
        if (tracks_last) {
            PropertySlot* li = self->find_own(PropertyKey("lastIndex"));
            double d = li != nullptr && li->value.is_number() ? li->value.as_number() : 0;
            if (d < 0 || d > static_cast<double>(subject.size())) {
                if (li != nullptr) li->value = Value(0.0);
                return Value::null();
            }
            from = static_cast<size_t>(d);
        }
        std::smatch m;
        if (!re.search(subject, from, m)) {
            if (tracks_last) {
                PropertySlot* li = self->find_own(PropertyKey("lastIndex"));
                if (li != nullptr) li->value = Value(0.0);
            }
            return Value::null();
        }
        size_t at = from + static_cast<size_t>(m.position(0));
        if (tracks_last) {
            PropertySlot* li = self->find_own(PropertyKey("lastIndex"));
            size_t advance = at + m.str(0).size();
            if (advance == from) advance++;  // empty match: always make progress
            if (li != nullptr) li->value = Value(static_cast<double>(advance));
        }
        return build_match_result(m, subject, from);
    };
    add_method(regexp_proto_, "exec", run_exec, 1);
    add_method(regexp_proto_, "test", [run_exec](const NativeCallInfo& info) -> Value {
        return Value(!run_exec(info).is_null());
    }, 1);
    add_method(regexp_proto_, "toString", [this, this_regexp](const NativeCallInfo& info) -> Value {
        RegExpObject* re = this_regexp(info);
        std::string p = re->pattern.empty() ? "(?:)" : re->pattern;
        return heap_.str("/" + p + "/" + re->flags);
    });
}

// ---------------------------------------------------------------------------
// Date
// ---------------------------------------------------------------------------

inline void Interpreter::setup_date_builtin() {
    auto make_date = [this](double ms) -> Value {
        auto d = heap_.make<DateObject>();
        d->set_prototype(date_proto_);
        d->epoch_ms = ms;
        return Value(std::static_pointer_cast<Object>(d));
    };
    auto ms_from_ctor_args = [this](const std::vector<Value>& args) -> double {
        if (args.empty()) return detail::kFixedNowMs;
        if (args.size() == 1) {
            const Value& a = args[0];
            if (DateObject* other = as_date(a)) return other->epoch_ms;
            if (a.is_string()) return detail::parse_date_string(a.as_string());
            double d = to_number(a);
            if (std::isnan(d) || std::fabs(d) > 8.64e15) {
                return std::numeric_limits<double>::quiet_NaN();
            }
            return std::trunc(d);
        }
        detail::DateParts p;
        auto num = [&](size_t i, double fallback) -> double {
            if (i >= args.size() || args[i].is_undefined()) return fallback;
            return to_number(args[i]);
        };
        double year = num(0, 1970);
        double month = num(1, 0);
        double day = num(2, 1);
        double hour = num(3, 0), minute = num(4, 0), second = num(5, 0), milli = num(6, 0);
        if (std::isnan(year) || std::isnan(month) || std::isnan(day) || std::isnan(hour) ||
            std::isnan(minute) || std::isnan(second) || std::isnan(milli)) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        if (year >= 0 && year <= 99) year += 1900;
        // Out-of-range months and days roll over, matching calendar arithmetic.
        int64_t mo = static_cast<int64_t>(month);
        int64_t y = static_cast<int64_t>(year) + detail::floor_div(mo, 12);
        int64_t m_idx = ((mo % 12) + 12) % 12;
        p.year = y;
        p.month = static_cast<unsigned>(m_idx + 1);
        p.day = 1;
        double base = detail::ms_from_parts(p);
        return base + (day - 1) * 86'400'000.0 + hour * 3'600'000.0 + minute * 60'000.0 +
               second * 1000.0 + milli;
    };

    FunctionPtr ctor = native_fn(
        "Date",
        [this, make_date, ms_from_ctor_args](const NativeCallInfo& info) -> Value {
            if (info.new_target.is_undefined()) {
                return heap_.str(detail::readable_date_string(detail::kFixedNowMs));
            }
            return make_date(ms_from_ctor_args(info.args));
        },
        7, "Date");
    ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
    detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(date_proto_), false, false);
    detail::def_slot(heap_, date_proto_, PropertyKey("constructor"), Value(ctor_obj));
    detail::def_slot(heap_, global_, PropertyKey("Date"), Value(ctor_obj));

    auto date_static = [&](const std::string& name, NativeFn fn, size_t arity) {
        FunctionPtr f = native_fn(name, std::move(fn), arity, "Date." + name);
        detail::def_slot(heap_, ctor_obj, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
    };
    date_static(
        "now", [](const NativeCallInfo&) -> Value { return Value(detail::kFixedNowMs); }, 0);
    date_static(
        "parse",
        [this](const NativeCallInfo& info) -> Value {
            return Value(detail::parse_date_string(to_string_value(info.arg(0))));
        },
        1);
    date_static(
        "UTC",
        [ms_from_ctor_args](const NativeCallInfo& info) -> Value {
            if (info.args.empty()) return Value(std::numeric_limits<double>::quiet_NaN());
            std::vector<Value> padded = info.args;
            if (padded.size() == 1) padded.push_back(Value(0.0));
            return Value(ms_from_ctor_args(padded));
        },
        7);

    auto this_date = [this](const NativeCallInfo& info) -> DateObject* {
        DateObject* d = as_date(info.this_value);
        if (d == nullptr) throw_error("TypeError", "Receiver is not a Date");
        return d;
    };
    auto part_method = [&](const char* name,
                           const std::function<double(const detail::DateParts&)>& pick) {
        // Registered under both the plain and the UTC name: this clock is UTC.
        NativeFn fn = [this_date, pick](const NativeCallInfo& info) -> Value {
            detail::DateParts p;
            if (!detail::date_parts_of(this_date(info)->epoch_ms, p)) {
                return Value(std::numeric_limits<double>::quiet_NaN());
            }
            return Value(pick(p));
        };
        add_method(date_proto_, name, fn);
        add_method(date_proto_, std::string("getUTC") + (name + 3), fn);
    };
    part_method("getFullYear", [](const detail::DateParts& p) { return static_cast<double>(p.year); });
    part_method("getMonth", [](const detail::DateParts& p) { return static_cast<double>(p.month - 1); });
    part_method("getDate", [](const detail::DateParts& p) { return static_cast<double>(p.day); });
    part_method("getDay", [](const detail::DateParts& p) { return static_cast<double>(p.weekday); });
    part_method("getHours", [](const detail::DateParts& p) { return static_cast<double>(p.hour); });
    part_method("getMinutes", [](const detail::DateParts& p) { return static_cast<double>(p.minute); });
    part_method("getSeconds", [](const detail::DateParts& p) { return static_cast<double>(p.second); });
    part_method("getMilliseconds",
                [](const detail::DateParts& p) { return static_cast<double>(p.milli); });

    add_method(date_proto_, "getTime", [this_date](const NativeCallInfo& info) -> Value {
        return Value(this_date(info)->epoch_ms);
    });
    add_method(date_proto_, "valueOf", [this_date](const NativeCallInfo& info) -> Value {
        return Value(this_date(info)->epoch_ms);
    });
    add_method(date_proto_, "getTimezoneOffset", [](const NativeCallInfo&) -> Value {
        return Value(0.0);
    });
    add_method(date_proto_, "setTime", [this, this_date](const NativeCallInfo& info) -> Value {
        double ms = to_number(info.arg(0));
        this_date(info)->epoch_ms = std::isnan(ms) ? ms : std::trunc(ms);
        return Value(this_date(info)->epoch_ms);
    }, 1);

    auto set_method = [&](const char* name, int first_slot) {
        // Slots: 0 year, 1 month, 2 day, 3 hour, 4 minute, 5 second, 6 milli.
        NativeFn fn = [this, this_date, first_slot](const NativeCallInfo& info) -> Value {
            DateObject* d = this_date(info);
            detail::DateParts p;
            if (!detail::date_parts_of(d->epoch_ms, p)) {
                // Setting a component of an invalid date keeps it invalid
                // unless the year itself is being set.
                if (first_slot != 0) return Value(d->epoch_ms);
                p = detail::DateParts{};
            }
            double slots[7] = {static_cast<double>(p.year), static_cast<double>(p.month - 1),
                               static_cast<double>(p.day), static_cast<double>(p.hour),
                               static_cast<double>(p.minute), static_cast<double>(p.second),
                               static_cast<double>(p.milli)};
            for (size_t i = 0; i < info.args.size() && first_slot + i < 7; i++) {
                slots[first_slot + i] = to_number(info.args[i]);
            }
            for (double s : slots) {
                if (std::isnan(s)) {
                    d->epoch_ms = std::numeric_limits<double>::quiet_NaN();
                    return Value(d->epoch_ms);
                }
            }
            int64_t mo = static_cast<int64_t>(slots[1]);
            detail::DateParts np;
            np.year = static_cast<int64_t>(slots[0]) + detail::floor_div(mo, 12);
            np.month = static_cast<unsigned>(((mo % 12) + 12) % 12 + 1);
            np.day = 1;
            double base = detail::ms_from_parts(np);
            d->epoch_ms = base + (slots[2] - 1) * 86'400'000.0 + slots[3] * 3'600'000.0 +
                          slots[4] * 60'000.0 + slots[5] * 1000.0 + slots[6];
            return Value(d->epoch_ms);
        };
        add_method(date_proto_, name, fn, 1);
        add_method(date_proto_, std::string("setUTC") + (name + 3), fn, 1);
    };
    set_method("setFullYear", 0);
    set_method("setMonth", 1);
    set_method("setDate", 2);
    set_method("setHours", 3);
    set_method("setMinutes", 4);
    set_method("setSeconds", 5);
    set_method("setMilliseconds", 6);

    add_method(date_proto_, "toISOString", [this, this_date](const NativeCallInfo& info) -> Value {
        double ms = this_date(info)->epoch_ms;
        if (std::isnan(ms)) throw_error("RangeError", "Invalid time value");
        return heap_.str(detail::iso_date_string(ms));
    });
    add_method(date_proto_, "toJSON", [this, this_date](const NativeCallInfo& info) -> Value {
        double ms = this_date(info)->epoch_ms;
        if (std::isnan(ms)) return Value::null();
        return heap_.str(detail::iso_date_string(ms));
    });
    add_method(date_proto_, "toString", [this, this_date](const NativeCallInfo& info) -> Value {
        return heap_.str(detail::readable_date_string(this_date(info)->epoch_ms));
    });
    add_method(date_proto_, "toUTCString", [this, this_date](const NativeCallInfo& info) -> Value {
        return heap_.str(detail::utc_date_string(this_date(info)->epoch_ms));
    });
    add_method(date_proto_, "toGMTString", [this, this_date](const NativeCallInfo& info) -> Value {
        return heap_.str(detail::utc_date_string(this_date(info)->epoch_ms));
    });
    add_method(date_proto_, "toDateString", [this, this_date](const NativeCallInfo& info) -> Value {
        detail::DateParts p;
        if (!detail::date_parts_of(this_date(info)->epoch_ms, p)) {
            return heap_.str("Invalid Date");
        }
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%s %s %02u %04" PRId64,
                      detail::kWeekdayNames[p.weekday], detail::kMonthNames[p.month - 1], p.day,
                      p.year);
        return heap_.str(buf);
    });
    add_method(date_proto_, "toTimeString", [this, this_date](const NativeCallInfo& info) -> Value {
        detail::DateParts p;
        if (!detail::date_parts_of(this_date(info)->epoch_ms, p)) {
            return heap_.str("Invalid Date");
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf),
                      "%02" PRId64 ":%02" PRId64 ":%02" PRId64
                      " GMT+0000 (Coordinated Universal Time)",
                      p.hour, p.minute, p.second);
        return heap_.str(buf);
    });
    for (const char* name : {"toLocaleString", "toLocaleDateString", "toLocaleTimeString"}) {
        add_method(date_proto_, name, [this, this_date](const NativeCallInfo& info) -> Value {
            return heap_.str(detail::iso_date_string(this_date(info)->epoch_ms));
        });
    }
}

// ---------------------------------------------------------------------------
// Promise
// ---------------------------------------------------------------------------

inline void Interpreter::setup_promise_builtin() {
    FunctionPtr ctor = native_fn(
        "Promise",
        [this](const NativeCallInfo& info) -> Value {
            if (info.new_target.is_undefined()) {
                throw_error("TypeError",
                            "Promise constructor cannot be invoked without 'new'");
            }
            Value executor = info.arg(0);
            if (!is_callable(executor)) {
                throw_error("TypeError", "Promise resolver is not a function");
            }
            PromisePtr p = make_promise();
            FunctionPtr resolve = native_fn("resolve", [this, p](const NativeCallInfo& in) -> Value {
                settle_promise(p, in.arg(0), true);
                return Value();
            }, 1);
            FunctionPtr reject = native_fn("reject", [this, p](const NativeCallInfo& in) -> Value {
                settle_promise(p, in.arg(0), false);
                return Value();
            }, 1);
            try {
                call_value(executor, Value(),
                           {Value(std::static_pointer_cast<Object>(resolve)),
                            Value(std::static_pointer_cast<Object>(reject))},
                           current_loc_);
            } catch (GuestThrow& t) {
                settle_promise(p, t.value, false);
            }
            return Value(std::static_pointer_cast<Object>(p));
        },
        1, "Promise");
    ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
    detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(promise_proto_), false,
                     false);
    detail::def_slot(heap_, promise_proto_, PropertyKey("constructor"), Value(ctor_obj));
    detail::def_slot(heap_, global_, PropertyKey("Promise"), Value(ctor_obj));

    auto promise_static = [&](const std::string& name, NativeFn fn, size_t arity) {
        FunctionPtr f = native_fn(name, std::move(fn), arity, "Promise." + name);
        detail::def_slot(heap_, ctor_obj, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
    };
    promise_static(
        "resolve",
        [this](const NativeCallInfo& info) -> Value {
            if (as_promise(info.arg(0)) != nullptr) return info.arg(0);
            PromisePtr p = make_promise();
            settle_promise(p, info.arg(0), true);
            return Value(std::static_pointer_cast<Object>(p));
        },
        1);
    promise_static(
        "reject",
        [this](const NativeCallInfo& info) -> Value {
            PromisePtr p = make_promise();
            settle_promise(p, info.arg(0), false);
            return Value(std::static_pointer_cast<Object>(p));
        },
        1);

    struct GatherState {
        std::vector<Value> results;
        size_t remaining = 0;
        PromisePtr out;
    };
    auto collect_items = [this](const NativeCallInfo& info) -> std::vector<Value> {
        std::vector<Value> items;
        for_of_each(info.arg(0), current_loc_, [&](Value v) {
            items.push_back(std::move(v));
            return true;
        });
        return items;
    };
    promise_static(
        "all",
        [this, collect_items](const NativeCallInfo& info) -> Value {
            std::vector<Value> items = collect_items(info);
            auto state = std::make_shared<GatherState>();
            state->results.resize(items.size());
            state->remaining = items.size();
            state->out = make_promise();
            auto finish_if_done = [this, state]() {
                if (state->remaining == 0) {
                    settle_promise(state->out,
                                   Value(std::static_pointer_cast<Object>(
                                       make_array(state->results))),
                                   true);
                }
            };
            for (size_t i = 0; i < items.size(); i++) {
                PromiseObject* ip = as_promise(items[i]);
                if (ip == nullptr) {
                    state->results[i] = items[i];
                    state->remaining--;
                    continue;
                }
                PromisePtr strong = std::static_pointer_cast<PromiseObject>(
                    items[i].as_object());
                FunctionPtr on_f = native_fn(
                    "", [this, state, i, finish_if_done](const NativeCallInfo& in) -> Value {
                        state->results[i] = in.arg(0);
                        state->remaining--;
                        finish_if_done();
                        return Value();
                    }, 1);
                FunctionPtr on_r = native_fn("", [this, state](const NativeCallInfo& in) -> Value {
                    settle_promise(state->out, in.arg(0), false);
                    return Value();
                }, 1);
                promise_then(strong, std::static_pointer_cast<Object>(on_f),
                             std::static_pointer_cast<Object>(on_r));
            }
            finish_if_done();
            return Value(std::static_pointer_cast<Object>(state->out));
        },
        1);
    promise_static(
        "allSettled",
        [this, collect_items](const NativeCallInfo& info) -> Value {
            std::vector<Value> items = collect_items(info);
            auto state = std::make_shared<GatherState>();
            state->results.resize(items.size());
            state->remaining = items.size();
            state->out = make_promise();
            auto outcome = [this](bool fulfilled, const Value& v) -> Value {
                ObjectPtr o = make_object();
                heap_.charge(2 * Heap::kPropertyCost);
                o->set_own(PropertyKey("status"),
                           Value(fulfilled ? "fulfilled" : "rejected"));
                o->set_own(PropertyKey(fulfilled ? "value" : "reason"), v);
                return Value(o);
            };
            auto finish_if_done = [this, state]() {
                if (state->remaining == 0) {
                    settle_promise(state->out,
                                   Value(std::static_pointer_cast<Object>(
                                       make_array(state->results))),
                                   true);
                }
            };
            for (size_t i = 0; i < items.size(); i++) {
                if (as_promise(items[i]) == nullptr) {
                    state->results[i] = outcome(true, items[i]);
                    state->remaining--;
                    continue;
                }
                PromisePtr strong =
                    std::static_pointer_cast<PromiseObject>(items[i].as_object());
                FunctionPtr on_f = native_fn(
                    "", [state, i, outcome, finish_if_done](const NativeCallInfo& in) -> Value {
                        state->results[i] = outcome(true, in.arg(0));
                        state->remaining--;
                        finish_if_done();
                        return Value();
                    }, 1);
                FunctionPtr on_r = native_fn(
                    "", [state, i, outcome, finish_if_done](const NativeCallInfo& in) -> Value {
                        state->results[i] = outcome(false, in.arg(0));
                        state->remaining--;
                        finish_if_done();
                        return Value();
                    }, 1);
                promise_then(strong, std::static_pointer_cast<Object>(on_f),
                             std::static_pointer_cast<Object>(on_r));
            }
            finish_if_done();
            return Value(std::static_pointer_cast<Object>(state->out));
        },
        1);
    promise_static(
        "race",
        [this, collect_items](const NativeCallInfo& info) -> Value {
            std::vector<Value> items = collect_items(info);
            PromisePtr out = make_promise();
            for (const Value& item : items) {
                if (as_promise(item) == nullptr) {
                    settle_promise(out, item, true);
                    break;
                }
                PromisePtr strong = std::static_pointer_cast<PromiseObject>(item.as_object());
                FunctionPtr on_f = native_fn("", [this, out](const NativeCallInfo& in) -> Value {
                    settle_promise(out, in.arg(0), true);
                    return Value();
                }, 1);
                FunctionPtr on_r = native_fn("", [this, out](const NativeCallInfo& in) -> Value {
                    settle_promise(out, in.arg(0), false);
                    return Value();
                }, 1);
                promise_then(strong, std::static_pointer_cast<Object>(on_f),
                             std::static_pointer_cast<Object>(on_r));
            }
            return Value(std::static_pointer_cast<Object>(out));
        },
        1);
    promise_static(
        "any",
        [this, collect_items](const NativeCallInfo& info) -> Value {
            std::vector<Value> items = collect_items(info);
            auto state = std::make_shared<GatherState>();
            state->remaining = items.size();
            state->out = make_promise();
            if (items.empty()) {
                settle_promise(state->out,
                               Value(make_error("Error", "All promises were rejected")), false);
            }
            for (const Value& item : items) {
                if (as_promise(item) == nullptr) {
                    settle_promise(state->out, item, true);
                    continue;
                }
                PromisePtr strong = std::static_pointer_cast<PromiseObject>(item.as_object());
                FunctionPtr on_f = native_fn("", [this, state](const NativeCallInfo& in) -> Value {
                    settle_promise(state->out, in.arg(0), true);
                    return Value();
                }, 1);
                FunctionPtr on_r = native_fn("", [this, state](const NativeCallInfo& in) -> Value {
                    state->remaining--;
                    if (state->remaining == 0) {
                        settle_promise(state->out,
                                       Value(make_error("Error", "All promises were rejected")),
                                       false);
                    }
                    return Value();
                }, 1);
                promise_then(strong, std::static_pointer_cast<Object>(on_f),
                             std::static_pointer_cast<Object>(on_r));
            }
            return Value(std::static_pointer_cast<Object>(state->out));
        },
        1);

    auto this_promise = [this](const NativeCallInfo& info) -> PromisePtr {
        if (as_promise(info.this_value) == nullptr) {
            throw_error("TypeError", "Receiver is not a Promise");
        }
        return std::static_pointer_cast<PromiseObject>(info.this_value.as_object());
    };
    add_method(promise_proto_, "then", [this, this_promise](const NativeCallInfo& info) -> Value {
        PromisePtr p = this_promise(info);
        ObjectPtr on_f = info.arg(0).is_object() ? info.arg(0).as_object() : nullptr;
        ObjectPtr on_r = info.arg(1).is_object() ? info.arg(1).as_object() : nullptr;
        return promise_then(p, on_f, on_r);
    }, 2);
    add_method(promise_proto_, "catch", [this, this_promise](const NativeCallInfo& info) -> Value {
        PromisePtr p = this_promise(info);
        ObjectPtr on_r = info.arg(0).is_object() ? info.arg(0).as_object() : nullptr;
        return promise_then(p, nullptr, on_r);
    }, 1);
    add_method(promise_proto_, "finally", [this, this_promise](const NativeCallInfo& info) -> Value {
        PromisePtr p = this_promise(info);
        Value cb = info.arg(0);
        FunctionPtr on_f = native_fn("", [this, cb](const NativeCallInfo& in) -> Value {
            if (is_callable(cb)) call_value(cb, Value(), {}, current_loc_);
            return in.arg(0);
        }, 1);
        FunctionPtr on_r = native_fn("", [this, cb](const NativeCallInfo& in) -> Value {
            if (is_callable(cb)) call_value(cb, Value(), {}, current_loc_);
            throw GuestThrow{in.arg(0)};
        }, 1);
        return promise_then(p, std::static_pointer_cast<Object>(on_f),
                            std::static_pointer_cast<Object>(on_r));
    }, 1);
}

// ---------------------------------------------------------------------------
// Freestanding globals
// ---------------------------------------------------------------------------

inline void Interpreter::setup_misc_globals() {
    auto add_global_fn = [&](const std::string& name, NativeFn fn, size_t arity) -> FunctionPtr {
        FunctionPtr f = native_fn(name, std::move(fn), arity, name);
        detail::def_slot(heap_, global_, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
        return f;
    };

    add_global_fn(
        "parseInt",
        [this](const NativeCallInfo& info) -> Value {
            return Value(detail::js_parse_int(
                to_string_value(info.arg(0)),
                info.arg(1).is_undefined() ? 0 : to_number(info.arg(1))));
        },
        2);
    add_global_fn(
        "parseFloat",
        [this](const NativeCallInfo& info) -> Value {
            return Value(detail::js_parse_float(to_string_value(info.arg(0))));
        },
        1);
    add_global_fn(
        "isNaN",
        [this](const NativeCallInfo& info) -> Value {
            return Value(std::isnan(to_number(info.arg(0))));
        },
        1);
    add_global_fn(
        "isFinite",
        [this](const NativeCallInfo& info) -> Value {
            return Value(std::isfinite(to_number(info.arg(0))));
        },
        1);

    auto encode = [this](const std::string& s, bool keep_reserved) -> Value {
        std::string out;
        char buf[8];
        for (unsigned char c : s) {
            if (detail::uri_unreserved(static_cast<char>(c)) ||
                (keep_reserved && detail::uri_reserved(static_cast<char>(c)))) {
                out += static_cast<char>(c);
            } else {
                std::snprintf(buf, sizeof(buf), "%%%02X", c);
                out += buf;
            }
        }
        return heap_.str(std::move(out));
    };
    auto decode = [this](const std::string& s) -> Value {
        std::string out;
        for (size_t i = 0; i < s.size(); i++) {
            if (s[i] != '%') {
                out += s[i];
                continue;
            }
            if (i + 2 >= s.size()) throw_error("URIError", "URI malformed");
            int hi = detail::hex_digit(s[i + 1]);
            int lo = detail::hex_digit(s[i + 2]);
            if (hi < 0 || lo < 0) throw_error("URIError", "URI malformed");
            out += static_cast<char>((hi << 4) | lo);
            i += 2;
        }
        return heap_.str(std::move(out));
    };
    add_global_fn(
        "encodeURIComponent",
        [this, encode](const NativeCallInfo& info) -> Value {
            return encode(to_string_value(info.arg(0)), false);
        },
        1);
    add_global_fn(
        "encodeURI",
        [this, encode](const NativeCallInfo& info) -> Value {
            return encode(to_string_value(info.arg(0)), true);
        },
        1);
    add_global_fn(
        "decodeURIComponent",
        [this, decode](const NativeCallInfo& info) -> Value {
            return decode(to_string_value(info.arg(0)));
        },
        1);
    add_global_fn(
        "decodeURI",
        [this, decode](const NativeCallInfo& info) -> Value {
            return decode(to_string_value(info.arg(0)));
        },
        1);
    add_global_fn(
        "escape",
        [this](const NativeCallInfo& info) -> Value {
            std::u16string u = detail::utf8_to_utf16(to_string_value(info.arg(0)));
            std::string out;
            char buf[8];
            for (char16_t c : u) {
                if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    c == '@' || c == '*' || c == '_' || c == '+' || c == '-' || c == '.' ||
                    c == '/') {
                    out += static_cast<char>(c);
                } else if (c < 256) {
                    std::snprintf(buf, sizeof(buf), "%%%02X", static_cast<unsigned>(c));
                    out += buf;
                } else {
                    std::snprintf(buf, sizeof(buf), "%%u%04X", static_cast<unsigned>(c));
                    out += buf;
                }
            }
            return heap_.str(std::move(out));
        },
        1);
    add_global_fn(
        "unescape",
        [this](const NativeCallInfo& info) -> Value {
            std::string s = to_string_value(info.arg(0));
            std::u16string out;
            for (size_t i = 0; i < s.size(); i++) {
                if (s[i] == '%' && i + 5 < s.size() && s[i + 1] == 'u') {
                    int a = detail::hex_digit(s[i + 2]), b = detail::hex_digit(s[i + 3]);
                    int c = detail::hex_digit(s[i + 4]), d = detail::hex_digit(s[i + 5]);
                    if (a >= 0 && b >= 0 && c >= 0 && d >= 0) {
                        out += static_cast<char16_t>((a << 12) | (b << 8) | (c << 4) | d);
                        i += 5;
                        continue;
                    }
                }
                if (s[i] == '%' && i + 2 < s.size()) {
                    int hi = detail::hex_digit(s[i + 1]), lo = detail::hex_digit(s[i + 2]);
                    if (hi >= 0 && lo >= 0) {
                        out += static_cast<char16_t>((hi << 4) | lo);
                        i += 2;
                        continue;
                    }
                }
                out += static_cast<char16_t>(static_cast<unsigned char>(s[i]));
            }
            return heap_.str(detail::utf16_to_utf8(out));
        },
        1);

    eval_fn_ = add_global_fn(
        "eval",
        [this](const NativeCallInfo& info) -> Value {
            Value code = info.arg(0);
            if (!code.is_string()) return code;
            return guest_eval(code.as_string(), global_env_, /*direct=*/false);
        },
        1);

    detail::def_slot(heap_, global_, PropertyKey("NaN"),
                     Value(std::numeric_limits<double>::quiet_NaN()), false, false);
    detail::def_slot(heap_, global_, PropertyKey("Infinity"),
                     Value(std::numeric_limits<double>::infinity()), false, false);
    detail::def_slot(heap_, global_, PropertyKey("undefined"), Value(), false, false);
}

}  // namespace mirage

#endif
