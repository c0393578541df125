#ifndef MIRAGE_DETAIL_INTERP_OPS_HPP
#define MIRAGE_DETAIL_INTERP_OPS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace mirage {
namespace detail {

// ---------------------------------------------------------------------------
// UTF-16 view over UTF-8/WTF-8 storage. JS string semantics (length, indexing,
// slicing) are defined in UTF-16 code units; storage stays UTF-8 with WTF-8
// for lone surrogates.
// ---------------------------------------------------------------------------

inline bool ascii_only(const std::string& s) {
    for (unsigned char c : s)
        if (c >= 0x80) return false;
    return true;
}

inline std::u16string utf8_to_utf16(const std::string& s) {
    std::u16string out;
    out.reserve(s.size());
    size_t i = 0;
    const size_t n = s.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        uint32_t cp = 0xFFFD;
        size_t len = 1;
        if (c < 0x80) {
            cp = c;
        } else if ((c >> 5) == 0x6 && i + 1 < n) {
            cp = ((c & 0x1F) << 6) | (static_cast<unsigned char>(s[i + 1]) & 0x3F);
            len = 2;
        } else if ((c >> 4) == 0xE && i + 2 < n) {
            cp = ((c & 0x0F) << 12) | ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
                 (static_cast<unsigned char>(s[i + 2]) & 0x3F);
            len = 3;
        } else if ((c >> 3) == 0x1E && i + 3 < n) {
            cp = ((c & 0x07) << 18) | ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
                 ((static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
                 (static_cast<unsigned char>(s[i + 3]) & 0x3F);
            len = 4;
        }
        i += len;
        if (cp >= 0x10000 && cp <= 0x10FFFF) {
            cp -= 0x10000;
            out.push_back(static_cast<char16_t>(0xD800 + (cp >> 10)));
            out.push_back(static_cast<char16_t>(0xDC00 + (cp & 0x3FF)));
        } else {
            out.push_back(static_cast<char16_t>(cp));
        }
    }
    return out;
}

inline void append_cp_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string utf16_to_utf8(const std::u16string& s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        char16_t u = s[i];
        if (u >= 0xD800 && u <= 0xDBFF && i + 1 < s.size() && s[i + 1] >= 0xDC00 &&
            s[i + 1] <= 0xDFFF) {
            uint32_t cp = 0x10000 + ((static_cast<uint32_t>(u) - 0xD800) << 10) +
                          (static_cast<uint32_t>(s[i + 1]) - 0xDC00);
            append_cp_utf8(out, cp);
            i += 2;
        } else {
            // Lone surrogates are stored in WTF-8 form.
            append_cp_utf8(out, u);
            i += 1;
        }
    }
    return out;
}

inline size_t utf16_length(const std::string& s) {
    if (ascii_only(s)) return s.size();
    return utf8_to_utf16(s).size();
}

// Clamp-and-normalize a relative index argument per the usual String/Array rules.
inline size_t relative_index(double idx, size_t len) {
    if (std::isnan(idx)) return 0;
    if (idx < 0) {
        double r = static_cast<double>(len) + std::trunc(idx);
        return r < 0 ? 0 : static_cast<size_t>(r);
    }
    double t = std::trunc(idx);
    if (t >= static_cast<double>(len)) return len;
    return static_cast<size_t>(t);
}

inline int64_t to_integer_clamped(double d, int64_t lo, int64_t hi) {
    if (std::isnan(d)) return 0;
    double t = std::trunc(d);
    if (t < static_cast<double>(lo)) return lo;
    if (t > static_cast<double>(hi)) return hi;
    return static_cast<int64_t>(t);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

inline Interpreter::Interpreter(const SandboxConfig& config, const HookSet& hooks,
                                ModuleResolver resolver)
    : config_(config),
      hooks_(hooks),
      resolver_(std::move(resolver)),
      heap_(config.max_heap_bytes()),
      log_(heap_),
      origin_(config.origin_url()) {
    setup_globals();
    realize_hooks();
}

inline void Interpreter::arm_limits() {
    limits_.arm(config_.instruction_budget, std::chrono::milliseconds(config_.timeout_ms));
}

inline SourceLocation Interpreter::loc_of(const Node* n) const {
    SourceLocation loc;
    loc.specifier = current_specifier_;
    if (n != nullptr) {
        loc.line = n->span.line;
        loc.column = n->span.column;
    }
    return loc;
}

inline std::shared_ptr<ArrayObject> Interpreter::make_array(std::vector<Value> elements) {
    auto arr = heap_.make<ArrayObject>();
    arr->set_prototype(array_proto_);
    heap_.charge(elements.size() * Heap::kElementCost);
    arr->elements = std::move(elements);
    return arr;
}

inline ObjectPtr Interpreter::make_object() {
    auto obj = heap_.make<Object>();
    obj->set_prototype(object_proto_);
    return obj;
}

inline JsSymbol Interpreter::make_symbol(const std::string& description) {
    JsSymbol sym;
    sym.id = next_symbol_id_++;
    sym.description = std::make_shared<const std::string>(description);
    return sym;
}

inline FunctionPtr Interpreter::native_fn(const std::string& name, NativeFn fn, size_t arity,
                                          const std::string& event_path) {
    auto f = heap_.make<FunctionObject>();
    f->set_prototype(function_proto_);
    f->native = std::move(fn);
    f->fn_name = name;
    f->param_count = arity;
    f->event_path = event_path;
    return f;
}

inline void Interpreter::add_method(const ObjectPtr& obj, const std::string& name, NativeFn fn,
                                    size_t arity) {
    PropertySlot slot;
    slot.value = Value(std::static_pointer_cast<Object>(native_fn(name, std::move(fn), arity)));
    slot.enumerable = false;
    obj->define_own(PropertyKey(name), std::move(slot));
}

inline Value Interpreter::get_own_data(const ObjectPtr& obj, const PropertyKey& key) const {
    if (!obj) return Value();
    const PropertySlot* slot = obj->find_own(key);
    if (slot == nullptr || slot->is_accessor) return Value();
    return slot->value;
}

inline ObjectPtr Interpreter::make_error(const std::string& kind, const std::string& message) {
    auto err = heap_.make<ErrorObject>();
    auto it = error_protos_.find(kind);
    err->set_prototype(it != error_protos_.end() ? it->second : error_proto_);
    err->set_class_name(kind);
    PropertySlot msg;
    msg.value = heap_.str(message);
    msg.enumerable = false;
    err->define_own(PropertyKey("message"), std::move(msg));
    PropertySlot stack;
    stack.value = heap_.str(kind + ": " + message);
    stack.enumerable = false;
    err->define_own(PropertyKey("stack"), std::move(stack));
    return err;
}

inline void Interpreter::throw_error(const std::string& kind, const std::string& message) {
    throw GuestThrow{Value(std::static_pointer_cast<Object>(make_error(kind, message)))};
}

// ---------------------------------------------------------------------------
// Conversions
// ---------------------------------------------------------------------------

inline bool Interpreter::to_boolean(const Value& v) const {
    if (v.is_undefined() || v.is_null()) return false;
    if (v.is_bool()) return v.as_bool();
    if (v.is_number()) {
        double d = v.as_number();
        return !(d == 0 || std::isnan(d));
    }
    if (v.is_string()) return !v.as_string().empty();
    return true;  // symbols and all objects (mocks included) are truthy
}

inline Value Interpreter::to_primitive(const Value& v, char hint) {
    if (!v.is_object()) return v;
    const ObjectPtr& obj = v.as_object();
    if (as_mock(v) != nullptr) {
        // Mocks coerce to neutral primitives so arithmetic and concatenation
        // keep flowing: "" under a string hint, 1 otherwise.
        if (hint == 's') return heap_.str("");
        return Value(1.0);
    }
    if (obj->kind() == ObjectKind::BoxedPrimitive)
        return std::static_pointer_cast<BoxedObject>(obj)->primitive;
    if (obj->kind() == ObjectKind::Date && hint == 'd') hint = 's';
    const char* order[2];
    if (hint == 's') {
        order[0] = "toString";
        order[1] = "valueOf";
    } else {
        order[0] = "valueOf";
        order[1] = "toString";
    }
    for (const char* name : order) {
        Value fn = get_property(v, PropertyKey(name), SourceLocation{}, /*silent=*/true);
        if (is_callable(fn)) {
            Value r = call_value(fn, v, {}, SourceLocation{});
            if (!r.is_object()) return r;
        }
    }
    throw_error("TypeError", "Cannot convert object to primitive value");
}

inline double Interpreter::to_number(const Value& v) {
    if (v.is_number()) return v.as_number();
    if (v.is_undefined()) return std::nan("");
    if (v.is_null()) return 0;
    if (v.is_bool()) return v.as_bool() ? 1 : 0;
    if (v.is_string()) return js_string_to_number(v.as_string());
    if (v.is_symbol()) throw_error("TypeError", "Cannot convert a Symbol value to a number");
    return to_number(to_primitive(v, 'n'));
}

inline std::string Interpreter::to_string_value(const Value& v) {
    if (v.is_string()) return std::string(v.as_string());
    if (v.is_undefined()) return "undefined";
    if (v.is_null()) return "null";
    if (v.is_bool()) return v.as_bool() ? "true" : "false";
    if (v.is_number()) return js_number_to_string(v.as_number());
    if (v.is_symbol()) throw_error("TypeError", "Cannot convert a Symbol value to a string");
    Value prim = to_primitive(v, 's');
    if (prim.is_object()) throw_error("TypeError", "Cannot convert object to primitive value");
    return to_string_value(prim);
}

inline PropertyKey Interpreter::to_property_key(const Value& v) {
    if (v.is_symbol()) return PropertyKey(v.as_symbol());
    if (v.is_string()) return PropertyKey(std::string(v.as_string()));
    return PropertyKey(to_string_value(v));
}

inline std::string Interpreter::typeof_value(const Value& v, const EnvPtr&) {
    if (v.is_undefined()) return "undefined";
    if (v.is_null()) return "object";
    if (v.is_bool()) return "boolean";
    if (v.is_number()) return "number";
    if (v.is_string()) return "string";
    if (v.is_symbol()) return "symbol";
    if (is_callable(v)) return "function";
    return "object";
}

// ---------------------------------------------------------------------------
// Equality and operators
// ---------------------------------------------------------------------------

inline bool Interpreter::loose_equals(const Value& a, const Value& b) {
    if (a.type_index() == b.type_index()) return a.strict_equals(b);
    const bool a_nullish = a.is_undefined() || a.is_null();
    const bool b_nullish = b.is_undefined() || b.is_null();
    if (a_nullish || b_nullish) return a_nullish && b_nullish;
    if (a.is_number() && b.is_string()) return a.as_number() == js_string_to_number(b.as_string());
    if (a.is_string() && b.is_number()) return js_string_to_number(a.as_string()) == b.as_number();
    if (a.is_bool()) return loose_equals(Value(a.as_bool() ? 1.0 : 0.0), b);
    if (b.is_bool()) return loose_equals(a, Value(b.as_bool() ? 1.0 : 0.0));
    if (a.is_object() && (b.is_number() || b.is_string() || b.is_symbol()))
        return loose_equals(to_primitive(a, 'd'), b);
    if (b.is_object() && (a.is_number() || a.is_string() || a.is_symbol()))
        return loose_equals(a, to_primitive(b, 'd'));
    if (a.is_string() && b.is_string()) return a.as_string() == b.as_string();
    return false;
}

inline Value Interpreter::concat_or_add(const Value& lhs, const Value& rhs) {
    Value lp = lhs;
    Value rp = rhs;
    // Mocks pick their coercion based on the other operand; resolve the
    // non-mock side first so a string partner yields concatenation.
    if (is_mocklike(lhs) && !is_mocklike(rhs)) {
        rp = rhs.is_object() ? to_primitive(rhs, 'd') : rhs;
        lp = to_primitive(lhs, rp.is_string() ? 's' : 'n');
    } else if (is_mocklike(rhs)) {
        lp = lhs.is_object() ? to_primitive(lhs, 'd') : lhs;
        rp = to_primitive(rhs, lp.is_string() ? 's' : 'n');
    } else {
        if (lp.is_object()) lp = to_primitive(lp, 'd');
        if (rp.is_object()) rp = to_primitive(rp, 'd');
    }
    if (lp.is_string() || rp.is_string()) {
        std::string s = to_string_value(lp);
        s += to_string_value(rp);
        return heap_.str(std::move(s));
    }
    return Value(to_number(lp) + to_number(rp));
}

inline Value Interpreter::binary_operate(const std::string& op, const Value& lhs,
                                         const Value& rhs) {
    if (op == "+") return concat_or_add(lhs, rhs);
    if (op == "-") return Value(to_number(lhs) - to_number(rhs));
    if (op == "*") return Value(to_number(lhs) * to_number(rhs));
    if (op == "/") return Value(to_number(lhs) / to_number(rhs));
    if (op == "%") return Value(std::fmod(to_number(lhs), to_number(rhs)));
    if (op == "**") return Value(std::pow(to_number(lhs), to_number(rhs)));
    if (op == "==") return Value(loose_equals(lhs, rhs));
    if (op == "!=") return Value(!loose_equals(lhs, rhs));
    if (op == "===") return Value(lhs.strict_equals(rhs));
    if (op == "!==") return Value(!lhs.strict_equals(rhs));
    if (op == "&") return Value(static_cast<double>(js_to_int32(to_number(lhs)) & js_to_int32(to_number(rhs))));
    if (op == "|") return Value(static_cast<double>(js_to_int32(to_number(lhs)) | js_to_int32(to_number(rhs))));
    if (op == "^") return Value(static_cast<double>(js_to_int32(to_number(lhs)) ^ js_to_int32(to_number(rhs))));
    if (op == "<<")
        return Value(static_cast<double>(js_to_int32(to_number(lhs))
                                         << (js_to_uint32(to_number(rhs)) & 31)));
    if (op == ">>")
        return Value(static_cast<double>(js_to_int32(to_number(lhs)) >>
                                         (js_to_uint32(to_number(rhs)) & 31)));
    if (op == ">>>")
        return Value(static_cast<double>(js_to_uint32(to_number(lhs)) >>
                                         (js_to_uint32(to_number(rhs)) & 31)));
    if (op == "<" || op == ">" || op == "<=" || op == ">=") {
        Value lp = lhs.is_object() ? to_primitive(lhs, 'n') : lhs;
        Value rp = rhs.is_object() ? to_primitive(rhs, 'n') : rhs;
        if (lp.is_string() && rp.is_string()) {
            std::string a(lp.as_string());
            std::string b(rp.as_string());
            int cmp;
            if (detail::ascii_only(a) && detail::ascii_only(b)) {
                cmp = a.compare(b);
            } else {
                std::u16string ua = detail::utf8_to_utf16(a);
                std::u16string ub = detail::utf8_to_utf16(b);
                cmp = ua.compare(ub);
            }
            if (op == "<") return Value(cmp < 0);
            if (op == ">") return Value(cmp > 0);
            if (op == "<=") return Value(cmp <= 0);
            return Value(cmp >= 0);
        }
        double a = to_number(lp);
        double b = to_number(rp);
        if (std::isnan(a) || std::isnan(b)) return Value(false);
        if (op == "<") return Value(a < b);
        if (op == ">") return Value(a > b);
        if (op == "<=") return Value(a <= b);
        return Value(a >= b);
    }
    if (op == "instanceof") {
        if (as_mock(rhs) != nullptr) {
            // A fabricated constructor happily claims every instance; this keeps
            // `x instanceof SomeMockedGlobal` branches alive.
            return Value(true);
        }
        if (as_function(rhs) == nullptr)
            throw_error("TypeError", "Right-hand side of 'instanceof' is not callable");
        if (!lhs.is_object()) return Value(false);
        Value proto_v = get_property(rhs, PropertyKey("prototype"), SourceLocation{}, true);
        if (!proto_v.is_object()) return Value(false);
        ObjectPtr walk = lhs.as_object()->prototype();
        int guard = 0;
        while (walk && guard++ < 1000) {
            if (walk == proto_v.as_object()) return Value(true);
            walk = walk->prototype();
        }
        return Value(false);
    }
    if (op == "in") {
        if (!rhs.is_object())
            throw_error("TypeError", "Cannot use 'in' operator to search in a non-object");
        return Value(has_property(rhs, to_property_key(lhs)));
    }
    throw_error("SyntaxError", "Unsupported binary operator " + op);
}

}  // namespace mirage

#endif
