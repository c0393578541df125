#ifndef MIRAGE_DETAIL_NATIVES_CORE_HPP
#define MIRAGE_DETAIL_NATIVES_CORE_HPP

#include <algorithm>
#include <cmath>

namespace mirage {

namespace detail {

inline void def_slot(Heap& heap, const ObjectPtr& obj, const PropertyKey& key, Value v,
                     bool enumerable = false, bool writable = true) {
    heap.charge(Heap::kPropertyCost);
    PropertySlot slot;
    slot.value = std::move(v);
    slot.enumerable = enumerable;
    slot.writable = writable;
    obj->define_own(key, std::move(slot));
}

/// Own enumerable string keys in spec order; array indices come first.
inline std::vector<std::string> enumerable_own_keys(const Value& v) {
    std::vector<std::string> keys;
    if (v.is_string()) {
        size_t n = utf16_length(v.as_string());
        for (size_t i = 0; i < n; i++) keys.push_back(std::to_string(i));
        return keys;
    }
    if (!v.is_object()) return keys;
    if (ArrayObject* arr = as_array(v)) {
        for (size_t i = 0; i < arr->elements.size(); i++) keys.push_back(std::to_string(i));
    }
    for (std::string& k : v.as_object()->own_string_keys(/*enumerable_only=*/true)) {
        keys.push_back(std::move(k));
    }
    return keys;
}

}  // namespace detail

inline void Interpreter::setup_globals() {
    global_ = heap_.make<Object>();
    global_->set_class_name("global");
    global_env_ = heap_.make_env(nullptr);
    global_env_->is_function_scope = true;

    object_proto_ = heap_.make<Object>();  // prototype chain root: proto stays null
    auto fresh_proto = [&]() {
        ObjectPtr p = heap_.make<Object>();
        p->set_prototype(object_proto_);
        return p;
    };
    {
        // Function.prototype is itself callable (a no-op returning undefined),
        // so code like `fn.constructor.prototype.bind(fn)` works.
        auto fp = heap_.make<FunctionObject>();
        fp->set_prototype(object_proto_);
        fp->native = [](const NativeCallInfo&) -> Value { return Value(); };
        fp->fn_name = "";
        function_proto_ = fp;
    }
    array_proto_ = fresh_proto();
    string_proto_ = fresh_proto();
    number_proto_ = fresh_proto();
    boolean_proto_ = fresh_proto();
    symbol_proto_ = fresh_proto();
    regexp_proto_ = fresh_proto();
    date_proto_ = fresh_proto();
    promise_proto_ = fresh_proto();
    error_proto_ = fresh_proto();
    error_protos_["Error"] = error_proto_;
    for (const char* kind :
         {"TypeError", "RangeError", "ReferenceError", "SyntaxError", "EvalError", "URIError"}) {
        ObjectPtr p = heap_.make<Object>();
        p->set_prototype(error_proto_);
        error_protos_[kind] = p;
    }
    global_->set_prototype(object_proto_);

    object_proto_->event_path = "Object.prototype";
    function_proto_->event_path = "Function.prototype";
    array_proto_->event_path = "Array.prototype";
    string_proto_->event_path = "String.prototype";
    number_proto_->event_path = "Number.prototype";
    boolean_proto_->event_path = "Boolean.prototype";
    symbol_proto_->event_path = "Symbol.prototype";
    regexp_proto_->event_path = "RegExp.prototype";
    date_proto_->event_path = "Date.prototype";
    promise_proto_->event_path = "Promise.prototype";
    error_proto_->event_path = "Error.prototype";

    install_natives();
}

inline void Interpreter::install_natives() {
    setup_object_builtin();
    setup_function_builtin();
    setup_array_builtin();
    setup_string_builtin();
    setup_number_boolean_builtins();
    setup_symbol_builtin();
    setup_error_builtins();
    setup_math_json_builtins();
    setup_regexp_builtin();
    setup_date_builtin();
    setup_promise_builtin();
    setup_misc_globals();
}

// ---------------------------------------------------------------------------
// Object
// ---------------------------------------------------------------------------

inline void Interpreter::setup_object_builtin() {
    FunctionPtr ctor = native_fn(
        "Object",
        [this](const NativeCallInfo& info) -> Value {
            Value arg = info.arg(0);
            if (arg.is_nullish()) return Value(make_object());
            if (arg.is_object()) return arg;
            auto boxed = heap_.make<BoxedObject>();
            boxed->primitive = arg;
            boxed->set_prototype(arg.is_string()   ? string_proto_
                                 : arg.is_number() ? number_proto_
                                 : arg.is_bool()   ? boolean_proto_
                                                   : symbol_proto_);
            boxed->set_class_name(arg.is_string()   ? "String"
                                  : arg.is_number() ? "Number"
                                  : arg.is_bool()   ? "Boolean"
                                                    : "Symbol");
            return Value(std::static_pointer_cast<Object>(boxed));
        },
        1, "Object");
    ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
    detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(object_proto_), false, false);
    detail::def_slot(heap_, object_proto_, PropertyKey("constructor"), Value(ctor_obj));
    detail::def_slot(heap_, global_, PropertyKey("Object"), Value(ctor_obj));

    auto add_static = [&](const std::string& name, NativeFn fn, size_t arity) {
        FunctionPtr f = native_fn(name, std::move(fn), arity, "Object." + name);
        detail::def_slot(heap_, ctor_obj, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
    };

    add_static(
        "keys",
        [this](const NativeCallInfo& info) -> Value {
            std::vector<Value> out;
            for (std::string& k : detail::enumerable_own_keys(info.arg(0)))
                out.push_back(heap_.str(std::move(k)));
            return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
        },
        1);
    add_static(
        "values",
        [this](const NativeCallInfo& info) -> Value {
            std::vector<Value> out;
            Value src = info.arg(0);
            for (const std::string& k : detail::enumerable_own_keys(src))
                out.push_back(get_property(src, PropertyKey(k), current_loc_, /*silent=*/true));
            return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
        },
        1);
    add_static(
        "entries",
        [this](const NativeCallInfo& info) -> Value {
            std::vector<Value> out;
            Value src = info.arg(0);
            for (const std::string& k : detail::enumerable_own_keys(src)) {
                Value v = get_property(src, PropertyKey(k), current_loc_, /*silent=*/true);
                out.push_back(Value(std::static_pointer_cast<Object>(
                    make_array({heap_.str(k), std::move(v)}))));
            }
            return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
        },
        1);
    add_static(
        "assign",
        [this](const NativeCallInfo& info) -> Value {
            Value target = info.arg(0);
            for (size_t i = 1; i < info.args.size(); i++) {
                Value src = info.args[i];
                if (src.is_nullish()) continue;
                for (const std::string& k : detail::enumerable_own_keys(src)) {
                    Value v = get_property(src, PropertyKey(k), current_loc_);
                    set_property(target, PropertyKey(k), std::move(v), current_loc_);
                }
            }
            return target;
        },
        2);
    add_static(
        "create",
        [this](const NativeCallInfo& info) -> Value {
            ObjectPtr obj = heap_.make<Object>();
            Value proto = info.arg(0);
            obj->set_prototype(proto.is_object() ? proto.as_object() : nullptr);
            Value props = info.arg(1);
            if (props.is_object()) {
                for (const auto& [key, slot] : props.as_object()->raw_props()) {
                    if (slot.is_accessor || !slot.enumerable) continue;
                    Value desc = slot.value;
                    if (!desc.is_object()) continue;
                    detail::def_slot(heap_, obj, key,
                                     get_own_data(desc.as_object(), PropertyKey("value")), true);
                }
            }
            return Value(obj);
        },
        2);
    add_static(
        "defineProperty",
        [this](const NativeCallInfo& info) -> Value {
            Value target = info.arg(0);
            if (!target.is_object()) throw_error("TypeError", "Object.defineProperty called on non-object");
            PropertyKey key = to_property_key(info.arg(1));
            Value desc = info.arg(2);
            if (!desc.is_object()) throw_error("TypeError", "Property description must be an object");
            const ObjectPtr& d = desc.as_object();
            PropertySlot slot;
            Value getter = get_own_data(d, PropertyKey("get"));
            Value setter = get_own_data(d, PropertyKey("set"));
            if (is_callable(getter) || is_callable(setter)) {
                slot.is_accessor = true;
                if (getter.is_object()) slot.getter = getter.as_object();
                if (setter.is_object()) slot.setter = setter.as_object();
            } else {
                slot.value = get_own_data(d, PropertyKey("value"));
            }
            slot.enumerable = to_boolean(get_own_data(d, PropertyKey("enumerable")));
            Value writable = get_own_data(d, PropertyKey("writable"));
            slot.writable = writable.is_undefined() ? true : to_boolean(writable);
            heap_.charge(Heap::kPropertyCost);
            target.as_object()->define_own(key, std::move(slot));
            return target;
        },
        3);
    add_static(
        "defineProperties",
        [this](const NativeCallInfo& info) -> Value {
            Value target = info.arg(0);
            Value props = info.arg(1);
            if (!target.is_object() || !props.is_object()) return target;
            Value def = get_property(Value(global_), PropertyKey("Object"), current_loc_, true);
            Value def_fn = get_property(def, PropertyKey("defineProperty"), current_loc_, true);
            for (const auto& [key, slot] : props.as_object()->raw_props()) {
                if (slot.is_accessor || !slot.enumerable || key.is_symbol()) continue;
                call_value(def_fn, Value(), {target, heap_.str(key.name), slot.value},
                           current_loc_);
            }
            return target;
        },
        2);
    add_static(
        "getOwnPropertyNames",
        [this](const NativeCallInfo& info) -> Value {
            std::vector<Value> out;
            Value src = info.arg(0);
            if (src.is_object()) {
                if (ArrayObject* arr = as_array(src)) {
                    for (size_t i = 0; i < arr->elements.size(); i++)
                        out.push_back(heap_.str(std::to_string(i)));
                    out.push_back(heap_.str("length"));
                }
                for (std::string& k : src.as_object()->own_string_keys(false))
                    out.push_back(heap_.str(std::move(k)));
            }
            return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
        },
        1);
    add_static(
        "getOwnPropertyDescriptor",
        [this](const NativeCallInfo& info) -> Value {
            Value src = info.arg(0);
            if (!src.is_object()) return Value();
            PropertySlot* slot = src.as_object()->find_own(to_property_key(info.arg(1)));
            if (slot == nullptr) return Value();
            ObjectPtr desc = make_object();
            if (slot->is_accessor) {
                detail::def_slot(heap_, desc, PropertyKey("get"),
                                 slot->getter ? Value(slot->getter) : Value(), true);
                detail::def_slot(heap_, desc, PropertyKey("set"),
                                 slot->setter ? Value(slot->setter) : Value(), true);
            } else {
                detail::def_slot(heap_, desc, PropertyKey("value"), slot->value, true);
                detail::def_slot(heap_, desc, PropertyKey("writable"), Value(slot->writable),
                                 true);
            }
            detail::def_slot(heap_, desc, PropertyKey("enumerable"), Value(slot->enumerable),
                             true);
            detail::def_slot(heap_, desc, PropertyKey("configurable"), Value(slot->configurable),
                             true);
            return Value(desc);
        },
        2);
    add_static(
        "getPrototypeOf",
        [this](const NativeCallInfo& info) -> Value {
            Value v = info.arg(0);
            if (v.is_string()) return Value(string_proto_);
            if (v.is_number()) return Value(number_proto_);
            if (v.is_bool()) return Value(boolean_proto_);
            if (!v.is_object()) return Value::null();
            const ObjectPtr& p = v.as_object()->prototype();
            return p ? Value(p) : Value::null();
        },
        1);
    add_static(
        "setPrototypeOf",
        [](const NativeCallInfo& info) -> Value {
            Value v = info.arg(0);
            Value proto = info.arg(1);
            if (v.is_object()) {
                v.as_object()->set_prototype(proto.is_object() ? proto.as_object() : nullptr);
            }
            return v;
        },
        2);
    add_static(
        "fromEntries",
        [this](const NativeCallInfo& info) -> Value {
            ObjectPtr obj = make_object();
            for_of_each(info.arg(0), current_loc_, [&](Value entry) {
                Value k = get_property(entry, PropertyKey("0"), current_loc_, true);
                Value v = get_property(entry, PropertyKey("1"), current_loc_, true);
                heap_.charge(Heap::kPropertyCost);
                obj->set_own(to_property_key(k), std::move(v));
                return true;
            });
            return Value(obj);
        },
        1);
    for (const char* name : {"freeze", "seal", "preventExtensions"}) {
        add_static(name, [](const NativeCallInfo& info) -> Value { return info.arg(0); }, 1);
    }
    for (const char* name : {"isFrozen", "isSealed"}) {
        add_static(name, [](const NativeCallInfo&) -> Value { return Value(false); }, 1);
    }
    add_static("isExtensible", [](const NativeCallInfo&) -> Value { return Value(true); }, 1);
    add_static(
        "is",
        [](const NativeCallInfo& info) -> Value {
            return Value(info.arg(0).same_value_zero(info.arg(1)) &&
                         !(info.arg(0).is_number() && info.arg(1).is_number() &&
                           ((info.arg(0).as_number() == 0 && info.arg(1).as_number() == 0 &&
                             std::signbit(info.arg(0).as_number()) !=
                                 std::signbit(info.arg(1).as_number())))));
        },
        2);

    add_method(object_proto_, "hasOwnProperty", [this](const NativeCallInfo& info) -> Value {
        PropertyKey key = to_property_key(info.arg(0));
        const Value& self = info.this_value;
        if (self.is_string() && !key.is_symbol()) {
            if (key.name == "length") return Value(true);
            size_t idx = array_index_of(key.name);
            return Value(idx != SIZE_MAX && idx < detail::utf16_length(self.as_string()));
        }
        if (!self.is_object()) return Value(false);
        if (ArrayObject* arr = as_array(self)) {
            if (!key.is_symbol()) {
                if (key.name == "length") return Value(true);
                size_t idx = array_index_of(key.name);
                if (idx != SIZE_MAX) return Value(idx < arr->length());
            }
        }
        return Value(self.as_object()->find_own(key) != nullptr);
    }, 1);
    add_method(object_proto_, "toString", [this](const NativeCallInfo& info) -> Value {
        const Value& self = info.this_value;
        if (self.is_undefined()) return heap_.str("[object Undefined]");
        if (self.is_null()) return heap_.str("[object Null]");
        if (self.is_string()) return heap_.str("[object String]");
        if (self.is_number()) return heap_.str("[object Number]");
        if (self.is_bool()) return heap_.str("[object Boolean]");
        if (!self.is_object()) return heap_.str("[object Object]");
        if (as_mock(self) != nullptr) return heap_.str("[object Object]");
        return heap_.str("[object " + self.as_object()->class_name() + "]");
    });
    add_method(object_proto_, "toLocaleString", [this](const NativeCallInfo& info) -> Value {
        return heap_.str(to_string_value(info.this_value));
    });
    add_method(object_proto_, "valueOf", [](const NativeCallInfo& info) -> Value {
        return info.this_value;
    });
    add_method(object_proto_, "isPrototypeOf", [](const NativeCallInfo& info) -> Value {
        Value v = info.arg(0);
        if (!v.is_object() || !info.this_value.is_object()) return Value(false);
        ObjectPtr walk = v.as_object()->prototype();
        int guard = 0;
        while (walk && guard++ < 1000) {
            if (walk == info.this_value.as_object()) return Value(true);
            walk = walk->prototype();
        }
        return Value(false);
    }, 1);
    add_method(object_proto_, "propertyIsEnumerable", [this](const NativeCallInfo& info) -> Value {
        if (!info.this_value.is_object()) return Value(false);
        if (ArrayObject* arr = as_array(info.this_value)) {
            size_t idx = array_index_of(to_property_key(info.arg(0)).name);
            if (idx != SIZE_MAX) return Value(idx < arr->elements.size());
        }
        const PropertySlot* slot =
            info.this_value.as_object()->find_own(to_property_key(info.arg(0)));
        return Value(slot != nullptr && slot->enumerable);
    }, 1);
}

// ---------------------------------------------------------------------------
// Function
// ---------------------------------------------------------------------------

inline void Interpreter::setup_function_builtin() {
    FunctionPtr ctor = native_fn(
        "Function",
        [this](const NativeCallInfo& info) -> Value { return function_constructor(info.args); },
        1, "Function");
    ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
    detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(function_proto_), false,
                     false);
    detail::def_slot(heap_, function_proto_, PropertyKey("constructor"), Value(ctor_obj));
    detail::def_slot(heap_, global_, PropertyKey("Function"), Value(ctor_obj));

    add_method(function_proto_, "call", [this](const NativeCallInfo& info) -> Value {
        std::vector<Value> rest(info.args.begin() + std::min<size_t>(1, info.args.size()),
                                info.args.end());
        return call_value(info.this_value, info.arg(0), std::move(rest), current_loc_);
    }, 1);
    add_method(function_proto_, "apply", [this](const NativeCallInfo& info) -> Value {
        std::vector<Value> list;
        Value arr = info.arg(1);
        if (!arr.is_nullish()) {
            if (ArrayObject* a = as_array(arr)) {
                list = a->elements;
            } else if (arr.is_object()) {
                double n = to_number(get_property(arr, PropertyKey("length"), current_loc_, true));
                size_t len = (std::isnan(n) || n < 0) ? 0 : static_cast<size_t>(n);
                len = std::min<size_t>(len, 65536);
                for (size_t i = 0; i < len; i++) {
                    list.push_back(get_property(arr, PropertyKey(std::to_string(i)), current_loc_,
                                                true));
                }
            }
        }
        return call_value(info.this_value, info.arg(0), std::move(list), current_loc_);
    }, 2);
    add_method(function_proto_, "bind", [this](const NativeCallInfo& info) -> Value {
        if (!is_callable(info.this_value)) {
            throw_error("TypeError", "Bind must be called on a function");
        }
        auto bound = heap_.make<FunctionObject>();
        bound->set_prototype(function_proto_);
        bound->bound_target = info.this_value.as_object();
        bound->bound_this = info.arg(0);
        if (info.args.size() > 1) {
            bound->bound_args.assign(info.args.begin() + 1, info.args.end());
            heap_.charge(bound->bound_args.size() * Heap::kElementCost);
        }
        if (FunctionObject* target = as_function(info.this_value)) {
            bound->fn_name = "bound " + target->fn_name;
            size_t given = bound->bound_args.size();
            bound->param_count = target->param_count > given ? target->param_count - given : 0;
        } else {
            bound->fn_name = "bound";
        }
        return Value(std::static_pointer_cast<Object>(bound));
    }, 1);
    add_method(function_proto_, "toString", [this](const NativeCallInfo& info) -> Value {
        FunctionObject* fn = as_function(info.this_value);
        if (fn == nullptr) return heap_.str("function () {}");
        if (fn->decl != nullptr && fn->source && fn->source->text.body) {
            const std::string& src = *fn->source->text.body;
            uint32_t start = fn->decl->span.start;
            uint32_t end = std::min<uint32_t>(fn->decl->span.end, src.size());
            if (start < end) return heap_.str(src.substr(start, end - start));
        }
        return heap_.str("function " + fn->fn_name + "() { [native code] }");
    });
}

// ---------------------------------------------------------------------------
// Array
// ---------------------------------------------------------------------------

inline void Interpreter::setup_array_builtin() {
    FunctionPtr ctor = native_fn(
        "Array",
        [this](const NativeCallInfo& info) -> Value {
            if (info.args.size() == 1 && info.args[0].is_number()) {
                double n = info.args[0].as_number();
                if (n < 0 || n != std::floor(n) || n > 4294967295.0) {
                    throw_error("RangeError", "Invalid array length");
                }
                auto arr = make_array();
                size_t len = static_cast<size_t>(n);
                if (len <= 100000) {
                    heap_.charge(len * Heap::kElementCost);
                    arr->elements.resize(len);
                } else {
                    arr->set_length(len);
                }
                return Value(std::static_pointer_cast<Object>(arr));
            }
            return Value(std::static_pointer_cast<Object>(make_array(info.args)));
        },
        1, "Array");
    ObjectPtr ctor_obj = std::static_pointer_cast<Object>(ctor);
    detail::def_slot(heap_, ctor_obj, PropertyKey("prototype"), Value(array_proto_), false, false);
    detail::def_slot(heap_, array_proto_, PropertyKey("constructor"), Value(ctor_obj));
    detail::def_slot(heap_, global_, PropertyKey("Array"), Value(ctor_obj));

    auto add_static = [&](const std::string& name, NativeFn fn, size_t arity) {
        FunctionPtr f = native_fn(name, std::move(fn), arity, "Array." + name);
        detail::def_slot(heap_, ctor_obj, PropertyKey(name),
                         Value(std::static_pointer_cast<Object>(f)));
    };
    add_static(
        "isArray",
        [](const NativeCallInfo& info) -> Value { return Value(as_array(info.arg(0)) != nullptr); },
        1);
    add_static(
        "of",
        [this](const NativeCallInfo& info) -> Value {
            return Value(std::static_pointer_cast<Object>(make_array(info.args)));
        },
        0);
    add_static(
        "from",
        [this](const NativeCallInfo& info) -> Value {
            Value src = info.arg(0);
            Value map_fn = info.arg(1);
            std::vector<Value> out;
            bool array_like = src.is_object() && as_array(src) == nullptr &&
                              as_mock(src) == nullptr &&
                              !has_property(src, PropertyKey(JsSymbol{well_known::iterator, {}}));
            if (array_like) {
                double n = to_number(get_property(src, PropertyKey("length"), current_loc_, true));
                size_t len = (std::isnan(n) || n < 0) ? 0 : static_cast<size_t>(n);
                len = std::min<size_t>(len, 1u << 20);
                for (size_t i = 0; i < len; i++) {
                    out.push_back(
                        get_property(src, PropertyKey(std::to_string(i)), current_loc_, true));
                }
            } else if (!src.is_nullish()) {
                for_of_each(src, current_loc_, [&](Value item) {
                    out.push_back(std::move(item));
                    return true;
                });
            }
            if (is_callable(map_fn)) {
                for (size_t i = 0; i < out.size(); i++) {
                    out[i] = call_value(map_fn, Value(), {out[i], Value(static_cast<double>(i))},
                                        current_loc_);
                }
            }
            return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
        },
        1);

    auto self_array = [](const NativeCallInfo& info) -> ArrayObject* {
        return as_array(info.this_value);
    };

    add_method(array_proto_, "push", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return Value(0.0);
        for (const Value& v : info.args) {
            heap_.charge(Heap::kElementCost);
            arr->elements.push_back(v);
        }
        return Value(static_cast<double>(arr->length()));
    }, 1);
    add_method(array_proto_, "pop", [self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr || arr->elements.empty()) return Value();
        Value last = arr->elements.back();
        arr->elements.pop_back();
        return last;
    });
    add_method(array_proto_, "shift", [self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr || arr->elements.empty()) return Value();
        Value first = arr->elements.front();
        arr->elements.erase(arr->elements.begin());
        return first;
    });
    add_method(array_proto_, "unshift", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return Value(0.0);
        heap_.charge(info.args.size() * Heap::kElementCost);
        arr->elements.insert(arr->elements.begin(), info.args.begin(), info.args.end());
        return Value(static_cast<double>(arr->length()));
    }, 1);
    auto clamp_index = [](double rel, size_t len) -> size_t {
        if (std::isnan(rel)) return 0;
        if (rel < 0) {
            double k = static_cast<double>(len) + rel;
            return k < 0 ? 0 : static_cast<size_t>(k);
        }
        return rel > static_cast<double>(len) ? len : static_cast<size_t>(rel);
    };
    add_method(array_proto_, "slice", [this, self_array, clamp_index](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return Value(std::static_pointer_cast<Object>(make_array()));
        size_t len = arr->elements.size();
        size_t start = clamp_index(info.arg(0).is_undefined() ? 0 : to_number(info.arg(0)), len);
        size_t end = info.arg(1).is_undefined()
                         ? len
                         : clamp_index(to_number(info.arg(1)), len);
        std::vector<Value> out;
        for (size_t i = start; i < end && i < len; i++) out.push_back(arr->elements[i]);
        return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
    }, 2);
    add_method(array_proto_, "splice", [this, self_array, clamp_index](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return Value(std::static_pointer_cast<Object>(make_array()));
        size_t len = arr->elements.size();
        size_t start = clamp_index(info.args.empty() ? 0 : to_number(info.arg(0)), len);
        size_t remove = len - start;
        if (info.args.size() > 1) {
            double d = to_number(info.arg(1));
            remove = (std::isnan(d) || d < 0) ? 0 : std::min<size_t>(static_cast<size_t>(d), len - start);
        }
        std::vector<Value> removed(arr->elements.begin() + static_cast<ptrdiff_t>(start),
                                   arr->elements.begin() + static_cast<ptrdiff_t>(start + remove));
        std::vector<Value> inserted;
        for (size_t i = 2; i < info.args.size(); i++) inserted.push_back(info.args[i]);
        heap_.charge(inserted.size() * Heap::kElementCost);
        arr->elements.erase(arr->elements.begin() + static_cast<ptrdiff_t>(start),
                            arr->elements.begin() + static_cast<ptrdiff_t>(start + remove));
        arr->elements.insert(arr->elements.begin() + static_cast<ptrdiff_t>(start),
                             inserted.begin(), inserted.end());
        return Value(std::static_pointer_cast<Object>(make_array(std::move(removed))));
    }, 2);
    add_method(array_proto_, "concat", [this, self_array](const NativeCallInfo& info) -> Value {
        std::vector<Value> out;
        if (ArrayObject* arr = self_array(info)) out = arr->elements;
        for (const Value& v : info.args) {
            if (ArrayObject* a = as_array(v)) {
                out.insert(out.end(), a->elements.begin(), a->elements.end());
            } else {
                out.push_back(v);
            }
        }
        return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
    }, 1);
    add_method(array_proto_, "join", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return heap_.str("");
        std::string sep = info.arg(0).is_undefined() ? "," : to_string_value(info.arg(0));
        std::string out;
        for (size_t i = 0; i < arr->elements.size(); i++) {
            if (i > 0) out += sep;
            const Value& v = arr->elements[i];
            if (!v.is_nullish()) out += to_string_value(v);
        }
        return heap_.str(std::move(out));
    }, 1);
    add_method(array_proto_, "reverse", [self_array](const NativeCallInfo& info) -> Value {
        if (ArrayObject* arr = self_array(info)) {
            std::reverse(arr->elements.begin(), arr->elements.end());
        }
        return info.this_value;
    });
    add_method(array_proto_, "indexOf", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return Value(-1.0);
        for (size_t i = 0; i < arr->elements.size(); i++) {
            if (arr->elements[i].strict_equals(info.arg(0))) return Value(static_cast<double>(i));
        }
        return Value(-1.0);
    }, 1);
    add_method(array_proto_, "lastIndexOf", [self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return Value(-1.0);
        for (size_t i = arr->elements.size(); i > 0; i--) {
            if (arr->elements[i - 1].strict_equals(info.arg(0)))
                return Value(static_cast<double>(i - 1));
        }
        return Value(-1.0);
    }, 1);
    add_method(array_proto_, "includes", [self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return Value(false);
        for (const Value& v : arr->elements) {
            if (v.same_value_zero(info.arg(0))) return Value(true);
        }
        return Value(false);
    }, 1);
    add_method(array_proto_, "at", [self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return Value();
        double rel = info.arg(0).is_undefined() ? 0 : info.arg(0).is_number() ? info.arg(0).as_number() : 0;
        double idx = rel < 0 ? static_cast<double>(arr->elements.size()) + rel : rel;
        if (idx < 0 || idx >= static_cast<double>(arr->elements.size())) return Value();
        return arr->elements[static_cast<size_t>(idx)];
    }, 1);

    auto iterate = [this, self_array](const NativeCallInfo& info,
                                      const std::function<bool(size_t, const Value&)>& fn) {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return;
        for (size_t i = 0; i < arr->elements.size(); i++) {
            limits_.tick();
            if (!fn(i, arr->elements[i])) return;
        }
    };
    add_method(array_proto_, "forEach", [this, iterate](const NativeCallInfo& info) -> Value {
        Value cb = info.arg(0);
        iterate(info, [&](size_t i, const Value& v) {
            call_value(cb, info.arg(1), {v, Value(static_cast<double>(i)), info.this_value},
                       current_loc_);
            return true;
        });
        return Value();
    }, 1);
    add_method(array_proto_, "map", [this, iterate](const NativeCallInfo& info) -> Value {
        Value cb = info.arg(0);
        std::vector<Value> out;
        iterate(info, [&](size_t i, const Value& v) {
            out.push_back(call_value(cb, info.arg(1),
                                     {v, Value(static_cast<double>(i)), info.this_value},
                                     current_loc_));
            return true;
        });
        return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
    }, 1);
    add_method(array_proto_, "filter", [this, iterate](const NativeCallInfo& info) -> Value {
        Value cb = info.arg(0);
        std::vector<Value> out;
        iterate(info, [&](size_t i, const Value& v) {
            if (to_boolean(call_value(cb, info.arg(1),
                                      {v, Value(static_cast<double>(i)), info.this_value},
                                      current_loc_))) {
                out.push_back(v);
            }
            return true;
        });
        return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
    }, 1);
    add_method(array_proto_, "find", [this, iterate](const NativeCallInfo& info) -> Value {
        Value cb = info.arg(0);
        Value found;
        iterate(info, [&](size_t i, const Value& v) {
            if (to_boolean(call_value(cb, info.arg(1),
                                      {v, Value(static_cast<double>(i)), info.this_value},
                                      current_loc_))) {
                found = v;
                return false;
            }
            return true;
        });
        return found;
    }, 1);
    add_method(array_proto_, "findIndex", [this, iterate](const NativeCallInfo& info) -> Value {
        Value cb = info.arg(0);
        double found = -1;
        iterate(info, [&](size_t i, const Value& v) {
            if (to_boolean(call_value(cb, info.arg(1),
                                      {v, Value(static_cast<double>(i)), info.this_value},
                                      current_loc_))) {
                found = static_cast<double>(i);
                return false;
            }
            return true;
        });
        return Value(found);
    }, 1);
    add_method(array_proto_, "some", [this, iterate](const NativeCallInfo& info) -> Value {
        Value cb = info.arg(0);
        bool hit = false;
        iterate(info, [&](size_t i, const Value& v) {
            if (to_boolean(call_value(cb, info.arg(1),
                                      {v, Value(static_cast<double>(i)), info.this_value},
                                      current_loc_))) {
                hit = true;
                return false;
            }
            return true;
        });
        return Value(hit);
    }, 1);
    add_method(array_proto_, "every", [this, iterate](const NativeCallInfo& info) -> Value {
        Value cb = info.arg(0);
        bool all = true;
        iterate(info, [&](size_t i, const Value& v) {
            if (!to_boolean(call_value(cb, info.arg(1),
                                       {v, Value(static_cast<double>(i)), info.this_value},
                                       current_loc_))) {
                all = false;
                return false;
            }
            return true;
        });
        return Value(all);
    }, 1);
    add_method(array_proto_, "reduce", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        Value cb = info.arg(0);
        if (arr == nullptr || arr->elements.empty()) {
            if (info.args.size() > 1) return info.arg(1);
            throw_error("TypeError", "Reduce of empty array with no initial value");
        }
        size_t i = 0;
        Value acc;
        if (info.args.size() > 1) {
            acc = info.arg(1);
        } else {
            acc = arr->elements[0];
            i = 1;
        }
        for (; i < arr->elements.size(); i++) {
            limits_.tick();
            acc = call_value(cb, Value(),
                             {acc, arr->elements[i], Value(static_cast<double>(i)),
                              info.this_value},
                             current_loc_);
        }
        return acc;
    }, 1);
    add_method(array_proto_, "reduceRight", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        Value cb = info.arg(0);
        if (arr == nullptr || arr->elements.empty()) {
            if (info.args.size() > 1) return info.arg(1);
            throw_error("TypeError", "Reduce of empty array with no initial value");
        }
        size_t i = arr->elements.size();
        Value acc;
        if (info.args.size() > 1) {
            acc = info.arg(1);
        } else {
            acc = arr->elements[--i];
        }
        while (i > 0) {
            limits_.tick();
            i--;
            acc = call_value(cb, Value(),
                             {acc, arr->elements[i], Value(static_cast<double>(i)),
                              info.this_value},
                             current_loc_);
        }
        return acc;
    }, 1);
    add_method(array_proto_, "sort", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return info.this_value;
        Value cmp = info.arg(0);
        bool has_cmp = is_callable(cmp);
        // Partition undefined values to the end, then sort the rest.
        auto mid = std::stable_partition(arr->elements.begin(), arr->elements.end(),
                                         [](const Value& v) { return !v.is_undefined(); });
        std::vector<std::string> string_keys;
        if (!has_cmp) {
            // Cache string conversions; the comparator must stay side-effect free.
            string_keys.reserve(static_cast<size_t>(mid - arr->elements.begin()));
            for (auto it = arr->elements.begin(); it != mid; ++it) {
                string_keys.push_back(to_string_value(*it));
            }
            std::vector<size_t> order(string_keys.size());
            for (size_t i = 0; i < order.size(); i++) order[i] = i;
            std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
                return detail::utf8_to_utf16(string_keys[a]) <
                       detail::utf8_to_utf16(string_keys[b]);
            });
            std::vector<Value> sorted;
            sorted.reserve(order.size());
            for (size_t idx : order) sorted.push_back(arr->elements[idx]);
            std::copy(sorted.begin(), sorted.end(), arr->elements.begin());
            return info.this_value;
        }
        std::stable_sort(arr->elements.begin(), mid, [&](const Value& a, const Value& b) {
            limits_.tick();
            double r = to_number(call_value(cmp, Value(), {a, b}, current_loc_));
            return r < 0;
        });
        return info.this_value;
    }, 1);
    add_method(array_proto_, "fill", [self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        if (arr == nullptr) return info.this_value;
        for (Value& v : arr->elements) v = info.arg(0);
        return info.this_value;
    }, 1);
    add_method(array_proto_, "flat", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        double depth = info.arg(0).is_undefined() ? 1 : to_number(info.arg(0));
        std::function<void(const std::vector<Value>&, double, std::vector<Value>&)> walk =
            [&](const std::vector<Value>& src, double d, std::vector<Value>& out) {
                for (const Value& v : src) {
                    ArrayObject* inner = as_array(v);
                    if (inner != nullptr && d >= 1) {
                        walk(inner->elements, d - 1, out);
                    } else {
                        out.push_back(v);
                    }
                }
            };
        std::vector<Value> out;
        if (arr != nullptr) walk(arr->elements, depth, out);
        return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
    }, 1);
    add_method(array_proto_, "flatMap", [this, self_array](const NativeCallInfo& info) -> Value {
        ArrayObject* arr = self_array(info);
        Value cb = info.arg(0);
        std::vector<Value> out;
        if (arr != nullptr) {
            for (size_t i = 0; i < arr->elements.size(); i++) {
                limits_.tick();
                Value r = call_value(
                    cb, Value(),
                    {arr->elements[i], Value(static_cast<double>(i)), info.this_value},
                    current_loc_);
                if (ArrayObject* inner = as_array(r)) {
                    out.insert(out.end(), inner->elements.begin(), inner->elements.end());
                } else {
                    out.push_back(std::move(r));
                }
            }
        }
        return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
    }, 1);
    add_method(array_proto_, "toString", [this](const NativeCallInfo& info) -> Value {
        Value join = get_property(info.this_value, PropertyKey("join"), current_loc_, true);
        if (is_callable(join)) return call_value(join, info.this_value, {}, current_loc_);
        return heap_.str("");
    });

    // Iterator protocol: values() plus the Symbol.iterator alias.
    auto make_index_iterator = [this](const Value& target, int mode) -> Value {
        // mode 0: values, 1: keys, 2: entries
        ObjectPtr iter = make_object();
        auto index = std::make_shared<size_t>(0);
        Interpreter* self = this;
        add_method(iter, "next", [self, target, index, mode](const NativeCallInfo&) -> Value {
            ObjectPtr step = self->make_object();
            ArrayObject* arr = as_array(target);
            size_t len = arr != nullptr ? arr->elements.size() : 0;
            detail::def_slot(self->heap_, step, PropertyKey("done"), Value(*index >= len), true);
            if (*index >= len) {
                detail::def_slot(self->heap_, step, PropertyKey("value"), Value(), true);
            } else {
                Value elem = arr->elements[*index];
                Value out = elem;
                if (mode == 1) {
                    out = Value(static_cast<double>(*index));
                } else if (mode == 2) {
                    out = Value(std::static_pointer_cast<Object>(
                        self->make_array({Value(static_cast<double>(*index)), elem})));
                }
                detail::def_slot(self->heap_, step, PropertyKey("value"), std::move(out), true);
                (*index)++;
            }
            return Value(step);
        });
        return Value(iter);
    };
    add_method(array_proto_, "values", [make_index_iterator](const NativeCallInfo& info) -> Value {
        return make_index_iterator(info.this_value, 0);
    });
    add_method(array_proto_, "keys", [make_index_iterator](const NativeCallInfo& info) -> Value {
        return make_index_iterator(info.this_value, 1);
    });
    add_method(array_proto_, "entries", [make_index_iterator](const NativeCallInfo& info) -> Value {
        return make_index_iterator(info.this_value, 2);
    });
    PropertySlot iter_slot;
    iter_slot.value = get_own_data(array_proto_, PropertyKey("values"));
    iter_slot.enumerable = false;
    heap_.charge(Heap::kPropertyCost);
    array_proto_->define_own(PropertyKey(JsSymbol{well_known::iterator, {}}), std::move(iter_slot));
}

}  // namespace mirage

#endif
