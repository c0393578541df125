#ifndef MIRAGE_DETAIL_INTERP_MEMBRANE_HPP
#define MIRAGE_DETAIL_INTERP_MEMBRANE_HPP

namespace mirage {

namespace detail {

inline int path_depth(const std::string& path) {
    return static_cast<int>(std::count(path.begin(), path.end(), '.'));
}

inline std::vector<std::string> split_path(const std::string& path) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t dot = path.find('.', start);
        if (dot == std::string::npos) {
            out.push_back(path.substr(start));
            return out;
        }
        out.push_back(path.substr(start, dot - start));
        start = dot + 1;
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Identifier resolution
// ---------------------------------------------------------------------------

inline Value Interpreter::resolve_identifier(const std::string& name, const EnvPtr& env,
                                             const Node* where) {
    Binding* b = env ? env->find(name) : nullptr;
    int hops = 0;
    while (b != nullptr && b->import_env) {
        if (++hops > 32) throw_error("ReferenceError", name + " is not defined");
        EnvRecord* src = b->import_env.get();
        b = src->find_local(b->import_name);
    }
    if (b != nullptr) {
        if (!b->initialized)
            throw_error("ReferenceError", "Cannot access '" + name + "' before initialization");
        return b->value;
    }
    // Bare identifiers reaching the global scope log membrane-origin values
    // only: a miss fabricates a root mock (logged), a stored mock or wrapped
    // native logs under its canonical path, and plain guest globals stay
    // silent.
    return global_lookup(name, loc_of(where), GlobalLogMode::bare);
}

inline void Interpreter::assign_identifier(const std::string& name, Value v, const EnvPtr& env,
                                           const Node* where) {
    Binding* b = env ? env->find(name) : nullptr;
    if (b != nullptr) {
        if (b->import_env)
            throw_error("TypeError", "Assignment to constant variable.");
        if (!b->initialized)
            throw_error("ReferenceError", "Cannot access '" + name + "' before initialization");
        if (!b->is_mutable) throw_error("TypeError", "Assignment to constant variable.");
        b->value = std::move(v);
        return;
    }
    global_assign(name, std::move(v), loc_of(where), /*log_event=*/false);
}

// ---------------------------------------------------------------------------
// Global scope membrane
// ---------------------------------------------------------------------------

inline Value Interpreter::global_lookup(const std::string& name, const SourceLocation& loc,
                                        GlobalLogMode mode) {
    const SourceLocation& at = loc.specifier.empty() ? current_loc_ : loc;
    PropertyKey key(name);

    // The path a membrane-origin value reports under; empty for plain guest
    // values, which bare identifier reads pass through silently.
    auto membrane_path = [](const Value& v) -> std::string {
        if (!v.is_object()) return "";
        if (const MockObject* m = as_mock(v)) return m->path;
        return v.as_object()->event_path;
    };

    if (PropertySlot* slot = global_->find_own(key)) {
        Value result;
        if (slot->is_accessor) {
            if (slot->getter) result = call_value(Value(slot->getter), Value(global_), {}, at);
        } else {
            result = slot->value;
        }
        if (mode == GlobalLogMode::property) {
            log_.log_get(name, at, result);
        } else if (mode == GlobalLogMode::bare) {
            std::string path = membrane_path(result);
            if (!path.empty()) log_.log_get(path, at, result);
        }
        return result;
    }
    auto ref = ref_hooks_.find(name);
    if (ref != ref_hooks_.end()) {
        Value target;
        if (ref->second.empty()) {
            target = Value(global_);
        } else {
            std::vector<std::string> segs = detail::split_path(ref->second);
            target = global_lookup(segs[0], at, GlobalLogMode::silent);
            for (size_t i = 1; i < segs.size(); i++) {
                target = get_property(target, PropertyKey(segs[i]), at, /*silent=*/true);
            }
        }
        if (mode != GlobalLogMode::silent) {
            // Reference hooks are transparent: the event names the target.
            std::string reported = membrane_path(target);
            if (!reported.empty()) {
                log_.log_get(reported, at, target);
            } else if (mode == GlobalLogMode::property) {
                log_.log_get(name, at, target);
            }
        }
        return target;
    }
    MockPtr mock = make_mock(name, 0);
    PropertySlot slot;
    slot.value = Value(std::static_pointer_cast<Object>(mock));
    slot.enumerable = false;
    global_->define_own(key, std::move(slot));
    heap_.charge(Heap::kPropertyCost);
    if (mode != GlobalLogMode::silent) {
        log_.log_get(name, at, Value(std::static_pointer_cast<Object>(mock)));
    }
    return Value(std::static_pointer_cast<Object>(mock));
}

inline void Interpreter::global_assign(const std::string& name, Value v,
                                       const SourceLocation& loc, bool log_event) {
    const SourceLocation& at = loc.specifier.empty() ? current_loc_ : loc;
    if (log_event) log_.log_set(name, at, v);
    PropertyKey key(name);
    if (PropertySlot* slot = global_->find_own(key)) {
        if (slot->is_accessor) {
            if (slot->setter) call_value(Value(slot->setter), Value(global_), {std::move(v)}, at);
            return;
        }
        if (!slot->writable) return;
        slot->value = std::move(v);
        return;
    }
    PropertySlot slot;
    slot.value = std::move(v);
    global_->define_own(key, std::move(slot));
    heap_.charge(Heap::kPropertyCost);
}

// ---------------------------------------------------------------------------
// Property protocol
// ---------------------------------------------------------------------------

inline Value Interpreter::get_property(const Value& base, const PropertyKey& key,
                                       const SourceLocation& loc, bool silent) {
    const SourceLocation& at = loc.specifier.empty() ? current_loc_ : loc;
    if (base.is_nullish()) {
        throw_error("TypeError", std::string("Cannot read properties of ") +
                                     (base.is_null() ? "null" : "undefined") + " (reading '" +
                                     (key.is_symbol() ? "Symbol(" + key.name + ")" : key.name) +
                                     "')");
    }
    if (base.is_string()) {
        const std::string& s = base.as_string();
        if (!key.is_symbol()) {
            if (key.name == "length") return Value(detail::utf16_length(s));
            size_t idx = array_index_of(key.name);
            if (idx != SIZE_MAX) {
                if (detail::ascii_only(s)) {
                    if (idx >= s.size()) return Value();
                    return heap_.str(std::string(1, s[idx]));
                }
                std::u16string u = detail::utf8_to_utf16(s);
                if (idx >= u.size()) return Value();
                return heap_.str(detail::utf16_to_utf8(std::u16string(1, u[idx])));
            }
        }
        ObjectPtr walk = string_proto_;
        while (walk) {
            if (PropertySlot* slot = walk->find_own(key)) {
                if (slot->is_accessor)
                    return slot->getter ? call_value(Value(slot->getter), base, {}, at) : Value();
                return slot->value;
            }
            walk = walk->prototype();
        }
        return Value();
    }
    if (base.is_number() || base.is_bool() || base.is_symbol()) {
        if (base.is_symbol() && !key.is_symbol() && key.name == "description") {
            const JsSymbol& sym = base.as_symbol();
            return sym.description ? heap_.str(*sym.description) : Value();
        }
        ObjectPtr proto = base.is_number() ? number_proto_
                          : base.is_bool() ? boolean_proto_
                                           : symbol_proto_;
        ObjectPtr walk = proto;
        while (walk) {
            if (PropertySlot* slot = walk->find_own(key)) {
                if (slot->is_accessor)
                    return slot->getter ? call_value(Value(slot->getter), base, {}, at) : Value();
                return slot->value;
            }
            walk = walk->prototype();
        }
        return Value();
    }

    const ObjectPtr& obj = base.as_object();
    if (obj->kind() == ObjectKind::Mock) {
        return mock_trap_get(std::static_pointer_cast<MockObject>(obj), key, at, silent);
    }
    if (obj == global_ && !key.is_symbol()) {
        return global_lookup(key.name, at,
                             silent ? GlobalLogMode::silent : GlobalLogMode::property);
    }

    const bool pathed = !obj->event_path.empty() && !key.is_symbol();
    bool found = false;
    Value result;

    // Exotic own behavior first: arrays and functions.
    if (!key.is_symbol()) {
        if (ArrayObject* arr = as_array(base)) {
            if (key.name == "length") {
                found = true;
                result = Value(arr->length());
            } else {
                size_t idx = array_index_of(key.name);
                if (idx != SIZE_MAX) {
                    found = true;
                    if (idx < arr->elements.size()) {
                        result = arr->elements[idx];
                    } else if (const PropertySlot* slot = arr->find_own(key)) {
                        result = slot->value;
                    } else {
                        found = false;
                    }
                }
            }
        } else if (FunctionObject* fn = as_function(base)) {
            if (key.name == "prototype" && fn->find_own(key) == nullptr && !fn->is_arrow &&
                fn->native == nullptr) {
                ObjectPtr proto_obj = make_object();
                PropertySlot ctor;
                ctor.value = base;
                ctor.enumerable = false;
                proto_obj->define_own(PropertyKey("constructor"), std::move(ctor));
                PropertySlot slot;
                slot.value = Value(proto_obj);
                slot.enumerable = false;
                fn->define_own(key, std::move(slot));
            } else if (key.name == "name" && fn->find_own(key) == nullptr) {
                found = true;
                result = heap_.str(fn->fn_name);
            } else if (key.name == "length" && fn->find_own(key) == nullptr) {
                found = true;
                result = Value(fn->param_count);
            }
        }
    }

    if (!found) {
        ObjectPtr walk = obj;
        int guard = 0;
        while (walk && guard++ < 1000) {
            if (PropertySlot* slot = walk->find_own(key)) {
                found = true;
                if (slot->is_accessor) {
                    result = slot->getter ? call_value(Value(slot->getter), base, {}, at) : Value();
                } else {
                    result = slot->value;
                }
                break;
            }
            walk = walk->prototype();
        }
    }

    if (pathed) {
        const std::string& eh = obj->event_path;
        bool is_proto_object = eh.size() >= 10 && eh.compare(eh.size() - 10, 10, ".prototype") == 0;
        if (!found && !is_proto_object) {
            // Missing members of wrapped built-ins fabricate like mock
            // children. Prototype objects are exempt: a fabricated member
            // stored there would leak into every inheriting object.
            std::string child_path = eh + "." + key.name;
            MockPtr child = make_mock(child_path, detail::path_depth(child_path));
            PropertySlot slot;
            slot.value = Value(std::static_pointer_cast<Object>(child));
            slot.enumerable = false;
            obj->define_own(key, std::move(slot));
            heap_.charge(Heap::kPropertyCost);
            result = Value(std::static_pointer_cast<Object>(child));
        }
        if (!silent) log_.log_get(eh + "." + key.name, at, result);
        return result;
    }
    return result;
}

inline void Interpreter::set_property(const Value& base, const PropertyKey& key, Value v,
                                      const SourceLocation& loc, bool silent) {
    const SourceLocation& at = loc.specifier.empty() ? current_loc_ : loc;
    if (base.is_nullish()) {
        throw_error("TypeError", std::string("Cannot set properties of ") +
                                     (base.is_null() ? "null" : "undefined") + " (setting '" +
                                     key.name + "')");
    }
    if (!base.is_object()) return;  // writes to primitives are silently dropped

    const ObjectPtr& obj = base.as_object();
    if (obj->kind() == ObjectKind::Mock) {
        mock_trap_set(std::static_pointer_cast<MockObject>(obj), key, std::move(v), at, silent);
        return;
    }
    if (obj == global_ && !key.is_symbol()) {
        global_assign(key.name, std::move(v), at, /*log_event=*/!silent);
        return;
    }
    if (!obj->event_path.empty() && !key.is_symbol() && !silent) {
        log_.log_set(obj->event_path + "." + key.name, at, v);
    }

    if (!key.is_symbol()) {
        if (ArrayObject* arr = as_array(base)) {
            if (key.name == "length") {
                double n = to_number(v);
                if (n >= 0 && n == std::trunc(n) && n < 4294967296.0) {
                    arr->set_length(static_cast<size_t>(n));
                } else {
                    throw_error("RangeError", "Invalid array length");
                }
                return;
            }
            size_t idx = array_index_of(key.name);
            if (idx != SIZE_MAX) {
                if (idx < arr->elements.size()) {
                    arr->elements[idx] = std::move(v);
                } else if (idx <= arr->elements.size() + 1024) {
                    heap_.charge((idx + 1 - arr->elements.size()) * Heap::kElementCost);
                    arr->elements.resize(idx + 1);
                    arr->elements[idx] = std::move(v);
                } else {
                    heap_.charge(Heap::kPropertyCost);
                    arr->set_own(key, std::move(v));
                    arr->note_sparse_index(idx);
                }
                return;
            }
        }
    }

    // Setter lookup along the chain; data property on the receiver otherwise.
    ObjectPtr walk = obj;
    int guard = 0;
    while (walk && guard++ < 1000) {
        if (PropertySlot* slot = walk->find_own(key)) {
            if (slot->is_accessor) {
                if (slot->setter) call_value(Value(slot->setter), base, {std::move(v)}, at);
                return;
            }
            if (walk == obj) {
                if (!slot->writable) return;
                slot->value = std::move(v);
                return;
            }
            break;  // shadow an inherited data property
        }
        walk = walk->prototype();
    }
    heap_.charge(Heap::kPropertyCost);
    obj->set_own(key, std::move(v));
}

inline bool Interpreter::has_property(const Value& base, const PropertyKey& key) {
    if (base.is_nullish()) return false;
    if (base.is_string()) {
        const std::string& s = base.as_string();
        if (!key.is_symbol()) {
            if (key.name == "length") return true;
            size_t idx = array_index_of(key.name);
            if (idx != SIZE_MAX) return idx < detail::utf16_length(s);
        }
        ObjectPtr walk = string_proto_;
        while (walk) {
            if (walk->find_own(key) != nullptr) return true;
            walk = walk->prototype();
        }
        return false;
    }
    if (!base.is_object()) {
        ObjectPtr proto = base.is_number() ? number_proto_
                          : base.is_bool() ? boolean_proto_
                          : base.is_symbol() ? symbol_proto_
                                             : nullptr;
        while (proto) {
            if (proto->find_own(key) != nullptr) return true;
            proto = proto->prototype();
        }
        return false;
    }
    const ObjectPtr& obj = base.as_object();
    if (obj->kind() == ObjectKind::Mock) return true;  // mocks claim every member
    if (!key.is_symbol()) {
        if (ArrayObject* arr = as_array(base)) {
            if (key.name == "length") return true;
            size_t idx = array_index_of(key.name);
            if (idx != SIZE_MAX && idx < arr->elements.size()) return true;
        }
        if (FunctionObject* fn = as_function(base)) {
            (void)fn;
            if (key.name == "name" || key.name == "length" || key.name == "prototype") return true;
        }
    }
    ObjectPtr walk = obj;
    int guard = 0;
    while (walk && guard++ < 1000) {
        if (walk->find_own(key) != nullptr) return true;
        walk = walk->prototype();
    }
    return false;
}

inline bool Interpreter::delete_property(const Value& base, const PropertyKey& key) {
    if (!base.is_object()) return true;
    const ObjectPtr& obj = base.as_object();
    if (!key.is_symbol()) {
        if (ArrayObject* arr = as_array(base)) {
            size_t idx = array_index_of(key.name);
            if (idx != SIZE_MAX) {
                if (idx < arr->elements.size()) arr->elements[idx] = Value();
                arr->delete_own(key);
                return true;
            }
        }
    }
    return obj->delete_own(key);
}

// ---------------------------------------------------------------------------
// Mocks
// ---------------------------------------------------------------------------

inline MockPtr Interpreter::make_mock(std::string path, int depth, ObjectPtr wrapped) {
    heap_.charge(path.size());
    MockPtr mock = heap_.make<MockObject>();
    mock->path = std::move(path);
    mock->depth = depth;
    mock->wrapped = std::move(wrapped);
    return mock;
}

inline Value Interpreter::mock_trap_get(const MockPtr& mock, const PropertyKey& key,
                                        const SourceLocation& loc, bool silent) {
    const SourceLocation& at = loc.specifier.empty() ? current_loc_ : loc;
    Value result;
    bool found = false;
    if (PropertySlot* slot = mock->find_own(key)) {
        result = slot->value;
        found = true;
    } else if (mock->wrapped) {
        ObjectPtr walk = mock->wrapped;
        int guard = 0;
        while (walk && guard++ < 1000) {
            if (PropertySlot* slot = walk->find_own(key)) {
                if (slot->is_accessor) {
                    result = slot->getter
                                 ? call_value(Value(slot->getter), Value(mock->wrapped), {}, at)
                                 : Value();
                } else {
                    result = slot->value;
                }
                found = true;
                break;
            }
            walk = walk->prototype();
        }
    }
    if (!found) {
        std::string segment = key.is_symbol() ? "<computed>" : key.name;
        std::string child_path =
            mock->path.empty() ? segment : mock->path + "." + segment;
        if (mock->depth + 1 > static_cast<int>(config_.mock_depth_limit)) {
            // Fabrication past the depth limit yields undefined (not memoized,
            // so shallower re-entry through another alias still works).
        } else {
            MockPtr child = make_mock(child_path, mock->depth + 1);
            PropertySlot slot;
            slot.value = Value(std::static_pointer_cast<Object>(child));
            slot.enumerable = false;  // fabrications stay invisible to enumeration
            mock->define_own(key, std::move(slot));
            heap_.charge(Heap::kPropertyCost);
            result = Value(std::static_pointer_cast<Object>(child));
        }
    }
    if (!silent && !key.is_symbol()) {
        log_.log_get(mock->path + "." + key.name, at, result);
    }
    return result;
}

inline void Interpreter::mock_trap_set(const MockPtr& mock, const PropertyKey& key, Value v,
                                       const SourceLocation& loc, bool silent) {
    const SourceLocation& at = loc.specifier.empty() ? current_loc_ : loc;
    if (!silent && !key.is_symbol()) {
        log_.log_set(mock->path + "." + key.name, at, v);
    }
    heap_.charge(Heap::kPropertyCost);
    PropertySlot slot;
    slot.value = std::move(v);
    mock->define_own(key, std::move(slot));
}

inline Value Interpreter::mock_invoke(const MockPtr& mock, std::vector<Value>& args,
                                      const SourceLocation& loc, EventKind kind) {
    const SourceLocation& at = loc.specifier.empty() ? current_loc_ : loc;
    capture_callback_args(args);
    if (!mock->has_call_result) {
        if (mock->depth + 1 > static_cast<int>(config_.mock_depth_limit)) {
            mock->call_result = Value();
        } else {
            MockPtr child = make_mock(mock->path + "()", mock->depth + 1);
            mock->call_result = Value(std::static_pointer_cast<Object>(child));
        }
        mock->has_call_result = true;
    }
    log_.log_call(kind, mock->path, at, args, mock->call_result);
    return mock->call_result;
}

inline void Interpreter::capture_callback_args(const std::vector<Value>& args) {
    auto consider = [&](const Value& v) {
        FunctionObject* fn = as_function(v);
        if (fn == nullptr || fn->native != nullptr) return;
        if (!captured_callbacks_.insert(v.as_object().get()).second) return;
        Job job;
        job.fn = v.as_object();
        job.this_value = Value(global_);
        callbacks_.push_back(std::move(job));
    };
    for (const Value& arg : args) {
        consider(arg);
        if (!arg.is_object()) continue;
        if (ArrayObject* arr = as_array(arg)) {
            size_t n = std::min<size_t>(arr->elements.size(), 64);
            for (size_t i = 0; i < n; i++) consider(arr->elements[i]);
        } else if (arg.as_object()->kind() == ObjectKind::Plain) {
            size_t n = 0;
            for (const auto& [key, slot] : arg.as_object()->raw_props()) {
                if (key.is_symbol() || slot.is_accessor) continue;
                consider(slot.value);
                if (++n >= 64) break;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Host/guest boundary
// ---------------------------------------------------------------------------

inline Value Interpreter::host_to_guest(const HostValue& hv, const std::string& stub_path,
                                        int level) {
    switch (hv.kind) {
        case HostValue::Kind::Undefined:
            return Value();
        case HostValue::Kind::Null:
            return Value::null();
        case HostValue::Kind::Bool:
            return Value(hv.boolean);
        case HostValue::Kind::Number:
            return Value(hv.number);
        case HostValue::Kind::String:
            return heap_.str(hv.string);
        case HostValue::Kind::Array: {
            std::vector<Value> elems;
            elems.reserve(hv.array.size());
            for (const HostValue& item : hv.array) {
                elems.push_back(host_to_guest(item, stub_path, level + 2));
            }
            return Value(std::static_pointer_cast<Object>(make_array(std::move(elems))));
        }
        case HostValue::Kind::Map: {
            ObjectPtr obj = make_object();
            for (const auto& [name, member] : hv.map) {
                Value v;
                if (member.kind == HostValue::Kind::Function && level == 0) {
                    v = make_hook_stub(stub_path + "." + name, member.fn);
                } else {
                    v = host_to_guest(member, stub_path + "." + name, level + 1);
                }
                heap_.charge(Heap::kPropertyCost);
                obj->set_own(PropertyKey(name), std::move(v));
            }
            if (level == 0) {
                // Top-level object payloads live behind the membrane so member
                // access keeps producing events and missing members fabricate.
                MockPtr wrapper =
                    make_mock(stub_path, detail::path_depth(stub_path), obj);
                return Value(std::static_pointer_cast<Object>(wrapper));
            }
            return Value(obj);
        }
        case HostValue::Kind::Function:
            return make_hook_stub(stub_path, hv.fn);
        case HostValue::Kind::Promise: {
            PromisePtr p = make_promise();
            Value inner = hv.promised ? host_to_guest(*hv.promised, stub_path, level + 2) : Value();
            settle_promise(p, std::move(inner), /*fulfilled=*/true);
            return Value(std::static_pointer_cast<Object>(p));
        }
        case HostValue::Kind::MockRef: {
            auto it = mocks_by_id_.find(hv.mock_id);
            if (it != mocks_by_id_.end()) {
                if (MockPtr live = it->second.lock()) {
                    return Value(std::static_pointer_cast<Object>(live));
                }
            }
            std::string path = hv.mock_path.empty() ? "<host-ref>" : hv.mock_path;
            MockPtr mock = make_mock(path, detail::path_depth(path));
            return Value(std::static_pointer_cast<Object>(mock));
        }
        case HostValue::Kind::GuestFnRef: {
            auto it = guest_fns_by_id_.find(hv.mock_id);
            if (it != guest_fns_by_id_.end()) {
                if (ObjectPtr live = it->second.lock()) return Value(live);
            }
            return Value();
        }
    }
    return Value();
}

inline HostValue Interpreter::guest_to_host(const Value& v, int depth,
                                            std::set<const Object*>& seen) {
    if (v.is_undefined()) return HostValue::undefined();
    if (v.is_null()) return HostValue::null();
    if (v.is_bool()) return HostValue::of(v.as_bool());
    if (v.is_number()) return HostValue::of(v.as_number());
    if (v.is_string()) return HostValue::of(v.as_string());
    if (v.is_symbol()) {
        const JsSymbol& sym = v.as_symbol();
        return HostValue::of("Symbol(" + (sym.description ? *sym.description : "") + ")");
    }
    if (depth > 6) return HostValue::undefined();
    const ObjectPtr& obj = v.as_object();
    if (MockObject* mock = as_mock(v)) {
        uint64_t id = log_.ensure_id(obj);
        mocks_by_id_[id] = std::static_pointer_cast<MockObject>(obj);
        return HostValue::mock_ref(mock->path, id);
    }
    if (FunctionObject* fn = as_function(v)) {
        uint64_t id = log_.ensure_id(obj);
        guest_fns_by_id_[id] = obj;
        HostValue ref = HostValue::guest_fn_ref(fn->fn_name);
        ref.mock_id = id;
        return ref;
    }
    if (seen.count(obj.get()) != 0) return HostValue::undefined();
    seen.insert(obj.get());
    if (ArrayObject* arr = as_array(v)) {
        std::vector<HostValue> items;
        size_t n = std::min<size_t>(arr->elements.size(), 256);
        items.reserve(n);
        for (size_t i = 0; i < n; i++) items.push_back(guest_to_host(arr->elements[i], depth + 1, seen));
        seen.erase(obj.get());
        return HostValue::list(std::move(items));
    }
    if (obj->kind() == ObjectKind::Promise) {
        auto p = std::static_pointer_cast<PromiseObject>(obj);
        HostValue inner = p->state == PromiseObject::State::Fulfilled
                              ? guest_to_host(p->result, depth + 1, seen)
                              : HostValue::undefined();
        seen.erase(obj.get());
        return HostValue::promise(std::move(inner));
    }
    if (obj->kind() == ObjectKind::Date) {
        seen.erase(obj.get());
        return HostValue::of(std::static_pointer_cast<DateObject>(obj)->epoch_ms);
    }
    if (obj->kind() == ObjectKind::RegExp) {
        auto re = std::static_pointer_cast<RegExpObject>(obj);
        seen.erase(obj.get());
        return HostValue::of("/" + re->pattern + "/" + re->flags);
    }
    std::vector<std::pair<std::string, HostValue>> entries;
    size_t n = 0;
    for (const auto& [key, slot] : obj->raw_props()) {
        if (key.is_symbol() || slot.is_accessor || !slot.enumerable) continue;
        entries.emplace_back(key.name, guest_to_host(slot.value, depth + 1, seen));
        if (++n >= 128) break;
    }
    seen.erase(obj.get());
    return HostValue::object(std::move(entries));
}

inline Value Interpreter::make_hook_stub(const std::string& path, HostFunction fn) {
    std::string name = last_path_segment(path);
    FunctionPtr stub = native_fn(
        name,
        [this, fn, path](const NativeCallInfo& info) -> Value {
            std::vector<HostValue> hargs;
            hargs.reserve(info.args.size());
            for (const Value& a : info.args) {
                std::set<const Object*> seen;
                hargs.push_back(guest_to_host(a, 0, seen));
            }
            HostValue result;
            try {
                result = fn(hargs);
            } catch (const TerminationSignal&) {
                throw;
            } catch (const GuestThrow&) {
                throw;
            } catch (const std::exception& e) {
                throw_error("Error", std::string("hook failed: ") + e.what());
            }
            return host_to_guest(result, path + "()", 0);
        },
        0, path);
    stub->is_hook_stub = true;
    return Value(std::static_pointer_cast<Object>(stub));
}

// ---------------------------------------------------------------------------
// Hook realization
// ---------------------------------------------------------------------------

inline void Interpreter::realize_hooks() {
    for (const auto& [path, hook] : hooks_.all()) {
        switch (hook.kind) {
            case Hook::Kind::Reference: {
                if (path.find('.') != std::string::npos) {
                    throw HostError("reference hooks must be installed at a root name: " + path);
                }
                global_->delete_own(PropertyKey(path));
                ref_hooks_[path] = hook.ref_target;
                break;
            }
            case Hook::Kind::Value: {
                ref_hooks_.erase(path);
                install_hook_value(path, hook);
                break;
            }
            case Hook::Kind::Function: {
                ref_hooks_.erase(path);
                install_hook_value(path, hook);
                break;
            }
        }
    }
}

inline void Interpreter::install_hook_value(const std::string& path, const Hook& hook) {
    Value realized = hook.kind == Hook::Kind::Function
                         ? make_hook_stub(path, hook.fn)
                         : host_to_guest(hook.value, path, 0);
    std::vector<std::string> segs = detail::split_path(path);
    ObjectPtr cur = global_;
    std::string prefix;
    for (size_t i = 0; i + 1 < segs.size(); i++) {
        prefix += (i > 0 ? "." : "") + segs[i];
        PropertySlot* slot = cur->find_own(PropertyKey(segs[i]));
        if (slot != nullptr && !slot->is_accessor && slot->value.is_object()) {
            cur = slot->value.as_object();
            if (MockObject* m = as_mock(slot->value)) {
                (void)m;  // descending through an existing mock is fine
            }
        } else {
            MockPtr mid = make_mock(prefix, detail::path_depth(prefix));
            PropertySlot fresh;
            fresh.value = Value(std::static_pointer_cast<Object>(mid));
            fresh.enumerable = false;
            cur->define_own(PropertyKey(segs[i]), std::move(fresh));
            heap_.charge(Heap::kPropertyCost);
            cur = std::static_pointer_cast<Object>(mid);
        }
    }
    PropertySlot final_slot;
    final_slot.value = std::move(realized);
    final_slot.enumerable = false;
    cur->define_own(PropertyKey(segs.back()), std::move(final_slot));
    heap_.charge(Heap::kPropertyCost);
}

// ---------------------------------------------------------------------------
// Enumeration (for-in)
// ---------------------------------------------------------------------------

inline std::vector<std::string> Interpreter::enumerate_keys(const Value& v) {
    std::vector<std::string> out;
    if (v.is_string()) {
        size_t n = detail::utf16_length(v.as_string());
        for (size_t i = 0; i < n; i++) out.push_back(std::to_string(i));
        return out;
    }
    if (!v.is_object()) return out;
    std::set<std::string> taken;
    ObjectPtr walk = v.as_object();
    if (ArrayObject* arr = as_array(v)) {
        for (size_t i = 0; i < arr->elements.size(); i++) {
            out.push_back(std::to_string(i));
            taken.insert(out.back());
        }
    }
    int guard = 0;
    while (walk && guard++ < 1000) {
        for (const std::string& key : walk->own_string_keys(/*enumerable_only=*/true)) {
            if (taken.insert(key).second) out.push_back(key);
        }
        walk = walk->prototype();
    }
    return out;
}

}  // namespace mirage

#endif
