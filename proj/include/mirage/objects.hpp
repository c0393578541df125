#ifndef MIRAGE_OBJECTS_HPP
#define MIRAGE_OBJECTS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mirage/ast.hpp"
#include "mirage/value.hpp"

namespace mirage {

class Interpreter;

struct PropertyKey {
    std::string name;       // string key, or symbol description for debugging
    uint32_t symbol_id = 0;  // non-zero for symbol keys

    PropertyKey() = default;
    PropertyKey(const char* n) : name(n) {}
    PropertyKey(std::string n) : name(std::move(n)) {}
    PropertyKey(const JsSymbol& s)
        : name(s.description ? *s.description : ""), symbol_id(s.id) {}

    bool is_symbol() const { return symbol_id != 0; }
    bool operator==(const PropertyKey& o) const {
        if (symbol_id != o.symbol_id) return false;
        return symbol_id != 0 || name == o.name;
    }
};

struct PropertyKeyHash {
    size_t operator()(const PropertyKey& k) const {
        if (k.symbol_id != 0) return std::hash<uint32_t>{}(k.symbol_id) * 0x9E3779B9u;
        return std::hash<std::string>{}(k.name);
    }
};

struct PropertySlot {
    Value value;
    ObjectPtr getter;
    ObjectPtr setter;
    bool is_accessor = false;
    bool enumerable = true;
    bool writable = true;
    bool configurable = true;
};

enum class ObjectKind {
    Plain,
    Array,
    Function,
    Mock,
    Promise,
    Date,
    RegExp,
    Error,
    Arguments,
    Symbol,     // boxed primitive wrappers are not distinguished; Symbol() results live here
    Namespace,  // module namespace
    BoxedPrimitive,
};

/// Base heap object with insertion-ordered properties.
class Object : public std::enable_shared_from_this<Object> {
public:
    explicit Object(ObjectKind kind = ObjectKind::Plain) : kind_(kind) {}
    virtual ~Object() = default;

    ObjectKind kind() const { return kind_; }
    const std::string& class_name() const { return class_name_; }
    void set_class_name(std::string n) { class_name_ = std::move(n); }

    // Non-empty on objects sitting behind the event membrane under a global
    // name (built-in globals, their static members, hook stubs). Gets, sets,
    // and calls involving such objects are logged under this path.
    std::string event_path;

    const ObjectPtr& prototype() const { return prototype_; }
    void set_prototype(ObjectPtr p) { prototype_ = std::move(p); }

    bool extensible() const { return extensible_; }
    void prevent_extensions() { extensible_ = false; }

    PropertySlot* find_own(const PropertyKey& key) {
        auto it = index_.find(key);
        return it == index_.end() ? nullptr : &props_[it->second].second;
    }
    const PropertySlot* find_own(const PropertyKey& key) const {
        auto it = index_.find(key);
        return it == index_.end() ? nullptr : &props_[it->second].second;
    }

    /// Create-or-overwrite with full slot control.
    void define_own(const PropertyKey& key, PropertySlot slot) {
        auto it = index_.find(key);
        if (it != index_.end()) {
            props_[it->second].second = std::move(slot);
            return;
        }
        index_.emplace(key, props_.size());
        props_.emplace_back(key, std::move(slot));
    }

    /// Plain data write ignoring accessors (callers handle setters first).
    void set_own(const PropertyKey& key, Value v) {
        auto it = index_.find(key);
        if (it != index_.end()) {
            PropertySlot& slot = props_[it->second].second;
            slot.value = std::move(v);
            slot.is_accessor = false;
            slot.getter.reset();
            slot.setter.reset();
            return;
        }
        PropertySlot slot;
        slot.value = std::move(v);
        index_.emplace(key, props_.size());
        props_.emplace_back(key, std::move(slot));
    }

    bool delete_own(const PropertyKey& key) {
        auto it = index_.find(key);
        if (it == index_.end()) return true;
        size_t pos = it->second;
        if (!props_[pos].second.configurable) return false;
        props_.erase(props_.begin() + static_cast<ptrdiff_t>(pos));
        index_.erase(it);
        for (auto& [k, i] : index_) {
            if (i > pos) i--;
        }
        return true;
    }

    /// Own string keys in spec order: canonical indices ascending, then
    /// insertion order. Symbols excluded.
    std::vector<std::string> own_string_keys(bool enumerable_only) const {
        std::vector<std::pair<size_t, std::string>> indexed;
        std::vector<std::string> rest;
        for (const auto& [key, slot] : props_) {
            if (key.is_symbol()) continue;
            if (enumerable_only && !slot.enumerable) continue;
            size_t idx = array_index_of(key.name);
            if (idx != SIZE_MAX) {
                indexed.emplace_back(idx, key.name);
            } else {
                rest.push_back(key.name);
            }
        }
        std::sort(indexed.begin(), indexed.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::string> out;
        out.reserve(indexed.size() + rest.size());
        for (auto& [i, name] : indexed) out.push_back(std::move(name));
        for (auto& name : rest) out.push_back(std::move(name));
        return out;
    }

    std::vector<PropertyKey> own_symbol_keys() const {
        std::vector<PropertyKey> out;
        for (const auto& [key, slot] : props_) {
            if (key.is_symbol()) out.push_back(key);
        }
        return out;
    }

    const std::vector<std::pair<PropertyKey, PropertySlot>>& raw_props() const { return props_; }

    /// Drops every reference this object holds. Used by the sandbox teardown
    /// sweep to break shared_ptr cycles.
    virtual void clear_for_teardown() {
        props_.clear();
        index_.clear();
        prototype_.reset();
    }

private:
    ObjectKind kind_;
    ObjectPtr prototype_;
    std::vector<std::pair<PropertyKey, PropertySlot>> props_;
    std::unordered_map<PropertyKey, size_t, PropertyKeyHash> index_;
    std::string class_name_ = "Object";
    bool extensible_ = true;
};

// ---- arrays ----

class ArrayObject : public Object {
public:
    ArrayObject() : Object(ObjectKind::Array) { set_class_name("Array"); }

    std::vector<Value> elements;

    size_t length() const { return std::max(elements.size(), sparse_length_); }
    void note_sparse_index(size_t idx) { sparse_length_ = std::max(sparse_length_, idx + 1); }
    void set_length(size_t n) {
        if (n < elements.size()) elements.resize(n);
        sparse_length_ = n > elements.size() ? n : 0;
    }

    void clear_for_teardown() override {
        elements.clear();
        Object::clear_for_teardown();
    }

private:
    size_t sparse_length_ = 0;
};

// ---- environments ----

class EnvRecord;

struct Binding {
    Value value;
    bool is_mutable = true;
    bool initialized = true;
    // Module import bindings alias a binding in the exporting module's scope.
    std::shared_ptr<EnvRecord> import_env;
    std::string import_name;
};

class FunctionObject;

class EnvRecord : public std::enable_shared_from_this<EnvRecord> {
public:
    using Ptr = std::shared_ptr<EnvRecord>;

    explicit EnvRecord(Ptr parent = nullptr) : parent_(std::move(parent)) {}

    Binding* find_local(const std::string& name) {
        auto it = bindings_.find(name);
        return it == bindings_.end() ? nullptr : &it->second;
    }
    Binding* find(const std::string& name) {
        for (EnvRecord* env = this; env != nullptr; env = env->parent_.get()) {
            if (Binding* b = env->find_local(name)) return b;
        }
        return nullptr;
    }

    void declare(const std::string& name, Value v, bool is_mutable = true,
                 bool initialized = true) {
        auto it = bindings_.find(name);
        if (it != bindings_.end()) {
            it->second.value = std::move(v);
            it->second.initialized = initialized;
            return;
        }
        bindings_.emplace(name, Binding{std::move(v), is_mutable, initialized});
    }

    const Ptr& parent() const { return parent_; }

    // Function-scope extras; arrows skip these so lookup walks outward.
    bool has_this = false;
    Value this_value;
    Value new_target;
    ObjectPtr home_object;
    bool is_function_scope = false;

    void clear_for_teardown() {
        bindings_.clear();
        this_value = Value();
        new_target = Value();
        home_object.reset();
        parent_.reset();
    }

    std::unordered_map<std::string, Binding>& bindings() { return bindings_; }

private:
    Ptr parent_;
    std::unordered_map<std::string, Binding> bindings_;
};

using EnvPtr = EnvRecord::Ptr;

// ---- functions ----

/// Context handed to native functions.
struct NativeCallInfo {
    Interpreter& interp;
    Value this_value;
    std::vector<Value>& args;
    Value new_target;  // undefined for plain calls

    Value arg(size_t i) const { return i < args.size() ? args[i] : Value(); }
};

using NativeFn = std::function<Value(const NativeCallInfo&)>;

class FunctionObject : public Object {
public:
    FunctionObject() : Object(ObjectKind::Function) { set_class_name("Function"); }

    // Declared functions
    const FunctionNode* decl = nullptr;
    ParsedSourcePtr source;
    EnvPtr closure;
    ObjectPtr home_object;  // methods: for super lookups

    // Natives
    NativeFn native;

    // bind() results
    ObjectPtr bound_target;
    Value bound_this;
    std::vector<Value> bound_args;

    // Classes
    bool is_class_constructor = false;
    const ClassNode* class_decl = nullptr;  // for field initializers
    ObjectPtr parent_class;                 // derived-class super constructor

    std::string fn_name;
    size_t param_count = 0;
    bool is_arrow = false;
    bool is_async = false;
    bool is_hook_stub = false;  // host-backed stub: calls capture callback args

    void clear_for_teardown() override {
        closure.reset();
        source.reset();
        home_object.reset();
        native = nullptr;
        bound_target.reset();
        bound_this = Value();
        bound_args.clear();
        parent_class.reset();
        Object::clear_for_teardown();
    }
};

using FunctionPtr = std::shared_ptr<FunctionObject>;

// ---- mocks ----

/// A fabricated stand-in for an API the sandbox does not provide. Children,
/// call results, and construct results are memoized so repeated access yields
/// identical objects. `wrapped` carries a hook-provided backing object whose
/// real properties take precedence over fabrication.
class MockObject : public Object {
public:
    MockObject() : Object(ObjectKind::Mock) { set_class_name("Mock"); }

    std::string path;
    uint64_t mock_id = 0;
    int depth = 0;
    ObjectPtr wrapped;       // non-null for wrapped hook values
    Value call_result;       // memo for invocation
    bool has_call_result = false;
    Value construct_result;  // memo for `new`
    bool has_construct_result = false;

    void clear_for_teardown() override {
        wrapped.reset();
        call_result = Value();
        construct_result = Value();
        Object::clear_for_teardown();
    }
};

using MockPtr = std::shared_ptr<MockObject>;

// ---- promises ----

class PromiseObject : public Object {
public:
    PromiseObject() : Object(ObjectKind::Promise) { set_class_name("Promise"); }

    enum class State { Pending, Fulfilled, Rejected };
    State state = State::Pending;
    Value result;

    struct Reaction {
        ObjectPtr on_fulfilled;  // may be null
        ObjectPtr on_rejected;   // may be null
        ObjectPtr next;          // chained promise
    };
    std::vector<Reaction> reactions;
    bool handled = false;

    void clear_for_teardown() override {
        result = Value();
        reactions.clear();
        Object::clear_for_teardown();
    }
};

using PromisePtr = std::shared_ptr<PromiseObject>;

// ---- dates, regexps, errors ----

class DateObject : public Object {
public:
    DateObject() : Object(ObjectKind::Date) { set_class_name("Date"); }
    double epoch_ms = 0;
};

class RegExpObject : public Object {
public:
    RegExpObject() : Object(ObjectKind::RegExp) { set_class_name("RegExp"); }
    std::string pattern;
    std::string flags;
    double last_index = 0;
    bool global() const { return flags.find('g') != std::string::npos; }
    bool ignore_case() const { return flags.find('i') != std::string::npos; }
    bool sticky() const { return flags.find('y') != std::string::npos; }
};

class ErrorObject : public Object {
public:
    ErrorObject() : Object(ObjectKind::Error) { set_class_name("Error"); }
};

class BoxedObject : public Object {
public:
    BoxedObject() : Object(ObjectKind::BoxedPrimitive) {}
    Value primitive;
    void clear_for_teardown() override {
        primitive = Value();
        Object::clear_for_teardown();
    }
};

inline bool is_callable(const Value& v) {
    if (!v.is_object()) return false;
    ObjectKind k = v.as_object()->kind();
    return k == ObjectKind::Function || k == ObjectKind::Mock;
}

inline FunctionObject* as_function(const Value& v) {
    if (!v.is_object() || v.as_object()->kind() != ObjectKind::Function) return nullptr;
    return static_cast<FunctionObject*>(v.as_object().get());
}

inline MockObject* as_mock(const Value& v) {
    if (!v.is_object() || v.as_object()->kind() != ObjectKind::Mock) return nullptr;
    return static_cast<MockObject*>(v.as_object().get());
}

inline ArrayObject* as_array(const Value& v) {
    if (!v.is_object() || v.as_object()->kind() != ObjectKind::Array) return nullptr;
    return static_cast<ArrayObject*>(v.as_object().get());
}

inline BoxedObject* as_boxed(const Value& v) {
    if (!v.is_object() || v.as_object()->kind() != ObjectKind::BoxedPrimitive) return nullptr;
    return static_cast<BoxedObject*>(v.as_object().get());
}

inline RegExpObject* as_regexp(const Value& v) {
    if (!v.is_object() || v.as_object()->kind() != ObjectKind::RegExp) return nullptr;
    return static_cast<RegExpObject*>(v.as_object().get());
}

inline DateObject* as_date(const Value& v) {
    if (!v.is_object() || v.as_object()->kind() != ObjectKind::Date) return nullptr;
    return static_cast<DateObject*>(v.as_object().get());
}

inline PromiseObject* as_promise(const Value& v) {
    if (!v.is_object() || v.as_object()->kind() != ObjectKind::Promise) return nullptr;
    return static_cast<PromiseObject*>(v.as_object().get());
}

}  // namespace mirage

#endif
