#ifndef MIRAGE_HOOKS_HPP
#define MIRAGE_HOOKS_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mirage/source.hpp"

namespace mirage {

struct HostValue;
/// Host-side callable installed behind a guest stub. Receives serialized
/// guest arguments and returns a value cloned back into the sandbox.
using HostFunction = std::function<HostValue(std::vector<HostValue>&)>;

/// Serializable tree crossing the host/guest boundary. Functions are legal
/// only as first-level members of a Map payload (each becomes a guest stub)
/// or as a FunctionPayload hook itself. MockRef/GuestFnRef appear only on the
/// guest-to-host direction.
struct HostValue {
    enum class Kind {
        Undefined, Null, Bool, Number, String, Array, Map, Function, Promise,
        MockRef, GuestFnRef
    };

    Kind kind = Kind::Undefined;
    bool boolean = false;
    double number = 0;
    std::string string;  // String; GuestFnRef function name
    std::vector<HostValue> array;
    std::vector<std::pair<std::string, HostValue>> map;
    HostFunction fn;
    std::shared_ptr<HostValue> promised;
    std::string mock_path;
    uint64_t mock_id = 0;

    HostValue() = default;

    static HostValue undefined() { return HostValue(); }
    static HostValue null() {
        HostValue v;
        v.kind = Kind::Null;
        return v;
    }
    static HostValue of(bool b) {
        HostValue v;
        v.kind = Kind::Bool;
        v.boolean = b;
        return v;
    }
    static HostValue of(double d) {
        HostValue v;
        v.kind = Kind::Number;
        v.number = d;
        return v;
    }
    static HostValue of(int i) { return of(static_cast<double>(i)); }
    static HostValue of(std::string s) {
        HostValue v;
        v.kind = Kind::String;
        v.string = std::move(s);
        return v;
    }
    static HostValue of(const char* s) { return of(std::string(s)); }
    static HostValue list(std::vector<HostValue> items) {
        HostValue v;
        v.kind = Kind::Array;
        v.array = std::move(items);
        return v;
    }
    static HostValue object(std::vector<std::pair<std::string, HostValue>> entries) {
        HostValue v;
        v.kind = Kind::Map;
        v.map = std::move(entries);
        return v;
    }
    static HostValue function(HostFunction f) {
        HostValue v;
        v.kind = Kind::Function;
        v.fn = std::move(f);
        return v;
    }
    static HostValue promise(HostValue resolved) {
        HostValue v;
        v.kind = Kind::Promise;
        v.promised = std::make_shared<HostValue>(std::move(resolved));
        return v;
    }
    static HostValue mock_ref(std::string path, uint64_t id) {
        HostValue v;
        v.kind = Kind::MockRef;
        v.mock_path = std::move(path);
        v.mock_id = id;
        return v;
    }
    static HostValue guest_fn_ref(std::string name) {
        HostValue v;
        v.kind = Kind::GuestFnRef;
        v.string = std::move(name);
        return v;
    }

    static HostValue from_json(const nlohmann::ordered_json& j) {
        if (j.is_null()) return null();
        if (j.is_boolean()) return of(j.get<bool>());
        if (j.is_number()) return of(j.get<double>());
        if (j.is_string()) return of(j.get<std::string>());
        if (j.is_array()) {
            HostValue v;
            v.kind = Kind::Array;
            for (const auto& item : j) v.array.push_back(from_json(item));
            return v;
        }
        if (j.is_object()) {
            HostValue v;
            v.kind = Kind::Map;
            for (const auto& [key, item] : j.items()) v.map.emplace_back(key, from_json(item));
            return v;
        }
        return undefined();
    }
};

struct Hook {
    enum class Kind { Value, Function, Reference };
    Kind kind = Kind::Value;
    HostValue value;
    HostFunction fn;
    std::string ref_target;  // empty string targets the global scope itself
};

inline bool is_valid_hook_path(const std::string& path) {
    if (path.empty()) return false;
    size_t seg_len = 0;
    for (char c : path) {
        if (c == '.') {
            if (seg_len == 0) return false;
            seg_len = 0;
        } else {
            seg_len++;
        }
    }
    return seg_len > 0;
}

/// Installed hooks, path → payload. Later installs replace earlier ones.
class HookSet {
public:
    /// Default rewiring: globalThis aliases point at the global scope,
    /// `chrome` forwards to `browser`, and `require` is plain undefined so
    /// CommonJS loaders fail loudly unless the host provides one.
    static HookSet defaults() {
        HookSet set;
        for (const char* alias : {"window", "self", "top", "parent", "frames", "globalThis"}) {
            set.set_reference(alias, "");
        }
        set.set_reference("chrome", "browser");
        set.set_value("require", HostValue::undefined());
        return set;
    }

    void set_value(const std::string& path, HostValue value) {
        check_path(path);
        validate_value_payload(value, 0);
        Hook h;
        h.kind = Hook::Kind::Value;
        h.value = std::move(value);
        hooks_[path] = std::move(h);
    }

    void set_function(const std::string& path, HostFunction fn) {
        check_path(path);
        Hook h;
        h.kind = Hook::Kind::Function;
        h.fn = std::move(fn);
        hooks_[path] = std::move(h);
    }

    void set_reference(const std::string& path, std::string target) {
        check_path(path);
        if (!target.empty() && !is_valid_hook_path(target)) {
            throw InvalidHookPath("invalid reference target: " + target);
        }
        Hook h;
        h.kind = Hook::Kind::Reference;
        h.ref_target = std::move(target);
        hooks_[path] = std::move(h);
    }

    void remove(const std::string& path) { hooks_.erase(path); }
    void clear() { hooks_.clear(); }

    /// Copies every hook from `overlay` into this set, replacing same-path
    /// entries. Hooks only the overlay lacks are kept.
    void merge(const HookSet& overlay) {
        for (const auto& [path, hook] : overlay.hooks_) hooks_[path] = hook;
    }

    const Hook* find(const std::string& path) const {
        auto it = hooks_.find(path);
        return it == hooks_.end() ? nullptr : &it->second;
    }

    const std::map<std::string, Hook>& all() const { return hooks_; }

    /// File format: {"path": {"value": <json>} | {"ref": "target"}}.
    void load_json(const nlohmann::ordered_json& j) {
        if (!j.is_object()) throw HostError("hooks file must be a JSON object");
        for (const auto& [path, spec] : j.items()) {
            if (!spec.is_object()) {
                throw HostError("hook entry for '" + path + "' must be an object");
            }
            bool has_value = spec.contains("value");
            bool has_ref = spec.contains("ref");
            if (has_value == has_ref) {
                throw HostError("hook entry for '" + path +
                                "' needs exactly one of \"value\" or \"ref\"");
            }
            if (has_ref) {
                if (!spec["ref"].is_string()) {
                    throw HostError("hook ref for '" + path + "' must be a string");
                }
                set_reference(path, spec["ref"].get<std::string>());
            } else {
                set_value(path, HostValue::from_json(spec["value"]));
            }
        }
    }

private:
    static void check_path(const std::string& path) {
        if (!is_valid_hook_path(path)) throw InvalidHookPath("invalid hook path: '" + path + "'");
    }

    /// Function members are legal only at the first level of the top Map.
    static void validate_value_payload(const HostValue& v, int depth) {
        switch (v.kind) {
            case HostValue::Kind::Function:
                if (depth != 1) {
                    throw NonSerializable(
                        "function members are only allowed at the first level of a value payload");
                }
                return;
            case HostValue::Kind::MockRef:
            case HostValue::Kind::GuestFnRef:
                throw NonSerializable("guest references cannot be installed as value payloads");
            case HostValue::Kind::Array:
                for (const HostValue& item : v.array) validate_value_payload(item, depth + 2);
                return;
            case HostValue::Kind::Map:
                for (const auto& [key, item] : v.map) validate_value_payload(item, depth + 1);
                return;
            case HostValue::Kind::Promise:
                if (v.promised) validate_value_payload(*v.promised, depth + 2);
                return;
            default:
                return;
        }
    }

    std::map<std::string, Hook> hooks_;
};

}  // namespace mirage

#endif
