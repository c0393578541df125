#ifndef MIRAGE_EVENTS_HPP
#define MIRAGE_EVENTS_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "mirage/heap.hpp"
#include "mirage/objects.hpp"
#include "mirage/source.hpp"
#include "mirage/value.hpp"

namespace mirage {

using Json = nlohmann::ordered_json;

enum class EventKind { Get, Set, Call, Construct };

inline const char* event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::Get: return "Get";
        case EventKind::Set: return "Set";
        case EventKind::Call: return "Call";
        case EventKind::Construct: return "Construct";
    }
    return "?";
}

/// One logged guest interaction.
struct Event {
    uint64_t ordinal = 0;
    EventKind kind = EventKind::Get;
    std::string path;
    std::vector<Json> args;          // Call/Construct only
    std::optional<Json> value;       // Set only
    std::optional<uint64_t> returned_ref;
    SourceLocation location;
};

/// Identity record for an object referenced from a snapshot. `shallow` holds
/// a one-level primitive capture of plain objects/arrays taken at first
/// reference, so string extraction can look one level into structured
/// arguments.
struct ObjectRecord {
    uint64_t id = 0;
    std::string kind;   // "object" | "array" | "function" | "mock"
    std::string path;   // mocks only
    Json shallow;       // object: key → snapshot; array: list of snapshots
};

inline std::string last_path_segment(const std::string& path) {
    size_t dot = path.rfind('.');
    return dot == std::string::npos ? path : path.substr(dot + 1);
}

/// Accumulates events during a run. Owns the object-id counter shared by
/// snapshots and mock taint metadata; charges the heap estimate for
/// everything it retains.
class EventLog {
public:
    static constexpr size_t kMaxSnapshotString = 64 * 1024;
    static constexpr size_t kMaxShallowEntries = 128;

    explicit EventLog(Heap& heap) : heap_(&heap) {}

    const std::vector<Event>& events() const { return events_; }
    const std::vector<ObjectRecord>& objects() const { return objects_; }
    std::vector<Event> take_events() { return std::move(events_); }
    std::vector<ObjectRecord> take_objects() { return std::move(objects_); }

    void log_get(const std::string& path, const SourceLocation& loc, const Value& result) {
        Event e;
        e.kind = EventKind::Get;
        e.path = path;
        e.location = loc;
        if (result.is_object()) e.returned_ref = ensure_id(result.as_object());
        push(std::move(e));
    }

    void log_set(const std::string& path, const SourceLocation& loc, const Value& value) {
        Event e;
        e.kind = EventKind::Set;
        e.path = path;
        e.location = loc;
        e.value = snapshot(value);
        push(std::move(e));
    }

    /// Call events whose final segment is toString or valueOf are suppressed.
    void log_call(EventKind kind, const std::string& path, const SourceLocation& loc,
                  const std::vector<Value>& args, const Value& result) {
        std::string tail = last_path_segment(path);
        if (tail == "toString" || tail == "valueOf") return;
        Event e;
        e.kind = kind;
        e.path = path;
        e.location = loc;
        e.args.reserve(args.size());
        for (const Value& a : args) e.args.push_back(snapshot(a));
        if (result.is_object()) e.returned_ref = ensure_id(result.as_object());
        push(std::move(e));
    }

    /// Snapshot of a guest value: primitives inline, objects as {ref: id}.
    Json snapshot(const Value& v) { return snapshot_impl(v, /*depth=*/0); }

    /// Id for an object, creating its table record on first use.
    uint64_t ensure_id(const ObjectPtr& obj) { return ensure_id_impl(obj, 0); }

    uint64_t peek_next_id() const { return next_id_; }

private:
    void push(Event e) {
        // Rough retention charge: fixed overhead plus snapshot text.
        size_t bytes = 128 + e.path.size();
        for (const Json& a : e.args) bytes += a.is_string() ? a.get_ref<const std::string&>().size() : 32;
        if (e.value && e.value->is_string()) bytes += e.value->get_ref<const std::string&>().size();
        heap_->charge(bytes);
        e.ordinal = next_ordinal_++;
        events_.push_back(std::move(e));
    }

    Json snapshot_impl(const Value& v, int depth) {
        if (v.is_undefined()) return Json{{"undefined", true}};
        if (v.is_null()) return Json(nullptr);
        if (v.is_bool()) return Json(v.as_bool());
        if (v.is_number()) {
            double d = v.as_number();
            if (std::isnan(d)) return Json{{"number", "NaN"}};
            if (std::isinf(d)) return Json{{"number", d > 0 ? "Infinity" : "-Infinity"}};
            if (d == std::trunc(d) && std::fabs(d) <= 9007199254740992.0) {
                return Json(static_cast<int64_t>(d));
            }
            return Json(d);
        }
        if (v.is_string()) {
            const std::string& s = v.as_string();
            if (s.size() > kMaxSnapshotString) {
                return Json{{"string", s.substr(0, kMaxSnapshotString)}, {"truncated", true}};
            }
            return Json(s);
        }
        if (v.is_symbol()) {
            const JsSymbol& sym = v.as_symbol();
            return Json{{"symbol", sym.description ? *sym.description : ""}};
        }
        return Json{{"ref", ensure_id_impl(v.as_object(), depth)}};
    }

    uint64_t ensure_id_impl(const ObjectPtr& obj, int depth) {
        auto it = ids_.find(obj.get());
        if (it != ids_.end()) return it->second;
        heap_->charge(96);
        uint64_t id = next_id_++;
        ids_.emplace(obj.get(), id);

        ObjectRecord rec;
        rec.id = id;
        switch (obj->kind()) {
            case ObjectKind::Mock: {
                rec.kind = "mock";
                auto* mock = static_cast<MockObject*>(obj.get());
                mock->mock_id = id;
                rec.path = mock->path;
                break;
            }
            case ObjectKind::Array:
                rec.kind = "array";
                break;
            case ObjectKind::Function:
                rec.kind = "function";
                break;
            default:
                rec.kind = "object";
                break;
        }
        size_t slot = objects_.size();
        objects_.push_back(std::move(rec));
        // One-level capture for plain objects and arrays referenced directly
        // from an event. Runs after the record is registered so cycles
        // resolve to plain refs.
        if (depth == 0 &&
            (obj->kind() == ObjectKind::Array || obj->kind() == ObjectKind::Plain ||
             obj->kind() == ObjectKind::Error || obj->kind() == ObjectKind::Arguments)) {
            Json shallow = capture_shallow(obj);
            objects_[slot].shallow = std::move(shallow);
        }
        return id;
    }

    Json capture_shallow(const ObjectPtr& obj) {
        if (obj->kind() == ObjectKind::Array) {
            auto* arr = static_cast<ArrayObject*>(obj.get());
            Json out = Json::array();
            size_t n = std::min(arr->elements.size(), kMaxShallowEntries);
            for (size_t i = 0; i < n; i++) out.push_back(snapshot_impl(arr->elements[i], 1));
            return out;
        }
        Json out = Json::object();
        size_t count = 0;
        for (const auto& [key, slot] : obj->raw_props()) {
            if (key.is_symbol() || !slot.enumerable || slot.is_accessor) continue;
            if (++count > kMaxShallowEntries) break;
            out[key.name] = snapshot_impl(slot.value, 1);
        }
        return out;
    }

    Heap* heap_;
    std::vector<Event> events_;
    std::vector<ObjectRecord> objects_;
    std::unordered_map<const Object*, uint64_t> ids_;
    uint64_t next_ordinal_ = 0;
    uint64_t next_id_ = 1;
};

}  // namespace mirage

#endif
