#ifndef MIRAGE_REPORT_HPP
#define MIRAGE_REPORT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mirage/events.hpp"
#include "mirage/source.hpp"

namespace mirage {

enum class ExecutionStatus { completed, crashed, timeout, out_of_memory, budget_exhausted };

inline const char* status_name(ExecutionStatus s) {
    switch (s) {
        case ExecutionStatus::completed: return "completed";
        case ExecutionStatus::crashed: return "crashed";
        case ExecutionStatus::timeout: return "timeout";
        case ExecutionStatus::out_of_memory: return "out_of_memory";
        case ExecutionStatus::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

inline std::optional<ExecutionStatus> status_from_name(const std::string& s) {
    if (s == "completed") return ExecutionStatus::completed;
    if (s == "crashed") return ExecutionStatus::crashed;
    if (s == "timeout") return ExecutionStatus::timeout;
    if (s == "out_of_memory") return ExecutionStatus::out_of_memory;
    if (s == "budget_exhausted") return ExecutionStatus::budget_exhausted;
    return std::nullopt;
}

struct RunError {
    std::string message;
    SourceLocation location;
};

/// Immutable result of one sandbox run: the ordered event log, the object
/// table backing snapshot refs, termination status, and resource figures.
struct Report {
    std::string specifier;                 // entry specifier
    std::vector<std::string> specifiers;   // every loaded specifier
    std::string origin;
    ExecutionStatus status = ExecutionStatus::completed;
    std::optional<RunError> error;
    double wall_time_ms = 0;
    uint64_t peak_heap_bytes = 0;
    std::vector<Event> events;
    std::vector<ObjectRecord> objects;

    const std::vector<Event>& get_all() const { return events; }

    const ObjectRecord* find_object(uint64_t id) const {
        for (const auto& rec : objects) {
            if (rec.id == id) return &rec;
        }
        return nullptr;
    }

    /// Distinct Call/Construct paths rooted at a global name. Synthetic roots
    /// (`<computed>`, `<callback-arg>`, …) are not APIs and are skipped.
    std::set<std::string> extract_api_calls() const {
        std::set<std::string> out;
        for (const Event& e : events) {
            if (e.kind != EventKind::Call && e.kind != EventKind::Construct) continue;
            if (!e.path.empty() && e.path[0] != '<') out.insert(e.path);
        }
        return out;
    }

    /// Every string in Call/Construct arguments, including strings one level
    /// inside array/object argument snapshots. Multiset: repeats retained.
    std::multiset<std::string> extract_strings() const {
        std::multiset<std::string> out;
        auto take_string = [&out](const Json& snap) {
            if (snap.is_string()) {
                out.insert(snap.get<std::string>());
            } else if (snap.is_object() && snap.contains("truncated") && snap.contains("string")) {
                out.insert(snap["string"].get<std::string>());
            }
        };
        for (const Event& e : events) {
            if (e.kind != EventKind::Call && e.kind != EventKind::Construct) continue;
            for (const Json& arg : e.args) {
                take_string(arg);
                if (arg.is_object() && arg.contains("ref")) {
                    const ObjectRecord* rec = find_object(arg["ref"].get<uint64_t>());
                    if (rec == nullptr) continue;
                    if (rec->shallow.is_array()) {
                        for (const Json& item : rec->shallow) take_string(item);
                    } else if (rec->shallow.is_object()) {
                        for (const auto& [k, item] : rec->shallow.items()) take_string(item);
                    }
                }
            }
        }
        return out;
    }

    Json to_json() const {
        Json meta = Json::object();
        meta["specifier"] = specifier;
        meta["origin"] = origin;
        meta["status"] = status_name(status);
        meta["wall_time_ms"] = wall_time_ms;
        meta["peak_heap_bytes"] = peak_heap_bytes;
        if (error) {
            meta["error"] = Json{{"message", error->message},
                                 {"location", location_json(error->location)}};
        }
        if (!specifiers.empty()) meta["specifiers"] = specifiers;

        Json evs = Json::array();
        for (const Event& e : events) {
            Json je = Json::object();
            je["ordinal"] = e.ordinal;
            je["kind"] = event_kind_name(e.kind);
            je["path"] = e.path;
            if (e.kind == EventKind::Call || e.kind == EventKind::Construct) je["args"] = e.args;
            if (e.value) je["value"] = *e.value;
            if (e.returned_ref) je["returned_ref"] = *e.returned_ref;
            je["location"] = location_json(e.location);
            evs.push_back(std::move(je));
        }

        Json objs = Json::array();
        for (const ObjectRecord& rec : objects) {
            Json jo = Json::object();
            jo["id"] = rec.id;
            jo["kind"] = rec.kind;
            if (!rec.path.empty()) jo["path"] = rec.path;
            if (!rec.shallow.is_null()) jo["shallow"] = rec.shallow;
            objs.push_back(std::move(jo));
        }

        return Json{{"meta", std::move(meta)},
                    {"events", std::move(evs)},
                    {"objects", std::move(objs)}};
    }

    /// Canonical serialization: same report always yields identical bytes.
    /// Invalid UTF-8 (guest lone surrogates) is replaced, not fatal.
    std::string to_json_bytes(int indent = 2) const {
        return to_json().dump(indent, ' ', false, nlohmann::json::error_handler_t::replace);
    }

    static Report from_json(const Json& j) {
        Report r;
        const Json& meta = j.at("meta");
        r.specifier = meta.at("specifier").get<std::string>();
        r.origin = meta.at("origin").get<std::string>();
        if (auto s = status_from_name(meta.at("status").get<std::string>())) r.status = *s;
        r.wall_time_ms = meta.at("wall_time_ms").get<double>();
        r.peak_heap_bytes = meta.at("peak_heap_bytes").get<uint64_t>();
        if (meta.contains("error")) {
            RunError err;
            err.message = meta["error"].at("message").get<std::string>();
            err.location = location_from_json(meta["error"].at("location"));
            r.error = std::move(err);
        }
        if (meta.contains("specifiers")) {
            r.specifiers = meta["specifiers"].get<std::vector<std::string>>();
        }
        for (const Json& je : j.at("events")) {
            Event e;
            e.ordinal = je.at("ordinal").get<uint64_t>();
            std::string kind = je.at("kind").get<std::string>();
            if (kind == "Get") e.kind = EventKind::Get;
            else if (kind == "Set") e.kind = EventKind::Set;
            else if (kind == "Call") e.kind = EventKind::Call;
            else if (kind == "Construct") e.kind = EventKind::Construct;
            e.path = je.at("path").get<std::string>();
            if (je.contains("args")) e.args = std::vector<Json>(je["args"].begin(), je["args"].end());
            if (je.contains("value")) e.value = je["value"];
            if (je.contains("returned_ref")) e.returned_ref = je["returned_ref"].get<uint64_t>();
            e.location = location_from_json(je.at("location"));
            r.events.push_back(std::move(e));
        }
        if (j.contains("objects")) {
            for (const Json& jo : j["objects"]) {
                ObjectRecord rec;
                rec.id = jo.at("id").get<uint64_t>();
                rec.kind = jo.at("kind").get<std::string>();
                if (jo.contains("path")) rec.path = jo["path"].get<std::string>();
                if (jo.contains("shallow")) rec.shallow = jo["shallow"];
                r.objects.push_back(std::move(rec));
            }
        }
        return r;
    }

private:
    static Json location_json(const SourceLocation& loc) {
        return Json{{"specifier", loc.specifier}, {"line", loc.line}, {"column", loc.column}};
    }
    static SourceLocation location_from_json(const Json& j) {
        return SourceLocation{j.at("specifier").get<std::string>(), j.at("line").get<uint32_t>(),
                              j.at("column").get<uint32_t>()};
    }
};

}  // namespace mirage

#endif
