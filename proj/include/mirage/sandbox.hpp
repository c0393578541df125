#ifndef MIRAGE_SANDBOX_HPP
#define MIRAGE_SANDBOX_HPP

#include <chrono>
#include <memory>
#include <string>
#include <utility>

#include "mirage/config.hpp"
#include "mirage/hooks.hpp"
#include "mirage/interpreter.hpp"
#include "mirage/report.hpp"

namespace mirage {

namespace detail {

/// Strict UTF-8 well-formedness check (RFC 3629 ranges, no surrogates, no
/// overlongs). Guest sources must be valid UTF-8 before parsing.
inline bool is_valid_utf8(const std::string& s) {
    size_t i = 0;
    const size_t n = s.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 0x80) {
            i++;
            continue;
        }
        size_t len;
        uint32_t cp;
        if ((c & 0xE0) == 0xC0) {
            len = 2;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            len = 3;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            len = 4;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + len > n) return false;
        for (size_t k = 1; k < len; k++) {
            unsigned char cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (len == 2 && cp < 0x80) return false;
        if (len == 3 && cp < 0x800) return false;
        if (len == 4 && cp < 0x10000) return false;
        if (cp > 0x10FFFF) return false;
        if (cp >= 0xD800 && cp <= 0xDFFF) return false;
        i += len;
    }
    return true;
}

/// Renders a thrown guest value as an error string without running any guest
/// code (no toString calls — crashed runs must not re-enter the guest).
inline std::string describe_thrown(const Value& v) {
    if (v.is_string()) return v.as_string();
    if (v.is_number()) return js_number_to_string(v.as_number());
    if (v.is_bool()) return v.as_bool() ? "true" : "false";
    if (v.is_undefined()) return "undefined";
    if (v.is_null()) return "null";
    if (v.is_symbol()) {
        const JsStringPtr& desc = v.as_symbol().description;
        return "Symbol(" + (desc ? *desc : std::string()) + ")";
    }
    ObjectPtr obj = v.as_object();
    if (obj->kind() == ObjectKind::Error) {
        std::string name = obj->class_name();
        const PropertySlot* n = obj->find_own(PropertyKey("name"));
        if (n != nullptr && !n->is_accessor && n->value.is_string()) {
            name = n->value.as_string();
        }
        const PropertySlot* m = obj->find_own(PropertyKey("message"));
        if (m != nullptr && !m->is_accessor && m->value.is_string() &&
            !m->value.as_string().empty()) {
            return name + ": " + m->value.as_string();
        }
        return name;
    }
    return "[object " + obj->class_name() + "]";
}

}  // namespace detail

/// Runs guest sources in isolation and returns a Report per run. Every run
/// gets a fresh interpreter, global object, and event log, so a Sandbox can
/// be reused sequentially without state bleeding between runs. run() never
/// throws for guest-side failures — crashes, timeouts, memory and budget
/// exhaustion all come back as Report.status. Only host-side misuse
/// (invalid config or hooks) raises HostError.
class Sandbox {
public:
    explicit Sandbox(SandboxConfig config = {}, const HookSet& hooks = {},
                     ModuleResolver resolver = nullptr)
        : config_(std::move(config)), hooks_(HookSet::defaults()), resolver_(std::move(resolver)) {
        hooks_.merge(hooks);
        config_.validate();
    }

    const SandboxConfig& config() const { return config_; }

    /// Convenience overload: wraps code in a SourceText with the configured
    /// source type.
    Report run(std::string code, std::string specifier = "main.js") {
        return run(SourceText(std::move(specifier), std::move(code), config_.source_type));
    }

    Report run(const SourceText& entry) {
        auto t0 = std::chrono::steady_clock::now();

        Report report;
        report.origin = config_.origin;
        report.specifier = absolute_specifier(entry.specifier);

        interp_ = std::make_unique<Interpreter>(config_, hooks_, resolver_);

        ExecutionStatus status = ExecutionStatus::completed;
        std::optional<RunError> error;

        const std::string& body = entry.body ? *entry.body : empty_body();
        if (!detail::is_valid_utf8(body)) {
            status = ExecutionStatus::crashed;
            error = RunError{"Invalid or incomplete UTF-8 in source",
                             SourceLocation{report.specifier, 1, 1}};
        } else {
            interp_->arm_limits();
            try {
                if (entry.source_type == SourceType::module_) {
                    interp_->execute_module_entry(entry);
                } else {
                    ParsedSourcePtr unit =
                        parse_source(body, report.specifier, SourceType::script);
                    interp_->heap().charge(body.size());
                    interp_->execute_script(unit, report.specifier);
                }
            } catch (const GuestThrow& gt) {
                status = ExecutionStatus::crashed;
                error = RunError{detail::describe_thrown(gt.value), interp_->current_location()};
            } catch (const ParseError& pe) {
                status = ExecutionStatus::crashed;
                error = RunError{std::string("SyntaxError: ") + pe.what(), pe.location};
            } catch (const TerminationSignal& ts) {
                status = status_of(ts.reason);
            }

            // Captured callbacks and pending reactions still run after normal
            // completion and after a crash; a run that already blew a resource
            // limit is not given more fuel.
            if (status == ExecutionStatus::completed || status == ExecutionStatus::crashed) {
                try {
                    interp_->drain_jobs();
                } catch (const GuestThrow&) {
                    // A straggler throw outside any job boundary never
                    // overrides the run's primary outcome.
                } catch (const TerminationSignal& ts) {
                    if (status == ExecutionStatus::completed) status = status_of(ts.reason);
                }
            }
        }

        report.status = status;
        report.error = std::move(error);
        report.specifiers = interp_->loaded_specifiers();
        report.events = interp_->log().take_events();
        report.objects = interp_->log().take_objects();
        report.peak_heap_bytes = interp_->heap().used();
        auto t1 = std::chrono::steady_clock::now();
        report.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

        dispose();
        return report;
    }

    /// Releases the interpreter from the last run. Safe to call repeatedly;
    /// run() disposes automatically, so this only matters for early teardown.
    void dispose() { interp_.reset(); }

private:
    static ExecutionStatus status_of(TerminationReason reason) {
        switch (reason) {
            case TerminationReason::Timeout: return ExecutionStatus::timeout;
            case TerminationReason::BudgetExhausted: return ExecutionStatus::budget_exhausted;
            case TerminationReason::OutOfMemory: return ExecutionStatus::out_of_memory;
        }
        return ExecutionStatus::crashed;
    }

    static const std::string& empty_body() {
        static const std::string kEmpty;
        return kEmpty;
    }

    std::string absolute_specifier(const std::string& spec) const {
        if (Url::try_parse(spec)) return spec;
        return config_.origin_url().join(spec).to_string();
    }

    SandboxConfig config_;
    HookSet hooks_;
    ModuleResolver resolver_;
    std::unique_ptr<Interpreter> interp_;
};

}  // namespace mirage

#endif
