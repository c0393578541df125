#ifndef MIRAGE_INTERPRETER_HPP
#define MIRAGE_INTERPRETER_HPP

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mirage/ast.hpp"
#include "mirage/config.hpp"
#include "mirage/events.hpp"
#include "mirage/heap.hpp"
#include "mirage/hooks.hpp"
#include "mirage/objects.hpp"
#include "mirage/parser.hpp"
#include "mirage/url.hpp"
#include "mirage/value.hpp"

namespace mirage {

/// Resolver contract: absolute URL in, source bytes out; std::nullopt means
/// the module does not exist.
using ModuleResolver = std::function<std::optional<std::vector<uint8_t>>(const Url&)>;

// Statement-completion signals (strictly internal control flow).
struct BreakSignal {};
struct ContinueSignal {};
struct ReturnSignal {
    Value value;
};

/// Tree-walking evaluator plus the mocking membrane, hooks, job queue, and
/// module graph machinery. One instance per sandbox run-scope; strictly
/// single-threaded.
class Interpreter {
public:
    Interpreter(const SandboxConfig& config, const HookSet& hooks, ModuleResolver resolver);

    // ---- top-level driving (used by Sandbox) ----
    void arm_limits();
    void execute_script(const ParsedSourcePtr& unit, const std::string& specifier);
    void execute_module_entry(const SourceText& text);
    size_t drain_jobs();

    EventLog& log() { return log_; }
    Heap& heap() { return heap_; }
    ExecutionLimits& limits() { return limits_; }
    const std::vector<std::string>& loaded_specifiers() const { return loaded_specifiers_; }
    const SourceLocation& current_location() const { return current_loc_; }
    const ObjectPtr& global() const { return global_; }
    const EnvPtr& global_env() const { return global_env_; }

    // ---- identifier and property protocol (the membrane lives here) ----
    Value resolve_identifier(const std::string& name, const EnvPtr& env, const Node* where);
    void assign_identifier(const std::string& name, Value v, const EnvPtr& env, const Node* where);
    Value get_property(const Value& base, const PropertyKey& key, const SourceLocation& loc,
                       bool silent = false);
    void set_property(const Value& base, const PropertyKey& key, Value v,
                      const SourceLocation& loc, bool silent = false);
    bool has_property(const Value& base, const PropertyKey& key);
    bool delete_property(const Value& base, const PropertyKey& key);

    /// How a global-scope read reports itself: silent (internal), property
    /// (explicit access on the global object; always logs), or bare
    /// (identifier resolution; logs membrane-origin values only).
    enum class GlobalLogMode { silent, property, bare };
    Value global_lookup(const std::string& name, const SourceLocation& loc, GlobalLogMode mode);
    void global_assign(const std::string& name, Value v, const SourceLocation& loc,
                       bool log_event);

    // ---- mocks ----
    MockPtr make_mock(std::string path, int depth, ObjectPtr wrapped = nullptr);
    Value mock_trap_get(const MockPtr& mock, const PropertyKey& key, const SourceLocation& loc,
                        bool silent);
    void mock_trap_set(const MockPtr& mock, const PropertyKey& key, Value v,
                       const SourceLocation& loc, bool silent);
    Value mock_invoke(const MockPtr& mock, std::vector<Value>& args, const SourceLocation& loc,
                      EventKind kind);
    void capture_callback_args(const std::vector<Value>& args);

    // ---- calls ----
    Value call_value(const Value& callee, const Value& this_value, std::vector<Value> args,
                     const SourceLocation& loc, bool is_construct = false,
                     Value new_target = Value());
    Value call_function(const FunctionPtr& fn, const Value& this_value, std::vector<Value>& args,
                        bool is_construct, Value new_target);

    // ---- conversions and operators ----
    bool to_boolean(const Value& v) const;
    double to_number(const Value& v);
    std::string to_string_value(const Value& v);
    Value to_primitive(const Value& v, char hint);  // 'n' number, 's' string, 'd' default
    PropertyKey to_property_key(const Value& v);
    std::string typeof_value(const Value& v, const EnvPtr& env);
    bool loose_equals(const Value& a, const Value& b);
    Value binary_operate(const std::string& op, const Value& lhs, const Value& rhs);
    Value concat_or_add(const Value& lhs, const Value& rhs);
    bool is_mocklike(const Value& v) const { return as_mock(v) != nullptr; }

    // ---- errors ----
    ObjectPtr make_error(const std::string& kind, const std::string& message);
    [[noreturn]] void throw_error(const std::string& kind, const std::string& message);

    // ---- promises and jobs ----
    PromisePtr make_promise();
    void settle_promise(const PromisePtr& p, Value result, bool fulfilled);
    Value promise_then(const PromisePtr& p, ObjectPtr on_fulfilled, ObjectPtr on_rejected);
    void pump_microtasks();
    Value await_value(const Value& v);

    // ---- host/guest boundary ----
    Value host_to_guest(const HostValue& hv, const std::string& stub_path, int fn_depth);
    HostValue guest_to_host(const Value& v, int depth, std::set<const Object*>& seen);
    Value make_hook_stub(const std::string& path, HostFunction fn);

    // ---- guest eval ----
    Value guest_eval(const std::string& code, const EnvPtr& scope, bool direct);
    Value function_constructor(std::vector<Value>& args);

    // ---- helpers shared by natives ----
    std::shared_ptr<ArrayObject> make_array(std::vector<Value> elements = {});
    ObjectPtr make_object();
    Value str(std::string s) { return heap_.str(std::move(s)); }
    JsSymbol make_symbol(const std::string& description);
    FunctionPtr native_fn(const std::string& name, NativeFn fn, size_t arity = 0,
                          const std::string& event_path = "");
    void add_method(const ObjectPtr& obj, const std::string& name, NativeFn fn, size_t arity = 0);
    void add_getter(const ObjectPtr& obj, const std::string& name, NativeFn fn);
    std::shared_ptr<RegExpObject> make_regexp(const std::string& pattern,
                                              const std::string& flags);
    Value get_own_data(const ObjectPtr& obj, const PropertyKey& key) const;
    SourceLocation loc_of(const Node* n) const;
    const std::string& current_specifier() const { return current_specifier_; }

    Value array_from_iterable(const Value& v, const SourceLocation& loc);
    void for_of_each(const Value& iterable, const SourceLocation& loc,
                     const std::function<bool(Value)>& body);
    std::vector<std::string> enumerate_keys(const Value& v);
    Value build_match_result(const std::smatch& m, const std::string& subject,
                             size_t base_offset);

    // ---- statement/expression evaluation ----
    void exec_statements(const std::vector<NodePtr>& stmts, const EnvPtr& env);
    void exec_stmt(const Node* n, const EnvPtr& env);
    Value eval_expr(const Node* n, const EnvPtr& env);
    Value eval_call(const CallExpr* call, const EnvPtr& env);
    Value eval_member(const MemberExpr* member, const EnvPtr& env);
    Value eval_assignment(const AssignExpr* assign, const EnvPtr& env);
    Value eval_class(const ClassNode* cls, const EnvPtr& env);
    Value eval_template(const TemplateLit* tpl, const EnvPtr& env);
    Value eval_object_literal(const ObjectLit* lit, const EnvPtr& env);
    FunctionPtr instantiate_function(const FunctionNode* fn, const EnvPtr& env);
    void hoist_declarations(const std::vector<NodePtr>& stmts, const EnvPtr& env,
                            bool function_scope);
    void bind_pattern(const Node* pattern, const Value& v, const EnvPtr& env,
                      const char* decl_kind);
    void bind_pattern_class_name(const std::string& name, const Value& v, const EnvPtr& env);
    void bind_for_target(const Node* left, Value v, const EnvPtr& iter_env);
    Value this_of(const EnvPtr& env);
    EnvRecord* function_scope_of(const EnvPtr& env);

    // ---- modules ----
    struct ModuleRecord {
        Url url;
        std::string specifier;
        ParsedSourcePtr source;
        EnvPtr env;
        ObjectPtr namespace_object;
        enum class State { Linking, Linked, Evaluating, Evaluated } state = State::Linking;
        // export name → (defining module env, local name); star re-exports by URL
        std::map<std::string, std::pair<EnvPtr, std::string>> exports;
        std::vector<std::string> star_exports;
        std::vector<std::string> dependencies;  // module keys in source order
    };
    std::shared_ptr<ModuleRecord> load_module(const Url& url, const SourceLocation& requested_at);
    void link_module_source(const std::shared_ptr<ModuleRecord>& record, std::string source);
    void evaluate_module(const std::shared_ptr<ModuleRecord>& record);
    ObjectPtr module_namespace(const std::shared_ptr<ModuleRecord>& record);
    std::optional<std::pair<EnvPtr, std::string>> resolve_export(
        const std::shared_ptr<ModuleRecord>& record, const std::string& name, int hops = 0);
    std::string specifier_for(const Url& url) const;

    // ---- setup ----
    void setup_globals();
    void realize_hooks();
    void install_hook_value(const std::string& path, const Hook& hook);

private:
    void install_natives();
    void setup_object_builtin();
    void setup_function_builtin();
    void setup_array_builtin();
    void setup_string_builtin();
    void setup_number_boolean_builtins();
    void setup_symbol_builtin();
    void setup_error_builtins();
    void setup_math_json_builtins();
    void setup_regexp_builtin();
    void setup_date_builtin();
    void setup_promise_builtin();
    void setup_misc_globals();

public:
    // Wide-open members: implementation headers and the sandbox manipulate
    // these directly; the class is an internal engine, not a public API.
    SandboxConfig config_;
    HookSet hooks_;
    ModuleResolver resolver_;
    Heap heap_;
    ExecutionLimits limits_;
    EventLog log_;

    ObjectPtr global_;
    EnvPtr global_env_;
    std::map<std::string, std::string> ref_hooks_;  // root name → target path ("" = global)

    ObjectPtr object_proto_, function_proto_, array_proto_, string_proto_, number_proto_,
        boolean_proto_, symbol_proto_, regexp_proto_, date_proto_, promise_proto_,
        error_proto_;
    std::map<std::string, ObjectPtr> error_protos_;  // per error kind
    FunctionPtr eval_fn_;

    struct Job {
        ObjectPtr fn;                 // guest function or mock to invoke
        std::vector<Value> args;
        Value this_value;
        PromisePtr reaction_next;     // set for promise reactions
        Value reaction_value;
        bool reaction_fulfilled = true;
        bool is_reaction = false;
    };
    std::deque<Job> microtasks_;
    std::deque<Job> callbacks_;
    std::unordered_set<const Object*> captured_callbacks_;

    std::map<std::string, std::shared_ptr<ModuleRecord>> modules_;
    std::vector<std::string> loaded_specifiers_;
    std::vector<ParsedSourcePtr> retained_units_;

    std::string current_specifier_;
    ParsedSourcePtr current_unit_;
    SourceLocation current_loc_;  // last call/member position, for host-initiated traps
    std::unordered_map<const Node*, JsStringPtr> literal_cache_;
    uint32_t next_symbol_id_ = well_known::first_dynamic;
    int eval_counter_ = 0;
    int call_depth_ = 0;
    static constexpr int kMaxCallDepth = 512;
    Url origin_;

    // Live-object registries so host functions can echo guest references back.
    std::unordered_map<uint64_t, std::weak_ptr<MockObject>> mocks_by_id_;
    std::unordered_map<uint64_t, std::weak_ptr<Object>> guest_fns_by_id_;
};

/// Lists static import declarations of a parsed module in source order.
struct ImportSummary {
    std::string specifier;
    std::vector<std::string> names;
};
inline std::vector<ImportSummary> extract_imports(const Node* program) {
    std::vector<ImportSummary> out;
    if (program == nullptr || program->kind != NodeKind::Program) return out;
    for (const NodePtr& stmt : as<Program>(program)->body) {
        if (stmt->kind != NodeKind::ImportDecl) continue;
        const auto* decl = as<ImportDecl>(stmt.get());
        ImportSummary entry;
        entry.specifier = decl->source;
        for (const ImportSpec& spec : decl->specifiers) entry.names.push_back(spec.local);
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace mirage

#include "mirage/detail/interp_ops.hpp"
#include "mirage/detail/interp_membrane.hpp"
#include "mirage/detail/interp_eval.hpp"
#include "mirage/detail/interp_modules.hpp"
#include "mirage/detail/natives_core.hpp"
#include "mirage/detail/natives_string.hpp"
#include "mirage/detail/natives_lib.hpp"

#endif
