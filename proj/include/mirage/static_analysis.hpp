#ifndef MIRAGE_STATIC_ANALYSIS_HPP
#define MIRAGE_STATIC_ANALYSIS_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirage/interpreter.hpp"
#include "mirage/parser.hpp"
#include "mirage/printer.hpp"
#include "mirage/url.hpp"

namespace mirage {
namespace detail {

inline bool is_js_ident_name(const std::string& s) {
    if (s.empty()) return false;
    auto head = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$';
    };
    if (!head(s[0])) return false;
    for (size_t i = 1; i < s.size(); i++) {
        char c = s[i];
        if (!head(c) && !(c >= '0' && c <= '9')) return false;
    }
    return true;
}

/// Member access spelled for a possibly non-identifier name.
inline std::string member_access(const std::string& base, const std::string& name) {
    if (is_js_ident_name(name)) return base + "." + name;
    return base + "[" + quote_js_string(name) + "]";
}

inline std::string object_key(const std::string& name) {
    if (is_js_ident_name(name)) return name;
    return quote_js_string(name);
}

// ---------------------------------------------------------------------------
// Module inlining
// ---------------------------------------------------------------------------

/// Identifier names introduced by a binding pattern, as (name, name) pairs.
inline void collect_pattern_names(const Node* pat,
                                  std::vector<std::pair<std::string, std::string>>& out) {
    if (pat == nullptr) return;
    switch (pat->kind) {
        case NodeKind::Ident:
            out.emplace_back(as<Ident>(pat)->name, as<Ident>(pat)->name);
            break;
        case NodeKind::ArrayPattern:
            for (const NodePtr& el : as<ArrayPattern>(pat)->elements) {
                collect_pattern_names(el.get(), out);
            }
            break;
        case NodeKind::ObjectPattern:
            for (const NodePtr& pr : as<ObjectPattern>(pat)->props) {
                collect_pattern_names(pr.get(), out);
            }
            break;
        case NodeKind::Property:
            collect_pattern_names(as<Property>(pat)->value.get(), out);
            break;
        case NodeKind::AssignmentPattern:
            collect_pattern_names(as<AssignmentPattern>(pat)->left.get(), out);
            break;
        case NodeKind::RestElement:
            collect_pattern_names(as<RestElement>(pat)->argument.get(), out);
            break;
        default:
            break;
    }
}

struct BundleModule {
    Url url;
    std::string var_name;
    ParsedSourcePtr source;
    // Import statement order maps onto these resolved module variable names.
    std::vector<std::string> dep_vars;
};

class Bundler {
public:
    Bundler(const ModuleResolver& resolver) : resolver_(resolver) {}

    std::string build(const Url& entry) {
        size_t entry_index = load(entry, 0);
        std::string out;
        for (size_t i = 0; i < order_.size(); i++) {
            BundleModule& mod = modules_[order_[i]];
            bool is_entry = order_[i] == entry_index;
            if (is_entry) {
                out += transform_body(mod, /*wrapped=*/false);
            } else {
                out += "const " + mod.var_name + " = (() => {\n";
                out += transform_body(mod, /*wrapped=*/true);
                out += "})();\n";
            }
        }
        return out;
    }

private:
    const ModuleResolver& resolver_;
    std::vector<BundleModule> modules_;
    std::map<std::string, size_t> by_url_;   // url string -> modules_ index
    std::map<std::string, int> state_;       // 0 absent, 1 loading, 2 done
    std::vector<size_t> order_;              // post-order: dependencies first

    size_t load(const Url& url, int depth) {
        if (depth > 64) throw BundleError("import depth exceeds 64 at '" + url.to_string() + "'");
        std::string key = url.to_string();
        auto st = state_.find(key);
        if (st != state_.end()) {
            if (st->second == 1) throw BundleError("import cycle involving '" + key + "'");
            return by_url_.at(key);
        }
        state_[key] = 1;

        std::optional<std::vector<uint8_t>> bytes;
        if (resolver_) bytes = resolver_(url);
        if (!bytes) throw BundleError("cannot resolve module '" + key + "'");

        size_t index = modules_.size();
        modules_.push_back(BundleModule{});
        by_url_[key] = index;
        {
            BundleModule& mod = modules_[index];
            mod.url = url;
            mod.var_name = "__m" + std::to_string(index);
            mod.source = parse_source(
                std::string(reinterpret_cast<const char*>(bytes->data()), bytes->size()), key,
                SourceType::module_);
        }

        // Load dependencies depth-first in source order. modules_ may grow
        // while recursing, so re-index instead of holding a reference.
        const auto& body = as<Program>(modules_[index].source->program.get())->body;
        std::vector<std::string> dep_vars;
        for (const NodePtr& s : body) {
            const Node* n = s.get();
            std::string spec;
            if (n->kind == NodeKind::ImportDecl) {
                spec = as<ImportDecl>(n)->source;
            } else if (n->kind == NodeKind::ExportNamedDecl && as<ExportNamedDecl>(n)->source) {
                spec = *as<ExportNamedDecl>(n)->source;
            } else if (n->kind == NodeKind::ExportAllDecl) {
                spec = as<ExportAllDecl>(n)->source;
            } else {
                continue;
            }
            Url dep;
            try {
                dep = resolve_specifier(url, spec);
            } catch (const ResolveError& e) {
                throw BundleError(std::string(e.what()));
            }
            size_t child = load(dep, depth + 1);
            dep_vars.push_back(modules_[child].var_name);
        }
        modules_[index].dep_vars = std::move(dep_vars);

        state_[key] = 2;
        order_.push_back(index);
        return index;
    }

    /// Re-emits one module body with imports turned into const bindings and
    /// exports collected; wrapped modules close with a `return {...}`.
    std::string transform_body(const BundleModule& mod, bool wrapped) {
        std::string out;
        std::vector<std::pair<std::string, std::string>> exports;  // name -> value expr
        std::vector<std::string> star_spreads;
        int default_seq = 0;
        size_t dep_at = 0;

        auto next_dep = [&]() -> const std::string& { return mod.dep_vars.at(dep_at++); };

        auto record_decl_exports = [&](const Node* d) {
            if (d->kind == NodeKind::VarDecl) {
                for (const NodePtr& dtor : as<VarDecl>(d)->declarators) {
                    collect_pattern_names(as<VarDeclarator>(dtor.get())->id.get(), exports);
                }
            } else if (d->kind == NodeKind::FunctionNode) {
                const std::string& n = as<FunctionNode>(d)->name;
                if (!n.empty()) exports.emplace_back(n, n);
            } else if (d->kind == NodeKind::ClassNode) {
                const std::string& n = as<ClassNode>(d)->name;
                if (!n.empty()) exports.emplace_back(n, n);
            }
        };

        const auto& body = as<Program>(mod.source->program.get())->body;
        for (const NodePtr& s : body) {
            const Node* n = s.get();
            switch (n->kind) {
                case NodeKind::ImportDecl: {
                    const std::string& dep = next_dep();
                    for (const ImportSpec& spec : as<ImportDecl>(n)->specifiers) {
                        switch (spec.kind) {
                            case ImportSpec::Kind::Default:
                                out += "const " + spec.local + " = " +
                                       member_access(dep, "default") + ";\n";
                                break;
                            case ImportSpec::Kind::Namespace:
                                out += "const " + spec.local + " = " + dep + ";\n";
                                break;
                            case ImportSpec::Kind::Named:
                                out += "const " + spec.local + " = " +
                                       member_access(dep, spec.imported) + ";\n";
                                break;
                        }
                    }
                    break;
                }
                case NodeKind::ExportNamedDecl: {
                    const auto* ex = as<ExportNamedDecl>(n);
                    if (ex->source) {
                        const std::string& dep = next_dep();
                        for (const ExportSpec& spec : ex->specifiers) {
                            exports.emplace_back(spec.exported, member_access(dep, spec.local));
                        }
                        break;
                    }
                    if (ex->declaration) {
                        out += Printer::program(ex->declaration.get());
                        record_decl_exports(ex->declaration.get());
                    }
                    for (const ExportSpec& spec : ex->specifiers) {
                        exports.emplace_back(spec.exported, spec.local);
                    }
                    break;
                }
                case NodeKind::ExportDefaultDecl: {
                    const auto* ex = as<ExportDefaultDecl>(n);
                    const Node* d = ex->declaration.get();
                    if (d->kind == NodeKind::FunctionNode && !as<FunctionNode>(d)->name.empty() &&
                        !as<FunctionNode>(d)->is_arrow) {
                        out += Printer::program(d);
                        exports.emplace_back("default", as<FunctionNode>(d)->name);
                    } else if (d->kind == NodeKind::ClassNode && !as<ClassNode>(d)->name.empty()) {
                        out += Printer::program(d);
                        exports.emplace_back("default", as<ClassNode>(d)->name);
                    } else {
                        std::string tmp = "__default" + std::to_string(default_seq++);
                        out += "const " + tmp + " = " + Printer::expression(d) + ";\n";
                        exports.emplace_back("default", tmp);
                    }
                    break;
                }
                case NodeKind::ExportAllDecl: {
                    const auto* ex = as<ExportAllDecl>(n);
                    const std::string& dep = next_dep();
                    if (ex->exported) {
                        exports.emplace_back(*ex->exported, dep);
                    } else {
                        star_spreads.push_back(dep);
                    }
                    break;
                }
                default:
                    out += Printer::program(n);
                    break;
            }
        }

        if (wrapped) {
            out += "return { ";
            bool first = true;
            for (const std::string& dep : star_spreads) {
                if (!first) out += ", ";
                out += "..." + dep;
                first = false;
            }
            for (const auto& [name, value] : exports) {
                if (!first) out += ", ";
                out += object_key(name) + ": " + value;
                first = false;
            }
            out += first ? "};\n" : " };\n";
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// API-call chain extraction
// ---------------------------------------------------------------------------

/// How a lexically bound name affects chain resolution.
struct StaticBinding {
    enum class Kind {
        Shadow,         // hides any global of the same name; chain unresolvable
        Alias,          // const bound to a global-rooted member chain
        FuncSummary,    // function whose return value is a global-rooted chain
        ObjectSummary,  // const bound to an immediately-invoked closure
                        // returning an object literal (a scoped module)
    };
    Kind kind = Kind::Shadow;
    std::string chain;                 // Alias target
    const FunctionNode* fn = nullptr;  // FuncSummary source
    bool summarized = false;           // summary computed (chain may still be "")
    std::shared_ptr<const std::map<std::string, StaticBinding>> props;  // ObjectSummary
};

/// Result of resolving an expression to a dotted global chain. `complete`
/// distinguishes a fully known chain from the longest known prefix of a
/// chain broken by an intermediate call or computed key.
struct ChainResult {
    std::string chain;
    bool complete = false;
};

class ApiCallExtractor {
public:
    std::set<std::string> run(const Node* program) {
        out_.clear();
        scopes_.clear();
        if (program == nullptr || program->kind != NodeKind::Program) return out_;
        push_scope();
        const auto& body = as<Program>(program)->body;
        hoist(body);
        for (const NodePtr& s : body) visit_stmt(s.get());
        pop_scope();
        return std::move(out_);
    }

private:
    std::set<std::string> out_;
    std::vector<std::map<std::string, StaticBinding>> scopes_;

    void push_scope() { scopes_.emplace_back(); }
    void pop_scope() { scopes_.pop_back(); }

    void bind(const std::string& name, StaticBinding b) { scopes_.back()[name] = std::move(b); }

    StaticBinding* lookup(const std::string& name) {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end()) return &found->second;
        }
        return nullptr;
    }

    static std::string canonical(const std::string& chain) {
        if (chain == "chrome") return "browser";
        if (chain.rfind("chrome.", 0) == 0) return "browser" + chain.substr(6);
        return chain;
    }

    void record(const ChainResult& r) {
        if (!r.chain.empty()) out_.insert(canonical(r.chain));
    }

    // ---- chain resolution ----

    /// Binding-level resolution: the binding an expression denotes, when it
    /// is a name or a non-computed member path through object summaries.
    StaticBinding* resolve_binding(const Node* n) {
        switch (n->kind) {
            case NodeKind::Ident: return lookup(as<Ident>(n)->name);
            case NodeKind::ChainExpr: return resolve_binding(as<ChainExpr>(n)->expr.get());
            case NodeKind::MemberExpr: {
                const auto* m = as<MemberExpr>(n);
                if (m->computed) return nullptr;
                StaticBinding* base = resolve_binding(m->object.get());
                if (base == nullptr || base->kind != StaticBinding::Kind::ObjectSummary ||
                    !base->props) {
                    return nullptr;
                }
                auto it = base->props->find(as<Ident>(m->property.get())->name);
                if (it == base->props->end()) return nullptr;
                return const_cast<StaticBinding*>(&it->second);
            }
            default: return nullptr;
        }
    }

    ChainResult resolve(const Node* n) {
        switch (n->kind) {
            case NodeKind::Ident: {
                const std::string& name = as<Ident>(n)->name;
                StaticBinding* b = lookup(name);
                if (b == nullptr) return {name, true};  // global root
                if (b->kind == StaticBinding::Kind::Alias) return {b->chain, true};
                return {"", false};
            }
            case NodeKind::MemberExpr: {
                const auto* m = as<MemberExpr>(n);
                if (StaticBinding* b = resolve_binding(n)) {
                    if (b->kind == StaticBinding::Kind::Alias) return {b->chain, true};
                    return {"", false};
                }
                ChainResult base = resolve(m->object.get());
                if (!base.complete || base.chain.empty()) {
                    return {base.chain, false};
                }
                if (m->computed) return {base.chain, false};
                return {base.chain + "." + as<Ident>(m->property.get())->name, true};
            }
            case NodeKind::ChainExpr: return resolve(as<ChainExpr>(n)->expr.get());
            case NodeKind::CallExpr: {
                const auto* c = as<CallExpr>(n);
                std::string summary = callee_summary(c->callee.get());
                if (!summary.empty()) return {summary, true};
                ChainResult inner = resolve(c->callee.get());
                return {inner.chain, false};
            }
            case NodeKind::NewExpr: {
                ChainResult inner = resolve(as<NewExpr>(n)->callee.get());
                return {inner.chain, false};
            }
            default: return {"", false};
        }
    }

    /// One-step return summary: a callee that names a function returning a
    /// global-rooted member chain resolves to that chain.
    std::string callee_summary(const Node* callee) {
        StaticBinding* b = resolve_binding(callee);
        if (b == nullptr || b->kind != StaticBinding::Kind::FuncSummary) return "";
        if (!b->summarized) {
            b->summarized = true;
            b->chain = summarize(b->fn);
        }
        return b->chain;
    }

    std::string summarize(const FunctionNode* fn) {
        const Node* ret = nullptr;
        if (fn->is_expression_body) {
            ret = fn->body.get();
        } else if (fn->body && fn->body->kind == NodeKind::BlockStmt) {
            ret = find_return(as<BlockStmt>(fn->body.get())->body);
        }
        if (ret == nullptr) return "";
        // Params shadow globals inside the summary; other locals are beyond
        // this one-step approximation.
        push_scope();
        std::vector<std::pair<std::string, std::string>> names;
        for (const NodePtr& p : fn->params) collect_pattern_names(p.get(), names);
        for (const auto& [name, unused] : names) bind(name, StaticBinding{});
        ChainResult r = resolve(ret);
        pop_scope();
        return r.complete ? r.chain : "";
    }

    static const Node* find_return(const std::vector<NodePtr>& body) {
        for (const NodePtr& s : body) {
            if (s->kind == NodeKind::ReturnStmt && as<ReturnStmt>(s.get())->argument) {
                return as<ReturnStmt>(s.get())->argument.get();
            }
        }
        return nullptr;
    }

    // ---- scope construction ----

    /// Function and class declarations are visible before their statement.
    void hoist(const std::vector<NodePtr>& body) {
        for (const NodePtr& s : body) {
            const Node* n = s.get();
            if (n->kind == NodeKind::ExportNamedDecl && as<ExportNamedDecl>(n)->declaration) {
                n = as<ExportNamedDecl>(n)->declaration.get();
            } else if (n->kind == NodeKind::ExportDefaultDecl) {
                n = as<ExportDefaultDecl>(n)->declaration.get();
            }
            if (n->kind == NodeKind::FunctionNode && !as<FunctionNode>(n)->name.empty()) {
                StaticBinding b;
                b.kind = StaticBinding::Kind::FuncSummary;
                b.fn = as<FunctionNode>(n);
                bind(as<FunctionNode>(n)->name, std::move(b));
            } else if (n->kind == NodeKind::ClassNode && !as<ClassNode>(n)->name.empty()) {
                bind(as<ClassNode>(n)->name, StaticBinding{});
            } else if (n->kind == NodeKind::ImportDecl) {
                for (const ImportSpec& spec : as<ImportDecl>(n)->specifiers) {
                    bind(spec.local, StaticBinding{});
                }
            }
        }
    }

    /// Matches `(() => { ... })()` / `(function () { ... })()` with no
    /// arguments and no parameters: a scoped module closure.
    static const FunctionNode* as_module_closure(const Node* init) {
        if (init->kind != NodeKind::CallExpr) return nullptr;
        const auto* c = as<CallExpr>(init);
        if (!c->args.empty() || c->callee->kind != NodeKind::FunctionNode) return nullptr;
        const auto* fn = as<FunctionNode>(c->callee.get());
        if (!fn->params.empty() || fn->is_async) return nullptr;
        if (fn->is_expression_body || !fn->body ||
            fn->body->kind != NodeKind::BlockStmt) {
            return nullptr;
        }
        return fn;
    }

    /// Walks a module closure's body (recording its calls once) and builds
    /// the binding map its returned object literal exposes. Exported
    /// function summaries are resolved here, while the closure's own scope
    /// is still the active one.
    StaticBinding module_summary(const FunctionNode* fn) {
        const auto& body = as<BlockStmt>(fn->body.get())->body;
        push_scope();
        hoist(body);
        for (const NodePtr& s : body) visit_stmt(s.get());

        auto props = std::make_shared<std::map<std::string, StaticBinding>>();
        const Node* ret = nullptr;
        for (const NodePtr& s : body) {
            if (s->kind == NodeKind::ReturnStmt && as<ReturnStmt>(s.get())->argument &&
                as<ReturnStmt>(s.get())->argument->kind == NodeKind::ObjectLit) {
                ret = as<ReturnStmt>(s.get())->argument.get();
            }
        }
        if (ret != nullptr) {
            for (const NodePtr& p : as<ObjectLit>(ret)->props) {
                if (p->kind == NodeKind::SpreadElement) {
                    StaticBinding* src = resolve_binding(as<SpreadElement>(p.get())->argument.get());
                    if (src != nullptr && src->kind == StaticBinding::Kind::ObjectSummary &&
                        src->props) {
                        for (const auto& [k, v] : *src->props) (*props)[k] = v;
                    }
                    continue;
                }
                const auto* prop = as<Property>(p.get());
                if (prop->computed || prop->prop_kind != Property::Kind::Init) continue;
                std::string key;
                if (prop->key->kind == NodeKind::Ident) {
                    key = as<Ident>(prop->key.get())->name;
                } else if (prop->key->kind == NodeKind::StringLit) {
                    key = as<StringLit>(prop->key.get())->value;
                } else {
                    continue;
                }
                const Node* value = prop->value.get();
                if (StaticBinding* b = resolve_binding(value)) {
                    StaticBinding copy = *b;
                    if (copy.kind == StaticBinding::Kind::FuncSummary && !copy.summarized) {
                        copy.summarized = true;
                        copy.chain = summarize(copy.fn);
                    }
                    (*props)[key] = std::move(copy);
                    continue;
                }
                ChainResult r = resolve(value);
                if (r.complete && !r.chain.empty()) {
                    StaticBinding alias;
                    alias.kind = StaticBinding::Kind::Alias;
                    alias.chain = canonical(r.chain);
                    (*props)[key] = std::move(alias);
                }
            }
        }
        pop_scope();

        StaticBinding b;
        b.kind = StaticBinding::Kind::ObjectSummary;
        b.props = std::move(props);
        return b;
    }

    void declare_var(const VarDecl* d) {
        bool is_const = d->decl_kind == "const";
        for (const NodePtr& dtor : d->declarators) {
            const auto* v = as<VarDeclarator>(dtor.get());
            bool bound_const_ident = v->id->kind == NodeKind::Ident && is_const && v->init;
            if (bound_const_ident) {
                const std::string& name = as<Ident>(v->id.get())->name;
                const Node* init = v->init.get();
                if (const FunctionNode* closure = as_module_closure(init)) {
                    bind(name, module_summary(closure));
                    continue;
                }
                visit_expr(init);
                if (init->kind == NodeKind::FunctionNode) {
                    StaticBinding b;
                    b.kind = StaticBinding::Kind::FuncSummary;
                    b.fn = as<FunctionNode>(init);
                    bind(name, std::move(b));
                    continue;
                }
                if (StaticBinding* src = resolve_binding(init)) {
                    if (src->kind != StaticBinding::Kind::Shadow) {
                        StaticBinding copy = *src;
                        bind(name, std::move(copy));
                        continue;
                    }
                }
                ChainResult r = resolve(init);
                if (r.complete && !r.chain.empty()) {
                    StaticBinding b;
                    b.kind = StaticBinding::Kind::Alias;
                    b.chain = canonical(r.chain);
                    bind(name, std::move(b));
                    continue;
                }
                bind(name, StaticBinding{});
                continue;
            }
            if (v->init) visit_expr(v->init.get());
            std::vector<std::pair<std::string, std::string>> names;
            collect_pattern_names(v->id.get(), names);
            for (const auto& [name, unused] : names) bind(name, StaticBinding{});
        }
    }

    void enter_function(const FunctionNode* fn) {
        push_scope();
        std::vector<std::pair<std::string, std::string>> names;
        for (const NodePtr& p : fn->params) {
            visit_pattern_defaults(p.get());
            collect_pattern_names(p.get(), names);
        }
        for (const auto& [name, unused] : names) bind(name, StaticBinding{});
        if (fn->is_expression_body) {
            visit_expr(fn->body.get());
        } else if (fn->body && fn->body->kind == NodeKind::BlockStmt) {
            const auto& body = as<BlockStmt>(fn->body.get())->body;
            hoist(body);
            for (const NodePtr& s : body) visit_stmt(s.get());
        }
        pop_scope();
    }

    void visit_pattern_defaults(const Node* pat) {
        if (pat == nullptr) return;
        switch (pat->kind) {
            case NodeKind::AssignmentPattern:
                visit_expr(as<AssignmentPattern>(pat)->right.get());
                visit_pattern_defaults(as<AssignmentPattern>(pat)->left.get());
                break;
            case NodeKind::ArrayPattern:
                for (const NodePtr& el : as<ArrayPattern>(pat)->elements) {
                    visit_pattern_defaults(el.get());
                }
                break;
            case NodeKind::ObjectPattern:
                for (const NodePtr& pr : as<ObjectPattern>(pat)->props) {
                    visit_pattern_defaults(pr.get());
                }
                break;
            case NodeKind::Property:
                if (as<Property>(pat)->computed) visit_expr(as<Property>(pat)->key.get());
                visit_pattern_defaults(as<Property>(pat)->value.get());
                break;
            case NodeKind::RestElement:
                visit_pattern_defaults(as<RestElement>(pat)->argument.get());
                break;
            default:
                break;
        }
    }

    // ---- traversal ----

    void visit_block(const std::vector<NodePtr>& body) {
        push_scope();
        hoist(body);
        for (const NodePtr& s : body) visit_stmt(s.get());
        pop_scope();
    }

    void visit_stmt(const Node* n) {
        if (n == nullptr) return;
        switch (n->kind) {
            case NodeKind::ExprStmt: visit_expr(as<ExprStmt>(n)->expr.get()); break;
            case NodeKind::VarDecl: declare_var(as<VarDecl>(n)); break;
            case NodeKind::FunctionNode: enter_function(as<FunctionNode>(n)); break;
            case NodeKind::ClassNode: visit_class(as<ClassNode>(n)); break;
            case NodeKind::BlockStmt: visit_block(as<BlockStmt>(n)->body); break;
            case NodeKind::IfStmt: {
                const auto* s = as<IfStmt>(n);
                visit_expr(s->test.get());
                visit_stmt(s->consequent.get());
                visit_stmt(s->alternate.get());
                break;
            }
            case NodeKind::ForStmt: {
                const auto* s = as<ForStmt>(n);
                push_scope();
                if (s->init) {
                    if (s->init->kind == NodeKind::VarDecl) {
                        declare_var(as<VarDecl>(s->init.get()));
                    } else {
                        visit_expr(s->init.get());
                    }
                }
                visit_expr(s->test.get());
                visit_expr(s->update.get());
                visit_stmt(s->body.get());
                pop_scope();
                break;
            }
            case NodeKind::ForInStmt:
            case NodeKind::ForOfStmt: {
                const Node* left;
                const Node* right;
                const Node* body;
                if (n->kind == NodeKind::ForInStmt) {
                    left = as<ForInStmt>(n)->left.get();
                    right = as<ForInStmt>(n)->right.get();
                    body = as<ForInStmt>(n)->body.get();
                } else {
                    left = as<ForOfStmt>(n)->left.get();
                    right = as<ForOfStmt>(n)->right.get();
                    body = as<ForOfStmt>(n)->body.get();
                }
                visit_expr(right);
                push_scope();
                if (left->kind == NodeKind::VarDecl) {
                    std::vector<std::pair<std::string, std::string>> names;
                    for (const NodePtr& dtor : as<VarDecl>(left)->declarators) {
                        collect_pattern_names(
                            as<VarDeclarator>(dtor.get())->id.get(), names);
                    }
                    for (const auto& [name, unused] : names) bind(name, StaticBinding{});
                } else {
                    visit_expr(left);
                }
                visit_stmt(body);
                pop_scope();
                break;
            }
            case NodeKind::WhileStmt:
                visit_expr(as<WhileStmt>(n)->test.get());
                visit_stmt(as<WhileStmt>(n)->body.get());
                break;
            case NodeKind::DoWhileStmt:
                visit_stmt(as<DoWhileStmt>(n)->body.get());
                visit_expr(as<DoWhileStmt>(n)->test.get());
                break;
            case NodeKind::ReturnStmt: visit_expr(as<ReturnStmt>(n)->argument.get()); break;
            case NodeKind::ThrowStmt: visit_expr(as<ThrowStmt>(n)->argument.get()); break;
            case NodeKind::TryStmt: {
                const auto* s = as<TryStmt>(n);
                visit_stmt(s->block.get());
                if (s->handler) {
                    push_scope();
                    if (s->param) {
                        std::vector<std::pair<std::string, std::string>> names;
                        collect_pattern_names(s->param.get(), names);
                        for (const auto& [name, unused] : names) bind(name, StaticBinding{});
                    }
                    visit_stmt(s->handler.get());
                    pop_scope();
                }
                visit_stmt(s->finalizer.get());
                break;
            }
            case NodeKind::SwitchStmt: {
                const auto* s = as<SwitchStmt>(n);
                visit_expr(s->discriminant.get());
                push_scope();
                for (const NodePtr& c : s->cases) {
                    const auto* sc = as<SwitchCase>(c.get());
                    visit_expr(sc->test.get());
                    for (const NodePtr& b : sc->body) visit_stmt(b.get());
                }
                pop_scope();
                break;
            }
            case NodeKind::ImportDecl: break;  // bindings handled in hoist
            case NodeKind::ExportNamedDecl:
                if (as<ExportNamedDecl>(n)->declaration) {
                    visit_stmt(as<ExportNamedDecl>(n)->declaration.get());
                }
                break;
            case NodeKind::ExportDefaultDecl:
                visit_stmt_or_expr(as<ExportDefaultDecl>(n)->declaration.get());
                break;
            default: break;
        }
    }

    void visit_stmt_or_expr(const Node* n) {
        if (n == nullptr) return;
        if (n->kind == NodeKind::FunctionNode || n->kind == NodeKind::ClassNode ||
            n->kind == NodeKind::VarDecl) {
            visit_stmt(n);
        } else {
            visit_expr(n);
        }
    }

    void visit_class(const ClassNode* c) {
        if (c->super_class) visit_expr(c->super_class.get());
        for (const NodePtr& m : c->members) {
            const auto* mem = as<ClassMember>(m.get());
            if (mem->computed) visit_expr(mem->key.get());
            if (!mem->value) continue;
            if (mem->value->kind == NodeKind::FunctionNode) {
                enter_function(as<FunctionNode>(mem->value.get()));
            } else {
                visit_expr(mem->value.get());
            }
        }
    }

    void visit_expr(const Node* n) {
        if (n == nullptr) return;
        switch (n->kind) {
            case NodeKind::CallExpr: {
                const auto* c = as<CallExpr>(n);
                record(resolve(c->callee.get()));
                visit_expr(c->callee.get());
                for (const NodePtr& a : c->args) visit_expr(a.get());
                break;
            }
            case NodeKind::NewExpr: {
                const auto* c = as<NewExpr>(n);
                record(resolve(c->callee.get()));
                visit_expr(c->callee.get());
                for (const NodePtr& a : c->args) visit_expr(a.get());
                break;
            }
            case NodeKind::MemberExpr:
                visit_expr(as<MemberExpr>(n)->object.get());
                if (as<MemberExpr>(n)->computed) visit_expr(as<MemberExpr>(n)->property.get());
                break;
            case NodeKind::ChainExpr: visit_expr(as<ChainExpr>(n)->expr.get()); break;
            case NodeKind::UnaryExpr: visit_expr(as<UnaryExpr>(n)->operand.get()); break;
            case NodeKind::UpdateExpr: visit_expr(as<UpdateExpr>(n)->operand.get()); break;
            case NodeKind::AwaitExpr: visit_expr(as<AwaitExpr>(n)->argument.get()); break;
            case NodeKind::BinaryExpr:
                visit_expr(as<BinaryExpr>(n)->lhs.get());
                visit_expr(as<BinaryExpr>(n)->rhs.get());
                break;
            case NodeKind::LogicalExpr:
                visit_expr(as<LogicalExpr>(n)->lhs.get());
                visit_expr(as<LogicalExpr>(n)->rhs.get());
                break;
            case NodeKind::ConditionalExpr:
                visit_expr(as<ConditionalExpr>(n)->test.get());
                visit_expr(as<ConditionalExpr>(n)->consequent.get());
                visit_expr(as<ConditionalExpr>(n)->alternate.get());
                break;
            case NodeKind::AssignExpr:
                visit_expr(as<AssignExpr>(n)->target.get());
                visit_expr(as<AssignExpr>(n)->value.get());
                break;
            case NodeKind::SequenceExpr:
                for (const NodePtr& e : as<SequenceExpr>(n)->exprs) visit_expr(e.get());
                break;
            case NodeKind::ArrayLit:
                for (const NodePtr& e : as<ArrayLit>(n)->elements) visit_expr(e.get());
                break;
            case NodeKind::ObjectLit:
                for (const NodePtr& p : as<ObjectLit>(n)->props) {
                    if (p->kind == NodeKind::SpreadElement) {
                        visit_expr(as<SpreadElement>(p.get())->argument.get());
                        continue;
                    }
                    const auto* prop = as<Property>(p.get());
                    if (prop->computed) visit_expr(prop->key.get());
                    visit_expr(prop->value.get());
                }
                break;
            case NodeKind::SpreadElement: visit_expr(as<SpreadElement>(n)->argument.get()); break;
            case NodeKind::TemplateLit:
                for (const NodePtr& e : as<TemplateLit>(n)->exprs) visit_expr(e.get());
                break;
            case NodeKind::TaggedTemplate: {
                const auto* t = as<TaggedTemplate>(n);
                record(resolve(t->tag.get()));
                visit_expr(t->tag.get());
                visit_expr(t->quasi.get());
                break;
            }
            case NodeKind::FunctionNode: enter_function(as<FunctionNode>(n)); break;
            case NodeKind::ClassNode: visit_class(as<ClassNode>(n)); break;
            case NodeKind::ArrayPattern:
            case NodeKind::ObjectPattern:
            case NodeKind::AssignmentPattern:
            case NodeKind::RestElement: visit_pattern_defaults(n); break;
            default: break;
        }
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Public surface
// ---------------------------------------------------------------------------

/// Inlines the static import graph reachable from `entry` into one script:
/// dependencies become immediately-invoked closures bound to `__mN`
/// constants, imports become const bindings, and the entry body runs at top
/// level. Throws BundleError for unresolvable imports, import cycles, or
/// graphs deeper than 64; ParseError propagates from malformed modules.
inline SourceText bundle(const Url& entry, const ModuleResolver& resolver) {
    detail::Bundler b(resolver);
    std::string text = b.build(entry);
    return SourceText(entry.to_string(), std::move(text), SourceType::script);
}

/// Distinct dotted call chains whose roots resolve lexically to globals.
/// `chrome.*` roots are reported as `browser.*`. Chains broken by an
/// intermediate call or computed key contribute their longest known prefix;
/// a call whose callee names a local function returning a global-rooted
/// chain continues through that function's return value.
inline std::set<std::string> static_api_calls(const Node* program) {
    detail::ApiCallExtractor ex;
    return ex.run(program);
}

/// Every string literal value plus every non-empty constant text chunk of
/// template literals, exactly as often as each occurs.
inline std::multiset<std::string> static_strings(const Node* program) {
    std::multiset<std::string> out;
    std::function<void(const Node*)> walk = [&](const Node* n) {
        if (n == nullptr) return;
        switch (n->kind) {
            case NodeKind::StringLit: out.insert(as<StringLit>(n)->value); return;
            case NodeKind::TemplateLit: {
                const auto* t = as<TemplateLit>(n);
                for (const std::string& chunk : t->cooked) {
                    if (!chunk.empty()) out.insert(chunk);
                }
                for (const NodePtr& e : t->exprs) walk(e.get());
                return;
            }
            case NodeKind::Program:
                for (const NodePtr& s : as<Program>(n)->body) walk(s.get());
                return;
            default: break;
        }
        // Generic child traversal for every other node type.
        switch (n->kind) {
            case NodeKind::TaggedTemplate:
                walk(as<TaggedTemplate>(n)->tag.get());
                walk(as<TaggedTemplate>(n)->quasi.get());
                break;
            case NodeKind::ArrayLit:
                for (const NodePtr& e : as<ArrayLit>(n)->elements) walk(e.get());
                break;
            case NodeKind::ObjectLit:
                for (const NodePtr& p : as<ObjectLit>(n)->props) walk(p.get());
                break;
            case NodeKind::Property:
                walk(as<Property>(n)->key.get());
                walk(as<Property>(n)->value.get());
                break;
            case NodeKind::SpreadElement: walk(as<SpreadElement>(n)->argument.get()); break;
            case NodeKind::FunctionNode:
                for (const NodePtr& p : as<FunctionNode>(n)->params) walk(p.get());
                walk(as<FunctionNode>(n)->body.get());
                break;
            case NodeKind::ClassNode:
                walk(as<ClassNode>(n)->super_class.get());
                for (const NodePtr& m : as<ClassNode>(n)->members) walk(m.get());
                break;
            case NodeKind::ClassMember:
                walk(as<ClassMember>(n)->key.get());
                walk(as<ClassMember>(n)->value.get());
                break;
            case NodeKind::UnaryExpr: walk(as<UnaryExpr>(n)->operand.get()); break;
            case NodeKind::UpdateExpr: walk(as<UpdateExpr>(n)->operand.get()); break;
            case NodeKind::BinaryExpr:
                walk(as<BinaryExpr>(n)->lhs.get());
                walk(as<BinaryExpr>(n)->rhs.get());
                break;
            case NodeKind::LogicalExpr:
                walk(as<LogicalExpr>(n)->lhs.get());
                walk(as<LogicalExpr>(n)->rhs.get());
                break;
            case NodeKind::ConditionalExpr:
                walk(as<ConditionalExpr>(n)->test.get());
                walk(as<ConditionalExpr>(n)->consequent.get());
                walk(as<ConditionalExpr>(n)->alternate.get());
                break;
            case NodeKind::AssignExpr:
                walk(as<AssignExpr>(n)->target.get());
                walk(as<AssignExpr>(n)->value.get());
                break;
            case NodeKind::SequenceExpr:
                for (const NodePtr& e : as<SequenceExpr>(n)->exprs) walk(e.get());
                break;
            case NodeKind::CallExpr:
                walk(as<CallExpr>(n)->callee.get());
                for (const NodePtr& a : as<CallExpr>(n)->args) walk(a.get());
                break;
            case NodeKind::NewExpr:
                walk(as<NewExpr>(n)->callee.get());
                for (const NodePtr& a : as<NewExpr>(n)->args) walk(a.get());
                break;
            case NodeKind::MemberExpr:
                walk(as<MemberExpr>(n)->object.get());
                walk(as<MemberExpr>(n)->property.get());
                break;
            case NodeKind::ChainExpr: walk(as<ChainExpr>(n)->expr.get()); break;
            case NodeKind::AwaitExpr: walk(as<AwaitExpr>(n)->argument.get()); break;
            case NodeKind::ArrayPattern:
                for (const NodePtr& e : as<ArrayPattern>(n)->elements) walk(e.get());
                break;
            case NodeKind::ObjectPattern:
                for (const NodePtr& p : as<ObjectPattern>(n)->props) walk(p.get());
                break;
            case NodeKind::AssignmentPattern:
                walk(as<AssignmentPattern>(n)->left.get());
                walk(as<AssignmentPattern>(n)->right.get());
                break;
            case NodeKind::RestElement: walk(as<RestElement>(n)->argument.get()); break;
            case NodeKind::ExprStmt: walk(as<ExprStmt>(n)->expr.get()); break;
            case NodeKind::VarDecl:
                for (const NodePtr& d : as<VarDecl>(n)->declarators) walk(d.get());
                break;
            case NodeKind::VarDeclarator:
                walk(as<VarDeclarator>(n)->id.get());
                walk(as<VarDeclarator>(n)->init.get());
                break;
            case NodeKind::BlockStmt:
                for (const NodePtr& s : as<BlockStmt>(n)->body) walk(s.get());
                break;
            case NodeKind::IfStmt:
                walk(as<IfStmt>(n)->test.get());
                walk(as<IfStmt>(n)->consequent.get());
                walk(as<IfStmt>(n)->alternate.get());
                break;
            case NodeKind::ForStmt:
                walk(as<ForStmt>(n)->init.get());
                walk(as<ForStmt>(n)->test.get());
                walk(as<ForStmt>(n)->update.get());
                walk(as<ForStmt>(n)->body.get());
                break;
            case NodeKind::ForInStmt:
                walk(as<ForInStmt>(n)->left.get());
                walk(as<ForInStmt>(n)->right.get());
                walk(as<ForInStmt>(n)->body.get());
                break;
            case NodeKind::ForOfStmt:
                walk(as<ForOfStmt>(n)->left.get());
                walk(as<ForOfStmt>(n)->right.get());
                walk(as<ForOfStmt>(n)->body.get());
                break;
            case NodeKind::WhileStmt:
                walk(as<WhileStmt>(n)->test.get());
                walk(as<WhileStmt>(n)->body.get());
                break;
            case NodeKind::DoWhileStmt:
                walk(as<DoWhileStmt>(n)->body.get());
                walk(as<DoWhileStmt>(n)->test.get());
                break;
            case NodeKind::ReturnStmt: walk(as<ReturnStmt>(n)->argument.get()); break;
            case NodeKind::ThrowStmt: walk(as<ThrowStmt>(n)->argument.get()); break;
            case NodeKind::TryStmt:
                walk(as<TryStmt>(n)->block.get());
                walk(as<TryStmt>(n)->param.get());
                walk(as<TryStmt>(n)->handler.get());
                walk(as<TryStmt>(n)->finalizer.get());
                break;
            case NodeKind::SwitchStmt:
                walk(as<SwitchStmt>(n)->discriminant.get());
                for (const NodePtr& c : as<SwitchStmt>(n)->cases) walk(c.get());
                break;
            case NodeKind::SwitchCase:
                walk(as<SwitchCase>(n)->test.get());
                for (const NodePtr& s : as<SwitchCase>(n)->body) walk(s.get());
                break;
            case NodeKind::ExportNamedDecl: walk(as<ExportNamedDecl>(n)->declaration.get()); break;
            case NodeKind::ExportDefaultDecl:
                walk(as<ExportDefaultDecl>(n)->declaration.get());
                break;
            default: break;
        }
    };
    walk(program);
    return out;
}

/// Parse-and-extract result for one source. parse_ok=false leaves both
/// signal sets empty.
struct StaticSignals {
    std::set<std::string> api_calls;
    std::multiset<std::string> strings;
    bool parse_ok = true;
    std::vector<std::string> bundle_diagnostics;
};

inline StaticSignals analyze_static(const SourceText& text) {
    StaticSignals out;
    ParsedSourcePtr unit;
    try {
        unit = parse_source(text);
    } catch (const ParseError& e) {
        out.parse_ok = false;
        out.bundle_diagnostics.push_back(std::string("parse error: ") + e.what());
        return out;
    }
    out.api_calls = static_api_calls(unit->program.get());
    out.strings = static_strings(unit->program.get());
    return out;
}

}  // namespace mirage

#endif
