#ifndef MIRAGE_DETAIL_INTERP_MODULES_HPP
#define MIRAGE_DETAIL_INTERP_MODULES_HPP

namespace mirage {

inline void Interpreter::execute_script(const ParsedSourcePtr& unit, const std::string& specifier) {
    retained_units_.push_back(unit);
    loaded_specifiers_.push_back(specifier);
    detail::SpecifierScope spec(*this, unit);
    const auto& body = as<Program>(unit->program.get())->body;
    // Script top level: var and function declarations become global object
    // properties; let/const stay in the declarative global scope.
    hoist_declarations(body, global_env_, /*function_scope=*/true);
    exec_statements(body, global_env_);
}

inline std::string Interpreter::specifier_for(const Url& url) const {
    std::string full = url.to_string();
    std::string origin = origin_.to_string();
    if (full.size() > origin.size() && full.compare(0, origin.size(), origin) == 0) {
        return full.substr(origin.size());
    }
    return full;
}

inline void Interpreter::execute_module_entry(const SourceText& text) {
    Url url = origin_;
    if (auto abs = Url::try_parse(text.specifier)) {
        url = *abs;
    } else {
        url = origin_.join(text.specifier);
    }
    std::string key = url.to_string();
    auto it = modules_.find(key);
    if (it == modules_.end()) {
        auto record = std::make_shared<ModuleRecord>();
        record->url = url;
        record->specifier = text.specifier;
        modules_[key] = record;
        link_module_source(record, text.body ? *text.body : std::string());
        it = modules_.find(key);
    }
    evaluate_module(it->second);
}

inline std::shared_ptr<Interpreter::ModuleRecord> Interpreter::load_module(
    const Url& url, const SourceLocation& requested_at) {
    (void)requested_at;
    std::string key = url.to_string();
    auto it = modules_.find(key);
    if (it != modules_.end()) return it->second;

    auto record = std::make_shared<ModuleRecord>();
    record->url = url;
    record->specifier = specifier_for(url);
    modules_[key] = record;

    std::optional<std::vector<uint8_t>> bytes;
    if (resolver_) bytes = resolver_(url);
    if (!bytes) {
        throw_error("Error", "Cannot find module '" + record->specifier + "'");
    }
    link_module_source(record,
                       std::string(reinterpret_cast<const char*>(bytes->data()), bytes->size()));
    return record;
}

inline void Interpreter::link_module_source(const std::shared_ptr<ModuleRecord>& record,
                                            std::string source) {
    heap_.charge(source.size());
    try {
        record->source =
            parse_source(std::move(source), record->specifier, SourceType::module_);
    } catch (const ParseError& e) {
        throw_error("SyntaxError", e.what());
    }
    retained_units_.push_back(record->source);
    loaded_specifiers_.push_back(record->specifier);

    record->env = heap_.make_env(global_env_);
    record->env->is_function_scope = true;

    const auto& body = as<Program>(record->source->program.get())->body;
    hoist_declarations(body, record->env, /*function_scope=*/true);

    auto declared_names = [](const Node* pat, std::vector<std::string>& out) {
        std::function<void(const Node*)> walk = [&](const Node* p) {
            if (p == nullptr) return;
            switch (p->kind) {
                case NodeKind::Ident:
                    out.push_back(as<Ident>(p)->name);
                    break;
                case NodeKind::ArrayPattern:
                    for (const NodePtr& el : as<ArrayPattern>(p)->elements) walk(el.get());
                    break;
                case NodeKind::ObjectPattern:
                    for (const NodePtr& pr : as<ObjectPattern>(p)->props) walk(pr.get());
                    break;
                case NodeKind::Property:
                    walk(as<Property>(p)->value.get());
                    break;
                case NodeKind::AssignmentPattern:
                    walk(as<AssignmentPattern>(p)->left.get());
                    break;
                case NodeKind::RestElement:
                    walk(as<RestElement>(p)->argument.get());
                    break;
                default:
                    break;
            }
        };
        walk(pat);
    };

    // Pass 1: local exports, so import cycles back into this module resolve.
    for (const NodePtr& s : body) {
        if (s->kind == NodeKind::ExportNamedDecl) {
            const auto* ex = as<ExportNamedDecl>(s.get());
            if (ex->source) continue;  // re-exports handled in pass 2
            if (ex->declaration) {
                const Node* d = ex->declaration.get();
                if (d->kind == NodeKind::VarDecl) {
                    for (const NodePtr& dtor : as<VarDecl>(d)->declarators) {
                        std::vector<std::string> names;
                        declared_names(as<VarDeclarator>(dtor.get())->id.get(), names);
                        for (std::string& n : names) {
                            record->exports[n] = {record->env, n};
                        }
                    }
                } else if (d->kind == NodeKind::FunctionNode) {
                    const std::string& n = as<FunctionNode>(d)->name;
                    if (!n.empty()) record->exports[n] = {record->env, n};
                } else if (d->kind == NodeKind::ClassNode) {
                    const std::string& n = as<ClassNode>(d)->name;
                    if (!n.empty()) record->exports[n] = {record->env, n};
                }
            }
            for (const ExportSpec& spec : ex->specifiers) {
                record->exports[spec.exported] = {record->env, spec.local};
            }
        } else if (s->kind == NodeKind::ExportDefaultDecl) {
            record->exports["default"] = {record->env, "*default*"};
        }
    }

    // Pass 2: load the dependency graph depth-first, in source order.
    for (const NodePtr& s : body) {
        const Node* n = s.get();
        std::string dep_spec;
        if (n->kind == NodeKind::ImportDecl) {
            dep_spec = as<ImportDecl>(n)->source;
        } else if (n->kind == NodeKind::ExportNamedDecl && as<ExportNamedDecl>(n)->source) {
            dep_spec = *as<ExportNamedDecl>(n)->source;
        } else if (n->kind == NodeKind::ExportAllDecl) {
            dep_spec = as<ExportAllDecl>(n)->source;
        } else {
            continue;
        }
        Url dep_url;
        try {
            dep_url = resolve_specifier(record->url, dep_spec);
        } catch (const ResolveError& e) {
            throw_error("Error", e.what());
        }
        std::shared_ptr<ModuleRecord> child = load_module(dep_url, loc_of(n));
        record->dependencies.push_back(dep_url.to_string());

        if (n->kind == NodeKind::ImportDecl) {
            for (const ImportSpec& spec : as<ImportDecl>(n)->specifiers) {
                if (spec.kind == ImportSpec::Kind::Namespace) {
                    heap_.charge(Heap::kBindingCost);
                    record->env->declare(spec.local, Value(module_namespace(child)), false);
                    continue;
                }
                std::string want =
                    spec.kind == ImportSpec::Kind::Default ? "default" : spec.imported;
                auto resolved = resolve_export(child, want);
                if (!resolved) {
                    throw_error("SyntaxError", "The requested module '" + dep_spec +
                                                   "' does not provide an export named '" + want +
                                                   "'");
                }
                heap_.charge(Heap::kBindingCost);
                record->env->declare(spec.local, Value(), false);
                Binding* b = record->env->find_local(spec.local);
                b->import_env = resolved->first;
                b->import_name = resolved->second;
            }
        } else if (n->kind == NodeKind::ExportNamedDecl) {
            for (const ExportSpec& spec : as<ExportNamedDecl>(n)->specifiers) {
                auto resolved = resolve_export(child, spec.local);
                if (!resolved) {
                    throw_error("SyntaxError", "The requested module '" + dep_spec +
                                                   "' does not provide an export named '" +
                                                   spec.local + "'");
                }
                record->exports[spec.exported] = *resolved;
            }
        } else {
            const auto* all = as<ExportAllDecl>(n);
            if (all->exported) {
                // `export * as name from "..."` exposes the namespace object
                // through a synthetic local binding.
                std::string local = "*ns:" + *all->exported + "*";
                heap_.charge(Heap::kBindingCost);
                record->env->declare(local, Value(module_namespace(child)), false);
                record->exports[*all->exported] = {record->env, local};
            } else {
                record->star_exports.push_back(dep_url.to_string());
            }
        }
    }
    record->state = ModuleRecord::State::Linked;
}

inline std::optional<std::pair<EnvPtr, std::string>> Interpreter::resolve_export(
    const std::shared_ptr<ModuleRecord>& record, const std::string& name, int hops) {
    if (hops > 64) return std::nullopt;
    auto it = record->exports.find(name);
    if (it != record->exports.end()) return it->second;
    if (name == "default") return std::nullopt;  // star re-exports never forward default
    for (const std::string& key : record->star_exports) {
        auto mod = modules_.find(key);
        if (mod == modules_.end()) continue;
        if (auto r = resolve_export(mod->second, name, hops + 1)) return r;
    }
    return std::nullopt;
}

inline ObjectPtr Interpreter::module_namespace(const std::shared_ptr<ModuleRecord>& record) {
    if (record->namespace_object) return record->namespace_object;
    ObjectPtr ns = make_object();
    ns->set_prototype(nullptr);
    ns->set_class_name("Module");
    record->namespace_object = ns;

    std::set<std::string> names;
    std::function<void(const std::shared_ptr<ModuleRecord>&, int)> collect =
        [&](const std::shared_ptr<ModuleRecord>& mod, int depth) {
            if (depth > 64) return;
            for (const auto& [name, target] : mod->exports) {
                if (depth > 0 && name == "default") continue;
                names.insert(name);
            }
            for (const std::string& key : mod->star_exports) {
                auto it = modules_.find(key);
                if (it != modules_.end()) collect(it->second, depth + 1);
            }
        };
    collect(record, 0);

    Interpreter* self = this;
    for (const std::string& name : names) {
        auto resolved = resolve_export(record, name);
        if (!resolved) continue;
        EnvPtr target_env = resolved->first;
        std::string target_name = resolved->second;
        PropertySlot slot;
        slot.is_accessor = true;
        slot.enumerable = true;
        slot.getter = std::static_pointer_cast<Object>(native_fn(
            name, [self, target_env, target_name](const NativeCallInfo&) -> Value {
                EnvPtr env = target_env;
                std::string binding_name = target_name;
                for (int hop = 0; hop < 32; hop++) {
                    Binding* b = env->find_local(binding_name);
                    if (b == nullptr) {
                        self->throw_error("ReferenceError", binding_name + " is not defined");
                    }
                    if (b->import_env) {
                        EnvPtr next = b->import_env;
                        binding_name = b->import_name;
                        env = next;
                        continue;
                    }
                    if (!b->initialized) {
                        self->throw_error("ReferenceError", "Cannot access '" + binding_name +
                                                                "' before initialization");
                    }
                    return b->value;
                }
                self->throw_error("ReferenceError", "circular import binding");
            }));
        heap_.charge(Heap::kPropertyCost);
        ns->define_own(PropertyKey(name), std::move(slot));
    }
    return ns;
}

inline void Interpreter::evaluate_module(const std::shared_ptr<ModuleRecord>& record) {
    if (record->state == ModuleRecord::State::Evaluating ||
        record->state == ModuleRecord::State::Evaluated) {
        return;
    }
    record->state = ModuleRecord::State::Evaluating;
    for (const std::string& key : record->dependencies) {
        auto it = modules_.find(key);
        if (it != modules_.end()) evaluate_module(it->second);
    }
    detail::SpecifierScope spec(*this, record->source);
    exec_statements(as<Program>(record->source->program.get())->body, record->env);
    record->state = ModuleRecord::State::Evaluated;
}

}  // namespace mirage

#endif
