#ifndef MIRAGE_DETAIL_INTERP_EVAL_HPP
#define MIRAGE_DETAIL_INTERP_EVAL_HPP

namespace mirage {

namespace detail {

/// Unwinds a nullish short-circuit to the enclosing optional chain boundary.
struct ChainShort {};

class SpecifierScope {
public:
    SpecifierScope(Interpreter& in, const ParsedSourcePtr& unit)
        : in_(in), saved_spec_(in.current_specifier_), saved_unit_(in.current_unit_) {
        if (unit) {
            in_.current_specifier_ = unit->text.specifier;
            in_.current_unit_ = unit;
        }
    }
    ~SpecifierScope() {
        in_.current_specifier_ = saved_spec_;
        in_.current_unit_ = saved_unit_;
    }

private:
    Interpreter& in_;
    std::string saved_spec_;
    ParsedSourcePtr saved_unit_;
};

class CallDepthScope {
public:
    explicit CallDepthScope(Interpreter& in) : in_(in) {
        if (++in_.call_depth_ > Interpreter::kMaxCallDepth) {
            --in_.call_depth_;
            in_.throw_error("RangeError", "Maximum call stack size exceeded");
        }
    }
    ~CallDepthScope() { --in_.call_depth_; }

private:
    Interpreter& in_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Hoisting
// ---------------------------------------------------------------------------

inline void Interpreter::hoist_declarations(const std::vector<NodePtr>& stmts, const EnvPtr& env,
                                            bool function_scope) {
    const bool target_global = function_scope && env == global_env_;

    // Recursive var collection (function declarations are handled per body).
    std::function<void(const Node*)> collect_vars = [&](const Node* n) {
        if (n == nullptr) return;
        switch (n->kind) {
            case NodeKind::VarDecl: {
                const auto* decl = as<VarDecl>(n);
                if (decl->decl_kind != "var") return;
                std::function<void(const Node*)> names = [&](const Node* pat) {
                    if (pat == nullptr) return;
                    switch (pat->kind) {
                        case NodeKind::Ident: {
                            const std::string& name = as<Ident>(pat)->name;
                            if (target_global) {
                                if (global_->find_own(PropertyKey(name)) == nullptr) {
                                    heap_.charge(Heap::kPropertyCost);
                                    global_->set_own(PropertyKey(name), Value());
                                }
                            } else if (env->find_local(name) == nullptr) {
                                heap_.charge(Heap::kBindingCost);
                                env->declare(name, Value());
                            }
                            break;
                        }
                        case NodeKind::ArrayPattern:
                            for (const NodePtr& el : as<ArrayPattern>(pat)->elements)
                                names(el.get());
                            break;
                        case NodeKind::ObjectPattern:
                            for (const NodePtr& p : as<ObjectPattern>(pat)->props) names(p.get());
                            break;
                        case NodeKind::Property:
                            names(as<Property>(pat)->value.get());
                            break;
                        case NodeKind::AssignmentPattern:
                            names(as<AssignmentPattern>(pat)->left.get());
                            break;
                        case NodeKind::RestElement:
                            names(as<RestElement>(pat)->argument.get());
                            break;
                        default:
                            break;
                    }
                };
                for (const NodePtr& d : decl->declarators) names(as<VarDeclarator>(d.get())->id.get());
                break;
            }
            case NodeKind::BlockStmt:
                for (const NodePtr& s : as<BlockStmt>(n)->body) collect_vars(s.get());
                break;
            case NodeKind::IfStmt:
                collect_vars(as<IfStmt>(n)->consequent.get());
                collect_vars(as<IfStmt>(n)->alternate.get());
                break;
            case NodeKind::ForStmt:
                collect_vars(as<ForStmt>(n)->init.get());
                collect_vars(as<ForStmt>(n)->body.get());
                break;
            case NodeKind::ForInStmt:
                collect_vars(as<ForInStmt>(n)->left.get());
                collect_vars(as<ForInStmt>(n)->body.get());
                break;
            case NodeKind::ForOfStmt:
                collect_vars(as<ForOfStmt>(n)->left.get());
                collect_vars(as<ForOfStmt>(n)->body.get());
                break;
            case NodeKind::WhileStmt:
                collect_vars(as<WhileStmt>(n)->body.get());
                break;
            case NodeKind::DoWhileStmt:
                collect_vars(as<DoWhileStmt>(n)->body.get());
                break;
            case NodeKind::TryStmt: {
                const auto* t = as<TryStmt>(n);
                collect_vars(t->block.get());
                collect_vars(t->handler.get());
                collect_vars(t->finalizer.get());
                break;
            }
            case NodeKind::SwitchStmt:
                for (const NodePtr& c : as<SwitchStmt>(n)->cases)
                    for (const NodePtr& s : as<SwitchCase>(c.get())->body) collect_vars(s.get());
                break;
            case NodeKind::ExportNamedDecl:
                collect_vars(as<ExportNamedDecl>(n)->declaration.get());
                break;
            default:
                break;
        }
    };

    if (function_scope) {
        for (const NodePtr& s : stmts) collect_vars(s.get());
    }

    // Lexical declarations and function declarations at this body's top level.
    for (const NodePtr& s : stmts) {
        const Node* n = s.get();
        if (n->kind == NodeKind::ExportNamedDecl && as<ExportNamedDecl>(n)->declaration) {
            n = as<ExportNamedDecl>(n)->declaration.get();
        } else if (n->kind == NodeKind::ExportDefaultDecl) {
            heap_.charge(Heap::kBindingCost);
            env->declare("*default*", Value(), true, /*initialized=*/false);
            const Node* d = as<ExportDefaultDecl>(n)->declaration.get();
            if (d != nullptr && d->kind == NodeKind::FunctionNode &&
                !as<FunctionNode>(d)->name.empty()) {
                n = d;  // named default function also hoists under its own name
            } else {
                continue;
            }
        }
        switch (n->kind) {
            case NodeKind::FunctionNode: {
                const auto* fn = as<FunctionNode>(n);
                if (!fn->is_declaration && n == s.get()) break;
                Value f(std::static_pointer_cast<Object>(instantiate_function(fn, env)));
                if (target_global) {
                    heap_.charge(Heap::kPropertyCost);
                    global_->set_own(PropertyKey(fn->name), std::move(f));
                } else {
                    heap_.charge(Heap::kBindingCost);
                    env->declare(fn->name, std::move(f));
                }
                break;
            }
            case NodeKind::VarDecl: {
                const auto* decl = as<VarDecl>(n);
                if (decl->decl_kind == "var") break;
                bool mut = decl->decl_kind != "const";
                std::function<void(const Node*)> names = [&](const Node* pat) {
                    if (pat == nullptr) return;
                    switch (pat->kind) {
                        case NodeKind::Ident:
                            heap_.charge(Heap::kBindingCost);
                            env->declare(as<Ident>(pat)->name, Value(), mut,
                                         /*initialized=*/false);
                            break;
                        case NodeKind::ArrayPattern:
                            for (const NodePtr& el : as<ArrayPattern>(pat)->elements)
                                names(el.get());
                            break;
                        case NodeKind::ObjectPattern:
                            for (const NodePtr& p : as<ObjectPattern>(pat)->props) names(p.get());
                            break;
                        case NodeKind::Property:
                            names(as<Property>(pat)->value.get());
                            break;
                        case NodeKind::AssignmentPattern:
                            names(as<AssignmentPattern>(pat)->left.get());
                            break;
                        case NodeKind::RestElement:
                            names(as<RestElement>(pat)->argument.get());
                            break;
                        default:
                            break;
                    }
                };
                for (const NodePtr& d : decl->declarators)
                    names(as<VarDeclarator>(d.get())->id.get());
                break;
            }
            case NodeKind::ClassNode: {
                const auto* cls = as<ClassNode>(n);
                if (cls->is_declaration && !cls->name.empty()) {
                    heap_.charge(Heap::kBindingCost);
                    env->declare(cls->name, Value(), true, /*initialized=*/false);
                }
                break;
            }
            default:
                break;
        }
    }
}

// ---------------------------------------------------------------------------
// Functions and classes
// ---------------------------------------------------------------------------

inline FunctionPtr Interpreter::instantiate_function(const FunctionNode* fn, const EnvPtr& env) {
    FunctionPtr f = heap_.make<FunctionObject>();
    f->set_prototype(function_proto_);
    f->decl = fn;
    f->source = current_unit_;
    f->closure = env;
    f->fn_name = fn->name;
    f->is_arrow = fn->is_arrow;
    f->is_async = fn->is_async;
    size_t count = 0;
    for (const NodePtr& p : fn->params) {
        if (p->kind == NodeKind::AssignmentPattern || p->kind == NodeKind::RestElement) break;
        count++;
    }
    f->param_count = count;
    return f;
}

inline Value Interpreter::eval_class(const ClassNode* cls, const EnvPtr& env) {
    Value parent_v;
    ObjectPtr parent_proto = object_proto_;
    ObjectPtr parent_obj;
    bool derived = cls->super_class != nullptr;
    if (derived) {
        parent_v = eval_expr(cls->super_class.get(), env);
        if (parent_v.is_null()) {
            parent_proto = nullptr;
            derived = false;
        } else if (is_callable(parent_v)) {
            parent_obj = parent_v.as_object();
            Value pp = get_property(parent_v, PropertyKey("prototype"), SourceLocation{}, true);
            parent_proto = pp.is_object() ? pp.as_object() : nullptr;
        } else {
            throw_error("TypeError", "Class extends value is not a constructor");
        }
    }

    EnvPtr class_env = heap_.make_env(env);
    ObjectPtr proto_obj = make_object();
    proto_obj->set_prototype(parent_proto);

    FunctionPtr ctor;
    for (const NodePtr& m : cls->members) {
        const auto* member = as<ClassMember>(m.get());
        if (member->member_kind == ClassMember::Kind::Constructor) {
            ctor = instantiate_function(as<FunctionNode>(member->value.get()), class_env);
            break;
        }
    }
    if (!ctor) {
        ctor = heap_.make<FunctionObject>();
        ctor->closure = class_env;
        ctor->source = current_unit_;
    }
    ctor->set_prototype(parent_obj && parent_obj->kind() == ObjectKind::Function
                            ? parent_obj
                            : function_proto_);
    ctor->is_class_constructor = true;
    ctor->class_decl = cls;
    ctor->parent_class = parent_obj;
    ctor->home_object = proto_obj;
    ctor->fn_name = cls->name;

    Value ctor_v(std::static_pointer_cast<Object>(ctor));
    PropertySlot proto_slot;
    proto_slot.value = Value(proto_obj);
    proto_slot.enumerable = false;
    proto_slot.writable = false;
    ctor->define_own(PropertyKey("prototype"), std::move(proto_slot));
    PropertySlot ctor_slot;
    ctor_slot.value = ctor_v;
    ctor_slot.enumerable = false;
    proto_obj->define_own(PropertyKey("constructor"), std::move(ctor_slot));

    if (!cls->name.empty()) {
        heap_.charge(Heap::kBindingCost);
        class_env->declare(cls->name, ctor_v, false);
    }

    for (const NodePtr& m : cls->members) {
        const auto* member = as<ClassMember>(m.get());
        if (member->member_kind == ClassMember::Kind::Constructor) continue;
        ObjectPtr target = member->is_static ? std::static_pointer_cast<Object>(ctor) : proto_obj;
        PropertyKey key;
        if (member->computed) {
            key = to_property_key(eval_expr(member->key.get(), class_env));
        } else if (member->key->kind == NodeKind::Ident) {
            key = PropertyKey(as<Ident>(member->key.get())->name);
        } else if (member->key->kind == NodeKind::StringLit) {
            key = PropertyKey(as<StringLit>(member->key.get())->value);
        } else if (member->key->kind == NodeKind::NumberLit) {
            key = PropertyKey(js_number_to_string(as<NumberLit>(member->key.get())->value));
        }
        switch (member->member_kind) {
            case ClassMember::Kind::Method: {
                FunctionPtr f =
                    instantiate_function(as<FunctionNode>(member->value.get()), class_env);
                f->home_object = target;
                if (f->fn_name.empty() && !key.is_symbol()) f->fn_name = key.name;
                PropertySlot slot;
                slot.value = Value(std::static_pointer_cast<Object>(f));
                slot.enumerable = false;
                heap_.charge(Heap::kPropertyCost);
                target->define_own(key, std::move(slot));
                break;
            }
            case ClassMember::Kind::Getter:
            case ClassMember::Kind::Setter: {
                FunctionPtr f =
                    instantiate_function(as<FunctionNode>(member->value.get()), class_env);
                f->home_object = target;
                PropertySlot* existing = target->find_own(key);
                PropertySlot slot;
                if (existing != nullptr && existing->is_accessor) slot = *existing;
                slot.is_accessor = true;
                slot.enumerable = false;
                slot.value = Value();
                if (member->member_kind == ClassMember::Kind::Getter) {
                    slot.getter = std::static_pointer_cast<Object>(f);
                } else {
                    slot.setter = std::static_pointer_cast<Object>(f);
                }
                heap_.charge(Heap::kPropertyCost);
                target->define_own(key, std::move(slot));
                break;
            }
            case ClassMember::Kind::Field: {
                if (!member->is_static) break;  // instance fields run at construction
                EnvPtr field_env = heap_.make_env(class_env);
                field_env->is_function_scope = true;
                field_env->has_this = true;
                field_env->this_value = ctor_v;
                Value v = member->value ? eval_expr(member->value.get(), field_env) : Value();
                heap_.charge(Heap::kPropertyCost);
                ctor->set_own(key, std::move(v));
                break;
            }
            default:
                break;
        }
    }
    return ctor_v;
}

// ---------------------------------------------------------------------------
// Calls
// ---------------------------------------------------------------------------

inline Value Interpreter::call_value(const Value& callee, const Value& this_value,
                                     std::vector<Value> args, const SourceLocation& loc,
                                     bool is_construct, Value new_target) {
    limits_.tick();
    const SourceLocation& at = loc.specifier.empty() ? current_loc_ : loc;
    if (MockObject* mock = as_mock(callee)) {
        (void)mock;
        detail::CallDepthScope depth(*this);
        return mock_invoke(std::static_pointer_cast<MockObject>(callee.as_object()), args, at,
                           is_construct ? EventKind::Construct : EventKind::Call);
    }
    FunctionObject* raw = as_function(callee);
    if (raw == nullptr) {
        std::string what = callee.is_undefined() ? "undefined"
                           : callee.is_null()    ? "null"
                           : callee.is_object()  ? "[object " + callee.as_object()->class_name() + "]"
                                                 : to_string_value(callee);
        throw_error("TypeError", what + " is not a function");
    }
    FunctionPtr fn = std::static_pointer_cast<FunctionObject>(callee.as_object());
    if (fn->bound_target) {
        std::vector<Value> merged = fn->bound_args;
        merged.insert(merged.end(), std::make_move_iterator(args.begin()),
                      std::make_move_iterator(args.end()));
        Value target_v(fn->bound_target);
        if (is_construct) return call_value(target_v, Value(), std::move(merged), at, true);
        return call_value(target_v, fn->bound_this, std::move(merged), at);
    }
    detail::CallDepthScope depth(*this);
    if (fn->native) {
        if (!fn->event_path.empty()) {
            log_.log_call(is_construct ? EventKind::Construct : EventKind::Call, fn->event_path,
                          at, args, Value());
        }
        if (fn->is_hook_stub) capture_callback_args(args);
        Value nt = new_target;
        if (is_construct && nt.is_undefined()) nt = callee;
        NativeCallInfo info{*this, this_value, args, std::move(nt)};
        return fn->native(info);
    }
    return call_function(fn, this_value, args, is_construct, std::move(new_target));
}

inline Value Interpreter::call_function(const FunctionPtr& fn, const Value& this_value,
                                        std::vector<Value>& args, bool is_construct,
                                        Value new_target) {
    Value fn_v(std::static_pointer_cast<Object>(fn));
    if (fn->is_class_constructor && !is_construct && new_target.is_undefined()) {
        throw_error("TypeError", "Class constructor " + fn->fn_name +
                                     " cannot be invoked without 'new'");
    }

    Value this_v = this_value;
    ObjectPtr created;
    if (is_construct) {
        Value proto_v = get_property(fn_v, PropertyKey("prototype"), SourceLocation{}, true);
        created = heap_.make<Object>();
        created->set_prototype(proto_v.is_object() ? proto_v.as_object() : object_proto_);
        this_v = Value(created);
        if (new_target.is_undefined()) new_target = fn_v;
    }

    EnvPtr env = heap_.make_env(fn->closure ? fn->closure : global_env_);
    env->is_function_scope = true;
    if (!fn->is_arrow) {
        env->has_this = true;
        env->this_value = this_v.is_nullish() ? Value(global_) : this_v;
        env->new_target = new_target;
        env->home_object = fn->home_object;
    }

    detail::SpecifierScope spec(*this, fn->source);

    if (fn->is_class_constructor && this_v.is_object()) {
        if (fn->parent_class) {
            env->declare("%superctor%", Value(fn->parent_class), false);
        }
        if (fn->class_decl != nullptr) {
            for (const NodePtr& m : fn->class_decl->members) {
                const auto* member = as<ClassMember>(m.get());
                if (member->member_kind != ClassMember::Kind::Field || member->is_static) continue;
                PropertyKey key;
                if (member->computed) {
                    key = to_property_key(eval_expr(member->key.get(), env));
                } else if (member->key->kind == NodeKind::Ident) {
                    key = PropertyKey(as<Ident>(member->key.get())->name);
                } else if (member->key->kind == NodeKind::StringLit) {
                    key = PropertyKey(as<StringLit>(member->key.get())->value);
                } else if (member->key->kind == NodeKind::NumberLit) {
                    key = PropertyKey(js_number_to_string(as<NumberLit>(member->key.get())->value));
                }
                Value v = member->value ? eval_expr(member->value.get(), env) : Value();
                heap_.charge(Heap::kPropertyCost);
                this_v.as_object()->set_own(key, std::move(v));
            }
        }
    }

    Value result;
    auto run_body = [&]() {
        if (fn->decl == nullptr) {
            // Synthesized default constructor: forward to the base class.
            if (fn->parent_class) {
                Value parent_v(fn->parent_class);
                if (as_mock(parent_v) != nullptr) {
                    std::vector<Value> copy = args;
                    mock_invoke(std::static_pointer_cast<MockObject>(fn->parent_class), copy,
                                current_loc_, EventKind::Construct);
                } else if (FunctionObject* pf = as_function(parent_v)) {
                    if (pf->native) {
                        call_value(parent_v, this_v, args, current_loc_);
                    } else {
                        std::vector<Value> copy = args;
                        call_function(std::static_pointer_cast<FunctionObject>(fn->parent_class),
                                      this_v, copy, false, new_target);
                    }
                }
            }
            return;
        }
        const FunctionNode* decl = fn->decl;
        // Parameters
        for (size_t i = 0; i < decl->params.size(); i++) {
            const Node* param = decl->params[i].get();
            if (param->kind == NodeKind::RestElement) {
                std::vector<Value> rest(args.begin() + std::min(args.size(), i), args.end());
                bind_pattern(as<RestElement>(param)->argument.get(),
                             Value(std::static_pointer_cast<Object>(make_array(std::move(rest)))),
                             env, "param");
                break;
            }
            Value arg = i < args.size() ? args[i] : Value();
            bind_pattern(param, std::move(arg), env, "param");
        }
        if (!fn->is_arrow && env->find_local("arguments") == nullptr) {
            auto arguments = make_array(args);
            arguments->set_class_name("Arguments");
            heap_.charge(Heap::kBindingCost);
            env->declare("arguments", Value(std::static_pointer_cast<Object>(arguments)));
        }
        if (decl->is_expression_body) {
            result = eval_expr(decl->body.get(), env);
            return;
        }
        const auto& body = as<BlockStmt>(decl->body.get())->body;
        hoist_declarations(body, env, /*function_scope=*/true);
        try {
            exec_statements(body, env);
        } catch (ReturnSignal& r) {
            result = std::move(r.value);
        }
    };

    if (fn->is_async) {
        PromisePtr p = make_promise();
        try {
            run_body();
            settle_promise(p, std::move(result), true);
        } catch (GuestThrow& gt) {
            settle_promise(p, std::move(gt.value), false);
        }
        return Value(std::static_pointer_cast<Object>(p));
    }
    run_body();
    if (is_construct) {
        if (result.is_object()) return result;
        return Value(created);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Destructuring
// ---------------------------------------------------------------------------

inline void Interpreter::bind_pattern(const Node* pattern, const Value& v, const EnvPtr& env,
                                      const char* decl_kind) {
    switch (pattern->kind) {
        case NodeKind::Ident: {
            const std::string& name = as<Ident>(pattern)->name;
            if (decl_kind == nullptr) {
                assign_identifier(name, v, env, pattern);
                return;
            }
            std::string kind(decl_kind);
            if (kind == "var") {
                Binding* b = env->find(name);
                if (b != nullptr && !b->import_env) {
                    b->value = v;
                    b->initialized = true;
                } else {
                    assign_identifier(name, v, env, pattern);
                }
                return;
            }
            if (kind == "param") {
                heap_.charge(Heap::kBindingCost);
                env->declare(name, v);
                return;
            }
            // let / const / catch bindings
            Binding* b = env->find_local(name);
            if (b == nullptr) {
                heap_.charge(Heap::kBindingCost);
                env->declare(name, v, kind != "const");
                return;
            }
            b->value = v;
            b->initialized = true;
            b->is_mutable = kind != "const";
            return;
        }
        case NodeKind::AssignmentPattern: {
            const auto* ap = as<AssignmentPattern>(pattern);
            Value actual = v.is_undefined() ? eval_expr(ap->right.get(), env) : v;
            bind_pattern(ap->left.get(), actual, env, decl_kind);
            return;
        }
        case NodeKind::ArrayPattern: {
            const auto* ap = as<ArrayPattern>(pattern);
            Value items_v = array_from_iterable(v, loc_of(pattern));
            ArrayObject* items = as_array(items_v);
            for (size_t i = 0; i < ap->elements.size(); i++) {
                const Node* el = ap->elements[i].get();
                if (el == nullptr) continue;  // hole
                if (el->kind == NodeKind::RestElement) {
                    std::vector<Value> rest;
                    if (items != nullptr && i < items->elements.size()) {
                        rest.assign(items->elements.begin() + static_cast<ptrdiff_t>(i),
                                    items->elements.end());
                    }
                    bind_pattern(as<RestElement>(el)->argument.get(),
                                 Value(std::static_pointer_cast<Object>(make_array(std::move(rest)))),
                                 env, decl_kind);
                    break;
                }
                Value item = (items != nullptr && i < items->elements.size())
                                 ? items->elements[i]
                                 : Value();
                bind_pattern(el, item, env, decl_kind);
            }
            return;
        }
        case NodeKind::ObjectPattern: {
            const auto* op = as<ObjectPattern>(pattern);
            if (v.is_nullish()) {
                throw_error("TypeError", "Cannot destructure nullish value");
            }
            std::vector<PropertyKey> taken;
            for (const NodePtr& p : op->props) {
                if (p->kind == NodeKind::RestElement) {
                    ObjectPtr rest = make_object();
                    if (v.is_object()) {
                        for (const auto& [key, slot] : v.as_object()->raw_props()) {
                            if (key.is_symbol() || !slot.enumerable || slot.is_accessor) continue;
                            bool skip = false;
                            for (const PropertyKey& t : taken) {
                                if (t == key) {
                                    skip = true;
                                    break;
                                }
                            }
                            if (!skip) {
                                heap_.charge(Heap::kPropertyCost);
                                rest->set_own(key, slot.value);
                            }
                        }
                    }
                    bind_pattern(as<RestElement>(p.get())->argument.get(), Value(rest), env,
                                 decl_kind);
                    continue;
                }
                const auto* prop = as<Property>(p.get());
                PropertyKey key;
                if (prop->computed) {
                    key = to_property_key(eval_expr(prop->key.get(), env));
                } else if (prop->key->kind == NodeKind::Ident) {
                    key = PropertyKey(as<Ident>(prop->key.get())->name);
                } else if (prop->key->kind == NodeKind::StringLit) {
                    key = PropertyKey(as<StringLit>(prop->key.get())->value);
                } else if (prop->key->kind == NodeKind::NumberLit) {
                    key = PropertyKey(js_number_to_string(as<NumberLit>(prop->key.get())->value));
                }
                taken.push_back(key);
                Value item = get_property(v, key, loc_of(prop));
                bind_pattern(prop->value.get(), item, env, decl_kind);
            }
            return;
        }
        case NodeKind::MemberExpr: {
            if (decl_kind != nullptr) throw_error("SyntaxError", "Invalid destructuring target");
            const auto* member = as<MemberExpr>(pattern);
            Value base = eval_expr(member->object.get(), env);
            PropertyKey key =
                member->computed
                    ? to_property_key(eval_expr(member->property.get(), env))
                    : PropertyKey(as<Ident>(member->property.get())->name);
            set_property(base, key, v, loc_of(pattern));
            return;
        }
        default:
            throw_error("SyntaxError", "Invalid binding pattern");
    }
}

// ---------------------------------------------------------------------------
// Iteration
// ---------------------------------------------------------------------------

inline Value Interpreter::array_from_iterable(const Value& v, const SourceLocation& loc) {
    std::vector<Value> out;
    for_of_each(v, loc, [&](Value item) {
        out.push_back(std::move(item));
        return true;
    });
    return Value(std::static_pointer_cast<Object>(make_array(std::move(out))));
}

inline void Interpreter::for_of_each(const Value& iterable, const SourceLocation& loc,
                                     const std::function<bool(Value)>& body) {
    if (iterable.is_string()) {
        // Iterate by code point, as the string iterator does.
        std::u16string u = detail::utf8_to_utf16(iterable.as_string());
        for (size_t i = 0; i < u.size();) {
            limits_.tick();
            size_t len = (u[i] >= 0xD800 && u[i] <= 0xDBFF && i + 1 < u.size() &&
                          u[i + 1] >= 0xDC00 && u[i + 1] <= 0xDFFF)
                             ? 2
                             : 1;
            if (!body(heap_.str(detail::utf16_to_utf8(u.substr(i, len))))) return;
            i += len;
        }
        return;
    }
    if (!iterable.is_object()) {
        throw_error("TypeError",
                    to_string_value(iterable).substr(0, 64) + " is not iterable");
    }
    if (as_mock(iterable) != nullptr) {
        // Mocks iterate once, yielding themselves, so loops make progress.
        body(iterable);
        return;
    }
    if (ArrayObject* arr = as_array(iterable)) {
        for (size_t i = 0; i < arr->elements.size(); i++) {
            limits_.tick();
            if (!body(arr->elements[i])) return;
        }
        return;
    }
    // Custom iterator protocol.
    Value iter_fn =
        get_property(iterable, PropertyKey(JsSymbol{well_known::iterator, {}}), loc, true);
    if (!is_callable(iter_fn)) {
        throw_error("TypeError", "value is not iterable");
    }
    Value iter = call_value(iter_fn, iterable, {}, loc);
    Value next_fn = get_property(iter, PropertyKey("next"), loc, true);
    for (uint64_t guard = 0; guard < 1u << 22; guard++) {
        limits_.tick();
        Value step = call_value(next_fn, iter, {}, loc);
        if (!step.is_object()) throw_error("TypeError", "iterator result is not an object");
        if (to_boolean(get_property(step, PropertyKey("done"), loc, true))) return;
        if (!body(get_property(step, PropertyKey("value"), loc, true))) return;
    }
    throw_error("RangeError", "iterator produced too many values");
}

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

inline void Interpreter::exec_statements(const std::vector<NodePtr>& stmts, const EnvPtr& env) {
    for (const NodePtr& s : stmts) exec_stmt(s.get(), env);
}

inline void Interpreter::bind_pattern_class_name(const std::string& name, const Value& v,
                                                 const EnvPtr& env) {
    if (Binding* b = env->find_local(name)) {
        b->value = v;
        b->initialized = true;
    } else {
        heap_.charge(Heap::kBindingCost);
        env->declare(name, v);
    }
}

inline void Interpreter::bind_for_target(const Node* left, Value v, const EnvPtr& iter_env) {
    if (left->kind == NodeKind::VarDecl) {
        const auto* decl = as<VarDecl>(left);
        const auto* dtor = as<VarDeclarator>(decl->declarators.at(0).get());
        bind_pattern(dtor->id.get(), v, iter_env, decl->decl_kind.c_str());
        return;
    }
    if (left->kind == NodeKind::Ident) {
        assign_identifier(as<Ident>(left)->name, std::move(v), iter_env, left);
        return;
    }
    bind_pattern(left, v, iter_env, nullptr);
}

inline Value Interpreter::this_of(const EnvPtr& env) {
    for (EnvRecord* e = env.get(); e != nullptr; e = e->parent().get()) {
        if (e->has_this) return e->this_value;
    }
    return Value(global_);
}

inline EnvRecord* Interpreter::function_scope_of(const EnvPtr& env) {
    for (EnvRecord* e = env.get(); e != nullptr; e = e->parent().get()) {
        if (e->has_this) return e;
    }
    return nullptr;
}

inline void Interpreter::exec_stmt(const Node* n, const EnvPtr& env) {
    limits_.tick();
    switch (n->kind) {
        case NodeKind::ExprStmt:
            eval_expr(as<ExprStmt>(n)->expr.get(), env);
            return;
        case NodeKind::VarDecl: {
            const auto* decl = as<VarDecl>(n);
            for (const NodePtr& d : decl->declarators) {
                const auto* dtor = as<VarDeclarator>(d.get());
                if (dtor->init) {
                    Value v = eval_expr(dtor->init.get(), env);
                    if (FunctionObject* f = as_function(v)) {
                        if (f->fn_name.empty() && dtor->id->kind == NodeKind::Ident) {
                            f->fn_name = as<Ident>(dtor->id.get())->name;
                        }
                    }
                    bind_pattern(dtor->id.get(), v, env, decl->decl_kind.c_str());
                } else if (decl->decl_kind != "var") {
                    bind_pattern(dtor->id.get(), Value(), env, decl->decl_kind.c_str());
                }
            }
            return;
        }
        case NodeKind::FunctionNode:
            return;  // hoisted
        case NodeKind::ClassNode: {
            const auto* cls = as<ClassNode>(n);
            Value v = eval_class(cls, env);
            if (!cls->name.empty()) bind_pattern_class_name(cls->name, v, env);
            return;
        }
        case NodeKind::BlockStmt: {
            const auto& body = as<BlockStmt>(n)->body;
            EnvPtr block_env = heap_.make_env(env);
            hoist_declarations(body, block_env, /*function_scope=*/false);
            exec_statements(body, block_env);
            return;
        }
        case NodeKind::EmptyStmt:
        case NodeKind::DebuggerStmt:
        case NodeKind::ImportDecl:
        case NodeKind::ExportAllDecl:
            return;
        case NodeKind::ExportNamedDecl: {
            const auto* ex = as<ExportNamedDecl>(n);
            if (ex->declaration) exec_stmt(ex->declaration.get(), env);
            return;
        }
        case NodeKind::ExportDefaultDecl: {
            const auto* ex = as<ExportDefaultDecl>(n);
            const Node* d = ex->declaration.get();
            Value v;
            if (d->kind == NodeKind::FunctionNode && as<FunctionNode>(d)->is_declaration) {
                const auto* fn = as<FunctionNode>(d);
                if (!fn->name.empty()) {
                    v = resolve_identifier(fn->name, env, d);  // hoisted binding
                } else {
                    v = Value(std::static_pointer_cast<Object>(instantiate_function(fn, env)));
                }
            } else if (d->kind == NodeKind::ClassNode && as<ClassNode>(d)->is_declaration) {
                v = eval_class(as<ClassNode>(d), env);
                const auto* cls = as<ClassNode>(d);
                if (!cls->name.empty()) bind_pattern_class_name(cls->name, v, env);
            } else {
                v = eval_expr(d, env);
            }
            if (Binding* b = env->find_local("*default*")) {
                b->value = std::move(v);
                b->initialized = true;
            }
            return;
        }
        case NodeKind::IfStmt: {
            const auto* st = as<IfStmt>(n);
            if (to_boolean(eval_expr(st->test.get(), env))) {
                exec_stmt(st->consequent.get(), env);
            } else if (st->alternate) {
                exec_stmt(st->alternate.get(), env);
            }
            return;
        }
        case NodeKind::ForStmt: {
            const auto* st = as<ForStmt>(n);
            EnvPtr loop_env = heap_.make_env(env);
            if (st->init) {
                if (st->init->kind == NodeKind::VarDecl) {
                    exec_stmt(st->init.get(), loop_env);
                } else {
                    eval_expr(st->init.get(), loop_env);
                }
            }
            while (true) {
                limits_.tick();
                if (st->test && !to_boolean(eval_expr(st->test.get(), loop_env))) break;
                try {
                    if (st->body) exec_stmt(st->body.get(), loop_env);
                } catch (BreakSignal&) {
                    break;
                } catch (ContinueSignal&) {
                }
                if (st->update) eval_expr(st->update.get(), loop_env);
            }
            return;
        }
        case NodeKind::ForInStmt: {
            const auto* st = as<ForInStmt>(n);
            Value obj = eval_expr(st->right.get(), env);
            if (obj.is_nullish()) return;
            for (const std::string& key : enumerate_keys(obj)) {
                limits_.tick();
                EnvPtr iter_env = heap_.make_env(env);
                bind_for_target(st->left.get(), heap_.str(key), iter_env);
                try {
                    exec_stmt(st->body.get(), iter_env);
                } catch (BreakSignal&) {
                    return;
                } catch (ContinueSignal&) {
                }
            }
            return;
        }
        case NodeKind::ForOfStmt: {
            const auto* st = as<ForOfStmt>(n);
            Value iterable = eval_expr(st->right.get(), env);
            bool broke = false;
            for_of_each(iterable, loc_of(st), [&](Value item) {
                EnvPtr iter_env = heap_.make_env(env);
                bind_for_target(st->left.get(), std::move(item), iter_env);
                try {
                    exec_stmt(st->body.get(), iter_env);
                } catch (BreakSignal&) {
                    broke = true;
                    return false;
                } catch (ContinueSignal&) {
                }
                return true;
            });
            (void)broke;
            return;
        }
        case NodeKind::WhileStmt: {
            const auto* st = as<WhileStmt>(n);
            while (to_boolean(eval_expr(st->test.get(), env))) {
                limits_.tick();
                try {
                    exec_stmt(st->body.get(), env);
                } catch (BreakSignal&) {
                    break;
                } catch (ContinueSignal&) {
                }
            }
            return;
        }
        case NodeKind::DoWhileStmt: {
            const auto* st = as<DoWhileStmt>(n);
            do {
                limits_.tick();
                try {
                    exec_stmt(st->body.get(), env);
                } catch (BreakSignal&) {
                    break;
                } catch (ContinueSignal&) {
                }
            } while (to_boolean(eval_expr(st->test.get(), env)));
            return;
        }
        case NodeKind::BreakStmt:
            throw BreakSignal{};
        case NodeKind::ContinueStmt:
            throw ContinueSignal{};
        case NodeKind::ReturnStmt: {
            const auto* st = as<ReturnStmt>(n);
            ReturnSignal sig;
            if (st->argument) sig.value = eval_expr(st->argument.get(), env);
            throw sig;
        }
        case NodeKind::ThrowStmt:
            throw GuestThrow{eval_expr(as<ThrowStmt>(n)->argument.get(), env)};
        case NodeKind::TryStmt: {
            const auto* st = as<TryStmt>(n);
            auto run_finally = [&]() {
                if (st->finalizer) exec_stmt(st->finalizer.get(), env);
            };
            try {
                exec_stmt(st->block.get(), env);
            } catch (GuestThrow& gt) {
                if (st->handler) {
                    try {
                        EnvPtr catch_env = heap_.make_env(env);
                        if (st->param) {
                            bind_pattern(st->param.get(), gt.value, catch_env, "let");
                        }
                        const auto& body = as<BlockStmt>(st->handler.get())->body;
                        hoist_declarations(body, catch_env, false);
                        exec_statements(body, catch_env);
                    } catch (...) {
                        run_finally();
                        throw;
                    }
                    run_finally();
                    return;
                }
                run_finally();
                throw;
            } catch (BreakSignal&) {
                run_finally();
                throw;
            } catch (ContinueSignal&) {
                run_finally();
                throw;
            } catch (ReturnSignal&) {
                run_finally();
                throw;
            }
            run_finally();
            return;
        }
        case NodeKind::SwitchStmt: {
            const auto* st = as<SwitchStmt>(n);
            Value disc = eval_expr(st->discriminant.get(), env);
            EnvPtr switch_env = heap_.make_env(env);
            for (const NodePtr& c : st->cases) {
                hoist_declarations(as<SwitchCase>(c.get())->body, switch_env, false);
            }
            size_t start = st->cases.size();
            for (size_t i = 0; i < st->cases.size(); i++) {
                const auto* cs = as<SwitchCase>(st->cases[i].get());
                if (cs->test && eval_expr(cs->test.get(), switch_env).strict_equals(disc)) {
                    start = i;
                    break;
                }
            }
            if (start == st->cases.size()) {
                for (size_t i = 0; i < st->cases.size(); i++) {
                    if (as<SwitchCase>(st->cases[i].get())->test == nullptr) {
                        start = i;
                        break;
                    }
                }
            }
            try {
                for (size_t i = start; i < st->cases.size(); i++) {
                    exec_statements(as<SwitchCase>(st->cases[i].get())->body, switch_env);
                }
            } catch (BreakSignal&) {
            }
            return;
        }
        default:
            eval_expr(n, env);
            return;
    }
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

inline Value Interpreter::eval_template(const TemplateLit* tpl, const EnvPtr& env) {
    std::string out = tpl->cooked.empty() ? "" : tpl->cooked[0];
    for (size_t i = 0; i < tpl->exprs.size(); i++) {
        Value v = eval_expr(tpl->exprs[i].get(), env);
        out += v.is_object() ? to_string_value(to_primitive(v, 's')) : to_string_value(v);
        if (i + 1 < tpl->cooked.size()) out += tpl->cooked[i + 1];
    }
    return heap_.str(std::move(out));
}

inline Value Interpreter::eval_object_literal(const ObjectLit* lit, const EnvPtr& env) {
    ObjectPtr obj = make_object();
    for (const NodePtr& p : lit->props) {
        if (p->kind == NodeKind::SpreadElement) {
            Value src = eval_expr(as<SpreadElement>(p.get())->argument.get(), env);
            if (src.is_object()) {
                if (ArrayObject* arr = as_array(src)) {
                    for (size_t i = 0; i < arr->elements.size(); i++) {
                        heap_.charge(Heap::kPropertyCost);
                        obj->set_own(PropertyKey(std::to_string(i)), arr->elements[i]);
                    }
                } else {
                    for (const auto& [key, slot] : src.as_object()->raw_props()) {
                        if (key.is_symbol() || !slot.enumerable || slot.is_accessor) continue;
                        heap_.charge(Heap::kPropertyCost);
                        obj->set_own(key, slot.value);
                    }
                }
            } else if (src.is_string()) {
                const std::string& s = src.as_string();
                std::u16string u = detail::utf8_to_utf16(s);
                for (size_t i = 0; i < u.size(); i++) {
                    heap_.charge(Heap::kPropertyCost);
                    obj->set_own(PropertyKey(std::to_string(i)),
                                 heap_.str(detail::utf16_to_utf8(std::u16string(1, u[i]))));
                }
            }
            continue;
        }
        const auto* prop = as<Property>(p.get());
        PropertyKey key;
        if (prop->computed) {
            key = to_property_key(eval_expr(prop->key.get(), env));
        } else if (prop->key->kind == NodeKind::Ident) {
            key = PropertyKey(as<Ident>(prop->key.get())->name);
        } else if (prop->key->kind == NodeKind::StringLit) {
            key = PropertyKey(as<StringLit>(prop->key.get())->value);
        } else if (prop->key->kind == NodeKind::NumberLit) {
            key = PropertyKey(js_number_to_string(as<NumberLit>(prop->key.get())->value));
        }
        switch (prop->prop_kind) {
            case Property::Kind::Init: {
                Value v;
                if (prop->shorthand && prop->value->kind == NodeKind::Ident) {
                    v = resolve_identifier(as<Ident>(prop->value.get())->name, env,
                                           prop->value.get());
                } else {
                    v = eval_expr(prop->value.get(), env);
                }
                if (prop->method || prop->value->kind == NodeKind::FunctionNode) {
                    if (FunctionObject* f = as_function(v)) {
                        f->home_object = obj;
                        if (f->fn_name.empty() && !key.is_symbol()) f->fn_name = key.name;
                    }
                }
                heap_.charge(Heap::kPropertyCost);
                obj->set_own(key, std::move(v));
                break;
            }
            case Property::Kind::Get:
            case Property::Kind::Set: {
                FunctionPtr f =
                    instantiate_function(as<FunctionNode>(prop->value.get()), env);
                f->home_object = obj;
                PropertySlot* existing = obj->find_own(key);
                PropertySlot slot;
                if (existing != nullptr && existing->is_accessor) slot = *existing;
                slot.is_accessor = true;
                slot.value = Value();
                if (prop->prop_kind == Property::Kind::Get) {
                    slot.getter = std::static_pointer_cast<Object>(f);
                } else {
                    slot.setter = std::static_pointer_cast<Object>(f);
                }
                heap_.charge(Heap::kPropertyCost);
                obj->define_own(key, std::move(slot));
                break;
            }
        }
    }
    return Value(obj);
}

inline Value Interpreter::eval_member(const MemberExpr* member, const EnvPtr& env) {
    Value base;
    if (member->object->kind == NodeKind::SuperExpr) {
        EnvRecord* scope = function_scope_of(env);
        ObjectPtr home = scope != nullptr ? scope->home_object : nullptr;
        base = home && home->prototype() ? Value(home->prototype()) : Value(object_proto_);
    } else {
        base = eval_expr(member->object.get(), env);
    }
    if (member->optional && base.is_nullish()) throw detail::ChainShort{};
    PropertyKey key = member->computed
                          ? to_property_key(eval_expr(member->property.get(), env))
                          : PropertyKey(as<Ident>(member->property.get())->name);
    current_loc_ = loc_of(member);
    return get_property(base, key, current_loc_);
}

inline Value Interpreter::eval_call(const CallExpr* call, const EnvPtr& env) {
    const Node* callee = call->callee.get();
    Value fn;
    Value this_v;

    auto eval_args = [&]() {
        std::vector<Value> args;
        for (const NodePtr& a : call->args) {
            if (a->kind == NodeKind::SpreadElement) {
                Value src = eval_expr(as<SpreadElement>(a.get())->argument.get(), env);
                for_of_each(src, loc_of(a.get()), [&](Value item) {
                    args.push_back(std::move(item));
                    return true;
                });
            } else {
                args.push_back(eval_expr(a.get(), env));
            }
        }
        return args;
    };

    if (callee->kind == NodeKind::SuperExpr) {
        Value parent = resolve_identifier("%superctor%", env, callee);
        Value this_obj = this_of(env);
        std::vector<Value> args = eval_args();
        current_loc_ = loc_of(call);
        if (as_mock(parent) != nullptr) {
            mock_invoke(std::static_pointer_cast<MockObject>(parent.as_object()), args,
                        current_loc_, EventKind::Construct);
            return Value();
        }
        FunctionObject* pf = as_function(parent);
        if (pf == nullptr) throw_error("TypeError", "Super constructor is not callable");
        if (pf->native) {
            Value r = call_value(parent, this_obj, std::move(args), current_loc_);
            // Base natives build fresh objects; graft the interesting bits
            // (Error message/stack) onto the instance under construction.
            if (r.is_object() && this_obj.is_object()) {
                for (const char* name : {"message", "stack"}) {
                    if (const PropertySlot* slot = r.as_object()->find_own(PropertyKey(name))) {
                        if (!slot->is_accessor) {
                            this_obj.as_object()->set_own(PropertyKey(name), slot->value);
                        }
                    }
                }
            }
            return Value();
        }
        EnvRecord* scope = function_scope_of(env);
        std::vector<Value> args_copy = std::move(args);
        call_function(std::static_pointer_cast<FunctionObject>(parent.as_object()), this_obj,
                      args_copy, false, scope != nullptr ? scope->new_target : Value());
        return Value();
    }

    if (callee->kind == NodeKind::ImportCallee) {
        std::vector<Value> args = eval_args();
        (void)args;
        throw_error("TypeError", "Dynamic import is not supported in this sandbox");
    }

    if (callee->kind == NodeKind::MemberExpr) {
        const auto* member = as<MemberExpr>(callee);
        if (member->object->kind == NodeKind::SuperExpr) {
            EnvRecord* scope = function_scope_of(env);
            ObjectPtr home = scope != nullptr ? scope->home_object : nullptr;
            Value base = home && home->prototype() ? Value(home->prototype()) : Value(object_proto_);
            PropertyKey key = member->computed
                                  ? to_property_key(eval_expr(member->property.get(), env))
                                  : PropertyKey(as<Ident>(member->property.get())->name);
            fn = get_property(base, key, loc_of(member));
            this_v = this_of(env);
        } else {
            this_v = eval_expr(member->object.get(), env);
            if (member->optional && this_v.is_nullish()) throw detail::ChainShort{};
            PropertyKey key = member->computed
                                  ? to_property_key(eval_expr(member->property.get(), env))
                                  : PropertyKey(as<Ident>(member->property.get())->name);
            current_loc_ = loc_of(member);
            fn = get_property(this_v, key, current_loc_);
        }
    } else if (callee->kind == NodeKind::Ident && as<Ident>(callee)->name == "eval") {
        Value resolved = resolve_identifier("eval", env, callee);
        if (resolved.is_object() && eval_fn_ &&
            resolved.as_object().get() == eval_fn_.get()) {
            std::vector<Value> args = eval_args();
            current_loc_ = loc_of(call);
            log_.log_call(EventKind::Call, "eval", current_loc_, args, Value());
            if (args.empty() || !args[0].is_string()) {
                return args.empty() ? Value() : args[0];
            }
            return guest_eval(args[0].as_string(), env, /*direct=*/true);
        }
        fn = resolved;
    } else {
        fn = eval_expr(callee, env);
    }

    if (call->optional && fn.is_nullish()) throw detail::ChainShort{};
    std::vector<Value> args = eval_args();
    current_loc_ = loc_of(call);
    return call_value(fn, this_v, std::move(args), current_loc_);
}

inline Value Interpreter::eval_assignment(const AssignExpr* assign, const EnvPtr& env) {
    const Node* target = assign->target.get();
    const std::string& op = assign->op;

    if (op == "=") {
        Value v = eval_expr(assign->value.get(), env);
        if (target->kind == NodeKind::Ident) {
            if (FunctionObject* f = as_function(v)) {
                if (f->fn_name.empty()) f->fn_name = as<Ident>(target)->name;
            }
            assign_identifier(as<Ident>(target)->name, v, env, target);
        } else if (target->kind == NodeKind::MemberExpr) {
            const auto* member = as<MemberExpr>(target);
            Value base = eval_expr(member->object.get(), env);
            PropertyKey key = member->computed
                                  ? to_property_key(eval_expr(member->property.get(), env))
                                  : PropertyKey(as<Ident>(member->property.get())->name);
            current_loc_ = loc_of(member);
            set_property(base, key, v, current_loc_);
        } else {
            bind_pattern(target, v, env, nullptr);
        }
        return v;
    }

    // Logical assignment short-circuits without writing.
    if (op == "&&=" || op == "||=" || op == "??=") {
        Value current;
        if (target->kind == NodeKind::Ident) {
            current = resolve_identifier(as<Ident>(target)->name, env, target);
        } else if (target->kind == NodeKind::MemberExpr) {
            current = eval_member(as<MemberExpr>(target), env);
        } else {
            throw_error("SyntaxError", "Invalid assignment target");
        }
        bool should = op == "&&=" ? to_boolean(current)
                      : op == "||=" ? !to_boolean(current)
                                    : current.is_nullish();
        if (!should) return current;
        Value v = eval_expr(assign->value.get(), env);
        if (target->kind == NodeKind::Ident) {
            assign_identifier(as<Ident>(target)->name, v, env, target);
        } else {
            const auto* member = as<MemberExpr>(target);
            Value base = eval_expr(member->object.get(), env);
            PropertyKey key = member->computed
                                  ? to_property_key(eval_expr(member->property.get(), env))
                                  : PropertyKey(as<Ident>(member->property.get())->name);
            set_property(base, key, v, loc_of(member));
        }
        return v;
    }

    // Compound assignment: read, combine, write.
    std::string binop = op.substr(0, op.size() - 1);
    if (target->kind == NodeKind::Ident) {
        const std::string& name = as<Ident>(target)->name;
        Value current = resolve_identifier(name, env, target);
        Value v = binary_operate(binop, current, eval_expr(assign->value.get(), env));
        assign_identifier(name, v, env, target);
        return v;
    }
    if (target->kind == NodeKind::MemberExpr) {
        const auto* member = as<MemberExpr>(target);
        Value base = eval_expr(member->object.get(), env);
        PropertyKey key = member->computed
                              ? to_property_key(eval_expr(member->property.get(), env))
                              : PropertyKey(as<Ident>(member->property.get())->name);
        current_loc_ = loc_of(member);
        Value current = get_property(base, key, current_loc_);
        Value v = binary_operate(binop, current, eval_expr(assign->value.get(), env));
        set_property(base, key, v, current_loc_);
        return v;
    }
    throw_error("SyntaxError", "Invalid assignment target");
}

inline Value Interpreter::eval_expr(const Node* n, const EnvPtr& env) {
    limits_.tick();
    switch (n->kind) {
        case NodeKind::NumberLit:
            return Value(as<NumberLit>(n)->value);
        case NodeKind::StringLit: {
            auto it = literal_cache_.find(n);
            if (it != literal_cache_.end()) return Value(it->second);
            JsStringPtr s = heap_.make_string(as<StringLit>(n)->value);
            literal_cache_.emplace(n, s);
            return Value(s);
        }
        case NodeKind::BoolLit:
            return Value(as<BoolLit>(n)->value);
        case NodeKind::NullLit:
            return Value::null();
        case NodeKind::RegexLit:
            return Value(std::static_pointer_cast<Object>(
                make_regexp(as<RegexLit>(n)->pattern, as<RegexLit>(n)->flags)));
        case NodeKind::Ident:
            return resolve_identifier(as<Ident>(n)->name, env, n);
        case NodeKind::TemplateLit:
            return eval_template(as<TemplateLit>(n), env);
        case NodeKind::TaggedTemplate: {
            const auto* tt = as<TaggedTemplate>(n);
            Value tag = eval_expr(tt->tag.get(), env);
            Value text = eval_template(as<TemplateLit>(tt->quasi.get()), env);
            current_loc_ = loc_of(n);
            return call_value(tag, Value(), {text}, current_loc_);
        }
        case NodeKind::ThisExpr:
            return this_of(env);
        case NodeKind::NewTargetExpr: {
            EnvRecord* scope = function_scope_of(env);
            return scope != nullptr ? scope->new_target : Value();
        }
        case NodeKind::ImportMetaExpr: {
            ObjectPtr meta = make_object();
            std::string url = current_specifier_;
            if (!url.empty() && url[0] != '<') {
                if (auto parsed = Url::try_parse(url)) {
                    url = parsed->to_string();
                } else {
                    url = origin_.join(url).to_string();
                }
            }
            heap_.charge(Heap::kPropertyCost);
            meta->set_own(PropertyKey("url"), heap_.str(url));
            return Value(meta);
        }
        case NodeKind::ImportCallee:
            return Value(std::static_pointer_cast<Object>(native_fn(
                "import", [](const NativeCallInfo& info) -> Value {
                    info.interp.throw_error("TypeError",
                                            "Dynamic import is not supported in this sandbox");
                })));
        case NodeKind::ArrayLit: {
            const auto* lit = as<ArrayLit>(n);
            std::vector<Value> elements;
            for (const NodePtr& el : lit->elements) {
                if (el == nullptr) {
                    elements.emplace_back();
                    continue;
                }
                if (el->kind == NodeKind::SpreadElement) {
                    Value src = eval_expr(as<SpreadElement>(el.get())->argument.get(), env);
                    for_of_each(src, loc_of(el.get()), [&](Value item) {
                        elements.push_back(std::move(item));
                        return true;
                    });
                    continue;
                }
                elements.push_back(eval_expr(el.get(), env));
            }
            return Value(std::static_pointer_cast<Object>(make_array(std::move(elements))));
        }
        case NodeKind::ObjectLit:
            return eval_object_literal(as<ObjectLit>(n), env);
        case NodeKind::FunctionNode:
            return Value(
                std::static_pointer_cast<Object>(instantiate_function(as<FunctionNode>(n), env)));
        case NodeKind::ClassNode:
            return eval_class(as<ClassNode>(n), env);
        case NodeKind::UnaryExpr: {
            const auto* un = as<UnaryExpr>(n);
            const std::string& op = un->op;
            if (op == "typeof") {
                Value v = eval_expr(un->operand.get(), env);
                return heap_.str(typeof_value(v, env));
            }
            if (op == "delete") {
                const Node* target = un->operand.get();
                if (target->kind == NodeKind::MemberExpr) {
                    const auto* member = as<MemberExpr>(target);
                    Value base = eval_expr(member->object.get(), env);
                    PropertyKey key =
                        member->computed
                            ? to_property_key(eval_expr(member->property.get(), env))
                            : PropertyKey(as<Ident>(member->property.get())->name);
                    return Value(delete_property(base, key));
                }
                if (target->kind == NodeKind::Ident) {
                    const std::string& name = as<Ident>(target)->name;
                    if (env->find(name) != nullptr) return Value(false);
                    return Value(global_->delete_own(PropertyKey(name)));
                }
                eval_expr(target, env);
                return Value(true);
            }
            if (op == "void") {
                eval_expr(un->operand.get(), env);
                return Value();
            }
            Value v = eval_expr(un->operand.get(), env);
            if (op == "!") return Value(!to_boolean(v));
            if (op == "-") return Value(-to_number(v));
            if (op == "+") return Value(to_number(v));
            if (op == "~") return Value(static_cast<double>(~js_to_int32(to_number(v))));
            throw_error("SyntaxError", "Unknown unary operator " + op);
        }
        case NodeKind::UpdateExpr: {
            const auto* up = as<UpdateExpr>(n);
            const Node* target = up->operand.get();
            double delta = up->op == "++" ? 1 : -1;
            if (target->kind == NodeKind::Ident) {
                const std::string& name = as<Ident>(target)->name;
                double old_n = to_number(resolve_identifier(name, env, target));
                assign_identifier(name, Value(old_n + delta), env, target);
                return Value(up->prefix ? old_n + delta : old_n);
            }
            if (target->kind == NodeKind::MemberExpr) {
                const auto* member = as<MemberExpr>(target);
                Value base = eval_expr(member->object.get(), env);
                PropertyKey key = member->computed
                                      ? to_property_key(eval_expr(member->property.get(), env))
                                      : PropertyKey(as<Ident>(member->property.get())->name);
                current_loc_ = loc_of(member);
                double old_n = to_number(get_property(base, key, current_loc_));
                set_property(base, key, Value(old_n + delta), current_loc_);
                return Value(up->prefix ? old_n + delta : old_n);
            }
            throw_error("SyntaxError", "Invalid update target");
        }
        case NodeKind::BinaryExpr: {
            const auto* bin = as<BinaryExpr>(n);
            Value lhs = eval_expr(bin->lhs.get(), env);
            Value rhs = eval_expr(bin->rhs.get(), env);
            return binary_operate(bin->op, lhs, rhs);
        }
        case NodeKind::LogicalExpr: {
            const auto* lg = as<LogicalExpr>(n);
            Value lhs = eval_expr(lg->lhs.get(), env);
            if (lg->op == "&&") return to_boolean(lhs) ? eval_expr(lg->rhs.get(), env) : lhs;
            if (lg->op == "||") return to_boolean(lhs) ? lhs : eval_expr(lg->rhs.get(), env);
            return lhs.is_nullish() ? eval_expr(lg->rhs.get(), env) : lhs;
        }
        case NodeKind::ConditionalExpr: {
            const auto* c = as<ConditionalExpr>(n);
            return to_boolean(eval_expr(c->test.get(), env))
                       ? eval_expr(c->consequent.get(), env)
                       : eval_expr(c->alternate.get(), env);
        }
        case NodeKind::AssignExpr:
            return eval_assignment(as<AssignExpr>(n), env);
        case NodeKind::SequenceExpr: {
            Value last;
            for (const NodePtr& e : as<SequenceExpr>(n)->exprs) last = eval_expr(e.get(), env);
            return last;
        }
        case NodeKind::CallExpr:
            return eval_call(as<CallExpr>(n), env);
        case NodeKind::NewExpr: {
            const auto* ne = as<NewExpr>(n);
            Value callee = eval_expr(ne->callee.get(), env);
            std::vector<Value> args;
            for (const NodePtr& a : ne->args) {
                if (a->kind == NodeKind::SpreadElement) {
                    Value src = eval_expr(as<SpreadElement>(a.get())->argument.get(), env);
                    for_of_each(src, loc_of(a.get()), [&](Value item) {
                        args.push_back(std::move(item));
                        return true;
                    });
                } else {
                    args.push_back(eval_expr(a.get(), env));
                }
            }
            current_loc_ = loc_of(n);
            return call_value(callee, Value(), std::move(args), current_loc_,
                              /*is_construct=*/true);
        }
        case NodeKind::MemberExpr:
            return eval_member(as<MemberExpr>(n), env);
        case NodeKind::ChainExpr: {
            try {
                return eval_expr(as<ChainExpr>(n)->expr.get(), env);
            } catch (detail::ChainShort&) {
                return Value();
            }
        }
        case NodeKind::AwaitExpr:
            return await_value(eval_expr(as<AwaitExpr>(n)->argument.get(), env));
        case NodeKind::SuperExpr:
            throw_error("SyntaxError", "'super' keyword unexpected here");
        default:
            throw_error("SyntaxError", "Unsupported expression");
    }
}

// ---------------------------------------------------------------------------
// Promises and jobs
// ---------------------------------------------------------------------------

inline PromisePtr Interpreter::make_promise() {
    PromisePtr p = heap_.make<PromiseObject>();
    p->set_prototype(promise_proto_);
    return p;
}

inline void Interpreter::settle_promise(const PromisePtr& p, Value result, bool fulfilled) {
    if (p->state != PromiseObject::State::Pending) return;
    if (fulfilled && result.is_object() && as_mock(result) == nullptr) {
        if (result.as_object()->kind() == ObjectKind::Promise) {
            // Adopt the inner promise's eventual state.
            PromisePtr inner = std::static_pointer_cast<PromiseObject>(result.as_object());
            if (inner->state == PromiseObject::State::Pending) {
                PromiseObject::Reaction r;
                r.next = std::static_pointer_cast<Object>(p);
                inner->reactions.push_back(std::move(r));
                inner->handled = true;
                return;
            }
            settle_promise(p, inner->result,
                           inner->state == PromiseObject::State::Fulfilled);
            return;
        }
        Value then = get_property(result, PropertyKey("then"), SourceLocation{}, true);
        if (is_callable(then) && as_function(then) != nullptr &&
            as_function(then)->native == nullptr) {
            // Guest thenable: run then(resolve, reject) once.
            PromisePtr target = p;
            auto settled = std::make_shared<bool>(false);
            Interpreter* self = this;
            Value resolve_fn(std::static_pointer_cast<Object>(native_fn(
                "resolve", [self, target, settled](const NativeCallInfo& info) -> Value {
                    if (!*settled) {
                        *settled = true;
                        self->settle_promise(target, info.arg(0), true);
                    }
                    return Value();
                })));
            Value reject_fn(std::static_pointer_cast<Object>(native_fn(
                "reject", [self, target, settled](const NativeCallInfo& info) -> Value {
                    if (!*settled) {
                        *settled = true;
                        self->settle_promise(target, info.arg(0), false);
                    }
                    return Value();
                })));
            try {
                call_value(then, result, {resolve_fn, reject_fn}, SourceLocation{});
            } catch (GuestThrow& gt) {
                if (!*settled) {
                    *settled = true;
                    settle_promise(p, gt.value, false);
                }
            }
            return;
        }
    }
    p->state = fulfilled ? PromiseObject::State::Fulfilled : PromiseObject::State::Rejected;
    p->result = std::move(result);
    for (PromiseObject::Reaction& r : p->reactions) {
        Job job;
        job.is_reaction = true;
        job.fn = fulfilled ? r.on_fulfilled : r.on_rejected;
        job.reaction_next = r.next ? std::static_pointer_cast<PromiseObject>(r.next) : nullptr;
        job.reaction_value = p->result;
        job.reaction_fulfilled = fulfilled;
        microtasks_.push_back(std::move(job));
    }
    p->reactions.clear();
}

inline Value Interpreter::promise_then(const PromisePtr& p, ObjectPtr on_fulfilled,
                                       ObjectPtr on_rejected) {
    PromisePtr next = make_promise();
    p->handled = true;
    if (p->state == PromiseObject::State::Pending) {
        PromiseObject::Reaction r;
        r.on_fulfilled = std::move(on_fulfilled);
        r.on_rejected = std::move(on_rejected);
        r.next = std::static_pointer_cast<Object>(next);
        p->reactions.push_back(std::move(r));
    } else {
        Job job;
        job.is_reaction = true;
        job.fn = p->state == PromiseObject::State::Fulfilled ? on_fulfilled : on_rejected;
        job.reaction_next = next;
        job.reaction_value = p->result;
        job.reaction_fulfilled = p->state == PromiseObject::State::Fulfilled;
        microtasks_.push_back(std::move(job));
    }
    return Value(std::static_pointer_cast<Object>(next));
}

inline void Interpreter::pump_microtasks() {
    while (!microtasks_.empty()) {
        limits_.tick();
        Job job = std::move(microtasks_.front());
        microtasks_.pop_front();
        if (!job.is_reaction) continue;
        PromisePtr next = job.reaction_next;
        if (!job.fn) {
            // Pass-through reaction (adoption or missing handler).
            if (next) settle_promise(next, job.reaction_value, job.reaction_fulfilled);
            continue;
        }
        try {
            Value r = call_value(Value(job.fn), Value(), {job.reaction_value}, SourceLocation{});
            if (next) settle_promise(next, std::move(r), true);
        } catch (GuestThrow& gt) {
            if (next) settle_promise(next, std::move(gt.value), false);
        }
    }
}

inline Value Interpreter::await_value(const Value& v) {
    if (!v.is_object()) return v;
    if (as_mock(v) != nullptr) return v;  // awaiting a mock yields the mock
    if (v.as_object()->kind() == ObjectKind::Promise) {
        PromisePtr p = std::static_pointer_cast<PromiseObject>(v.as_object());
        pump_microtasks();
        switch (p->state) {
            case PromiseObject::State::Fulfilled:
                return p->result;
            case PromiseObject::State::Rejected:
                p->handled = true;
                throw GuestThrow{p->result};
            case PromiseObject::State::Pending:
                // Unresolvable within the synchronous model.
                return Value();
        }
    }
    Value then = get_property(v, PropertyKey("then"), SourceLocation{}, true);
    if (is_callable(then)) {
        PromisePtr p = make_promise();
        settle_promise(p, v, true);
        pump_microtasks();
        if (p->state == PromiseObject::State::Fulfilled) return p->result;
        if (p->state == PromiseObject::State::Rejected) {
            p->handled = true;
            throw GuestThrow{p->result};
        }
        return Value();
    }
    return v;
}

inline size_t Interpreter::drain_jobs() {
    size_t executed = 0;
    for (uint32_t round = 0; round < config_.callback_rounds; round++) {
        pump_microtasks();
        if (callbacks_.empty()) break;
        std::deque<Job> batch;
        batch.swap(callbacks_);
        for (Job& job : batch) {
            executed++;
            FunctionObject* fn = as_function(Value(job.fn));
            std::vector<Value> args;
            if (fn != nullptr) {
                for (size_t i = 0; i < fn->param_count; i++) {
                    args.emplace_back(
                        std::static_pointer_cast<Object>(make_mock("<callback-arg>", 0)));
                }
            }
            try {
                call_value(Value(job.fn), job.this_value, std::move(args), SourceLocation{});
            } catch (GuestThrow&) {
                // Job errors never abort draining and never change run status.
            }
            pump_microtasks();
        }
    }
    return executed;
}

// ---------------------------------------------------------------------------
// Guest eval and the Function constructor
// ---------------------------------------------------------------------------

inline Value Interpreter::guest_eval(const std::string& code, const EnvPtr& scope, bool direct) {
    std::string specifier = "<eval-" + std::to_string(++eval_counter_) + ">";
    ParsedSourcePtr unit;
    try {
        unit = parse_source(code, specifier, SourceType::script);
    } catch (const ParseError& e) {
        throw_error("SyntaxError", e.what());
    }
    heap_.charge(code.size());
    retained_units_.push_back(unit);
    EnvPtr env = direct ? scope : heap_.make_env(global_env_);
    detail::SpecifierScope spec(*this, unit);
    const auto& body = as<Program>(unit->program.get())->body;
    hoist_declarations(body, env, /*function_scope=*/true);
    Value completion;
    for (const NodePtr& s : body) {
        if (s->kind == NodeKind::ExprStmt) {
            completion = eval_expr(as<ExprStmt>(s.get())->expr.get(), env);
        } else {
            exec_stmt(s.get(), env);
            completion = Value();
        }
    }
    return completion;
}

inline Value Interpreter::function_constructor(std::vector<Value>& args) {
    std::string params;
    for (size_t i = 0; i + 1 < args.size(); i++) {
        if (i > 0) params += ",";
        params += to_string_value(args[i]);
    }
    std::string body = args.empty() ? "" : to_string_value(args.back());
    std::string source = "(function anonymous(" + params + "\n) {\n" + body + "\n})";
    std::string specifier = "<eval-" + std::to_string(++eval_counter_) + ">";
    ParsedSourcePtr unit;
    try {
        unit = parse_source(source, specifier, SourceType::script);
    } catch (const ParseError& e) {
        throw_error("SyntaxError", e.what());
    }
    heap_.charge(source.size());
    retained_units_.push_back(unit);
    detail::SpecifierScope spec(*this, unit);
    const auto& body_stmts = as<Program>(unit->program.get())->body;
    EnvPtr env = heap_.make_env(global_env_);
    return eval_expr(as<ExprStmt>(body_stmts.at(0).get())->expr.get(), env);
}

}  // namespace mirage

#endif
