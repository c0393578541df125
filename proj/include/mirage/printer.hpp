#ifndef MIRAGE_PRINTER_HPP
#define MIRAGE_PRINTER_HPP

#include <string>

#include "mirage/ast.hpp"
#include "mirage/value.hpp"

namespace mirage {

namespace detail {

/// Quotes a cooked string value as a double-quoted source literal. Lone
/// surrogate halves (WTF-8 from \uD800-style escapes) are re-escaped so the
/// output stays valid UTF-8.
inline std::string quote_js_string(const std::string& s) {
    std::string out = "\"";
    for (size_t i = 0; i < s.size(); i++) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        switch (c) {
            case '"': out += "\\\""; continue;
            case '\\': out += "\\\\"; continue;
            case '\n': out += "\\n"; continue;
            case '\r': out += "\\r"; continue;
            case '\t': out += "\\t"; continue;
            case '\b': out += "\\b"; continue;
            case '\f': out += "\\f"; continue;
            case '\v': out += "\\v"; continue;
            default: break;
        }
        if (c < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out += buf;
            continue;
        }
        // UTF-16 surrogate code points encode as ED A0..BF xx; they are not
        // valid UTF-8, so emit them as \uXXXX escapes.
        if (c == 0xED && i + 2 < s.size()) {
            unsigned char b1 = static_cast<unsigned char>(s[i + 1]);
            unsigned char b2 = static_cast<unsigned char>(s[i + 2]);
            if (b1 >= 0xA0 && b1 <= 0xBF && (b2 & 0xC0) == 0x80) {
                uint32_t cp = (uint32_t(0x0D) << 12) | (uint32_t(b1 & 0x3F) << 6) | (b2 & 0x3F);
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", cp);
                out += buf;
                i += 2;
                continue;
            }
        }
        out += static_cast<char>(c);
    }
    out += '"';
    return out;
}

}  // namespace detail

/// Renders an AST back to source text. The output normalizes layout (it is
/// not a byte-for-byte echo): bodies are braced, parentheses are derived from
/// operator precedence, and strings are re-quoted. Printing is a fixpoint:
/// parse(print(ast)) prints to the same text again.
class Printer {
public:
    static std::string program(const Node* n) {
        Printer p;
        if (n != nullptr && n->kind == NodeKind::Program) {
            for (const NodePtr& s : as<Program>(n)->body) p.stmt(s.get());
        } else if (n != nullptr) {
            p.stmt(n);
        }
        return std::move(p.out_);
    }

    static std::string expression(const Node* n) {
        Printer p;
        p.expr(n, kPrecSequence);
        return std::move(p.out_);
    }

private:
    std::string out_;
    int indent_ = 0;

    // Binding strengths, loosest first.
    static constexpr int kPrecSequence = 1;
    static constexpr int kPrecAssign = 2;
    static constexpr int kPrecConditional = 3;
    static constexpr int kPrecNullish = 4;
    static constexpr int kPrecOr = 5;
    static constexpr int kPrecAnd = 6;
    static constexpr int kPrecBitOr = 7;
    static constexpr int kPrecEquality = 10;
    static constexpr int kPrecUnary = 16;
    static constexpr int kPrecPostfix = 17;
    static constexpr int kPrecCall = 18;
    static constexpr int kPrecPrimary = 20;

    static int binary_prec(const std::string& op) {
        if (op == "|") return 7;
        if (op == "^") return 8;
        if (op == "&") return 9;
        if (op == "==" || op == "!=" || op == "===" || op == "!==") return 10;
        if (op == "<" || op == ">" || op == "<=" || op == ">=" || op == "in" ||
            op == "instanceof") {
            return 11;
        }
        if (op == "<<" || op == ">>" || op == ">>>") return 12;
        if (op == "+" || op == "-") return 13;
        if (op == "*" || op == "/" || op == "%") return 14;
        if (op == "**") return 15;
        return 10;
    }

    int prec_of(const Node* n) const {
        switch (n->kind) {
            case NodeKind::SequenceExpr: return kPrecSequence;
            case NodeKind::AssignExpr: return kPrecAssign;
            case NodeKind::ConditionalExpr: return kPrecConditional;
            case NodeKind::LogicalExpr: {
                const std::string& op = as<LogicalExpr>(n)->op;
                if (op == "??") return kPrecNullish;
                return op == "||" ? kPrecOr : kPrecAnd;
            }
            case NodeKind::BinaryExpr: return binary_prec(as<BinaryExpr>(n)->op);
            case NodeKind::UnaryExpr:
            case NodeKind::AwaitExpr: return kPrecUnary;
            case NodeKind::UpdateExpr:
                return as<UpdateExpr>(n)->prefix ? kPrecUnary : kPrecPostfix;
            case NodeKind::CallExpr:
            case NodeKind::NewExpr:
            case NodeKind::MemberExpr:
            case NodeKind::TaggedTemplate: return kPrecCall;
            // Keeping a chain below member/call strength forces parentheses
            // when a parenthesized optional chain is the base of a longer
            // access, which preserves the short-circuit boundary.
            case NodeKind::ChainExpr: return kPrecPostfix;
            case NodeKind::FunctionNode:
                return as<FunctionNode>(n)->is_arrow ? kPrecAssign : kPrecPrimary;
            default: return kPrecPrimary;
        }
    }

    // ---- low-level emission ----

    void raw(const std::string& text) { out_ += text; }
    void raw(char c) { out_ += c; }

    void begin_line() { out_.append(static_cast<size_t>(indent_) * 2, ' '); }
    void end_line() { out_ += '\n'; }

    // ---- expressions ----

    void expr(const Node* n, int min_prec) {
        if (n == nullptr) return;
        bool paren = prec_of(n) < min_prec;
        if (paren) raw('(');
        expr_inner(n);
        if (paren) raw(')');
    }

    void expr_inner(const Node* n) {
        switch (n->kind) {
            case NodeKind::NumberLit: raw(js_number_to_string(as<NumberLit>(n)->value)); break;
            case NodeKind::StringLit: raw(detail::quote_js_string(as<StringLit>(n)->value)); break;
            case NodeKind::BoolLit: raw(as<BoolLit>(n)->value ? "true" : "false"); break;
            case NodeKind::NullLit: raw("null"); break;
            case NodeKind::RegexLit: {
                const auto* re = as<RegexLit>(n);
                raw('/');
                raw(re->pattern);
                raw('/');
                raw(re->flags);
                break;
            }
            case NodeKind::Ident: raw(as<Ident>(n)->name); break;
            case NodeKind::TemplateLit: template_lit(as<TemplateLit>(n)); break;
            case NodeKind::TaggedTemplate: {
                const auto* t = as<TaggedTemplate>(n);
                expr(t->tag.get(), kPrecCall);
                template_lit(as<TemplateLit>(t->quasi.get()));
                break;
            }
            case NodeKind::ThisExpr: raw("this"); break;
            case NodeKind::SuperExpr: raw("super"); break;
            case NodeKind::NewTargetExpr: raw("new.target"); break;
            case NodeKind::ImportMetaExpr: raw("import.meta"); break;
            case NodeKind::ImportCallee: raw("import"); break;
            case NodeKind::ArrayLit: array_lit(as<ArrayLit>(n)); break;
            case NodeKind::ObjectLit: object_lit(as<ObjectLit>(n)); break;
            case NodeKind::SpreadElement:
                raw("...");
                expr(as<SpreadElement>(n)->argument.get(), kPrecAssign);
                break;
            case NodeKind::FunctionNode: function_expr(as<FunctionNode>(n)); break;
            case NodeKind::ClassNode: class_node(as<ClassNode>(n)); break;
            case NodeKind::UnaryExpr: unary(as<UnaryExpr>(n)); break;
            case NodeKind::UpdateExpr: update(as<UpdateExpr>(n)); break;
            case NodeKind::BinaryExpr: binary(as<BinaryExpr>(n)); break;
            case NodeKind::LogicalExpr: logical(as<LogicalExpr>(n)); break;
            case NodeKind::ConditionalExpr: {
                const auto* c = as<ConditionalExpr>(n);
                expr(c->test.get(), kPrecNullish);
                raw(" ? ");
                expr(c->consequent.get(), kPrecAssign);
                raw(" : ");
                expr(c->alternate.get(), kPrecAssign);
                break;
            }
            case NodeKind::AssignExpr: {
                const auto* a = as<AssignExpr>(n);
                expr(a->target.get(), kPrecCall);
                raw(' ');
                raw(a->op);
                raw(' ');
                expr(a->value.get(), kPrecAssign);
                break;
            }
            case NodeKind::SequenceExpr: {
                const auto& exprs = as<SequenceExpr>(n)->exprs;
                for (size_t i = 0; i < exprs.size(); i++) {
                    if (i > 0) raw(", ");
                    expr(exprs[i].get(), kPrecAssign);
                }
                break;
            }
            case NodeKind::CallExpr: {
                const auto* c = as<CallExpr>(n);
                expr(c->callee.get(), kPrecCall);
                if (c->optional) raw("?.");
                arguments(c->args);
                break;
            }
            case NodeKind::NewExpr: new_expr(as<NewExpr>(n)); break;
            case NodeKind::MemberExpr: member(as<MemberExpr>(n)); break;
            case NodeKind::ChainExpr: expr_inner(as<ChainExpr>(n)->expr.get()); break;
            case NodeKind::AwaitExpr:
                raw("await ");
                expr(as<AwaitExpr>(n)->argument.get(), kPrecUnary);
                break;
            case NodeKind::ArrayPattern: array_pattern(as<ArrayPattern>(n)); break;
            case NodeKind::ObjectPattern: object_pattern(as<ObjectPattern>(n)); break;
            case NodeKind::AssignmentPattern: {
                const auto* p = as<AssignmentPattern>(n);
                expr(p->left.get(), kPrecCall);
                raw(" = ");
                expr(p->right.get(), kPrecAssign);
                break;
            }
            case NodeKind::RestElement:
                raw("...");
                expr(as<RestElement>(n)->argument.get(), kPrecCall);
                break;
            default: raw("/* ? */"); break;
        }
    }

    void template_lit(const TemplateLit* t) {
        raw('`');
        for (size_t i = 0; i < t->raw.size(); i++) {
            raw(t->raw[i]);
            if (i < t->exprs.size()) {
                raw("${");
                expr(t->exprs[i].get(), kPrecSequence);
                raw('}');
            }
        }
        raw('`');
    }

    void array_lit(const ArrayLit* a) {
        raw('[');
        for (size_t i = 0; i < a->elements.size(); i++) {
            if (i > 0) raw(", ");
            if (a->elements[i]) expr(a->elements[i].get(), kPrecAssign);
        }
        // A trailing hole only survives reparsing with an extra comma.
        if (!a->elements.empty() && !a->elements.back()) raw(',');
        raw(']');
    }

    void property_key(const Node* key, bool computed) {
        if (computed) {
            raw('[');
            expr(key, kPrecAssign);
            raw(']');
            return;
        }
        switch (key->kind) {
            case NodeKind::Ident: raw(as<Ident>(key)->name); break;
            case NodeKind::StringLit: raw(detail::quote_js_string(as<StringLit>(key)->value)); break;
            case NodeKind::NumberLit: raw(js_number_to_string(as<NumberLit>(key)->value)); break;
            default: expr(key, kPrecAssign); break;
        }
    }

    void object_property(const Property* p) {
        if (p->prop_kind == Property::Kind::Get || p->prop_kind == Property::Kind::Set) {
            raw(p->prop_kind == Property::Kind::Get ? "get " : "set ");
            property_key(p->key.get(), p->computed);
            function_tail(as<FunctionNode>(p->value.get()));
            return;
        }
        if (p->method) {
            const auto* fn = as<FunctionNode>(p->value.get());
            if (fn->is_async) raw("async ");
            property_key(p->key.get(), p->computed);
            function_tail(fn);
            return;
        }
        if (p->shorthand && !p->computed) {
            // Covers both `{a}` and the `{a = 1}` pattern form.
            expr(p->value.get(), kPrecAssign);
            return;
        }
        property_key(p->key.get(), p->computed);
        raw(": ");
        expr(p->value.get(), kPrecAssign);
    }

    void object_lit(const ObjectLit* o) {
        if (o->props.empty()) {
            raw("{}");
            return;
        }
        raw("{ ");
        for (size_t i = 0; i < o->props.size(); i++) {
            if (i > 0) raw(", ");
            const Node* p = o->props[i].get();
            if (p->kind == NodeKind::SpreadElement) {
                raw("...");
                expr(as<SpreadElement>(p)->argument.get(), kPrecAssign);
            } else {
                object_property(as<Property>(p));
            }
        }
        raw(" }");
    }

    void params(const std::vector<NodePtr>& ps) {
        raw('(');
        for (size_t i = 0; i < ps.size(); i++) {
            if (i > 0) raw(", ");
            expr(ps[i].get(), kPrecAssign);
        }
        raw(')');
    }

    /// `(params) { body }` — the part shared by methods and accessors.
    void function_tail(const FunctionNode* fn) {
        params(fn->params);
        raw(' ');
        braced_body(fn->body.get());
    }

    void function_expr(const FunctionNode* fn) {
        if (fn->is_arrow) {
            if (fn->is_async) raw("async ");
            params(fn->params);
            raw(" => ");
            if (fn->is_expression_body) {
                bool needs_paren = starts_with_brace(fn->body.get());
                if (needs_paren) raw('(');
                expr(fn->body.get(), kPrecAssign);
                if (needs_paren) raw(')');
            } else {
                braced_body(fn->body.get());
            }
            return;
        }
        if (fn->is_async) raw("async ");
        raw("function");
        if (!fn->name.empty()) {
            raw(' ');
            raw(fn->name);
        }
        function_tail(fn);
    }

    void class_node(const ClassNode* c) {
        raw("class");
        if (!c->name.empty()) {
            raw(' ');
            raw(c->name);
        }
        if (c->super_class) {
            raw(" extends ");
            expr(c->super_class.get(), kPrecCall);
        }
        raw(" {");
        end_line();
        indent_++;
        for (const NodePtr& m : c->members) {
            const auto* mem = as<ClassMember>(m.get());
            begin_line();
            if (mem->is_static) raw("static ");
            switch (mem->member_kind) {
                case ClassMember::Kind::Getter:
                    raw("get ");
                    property_key(mem->key.get(), mem->computed);
                    function_tail(as<FunctionNode>(mem->value.get()));
                    break;
                case ClassMember::Kind::Setter:
                    raw("set ");
                    property_key(mem->key.get(), mem->computed);
                    function_tail(as<FunctionNode>(mem->value.get()));
                    break;
                case ClassMember::Kind::Field:
                    property_key(mem->key.get(), mem->computed);
                    if (mem->value) {
                        raw(" = ");
                        expr(mem->value.get(), kPrecAssign);
                    }
                    raw(';');
                    break;
                case ClassMember::Kind::Constructor:
                case ClassMember::Kind::Method: {
                    const auto* fn = as<FunctionNode>(mem->value.get());
                    if (fn->is_async) raw("async ");
                    property_key(mem->key.get(), mem->computed);
                    function_tail(fn);
                    break;
                }
            }
            end_line();
        }
        indent_--;
        begin_line();
        raw('}');
    }

    void unary(const UnaryExpr* u) {
        bool word = u->op.size() > 1 && u->op != "!" && u->op != "~";
        raw(u->op);
        if (word) raw(' ');
        size_t at = out_.size();
        expr(u->operand.get(), kPrecUnary);
        // `- -x` must not fuse into `--x` (same for `+ +x`).
        if (!word && (u->op == "-" || u->op == "+") && out_.size() > at &&
            out_[at] == u->op[0]) {
            out_.insert(at, 1, ' ');
        }
    }

    void update(const UpdateExpr* u) {
        if (u->prefix) {
            raw(u->op);
            expr(u->operand.get(), kPrecUnary);
        } else {
            expr(u->operand.get(), kPrecCall);
            raw(u->op);
        }
    }

    void binary(const BinaryExpr* b) {
        int prec = binary_prec(b->op);
        if (b->op == "**") {
            // Exponentiation rejects an unparenthesized unary base.
            const Node* l = b->lhs.get();
            bool force = l->kind == NodeKind::UnaryExpr || l->kind == NodeKind::AwaitExpr ||
                         (l->kind == NodeKind::UpdateExpr && as<UpdateExpr>(l)->prefix);
            if (force) {
                raw('(');
                expr_inner(l);
                raw(')');
            } else {
                expr(l, prec + 1);  // right-associative
            }
            raw(" ** ");
            expr(b->rhs.get(), prec);
            return;
        }
        expr(b->lhs.get(), prec);
        raw(' ');
        raw(b->op);
        raw(' ');
        expr(b->rhs.get(), prec + 1);
    }

    void logical(const LogicalExpr* l) {
        if (l->op == "??") {
            // `??` refuses to mix with && / || without parentheses.
            const Node* lhs = l->lhs.get();
            bool lhs_is_coalesce =
                lhs->kind == NodeKind::LogicalExpr && as<LogicalExpr>(lhs)->op == "??";
            expr(lhs, lhs_is_coalesce ? kPrecNullish : kPrecBitOr);
            raw(" ?? ");
            expr(l->rhs.get(), kPrecBitOr);
            return;
        }
        int prec = l->op == "||" ? kPrecOr : kPrecAnd;
        expr(l->lhs.get(), prec);
        raw(' ');
        raw(l->op);
        raw(' ');
        expr(l->rhs.get(), prec + 1);
    }

    static bool callee_contains_call(const Node* n) {
        switch (n->kind) {
            case NodeKind::CallExpr:
            case NodeKind::ChainExpr:
            case NodeKind::TaggedTemplate: return true;
            case NodeKind::MemberExpr: return callee_contains_call(as<MemberExpr>(n)->object.get());
            default: return false;
        }
    }

    void new_expr(const NewExpr* e) {
        raw("new ");
        if (callee_contains_call(e->callee.get())) {
            raw('(');
            expr_inner(e->callee.get());
            raw(')');
        } else {
            expr(e->callee.get(), kPrecCall);
        }
        arguments(e->args);
    }

    void member(const MemberExpr* m) {
        const Node* obj = m->object.get();
        if (obj->kind == NodeKind::NumberLit) {
            raw('(');
            expr_inner(obj);
            raw(')');
        } else {
            expr(obj, kPrecCall);
        }
        if (m->computed) {
            if (m->optional) raw("?.");
            raw('[');
            expr(m->property.get(), kPrecSequence);
            raw(']');
        } else {
            raw(m->optional ? "?." : ".");
            raw(as<Ident>(m->property.get())->name);
        }
    }

    void arguments(const std::vector<NodePtr>& args) {
        raw('(');
        for (size_t i = 0; i < args.size(); i++) {
            if (i > 0) raw(", ");
            expr(args[i].get(), kPrecAssign);
        }
        raw(')');
    }

    void array_pattern(const ArrayPattern* p) {
        raw('[');
        for (size_t i = 0; i < p->elements.size(); i++) {
            if (i > 0) raw(", ");
            if (p->elements[i]) expr(p->elements[i].get(), kPrecAssign);
        }
        if (!p->elements.empty() && !p->elements.back()) raw(',');
        raw(']');
    }

    void object_pattern(const ObjectPattern* p) {
        if (p->props.empty()) {
            raw("{}");
            return;
        }
        raw("{ ");
        for (size_t i = 0; i < p->props.size(); i++) {
            if (i > 0) raw(", ");
            const Node* e = p->props[i].get();
            if (e->kind == NodeKind::RestElement) {
                raw("...");
                expr(as<RestElement>(e)->argument.get(), kPrecCall);
            } else {
                object_property(as<Property>(e));
            }
        }
        raw(" }");
    }

    /// True when the leftmost token of the expression would open `{`,
    /// `function`, or `class` — forms a statement cannot start with.
    static bool starts_ambiguously(const Node* n) {
        switch (n->kind) {
            case NodeKind::ObjectLit:
            case NodeKind::ObjectPattern:
            case NodeKind::ClassNode: return true;
            case NodeKind::FunctionNode: return !as<FunctionNode>(n)->is_arrow;
            case NodeKind::BinaryExpr: return starts_ambiguously(as<BinaryExpr>(n)->lhs.get());
            case NodeKind::LogicalExpr: return starts_ambiguously(as<LogicalExpr>(n)->lhs.get());
            case NodeKind::ConditionalExpr:
                return starts_ambiguously(as<ConditionalExpr>(n)->test.get());
            case NodeKind::AssignExpr: return starts_ambiguously(as<AssignExpr>(n)->target.get());
            case NodeKind::SequenceExpr: {
                const auto& exprs = as<SequenceExpr>(n)->exprs;
                return !exprs.empty() && starts_ambiguously(exprs.front().get());
            }
            case NodeKind::CallExpr: return starts_ambiguously(as<CallExpr>(n)->callee.get());
            case NodeKind::MemberExpr: return starts_ambiguously(as<MemberExpr>(n)->object.get());
            case NodeKind::TaggedTemplate:
                return starts_ambiguously(as<TaggedTemplate>(n)->tag.get());
            case NodeKind::ChainExpr: return starts_ambiguously(as<ChainExpr>(n)->expr.get());
            case NodeKind::UpdateExpr: {
                const auto* u = as<UpdateExpr>(n);
                return !u->prefix && starts_ambiguously(u->operand.get());
            }
            default: return false;
        }
    }

    static bool starts_with_brace(const Node* n) {
        return n->kind == NodeKind::ObjectLit ||
               (n->kind == NodeKind::SequenceExpr &&
                !as<SequenceExpr>(n)->exprs.empty() &&
                starts_with_brace(as<SequenceExpr>(n)->exprs.front().get()));
    }

    // ---- statements ----

    /// Emits a statement body as a braced block even when the AST holds a
    /// single statement; normalized bodies keep reprints stable.
    void braced_body(const Node* body) {
        raw('{');
        bool empty = body != nullptr && body->kind == NodeKind::BlockStmt &&
                     as<BlockStmt>(body)->body.empty();
        if (body == nullptr || empty || body->kind == NodeKind::EmptyStmt) {
            raw('}');
            return;
        }
        end_line();
        indent_++;
        if (body->kind == NodeKind::BlockStmt) {
            for (const NodePtr& s : as<BlockStmt>(body)->body) stmt(s.get());
        } else {
            stmt(body);
        }
        indent_--;
        begin_line();
        raw('}');
    }

    void var_decl(const VarDecl* d, bool semicolon) {
        raw(d->decl_kind);
        raw(' ');
        for (size_t i = 0; i < d->declarators.size(); i++) {
            if (i > 0) raw(", ");
            const auto* dtor = as<VarDeclarator>(d->declarators[i].get());
            expr(dtor->id.get(), kPrecAssign);
            if (dtor->init) {
                raw(" = ");
                expr(dtor->init.get(), kPrecAssign);
            }
        }
        if (semicolon) raw(';');
    }

    void for_head_left(const Node* left) {
        if (left->kind == NodeKind::VarDecl) {
            var_decl(as<VarDecl>(left), false);
        } else {
            expr(left, kPrecCall);
        }
    }

    static std::string quote_specifier(const std::string& s) {
        return detail::quote_js_string(s);
    }

    void import_decl(const ImportDecl* d) {
        raw("import ");
        if (d->specifiers.empty()) {
            raw(quote_specifier(d->source));
            raw(';');
            return;
        }
        bool first = true;
        bool named_open = false;
        for (const ImportSpec& s : d->specifiers) {
            if (s.kind == ImportSpec::Kind::Named) {
                if (!named_open) {
                    if (!first) raw(", ");
                    raw("{ ");
                    named_open = true;
                } else {
                    raw(", ");
                }
                if (s.imported == s.local) {
                    raw(s.local);
                } else {
                    raw(s.imported);
                    raw(" as ");
                    raw(s.local);
                }
                first = false;
                continue;
            }
            if (named_open) {
                raw(" }");
                named_open = false;
            }
            if (!first) raw(", ");
            if (s.kind == ImportSpec::Kind::Default) {
                raw(s.local);
            } else {
                raw("* as ");
                raw(s.local);
            }
            first = false;
        }
        if (named_open) raw(" }");
        raw(" from ");
        raw(quote_specifier(d->source));
        raw(';');
    }

    void export_named(const ExportNamedDecl* d) {
        raw("export ");
        if (d->declaration) {
            declaration(d->declaration.get());
            return;
        }
        raw("{ ");
        for (size_t i = 0; i < d->specifiers.size(); i++) {
            if (i > 0) raw(", ");
            const ExportSpec& s = d->specifiers[i];
            if (s.local == s.exported) {
                raw(s.local);
            } else {
                raw(s.local);
                raw(" as ");
                raw(s.exported);
            }
        }
        raw(" }");
        if (d->source) {
            raw(" from ");
            raw(quote_specifier(*d->source));
        }
        raw(';');
    }

    /// Prints declarations that may close without a semicolon (functions,
    /// classes) or need one (var/let/const).
    void declaration(const Node* n) {
        switch (n->kind) {
            case NodeKind::VarDecl: var_decl(as<VarDecl>(n), true); break;
            case NodeKind::FunctionNode: function_expr(as<FunctionNode>(n)); break;
            case NodeKind::ClassNode: class_node(as<ClassNode>(n)); break;
            default:
                expr(n, kPrecSequence);
                raw(';');
                break;
        }
    }

    void stmt(const Node* n) {
        if (n == nullptr) return;
        begin_line();
        stmt_inner(n);
        end_line();
    }

    void stmt_inner(const Node* n) {
        switch (n->kind) {
            case NodeKind::ExprStmt: {
                const Node* e = as<ExprStmt>(n)->expr.get();
                bool paren = starts_ambiguously(e);
                if (paren) raw('(');
                expr(e, kPrecSequence);
                if (paren) raw(')');
                raw(';');
                break;
            }
            case NodeKind::VarDecl: var_decl(as<VarDecl>(n), true); break;
            case NodeKind::FunctionNode: function_expr(as<FunctionNode>(n)); break;
            case NodeKind::ClassNode: class_node(as<ClassNode>(n)); break;
            case NodeKind::BlockStmt: braced_body(n); break;
            case NodeKind::EmptyStmt: raw(';'); break;
            case NodeKind::IfStmt: {
                const auto* s = as<IfStmt>(n);
                raw("if (");
                expr(s->test.get(), kPrecSequence);
                raw(") ");
                braced_body(s->consequent.get());
                if (s->alternate) {
                    raw(" else ");
                    if (s->alternate->kind == NodeKind::IfStmt) {
                        stmt_inner(s->alternate.get());
                    } else {
                        braced_body(s->alternate.get());
                    }
                }
                break;
            }
            case NodeKind::ForStmt: {
                const auto* s = as<ForStmt>(n);
                raw("for (");
                if (s->init) {
                    if (s->init->kind == NodeKind::VarDecl) {
                        var_decl(as<VarDecl>(s->init.get()), false);
                    } else {
                        expr(s->init.get(), kPrecSequence);
                    }
                }
                raw("; ");
                if (s->test) expr(s->test.get(), kPrecSequence);
                raw("; ");
                if (s->update) expr(s->update.get(), kPrecSequence);
                raw(") ");
                braced_body(s->body.get());
                break;
            }
            case NodeKind::ForInStmt: {
                const auto* s = as<ForInStmt>(n);
                raw("for (");
                for_head_left(s->left.get());
                raw(" in ");
                expr(s->right.get(), kPrecSequence);
                raw(") ");
                braced_body(s->body.get());
                break;
            }
            case NodeKind::ForOfStmt: {
                const auto* s = as<ForOfStmt>(n);
                raw("for (");
                for_head_left(s->left.get());
                raw(" of ");
                expr(s->right.get(), kPrecAssign);
                raw(") ");
                braced_body(s->body.get());
                break;
            }
            case NodeKind::WhileStmt: {
                const auto* s = as<WhileStmt>(n);
                raw("while (");
                expr(s->test.get(), kPrecSequence);
                raw(") ");
                braced_body(s->body.get());
                break;
            }
            case NodeKind::DoWhileStmt: {
                const auto* s = as<DoWhileStmt>(n);
                raw("do ");
                braced_body(s->body.get());
                raw(" while (");
                expr(s->test.get(), kPrecSequence);
                raw(");");
                break;
            }
            case NodeKind::BreakStmt: raw("break;"); break;
            case NodeKind::ContinueStmt: raw("continue;"); break;
            case NodeKind::ReturnStmt: {
                const auto* s = as<ReturnStmt>(n);
                if (s->argument) {
                    raw("return ");
                    expr(s->argument.get(), kPrecSequence);
                    raw(';');
                } else {
                    raw("return;");
                }
                break;
            }
            case NodeKind::ThrowStmt:
                raw("throw ");
                expr(as<ThrowStmt>(n)->argument.get(), kPrecSequence);
                raw(';');
                break;
            case NodeKind::TryStmt: {
                const auto* s = as<TryStmt>(n);
                raw("try ");
                braced_body(s->block.get());
                if (s->handler) {
                    raw(" catch ");
                    if (s->param) {
                        raw('(');
                        expr(s->param.get(), kPrecAssign);
                        raw(") ");
                    }
                    braced_body(s->handler.get());
                }
                if (s->finalizer) {
                    raw(" finally ");
                    braced_body(s->finalizer.get());
                }
                break;
            }
            case NodeKind::SwitchStmt: {
                const auto* s = as<SwitchStmt>(n);
                raw("switch (");
                expr(s->discriminant.get(), kPrecSequence);
                raw(") {");
                end_line();
                indent_++;
                for (const NodePtr& c : s->cases) {
                    const auto* sc = as<SwitchCase>(c.get());
                    begin_line();
                    if (sc->test) {
                        raw("case ");
                        expr(sc->test.get(), kPrecSequence);
                        raw(':');
                    } else {
                        raw("default:");
                    }
                    end_line();
                    indent_++;
                    for (const NodePtr& b : sc->body) stmt(b.get());
                    indent_--;
                }
                indent_--;
                begin_line();
                raw('}');
                break;
            }
            case NodeKind::DebuggerStmt: raw("debugger;"); break;
            case NodeKind::ImportDecl: import_decl(as<ImportDecl>(n)); break;
            case NodeKind::ExportNamedDecl: export_named(as<ExportNamedDecl>(n)); break;
            case NodeKind::ExportDefaultDecl: {
                const auto* d = as<ExportDefaultDecl>(n);
                raw("export default ");
                const Node* decl = d->declaration.get();
                if (decl->kind == NodeKind::FunctionNode &&
                    !as<FunctionNode>(decl)->is_arrow) {
                    function_expr(as<FunctionNode>(decl));
                } else if (decl->kind == NodeKind::ClassNode) {
                    class_node(as<ClassNode>(decl));
                } else {
                    expr(decl, kPrecAssign);
                    raw(';');
                }
                break;
            }
            case NodeKind::ExportAllDecl: {
                const auto* d = as<ExportAllDecl>(n);
                raw("export *");
                if (d->exported) {
                    raw(" as ");
                    raw(*d->exported);
                }
                raw(" from ");
                raw(quote_specifier(d->source));
                raw(';');
                break;
            }
            default:
                expr(n, kPrecSequence);
                raw(';');
                break;
        }
    }
};

/// Convenience wrapper: AST (or single statement) back to source.
inline std::string print_source(const Node* n) { return Printer::program(n); }

}  // namespace mirage

#endif
