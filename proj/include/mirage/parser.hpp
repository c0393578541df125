#ifndef MIRAGE_PARSER_HPP
#define MIRAGE_PARSER_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "mirage/ast.hpp"
#include "mirage/lexer.hpp"
#include "mirage/token.hpp"

namespace mirage {

/// Recursive-descent parser for the supported language subset. Generators,
/// labels, `with`, and BigInt are rejected with ParseError; everything else
/// commonly produced by bundlers and obfuscators parses.
class Parser {
public:
    explicit Parser(const SourceText& text)
        : src_(*text.body), specifier_(text.specifier), source_type_(text.source_type) {
        tokens_ = Lexer(src_, specifier_).tokenize();
    }

    NodePtr parse_program() {
        auto program = std::make_unique<Program>();
        program->source_type = source_type_;
        program->span = {0, static_cast<uint32_t>(src_.size()), 1, 1};
        while (!at_eof()) {
            program->body.push_back(parse_statement(/*top_level=*/true));
        }
        return program;
    }

private:
    static constexpr int kMaxDepth = 400;

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > kMaxDepth) p.fail("nesting is too deep");
        }
        ~DepthGuard() { --p.depth_; }
    };

    // ---- token helpers ----

    const Token& cur(size_t off = 0) const {
        size_t i = idx_ + off;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    bool at_eof() const { return cur().type == TokenType::EndOfFile; }
    const Token& eat() {
        const Token& t = tokens_[idx_];
        if (idx_ + 1 < tokens_.size()) idx_++;
        return t;
    }
    bool at_punct(const char* p) const { return cur().is_punct(p); }
    bool at_keyword(const char* k) const { return cur().is_keyword(k); }
    bool eat_punct(const char* p) {
        if (!at_punct(p)) return false;
        eat();
        return true;
    }
    bool eat_keyword(const char* k) {
        if (!at_keyword(k)) return false;
        eat();
        return true;
    }
    void expect_punct(const char* p) {
        if (!eat_punct(p)) fail(std::string("expected '") + p + "'");
    }

    [[noreturn]] void fail(const std::string& message) const {
        const Token& t = cur();
        std::string got = t.type == TokenType::EndOfFile ? "end of input" : "'" + t.text + "'";
        throw ParseError({specifier_, t.span.line, t.span.column}, message + " but found " + got);
    }

    Span start_span() const { return cur().span; }
    template <typename T>
    std::unique_ptr<T> finish(std::unique_ptr<T> node, const Span& start) {
        node->span.start = start.start;
        node->span.line = start.line;
        node->span.column = start.column;
        node->span.end = idx_ > 0 ? tokens_[idx_ - 1].span.end : start.end;
        return node;
    }

    // Contextual keywords usable as plain identifiers.
    static bool contextual(const std::string& k) {
        return k == "let" || k == "static" || k == "get" || k == "set" || k == "of" ||
               k == "async";
    }
    bool at_identifier() const {
        return cur().type == TokenType::Identifier ||
               (cur().type == TokenType::Keyword && contextual(cur().text));
    }
    std::string eat_identifier() {
        if (!at_identifier()) fail("expected identifier");
        return eat().text;
    }
    // Any identifier-like token is a valid property name after '.' or as a key.
    bool at_property_name() const {
        return cur().type == TokenType::Identifier || cur().type == TokenType::Keyword;
    }

    void expect_semi() {
        if (eat_punct(";")) return;
        if (cur().newline_before || at_punct("}") || at_eof()) return;
        fail("expected ';'");
    }

    // ---- statements ----

    NodePtr parse_statement(bool top_level = false) {
        DepthGuard guard(*this);
        Span start = start_span();
        const Token& t = cur();

        if (t.type == TokenType::Punct) {
            if (t.text == "{") return parse_block();
            if (t.text == ";") {
                eat();
                return finish(std::make_unique<EmptyStmt>(), start);
            }
        }
        if (t.type == TokenType::Keyword) {
            const std::string& k = t.text;
            if (k == "var" || k == "const") return parse_var_statement();
            if (k == "let" && starts_binding(cur(1))) return parse_var_statement();
            if (k == "function") return parse_function(/*declaration=*/true, /*is_async=*/false);
            if (k == "async" && cur(1).is_keyword("function") && !cur(1).newline_before) {
                eat();
                return parse_function(true, true);
            }
            if (k == "class") return parse_class(true);
            if (k == "if") return parse_if();
            if (k == "for") return parse_for();
            if (k == "while") return parse_while();
            if (k == "do") return parse_do_while();
            if (k == "switch") return parse_switch();
            if (k == "try") return parse_try();
            if (k == "return") return parse_return();
            if (k == "throw") return parse_throw();
            if (k == "break" || k == "continue") return parse_break_continue();
            if (k == "debugger") {
                eat();
                expect_semi();
                return finish(std::make_unique<DebuggerStmt>(), start);
            }
            if (k == "with") fail("'with' statements are not supported");
            if (k == "import" && !cur(1).is_punct("(") && !cur(1).is_punct(".")) {
                if (!top_level || source_type_ != SourceType::module_) {
                    fail("import declarations are only valid at module top level");
                }
                return parse_import();
            }
            if (k == "export") {
                if (!top_level || source_type_ != SourceType::module_) {
                    fail("export declarations are only valid at module top level");
                }
                return parse_export();
            }
        }
        // Labels are not part of the subset; catch `name:` early for a clear
        // message instead of a confusing one at ':'.
        if (at_identifier() && cur(1).is_punct(":")) {
            fail("labeled statements are not supported");
        }
        auto stmt = std::make_unique<ExprStmt>();
        stmt->expr = parse_expression(/*no_in=*/false);
        expect_semi();
        return finish(std::move(stmt), start);
    }

    static bool starts_binding(const Token& t) {
        return t.type == TokenType::Identifier || t.is_punct("[") || t.is_punct("{") ||
               (t.type == TokenType::Keyword && contextual(t.text));
    }

    NodePtr parse_block() {
        Span start = start_span();
        expect_punct("{");
        auto block = std::make_unique<BlockStmt>();
        while (!at_punct("}")) {
            if (at_eof()) fail("expected '}'");
            block->body.push_back(parse_statement());
        }
        eat();
        return finish(std::move(block), start);
    }

    NodePtr parse_var_statement() {
        NodePtr decl = parse_var_decl(/*no_in=*/false);
        expect_semi();
        return decl;
    }

    NodePtr parse_var_decl(bool no_in) {
        Span start = start_span();
        auto decl = std::make_unique<VarDecl>();
        decl->decl_kind = eat().text;
        for (;;) {
            Span d_start = start_span();
            auto d = std::make_unique<VarDeclarator>();
            d->id = parse_binding_pattern();
            if (eat_punct("=")) d->init = parse_assignment(no_in);
            decl->declarators.push_back(finish(std::move(d), d_start));
            if (!eat_punct(",")) break;
        }
        return finish(std::move(decl), start);
    }

    NodePtr parse_if() {
        Span start = start_span();
        eat();  // if
        expect_punct("(");
        auto stmt = std::make_unique<IfStmt>();
        stmt->test = parse_expression(false);
        expect_punct(")");
        stmt->consequent = parse_statement();
        if (eat_keyword("else")) stmt->alternate = parse_statement();
        return finish(std::move(stmt), start);
    }

    NodePtr parse_for() {
        Span start = start_span();
        eat();  // for
        expect_punct("(");

        NodePtr init;
        if (at_punct(";")) {
            // no init
        } else if (at_keyword("var") || at_keyword("const") ||
                   (at_keyword("let") && starts_binding(cur(1)))) {
            init = parse_var_decl(/*no_in=*/true);
        } else {
            init = parse_expression(/*no_in=*/true);
        }

        if (at_keyword("in") || at_keyword("of")) {
            bool is_of = at_keyword("of");
            if (init == nullptr) fail("missing loop binding");
            if (init->kind == NodeKind::VarDecl) {
                auto* vd = as<VarDecl>(init.get());
                if (vd->declarators.size() != 1 ||
                    as<VarDeclarator>(vd->declarators[0].get())->init != nullptr) {
                    fail("bad loop binding");
                }
            } else {
                init = to_pattern(std::move(init));
            }
            eat();  // in / of
            NodePtr right = is_of ? parse_assignment(false) : parse_expression(false);
            expect_punct(")");
            NodePtr body = parse_statement();
            if (is_of) {
                auto stmt = std::make_unique<ForOfStmt>();
                stmt->left = std::move(init);
                stmt->right = std::move(right);
                stmt->body = std::move(body);
                return finish(std::move(stmt), start);
            }
            auto stmt = std::make_unique<ForInStmt>();
            stmt->left = std::move(init);
            stmt->right = std::move(right);
            stmt->body = std::move(body);
            return finish(std::move(stmt), start);
        }

        auto stmt = std::make_unique<ForStmt>();
        stmt->init = std::move(init);
        expect_punct(";");
        if (!at_punct(";")) stmt->test = parse_expression(false);
        expect_punct(";");
        if (!at_punct(")")) stmt->update = parse_expression(false);
        expect_punct(")");
        stmt->body = parse_statement();
        return finish(std::move(stmt), start);
    }

    NodePtr parse_while() {
        Span start = start_span();
        eat();
        expect_punct("(");
        auto stmt = std::make_unique<WhileStmt>();
        stmt->test = parse_expression(false);
        expect_punct(")");
        stmt->body = parse_statement();
        return finish(std::move(stmt), start);
    }

    NodePtr parse_do_while() {
        Span start = start_span();
        eat();
        auto stmt = std::make_unique<DoWhileStmt>();
        stmt->body = parse_statement();
        if (!eat_keyword("while")) fail("expected 'while'");
        expect_punct("(");
        stmt->test = parse_expression(false);
        expect_punct(")");
        eat_punct(";");  // always optional after do-while
        return finish(std::move(stmt), start);
    }

    NodePtr parse_switch() {
        Span start = start_span();
        eat();
        expect_punct("(");
        auto stmt = std::make_unique<SwitchStmt>();
        stmt->discriminant = parse_expression(false);
        expect_punct(")");
        expect_punct("{");
        bool seen_default = false;
        while (!eat_punct("}")) {
            if (at_eof()) fail("expected '}'");
            Span c_start = start_span();
            auto c = std::make_unique<SwitchCase>();
            if (eat_keyword("case")) {
                c->test = parse_expression(false);
            } else if (eat_keyword("default")) {
                if (seen_default) fail("duplicate 'default' clause");
                seen_default = true;
            } else {
                fail("expected 'case' or 'default'");
            }
            expect_punct(":");
            while (!at_punct("}") && !at_keyword("case") && !at_keyword("default")) {
                if (at_eof()) fail("expected '}'");
                c->body.push_back(parse_statement());
            }
            stmt->cases.push_back(finish(std::move(c), c_start));
        }
        return finish(std::move(stmt), start);
    }

    NodePtr parse_try() {
        Span start = start_span();
        eat();
        auto stmt = std::make_unique<TryStmt>();
        stmt->block = parse_block();
        if (eat_keyword("catch")) {
            if (eat_punct("(")) {
                stmt->param = parse_binding_pattern();
                expect_punct(")");
            }
            stmt->handler = parse_block();
        }
        if (eat_keyword("finally")) stmt->finalizer = parse_block();
        if (stmt->handler == nullptr && stmt->finalizer == nullptr) {
            fail("try needs a catch or finally clause");
        }
        return finish(std::move(stmt), start);
    }

    NodePtr parse_return() {
        Span start = start_span();
        eat();
        auto stmt = std::make_unique<ReturnStmt>();
        if (!at_punct(";") && !at_punct("}") && !at_eof() && !cur().newline_before) {
            stmt->argument = parse_expression(false);
        }
        expect_semi();
        return finish(std::move(stmt), start);
    }

    NodePtr parse_throw() {
        Span start = start_span();
        eat();
        if (cur().newline_before) fail("newline not allowed after 'throw'");
        auto stmt = std::make_unique<ThrowStmt>();
        stmt->argument = parse_expression(false);
        expect_semi();
        return finish(std::move(stmt), start);
    }

    NodePtr parse_break_continue() {
        Span start = start_span();
        bool is_break = eat().text == "break";
        if (at_identifier() && !cur().newline_before) fail("labels are not supported");
        expect_semi();
        if (is_break) return finish(std::make_unique<BreakStmt>(), start);
        return finish(std::make_unique<ContinueStmt>(), start);
    }

    NodePtr parse_import() {
        Span start = start_span();
        eat();  // import
        auto decl = std::make_unique<ImportDecl>();
        if (cur().type == TokenType::String) {
            decl->source = eat().value;
            expect_semi();
            return finish(std::move(decl), start);
        }
        bool need_from = false;
        if (at_identifier()) {
            decl->specifiers.push_back({ImportSpec::Kind::Default, "default", eat_identifier()});
            need_from = true;
            if (eat_punct(",")) need_from = false;  // more specifiers follow
        }
        if (!need_from) {
            if (eat_punct("*")) {
                if (!eat_keyword("as")) {
                    if (eat_identifier() != "as") fail("expected 'as'");
                }
                decl->specifiers.push_back({ImportSpec::Kind::Namespace, "*", eat_identifier()});
            } else if (eat_punct("{")) {
                while (!eat_punct("}")) {
                    if (at_eof()) fail("expected '}'");
                    std::string imported = parse_module_export_name();
                    std::string local = imported;
                    if (at_identifier() && cur().text == "as") {
                        eat();
                        local = eat_identifier();
                    }
                    decl->specifiers.push_back({ImportSpec::Kind::Named, imported, local});
                    if (!eat_punct(",") && !at_punct("}")) fail("expected ',' or '}'");
                }
            } else if (decl->specifiers.empty()) {
                fail("expected import specifiers");
            }
        }
        if (!at_identifier() || cur().text != "from") fail("expected 'from'");
        eat();
        if (cur().type != TokenType::String) fail("expected module name string");
        decl->source = eat().value;
        expect_semi();
        return finish(std::move(decl), start);
    }

    std::string parse_module_export_name() {
        if (cur().type == TokenType::String) return eat().value;
        if (!at_property_name()) fail("expected export name");
        return eat().text;
    }

    NodePtr parse_export() {
        Span start = start_span();
        eat();  // export
        if (eat_keyword("default")) {
            auto decl = std::make_unique<ExportDefaultDecl>();
            if (at_keyword("function") ||
                (at_keyword("async") && cur(1).is_keyword("function") && !cur(1).newline_before)) {
                bool is_async = eat_keyword("async");
                decl->declaration = parse_function(/*declaration=*/true, is_async,
                                                   /*name_optional=*/true);
            } else if (at_keyword("class")) {
                decl->declaration = parse_class(/*declaration=*/true, /*name_optional=*/true);
            } else {
                decl->declaration = parse_assignment(false);
                expect_semi();
            }
            return finish(std::move(decl), start);
        }
        if (eat_punct("*")) {
            auto decl = std::make_unique<ExportAllDecl>();
            if (at_identifier() && cur().text == "as") {
                eat();
                decl->exported = parse_module_export_name();
            }
            if (!at_identifier() || cur().text != "from") fail("expected 'from'");
            eat();
            if (cur().type != TokenType::String) fail("expected module name string");
            decl->source = eat().value;
            expect_semi();
            return finish(std::move(decl), start);
        }
        auto decl = std::make_unique<ExportNamedDecl>();
        if (at_punct("{")) {
            eat();
            while (!eat_punct("}")) {
                if (at_eof()) fail("expected '}'");
                ExportSpec spec;
                spec.local = parse_module_export_name();
                spec.exported = spec.local;
                if (at_identifier() && cur().text == "as") {
                    eat();
                    spec.exported = parse_module_export_name();
                }
                decl->specifiers.push_back(spec);
                if (!eat_punct(",") && !at_punct("}")) fail("expected ',' or '}'");
            }
            if (at_identifier() && cur().text == "from") {
                eat();
                if (cur().type != TokenType::String) fail("expected module name string");
                decl->source = eat().value;
            }
            expect_semi();
        } else if (at_keyword("var") || at_keyword("const") ||
                   (at_keyword("let") && starts_binding(cur(1)))) {
            decl->declaration = parse_var_statement();
        } else if (at_keyword("function")) {
            decl->declaration = parse_function(true, false);
        } else if (at_keyword("async") && cur(1).is_keyword("function") && !cur(1).newline_before) {
            eat();
            decl->declaration = parse_function(true, true);
        } else if (at_keyword("class")) {
            decl->declaration = parse_class(true);
        } else {
            fail("expected declaration or '{' after 'export'");
        }
        return finish(std::move(decl), start);
    }

    // ---- functions and classes ----

    NodePtr parse_function(bool declaration, bool is_async, bool name_optional = false) {
        Span start = start_span();
        if (!eat_keyword("function")) fail("expected 'function'");
        if (at_punct("*")) fail("generators are not supported");
        auto fn = std::make_unique<FunctionNode>();
        fn->is_async = is_async;
        fn->is_declaration = declaration;
        if (at_identifier()) {
            fn->name = eat_identifier();
        } else if (declaration && !name_optional) {
            fail("function declarations need a name");
        }
        fn->params = parse_params();
        fn->body = parse_block();
        return finish(std::move(fn), start);
    }

    std::vector<NodePtr> parse_params() {
        expect_punct("(");
        std::vector<NodePtr> params;
        while (!eat_punct(")")) {
            if (at_eof()) fail("expected ')'");
            params.push_back(parse_binding_element());
            if (!eat_punct(",") && !at_punct(")")) fail("expected ',' or ')'");
        }
        return params;
    }

    NodePtr parse_binding_element() {
        Span start = start_span();
        if (eat_punct("...")) {
            auto rest = std::make_unique<RestElement>();
            rest->argument = parse_binding_pattern();
            return finish(std::move(rest), start);
        }
        NodePtr pat = parse_binding_pattern();
        if (eat_punct("=")) {
            auto def = std::make_unique<AssignmentPattern>();
            def->left = std::move(pat);
            def->right = parse_assignment(false);
            return finish(std::move(def), start);
        }
        return pat;
    }

    NodePtr parse_binding_pattern() {
        Span start = start_span();
        if (at_punct("[")) {
            eat();
            auto pat = std::make_unique<ArrayPattern>();
            while (!eat_punct("]")) {
                if (at_eof()) fail("expected ']'");
                if (at_punct(",")) {
                    eat();
                    pat->elements.push_back(nullptr);
                    continue;
                }
                pat->elements.push_back(parse_binding_element());
                if (!eat_punct(",") && !at_punct("]")) fail("expected ',' or ']'");
            }
            return finish(std::move(pat), start);
        }
        if (at_punct("{")) {
            eat();
            auto pat = std::make_unique<ObjectPattern>();
            while (!eat_punct("}")) {
                if (at_eof()) fail("expected '}'");
                Span p_start = start_span();
                if (eat_punct("...")) {
                    auto rest = std::make_unique<RestElement>();
                    rest->argument = parse_binding_pattern();
                    pat->props.push_back(finish(std::move(rest), p_start));
                } else {
                    auto prop = std::make_unique<Property>();
                    if (eat_punct("[")) {
                        prop->computed = true;
                        prop->key = parse_assignment(false);
                        expect_punct("]");
                        expect_punct(":");
                        prop->value = parse_binding_element_value();
                    } else if (cur().type == TokenType::String || cur().type == TokenType::Number) {
                        prop->key = parse_literal_key();
                        expect_punct(":");
                        prop->value = parse_binding_element_value();
                    } else {
                        if (!at_property_name()) fail("expected property name");
                        Span k_start = start_span();
                        std::string name = eat().text;
                        prop->key = finish(std::make_unique<Ident>(name), k_start);
                        if (eat_punct(":")) {
                            prop->value = parse_binding_element_value();
                        } else {
                            prop->shorthand = true;
                            auto local = std::make_unique<Ident>(name);
                            local->span = prop->key->span;
                            if (eat_punct("=")) {
                                auto def = std::make_unique<AssignmentPattern>();
                                def->left = std::move(local);
                                def->right = parse_assignment(false);
                                prop->value = finish(std::move(def), k_start);
                            } else {
                                prop->value = std::move(local);
                            }
                        }
                    }
                    pat->props.push_back(finish(std::move(prop), p_start));
                }
                if (!eat_punct(",") && !at_punct("}")) fail("expected ',' or '}'");
            }
            return finish(std::move(pat), start);
        }
        auto ident = std::make_unique<Ident>(eat_identifier());
        return finish(std::move(ident), start);
    }

    NodePtr parse_binding_element_value() {
        Span start = start_span();
        NodePtr pat = parse_binding_pattern();
        if (eat_punct("=")) {
            auto def = std::make_unique<AssignmentPattern>();
            def->left = std::move(pat);
            def->right = parse_assignment(false);
            return finish(std::move(def), start);
        }
        return pat;
    }

    NodePtr parse_literal_key() {
        Span start = start_span();
        if (cur().type == TokenType::String) {
            auto lit = std::make_unique<StringLit>();
            lit->value = eat().value;
            return finish(std::move(lit), start);
        }
        auto lit = std::make_unique<NumberLit>();
        lit->value = eat().number;
        return finish(std::move(lit), start);
    }

    NodePtr parse_class(bool declaration, bool name_optional = false) {
        Span start = start_span();
        eat();  // class
        auto cls = std::make_unique<ClassNode>();
        cls->is_declaration = declaration;
        if (at_identifier() && !at_keyword("extends")) {
            cls->name = eat_identifier();
        } else if (declaration && !name_optional) {
            fail("class declarations need a name");
        }
        if (eat_keyword("extends")) cls->super_class = parse_unary_chain_for_extends();
        expect_punct("{");
        while (!eat_punct("}")) {
            if (at_eof()) fail("expected '}'");
            if (eat_punct(";")) continue;
            cls->members.push_back(parse_class_member());
        }
        return finish(std::move(cls), start);
    }

    NodePtr parse_unary_chain_for_extends() {
        // `extends` takes a LeftHandSideExpression.
        return parse_member_or_call(/*allow_call=*/true);
    }

    NodePtr parse_class_member() {
        Span start = start_span();
        auto member = std::make_unique<ClassMember>();
        if (at_keyword("static") && !cur(1).is_punct("(") && !cur(1).is_punct("=") &&
            !cur(1).is_punct(";") && !cur(1).is_punct("}")) {
            eat();
            member->is_static = true;
        }
        bool is_async = false;
        if (at_keyword("async") && !cur(1).is_punct("(") && !cur(1).is_punct("=") &&
            !cur(1).newline_before && !cur(1).is_punct(";") && !cur(1).is_punct("}")) {
            eat();
            is_async = true;
        }
        if (at_punct("*")) fail("generators are not supported");
        if ((at_keyword("get") || at_keyword("set")) && !cur(1).is_punct("(") &&
            !cur(1).is_punct("=") && !cur(1).is_punct(";") && !cur(1).is_punct("}")) {
            member->member_kind =
                eat().text == "get" ? ClassMember::Kind::Getter : ClassMember::Kind::Setter;
        }
        if (cur().type == TokenType::PrivateName) fail("private class members are not supported");

        if (eat_punct("[")) {
            member->computed = true;
            member->key = parse_assignment(false);
            expect_punct("]");
        } else if (cur().type == TokenType::String || cur().type == TokenType::Number) {
            member->key = parse_literal_key();
        } else {
            if (!at_property_name()) fail("expected class member name");
            Span k_start = start_span();
            member->key = finish(std::make_unique<Ident>(eat().text), k_start);
        }

        if (at_punct("(")) {
            if (member->member_kind == ClassMember::Kind::Method) {
                bool is_ctor = !member->is_static && !member->computed &&
                               member->key->kind == NodeKind::Ident &&
                               as<Ident>(member->key.get())->name == "constructor";
                if (is_ctor) member->member_kind = ClassMember::Kind::Constructor;
            }
            auto fn = std::make_unique<FunctionNode>();
            fn->is_async = is_async;
            fn->is_method = true;
            Span f_start = start_span();
            fn->params = parse_params();
            fn->body = parse_block();
            member->value = finish(std::move(fn), f_start);
        } else {
            if (member->member_kind != ClassMember::Kind::Method || is_async) {
                fail("expected '(' after accessor name");
            }
            member->member_kind = ClassMember::Kind::Field;
            if (eat_punct("=")) member->value = parse_assignment(false);
            expect_semi();
        }
        return finish(std::move(member), start);
    }

    // ---- expressions ----

    NodePtr parse_expression(bool no_in) {
        Span start = start_span();
        NodePtr first = parse_assignment(no_in);
        if (!at_punct(",")) return first;
        auto seq = std::make_unique<SequenceExpr>();
        seq->exprs.push_back(std::move(first));
        while (eat_punct(",")) seq->exprs.push_back(parse_assignment(no_in));
        return finish(std::move(seq), start);
    }

    NodePtr parse_assignment(bool no_in) {
        DepthGuard guard(*this);
        if (NodePtr arrow = try_parse_arrow(no_in)) return arrow;
        if (at_keyword("yield")) fail("generators are not supported");

        Span start = start_span();
        NodePtr lhs = parse_conditional(no_in);

        static const char* assign_ops[] = {"=",  "+=",  "-=",  "*=",  "/=",  "%=",
                                           "**=", "<<=", ">>=", ">>>=", "&=",  "|=",
                                           "^=",  "&&=", "||=", "??="};
        for (const char* op : assign_ops) {
            if (at_punct(op)) {
                eat();
                auto assign = std::make_unique<AssignExpr>();
                assign->op = op;
                if (assign->op == "=" && (lhs->kind == NodeKind::ArrayLit ||
                                          lhs->kind == NodeKind::ObjectLit)) {
                    assign->target = to_pattern(std::move(lhs));
                } else {
                    check_assign_target(lhs.get());
                    assign->target = std::move(lhs);
                }
                assign->value = parse_assignment(no_in);
                return finish(std::move(assign), start);
            }
        }
        return lhs;
    }

    void check_assign_target(const Node* n) const {
        if (n->kind == NodeKind::Ident || n->kind == NodeKind::MemberExpr ||
            n->kind == NodeKind::ArrayPattern || n->kind == NodeKind::ObjectPattern) {
            return;
        }
        fail("invalid assignment target");
    }

    // Converts an expression already parsed as array/object literal into a
    // destructuring pattern.
    NodePtr to_pattern(NodePtr expr) {
        switch (expr->kind) {
            case NodeKind::Ident:
            case NodeKind::MemberExpr:
            case NodeKind::ArrayPattern:
            case NodeKind::ObjectPattern:
            case NodeKind::AssignmentPattern:
            case NodeKind::RestElement:
                return expr;
            case NodeKind::ArrayLit: {
                auto* arr = as<ArrayLit>(expr.get());
                auto pat = std::make_unique<ArrayPattern>();
                pat->span = expr->span;
                for (auto& el : arr->elements) {
                    pat->elements.push_back(el ? to_pattern(std::move(el)) : nullptr);
                }
                return pat;
            }
            case NodeKind::ObjectLit: {
                auto* obj = as<ObjectLit>(expr.get());
                auto pat = std::make_unique<ObjectPattern>();
                pat->span = expr->span;
                for (auto& p : obj->props) {
                    if (p->kind == NodeKind::SpreadElement) {
                        auto rest = std::make_unique<RestElement>();
                        rest->span = p->span;
                        rest->argument = to_pattern(std::move(as<SpreadElement>(p.get())->argument));
                        pat->props.push_back(std::move(rest));
                    } else {
                        auto* prop = as<Property>(p.get());
                        if (prop->prop_kind != Property::Kind::Init || prop->method) {
                            fail("invalid destructuring target");
                        }
                        prop->value = to_pattern(std::move(prop->value));
                        pat->props.push_back(std::move(p));
                    }
                }
                return pat;
            }
            case NodeKind::SpreadElement: {
                auto rest = std::make_unique<RestElement>();
                rest->span = expr->span;
                rest->argument = to_pattern(std::move(as<SpreadElement>(expr.get())->argument));
                return rest;
            }
            case NodeKind::AssignExpr: {
                auto* assign = as<AssignExpr>(expr.get());
                if (assign->op != "=") fail("invalid destructuring target");
                auto def = std::make_unique<AssignmentPattern>();
                def->span = expr->span;
                def->left = to_pattern(std::move(assign->target));
                def->right = std::move(assign->value);
                return def;
            }
            default:
                fail("invalid destructuring target");
        }
    }

    // Looks ahead for `ident =>`, `(params) =>`, `async ident =>`,
    // `async (params) =>`; returns null when this is not an arrow function.
    NodePtr try_parse_arrow(bool no_in) {
        bool is_async = false;
        size_t head = idx_;
        if (at_keyword("async") && !cur(1).newline_before &&
            (cur(1).type == TokenType::Identifier ||
             (cur(1).type == TokenType::Keyword && contextual(cur(1).text) &&
              !cur(1).is_keyword("async")) ||
             cur(1).is_punct("("))) {
            is_async = true;
            head = idx_ + 1;
        }
        const Token& h = tokens_[head];
        size_t arrow_at;
        if (h.type == TokenType::Identifier || (h.type == TokenType::Keyword && contextual(h.text))) {
            arrow_at = head + 1;
        } else if (h.is_punct("(")) {
            size_t i = head + 1;
            int depth = 1;
            while (depth > 0) {
                const Token& t = tokens_[i];
                if (t.type == TokenType::EndOfFile) return nullptr;
                if (t.is_punct("(") || t.is_punct("[") || t.is_punct("{")) depth++;
                if (t.is_punct(")") || t.is_punct("]") || t.is_punct("}")) depth--;
                i++;
            }
            arrow_at = i;
        } else {
            return nullptr;
        }
        if (!tokens_[arrow_at < tokens_.size() ? arrow_at : tokens_.size() - 1].is_punct("=>")) {
            return nullptr;
        }
        if (tokens_[arrow_at].newline_before) return nullptr;  // no newline before =>

        Span start = start_span();
        if (is_async) eat();
        auto fn = std::make_unique<FunctionNode>();
        fn->is_arrow = true;
        fn->is_async = is_async;
        if (at_punct("(")) {
            fn->params = parse_params();
        } else {
            Span p_start = start_span();
            fn->params.push_back(finish(std::make_unique<Ident>(eat_identifier()), p_start));
        }
        expect_punct("=>");
        if (at_punct("{")) {
            fn->body = parse_block();
        } else {
            fn->is_expression_body = true;
            fn->body = parse_assignment(no_in);
        }
        return finish(std::move(fn), start);
    }

    NodePtr parse_conditional(bool no_in) {
        Span start = start_span();
        NodePtr test = parse_binary(1, no_in);
        if (!at_punct("?") || at_punct("?.")) return test;
        eat();
        auto cond = std::make_unique<ConditionalExpr>();
        cond->test = std::move(test);
        cond->consequent = parse_assignment(/*no_in=*/false);
        expect_punct(":");
        cond->alternate = parse_assignment(no_in);
        return finish(std::move(cond), start);
    }

    struct OpInfo {
        int prec;
        bool right_assoc;
    };

    OpInfo binary_op(const Token& t, bool no_in) const {
        if (t.type == TokenType::Keyword) {
            if (t.text == "instanceof") return {7, false};
            if (t.text == "in" && !no_in) return {7, false};
            return {0, false};
        }
        if (t.type != TokenType::Punct) return {0, false};
        const std::string& p = t.text;
        if (p == "??" || p == "||") return {1, false};
        if (p == "&&") return {2, false};
        if (p == "|") return {3, false};
        if (p == "^") return {4, false};
        if (p == "&") return {5, false};
        if (p == "==" || p == "!=" || p == "===" || p == "!==") return {6, false};
        if (p == "<" || p == ">" || p == "<=" || p == ">=") return {7, false};
        if (p == "<<" || p == ">>" || p == ">>>") return {8, false};
        if (p == "+" || p == "-") return {9, false};
        if (p == "*" || p == "/" || p == "%") return {10, false};
        if (p == "**") return {11, true};
        return {0, false};
    }

    NodePtr parse_binary(int min_prec, bool no_in) {
        Span start = start_span();
        NodePtr lhs = parse_unary(no_in);
        for (;;) {
            OpInfo info = binary_op(cur(), no_in);
            if (info.prec < min_prec || info.prec == 0) return lhs;
            std::string op = eat().text;
            NodePtr rhs = parse_binary(info.right_assoc ? info.prec : info.prec + 1, no_in);
            if (op == "&&" || op == "||" || op == "??") {
                auto node = std::make_unique<LogicalExpr>();
                node->op = op;
                node->lhs = std::move(lhs);
                node->rhs = std::move(rhs);
                lhs = finish(std::move(node), start);
            } else {
                auto node = std::make_unique<BinaryExpr>();
                node->op = op;
                node->lhs = std::move(lhs);
                node->rhs = std::move(rhs);
                lhs = finish(std::move(node), start);
            }
        }
    }

    NodePtr parse_unary(bool no_in) {
        DepthGuard guard(*this);
        Span start = start_span();
        const Token& t = cur();
        if (t.is_punct("!") || t.is_punct("~") || t.is_punct("+") || t.is_punct("-") ||
            t.is_keyword("typeof") || t.is_keyword("void") || t.is_keyword("delete")) {
            auto node = std::make_unique<UnaryExpr>();
            node->op = eat().text;
            node->operand = parse_unary(no_in);
            return finish(std::move(node), start);
        }
        if (t.is_keyword("await")) {
            eat();
            auto node = std::make_unique<AwaitExpr>();
            node->argument = parse_unary(no_in);
            return finish(std::move(node), start);
        }
        if (t.is_punct("++") || t.is_punct("--")) {
            auto node = std::make_unique<UpdateExpr>();
            node->op = eat().text;
            node->prefix = true;
            node->operand = parse_unary(no_in);
            check_update_target(node->operand.get());
            return finish(std::move(node), start);
        }
        return parse_postfix(no_in);
    }

    void check_update_target(const Node* n) const {
        if (n->kind != NodeKind::Ident && n->kind != NodeKind::MemberExpr) {
            fail("invalid increment/decrement target");
        }
    }

    NodePtr parse_postfix(bool no_in) {
        (void)no_in;
        Span start = start_span();
        NodePtr expr = parse_member_or_call(/*allow_call=*/true);
        if ((at_punct("++") || at_punct("--")) && !cur().newline_before) {
            check_update_target(expr.get());
            auto node = std::make_unique<UpdateExpr>();
            node->op = eat().text;
            node->prefix = false;
            node->operand = std::move(expr);
            return finish(std::move(node), start);
        }
        return expr;
    }

    NodePtr parse_member_or_call(bool allow_call) {
        Span start = start_span();
        bool has_optional = false;
        NodePtr expr;

        if (at_keyword("new")) {
            expr = parse_new(start);
        } else {
            expr = parse_primary();
        }

        for (;;) {
            if (at_punct(".")) {
                eat();
                if (!at_property_name()) fail("expected property name after '.'");
                auto member = std::make_unique<MemberExpr>();
                member->object = std::move(expr);
                Span p_start = start_span();
                member->property = finish(std::make_unique<Ident>(eat().text), p_start);
                expr = finish(std::move(member), start);
            } else if (at_punct("?.")) {
                eat();
                has_optional = true;
                if (at_punct("(")) {
                    auto call = std::make_unique<CallExpr>();
                    call->callee = std::move(expr);
                    call->optional = true;
                    call->args = parse_arguments();
                    expr = finish(std::move(call), start);
                } else if (at_punct("[")) {
                    eat();
                    auto member = std::make_unique<MemberExpr>();
                    member->object = std::move(expr);
                    member->computed = true;
                    member->optional = true;
                    member->property = parse_expression(false);
                    expect_punct("]");
                    expr = finish(std::move(member), start);
                } else {
                    if (!at_property_name()) fail("expected property name after '?.'");
                    auto member = std::make_unique<MemberExpr>();
                    member->object = std::move(expr);
                    member->optional = true;
                    Span p_start = start_span();
                    member->property = finish(std::make_unique<Ident>(eat().text), p_start);
                    expr = finish(std::move(member), start);
                }
            } else if (at_punct("[")) {
                eat();
                auto member = std::make_unique<MemberExpr>();
                member->object = std::move(expr);
                member->computed = true;
                member->property = parse_expression(false);
                expect_punct("]");
                expr = finish(std::move(member), start);
            } else if (allow_call && at_punct("(")) {
                auto call = std::make_unique<CallExpr>();
                call->callee = std::move(expr);
                call->args = parse_arguments();
                expr = finish(std::move(call), start);
            } else if (cur().type == TokenType::TemplateFull ||
                       cur().type == TokenType::TemplateHead) {
                auto tagged = std::make_unique<TaggedTemplate>();
                tagged->tag = std::move(expr);
                tagged->quasi = parse_template();
                expr = finish(std::move(tagged), start);
            } else {
                break;
            }
        }
        if (has_optional) {
            auto chain = std::make_unique<ChainExpr>();
            chain->span = expr->span;
            chain->expr = std::move(expr);
            return chain;
        }
        return expr;
    }

    NodePtr parse_new(const Span& start) {
        eat();  // new
        if (at_punct(".")) {
            eat();
            if (!at_identifier() || cur().text != "target") fail("expected 'target' after 'new.'");
            eat();
            return finish(std::make_unique<NewTargetExpr>(), start);
        }
        auto node = std::make_unique<NewExpr>();
        Span callee_start = start_span();
        if (at_keyword("new")) {
            node->callee = parse_new(callee_start);
        } else {
            node->callee = parse_primary();
        }
        // Member-only chain binds tighter than the `new` arguments.
        for (;;) {
            if (at_punct(".")) {
                eat();
                if (!at_property_name()) fail("expected property name after '.'");
                auto member = std::make_unique<MemberExpr>();
                member->object = std::move(node->callee);
                Span p_start = start_span();
                member->property = finish(std::make_unique<Ident>(eat().text), p_start);
                node->callee = finish(std::move(member), callee_start);
            } else if (at_punct("[")) {
                eat();
                auto member = std::make_unique<MemberExpr>();
                member->object = std::move(node->callee);
                member->computed = true;
                member->property = parse_expression(false);
                expect_punct("]");
                node->callee = finish(std::move(member), callee_start);
            } else {
                break;
            }
        }
        if (at_punct("(")) node->args = parse_arguments();
        return finish(std::move(node), start);
    }

    std::vector<NodePtr> parse_arguments() {
        expect_punct("(");
        std::vector<NodePtr> args;
        while (!eat_punct(")")) {
            if (at_eof()) fail("expected ')'");
            if (at_punct("...")) {
                Span s_start = start_span();
                eat();
                auto spread = std::make_unique<SpreadElement>();
                spread->argument = parse_assignment(false);
                args.push_back(finish(std::move(spread), s_start));
            } else {
                args.push_back(parse_assignment(false));
            }
            if (!eat_punct(",") && !at_punct(")")) fail("expected ',' or ')'");
        }
        return args;
    }

    NodePtr parse_primary() {
        DepthGuard guard(*this);
        Span start = start_span();
        const Token& t = cur();

        switch (t.type) {
            case TokenType::Number: {
                auto lit = std::make_unique<NumberLit>();
                lit->value = eat().number;
                return finish(std::move(lit), start);
            }
            case TokenType::String: {
                auto lit = std::make_unique<StringLit>();
                lit->value = eat().value;
                return finish(std::move(lit), start);
            }
            case TokenType::Regex: {
                auto lit = std::make_unique<RegexLit>();
                lit->pattern = t.value;
                lit->flags = t.extra;
                eat();
                return finish(std::move(lit), start);
            }
            case TokenType::TemplateFull:
            case TokenType::TemplateHead:
                return parse_template();
            case TokenType::Identifier:
                return finish(std::make_unique<Ident>(eat().text), start);
            case TokenType::PrivateName:
                fail("private names are not supported here");
            default:
                break;
        }

        if (t.type == TokenType::Keyword) {
            const std::string& k = t.text;
            if (k == "this") {
                eat();
                return finish(std::make_unique<ThisExpr>(), start);
            }
            if (k == "super") {
                eat();
                return finish(std::make_unique<SuperExpr>(), start);
            }
            if (k == "null") {
                eat();
                return finish(std::make_unique<NullLit>(), start);
            }
            if (k == "true" || k == "false") {
                auto lit = std::make_unique<BoolLit>();
                lit->value = k == "true";
                eat();
                return finish(std::move(lit), start);
            }
            if (k == "function") return parse_function(false, false);
            if (k == "async" && cur(1).is_keyword("function") && !cur(1).newline_before) {
                eat();
                return parse_function(false, true);
            }
            if (k == "class") return parse_class(false);
            if (k == "import") {
                eat();
                if (at_punct(".")) {
                    eat();
                    if (!at_identifier() || cur().text != "meta") fail("expected 'meta'");
                    eat();
                    return finish(std::make_unique<ImportMetaExpr>(), start);
                }
                if (!at_punct("(")) fail("expected '(' after 'import'");
                return finish(std::make_unique<ImportCallee>(), start);
            }
            if (contextual(k)) {
                return finish(std::make_unique<Ident>(eat().text), start);
            }
            fail("unexpected keyword");
        }

        if (t.is_punct("(")) {
            eat();
            NodePtr expr = parse_expression(false);
            expect_punct(")");
            return expr;
        }
        if (t.is_punct("[")) return parse_array_literal();
        if (t.is_punct("{")) return parse_object_literal();
        fail("unexpected token");
    }

    NodePtr parse_template() {
        Span start = start_span();
        auto tpl = std::make_unique<TemplateLit>();
        const Token& first = cur();
        tpl->cooked.push_back(first.value);
        tpl->raw.push_back(raw_chunk(first));
        if (first.type == TokenType::TemplateFull) {
            eat();
            return finish(std::move(tpl), start);
        }
        eat();  // head
        for (;;) {
            tpl->exprs.push_back(parse_expression(false));
            const Token& part = cur();
            if (part.type == TokenType::TemplateTail) {
                tpl->cooked.push_back(part.value);
                tpl->raw.push_back(raw_chunk(part));
                eat();
                return finish(std::move(tpl), start);
            }
            if (part.type == TokenType::TemplateMiddle) {
                tpl->cooked.push_back(part.value);
                tpl->raw.push_back(raw_chunk(part));
                eat();
                continue;
            }
            fail("unterminated template literal");
        }
    }

    std::string raw_chunk(const Token& t) const {
        uint32_t from = t.span.start + 1;  // skip '`' or '}'
        uint32_t to = t.span.end;
        if (t.type == TokenType::TemplateFull || t.type == TokenType::TemplateTail) {
            to -= 1;  // trailing '`'
        } else {
            to -= 2;  // trailing '${'
        }
        if (to < from) return "";
        return src_.substr(from, to - from);
    }

    NodePtr parse_array_literal() {
        Span start = start_span();
        eat();  // [
        auto arr = std::make_unique<ArrayLit>();
        while (!eat_punct("]")) {
            if (at_eof()) fail("expected ']'");
            if (at_punct(",")) {
                eat();
                arr->elements.push_back(nullptr);
                continue;
            }
            if (at_punct("...")) {
                Span s_start = start_span();
                eat();
                auto spread = std::make_unique<SpreadElement>();
                spread->argument = parse_assignment(false);
                arr->elements.push_back(finish(std::move(spread), s_start));
            } else {
                arr->elements.push_back(parse_assignment(false));
            }
            if (!eat_punct(",") && !at_punct("]")) fail("expected ',' or ']'");
        }
        return finish(std::move(arr), start);
    }

    NodePtr parse_object_literal() {
        Span start = start_span();
        eat();  // {
        auto obj = std::make_unique<ObjectLit>();
        while (!eat_punct("}")) {
            if (at_eof()) fail("expected '}'");
            obj->props.push_back(parse_object_property());
            if (!eat_punct(",") && !at_punct("}")) fail("expected ',' or '}'");
        }
        return finish(std::move(obj), start);
    }

    NodePtr parse_object_property() {
        Span start = start_span();
        if (at_punct("...")) {
            eat();
            auto spread = std::make_unique<SpreadElement>();
            spread->argument = parse_assignment(false);
            return finish(std::move(spread), start);
        }

        auto prop = std::make_unique<Property>();
        bool is_async = false;
        if (at_keyword("async") && !cur(1).is_punct(":") && !cur(1).is_punct("(") &&
            !cur(1).is_punct(",") && !cur(1).is_punct("}") && !cur(1).is_punct("=") &&
            !cur(1).newline_before) {
            eat();
            is_async = true;
        }
        if (at_punct("*")) fail("generators are not supported");
        if ((at_keyword("get") || at_keyword("set")) && !cur(1).is_punct(":") &&
            !cur(1).is_punct("(") && !cur(1).is_punct(",") && !cur(1).is_punct("}") &&
            !cur(1).is_punct("=") && !is_async) {
            prop->prop_kind =
                eat().text == "get" ? Property::Kind::Get : Property::Kind::Set;
        }

        if (eat_punct("[")) {
            prop->computed = true;
            prop->key = parse_assignment(false);
            expect_punct("]");
        } else if (cur().type == TokenType::String || cur().type == TokenType::Number) {
            prop->key = parse_literal_key();
        } else {
            if (!at_property_name()) fail("expected property name");
            Span k_start = start_span();
            prop->key = finish(std::make_unique<Ident>(eat().text), k_start);
        }

        if (at_punct("(")) {
            auto fn = std::make_unique<FunctionNode>();
            fn->is_async = is_async;
            fn->is_method = true;
            Span f_start = start_span();
            fn->params = parse_params();
            fn->body = parse_block();
            prop->value = finish(std::move(fn), f_start);
            if (prop->prop_kind == Property::Kind::Init) prop->method = true;
            return finish(std::move(prop), start);
        }
        if (prop->prop_kind != Property::Kind::Init || is_async) {
            fail("expected '(' after accessor name");
        }

        if (eat_punct(":")) {
            prop->value = parse_assignment(false);
        } else if (prop->key->kind == NodeKind::Ident) {
            prop->shorthand = true;
            auto local = std::make_unique<Ident>(as<Ident>(prop->key.get())->name);
            local->span = prop->key->span;
            if (eat_punct("=")) {
                // Only valid when the literal is reinterpreted as a pattern.
                auto def = std::make_unique<AssignExpr>();
                def->op = "=";
                def->target = std::move(local);
                def->value = parse_assignment(false);
                def->span = prop->key->span;
                prop->value = std::move(def);
            } else {
                prop->value = std::move(local);
            }
        } else {
            fail("expected ':' after property name");
        }
        return finish(std::move(prop), start);
    }

    const std::string& src_;
    std::string specifier_;
    SourceType source_type_;
    std::vector<Token> tokens_;
    size_t idx_ = 0;
    int depth_ = 0;
};

/// Parses a source into an owning ParsedSource handle.
inline ParsedSourcePtr parse_source(const SourceText& text) {
    auto parsed = std::make_shared<ParsedSource>();
    parsed->text = text;
    parsed->program = Parser(text).parse_program();
    return parsed;
}

inline ParsedSourcePtr parse_source(std::string source, std::string specifier,
                                    SourceType type = SourceType::script) {
    return parse_source(SourceText(std::move(specifier), std::move(source), type));
}

}  // namespace mirage

#endif
