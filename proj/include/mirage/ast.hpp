#ifndef MIRAGE_AST_HPP
#define MIRAGE_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mirage/source.hpp"

namespace mirage {

enum class NodeKind {
    // Literals and primary expressions
    NumberLit, StringLit, BoolLit, NullLit, RegexLit, Ident, TemplateLit,
    TaggedTemplate, ThisExpr, SuperExpr, NewTargetExpr, ImportMetaExpr,
    ImportCallee,
    // Composite expressions
    ArrayLit, ObjectLit, Property, SpreadElement, FunctionNode, ClassNode,
    ClassMember, UnaryExpr, UpdateExpr, BinaryExpr, LogicalExpr,
    ConditionalExpr, AssignExpr, SequenceExpr, CallExpr, NewExpr, MemberExpr,
    ChainExpr, AwaitExpr,
    // Binding patterns
    ArrayPattern, ObjectPattern, AssignmentPattern, RestElement,
    // Statements
    Program, ExprStmt, VarDecl, VarDeclarator, BlockStmt, EmptyStmt, IfStmt,
    ForStmt, ForInStmt, ForOfStmt, WhileStmt, DoWhileStmt, BreakStmt,
    ContinueStmt, ReturnStmt, ThrowStmt, TryStmt, SwitchStmt, SwitchCase,
    DebuggerStmt, ImportDecl, ExportNamedDecl, ExportDefaultDecl,
    ExportAllDecl,
};

struct Node {
    NodeKind kind;
    Span span;
    virtual ~Node() = default;

protected:
    explicit Node(NodeKind k) : kind(k) {}
};

using NodePtr = std::unique_ptr<Node>;

template <typename T>
T* as(Node* n) {
    return static_cast<T*>(n);
}
template <typename T>
const T* as(const Node* n) {
    return static_cast<const T*>(n);
}

// ---- literals / primary ----

struct NumberLit : Node {
    double value = 0;
    NumberLit() : Node(NodeKind::NumberLit) {}
};

struct StringLit : Node {
    std::string value;
    StringLit() : Node(NodeKind::StringLit) {}
};

struct BoolLit : Node {
    bool value = false;
    BoolLit() : Node(NodeKind::BoolLit) {}
};

struct NullLit : Node {
    NullLit() : Node(NodeKind::NullLit) {}
};

struct RegexLit : Node {
    std::string pattern;
    std::string flags;
    RegexLit() : Node(NodeKind::RegexLit) {}
};

struct Ident : Node {
    std::string name;
    Ident() : Node(NodeKind::Ident) {}
    explicit Ident(std::string n) : Node(NodeKind::Ident), name(std::move(n)) {}
};

/// cooked[i] precedes exprs[i]; cooked has exprs.size()+1 entries.
struct TemplateLit : Node {
    std::vector<std::string> cooked;
    std::vector<std::string> raw;
    std::vector<NodePtr> exprs;
    TemplateLit() : Node(NodeKind::TemplateLit) {}
};

struct TaggedTemplate : Node {
    NodePtr tag;
    NodePtr quasi;  // TemplateLit
    TaggedTemplate() : Node(NodeKind::TaggedTemplate) {}
};

struct ThisExpr : Node {
    ThisExpr() : Node(NodeKind::ThisExpr) {}
};

struct SuperExpr : Node {
    SuperExpr() : Node(NodeKind::SuperExpr) {}
};

struct NewTargetExpr : Node {
    NewTargetExpr() : Node(NodeKind::NewTargetExpr) {}
};

struct ImportMetaExpr : Node {
    ImportMetaExpr() : Node(NodeKind::ImportMetaExpr) {}
};

/// Callee position of a dynamic `import(...)` call.
struct ImportCallee : Node {
    ImportCallee() : Node(NodeKind::ImportCallee) {}
};

// ---- composite expressions ----

struct ArrayLit : Node {
    std::vector<NodePtr> elements;  // null entries are elisions
    ArrayLit() : Node(NodeKind::ArrayLit) {}
};

struct ObjectLit : Node {
    std::vector<NodePtr> props;  // Property or SpreadElement
    ObjectLit() : Node(NodeKind::ObjectLit) {}
};

struct Property : Node {
    enum class Kind { Init, Get, Set };
    NodePtr key;    // Ident / StringLit / NumberLit, or any expr when computed
    NodePtr value;  // expression, or pattern inside ObjectPattern
    Kind prop_kind = Kind::Init;
    bool computed = false;
    bool shorthand = false;
    bool method = false;
    Property() : Node(NodeKind::Property) {}
};

struct SpreadElement : Node {
    NodePtr argument;
    SpreadElement() : Node(NodeKind::SpreadElement) {}
};

struct FunctionNode : Node {
    std::string name;  // empty for anonymous
    std::vector<NodePtr> params;
    NodePtr body;  // BlockStmt, or an expression when is_expression_body
    bool is_arrow = false;
    bool is_async = false;
    bool is_expression_body = false;
    bool is_method = false;
    bool is_declaration = false;
    FunctionNode() : Node(NodeKind::FunctionNode) {}
};

struct ClassMember : Node {
    enum class Kind { Method, Getter, Setter, Constructor, Field };
    NodePtr key;
    NodePtr value;  // FunctionNode, or field initializer expr (may be null)
    Kind member_kind = Kind::Method;
    bool is_static = false;
    bool computed = false;
    ClassMember() : Node(NodeKind::ClassMember) {}
};

struct ClassNode : Node {
    std::string name;
    NodePtr super_class;
    std::vector<NodePtr> members;  // ClassMember
    bool is_declaration = false;
    ClassNode() : Node(NodeKind::ClassNode) {}
};

struct UnaryExpr : Node {
    std::string op;  // typeof void delete ! ~ + -
    NodePtr operand;
    UnaryExpr() : Node(NodeKind::UnaryExpr) {}
};

struct UpdateExpr : Node {
    std::string op;  // ++ --
    bool prefix = false;
    NodePtr operand;
    UpdateExpr() : Node(NodeKind::UpdateExpr) {}
};

struct BinaryExpr : Node {
    std::string op;
    NodePtr lhs;
    NodePtr rhs;
    BinaryExpr() : Node(NodeKind::BinaryExpr) {}
};

struct LogicalExpr : Node {
    std::string op;  // && || ??
    NodePtr lhs;
    NodePtr rhs;
    LogicalExpr() : Node(NodeKind::LogicalExpr) {}
};

struct ConditionalExpr : Node {
    NodePtr test;
    NodePtr consequent;
    NodePtr alternate;
    ConditionalExpr() : Node(NodeKind::ConditionalExpr) {}
};

struct AssignExpr : Node {
    std::string op;  // = += ... &&= ||= ??=
    NodePtr target;  // pattern or member expression
    NodePtr value;
    AssignExpr() : Node(NodeKind::AssignExpr) {}
};

struct SequenceExpr : Node {
    std::vector<NodePtr> exprs;
    SequenceExpr() : Node(NodeKind::SequenceExpr) {}
};

struct CallExpr : Node {
    NodePtr callee;
    std::vector<NodePtr> args;
    bool optional = false;  // ?.( )
    CallExpr() : Node(NodeKind::CallExpr) {}
};

struct NewExpr : Node {
    NodePtr callee;
    std::vector<NodePtr> args;
    NewExpr() : Node(NodeKind::NewExpr) {}
};

struct MemberExpr : Node {
    NodePtr object;
    NodePtr property;  // Ident when !computed, else expression
    bool computed = false;
    bool optional = false;  // ?.
    MemberExpr() : Node(NodeKind::MemberExpr) {}
};

/// Outermost boundary of an optional chain; a nullish short-circuit inside
/// unwinds to this node and yields undefined.
struct ChainExpr : Node {
    NodePtr expr;
    ChainExpr() : Node(NodeKind::ChainExpr) {}
};

struct AwaitExpr : Node {
    NodePtr argument;
    AwaitExpr() : Node(NodeKind::AwaitExpr) {}
};

// ---- binding patterns ----

struct ArrayPattern : Node {
    std::vector<NodePtr> elements;  // null holes; RestElement last
    ArrayPattern() : Node(NodeKind::ArrayPattern) {}
};

struct ObjectPattern : Node {
    std::vector<NodePtr> props;  // Property (value = pattern) or RestElement
    ObjectPattern() : Node(NodeKind::ObjectPattern) {}
};

struct AssignmentPattern : Node {
    NodePtr left;
    NodePtr right;  // default value
    AssignmentPattern() : Node(NodeKind::AssignmentPattern) {}
};

struct RestElement : Node {
    NodePtr argument;
    RestElement() : Node(NodeKind::RestElement) {}
};

// ---- statements ----

struct Program : Node {
    std::vector<NodePtr> body;
    SourceType source_type = SourceType::script;
    Program() : Node(NodeKind::Program) {}
};

struct ExprStmt : Node {
    NodePtr expr;
    ExprStmt() : Node(NodeKind::ExprStmt) {}
};

struct VarDeclarator : Node {
    NodePtr id;  // Ident or pattern
    NodePtr init;
    VarDeclarator() : Node(NodeKind::VarDeclarator) {}
};

struct VarDecl : Node {
    std::string decl_kind;  // var let const
    std::vector<NodePtr> declarators;
    VarDecl() : Node(NodeKind::VarDecl) {}
};

struct BlockStmt : Node {
    std::vector<NodePtr> body;
    BlockStmt() : Node(NodeKind::BlockStmt) {}
};

struct EmptyStmt : Node {
    EmptyStmt() : Node(NodeKind::EmptyStmt) {}
};

struct IfStmt : Node {
    NodePtr test;
    NodePtr consequent;
    NodePtr alternate;
    IfStmt() : Node(NodeKind::IfStmt) {}
};

struct ForStmt : Node {
    NodePtr init;  // VarDecl or expression or null
    NodePtr test;
    NodePtr update;
    NodePtr body;
    ForStmt() : Node(NodeKind::ForStmt) {}
};

struct ForInStmt : Node {
    NodePtr left;  // VarDecl (one declarator, no init) or pattern/member
    NodePtr right;
    NodePtr body;
    ForInStmt() : Node(NodeKind::ForInStmt) {}
};

struct ForOfStmt : Node {
    NodePtr left;
    NodePtr right;
    NodePtr body;
    ForOfStmt() : Node(NodeKind::ForOfStmt) {}
};

struct WhileStmt : Node {
    NodePtr test;
    NodePtr body;
    WhileStmt() : Node(NodeKind::WhileStmt) {}
};

struct DoWhileStmt : Node {
    NodePtr body;
    NodePtr test;
    DoWhileStmt() : Node(NodeKind::DoWhileStmt) {}
};

struct BreakStmt : Node {
    BreakStmt() : Node(NodeKind::BreakStmt) {}
};

struct ContinueStmt : Node {
    ContinueStmt() : Node(NodeKind::ContinueStmt) {}
};

struct ReturnStmt : Node {
    NodePtr argument;
    ReturnStmt() : Node(NodeKind::ReturnStmt) {}
};

struct ThrowStmt : Node {
    NodePtr argument;
    ThrowStmt() : Node(NodeKind::ThrowStmt) {}
};

struct TryStmt : Node {
    NodePtr block;
    NodePtr param;    // catch binding pattern, may be null (optional binding)
    NodePtr handler;  // BlockStmt, may be null
    NodePtr finalizer;
    TryStmt() : Node(NodeKind::TryStmt) {}
};

struct SwitchCase : Node {
    NodePtr test;  // null for default
    std::vector<NodePtr> body;
    SwitchCase() : Node(NodeKind::SwitchCase) {}
};

struct SwitchStmt : Node {
    NodePtr discriminant;
    std::vector<NodePtr> cases;
    SwitchStmt() : Node(NodeKind::SwitchStmt) {}
};

struct DebuggerStmt : Node {
    DebuggerStmt() : Node(NodeKind::DebuggerStmt) {}
};

struct ImportSpec {
    enum class Kind { Default, Namespace, Named };
    Kind kind = Kind::Named;
    std::string imported;  // source-module name ("default" for default)
    std::string local;
};

struct ImportDecl : Node {
    std::vector<ImportSpec> specifiers;
    std::string source;
    ImportDecl() : Node(NodeKind::ImportDecl) {}
};

struct ExportSpec {
    std::string local;
    std::string exported;
};

struct ExportNamedDecl : Node {
    NodePtr declaration;  // VarDecl / FunctionNode / ClassNode, or null
    std::vector<ExportSpec> specifiers;
    std::optional<std::string> source;  // re-export
    ExportNamedDecl() : Node(NodeKind::ExportNamedDecl) {}
};

struct ExportDefaultDecl : Node {
    NodePtr declaration;
    ExportDefaultDecl() : Node(NodeKind::ExportDefaultDecl) {}
};

struct ExportAllDecl : Node {
    std::string source;
    std::optional<std::string> exported;  // export * as name from "..."
    ExportAllDecl() : Node(NodeKind::ExportAllDecl) {}
};

/// A parsed unit: the source text plus its AST. Functions keep this alive via
/// shared_ptr so source slices for toString stay valid after the parser is
/// gone.
struct ParsedSource {
    SourceText text;
    NodePtr program;
};

using ParsedSourcePtr = std::shared_ptr<const ParsedSource>;

}  // namespace mirage

#endif
