#pragma once

#include "tabled/schema.hpp"
#include "tabled/span.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tabled::lang {

struct Expr;
struct Stmt;
using ExprPtr = std::shared_ptr<Expr>;
using StmtPtr = std::shared_ptr<Stmt>;

struct NumberLit {
    double value;
};
struct BoolLit {
    bool value;
};
struct StringLit {
    std::string value;
};
struct Var {
    std::string name;
};
struct SeqLit {
    std::vector<ExprPtr> items;
};

/// One table-literal cell: either a blank marker or an expression.
/// Cell spans are kept so validation errors can point at the offending cell.
struct CellExpr {
    ExprPtr expr; // null when blank
    SourceSpan span;
    bool blank() const { return expr == nullptr; }
};

struct TableLitColumn {
    ColName name;
    std::optional<Sort> sort; // absent: inferred from the data
    bool optional = false;
    SourceSpan span;
};

struct TableLit {
    std::vector<TableLitColumn> columns;
    std::vector<std::vector<CellExpr>> rows;
    std::vector<SourceSpan> row_spans;
};

struct Param {
    std::string name;
    SourceSpan span;
};

struct FunctionDef {
    std::vector<Param> params;
    std::vector<StmtPtr> body;
};

struct Call {
    ExprPtr callee;
    std::vector<ExprPtr> args;
};

struct RowIndex {
    ExprPtr row;
    ExprPtr name;
};

enum class BinOpKind { Concat, And, Or, Eq, Lt, Le, Add, Sub, Mul, Div };
std::string to_string(BinOpKind op);

struct BinOp {
    BinOpKind op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct Not {
    ExprPtr operand;
};
struct Neg {
    ExprPtr operand;
};

struct OrderPair {
    ExprPtr get_key;
    ExprPtr compare;
};

/// Bracketed list of (getKey, compare) lambda pairs; only legal as the second
/// argument of orderBy.
struct OrderBySpec {
    std::vector<OrderPair> pairs;
};

struct Expr {
    uint32_t id = 0;
    SourceSpan span;
    std::variant<NumberLit, BoolLit, StringLit, Var, SeqLit, TableLit, FunctionDef, Call,
                 RowIndex, BinOp, Not, Neg, OrderBySpec>
        node;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

struct Bind {
    std::string name;
    SourceSpan name_span;
    ExprPtr value;
};
struct ExprStmt {
    ExprPtr expr;
};
struct If {
    ExprPtr cond;
    std::vector<StmtPtr> then_body;
    std::vector<StmtPtr> else_body;
};
struct ForIn {
    std::string var;
    SourceSpan var_span;
    ExprPtr seq;
    std::vector<StmtPtr> body;
};
struct PrintlnStmt {
    ExprPtr value;
};

struct Stmt {
    uint32_t id = 0;
    SourceSpan span;
    std::variant<Bind, ExprStmt, If, ForIn, PrintlnStmt> node;

    template <typename T>
    const T* as() const {
        return std::get_if<T>(&node);
    }
};

struct Program {
    std::vector<StmtPtr> stmts;
    int32_t file_id = -1;
    uint32_t node_count = 0;
};

} // namespace tabled::lang
