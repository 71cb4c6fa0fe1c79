#include "tabled/parser.hpp"

#include <algorithm>

namespace tabled::lang {

std::string to_string(BinOpKind op) {
    switch (op) {
        case BinOpKind::Concat: return "++";
        case BinOpKind::And: return "and";
        case BinOpKind::Or: return "or";
        case BinOpKind::Eq: return "==";
        case BinOpKind::Lt: return "<";
        case BinOpKind::Le: return "<=";
        case BinOpKind::Add: return "+";
        case BinOpKind::Sub: return "-";
        case BinOpKind::Mul: return "*";
        case BinOpKind::Div: return "/";
    }
    return "?";
}

namespace {

class Parser {
public:
    Parser(std::vector<Token> tokens, int32_t file_id)
        : toks_(std::move(tokens)), file_id_(file_id) {}

    Outcome<Program> run() {
        Program program;
        program.file_id = file_id_;
        TABLED_TRY(stmts, stmt_list({Tok::Eof}));
        program.stmts = std::move(stmts);
        if (cur().kind != Tok::Eof) return fail("a statement");
        program.node_count = next_id_;
        return program;
    }

private:
    // ── token plumbing ────────────────────────────────────────────────────
    const Token& cur() const { return toks_[pos_]; }
    const Token& next() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
    void advance() {
        if (pos_ + 1 < toks_.size()) ++pos_;
    }
    void skip_newlines() {
        while (cur().kind == Tok::Newline) advance();
    }
    bool at(Tok kind) const { return cur().kind == kind; }
    bool eat(Tok kind) {
        if (!at(kind)) return false;
        advance();
        return true;
    }

    BenchError fail(const std::string& expected) {
        BenchError e = BenchError::make(
            ErrCode::ParseError, "expected " + expected + ", found " + to_string(cur().kind));
        e.span = cur().span;
        return e;
    }

    Outcome<Token> expect(Tok kind) {
        if (!at(kind)) return fail(to_string(kind));
        Token tok = cur();
        advance();
        return tok;
    }

    Outcome<Token> expect_after_newlines(Tok kind) {
        skip_newlines();
        return expect(kind);
    }

    // ── node construction ─────────────────────────────────────────────────
    template <typename Node>
    ExprPtr expr(SourceSpan span, Node node) {
        auto e = std::make_shared<Expr>();
        e->id = next_id_++;
        e->span = span;
        e->node = std::move(node);
        return e;
    }

    template <typename Node>
    StmtPtr stmt(SourceSpan span, Node node) {
        auto s = std::make_shared<Stmt>();
        s->id = next_id_++;
        s->span = span;
        s->node = std::move(node);
        return s;
    }

    // ── statements ────────────────────────────────────────────────────────
    Outcome<std::vector<StmtPtr>> stmt_list(std::vector<Tok> stops) {
        std::vector<StmtPtr> stmts;
        while (true) {
            skip_newlines();
            if (std::find(stops.begin(), stops.end(), cur().kind) != stops.end()) return stmts;
            if (at(Tok::Eof)) return stmts;
            TABLED_TRY(s, statement());
            stmts.push_back(s);
            if (std::find(stops.begin(), stops.end(), cur().kind) != stops.end()) return stmts;
            if (!at(Tok::Newline) && !at(Tok::Eof)) return fail("end of statement");
        }
    }

    Outcome<StmtPtr> statement() {
        switch (cur().kind) {
            case Tok::KwPrintln: return println_stmt();
            case Tok::KwIf: return if_stmt();
            case Tok::KwFor: return for_stmt();
            default: break;
        }
        if (at(Tok::Ident) && next().kind == Tok::Assign) return bind_stmt();
        TABLED_TRY(value, expression());
        return stmt(value->span, ExprStmt{value});
    }

    Outcome<StmtPtr> bind_stmt() {
        Token name = cur();
        advance();
        advance(); // '='
        skip_newlines();
        TABLED_TRY(value, expression());
        return stmt(SourceSpan::merge(name.span, value->span),
                    Bind{name.text, name.span, value});
    }

    Outcome<StmtPtr> println_stmt() {
        Token kw = cur();
        advance();
        TABLED_TRY(open, expect(Tok::LParen));
        (void)open;
        TABLED_TRY(value, expression());
        TABLED_TRY(close, expect(Tok::RParen));
        return stmt(SourceSpan::merge(kw.span, close.span), PrintlnStmt{value});
    }

    Outcome<StmtPtr> if_stmt() {
        Token kw = cur();
        advance();
        TABLED_TRY(cond, expression());
        TABLED_TRY(colon, expect(Tok::Colon));
        (void)colon;
        TABLED_TRY(then_body, stmt_list({Tok::KwEnd, Tok::KwElse}));
        std::vector<StmtPtr> else_body;
        skip_newlines();
        if (eat(Tok::KwElse)) {
            TABLED_TRY(colon2, expect(Tok::Colon));
            (void)colon2;
            TABLED_TRY(body, stmt_list({Tok::KwEnd}));
            else_body = std::move(body);
            skip_newlines();
        }
        TABLED_TRY(end, expect(Tok::KwEnd));
        return stmt(SourceSpan::merge(kw.span, end.span),
                    If{cond, std::move(then_body), std::move(else_body)});
    }

    Outcome<StmtPtr> for_stmt() {
        Token kw = cur();
        advance();
        TABLED_TRY(var, expect(Tok::Ident));
        TABLED_TRY(in, expect(Tok::KwIn));
        (void)in;
        skip_newlines();
        TABLED_TRY(seq, expression());
        TABLED_TRY(colon, expect(Tok::Colon));
        (void)colon;
        TABLED_TRY(body, stmt_list({Tok::KwEnd}));
        skip_newlines();
        TABLED_TRY(end, expect(Tok::KwEnd));
        return stmt(SourceSpan::merge(kw.span, end.span),
                    ForIn{var.text, var.span, seq, std::move(body)});
    }

    // ── expressions ───────────────────────────────────────────────────────
    Outcome<ExprPtr> expression() { return or_expr(); }

    Outcome<ExprPtr> or_expr() {
        TABLED_TRY(lhs, and_expr());
        ExprPtr acc = lhs;
        while (at(Tok::KwOr)) {
            advance();
            skip_newlines();
            TABLED_TRY(rhs, and_expr());
            acc = expr(SourceSpan::merge(acc->span, rhs->span), BinOp{BinOpKind::Or, acc, rhs});
        }
        return acc;
    }

    Outcome<ExprPtr> and_expr() {
        TABLED_TRY(lhs, cmp_expr());
        ExprPtr acc = lhs;
        while (at(Tok::KwAnd)) {
            advance();
            skip_newlines();
            TABLED_TRY(rhs, cmp_expr());
            acc = expr(SourceSpan::merge(acc->span, rhs->span), BinOp{BinOpKind::And, acc, rhs});
        }
        return acc;
    }

    Outcome<ExprPtr> cmp_expr() {
        TABLED_TRY(lhs, add_expr());
        BinOpKind op;
        if (at(Tok::EqEq)) op = BinOpKind::Eq;
        else if (at(Tok::Lt)) op = BinOpKind::Lt;
        else if (at(Tok::Le)) op = BinOpKind::Le;
        else return lhs;
        advance();
        skip_newlines();
        TABLED_TRY(rhs, add_expr());
        return expr(SourceSpan::merge(lhs->span, rhs->span), BinOp{op, lhs, rhs});
    }

    Outcome<ExprPtr> add_expr() {
        TABLED_TRY(lhs, mul_expr());
        ExprPtr acc = lhs;
        while (at(Tok::Plus) || at(Tok::Minus) || at(Tok::Concat)) {
            BinOpKind op = at(Tok::Plus)     ? BinOpKind::Add
                           : at(Tok::Minus)  ? BinOpKind::Sub
                                             : BinOpKind::Concat;
            advance();
            skip_newlines();
            TABLED_TRY(rhs, mul_expr());
            acc = expr(SourceSpan::merge(acc->span, rhs->span), BinOp{op, acc, rhs});
        }
        return acc;
    }

    Outcome<ExprPtr> mul_expr() {
        TABLED_TRY(lhs, unary_expr());
        ExprPtr acc = lhs;
        while (at(Tok::Star) || at(Tok::Slash)) {
            BinOpKind op = at(Tok::Star) ? BinOpKind::Mul : BinOpKind::Div;
            advance();
            skip_newlines();
            TABLED_TRY(rhs, unary_expr());
            acc = expr(SourceSpan::merge(acc->span, rhs->span), BinOp{op, acc, rhs});
        }
        return acc;
    }

    Outcome<ExprPtr> unary_expr() {
        if (at(Tok::KwNot)) {
            Token op = cur();
            advance();
            skip_newlines();
            TABLED_TRY(operand, unary_expr());
            return expr(SourceSpan::merge(op.span, operand->span), Not{operand});
        }
        if (at(Tok::Minus)) {
            Token op = cur();
            advance();
            skip_newlines();
            TABLED_TRY(operand, unary_expr());
            return expr(SourceSpan::merge(op.span, operand->span), Neg{operand});
        }
        return postfix_expr();
    }

    Outcome<ExprPtr> postfix_expr() {
        TABLED_TRY(base, primary_expr());
        ExprPtr acc = base;
        while (true) {
            if (at(Tok::LBracket)) {
                advance();
                skip_newlines();
                TABLED_TRY(index, expression());
                TABLED_TRY(close, expect(Tok::RBracket));
                acc = expr(SourceSpan::merge(acc->span, close.span), RowIndex{acc, index});
            } else if (at(Tok::LParen)) {
                advance();
                std::vector<ExprPtr> args;
                skip_newlines();
                if (!at(Tok::RParen)) {
                    while (true) {
                        TABLED_TRY(arg, expression());
                        args.push_back(arg);
                        skip_newlines();
                        if (!eat(Tok::Comma)) break;
                        skip_newlines();
                    }
                }
                TABLED_TRY(close, expect(Tok::RParen));
                acc = expr(SourceSpan::merge(acc->span, close.span), Call{acc, std::move(args)});
            } else {
                return acc;
            }
        }
    }

    Outcome<ExprPtr> primary_expr() {
        switch (cur().kind) {
            case Tok::Number: {
                Token tok = cur();
                advance();
                return expr(tok.span, NumberLit{tok.number});
            }
            case Tok::String: {
                Token tok = cur();
                advance();
                return expr(tok.span, StringLit{tok.text});
            }
            case Tok::KwTrue: {
                Token tok = cur();
                advance();
                return expr(tok.span, BoolLit{true});
            }
            case Tok::KwFalse: {
                Token tok = cur();
                advance();
                return expr(tok.span, BoolLit{false});
            }
            case Tok::Ident: {
                Token tok = cur();
                advance();
                return expr(tok.span, Var{tok.text});
            }
            case Tok::LParen: {
                advance();
                skip_newlines();
                TABLED_TRY(inner, expression());
                TABLED_TRY(close, expect(Tok::RParen));
                (void)close;
                return inner;
            }
            case Tok::LBracket: return bracket_expr();
            case Tok::KwFunction: return function_expr();
            case Tok::KwTable: return table_literal();
            default: return fail("an expression");
        }
    }

    Outcome<ExprPtr> function_expr() {
        Token kw = cur();
        advance();
        TABLED_TRY(open, expect(Tok::LParen));
        (void)open;
        std::vector<Param> params;
        skip_newlines();
        if (!at(Tok::RParen)) {
            while (true) {
                TABLED_TRY(name, expect(Tok::Ident));
                params.push_back(Param{name.text, name.span});
                skip_newlines();
                if (!eat(Tok::Comma)) break;
                skip_newlines();
            }
        }
        TABLED_TRY(close, expect(Tok::RParen));
        (void)close;
        TABLED_TRY(colon, expect(Tok::Colon));
        (void)colon;
        TABLED_TRY(body, stmt_list({Tok::KwEnd}));
        skip_newlines();
        TABLED_TRY(end, expect(Tok::KwEnd));
        return expr(SourceSpan::merge(kw.span, end.span),
                    FunctionDef{std::move(params), std::move(body)});
    }

    /// Either a sequence literal or an orderBy spec: `[(getKey, compare), ...]`.
    Outcome<ExprPtr> bracket_expr() {
        Token open = cur();
        std::size_t mark = pos_;
        advance();
        skip_newlines();
        if (at(Tok::LParen)) {
            auto spec = order_spec_tail(open);
            if (spec.ok()) return spec;
            pos_ = mark; // not a pair list: reparse as a sequence literal
            advance();
            skip_newlines();
        }
        std::vector<ExprPtr> items;
        if (!at(Tok::RBracket)) {
            while (true) {
                TABLED_TRY(item, expression());
                items.push_back(item);
                skip_newlines();
                if (!eat(Tok::Comma)) break;
                skip_newlines();
            }
        }
        TABLED_TRY(close, expect(Tok::RBracket));
        return expr(SourceSpan::merge(open.span, close.span), SeqLit{std::move(items)});
    }

    Outcome<ExprPtr> order_spec_tail(const Token& open) {
        std::vector<OrderPair> pairs;
        while (true) {
            TABLED_TRY(lp, expect(Tok::LParen));
            (void)lp;
            skip_newlines();
            TABLED_TRY(get_key, expression());
            skip_newlines();
            TABLED_TRY(comma, expect(Tok::Comma));
            (void)comma;
            skip_newlines();
            TABLED_TRY(compare, expression());
            skip_newlines();
            TABLED_TRY(rp, expect(Tok::RParen));
            (void)rp;
            pairs.push_back(OrderPair{get_key, compare});
            skip_newlines();
            if (!eat(Tok::Comma)) break;
            skip_newlines();
        }
        TABLED_TRY(close, expect(Tok::RBracket));
        return expr(SourceSpan::merge(open.span, close.span), OrderBySpec{std::move(pairs)});
    }

    // ── table literals ────────────────────────────────────────────────────
    Outcome<ExprPtr> table_literal() {
        Token kw = cur();
        advance();
        TABLED_TRY(colon, expect(Tok::Colon));
        (void)colon;
        TABLED_TRY(nl, expect(Tok::Newline));
        (void)nl;
        skip_newlines();

        TableLit lit;
        TABLED_TRY(header, header_row());
        lit.columns = std::move(header);
        TABLED_TRY(nl2, expect(Tok::Newline));
        (void)nl2;

        while (true) {
            skip_newlines();
            if (at(Tok::KwEnd)) break;
            TABLED_TRY(row, data_row());
            SourceSpan row_span = row.empty() ? cur().span
                                              : SourceSpan::merge(row.front().span,
                                                                  row.back().span);
            lit.rows.push_back(std::move(row));
            lit.row_spans.push_back(row_span);
            if (!at(Tok::KwEnd)) {
                TABLED_TRY(nl3, expect(Tok::Newline));
                (void)nl3;
            }
        }
        TABLED_TRY(end, expect(Tok::KwEnd));
        return expr(SourceSpan::merge(kw.span, end.span), std::move(lit));
    }

    Outcome<std::vector<TableLitColumn>> header_row() {
        std::vector<TableLitColumn> columns;
        while (true) {
            TABLED_TRY(col, header_cell());
            columns.push_back(col);
            if (!eat(Tok::Pipe)) break;
        }
        return columns;
    }

    /// `name: Sort?`, `name: Sort`, or bare `name`; multi-word names are
    /// written as consecutive identifiers or one quoted string.
    Outcome<TableLitColumn> header_cell() {
        TableLitColumn col;
        if (at(Tok::String)) {
            col.name = cur().text;
            col.span = cur().span;
            advance();
        } else if (at(Tok::Ident)) {
            col.name = cur().text;
            col.span = cur().span;
            advance();
            while (at(Tok::Ident)) {
                col.name += " " + cur().text;
                col.span = SourceSpan::merge(col.span, cur().span);
                advance();
            }
        } else {
            return fail("a column name");
        }
        if (eat(Tok::Colon)) {
            TABLED_TRY(sort_tok, expect(Tok::Ident));
            if (sort_tok.text == "Number") col.sort = Sort::number();
            else if (sort_tok.text == "Boolean") col.sort = Sort::boolean();
            else if (sort_tok.text == "String") col.sort = Sort::string();
            else {
                BenchError e = BenchError::make(ErrCode::ParseError,
                                                "unknown sort '" + sort_tok.text +
                                                    "' (expected Number, Boolean or String)");
                e.span = sort_tok.span;
                return e;
            }
            col.span = SourceSpan::merge(col.span, sort_tok.span);
            if (at(Tok::Question)) {
                col.optional = true;
                col.span = SourceSpan::merge(col.span, cur().span);
                advance();
            }
        }
        return col;
    }

    Outcome<std::vector<CellExpr>> data_row() {
        std::vector<CellExpr> cells;
        while (true) {
            if (at(Tok::Blank)) {
                cells.push_back(CellExpr{nullptr, cur().span});
                advance();
            } else {
                TABLED_TRY(value, expression());
                cells.push_back(CellExpr{value, value->span});
            }
            if (!eat(Tok::Pipe)) break;
        }
        return cells;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    uint32_t next_id_ = 1;
    int32_t file_id_;
};

} // namespace

Outcome<Program> parse_program(std::vector<Token> tokens, int32_t file_id) {
    return Parser(std::move(tokens), file_id).run();
}

Outcome<Program> parse_source(const std::string& source, int32_t file_id) {
    TABLED_TRY(tokens, tokenize(source, file_id));
    return parse_program(std::move(tokens), file_id);
}

} // namespace tabled::lang
