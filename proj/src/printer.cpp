#include "tabled/printer.hpp"

#include "tabled/value.hpp"

#include <cctype>
#include <sstream>

namespace tabled::lang {

namespace {

/// A column name can be printed unquoted when every space-separated word
/// re-lexes as a plain identifier.
bool plain_column_name(const std::string& name) {
    static const char* kKeywords[] = {"function", "end",  "for",   "in",    "if",     "else",
                                      "and",      "or",   "not",   "true",  "false",
                                      "table",    "println"};
    if (name.empty() || name.front() == ' ' || name.back() == ' ') return false;
    std::size_t pos = 0;
    while (pos < name.size()) {
        std::size_t space = name.find(' ', pos);
        std::string word = name.substr(pos, space == std::string::npos ? space : space - pos);
        if (word.empty()) return false;
        if (!std::isalpha(static_cast<unsigned char>(word.front()))) return false;
        for (char c : word)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
        for (const char* kw : kKeywords)
            if (word == kw) return false;
        if (space == std::string::npos) break;
        pos = space + 1;
    }
    return true;
}

/// Binding strength, used to decide where parentheses are required.
int precedence(BinOpKind op) {
    switch (op) {
        case BinOpKind::Or: return 1;
        case BinOpKind::And: return 2;
        case BinOpKind::Eq:
        case BinOpKind::Lt:
        case BinOpKind::Le: return 3;
        case BinOpKind::Concat:
        case BinOpKind::Add:
        case BinOpKind::Sub: return 4;
        case BinOpKind::Mul:
        case BinOpKind::Div: return 5;
    }
    return 0;
}

class Printer {
public:
    std::string program(const Program& p) {
        for (const auto& s : p.stmts) stmt(*s);
        return std::move(out_).str();
    }

    std::string expression(const Expr& e) {
        expr(e, 0);
        return std::move(out_).str();
    }

private:
    void line_start() { out_ << std::string(indent_ * 4, ' '); }

    void block(const std::vector<StmtPtr>& stmts) {
        ++indent_;
        for (const auto& s : stmts) stmt(*s);
        --indent_;
    }

    void stmt(const Stmt& s) {
        line_start();
        if (const auto* bind = s.as<Bind>()) {
            out_ << bind->name << " = ";
            expr(*bind->value, 0);
        } else if (const auto* es = s.as<ExprStmt>()) {
            expr(*es->expr, 0);
        } else if (const auto* pr = s.as<PrintlnStmt>()) {
            out_ << "println(";
            expr(*pr->value, 0);
            out_ << ")";
        } else if (const auto* iff = s.as<If>()) {
            out_ << "if ";
            expr(*iff->cond, 0);
            out_ << ":\n";
            block(iff->then_body);
            if (!iff->else_body.empty()) {
                line_start();
                out_ << "else:\n";
                block(iff->else_body);
            }
            line_start();
            out_ << "end";
        } else if (const auto* loop = s.as<ForIn>()) {
            out_ << "for " << loop->var << " in ";
            expr(*loop->seq, 0);
            out_ << ":\n";
            block(loop->body);
            line_start();
            out_ << "end";
        }
        out_ << "\n";
    }

    void expr(const Expr& e, int parent_prec) {
        if (const auto* n = e.as<NumberLit>()) {
            out_ << number_to_string(n->value);
        } else if (const auto* b = e.as<BoolLit>()) {
            out_ << (b->value ? "true" : "false");
        } else if (const auto* s = e.as<StringLit>()) {
            out_ << quote_string(s->value);
        } else if (const auto* v = e.as<Var>()) {
            out_ << v->name;
        } else if (const auto* seq = e.as<SeqLit>()) {
            out_ << "[";
            for (std::size_t i = 0; i < seq->items.size(); ++i) {
                if (i > 0) out_ << ", ";
                expr(*seq->items[i], 0);
            }
            out_ << "]";
        } else if (const auto* bin = e.as<BinOp>()) {
            int prec = precedence(bin->op);
            if (prec < parent_prec) out_ << "(";
            expr(*bin->lhs, prec);
            out_ << " " << to_string(bin->op) << " ";
            expr(*bin->rhs, prec + 1);
            if (prec < parent_prec) out_ << ")";
        } else if (const auto* no = e.as<Not>()) {
            out_ << "not ";
            expr(*no->operand, 6);
        } else if (const auto* neg = e.as<Neg>()) {
            out_ << "-";
            expr(*neg->operand, 6);
        } else if (const auto* idx = e.as<RowIndex>()) {
            expr(*idx->row, 7);
            out_ << "[";
            expr(*idx->name, 0);
            out_ << "]";
        } else if (const auto* call = e.as<Call>()) {
            expr(*call->callee, 7);
            out_ << "(";
            for (std::size_t i = 0; i < call->args.size(); ++i) {
                if (i > 0) out_ << ", ";
                expr(*call->args[i], 0);
            }
            out_ << ")";
        } else if (const auto* fn = e.as<FunctionDef>()) {
            out_ << "function(";
            for (std::size_t i = 0; i < fn->params.size(); ++i) {
                if (i > 0) out_ << ", ";
                out_ << fn->params[i].name;
            }
            out_ << "):\n";
            block(fn->body);
            line_start();
            out_ << "end";
        } else if (const auto* spec = e.as<OrderBySpec>()) {
            out_ << "[";
            for (std::size_t i = 0; i < spec->pairs.size(); ++i) {
                if (i > 0) out_ << ", ";
                out_ << "(";
                expr(*spec->pairs[i].get_key, 0);
                out_ << ", ";
                expr(*spec->pairs[i].compare, 0);
                out_ << ")";
            }
            out_ << "]";
        } else if (const auto* lit = e.as<TableLit>()) {
            out_ << "table:\n";
            ++indent_;
            line_start();
            for (std::size_t c = 0; c < lit->columns.size(); ++c) {
                if (c > 0) out_ << " | ";
                const auto& col = lit->columns[c];
                out_ << (plain_column_name(col.name) ? col.name : quote_string(col.name));
                if (col.sort) {
                    out_ << ": " << tabled::to_string(*col.sort);
                    if (col.optional) out_ << "?";
                }
            }
            out_ << "\n";
            for (const auto& row : lit->rows) {
                line_start();
                for (std::size_t c = 0; c < row.size(); ++c) {
                    if (c > 0) out_ << " | ";
                    if (row[c].blank()) out_ << "_";
                    else expr(*row[c].expr, 0);
                }
                out_ << "\n";
            }
            --indent_;
            line_start();
            out_ << "end";
        }
    }

    std::ostringstream out_;
    int indent_ = 0;
};

} // namespace

std::string quote_string(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string print_program(const Program& program) {
    return Printer().program(program);
}

std::string print_expr(const Expr& expr) {
    return Printer().expression(expr);
}

} // namespace tabled::lang
