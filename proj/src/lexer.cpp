#include "tabled/token.hpp"

#include <cctype>
#include <charconv>
#include <unordered_map>

namespace tabled::lang {

std::string to_string(Tok kind) {
    switch (kind) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::String: return "string";
        case Tok::KwFunction: return "'function'";
        case Tok::KwEnd: return "'end'";
        case Tok::KwFor: return "'for'";
        case Tok::KwIn: return "'in'";
        case Tok::KwIf: return "'if'";
        case Tok::KwElse: return "'else'";
        case Tok::KwAnd: return "'and'";
        case Tok::KwOr: return "'or'";
        case Tok::KwNot: return "'not'";
        case Tok::KwTrue: return "'true'";
        case Tok::KwFalse: return "'false'";
        case Tok::KwTable: return "'table'";
        case Tok::KwPrintln: return "'println'";
        case Tok::Assign: return "'='";
        case Tok::EqEq: return "'=='";
        case Tok::Lt: return "'<'";
        case Tok::Le: return "'<='";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::Concat: return "'++'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Colon: return "':'";
        case Tok::Pipe: return "'|'";
        case Tok::Question: return "'?'";
        case Tok::Blank: return "'_'";
        case Tok::Newline: return "newline";
        case Tok::Eof: return "end of input";
    }
    return "?";
}

namespace {

const std::unordered_map<std::string, Tok>& keywords() {
    static const std::unordered_map<std::string, Tok> map = {
        {"function", Tok::KwFunction}, {"end", Tok::KwEnd},   {"for", Tok::KwFor},
        {"in", Tok::KwIn},             {"if", Tok::KwIf},     {"else", Tok::KwElse},
        {"and", Tok::KwAnd},           {"or", Tok::KwOr},     {"not", Tok::KwNot},
        {"true", Tok::KwTrue},         {"false", Tok::KwFalse},
        {"table", Tok::KwTable},       {"println", Tok::KwPrintln},
    };
    return map;
}

class Lexer {
public:
    Lexer(const std::string& source, int32_t file_id) : src_(source), file_id_(file_id) {}

    Outcome<std::vector<Token>> run() {
        std::vector<Token> tokens;
        while (!at_end()) {
            char c = peek();
            if (c == '\n') {
                Position at = pos_;
                advance();
                if (depth_ == 0) {
                    // collapse runs of blank lines into one newline token
                    if (tokens.empty() || tokens.back().kind != Tok::Newline)
                        tokens.push_back(make(Tok::Newline, "\\n", at, pos_));
                }
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance();
                continue;
            }
            if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
                continue;
            }
            Position start = pos_;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                TABLED_TRY(tok, number(start));
                tokens.push_back(tok);
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                tokens.push_back(ident(start));
                continue;
            }
            if (c == '"') {
                TABLED_TRY(tok, string_lit(start));
                tokens.push_back(tok);
                continue;
            }
            TABLED_TRY(tok, punct(start));
            tokens.push_back(tok);
        }
        Token eof = make(Tok::Eof, "", pos_, pos_);
        if (!tokens.empty() && tokens.back().kind != Tok::Newline) {
            Token nl = make(Tok::Newline, "\\n", pos_, pos_);
            tokens.push_back(nl);
        }
        tokens.push_back(eof);
        return tokens;
    }

private:
    bool at_end() const { return offset_ >= src_.size(); }
    char peek(std::size_t ahead = 0) const {
        return offset_ + ahead < src_.size() ? src_[offset_ + ahead] : '\0';
    }
    void advance() {
        if (src_[offset_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++offset_;
    }

    Token make(Tok kind, std::string text, Position start, Position end) {
        return Token{kind, std::move(text), 0, SourceSpan{file_id_, start, end}};
    }

    BenchError lex_error(Position start, const std::string& message) {
        BenchError e = BenchError::make(ErrCode::LexError, message);
        e.span = SourceSpan{file_id_, start, pos_};
        return e;
    }

    Outcome<Token> number(Position start) {
        std::size_t begin = offset_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
        if ((peek() == 'e' || peek() == 'E') &&
            (std::isdigit(static_cast<unsigned char>(peek(1))) ||
             ((peek(1) == '+' || peek(1) == '-') &&
              std::isdigit(static_cast<unsigned char>(peek(2)))))) {
            advance();
            if (peek() == '+' || peek() == '-') advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
        std::string text = src_.substr(begin, offset_ - begin);
        double value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size())
            return lex_error(start, "malformed number literal '" + text + "'");
        Token tok = make(Tok::Number, text, start, pos_);
        tok.number = value;
        return tok;
    }

    Token ident(Position start) {
        std::size_t begin = offset_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
        std::string text = src_.substr(begin, offset_ - begin);
        auto kw = keywords().find(text);
        return make(kw == keywords().end() ? Tok::Ident : kw->second, text, start, pos_);
    }

    Outcome<Token> string_lit(Position start) {
        advance(); // opening quote
        std::string value;
        while (true) {
            if (at_end() || peek() == '\n')
                return lex_error(start, "unterminated string literal");
            char c = peek();
            advance();
            if (c == '"') break;
            if (c == '\\') {
                char esc = peek();
                if (esc == '"' || esc == '\\') {
                    value.push_back(esc);
                    advance();
                } else {
                    return lex_error(start, std::string("unsupported escape '\\") + esc + "'");
                }
            } else {
                value.push_back(c);
            }
        }
        return make(Tok::String, value, start, pos_);
    }

    Outcome<Token> punct(Position start) {
        char c = peek();
        advance();
        switch (c) {
            case '=':
                if (peek() == '=') { advance(); return make(Tok::EqEq, "==", start, pos_); }
                return make(Tok::Assign, "=", start, pos_);
            case '<':
                if (peek() == '=') { advance(); return make(Tok::Le, "<=", start, pos_); }
                return make(Tok::Lt, "<", start, pos_);
            case '+':
                if (peek() == '+') { advance(); return make(Tok::Concat, "++", start, pos_); }
                return make(Tok::Plus, "+", start, pos_);
            case '-': return make(Tok::Minus, "-", start, pos_);
            case '*': return make(Tok::Star, "*", start, pos_);
            case '/': return make(Tok::Slash, "/", start, pos_);
            case '(': ++depth_; return make(Tok::LParen, "(", start, pos_);
            case ')': if (depth_ > 0) --depth_; return make(Tok::RParen, ")", start, pos_);
            case '[': ++depth_; return make(Tok::LBracket, "[", start, pos_);
            case ']': if (depth_ > 0) --depth_; return make(Tok::RBracket, "]", start, pos_);
            case ',': return make(Tok::Comma, ",", start, pos_);
            case ':': return make(Tok::Colon, ":", start, pos_);
            case '|': return make(Tok::Pipe, "|", start, pos_);
            case '?': return make(Tok::Question, "?", start, pos_);
            case '_':
                if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                    return lex_error(start, "identifiers cannot start with '_'");
                return make(Tok::Blank, "_", start, pos_);
            default:
                return lex_error(start, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& src_;
    int32_t file_id_;
    std::size_t offset_ = 0;
    Position pos_;
    int depth_ = 0;
};

} // namespace

Outcome<std::vector<Token>> tokenize(const std::string& source, int32_t file_id) {
    return Lexer(source, file_id).run();
}

} // namespace tabled::lang
