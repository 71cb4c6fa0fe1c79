#pragma once

#include "tabled/outcome.hpp"

#include <string>
#include <vector>

namespace tabled::lang {

enum class Tok {
    Ident,
    Number,
    String,
    // keywords
    KwFunction,
    KwEnd,
    KwFor,
    KwIn,
    KwIf,
    KwElse,
    KwAnd,
    KwOr,
    KwNot,
    KwTrue,
    KwFalse,
    KwTable,
    KwPrintln,
    // punctuation
    Assign,     // =
    EqEq,       // ==
    Lt,         // <
    Le,         // <=
    Plus,       // +
    Minus,      // -
    Star,       // *
    Slash,      // /
    Concat,     // ++
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Colon,
    Pipe,
    Question,
    Blank,      // standalone _, legal only inside table literal rows
    Newline,
    Eof,
};

std::string to_string(Tok kind);

struct Token {
    Tok kind;
    std::string text;   // verbatim source text (string tokens: decoded value)
    double number = 0;  // value for Number tokens
    SourceSpan span;
};

/// Tokenizes UTF-8 source. Newline tokens are emitted only outside
/// parentheses/brackets; `#` starts a comment running to end of line.
Outcome<std::vector<Token>> tokenize(const std::string& source, int32_t file_id);

} // namespace tabled::lang
