#pragma once

#include "tabled/ast.hpp"

#include <string>

namespace tabled::lang {

/// Canonical source rendering; reparsing the output yields a structurally
/// equal program.
std::string print_program(const Program& program);
std::string print_expr(const Expr& expr);

/// String literal with the surface escapes applied.
std::string quote_string(const std::string& text);

} // namespace tabled::lang
