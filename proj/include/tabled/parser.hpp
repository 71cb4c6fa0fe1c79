#pragma once

#include "tabled/ast.hpp"
#include "tabled/outcome.hpp"
#include "tabled/token.hpp"

namespace tabled::lang {

Outcome<Program> parse_program(std::vector<Token> tokens, int32_t file_id);

/// Convenience: tokenize + parse.
Outcome<Program> parse_source(const std::string& source, int32_t file_id);

} // namespace tabled::lang
