#ifndef WHITEALG_PARSER_HPP
#define WHITEALG_PARSER_HPP

#include <string>

#include "whitealg/expr.hpp"

namespace whitealg {

// Recursive-descent parser for bracket/tensor expressions.
//
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := rational '*' factor | rational | factor
//   factor   := atom ('.' atom)*
//   atom     := gen | '[' expr ',' expr ']' | '(' expr ')'
//   gen      := ('x'|'b'|'xi'|'chi') digits
//   rational := integer ['/' posint]
//
// Whitespace-insensitive. '.' is tensor-word concatenation; a bare rational
// is a multiple of the unit. Errors carry the offending position.
BracketExpr parse_expr(const std::string& text);

}  // namespace whitealg

#endif
