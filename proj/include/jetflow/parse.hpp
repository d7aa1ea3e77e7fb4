#pragma once

#include <string>
#include <vector>

#include "jetflow/expr.hpp"

namespace jetflow {

// Parses the expression grammar:
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ['^' exponent]
//   primary := NUMBER | IDENT | '(' expr ')'
//   exponent:= NUMBER | '(' ['-'] NUMBER ['/' NUMBER] ')'
//
// Identifiers: x, u (aliases u0), u1..u12 (aliases ux, uxx), and any name
// in `params`, which is registered before parsing.  A fractional exponent
// p/q adjoins the radical base^(1/q) (q in {2, 3, 5}); every radical in
// one expression must share the same radicand.
Expression parse_expression(const std::string& text,
                            const std::vector<std::string>& params = {});

// A .ham / .flow source file: '#' comments, optional "params:" and "dx:"
// header lines, then the expression (possibly spanning several lines).
// With "dx: 1" the file's expression is the potential of the flow, i.e.
// the loader should apply the total x-derivative once.
struct SourceFile {
  std::vector<std::string> params;
  bool apply_dx = false;
  std::string expr_text;
};

SourceFile read_source_file(const std::string& path);

}  // namespace jetflow
