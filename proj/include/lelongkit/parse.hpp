#pragma once

#include <string>
#include <vector>

#include "lelongkit/poly.hpp"

namespace lk {

struct ParseError : InputError {
  ParseError(const std::string& msg, int line, int col)
      : InputError(msg + " at line " + std::to_string(line) + ", column " +
                   std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

// Parses an expression over the declared variables. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' nat)?
//   base   := ident | number | '(' expr ')' | '-' factor
// Numbers are decimal integers; fractions are written with '/' which is the
// division operator and requires a nonzero constant divisor. Implicit
// multiplication is rejected. "i" is the imaginary unit unless declared as a
// variable.
MultiPoly parse_poly(const std::string& text,
                     const std::vector<std::string>& declared_vars);

// Deterministic serialization: terms in descending monomial order; exact
// round trip through parse_poly.
std::string serialize_poly(const MultiPoly& p, const MonomialOrder& order);
std::string serialize_poly(const MultiPoly& p);  // paper order, declared vars

struct PolySystem {
  std::vector<std::string> vars;
  std::vector<MultiPoly> polys;
};

// System file: UTF-8, first non-comment line "vars: x, y", then one
// polynomial per line; '#' starts a comment.
PolySystem parse_system(const std::string& text);

std::vector<std::string> split_var_list(const std::string& csv);

}  // namespace lk
