#pragma once

#include <string>
#include <vector>

#include "bform/multivector.hpp"
#include "bform/polyform.hpp"

namespace bform {

struct ParseError : error {
  std::size_t column;  // 1-based
  std::string expected;
  ParseError(std::size_t col, const std::string& what)
      : error("syntax error at column " + std::to_string(col) + ": " + what),
        column(col),
        expected(what) {}
};

/// Parse result: a sum of a form part and a tangent part (e1..en occur only
/// linearly, with function coefficients). Grammar in docs/grammar.md:
///   expr   := wedge (('+'|'-') wedge)*
///   wedge  := prod ('^' prod)*
///   prod   := unary (('*'|'/') unary)*
///   unary  := ('-'|'+')* atom
///   atom   := INT | 'i' | 'x'K | 'dx'K | 'e'K | 'exp' '(' expr ')' | '(' expr ')'
/// '*' binds tighter than '^', which binds tighter than '+'.
struct Parsed {
  int dim = 0;
  PolyForm form;
  PolyVec tangent;

  bool has_tangent() const {
    for (const auto& v : tangent)
      if (!v.is_zero()) return true;
    return false;
  }
  /// Constant pure-form value (throws if tangent parts or non-constant
  /// coefficients are present).
  Multivector as_multivector() const;
  /// Polynomial form (throws if tangent parts present).
  PolyForm as_polyform() const;
  /// Section of T + T*: tangent part plus a form of degree <= 1.
  PolySection as_section() const;
};

/// dim = 0 infers the dimension from the highest index used.
Parsed parse_expr(const std::string& text, int dim = 0);

}  // namespace bform
