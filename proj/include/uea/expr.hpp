#ifndef UEA_EXPR_HPP
#define UEA_EXPR_HPP

#include <map>
#include <optional>
#include <string>

#include "uea/pbw.hpp"
#include "uea/poly.hpp"

namespace uea {

/// Context for parsing polynomial expressions.
///
/// Grammar (whitespace-insensitive):
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor (['*'] factor)*          adjacency multiplies
///   factor := INT | var ['^' INT] | '(' expr ')' ['^' INT]
///   var    := 'x' INT | 'z' INT | 'e'
/// 'e' stands for the algebra parameter and needs eps to be set; 'z' names
/// must be bound in zvals (used by the rational-invariant tables, where z1,
/// z2 abbreviate fixed central polynomials).
struct ParseEnv {
  uint32_t p = 2;
  int nvars = 1;
  std::optional<uint32_t> eps;
  std::map<int, Poly> zvals;
};

/// Parses an expression to a commutative polynomial over F_p.
/// Throws std::invalid_argument with a character offset on malformed input.
Poly parse_poly(const std::string& text, const ParseEnv& env);

/// parse_poly followed by embed_commutative against the algebra.
PBWElement parse_pbw(const std::string& text, const LieAlgebraPtr& alg,
                     EmbedPolicy policy = EmbedPolicy::commuting_support);

} // namespace uea

#endif
