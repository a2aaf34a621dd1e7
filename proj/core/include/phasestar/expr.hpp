#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phasestar/ccr.hpp"
#include "phasestar/exact.hpp"
#include "phasestar/phase.hpp"

namespace phasestar {

enum class ExprContext { OPERATOR, PHASE };

enum class Symbol { A, ADAG, ALPHA, ALPHASTAR, Q, P, I };

/// Parse tree. Subtraction is a Sum whose child is a Negate.
struct Expr {
  enum class Kind { Sum, Product, Power, Commutator, Symbol, Constant, Negate };

  Kind kind = Kind::Constant;
  std::vector<Expr> children;
  phasestar::Symbol symbol = phasestar::Symbol::I;
  ExactComplex constant;
  unsigned exponent = 0;
  std::size_t offset = 0;  ///< byte offset of the node's first token
};

/// Largest exponent accepted after '^'.
inline constexpr unsigned kMaxExponent = 256;

/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ('^' UINT)?
///   primary := SYMBOL | NUMBER | 'i' | '(' expr ')' | '[' expr ',' expr ']' | '-' primary
/// NUMBER is "p" or "p/q". OPERATOR context admits a, ad; PHASE admits al, als, Q, P.
/// Throws ParseError carrying the byte offset of the fault.
Expr parse(std::string_view text, ExprContext context);

using Lowered = std::variant<OperatorPoly, PhasePoly>;

/// Operator products are multiplied left to right into CCR-normal form; phase
/// products are commutative and Q, P are rewritten through α = Q + iP.
Lowered lower(const Expr& ast, ExprContext context);

OperatorPoly parse_operator(std::string_view text);
PhasePoly parse_phase(std::string_view text);

/// Terms by total degree descending, then m descending, e.g. "ad^2*a^2 + 4*ad*a + 2".
std::string print_canonical(const OperatorPoly& p);
std::string print_canonical(const PhasePoly& p);

}  // namespace phasestar
