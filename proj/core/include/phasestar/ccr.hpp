#pragma once

#include <vector>

#include "phasestar/exact.hpp"
#include "phasestar/term_poly.hpp"

namespace phasestar {

struct OperatorTag {};
struct SOrderedTag {};

/// Operator polynomial Σ c_mn (a†)^m a^n stored in CCR-normal form. Because the
/// normal form is unique, equality of the coefficient maps is operator equality.
using OperatorPoly = TermPoly<OperatorTag>;

/// Coefficients d_mn of an expansion Σ d_mn {(a†)^m a^n}_s in the s-ordered basis.
using SOrderedCoefficients = TermPoly<SOrderedTag>;

enum class Ladder { A, ADAG };
enum class Side { LEFT, RIGHT };

/// A product of ladder letters (left to right) times a coefficient, before rewriting.
struct OperatorWord {
  std::vector<Ladder> letters;
  ExactComplex coefficient{1};
};

namespace op {
inline OperatorPoly identity() { return OperatorPoly::constant(1); }
inline OperatorPoly a() { return OperatorPoly::monomial(0, 1); }
inline OperatorPoly adag() { return OperatorPoly::monomial(1, 0); }
}  // namespace op

/// Normal form of a word under a·a† = a†·a + 1.
OperatorPoly normal_order(const OperatorWord& word);

/// Normal form of the operator product F·G.
OperatorPoly multiply(const OperatorPoly& F, const OperatorPoly& G);

/// F·G − G·F.
OperatorPoly commutator(const OperatorPoly& F, const OperatorPoly& G);

/// Hermitian conjugate: c_mn (a†)^m a^n ↦ conj(c_mn) (a†)^n a^m.
OperatorPoly dagger(const OperatorPoly& F);

/// Term-wise derivative of the normal form with respect to a or a†, applied `order` times.
OperatorPoly formal_deriv(const OperatorPoly& F, Ladder var, unsigned order = 1);

/// Derivative superoperators realized as commutators:
///   RIGHT-a: −[a†, F]   RIGHT-a†: [a, F]   LEFT-a: [F, a†]   LEFT-a†: −[F, a]
/// Every variant equals formal_deriv(F, var) on normal-form operands.
OperatorPoly adjoint_deriv(const OperatorPoly& F, Ladder var, Side side);

/// Normal form of {(a†)^m a^n}_s = Σ_k k! C(m,k) C(n,k) ((1−s)/2)^k (a†)^(m−k) a^(n−k).
OperatorPoly s_order_expand(unsigned m, unsigned n, const Rational& s);

/// Decomposes F into the s-ordered basis by triangular elimination.
SOrderedCoefficients s_basis_decompose(const OperatorPoly& F, const Rational& s);

/// Σ d_mn {(a†)^m a^n}_s, the inverse of s_basis_decompose.
OperatorPoly s_basis_recompose(const SOrderedCoefficients& coeffs, const Rational& s);

}  // namespace phasestar
