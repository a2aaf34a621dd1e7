#pragma once

#include <complex>

#include "phasestar/exact.hpp"
#include "phasestar/term_poly.hpp"

namespace phasestar {

struct PhaseTag {};
struct QuadTag {};

/// Commutative polynomial Σ c_mn (α*)^m α^n.
using PhasePoly = TermPoly<PhaseTag>;

/// Polynomial Σ c_ij Q^i P^j in the scaled quadratures Q = (α + α*)/2, P = (α − α*)/(2i).
/// Stored with i in the first exponent slot and j in the second.
using QuadPoly = TermPoly<QuadTag>;

enum class PhaseVar { ALPHA, ALPHASTAR };

/// ħ and the quadrature scale ζ. Only the scaled quadratures Q, P (α = Q + iP) have exact
/// rational conversions; physical q = √(2ħ) Q / ζ and p = √(2ħ) ζ P.
struct QuadFrame {
  Rational hbar{1};
  Rational zeta{1};

  /// Throws DomainError unless hbar > 0 and zeta > 0.
  void validate() const;
};

namespace phase {
inline PhasePoly one() { return PhasePoly::constant(1); }
inline PhasePoly alpha() { return PhasePoly::monomial(0, 1); }
inline PhasePoly alphastar() { return PhasePoly::monomial(1, 0); }
}  // namespace phase

PhasePoly operator*(const PhasePoly& f, const PhasePoly& g);
PhasePoly pow(const PhasePoly& f, unsigned exponent);

/// ∂^order f / ∂var^order.
PhasePoly deriv(const PhasePoly& f, PhaseVar var, unsigned order = 1);

/// (1/(iħ)) (∂f/∂α ∂g/∂α* − ∂g/∂α ∂f/∂α*). Throws DomainError for ħ = 0.
PhasePoly poisson(const PhasePoly& f, const PhasePoly& g, const Rational& hbar = Rational(1));

/// Complex conjugate function: c_mn (α*)^m α^n ↦ conj(c_mn) (α*)^n α^m.
PhasePoly conj(const PhasePoly& f);

std::complex<double> eval(const PhasePoly& f, std::complex<double> alpha);

QuadPoly operator*(const QuadPoly& f, const QuadPoly& g);
PhasePoly quad_to_alpha(const QuadPoly& f);
QuadPoly alpha_to_quad(const PhasePoly& f);

}  // namespace phasestar
