#include "phasestar/phase.hpp"

#include <vector>

namespace phasestar {

namespace {

template <class Tag>
TermPoly<Tag> commutative_product(const TermPoly<Tag>& f, const TermPoly<Tag>& g) {
  TermPoly<Tag> out;
  for (const auto& [ef, cf] : f.terms()) {
    for (const auto& [eg, cg] : g.terms()) out.add_term(ef.m + eg.m, ef.n + eg.n, cf * cg);
  }
  return out;
}

template <class Poly>
Poly power(const Poly& base, unsigned exponent, const Poly& unit) {
  Poly result = unit;
  Poly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent != 0) b = b * b;
  }
  return result;
}

}  // namespace

void QuadFrame::validate() const {
  if (hbar.sign() <= 0) throw DomainError("hbar must be positive");
  if (zeta.sign() <= 0) throw DomainError("zeta must be positive");
}

PhasePoly operator*(const PhasePoly& f, const PhasePoly& g) { return commutative_product(f, g); }

PhasePoly pow(const PhasePoly& f, unsigned exponent) { return power(f, exponent, phase::one()); }

PhasePoly deriv(const PhasePoly& f, PhaseVar var, unsigned order) {
  if (order == 0) return f;
  PhasePoly out;
  for (const auto& [e, c] : f.terms()) {
    const unsigned p = var == PhaseVar::ALPHA ? e.n : e.m;
    if (p < order) continue;
    Rational falling(1);
    for (unsigned j = 0; j < order; ++j) falling *= Rational(static_cast<long>(p - j));
    if (var == PhaseVar::ALPHA) {
      out.add_term(e.m, e.n - order, c * ExactComplex(falling));
    } else {
      out.add_term(e.m - order, e.n, c * ExactComplex(falling));
    }
  }
  return out;
}

PhasePoly poisson(const PhasePoly& f, const PhasePoly& g, const Rational& hbar) {
  if (hbar.is_zero()) throw DomainError("hbar must be nonzero");
  const PhasePoly bracket = deriv(f, PhaseVar::ALPHA) * deriv(g, PhaseVar::ALPHASTAR) -
                            deriv(g, PhaseVar::ALPHA) * deriv(f, PhaseVar::ALPHASTAR);
  // 1/(iħ) = −i/ħ
  return bracket * ExactComplex(Rational(0), -Rational(1) / hbar);
}

PhasePoly conj(const PhasePoly& f) {
  PhasePoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(e.n, e.m, c.conj());
  return out;
}

std::complex<double> eval(const PhasePoly& f, std::complex<double> alpha) {
  // Horner in α* over the rows of fixed m, each row Horner in α.
  const std::complex<double> alphastar = std::conj(alpha);
  unsigned max_m = 0;
  for (const auto& [e, c] : f.terms()) max_m = std::max(max_m, e.m);
  std::vector<std::vector<std::pair<unsigned, std::complex<double>>>> rows(max_m + 1);
  for (const auto& [e, c] : f.terms()) rows[e.m].emplace_back(e.n, c.to_double());

  std::complex<double> acc = 0.0;
  for (unsigned m = max_m + 1; m-- > 0;) {
    std::complex<double> row = 0.0;
    unsigned max_n = 0;
    for (const auto& [n, c] : rows[m]) max_n = std::max(max_n, n);
    std::vector<std::complex<double>> dense(max_n + 1, 0.0);
    for (const auto& [n, c] : rows[m]) dense[n] = c;
    for (unsigned n = max_n + 1; n-- > 0;) row = row * alpha + dense[n];
    acc = acc * alphastar + row;
  }
  return acc;
}

QuadPoly operator*(const QuadPoly& f, const QuadPoly& g) { return commutative_product(f, g); }

PhasePoly quad_to_alpha(const QuadPoly& f) {
  const ExactComplex half(Rational(1, 2));
  // Q = (α + α*)/2, P = (α − α*)/(2i) = −(i/2)(α − α*)
  const PhasePoly Q = (phase::alpha() + phase::alphastar()) * half;
  const PhasePoly P = (phase::alpha() - phase::alphastar()) * ExactComplex(Rational(0), Rational(-1, 2));
  PhasePoly out;
  for (const auto& [e, c] : f.terms()) out += pow(Q, e.m) * pow(P, e.n) * c;
  return out;
}

QuadPoly alpha_to_quad(const PhasePoly& f) {
  // α = Q + iP, α* = Q − iP
  const QuadPoly one = QuadPoly::constant(1);
  const QuadPoly alpha = QuadPoly::monomial(1, 0) + QuadPoly::monomial(0, 1, ExactComplex::i());
  const QuadPoly alphastar = QuadPoly::monomial(1, 0) - QuadPoly::monomial(0, 1, ExactComplex::i());
  QuadPoly out;
  for (const auto& [e, c] : f.terms()) {
    out += power(alphastar, e.m, one) * power(alpha, e.n, one) * c;
  }
  return out;
}

}  // namespace phasestar
