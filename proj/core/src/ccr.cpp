#include "phasestar/ccr.hpp"

#include <algorithm>

namespace phasestar {

namespace {

// a^n (a†)^p = Σ_k k! C(n,k) C(p,k) (a†)^(p−k) a^(n−k)
Rational reorder_weight(unsigned n, unsigned p, unsigned k) {
  return Rational::factorial(k) * Rational::binomial(n, k) * Rational::binomial(p, k);
}

OperatorPoly letter(Ladder l) { return l == Ladder::A ? op::a() : op::adag(); }

}  // namespace

OperatorPoly normal_order(const OperatorWord& word) {
  OperatorPoly result = OperatorPoly::constant(word.coefficient);
  for (Ladder l : word.letters) result = multiply(result, letter(l));
  return result;
}

OperatorPoly multiply(const OperatorPoly& F, const OperatorPoly& G) {
  OperatorPoly out;
  for (const auto& [ef, cf] : F.terms()) {
    for (const auto& [eg, cg] : G.terms()) {
      const ExactComplex c = cf * cg;
      const unsigned kmax = std::min(ef.n, eg.m);
      for (unsigned k = 0; k <= kmax; ++k) {
        ExactComplex w = k == 0 ? c : c * ExactComplex(reorder_weight(ef.n, eg.m, k));
        out.add_term(ef.m + eg.m - k, ef.n + eg.n - k, w);
      }
    }
  }
  return out;
}

OperatorPoly commutator(const OperatorPoly& F, const OperatorPoly& G) {
  return multiply(F, G) - multiply(G, F);
}

OperatorPoly dagger(const OperatorPoly& F) {
  OperatorPoly out;
  for (const auto& [e, c] : F.terms()) out.add_term(e.n, e.m, c.conj());
  return out;
}

OperatorPoly formal_deriv(const OperatorPoly& F, Ladder var, unsigned order) {
  if (order == 0) return F;
  OperatorPoly out;
  for (const auto& [e, c] : F.terms()) {
    const unsigned power = var == Ladder::A ? e.n : e.m;
    if (power < order) continue;
    // power!/(power−order)!
    Rational falling(1);
    for (unsigned j = 0; j < order; ++j) falling *= Rational(static_cast<long>(power - j));
    if (var == Ladder::A) {
      out.add_term(e.m, e.n - order, c * ExactComplex(falling));
    } else {
      out.add_term(e.m - order, e.n, c * ExactComplex(falling));
    }
  }
  return out;
}

OperatorPoly adjoint_deriv(const OperatorPoly& F, Ladder var, Side side) {
  if (side == Side::RIGHT) {
    return var == Ladder::A ? -commutator(op::adag(), F) : commutator(op::a(), F);
  }
  return var == Ladder::A ? commutator(F, op::adag()) : -commutator(F, op::a());
}

OperatorPoly s_order_expand(unsigned m, unsigned n, const Rational& s) {
  const Rational shift = (Rational(1) - s) / Rational(2);
  OperatorPoly out;
  const unsigned kmax = std::min(m, n);
  for (unsigned k = 0; k <= kmax; ++k) {
    out.add_term(m - k, n - k, ExactComplex(reorder_weight(m, n, k) * shift.pow(k)));
  }
  return out;
}

SOrderedCoefficients s_basis_decompose(const OperatorPoly& F, const Rational& s) {
  SOrderedCoefficients out;
  OperatorPoly rest = F;
  // {(a†)^m a^n}_s = (a†)^m a^n + strictly lower total degree, so peeling off the
  // leading term in canonical order always terminates.
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms().begin();
    const Exponents lead = e;
    const ExactComplex coeff = c;
    out.add_term(lead.m, lead.n, coeff);
    rest -= s_order_expand(lead.m, lead.n, s) * coeff;
  }
  return out;
}

OperatorPoly s_basis_recompose(const SOrderedCoefficients& coeffs, const Rational& s) {
  OperatorPoly out;
  for (const auto& [e, c] : coeffs.terms()) out += s_order_expand(e.m, e.n, s) * c;
  return out;
}

}  // namespace phasestar
