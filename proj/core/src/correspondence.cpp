#include "phasestar/correspondence.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace phasestar {

namespace {

template <class Tag>
unsigned max_m(const TermPoly<Tag>& p) {
  unsigned out = 0;
  for (const auto& [e, c] : p.terms()) out = std::max(out, e.m);
  return out;
}

template <class Tag>
unsigned max_n(const TermPoly<Tag>& p) {
  unsigned out = 0;
  for (const auto& [e, c] : p.terms()) out = std::max(out, e.n);
  return out;
}

// 1/(iħ) = −i/ħ
ExactComplex inverse_i_hbar(const Rational& hbar) {
  if (hbar.is_zero()) throw DomainError("hbar must be nonzero");
  return {Rational(0), -Rational(1) / hbar};
}

// Generic terminating bidifferential series
//   Σ_{j,k} wj^j wk^k / (j! k!) · product(∂n^j ∂m^k F, ∂m^j ∂n^k G),
// where ∂n differentiates the second exponent (α or a) and ∂m the first (α* or a†).
template <class Poly, class Deriv, class Product>
Poly bidifferential_series(const Poly& F, const Poly& G, const Rational& wj, const Rational& wk,
                           unsigned min_order, unsigned max_order, Deriv deriv_nm, Product product) {
  Poly out;
  if (F.is_zero() || G.is_zero()) return out;
  const unsigned jmax = std::min(max_n(F), max_m(G));
  const unsigned kmax = std::min(max_m(F), max_n(G));
  for (unsigned j = 0; j <= jmax; ++j) {
    for (unsigned k = 0; k <= kmax; ++k) {
      if (j + k < min_order || j + k > max_order) continue;
      const Poly left = deriv_nm(F, j, k);
      if (left.is_zero()) continue;
      const Poly right = deriv_nm(G, k, j);
      if (right.is_zero()) continue;
      const Rational weight = wj.pow(j) * wk.pow(k) / (Rational::factorial(j) * Rational::factorial(k));
      if (weight.is_zero()) continue;
      out += product(left, right) * ExactComplex(weight);
    }
  }
  return out;
}

// ∂α^jn ∂α*^km f
PhasePoly phase_derivs(const PhasePoly& f, unsigned jn, unsigned km) {
  return deriv(deriv(f, PhaseVar::ALPHA, jn), PhaseVar::ALPHASTAR, km);
}

// ∂a^jn ∂a†^km F
OperatorPoly operator_derivs(const OperatorPoly& F, unsigned jn, unsigned km) {
  return formal_deriv(formal_deriv(F, Ladder::A, jn), Ladder::ADAG, km);
}

PhasePoly phase_product(const PhasePoly& f, const PhasePoly& g) { return f * g; }

constexpr unsigned kAllOrders = ~0U;

}  // namespace

void SContext::validate() const {
  if (hbar.sign() <= 0) throw DomainError("hbar must be positive");
}

PhasePoly cg(const OperatorPoly& F, const SContext& ctx) {
  const SOrderedCoefficients coeffs = s_basis_decompose(F, ctx.s);
  PhasePoly out;
  for (const auto& [e, c] : coeffs.terms()) out.add_term(e.m, e.n, c);
  return out;
}

OperatorPoly icg(const PhasePoly& f, const SContext& ctx) {
  OperatorPoly out;
  for (const auto& [e, c] : f.terms()) out += s_order_expand(e.m, e.n, ctx.s) * c;
  return out;
}

PhasePoly star_series(const PhasePoly& f, const PhasePoly& g, const SContext& ctx, unsigned min_order,
                      unsigned max_order) {
  const Rational wj = (ctx.s + Rational(1)) / Rational(2);
  const Rational wk = (ctx.s - Rational(1)) / Rational(2);
  return bidifferential_series(f, g, wj, wk, min_order, max_order, phase_derivs, phase_product);
}

PhasePoly star(const PhasePoly& f, const PhasePoly& g, const SContext& ctx) {
  return star_series(f, g, ctx, 0, kAllOrders);
}

OperatorPoly hstar_series(const OperatorPoly& F, const OperatorPoly& G, const SContext& ctx,
                          unsigned min_order, unsigned max_order) {
  const Rational wj = -(ctx.s + Rational(1)) / Rational(2);
  const Rational wk = -(ctx.s - Rational(1)) / Rational(2);
  return bidifferential_series(F, G, wj, wk, min_order, max_order, operator_derivs, multiply);
}

OperatorPoly hstar(const OperatorPoly& F, const OperatorPoly& G, const SContext& ctx) {
  return hstar_series(F, G, ctx, 0, kAllOrders);
}

OperatorPoly odot(const OperatorPoly& F, const OperatorPoly& G) {
  return hstar(F, G, SContext{Rational(0), Rational(1)});
}

PhasePoly star_commutator(const PhasePoly& f, const PhasePoly& g, const SContext& ctx) {
  const ExactComplex scale = inverse_i_hbar(ctx.hbar);
  return (star(f, g, ctx) - star(g, f, ctx)) * scale;
}

PhasePoly star_commutator_truncated(const PhasePoly& f, const PhasePoly& g, const SContext& ctx,
                                    unsigned max_order) {
  const ExactComplex scale = inverse_i_hbar(ctx.hbar);
  return (star_series(f, g, ctx, 0, max_order) - star_series(g, f, ctx, 0, max_order)) * scale;
}

OperatorPoly deformed_bracket(const OperatorPoly& F, const OperatorPoly& G, const SContext& ctx) {
  const ExactComplex scale = inverse_i_hbar(ctx.hbar);
  const OperatorPoly first = hstar(formal_deriv(F, Ladder::A), formal_deriv(G, Ladder::ADAG), ctx);
  const OperatorPoly second = hstar(formal_deriv(F, Ladder::ADAG), formal_deriv(G, Ladder::A), ctx);
  return (first - second) * scale;
}

OperatorPoly nogo_witness(const PhasePoly& f, const PhasePoly& g, const SContext& ctx) {
  const ExactComplex scale = inverse_i_hbar(ctx.hbar);
  return icg(poisson(f, g, ctx.hbar), ctx) - commutator(icg(f, ctx), icg(g, ctx)) * scale;
}

PhasePoly shift_phase(const PhasePoly& f, const Rational& from_s, const Rational& to_s) {
  const Rational step = (to_s - from_s) / Rational(2);
  PhasePoly out = f;
  if (step.is_zero()) return out;
  PhasePoly term = f;
  for (unsigned k = 1; !term.is_zero(); ++k) {
    term = deriv(deriv(term, PhaseVar::ALPHA), PhaseVar::ALPHASTAR) * ExactComplex(step / Rational(k));
    out += term;
  }
  return out;
}

OperatorPoly shift_operator(const OperatorPoly& F, const Rational& from_s, const Rational& to_s) {
  const Rational step = -(to_s - from_s) / Rational(2);
  OperatorPoly out = F;
  if (step.is_zero()) return out;
  OperatorPoly term = F;
  for (unsigned k = 1; !term.is_zero(); ++k) {
    term = operator_derivs(term, 1, 1) * ExactComplex(step / Rational(k));
    out += term;
  }
  return out;
}

OperatorPoly hsbs(const OperatorPoly& X, Ladder var, Side side, const Rational& s) {
  const Rational plus = (s + Rational(1)) / Rational(2);
  const Rational minus = (s - Rational(1)) / Rational(2);
  if (side == Side::RIGHT) {
    if (var == Ladder::A) return multiply(op::a(), X) - adjoint_deriv(X, Ladder::ADAG, Side::RIGHT) * plus;
    return multiply(op::adag(), X) - adjoint_deriv(X, Ladder::A, Side::RIGHT) * minus;
  }
  if (var == Ladder::A) return multiply(X, op::a()) - adjoint_deriv(X, Ladder::ADAG, Side::LEFT) * minus;
  return multiply(X, op::adag()) - adjoint_deriv(X, Ladder::A, Side::LEFT) * plus;
}

OperatorPoly hsbs_apply(const PhasePoly& f, const OperatorPoly& G, const SContext& ctx, Side side) {
  // The superoperators commute, so Σ f_mn B_a†^m B_a^n G can reuse B_a^n G across m.
  std::map<unsigned, std::vector<std::pair<unsigned, ExactComplex>>> by_n;
  for (const auto& [e, c] : f.terms()) by_n[e.n].emplace_back(e.m, c);

  OperatorPoly out;
  OperatorPoly lowered = G;
  unsigned at_n = 0;
  for (const auto& [n, row] : by_n) {
    for (; at_n < n; ++at_n) lowered = hsbs(lowered, Ladder::A, side, ctx.s);
    std::map<unsigned, ExactComplex> by_m(row.begin(), row.end());
    OperatorPoly raised = lowered;
    unsigned at_m = 0;
    for (const auto& [m, c] : by_m) {
      for (; at_m < m; ++at_m) raised = hsbs(raised, Ladder::ADAG, side, ctx.s);
      out += raised * c;
    }
  }
  return out;
}

PhasePoly psbo(const PhasePoly& g, PhaseVar var, Side side, const Rational& s) {
  const Rational plus = (s + Rational(1)) / Rational(2);
  const Rational minus = (s - Rational(1)) / Rational(2);
  if (var == PhaseVar::ALPHA) {
    const Rational w = side == Side::RIGHT ? plus : minus;
    return phase::alpha() * g + deriv(g, PhaseVar::ALPHASTAR) * ExactComplex(w);
  }
  const Rational w = side == Side::RIGHT ? minus : plus;
  return phase::alphastar() * g + deriv(g, PhaseVar::ALPHA) * ExactComplex(w);
}

namespace {

// cg(F) ⋆ₛ g: for each normal-ordered term (a†)^m a^n, B_α*^m (B_α^n g) with right operators.
PhasePoly bopp_right(const OperatorPoly& F, const PhasePoly& g, const Rational& s) {
  PhasePoly out;
  std::map<unsigned, std::vector<std::pair<unsigned, ExactComplex>>> by_n;
  for (const auto& [e, c] : F.terms()) by_n[e.n].emplace_back(e.m, c);
  PhasePoly inner = g;
  unsigned at_n = 0;
  for (const auto& [n, row] : by_n) {
    for (; at_n < n; ++at_n) inner = psbo(inner, PhaseVar::ALPHA, Side::RIGHT, s);
    std::map<unsigned, ExactComplex> by_m(row.begin(), row.end());
    PhasePoly outer = inner;
    unsigned at_m = 0;
    for (const auto& [m, c] : by_m) {
      for (; at_m < m; ++at_m) outer = psbo(outer, PhaseVar::ALPHASTAR, Side::RIGHT, s);
      out += outer * c;
    }
  }
  return out;
}

// h ⋆ₛ cg(G): left operators act in reading order, B_α^n (B_α*^m h).
PhasePoly bopp_left(const OperatorPoly& G, const PhasePoly& h, const Rational& s) {
  PhasePoly out;
  std::map<unsigned, std::vector<std::pair<unsigned, ExactComplex>>> by_m;
  for (const auto& [e, c] : G.terms()) by_m[e.m].emplace_back(e.n, c);
  PhasePoly inner = h;
  unsigned at_m = 0;
  for (const auto& [m, row] : by_m) {
    for (; at_m < m; ++at_m) inner = psbo(inner, PhaseVar::ALPHASTAR, Side::LEFT, s);
    std::map<unsigned, ExactComplex> by_n(row.begin(), row.end());
    PhasePoly outer = inner;
    unsigned at_n = 0;
    for (const auto& [n, c] : by_n) {
      for (; at_n < n; ++at_n) outer = psbo(outer, PhaseVar::ALPHA, Side::LEFT, s);
      out += outer * c;
    }
  }
  return out;
}

}  // namespace

PhasePoly psbo_apply(const OperatorPoly& F, const PhasePoly& g, const SContext& ctx, Side side) {
  if (side == Side::RIGHT) return bopp_right(F, g, ctx.s);
  // Same product with the roles swapped: icg(g) acts on cg(F) from the right-hand side.
  return bopp_left(icg(g, ctx), cg(F, ctx), ctx.s);
}

}  // namespace phasestar
