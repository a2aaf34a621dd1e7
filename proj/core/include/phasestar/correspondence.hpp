#pragma once

#include "phasestar/ccr.hpp"
#include "phasestar/exact.hpp"
#include "phasestar/phase.hpp"

namespace phasestar {

/// Ordering parameter s (real rational) and ħ.
struct SContext {
  Rational s{0};
  Rational hbar{1};

  /// Throws DomainError unless hbar > 0.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Transforms between operators and phase-space symbols.
// ---------------------------------------------------------------------------

/// s-parameterized symbol of F: decompose F in the s-ordered basis and replace each
/// {(a†)^m a^n}_s by (α*)^m α^n.
PhasePoly cg(const OperatorPoly& F, const SContext& ctx);

/// s-ordered quantization: Σ f_mn {(a†)^m a^n}_s. Exact inverse of cg.
OperatorPoly icg(const PhasePoly& f, const SContext& ctx);

// ---------------------------------------------------------------------------
// Star products. Both are evaluated as terminating bidifferential series
//   Σ_{j,k} w_j w'_k / (j! k!) · (∂^j ∂*^k F) (∂*^j ∂^k G)
// whose (j, k) term carries total derivative order j + k.
// ---------------------------------------------------------------------------

/// f ⋆ₛ g with weights ((s+1)/2)^j ((s−1)/2)^k. cg(F·G) = cg(F) ⋆ₛ cg(G).
PhasePoly star(const PhasePoly& f, const PhasePoly& g, const SContext& ctx);

/// Terms of the ⋆ₛ series with min_order ≤ j + k ≤ max_order.
PhasePoly star_series(const PhasePoly& f, const PhasePoly& g, const SContext& ctx, unsigned min_order,
                      unsigned max_order);

/// F ⋆̂ₛ G with weights (−(s+1)/2)^j (−(s−1)/2)^k and operator products of formal
/// derivatives. icg(f g) = icg(f) ⋆̂ₛ icg(g); the product is commutative and associative.
OperatorPoly hstar(const OperatorPoly& F, const OperatorPoly& G, const SContext& ctx);

/// Terms of the ⋆̂ₛ series with min_order ≤ j + k ≤ max_order.
OperatorPoly hstar_series(const OperatorPoly& F, const OperatorPoly& G, const SContext& ctx,
                          unsigned min_order, unsigned max_order);

/// ⊙, the hatted star product at s = 0.
OperatorPoly odot(const OperatorPoly& F, const OperatorPoly& G);

// ---------------------------------------------------------------------------
// Brackets.
// ---------------------------------------------------------------------------

/// (1/(iħ)) (f ⋆ₛ g − g ⋆ₛ f).
PhasePoly star_commutator(const PhasePoly& f, const PhasePoly& g, const SContext& ctx);

/// star_commutator restricted to series terms of total derivative order ≤ max_order.
/// At max_order = 1 this is exactly the Poisson bracket.
PhasePoly star_commutator_truncated(const PhasePoly& f, const PhasePoly& g, const SContext& ctx,
                                    unsigned max_order);

/// (1/(iħ)) (∂F/∂a ⋆̂ₛ ∂G/∂a† − ∂F/∂a† ⋆̂ₛ ∂G/∂a); equals icg({f, g}) for F = icg(f), G = icg(g).
OperatorPoly deformed_bracket(const OperatorPoly& F, const OperatorPoly& G, const SContext& ctx);

/// icg({f, g}) − (1/(iħ)) [icg(f), icg(g)]. Zero iff the pair quantizes canonically at s.
OperatorPoly nogo_witness(const PhasePoly& f, const PhasePoly& g, const SContext& ctx);

// ---------------------------------------------------------------------------
// Representation shifts.
// ---------------------------------------------------------------------------

/// Re-expresses a from_s symbol as the to_s symbol of the same operator:
/// exp(((to − from)/2) ∂α∂α*) f, so that shift_phase(cg(F, t), t, s) = cg(F, s).
PhasePoly shift_phase(const PhasePoly& f, const Rational& from_s, const Rational& to_s);

/// exp(−((to − from)/2) ∂a∂a†) F, so that shift_operator(icg(f, t), t, s) = icg(f, s).
OperatorPoly shift_operator(const OperatorPoly& F, const Rational& from_s, const Rational& to_s);

// ---------------------------------------------------------------------------
// Bopp forms.
// ---------------------------------------------------------------------------

/// One Hilbert-space Bopp superoperator applied to X:
///   RIGHT: B_a X = aX − (s+1)/2 ∂→a† X,   B_a† X = a†X − (s−1)/2 ∂→a X
///   LEFT:  B_a X = Xa − (s−1)/2 X ∂←a†,   B_a† X = Xa† − (s+1)/2 X ∂←a
/// with the directional derivatives realized as commutators (adjoint_deriv).
OperatorPoly hsbs(const OperatorPoly& X, Ladder var, Side side, const Rational& s);

/// f(B_a, B_a†) applied to G. Both sides equal icg(f) ⋆̂ₛ G.
OperatorPoly hsbs_apply(const PhasePoly& f, const OperatorPoly& G, const SContext& ctx, Side side);

/// One phase-space Bopp operator applied to g:
///   RIGHT: B_α g = αg + (s+1)/2 ∂α* g,   B_α* g = α*g + (s−1)/2 ∂α g
///   LEFT:  B_α g = gα + (s−1)/2 ∂α* g,   B_α* g = gα* + (s+1)/2 ∂α g
PhasePoly psbo(const PhasePoly& g, PhaseVar var, Side side, const Rational& s);

/// cg(F) ⋆ₛ g = cg(F · icg(g)) evaluated with Bopp operators.
/// RIGHT applies F(Bᴿ_α, Bᴿ_α*) to g in the ordering of F's normal form; LEFT applies
/// icg(g)(Bᴸ_α, Bᴸ_α*) to cg(F). Both sides return the same polynomial.
PhasePoly psbo_apply(const OperatorPoly& F, const PhasePoly& g, const SContext& ctx, Side side);

}  // namespace phasestar
