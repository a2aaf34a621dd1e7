// Randomized identities for the operator/symbol correspondence, swept over the ordering parameter.

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using namespace phasestar;
using phasestar::testing::PolyGen;

class OrderingSweep : public ::testing::TestWithParam<Rational> {
 protected:
  SContext ctx() const { return SContext{GetParam(), Rational(1)}; }
  // Distinct stream per parameter value and test.
  std::uint64_t seed(std::uint64_t base) const {
    return base * 1000 + static_cast<std::uint64_t>((GetParam() * Rational(2)).to_double() + 10.0);
  }
};

TEST_P(OrderingSweep, RoundTripIsExact) {
  PolyGen gen(seed(1));
  for (int c = 0; c < 100; ++c) {
    const PhasePoly f = gen.phase(8);
    const OperatorPoly F = gen.op(8);
    EXPECT_EQ(cg(icg(f, ctx()), ctx()), f);
    EXPECT_EQ(icg(cg(F, ctx()), ctx()), F);
  }
}

TEST_P(OrderingSweep, StarRepresentsOperatorProduct) {
  PolyGen gen(seed(2));
  for (int c = 0; c < 60; ++c) {
    const OperatorPoly F = gen.op(6, 4), G = gen.op(6, 4);
    EXPECT_EQ(star(cg(F, ctx()), cg(G, ctx()), ctx()), cg(multiply(F, G), ctx())) << "case " << c;
  }
}

TEST_P(OrderingSweep, HatStarRepresentsSymbolProduct) {
  PolyGen gen(seed(3));
  for (int c = 0; c < 60; ++c) {
    const PhasePoly f = gen.phase(6, 4), g = gen.phase(6, 4);
    EXPECT_EQ(hstar(icg(f, ctx()), icg(g, ctx()), ctx()), icg(f * g, ctx())) << "case " << c;
  }
}

TEST_P(OrderingSweep, HatStarIsCommutativeAndAssociative) {
  PolyGen gen(seed(4));
  for (int c = 0; c < 40; ++c) {
    const OperatorPoly F = gen.op(4, 3), G = gen.op(4, 3), H = gen.op(4, 3);
    EXPECT_EQ(hstar(F, G, ctx()), hstar(G, F, ctx()));
    EXPECT_EQ(hstar(hstar(F, G, ctx()), H, ctx()), hstar(F, hstar(G, H, ctx()), ctx()));
  }
}

TEST_P(OrderingSweep, StarIsAssociativeButNotCommutative) {
  PolyGen gen(seed(5));
  for (int c = 0; c < 40; ++c) {
    const PhasePoly f = gen.phase(4, 3), g = gen.phase(4, 3), h = gen.phase(4, 3);
    EXPECT_EQ(star(star(f, g, ctx()), h, ctx()), star(f, star(g, h, ctx()), ctx()));
  }
  EXPECT_EQ(star(phase::alpha(), phase::alphastar(), ctx()) - star(phase::alphastar(), phase::alpha(), ctx()), phase::one());
}

TEST_P(OrderingSweep, BoppSuperoperatorsCommutePairwise) {
  PolyGen gen(seed(6));
  const Rational s = GetParam();
  for (int c = 0; c < 30; ++c) {
    const OperatorPoly G = gen.op(5);
    for (Ladder v1 : {Ladder::A, Ladder::ADAG}) {
      for (Side s1 : {Side::LEFT, Side::RIGHT}) {
        for (Ladder v2 : {Ladder::A, Ladder::ADAG}) {
          for (Side s2 : {Side::LEFT, Side::RIGHT}) {
            EXPECT_EQ(hsbs(hsbs(G, v1, s1, s), v2, s2, s), hsbs(hsbs(G, v2, s2, s), v1, s1, s));
          }
        }
      }
    }
  }
}

TEST_P(OrderingSweep, PhaseBoppOperatorsObeyCcr) {
  PolyGen gen(seed(7));
  const Rational s = GetParam();
  auto B = [&](const PhasePoly& g, PhaseVar v, Side side) { return psbo(g, v, side, s); };
  for (int c = 0; c < 50; ++c) {
    const PhasePoly g = gen.phase(5);
    const PhasePoly ccr = B(B(g, PhaseVar::ALPHASTAR, Side::RIGHT), PhaseVar::ALPHA, Side::RIGHT) -
                          B(B(g, PhaseVar::ALPHA, Side::RIGHT), PhaseVar::ALPHASTAR, Side::RIGHT);
    EXPECT_EQ(ccr, g);
    // Left-acting and right-acting operators commute; so does every same-variable pair.
    for (PhaseVar v1 : {PhaseVar::ALPHA, PhaseVar::ALPHASTAR}) {
      for (PhaseVar v2 : {PhaseVar::ALPHA, PhaseVar::ALPHASTAR}) {
        EXPECT_EQ(B(B(g, v1, Side::LEFT), v2, Side::RIGHT), B(B(g, v2, Side::RIGHT), v1, Side::LEFT));
      }
      for (Side a : {Side::LEFT, Side::RIGHT}) {
        for (Side b : {Side::LEFT, Side::RIGHT}) EXPECT_EQ(B(B(g, v1, a), v1, b), B(B(g, v1, b), v1, a));
      }
    }
  }
}

TEST_P(OrderingSweep, BoppAlternativeForms) {
  PolyGen gen(seed(8));
  for (int c = 0; c < 40; ++c) {
    const PhasePoly f = gen.phase(4, 4), g = gen.phase(4, 4);
    const OperatorPoly F = gen.op(4, 4), G = gen.op(4, 4);
    const OperatorPoly hat_path = hstar(icg(f, ctx()), G, ctx());
    EXPECT_EQ(hsbs_apply(f, G, ctx(), Side::RIGHT), hat_path);
    EXPECT_EQ(hsbs_apply(f, G, ctx(), Side::LEFT), hat_path);
    EXPECT_EQ(psbo_apply(F, g, ctx(), Side::RIGHT), star(cg(F, ctx()), g, ctx()));
    EXPECT_EQ(psbo_apply(F, g, ctx(), Side::LEFT), star(cg(F, ctx()), g, ctx()));
  }
}

TEST_P(OrderingSweep, ShiftsCompose) {
  PolyGen gen(seed(9));
  const Rational s = GetParam();
  const Rational params[] = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
  for (int c = 0; c < 10; ++c) {
    const PhasePoly f = gen.phase(6);
    const OperatorPoly F = gen.op(6);
    for (const Rational& u : params) {
      for (const Rational& t : params) {
        EXPECT_EQ(shift_phase(shift_phase(f, u, s), s, t), shift_phase(f, u, t));
        EXPECT_EQ(shift_operator(icg(f, SContext{t, Rational(1)}), t, s), icg(f, ctx()));
        EXPECT_EQ(shift_phase(cg(F, SContext{t, Rational(1)}), t, s), cg(F, ctx()));
      }
    }
  }
}

TEST_P(OrderingSweep, DeformationLeadingOrders) {
  PolyGen gen(seed(10));
  for (int c = 0; c < 50; ++c) {
    const PhasePoly f = gen.phase(5), g = gen.phase(5);
    EXPECT_EQ(star_series(f, g, ctx(), 0, 0), f * g);
    const SContext scaled{GetParam(), Rational(3, 2)};
    EXPECT_EQ(star_commutator_truncated(f, g, scaled, 1), poisson(f, g, scaled.hbar));

    const OperatorPoly F = gen.op(5), G = gen.op(5);
    EXPECT_EQ(hstar_series(F, G, ctx(), 0, 0), multiply(F, G));
    EXPECT_EQ(hstar(F, G, ctx()) - multiply(F, G), hstar_series(F, G, ctx(), 1, 64));
  }
}

TEST_P(OrderingSweep, DeformedBracketTwoPathIdentity) {
  PolyGen gen(seed(11));
  for (const Rational& hbar : {Rational(1), Rational(1, 2)}) {
    const SContext c2{GetParam(), hbar};
    const ExactComplex inv_ih = ExactComplex(Rational(1)) / (ExactComplex::i() * ExactComplex(hbar));
    for (int c = 0; c < 40; ++c) {
      const PhasePoly f = gen.phase(5), g = gen.phase(5);
      const OperatorPoly F = icg(f, c2), G = icg(g, c2);
      const OperatorPoly two_path =
          (hstar(formal_deriv(F, Ladder::A), formal_deriv(G, Ladder::ADAG), c2) -
           hstar(formal_deriv(F, Ladder::ADAG), formal_deriv(G, Ladder::A), c2)) *
          inv_ih;
      EXPECT_EQ(icg(poisson(f, g, hbar), c2), two_path);
      EXPECT_EQ(deformed_bracket(F, G, c2), two_path);
    }
  }
}

TEST_P(OrderingSweep, HermiticityIsTransported) {
  PolyGen gen(seed(12));
  for (int c = 0; c < 60; ++c) {
    const OperatorPoly raw = gen.op(6);
    const OperatorPoly F = raw + dagger(raw);
    const PhasePoly symbol = cg(F, ctx());
    EXPECT_EQ(conj(symbol), symbol);
  }
}

std::string parameter_name(const ::testing::TestParamInfo<Rational>& info) {
  static const char* const kNames[] = {"antinormal", "minus_half", "weyl", "plus_half", "normal"};
  return kNames[info.index];
}

INSTANTIATE_TEST_SUITE_P(Parameters, OrderingSweep,
                         ::testing::Values(Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)),
                         parameter_name);

}  // namespace
