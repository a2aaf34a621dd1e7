#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace phasestar;
using phasestar::testing::PolyGen;

namespace {

PhasePoly mono(unsigned m, unsigned n, ExactComplex c = ExactComplex(1)) { return PhasePoly::monomial(m, n, c); }
const PhasePoly al = phase::alpha();
const PhasePoly als = phase::alphastar();

}  // namespace

TEST(PhaseArithmetic, Examples) {
  EXPECT_EQ(al * als, mono(1, 1));
  EXPECT_EQ(pow(al + als, 2), mono(0, 2) + mono(1, 1, 2) + mono(2, 0));
  PolyGen gen(1);
  for (int t = 0; t < 10; ++t) {
    const PhasePoly f = gen.phase(6);
    EXPECT_EQ(phase::one() * f, f);
    EXPECT_EQ(pow(f, 0), phase::one());
  }
}

TEST(PhaseDeriv, Examples) {
  EXPECT_EQ(deriv(mono(1, 2), PhaseVar::ALPHA), mono(1, 1, 2));
  EXPECT_TRUE(deriv(mono(0, 2), PhaseVar::ALPHASTAR).is_zero());
  EXPECT_EQ(deriv(deriv(mono(1, 1), PhaseVar::ALPHA), PhaseVar::ALPHASTAR), phase::one());
}

TEST(Poisson, Examples) {
  EXPECT_EQ(poisson(al, als), PhasePoly::constant(-ExactComplex::i()));
  EXPECT_EQ(poisson(mono(1, 1), al), mono(0, 1, ExactComplex::i()));
  PolyGen gen(2);
  for (int t = 0; t < 20; ++t) {
    const PhasePoly f = gen.phase(5);
    EXPECT_TRUE(poisson(f, f).is_zero());
  }
}

TEST(Poisson, HbarScalesInversely) {
  EXPECT_EQ(poisson(al, als, Rational(2)), PhasePoly::constant(ExactComplex(Rational(0), Rational(-1, 2))));
  EXPECT_THROW(poisson(al, als, Rational(0)), DomainError);
}

TEST(Eval, Examples) {
  EXPECT_NEAR(std::abs(eval(mono(1, 1), {1.0, 1.0}) - 2.0), 0.0, 1e-15);
  EXPECT_EQ(eval(PhasePoly::constant(Rational(5, 2)), {0.3, -7.0}), std::complex<double>(2.5, 0.0));
  EXPECT_NEAR(std::abs(eval(mono(0, 2), {0.0, 1.0}) - (-1.0)), 0.0, 1e-15);
  EXPECT_EQ(eval(PhasePoly(), {1.0, 2.0}), std::complex<double>(0.0, 0.0));
}

TEST(Quadratures, Examples) {
  const ExactComplex half(Rational(1, 2));
  EXPECT_EQ(quad_to_alpha(QuadPoly::monomial(1, 0)), (al + als) * half);
  // QP = (α+α*)(α−α*)/(4i)
  const PhasePoly expected = (al + als) * (al - als) * ExactComplex(Rational(0), Rational(-1, 4));
  EXPECT_EQ(quad_to_alpha(QuadPoly::monomial(1, 1)), expected);
  EXPECT_EQ(alpha_to_quad(al), QuadPoly::monomial(1, 0) + QuadPoly::monomial(0, 1, ExactComplex::i()));
}

TEST(Quadratures, RoundTrip) {
  PolyGen gen(3);
  for (int t = 0; t < 30; ++t) {
    const PhasePoly f = gen.phase(6);
    EXPECT_EQ(quad_to_alpha(alpha_to_quad(f)), f);
    const QuadPoly g = gen.poly<QuadTag>(5);
    EXPECT_EQ(alpha_to_quad(quad_to_alpha(g)), g);
  }
}

TEST(QuadFrame, Validates) {
  EXPECT_NO_THROW((QuadFrame{Rational(1), Rational(2)}.validate()));
  EXPECT_THROW((QuadFrame{Rational(0), Rational(1)}.validate()), DomainError);
  EXPECT_THROW((QuadFrame{Rational(1), Rational(-1)}.validate()), DomainError);
}

TEST(Conj, SwapsExponentsAndConjugates) {
  const PhasePoly f = mono(2, 1, ExactComplex(Rational(1), Rational(3)));
  EXPECT_EQ(conj(f), mono(1, 2, ExactComplex(Rational(1), Rational(-3))));
  const std::complex<double> z(0.4, -1.1);
  EXPECT_NEAR(std::abs(eval(conj(f), z) - std::conj(eval(f, z))), 0.0, 1e-13);
}
