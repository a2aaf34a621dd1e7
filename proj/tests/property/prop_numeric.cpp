// Numeric properties of the truncated Fock realization and of quasiprobability grids.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "oracles.hpp"

namespace {

using namespace phasestar;
using phasestar::testing::max_abs_block;
using phasestar::testing::PolyGen;
using cd = std::complex<double>;

std::vector<cd> square_grid(double half_width, int steps) {
  std::vector<cd> out;
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      const double x = -half_width + 2.0 * half_width * i / (steps - 1);
      const double y = -half_width + 2.0 * half_width * j / (steps - 1);
      out.emplace_back(x, y);
    }
  }
  return out;
}

TEST(FockProperty, TraceOracleAgreesWithStarProduct) {
  PolyGen gen(51);
  const std::vector<cd> grid = square_grid(1.5, 7);
  for (const Rational& s : {Rational(0), Rational(1, 2), Rational(1)}) {
    const SContext ctx{s, Rational(1)};
    for (int c = 0; c < 6; ++c) {
      const OperatorPoly F = gen.op(3, 3), G = gen.op(3, 3);
      const PhasePoly symbol = star(cg(F, ctx), cg(G, ctx), ctx);
      const std::vector<cd> numeric = cg_numeric(multiply(F, G), s, grid, 60);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        EXPECT_LE(std::abs(numeric[k] - eval(symbol, grid[k])), 1e-4) << "s=" << s << " case " << c << " at "
                                                                        << grid[k];
      }
    }
  }
}

TEST(FockProperty, DisplacementIsUnitaryAwayFromTheEdge) {
  const std::size_t N = 40;
  for (const cd alpha : square_grid(1.5 / std::numbers::sqrt2, 5)) {
    const ComplexMatrix D = displacement(alpha, N).matrix();
    const ComplexMatrix residual = D.adjoint() * D - ComplexMatrix::Identity(N, N);
    EXPECT_LE(max_abs_block(residual, N - 8), 1e-10) << alpha;
  }
}

TEST(FockProperty, HatStarMatchesCommutatorSeries) {
  PolyGen gen(52);
  const std::size_t N = 40;
  const ComplexMatrix a = ladder(N).first.matrix();
  for (const Rational& s : {Rational(-1), Rational(0), Rational(1, 2), Rational(1)}) {
    for (int c = 0; c < 8; ++c) {
      const OperatorPoly F = gen.op(3, 3), G = gen.op(3, 3);
      const ComplexMatrix symbolic = op_to_matrix(hstar(F, G, SContext{s, Rational(1)}), N).matrix();
      const ComplexMatrix series = phasestar::testing::hstar_matrix_series(
          op_to_matrix(F, N).matrix(), op_to_matrix(G, N).matrix(), s.to_double(), a, 6);
      EXPECT_LE(max_abs_block(symbolic - series, N / 2), 1e-10) << "s=" << s << " case " << c;
    }
  }
}

class GridProperty : public ::testing::Test {
 protected:
  static constexpr std::size_t kDim = 60;
  const GridSpec standard{};

  static std::vector<FockMatrix> states() {
    std::vector<FockMatrix> out;
    for (const char* text : {"fock:0", "fock:1", "fock:3", "coherent:1,0", "coherent:-0.5,1.2", "cat:1.5,0"}) {
      out.push_back(state_build(StateSpec::parse(text), kDim));
    }
    return out;
  }
};

TEST_F(GridProperty, HermitianStatesGiveRealDistributions) {
  for (const FockMatrix& rho : states()) {
    for (const Rational& s : {Rational(0), Rational(-1, 2), Rational(-1)}) {
      const GridField W = quasiprob(rho, s, standard);
      double worst = 0.0;
      for (const cd v : W.values) worst = std::max(worst, std::abs(v.imag()));
      EXPECT_LE(worst, 1e-8);
    }
  }
}

TEST_F(GridProperty, SingleExcitationIsNegativeOnlyBeforeSmoothing) {
  const FockMatrix rho = state_build(StateSpec::parse("fock:1"), kDim);
  const GridField W = quasiprob(rho, Rational(0), standard);
  EXPECT_LT(W.at(40, 40).real(), 0.0);
  const GridField Q = gaussian_smooth(W, Rational(0), Rational(-1));
  for (const cd v : Q.values) EXPECT_GE(v.real(), -1e-6);
}

TEST_F(GridProperty, DistributionsAreNormalized) {
  for (const FockMatrix& rho : states()) {
    for (const Rational& s : {Rational(0), Rational(-1)}) {
      EXPECT_NEAR(integrate_grid(quasiprob(rho, s, standard)).real(), 1.0, 1e-3);
    }
  }
}

}  // namespace
