#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "phasestar/ccr.hpp"
#include "phasestar/exact.hpp"

namespace phasestar {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Dense N×N complex matrix in the truncated number basis |0⟩ … |N−1⟩.
class FockMatrix {
 public:
  /// Throws DomainError unless the matrix is square, N ≥ 2 and every entry is finite.
  explicit FockMatrix(ComplexMatrix m, std::string warning = {});

  static FockMatrix zero(std::size_t N);
  static FockMatrix identity(std::size_t N);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  std::complex<double> operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

  /// Non-empty when the result was produced outside its truncation sanity bound.
  const std::string& warning() const noexcept { return warning_; }

 private:
  ComplexMatrix m_;
  std::string warning_;
};

/// a[n−1, n] = √n and its conjugate transpose. N ≥ 2.
std::pair<FockMatrix, FockMatrix> ladder(std::size_t N);

/// Σ c_mn (a†)^m a^n with the truncated ladder matrices. Rows below N are exact.
FockMatrix op_to_matrix(const OperatorPoly& F, std::size_t N);

/// exp(α a† − α* a) on the truncated space. Tagged with a warning when |α| > N/4.
FockMatrix displacement(std::complex<double> alpha, std::size_t N);

/// Displacement matrix elements taken from a padded basis of dimension M, which keeps the
/// low-index block free of truncation error. Uses
///   D(α) = e^{iφ n̂} exp(−i r X) e^{−iφ n̂},  α = r e^{iθ}, φ = θ + π/2, X = a + a†,
/// with X diagonalized once as U Λ Uᵀ.
class PaddedDisplacement {
 public:
  explicit PaddedDisplacement(std::size_t M);

  /// Padding that keeps rows and columns below N accurate for displacements up to `radius`.
  static std::size_t padded_dim(std::size_t N, double radius);

  std::size_t dim() const noexcept { return M_; }

  /// D(α)[i, k] for i < rows, k < cols.
  ComplexMatrix block(std::complex<double> alpha, std::size_t rows, std::size_t cols) const;

  /// D(α)† ψ over all M padded indices; ψ occupies the leading entries.
  ComplexVector apply_adjoint(std::complex<double> alpha, const ComplexVector& psi) const;

 private:
  std::size_t M_;
  Eigen::MatrixXd U_;
  Eigen::VectorXd lambda_;
};

/// s-parameterized kernel T_u(α) = (2/(1−u)) D(α) q^{n̂} D(α)†, q = (u+1)/(u−1), for u ≤ 0.
/// T_0 is twice the displaced parity and T_{−1} = |α⟩⟨α|. u > 0 throws DomainError.
FockMatrix kernel_matrix(const Rational& u, std::complex<double> alpha, std::size_t N);

/// tr(F T_{−s}(α)) at each point, for s ≥ 0. For s < 1/2 the trace is analytically
/// continued from s ∈ [1/2, 1], where it converges absolutely; the symbol of a degree-d
/// operator is a polynomial of degree ⌊d/2⌋ in s, so the continuation is exact up to rounding.
std::vector<std::complex<double>> cg_numeric(const OperatorPoly& F, const Rational& s,
                                             const std::vector<std::complex<double>>& alphas,
                                             std::size_t N);

/// Coherent-state amplitudes e^{−|α|²/2} αⁿ/√n! for n < N.
ComplexVector coherent_amplitudes(std::complex<double> alpha, std::size_t N);

/// Density matrix from {"dim":N,"entries":[{"row":i,"col":j,"re":x,"im":y}]}; omitted
/// entries are zero. Throws ParseError or DomainError.
FockMatrix density_from_json(const std::string& text);
std::string density_to_json(const FockMatrix& rho);

}  // namespace phasestar
