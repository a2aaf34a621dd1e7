#pragma once

#include <complex>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phasestar/exact.hpp"
#include "phasestar/fock.hpp"

namespace phasestar {

/// Rectangular α-grid with inclusive endpoints: steps_re × steps_im points.
struct GridSpec {
  double re_min = -4.0;
  double re_max = 4.0;
  double im_min = -4.0;
  double im_max = 4.0;
  std::size_t steps_re = 81;
  std::size_t steps_im = 81;

  /// Throws DomainError unless max > min on both axes and both step counts are ≥ 8.
  void validate() const;

  /// Parses "remin,remax,immin,immax,nre,nim".
  static GridSpec parse(std::string_view text);

  double delta_re() const { return (re_max - re_min) / static_cast<double>(steps_re - 1); }
  double delta_im() const { return (im_max - im_min) / static_cast<double>(steps_im - 1); }
  std::complex<double> point(std::size_t ire, std::size_t iim) const;
  std::size_t size() const { return steps_re * steps_im; }
  /// Largest |α| on the grid.
  double radius() const;
};

/// values[ire * steps_im + iim] is the sample at point(ire, iim).
struct GridField {
  GridSpec spec;
  std::vector<std::complex<double>> values;

  GridField() = default;
  /// Throws DomainError when the value count does not match the spec.
  GridField(GridSpec s, std::vector<std::complex<double>> v);

  std::complex<double> at(std::size_t ire, std::size_t iim) const { return values[ire * spec.steps_im + iim]; }
};

struct StateSpec {
  enum class Kind { FOCK, COHERENT, CAT, FILE };
  Kind kind = Kind::FOCK;
  std::size_t n = 0;
  std::complex<double> alpha0{};
  std::string path;

  /// Parses "fock:n", "coherent:re,im", "cat:re,im" or "file:path".
  static StateSpec parse(std::string_view text);
};

/// Unit-trace positive semidefinite density matrix. FILE states keep the file's dimension.
/// Throws DomainError for n ≥ N, |α₀| > N/4, or a file that is not a valid density matrix.
FockMatrix state_build(const StateSpec& state, std::size_t N);

/// W(α) = (1/π) tr(ρ T_s(α)) for s ≤ 0: s = 0 is the Wigner function and s = −1 the
/// Husimi function. Throws DomainError for s > 0 or a grid reaching beyond |α| = N/4.
/// `threads` = 0 uses the hardware concurrency.
GridField quasiprob(const FockMatrix& rho, const Rational& s, const GridSpec& grid, unsigned threads = 0);

/// Carries a field from parameter from_s down to to_s by convolution with a normalized
/// Gaussian of variance (from_s − to_s)/4 per real coordinate. Equal parameters return the
/// input; to_s > from_s throws DomainError.
GridField gaussian_smooth(const GridField& field, const Rational& from_s, const Rational& to_s);

/// Index ranges [lo, hi] that lie at least four standard deviations from the grid edge.
struct Interior {
  std::size_t re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
  bool empty() const { return re_lo > re_hi || im_lo > im_hi; }
};
Interior certified_interior(const GridSpec& grid, const Rational& from_s, const Rational& to_s);

/// Σ value · Δre · Δim.
std::complex<double> integrate_grid(const GridField& field);

/// Header "re_alpha,im_alpha,re_value,im_value", row-major, 17 significant digits.
void write_csv(const GridField& field, std::ostream& os);

}  // namespace phasestar
