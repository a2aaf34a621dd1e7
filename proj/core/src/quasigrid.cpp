#include "phasestar/quasigrid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <thread>

#include "phasestar/error.hpp"

namespace phasestar {

namespace {

using cd = std::complex<double>;

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw ParseError("invalid number '" + std::string(text) + "'", 0);
  }
  return value;
}

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("invalid integer '" + std::string(text) + "'", 0);
  return value;
}

cd parse_point(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("expected 're,im' but got '" + std::string(text) + "'", 0);
  return {parse_double(parts[0]), parse_double(parts[1])};
}

void check_density(const FockMatrix& rho) {
  const auto& m = rho.matrix();
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * scale) throw DomainError("density matrix is not Hermitian");
  if (std::abs(m.trace() - cd(1.0, 0.0)) > 1e-8) throw DomainError("density matrix trace is not 1");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) throw DomainError("density matrix is not positive semidefinite");
}

FockMatrix pure(const ComplexVector& psi) {
  const ComplexVector v = psi / psi.norm();
  return FockMatrix(v * v.adjoint());
}

struct EigenPair {
  double weight;
  cd phase;  // 1 for the Hermitian part, i for the anti-Hermitian part
  ComplexVector vector;
};

// ρ = H₁ + i H₂ with H₁, H₂ Hermitian, each expanded in its eigenbasis.
std::vector<EigenPair> spectral_terms(const ComplexMatrix& rho) {
  std::vector<EigenPair> out;
  const ComplexMatrix parts[2] = {0.5 * (rho + rho.adjoint()), cd(0.0, -0.5) * (rho - rho.adjoint())};
  const cd phases[2] = {cd(1.0, 0.0), cd(0.0, 1.0)};
  for (int p = 0; p < 2; ++p) {
    const double size = parts[p].cwiseAbs().maxCoeff();
    if (size == 0.0) continue;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(parts[p]);
    const double cutoff = 1e-15 * solver.eigenvalues().cwiseAbs().maxCoeff();
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
      const double lambda = solver.eigenvalues()(k);
      if (std::abs(lambda) <= cutoff) continue;
      out.push_back({lambda, phases[p], solver.eigenvectors().col(k)});
    }
  }
  return out;
}

unsigned worker_count(unsigned requested, std::size_t rows) {
  unsigned n = requested == 0 ? std::max(1U, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(rows, 1)));
}

std::vector<double> gaussian_weights(double sigma, double delta) {
  const auto half = static_cast<std::ptrdiff_t>(std::ceil(6.0 * sigma / delta));
  std::vector<double> w(static_cast<std::size_t>(2 * half + 1));
  double total = 0.0;
  for (std::ptrdiff_t k = -half; k <= half; ++k) {
    const double x = static_cast<double>(k) * delta;
    w[static_cast<std::size_t>(k + half)] = std::exp(-x * x / (2.0 * sigma * sigma));
    total += w[static_cast<std::size_t>(k + half)];
  }
  for (double& x : w) x /= total;
  return w;
}

double smoothing_sigma(const Rational& from_s, const Rational& to_s) {
  return std::sqrt((from_s - to_s).to_double() / 4.0);
}

}  // namespace

void GridSpec::validate() const {
  if (!(std::isfinite(re_min) && std::isfinite(re_max) && std::isfinite(im_min) && std::isfinite(im_max))) {
    throw DomainError("grid bounds must be finite");
  }
  if (!(re_max > re_min) || !(im_max > im_min)) throw DomainError("grid requires max > min on both axes");
  if (steps_re < 8 || steps_im < 8) throw DomainError("grid requires at least 8 steps per axis");
}

GridSpec GridSpec::parse(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 6) throw ParseError("grid must be 'remin,remax,immin,immax,nre,nim'", 0);
  GridSpec g{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]),
             parse_double(parts[3]), parse_count(parts[4]), parse_count(parts[5])};
  g.validate();
  return g;
}

std::complex<double> GridSpec::point(std::size_t ire, std::size_t iim) const {
  return {re_min + static_cast<double>(ire) * delta_re(), im_min + static_cast<double>(iim) * delta_im()};
}

double GridSpec::radius() const {
  const double re = std::max(std::abs(re_min), std::abs(re_max));
  const double im = std::max(std::abs(im_min), std::abs(im_max));
  return std::hypot(re, im);
}

GridField::GridField(GridSpec s, std::vector<std::complex<double>> v) : spec(s), values(std::move(v)) {
  if (values.size() != spec.size()) throw DomainError("grid value count does not match spec");
}

StateSpec StateSpec::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("state must be kind:args", 0);
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  StateSpec out;
  if (kind == "fock") {
    out.kind = Kind::FOCK;
    out.n = parse_count(args);
  } else if (kind == "coherent") {
    out.kind = Kind::COHERENT;
    out.alpha0 = parse_point(args);
  } else if (kind == "cat") {
    out.kind = Kind::CAT;
    out.alpha0 = parse_point(args);
  } else if (kind == "file") {
    out.kind = Kind::FILE;
    out.path = std::string(args);
    if (out.path.empty()) throw ParseError("empty state file path", colon + 1);
  } else {
    throw ParseError("unknown state kind '" + std::string(kind) + "'", 0);
  }
  return out;
}

FockMatrix state_build(const StateSpec& state, std::size_t N) {
  if (N < 2) throw DomainError("Fock dimension must be at least 2");
  const auto dim = static_cast<Eigen::Index>(N);
  const double bound = static_cast<double>(N) / 4.0;
  switch (state.kind) {
    case StateSpec::Kind::FOCK: {
      if (state.n >= N) throw DomainError("Fock level must be below the dimension");
      ComplexVector psi = ComplexVector::Zero(dim);
      psi(static_cast<Eigen::Index>(state.n)) = 1.0;
      return pure(psi);
    }
    case StateSpec::Kind::COHERENT:
      if (std::abs(state.alpha0) > bound) throw DomainError("coherent amplitude exceeds N/4");
      return pure(coherent_amplitudes(state.alpha0, N));
    case StateSpec::Kind::CAT:
      if (std::abs(state.alpha0) > bound) throw DomainError("cat amplitude exceeds N/4");
      if (state.alpha0 == cd(0.0, 0.0)) throw DomainError("cat amplitude must be nonzero");
      return pure(coherent_amplitudes(state.alpha0, N) + coherent_amplitudes(-state.alpha0, N));
    case StateSpec::Kind::FILE: {
      std::ifstream in(state.path);
      if (!in) throw DomainError("cannot open state file '" + state.path + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      FockMatrix rho = density_from_json(buffer.str());
      check_density(rho);
      return rho;
    }
  }
  throw DomainError("unknown state kind");
}

GridField quasiprob(const FockMatrix& rho, const Rational& s, const GridSpec& grid, unsigned threads) {
  grid.validate();
  if (s.sign() > 0) throw DomainError("quasiprobabilities are supported for s <= 0 only");
  const std::size_t N = rho.dim();
  if (grid.radius() > static_cast<double>(N) / 4.0) throw DomainError("grid extends beyond |alpha| = N/4");

  const double u = s.to_double();
  const double scale = 2.0 / (1.0 - u) / std::numbers::pi;
  const double q = (u + 1.0) / (u - 1.0);
  const PaddedDisplacement engine(PaddedDisplacement::padded_dim(N, grid.radius()));
  const std::vector<EigenPair> terms = spectral_terms(rho.matrix());

  // W(α) = (scale) Σ λ Σ_k q^k |(D(α)† ψ)_k|².
  std::vector<double> weights(engine.dim());
  double w = scale;
  for (auto& x : weights) {
    x = w;
    w *= q;
  }
  const std::size_t kmax = q == 0.0 ? 1 : weights.size();

  std::vector<cd> values(grid.size());
  auto work = [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t ire = row_begin; ire < row_end; ++ire) {
      for (std::size_t iim = 0; iim < grid.steps_im; ++iim) {
        const cd alpha = grid.point(ire, iim);
        cd total = 0.0;
        for (const auto& t : terms) {
          const ComplexVector v = engine.apply_adjoint(alpha, t.vector);
          double acc = 0.0;
          for (std::size_t k = 0; k < kmax; ++k) acc += weights[k] * std::norm(v(static_cast<Eigen::Index>(k)));
          total += t.weight * t.phase * acc;
        }
        values[ire * grid.steps_im + iim] = total;
      }
    }
  };

  const unsigned workers = worker_count(threads, grid.steps_re);
  if (workers == 1) {
    work(0, grid.steps_re);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.steps_re + workers - 1) / workers;
    for (unsigned t = 0; t < workers; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(grid.steps_re, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return GridField(grid, std::move(values));
}

GridField gaussian_smooth(const GridField& field, const Rational& from_s, const Rational& to_s) {
  if (to_s > from_s) throw DomainError("smoothing only lowers the ordering parameter (to_s < from_s)");
  if (to_s == from_s) return field;
  const GridSpec& g = field.spec;
  const double sigma = smoothing_sigma(from_s, to_s);

  // Separable: along Re (stride steps_im) then along Im; samples beyond the grid count as zero.
  auto pass = [&](const std::vector<cd>& in, bool along_re) {
    const std::vector<double> w = gaussian_weights(sigma, along_re ? g.delta_re() : g.delta_im());
    const auto half = static_cast<std::ptrdiff_t>(w.size() / 2);
    const auto nre = static_cast<std::ptrdiff_t>(g.steps_re);
    const auto nim = static_cast<std::ptrdiff_t>(g.steps_im);
    std::vector<cd> out(in.size());
    for (std::ptrdiff_t i = 0; i < nre; ++i) {
      for (std::ptrdiff_t j = 0; j < nim; ++j) {
        cd acc = 0.0;
        for (std::ptrdiff_t k = -half; k <= half; ++k) {
          const std::ptrdiff_t ii = along_re ? i + k : i;
          const std::ptrdiff_t jj = along_re ? j : j + k;
          if (ii < 0 || ii >= nre || jj < 0 || jj >= nim) continue;
          acc += w[static_cast<std::size_t>(k + half)] * in[static_cast<std::size_t>(ii * nim + jj)];
        }
        out[static_cast<std::size_t>(i * nim + j)] = acc;
      }
    }
    return out;
  };
  return GridField(g, pass(pass(field.values, true), false));
}

Interior certified_interior(const GridSpec& grid, const Rational& from_s, const Rational& to_s) {
  const double sigma = to_s < from_s ? smoothing_sigma(from_s, to_s) : 0.0;
  const auto margin_re = static_cast<std::size_t>(std::ceil(4.0 * sigma / grid.delta_re()));
  const auto margin_im = static_cast<std::size_t>(std::ceil(4.0 * sigma / grid.delta_im()));
  Interior out;
  out.re_lo = margin_re;
  out.im_lo = margin_im;
  out.re_hi = grid.steps_re > margin_re ? grid.steps_re - 1 - margin_re : 0;
  out.im_hi = grid.steps_im > margin_im ? grid.steps_im - 1 - margin_im : 0;
  if (2 * margin_re >= grid.steps_re) out.re_lo = out.re_hi + 1;
  if (2 * margin_im >= grid.steps_im) out.im_lo = out.im_hi + 1;
  return out;
}

std::complex<double> integrate_grid(const GridField& field) {
  cd total = 0.0;
  for (const auto& v : field.values) total += v;
  return total * field.spec.delta_re() * field.spec.delta_im();
}

void write_csv(const GridField& field, std::ostream& os) {
  os << "re_alpha,im_alpha,re_value,im_value\n";
  char line[160];
  for (std::size_t ire = 0; ire < field.spec.steps_re; ++ire) {
    for (std::size_t iim = 0; iim < field.spec.steps_im; ++iim) {
      const cd alpha = field.spec.point(ire, iim);
      const cd v = field.at(ire, iim);
      std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", alpha.real(), alpha.imag(), v.real(), v.imag());
      os << line;
    }
  }
}

}  // namespace phasestar
