#include "phasestar/fock.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "json.hpp"
#include "phasestar/error.hpp"

namespace phasestar {

namespace {

using cd = std::complex<double>;

void require_dim(std::size_t N) {
  if (N < 2) throw DomainError("Fock dimension must be at least 2");
}

std::string bound_warning(double magnitude, std::size_t N) {
  if (magnitude <= static_cast<double>(N) / 4.0) return {};
  std::ostringstream os;
  os << "|alpha| = " << magnitude << " exceeds N/4 = " << static_cast<double>(N) / 4.0
     << "; truncation error may be large";
  return os.str();
}

// Eigendecompositions are reused across calls on the same thread.
const PaddedDisplacement& cached_engine(std::size_t M) {
  thread_local std::map<std::size_t, PaddedDisplacement> cache;
  auto it = cache.find(M);
  if (it == cache.end()) it = cache.emplace(M, PaddedDisplacement(M)).first;
  return it->second;
}

}  // namespace

FockMatrix::FockMatrix(ComplexMatrix m, std::string warning) : m_(std::move(m)), warning_(std::move(warning)) {
  if (m_.rows() != m_.cols()) throw DomainError("Fock matrix must be square");
  require_dim(static_cast<std::size_t>(m_.rows()));
  if (!m_.allFinite()) throw DomainError("Fock matrix has non-finite entries");
}

FockMatrix FockMatrix::zero(std::size_t N) {
  require_dim(N);
  return FockMatrix(ComplexMatrix::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N)));
}

FockMatrix FockMatrix::identity(std::size_t N) {
  require_dim(N);
  return FockMatrix(ComplexMatrix::Identity(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N)));
}

std::pair<FockMatrix, FockMatrix> ladder(std::size_t N) {
  require_dim(N);
  const auto n = static_cast<Eigen::Index>(N);
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  ComplexMatrix adag = a.adjoint();
  return {FockMatrix(std::move(a)), FockMatrix(std::move(adag))};
}

FockMatrix op_to_matrix(const OperatorPoly& F, std::size_t N) {
  const auto [a, adag] = ladder(N);
  const auto n = static_cast<Eigen::Index>(N);
  std::map<unsigned, ComplexMatrix> a_pow;
  std::map<unsigned, ComplexMatrix> adag_pow;
  auto power = [&](std::map<unsigned, ComplexMatrix>& cache, const ComplexMatrix& base, unsigned k) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    ComplexMatrix out = ComplexMatrix::Identity(n, n);
    for (unsigned j = 0; j < k; ++j) out = out * base;
    cache.emplace(k, out);
    return out;
  };
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& [e, c] : F.terms()) {
    out += c.to_double() * (power(adag_pow, adag.matrix(), e.m) * power(a_pow, a.matrix(), e.n));
  }
  return FockMatrix(std::move(out));
}

FockMatrix displacement(std::complex<double> alpha, std::size_t N) {
  const auto [a, adag] = ladder(N);
  const ComplexMatrix generator = alpha * adag.matrix() - std::conj(alpha) * a.matrix();
  return FockMatrix(generator.exp(), bound_warning(std::abs(alpha), N));
}

PaddedDisplacement::PaddedDisplacement(std::size_t M) : M_(M) {
  require_dim(M);
  const auto m = static_cast<Eigen::Index>(M);
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index k = 1; k < m; ++k) {
    X(k - 1, k) = std::sqrt(static_cast<double>(k));
    X(k, k - 1) = X(k - 1, k);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(X);
  U_ = solver.eigenvectors();
  lambda_ = solver.eigenvalues();
}

std::size_t PaddedDisplacement::padded_dim(std::size_t N, double radius) {
  const double t = std::sqrt(static_cast<double>(N)) + std::abs(radius);
  return std::max<std::size_t>(N, static_cast<std::size_t>(std::ceil(t * t + 8.0 * t + 16.0)));
}

ComplexMatrix PaddedDisplacement::block(std::complex<double> alpha, std::size_t rows, std::size_t cols) const {
  if (rows > M_ || cols > M_) throw DomainError("requested block exceeds padded dimension");
  const double r = std::abs(alpha);
  const double phi = std::arg(alpha) + std::numbers::pi / 2.0;
  const auto nr = static_cast<Eigen::Index>(rows);
  const auto nc = static_cast<Eigen::Index>(cols);
  ComplexVector phases(lambda_.size());
  for (Eigen::Index l = 0; l < lambda_.size(); ++l) phases(l) = std::polar(1.0, -r * lambda_(l));
  const ComplexMatrix left = U_.topRows(nr).cast<cd>() * phases.asDiagonal();
  ComplexMatrix out = left * U_.topRows(nc).transpose().cast<cd>();
  for (Eigen::Index i = 0; i < nr; ++i) {
    for (Eigen::Index k = 0; k < nc; ++k) out(i, k) *= std::polar(1.0, phi * static_cast<double>(i - k));
  }
  return out;
}

ComplexVector PaddedDisplacement::apply_adjoint(std::complex<double> alpha, const ComplexVector& psi) const {
  const auto n = psi.size();
  if (static_cast<std::size_t>(n) > M_) throw DomainError("state exceeds padded dimension");
  const double r = std::abs(alpha);
  const double phi = std::arg(alpha) + std::numbers::pi / 2.0;
  // D† = e^{iφn̂} U e^{irΛ} Uᵀ e^{−iφn̂}; the real factors are applied to real and imaginary parts.
  Eigen::VectorXd w_re(n);
  Eigen::VectorXd w_im(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const cd w = psi(j) * std::polar(1.0, -phi * static_cast<double>(j));
    w_re(j) = w.real();
    w_im(j) = w.imag();
  }
  const Eigen::VectorXd y_re = U_.topRows(n).transpose() * w_re;
  const Eigen::VectorXd y_im = U_.topRows(n).transpose() * w_im;
  Eigen::VectorXd z_re(lambda_.size());
  Eigen::VectorXd z_im(lambda_.size());
  for (Eigen::Index l = 0; l < lambda_.size(); ++l) {
    const cd z = cd(y_re(l), y_im(l)) * std::polar(1.0, r * lambda_(l));
    z_re(l) = z.real();
    z_im(l) = z.imag();
  }
  const Eigen::VectorXd v_re = U_ * z_re;
  const Eigen::VectorXd v_im = U_ * z_im;
  ComplexVector out(v_re.size());
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    out(k) = cd(v_re(k), v_im(k)) * std::polar(1.0, phi * static_cast<double>(k));
  }
  return out;
}

FockMatrix kernel_matrix(const Rational& u, std::complex<double> alpha, std::size_t N) {
  require_dim(N);
  if (u.sign() > 0) throw DomainError("kernel parameter must be <= 0; s > 0 kernels are unsupported");
  const double ud = u.to_double();
  const double scale = 2.0 / (1.0 - ud);
  const double q = (ud + 1.0) / (ud - 1.0);
  const PaddedDisplacement& engine = cached_engine(PaddedDisplacement::padded_dim(N, std::abs(alpha)));
  const std::size_t cols = q == 0.0 ? 1 : engine.dim();
  const ComplexMatrix D = engine.block(alpha, N, cols);
  Eigen::VectorXd weights(static_cast<Eigen::Index>(cols));
  double w = scale;
  for (Eigen::Index k = 0; k < weights.size(); ++k, w *= q) weights(k) = w;
  ComplexMatrix T = D * weights.cast<cd>().asDiagonal() * D.adjoint();
  return FockMatrix(std::move(T), bound_warning(std::abs(alpha), N));
}

std::vector<std::complex<double>> cg_numeric(const OperatorPoly& F, const Rational& s,
                                             const std::vector<std::complex<double>>& alphas,
                                             std::size_t N) {
  require_dim(N);
  if (s.sign() < 0) throw DomainError("cg_numeric requires s >= 0 (kernel parameter -s <= 0)");
  const ComplexMatrix Fm = op_to_matrix(F, N).matrix();
  double radius = 0.0;
  for (const auto& a : alphas) radius = std::max(radius, std::abs(a));
  const PaddedDisplacement& engine = cached_engine(PaddedDisplacement::padded_dim(N, radius));

  // tr(F T_{−x}(α)) = (2/(1+x)) Σ_k q^k (D†FD)_kk with q = −(1−x)/(1+x).
  auto direct = [&](double x, cd alpha) {
    const double scale = 2.0 / (1.0 + x);
    const double q = -(1.0 - x) / (1.0 + x);
    std::size_t terms = 1;
    if (q != 0.0) {
      terms = static_cast<std::size_t>(std::ceil(std::log(1e-18) / std::log(std::abs(q)))) + 1;
      terms = std::min(terms, engine.dim());
    }
    const ComplexMatrix D = engine.block(alpha, N, terms);
    const ComplexMatrix FD = Fm * D;
    cd sum = 0.0;
    double w = scale;
    for (Eigen::Index k = 0; k < D.cols(); ++k, w *= q) sum += w * D.col(k).dot(FD.col(k));
    return sum;
  };

  const double sd = s.to_double();
  std::vector<cd> out;
  out.reserve(alphas.size());
  if (sd >= 0.5) {
    for (const auto& a : alphas) out.push_back(direct(sd, a));
    return out;
  }
  const unsigned nodes = F.degree() / 2 + 1;
  std::vector<double> xs(nodes);
  for (unsigned j = 0; j < nodes; ++j) {
    xs[j] = 0.75 + 0.25 * std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * nodes));
  }
  for (const auto& a : alphas) {
    cd value = 0.0;
    for (unsigned j = 0; j < nodes; ++j) {
      double basis = 1.0;
      for (unsigned i = 0; i < nodes; ++i) {
        if (i != j) basis *= (sd - xs[i]) / (xs[j] - xs[i]);
      }
      value += basis * direct(xs[j], a);
    }
    out.push_back(value);
  }
  return out;
}

ComplexVector coherent_amplitudes(std::complex<double> alpha, std::size_t N) {
  ComplexVector out(static_cast<Eigen::Index>(N));
  cd amp = std::exp(-0.5 * std::norm(alpha));
  for (Eigen::Index n = 0; n < out.size(); ++n) {
    if (n > 0) amp *= alpha / std::sqrt(static_cast<double>(n));
    out(n) = amp;
  }
  return out;
}

FockMatrix density_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid density JSON: ") + e.what(), e.byte);
  }
  try {
    const long dim = doc.at("dim").get<long>();
    if (dim < 2) throw DomainError("density dim must be at least 2");
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (const auto& entry : doc.at("entries")) {
      const long row = entry.at("row").get<long>();
      const long col = entry.at("col").get<long>();
      if (row < 0 || col < 0 || row >= dim || col >= dim) throw DomainError("density entry index out of range");
      const double re = entry.value("re", 0.0);
      const double im = entry.value("im", 0.0);
      m(row, col) = cd(re, im);
    }
    return FockMatrix(std::move(m));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed density JSON: ") + e.what(), 0);
  }
}

std::string density_to_json(const FockMatrix& rho) {
  nlohmann::json doc;
  doc["dim"] = rho.dim();
  nlohmann::json entries = nlohmann::json::array();
  const auto& m = rho.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == cd(0.0, 0.0)) continue;
      entries.push_back({{"row", i}, {"col", j}, {"re", m(i, j).real()}, {"im", m(i, j).imag()}});
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

}  // namespace phasestar
