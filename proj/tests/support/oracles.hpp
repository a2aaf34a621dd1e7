#pragma once

// Independent reference implementations used only by tests. None of these share code
// paths with the library beyond the polynomial containers.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "phasestar/phasestar.hpp"

namespace phasestar {

// Readable gtest failure messages.
inline void PrintTo(const OperatorPoly& p, std::ostream* os) { *os << print_canonical(p); }
inline void PrintTo(const PhasePoly& p, std::ostream* os) { *os << print_canonical(p); }

}  // namespace phasestar

namespace phasestar::testing {

// ---------------------------------------------------------------------------
// Random polynomials with small integer (optionally Gaussian-integer or half) coefficients.
// ---------------------------------------------------------------------------

class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  ExactComplex coefficient() {
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Rational re(small(rng_), den(rng_));
    Rational im = coin() ? Rational(small(rng_)) : Rational(0);
    return {re, im};
  }

  template <class Tag>
  TermPoly<Tag> poly(unsigned max_degree, unsigned max_terms = 6) {
    std::uniform_int_distribution<unsigned> count(1, max_terms);
    std::uniform_int_distribution<unsigned> total(0, max_degree);
    TermPoly<Tag> out;
    const unsigned terms = count(rng_);
    for (unsigned t = 0; t < terms; ++t) {
      const unsigned d = total(rng_);
      std::uniform_int_distribution<unsigned> split(0, d);
      const unsigned m = split(rng_);
      out.add_term(m, d - m, coefficient());
    }
    return out;
  }

  PhasePoly phase(unsigned max_degree, unsigned max_terms = 6) { return poly<PhaseTag>(max_degree, max_terms); }
  OperatorPoly op(unsigned max_degree, unsigned max_terms = 6) { return poly<OperatorTag>(max_degree, max_terms); }

  bool coin() { return std::uniform_int_distribution<int>(0, 1)(rng_) == 1; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Brute-force CCR rewriting: repeatedly replace the first "a a†" by "a† a + 1".
// ---------------------------------------------------------------------------

inline void rewrite_word(std::vector<Ladder> word, const ExactComplex& c, OperatorPoly& out) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == Ladder::A && word[i + 1] == Ladder::ADAG) {
      std::vector<Ladder> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      rewrite_word(std::move(swapped), c, out);
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(i), word.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      rewrite_word(std::move(word), c, out);
      return;
    }
  }
  unsigned m = 0;
  unsigned n = 0;
  for (Ladder l : word) (l == Ladder::ADAG ? m : n)++;
  out.add_term(m, n, c);
}

inline OperatorPoly brute_word(const std::vector<Ladder>& word, const ExactComplex& c = ExactComplex(1)) {
  OperatorPoly out;
  rewrite_word(word, c, out);
  return out;
}

inline std::vector<Ladder> normal_word(unsigned m, unsigned n) {
  std::vector<Ladder> w(m, Ladder::ADAG);
  w.insert(w.end(), n, Ladder::A);
  return w;
}

inline OperatorPoly brute_multiply(const OperatorPoly& F, const OperatorPoly& G) {
  OperatorPoly out;
  for (const auto& [ef, cf] : F.terms()) {
    for (const auto& [eg, cg] : G.terms()) {
      std::vector<Ladder> w = normal_word(ef.m, ef.n);
      const std::vector<Ladder> right = normal_word(eg.m, eg.n);
      w.insert(w.end(), right.begin(), right.end());
      rewrite_word(std::move(w), cf * cg, out);
    }
  }
  return out;
}

/// Symmetric (Weyl) ordering by averaging over every arrangement of m a† and n a letters.
inline OperatorPoly weyl_order_brute(unsigned m, unsigned n) {
  OperatorPoly out;
  unsigned count = 0;
  const unsigned total = m + n;
  for (std::uint32_t mask = 0; mask < (1U << total); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != m) continue;
    std::vector<Ladder> w;
    for (unsigned i = 0; i < total; ++i) w.push_back((mask >> i) & 1U ? Ladder::ADAG : Ladder::A);
    rewrite_word(std::move(w), ExactComplex(1), out);
    ++count;
  }
  return out * ExactComplex(Rational(1, static_cast<long>(count)));
}

/// Antinormal ordering a^n a†^m rewritten by brute force.
inline OperatorPoly antinormal_brute(unsigned m, unsigned n) {
  std::vector<Ladder> w(n, Ladder::A);
  w.insert(w.end(), m, Ladder::ADAG);
  return brute_word(w);
}

// ---------------------------------------------------------------------------
// Closed-form transforms.
// ---------------------------------------------------------------------------

inline Rational fact(unsigned n) {
  Rational out(1);
  for (unsigned k = 2; k <= n; ++k) out *= Rational(static_cast<long>(k));
  return out;
}

inline Rational choose(unsigned n, unsigned k) { return fact(n) / (fact(k) * fact(n - k)); }

/// cg of a normal-ordered polynomial: a†^m a^n ↦ Σ_k k! C(m,k) C(n,k) (−(1−s)/2)^k α*^{m−k} α^{n−k}.
inline PhasePoly cg_closed(const OperatorPoly& F, const Rational& s) {
  const Rational t = -(Rational(1) - s) / Rational(2);
  PhasePoly out;
  for (const auto& [e, c] : F.terms()) {
    Rational tk(1);
    for (unsigned k = 0; k <= std::min(e.m, e.n); ++k, tk *= t) {
      out.add_term(e.m - k, e.n - k, c * ExactComplex(fact(k) * choose(e.m, k) * choose(e.n, k) * tk));
    }
  }
  return out;
}

/// icg by the s-ordering expansion with the opposite sign of cg_closed.
inline OperatorPoly icg_closed(const PhasePoly& f, const Rational& s) {
  const Rational t = (Rational(1) - s) / Rational(2);
  OperatorPoly out;
  for (const auto& [e, c] : f.terms()) {
    Rational tk(1);
    for (unsigned k = 0; k <= std::min(e.m, e.n); ++k, tk *= t) {
      out.add_term(e.m - k, e.n - k, c * ExactComplex(fact(k) * choose(e.m, k) * choose(e.n, k) * tk));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrix-level oracles.
// ---------------------------------------------------------------------------

inline double max_abs_block(const ComplexMatrix& m, Eigen::Index size) {
  return m.topLeftCorner(size, size).cwiseAbs().maxCoeff();
}

/// F ⋆̂ₛ G as a terminating series with derivatives realized as matrix commutators:
/// ∂a X = −[a†, X], ∂a† X = [a, X].
inline ComplexMatrix hstar_matrix_series(const ComplexMatrix& F, const ComplexMatrix& G, double s,
                                         const ComplexMatrix& a, unsigned max_order) {
  const ComplexMatrix adag = a.adjoint();
  auto d_a = [&](const ComplexMatrix& X) -> ComplexMatrix { return -(adag * X - X * adag); };
  auto d_adag = [&](const ComplexMatrix& X) -> ComplexMatrix { return a * X - X * a; };
  const double wj = -(s + 1.0) / 2.0;
  const double wk = -(s - 1.0) / 2.0;
  ComplexMatrix out = ComplexMatrix::Zero(F.rows(), F.cols());
  std::vector<ComplexMatrix> F_j{F};  // ∂a^j F
  std::vector<ComplexMatrix> G_j{G};  // ∂a†^j G
  for (unsigned j = 1; j <= max_order; ++j) {
    F_j.push_back(d_a(F_j.back()));
    G_j.push_back(d_adag(G_j.back()));
  }
  double fj = 1.0;
  for (unsigned j = 0; j <= max_order; ++j) {
    if (j > 0) fj *= j;
    ComplexMatrix left = F_j[j];
    ComplexMatrix right = G_j[j];
    double fk = 1.0;
    for (unsigned k = 0; j + k <= max_order; ++k) {
      if (k > 0) {
        fk *= k;
        left = d_adag(left);
        right = d_a(right);
      }
      out += (std::pow(wj, j) * std::pow(wk, k) / (fj * fk)) * (left * right);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed-form quasiprobabilities.
// ---------------------------------------------------------------------------

inline double vacuum_wigner(std::complex<double> a) { return 2.0 / std::numbers::pi * std::exp(-2.0 * std::norm(a)); }
inline double vacuum_husimi(std::complex<double> a) { return std::exp(-std::norm(a)) / std::numbers::pi; }
inline double fock1_wigner(std::complex<double> a) {
  return -2.0 / std::numbers::pi * (1.0 - 4.0 * std::norm(a)) * std::exp(-2.0 * std::norm(a));
}
inline double coherent_wigner(std::complex<double> a, std::complex<double> a0) { return vacuum_wigner(a - a0); }

}  // namespace phasestar::testing
