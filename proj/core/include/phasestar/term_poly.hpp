#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <utility>

#include "phasestar/exact.hpp"

namespace phasestar {

/// Exponent pair (m, n): m is the exponent of the creation-like variable (a† or α*),
/// n that of the annihilation-like variable (a or α).
struct Exponents {
  unsigned m = 0;
  unsigned n = 0;

  unsigned total() const noexcept { return m + n; }
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Canonical term order: total degree descending, then m descending.
struct CanonicalOrder {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const noexcept {
    if (lhs.total() != rhs.total()) return lhs.total() > rhs.total();
    return lhs.m > rhs.m;
  }
};

/// Sparse coefficient map over (m, n) exponent pairs with no stored zeros.
/// `Tag` keeps operator and phase-space polynomials distinct types; the
/// algebra-specific products live with each tag.
template <class Tag>
class TermPoly {
 public:
  using Map = std::map<Exponents, ExactComplex, CanonicalOrder>;

  TermPoly() = default;

  static TermPoly constant(ExactComplex c) { return monomial(0, 0, std::move(c)); }
  static TermPoly monomial(unsigned m, unsigned n, ExactComplex c = ExactComplex(1)) {
    TermPoly p;
    p.add_term(m, n, std::move(c));
    return p;
  }

  const Map& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  ExactComplex coeff(unsigned m, unsigned n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? ExactComplex() : it->second;
  }

  /// Highest total degree m + n; 0 for the zero polynomial.
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.begin()->first.total(); }

  void add_term(unsigned m, unsigned n, const ExactComplex& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Exponents{m, n}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TermPoly& operator+=(const TermPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.m, e.n, c);
    return *this;
  }
  TermPoly& operator-=(const TermPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e.m, e.n, -c);
    return *this;
  }
  TermPoly& operator*=(const ExactComplex& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
  }

  TermPoly operator-() const {
    TermPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend TermPoly operator+(TermPoly lhs, const TermPoly& rhs) { return lhs += rhs; }
  friend TermPoly operator-(TermPoly lhs, const TermPoly& rhs) { return lhs -= rhs; }
  friend TermPoly operator*(TermPoly lhs, const ExactComplex& rhs) { return lhs *= rhs; }
  friend TermPoly operator*(const ExactComplex& lhs, TermPoly rhs) { return rhs *= lhs; }

  friend bool operator==(const TermPoly& lhs, const TermPoly& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  Map terms_;
};

}  // namespace phasestar
