// Property suites behind `verify`. Every case draws its inputs from a generator seeded by
// (seed, property name, case index), so a failure report pins down a single reproducible case.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string_view>

#include "commands.hpp"
#include "json.hpp"

namespace phasestar::cli {

namespace {

using cd = std::complex<double>;

const std::vector<Rational>& parameters() {
  static const std::vector<Rational> kParams = {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2),
                                                Rational(1)};
  return kParams;
}

std::uint32_t fnv1a(std::string_view text) {
  std::uint32_t h = 2166136261U;
  for (char c : text) h = (h ^ static_cast<unsigned char>(c)) * 16777619U;
  return h;
}

/// Random polynomials with small integer coefficients, optionally imaginary parts.
class Sampler {
 public:
  explicit Sampler(std::mt19937_64& rng) : rng_(rng) {}

  ExactComplex coefficient() {
    std::uniform_int_distribution<int> small(-3, 3);
    const Rational re(small(rng_));
    const Rational im = std::uniform_int_distribution<int>(0, 1)(rng_) ? Rational(small(rng_)) : Rational(0);
    return {re, im};
  }

  template <class Tag>
  TermPoly<Tag> poly(unsigned max_degree, unsigned max_terms = 5) {
    TermPoly<Tag> out;
    const unsigned terms = std::uniform_int_distribution<unsigned>(1, max_terms)(rng_);
    for (unsigned t = 0; t < terms; ++t) {
      const unsigned d = std::uniform_int_distribution<unsigned>(0, max_degree)(rng_);
      const unsigned m = std::uniform_int_distribution<unsigned>(0, d)(rng_);
      out.add_term(m, d - m, coefficient());
    }
    return out;
  }
  PhasePoly phase(unsigned max_degree, unsigned max_terms = 5) { return poly<PhaseTag>(max_degree, max_terms); }
  OperatorPoly op(unsigned max_degree, unsigned max_terms = 5) { return poly<OperatorTag>(max_degree, max_terms); }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  const Rational& parameter() {
    return parameters()[std::uniform_int_distribution<std::size_t>(0, parameters().size() - 1)(rng_)];
  }

  cd point(double radius) {
    const double r = radius * std::sqrt(std::uniform_real_distribution<double>(0.0, 1.0)(rng_));
    return std::polar(r, std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng_));
  }

 private:
  std::mt19937_64& rng_;
};

std::string show(const PhasePoly& p) { return print_canonical(p); }
std::string show(const OperatorPoly& p) { return print_canonical(p); }
std::string show(const cd& z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g)", z.real(), z.imag());
  return buf;
}
std::string show(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// Collects per-property counts. A check returns an empty string on success, otherwise a
/// description of the failing inputs.
class Report {
 public:
  using Check = std::function<std::string(Sampler&)>;

  Report(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {}

  void property(const std::string& name, std::size_t cases, const Check& check) {
    std::size_t passed = 0;
    std::vector<std::string> failures;
    for (std::size_t k = 0; k < cases; ++k) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32), fnv1a(name),
                        static_cast<std::uint32_t>(k)};
      std::mt19937_64 rng(seq);
      Sampler sampler(rng);
      const std::string problem = check(sampler);
      if (problem.empty()) {
        ++passed;
      } else {
        failures.push_back("case " + std::to_string(k) + ": " + problem);
      }
    }
    total_cases_ += cases;
    total_failures_ += failures.size();
    rows_.push_back({name, cases, passed, std::move(failures)});
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  CommandResult finish(Format format) const {
    CommandResult out;
    if (format == Format::JSON) {
      nlohmann::json doc = {{"suite", suite_}, {"seed", seed_}, {"cases", total_cases_},
                            {"failures", total_failures_}, {"notes", notes_}};
      nlohmann::json props = nlohmann::json::array();
      for (const Row& r : rows_) {
        props.push_back({{"name", r.name}, {"cases", r.cases}, {"passed", r.passed}, {"failures", r.failures}});
      }
      doc["properties"] = props;
      out.payload = doc.dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "suite " << suite_ << " (seed " << seed_ << ")\n";
      std::size_t width = 0;
      for (const Row& r : rows_) width = std::max(width, r.name.size());
      for (const Row& r : rows_) {
        os << "  " << (r.failures.empty() ? "ok   " : "FAIL ") << r.name << std::string(width - r.name.size() + 2, ' ')
           << r.passed << "/" << r.cases << "\n";
        const std::size_t shown = std::min<std::size_t>(r.failures.size(), 3);
        for (std::size_t k = 0; k < shown; ++k) os << "       " << r.failures[k] << "\n";
        if (r.failures.size() > shown) os << "       ... " << r.failures.size() - shown << " more\n";
      }
      for (const std::string& n : notes_) os << "  note: " << n << "\n";
      os << suite_ << ": " << rows_.size() << " properties, " << total_cases_ << " cases, " << total_failures_
         << " failures\n";
      out.payload = os.str();
    }
    if (total_failures_ > 0) {
      out.status = CommandResult::Status::ERROR;
      out.exit_code = 2;
      out.diagnostics.push_back("verify " + suite_ + ": " + std::to_string(total_failures_) +
                                " failing cases; rerun with --seed " + std::to_string(seed_) +
                                " to reproduce");
    }
    return out;
  }

 private:
  struct Row {
    std::string name;
    std::size_t cases;
    std::size_t passed;
    std::vector<std::string> failures;
  };
  std::string suite_;
  std::uint64_t seed_;
  std::vector<Row> rows_;
  std::vector<std::string> notes_;
  std::size_t total_cases_ = 0;
  std::size_t total_failures_ = 0;
};

std::string at_s(const std::string& name, const Rational& s) { return name + " [s=" + s.to_string() + "]"; }
SContext ctx_of(const Rational& s, const Rational& hbar = Rational(1)) { return SContext{s, hbar}; }

void suite_roundtrip(Report& r) {
  for (const Rational& s : parameters()) {
    const SContext ctx = ctx_of(s);
    r.property(at_s("cg(icg(f)) = f", s), 50, [&](Sampler& g) {
      const PhasePoly f = g.phase(6);
      return cg(icg(f, ctx), ctx) == f ? "" : "f = " + show(f);
    });
    r.property(at_s("icg(cg(F)) = F", s), 50, [&](Sampler& g) {
      const OperatorPoly F = g.op(6);
      return icg(cg(F, ctx), ctx) == F ? "" : "F = " + show(F);
    });
  }
}

void suite_star_homomorphism(Report& r) {
  for (const Rational& s : parameters()) {
    const SContext ctx = ctx_of(s);
    r.property(at_s("cg(F) * cg(G) = cg(FG)", s), 30, [&](Sampler& g) {
      const OperatorPoly F = g.op(6, 4), G = g.op(6, 4);
      return star(cg(F, ctx), cg(G, ctx), ctx) == cg(multiply(F, G), ctx) ? ""
                                                                           : "F = " + show(F) + ", G = " + show(G);
    });
    r.property(at_s("star is associative", s), 15, [&](Sampler& g) {
      const PhasePoly a = g.phase(4, 3), b = g.phase(4, 3), c = g.phase(4, 3);
      return star(star(a, b, ctx), c, ctx) == star(a, star(b, c, ctx), ctx)
                 ? ""
                 : "f = " + show(a) + ", g = " + show(b) + ", h = " + show(c);
    });
    r.property(at_s("al * als - als * al = 1", s), 1, [&](Sampler&) {
      const PhasePoly d = star(phase::alpha(), phase::alphastar(), ctx) - star(phase::alphastar(), phase::alpha(), ctx);
      return d == phase::one() ? "" : "difference = " + show(d);
    });
  }
}

void suite_hstar_homomorphism(Report& r) {
  for (const Rational& s : parameters()) {
    const SContext ctx = ctx_of(s);
    r.property(at_s("icg(f) ^* icg(g) = icg(fg)", s), 30, [&](Sampler& g) {
      const PhasePoly f = g.phase(6, 4), h = g.phase(6, 4);
      return hstar(icg(f, ctx), icg(h, ctx), ctx) == icg(f * h, ctx) ? "" : "f = " + show(f) + ", g = " + show(h);
    });
    r.property(at_s("hatted star is commutative and associative", s), 15, [&](Sampler& g) {
      const OperatorPoly A = g.op(4, 3), B = g.op(4, 3), C = g.op(4, 3);
      const bool ok = hstar(A, B, ctx) == hstar(B, A, ctx) &&
                      hstar(hstar(A, B, ctx), C, ctx) == hstar(A, hstar(B, C, ctx), ctx);
      return ok ? "" : "F = " + show(A) + ", G = " + show(B) + ", H = " + show(C);
    });
    r.property(at_s("[a,ad] ^* F = F", s), 20, [&](Sampler& g) {
      const OperatorPoly F = g.op(6);
      return hstar(parse_operator("[a,ad]"), F, ctx) == F ? "" : "F = " + show(F);
    });
  }
}

void suite_bopp(Report& r) {
  for (const Rational& s : parameters()) {
    const SContext ctx = ctx_of(s);
    r.property(at_s("hsbs_apply(f, G) = icg(f) ^* G, both sides", s), 20, [&](Sampler& g) {
      const PhasePoly f = g.phase(4, 4);
      const OperatorPoly G = g.op(4, 4);
      const OperatorPoly expected = hstar(icg(f, ctx), G, ctx);
      const bool ok = hsbs_apply(f, G, ctx, Side::RIGHT) == expected && hsbs_apply(f, G, ctx, Side::LEFT) == expected;
      return ok ? "" : "f = " + show(f) + ", G = " + show(G);
    });
    r.property(at_s("psbo_apply(F, g) = star form, both sides", s), 20, [&](Sampler& g) {
      const OperatorPoly F = g.op(4, 4);
      const PhasePoly h = g.phase(4, 4);
      const bool ok = psbo_apply(F, h, ctx, Side::RIGHT) == star(cg(F, ctx), h, ctx) &&
                      psbo_apply(F, h, ctx, Side::LEFT) == star(cg(F, ctx), h, ctx);
      return ok ? "" : "F = " + show(F) + ", g = " + show(h);
    });
    r.property(at_s("Hilbert-space Bopp superoperators commute", s), 10, [&](Sampler& g) {
      const OperatorPoly G = g.op(5);
      for (Ladder v1 : {Ladder::A, Ladder::ADAG}) {
        for (Side s1 : {Side::LEFT, Side::RIGHT}) {
          for (Ladder v2 : {Ladder::A, Ladder::ADAG}) {
            for (Side s2 : {Side::LEFT, Side::RIGHT}) {
              if (hsbs(hsbs(G, v1, s1, s), v2, s2, s) != hsbs(hsbs(G, v2, s2, s), v1, s1, s)) return "G = " + show(G);
            }
          }
        }
      }
      return std::string();
    });
    r.property(at_s("phase-space Bopp operators obey the CCR", s), 20, [&](Sampler& g) {
      const PhasePoly h = g.phase(5);
      const PhasePoly ccr =
          psbo(psbo(h, PhaseVar::ALPHASTAR, Side::RIGHT, s), PhaseVar::ALPHA, Side::RIGHT, s) -
          psbo(psbo(h, PhaseVar::ALPHA, Side::RIGHT, s), PhaseVar::ALPHASTAR, Side::RIGHT, s);
      return ccr == h ? "" : "g = " + show(h);
    });
  }
}

void suite_shifts(Report& r) {
  r.property("shift composition u -> s -> t", 100, [&](Sampler& g) {
    const Rational u = g.parameter(), s = g.parameter(), t = g.parameter();
    const PhasePoly f = g.phase(6);
    const bool ok = shift_phase(shift_phase(f, u, s), s, t) == shift_phase(f, u, t) &&
                    shift_operator(shift_operator(icg(f, ctx_of(u)), u, s), s, t) == icg(f, ctx_of(t));
    return ok ? "" : "u = " + u.to_string() + ", s = " + s.to_string() + ", t = " + t.to_string() + ", f = " + show(f);
  });
  r.property("operator and phase shifts agree through cg/icg", 100, [&](Sampler& g) {
    const Rational s = g.parameter(), t = g.parameter();
    const PhasePoly f = g.phase(6);
    const OperatorPoly F = g.op(6);
    const bool ok = shift_operator(icg(f, ctx_of(t)), t, s) == icg(f, ctx_of(s)) &&
                    shift_phase(cg(F, ctx_of(t)), t, s) == cg(F, ctx_of(s));
    return ok ? "" : "s = " + s.to_string() + ", t = " + t.to_string() + ", f = " + show(f) + ", F = " + show(F);
  });
}

void suite_brackets(Report& r) {
  for (const Rational& s : parameters()) {
    r.property(at_s("order-(0,0) star term = fg", s), 20, [&](Sampler& g) {
      const PhasePoly f = g.phase(5), h = g.phase(5);
      return star_series(f, h, ctx_of(s), 0, 0) == f * h ? "" : "f = " + show(f) + ", g = " + show(h);
    });
    r.property(at_s("first-order star commutator = Poisson", s), 20, [&](Sampler& g) {
      const PhasePoly f = g.phase(5), h = g.phase(5);
      const Rational hbar(g.integer(1, 3), 2);
      const SContext ctx = ctx_of(s, hbar);
      return star_commutator_truncated(f, h, ctx, 1) == poisson(f, h, hbar) ? "" : "f = " + show(f) + ", g = " + show(h);
    });
    r.property(at_s("F ^* G - FG has only orders j+k >= 1", s), 20, [&](Sampler& g) {
      const OperatorPoly F = g.op(5), G = g.op(5);
      const SContext ctx = ctx_of(s);
      return hstar(F, G, ctx) - multiply(F, G) == hstar_series(F, G, ctx, 1, 64) ? ""
                                                                                  : "F = " + show(F) + ", G = " + show(G);
    });
    r.property(at_s("deformed bracket two-path identity", s), 20, [&](Sampler& g) {
      const PhasePoly f = g.phase(5), h = g.phase(5);
      const SContext ctx = ctx_of(s);
      const OperatorPoly F = icg(f, ctx), G = icg(h, ctx);
      const OperatorPoly two_path = (hstar(formal_deriv(F, Ladder::A), formal_deriv(G, Ladder::ADAG), ctx) -
                                     hstar(formal_deriv(F, Ladder::ADAG), formal_deriv(G, Ladder::A), ctx)) *
                                    (ExactComplex(1) / ExactComplex::i());
      const bool ok = icg(poisson(f, h), ctx) == two_path && deformed_bracket(F, G, ctx) == two_path;
      return ok ? "" : "f = " + show(f) + ", g = " + show(h);
    });
  }
}

std::vector<PhasePoly> monomials_up_to(unsigned degree) {
  std::vector<PhasePoly> out;
  for (unsigned d = 0; d <= degree; ++d) {
    for (unsigned m = 0; m <= d; ++m) out.push_back(PhasePoly::monomial(m, d - m));
  }
  return out;
}

void suite_nogo(Report& r) {
  const PhasePoly cube = pow(phase::alpha(), 3);
  const PhasePoly cube_star = pow(phase::alphastar(), 3);
  for (const Rational& s : parameters()) {
    const SContext ctx = ctx_of(s);
    const OperatorPoly residual = nogo_witness(cube, cube_star, ctx);
    r.property(at_s("(al^3, als^3) residual is nonzero", s), 1,
               [&](Sampler&) { return residual.is_zero() ? std::string("residual vanished") : std::string(); });
    r.note("residual(al^3, als^3) at s=" + s.to_string() + ": " + show(residual));

    const std::vector<PhasePoly> low = monomials_up_to(2);
    r.property(at_s("pairs with degree sum <= 2 have zero residual", s), 1, [&](Sampler&) {
      for (const PhasePoly& f : low) {
        for (const PhasePoly& h : low) {
          if (f.degree() + h.degree() > 2) continue;
          const OperatorPoly w = nogo_witness(f, h, ctx);
          if (!w.is_zero()) return "f = " + show(f) + ", g = " + show(h) + ", residual = " + show(w);
        }
      }
      return std::string();
    });
  }
  r.property("quadratic pairs have zero residual at s=0", 1, [&](Sampler&) {
    const std::vector<PhasePoly> low = monomials_up_to(2);
    for (const PhasePoly& f : low) {
      for (const PhasePoly& h : low) {
        const OperatorPoly w = nogo_witness(f, h, ctx_of(Rational(0)));
        if (!w.is_zero()) return "f = " + show(f) + ", g = " + show(h) + ", residual = " + show(w);
      }
    }
    return std::string();
  });
  const PhasePoly sq = pow(phase::alpha(), 2), sq_star = pow(phase::alphastar(), 2);
  for (const Rational& s : {Rational(-1), Rational(1)}) {
    r.note("residual(al^2, als^2) at s=" + s.to_string() + ": " + show(nogo_witness(sq, sq_star, ctx_of(s))));
  }
}

void suite_oracle(Report& r, std::size_t N) {
  for (const Rational& s : {Rational(0), Rational(1, 2), Rational(1)}) {
    const SContext ctx = ctx_of(s);
    r.property(at_s("trace oracle matches star product within 1e-4", s), 3, [&](Sampler& g) {
      const OperatorPoly F = g.op(3, 3), G = g.op(3, 3);
      std::vector<cd> points;
      for (int k = 0; k < 16; ++k) points.push_back(g.point(1.5));
      const PhasePoly symbol = star(cg(F, ctx), cg(G, ctx), ctx);
      const std::vector<cd> numeric = cg_numeric(multiply(F, G), s, points, N);
      for (std::size_t k = 0; k < points.size(); ++k) {
        const double err = std::abs(numeric[k] - eval(symbol, points[k]));
        if (!(err <= 1e-4)) {
          return "F = " + show(F) + ", G = " + show(G) + ", alpha = " + show(points[k]) + ", error = " + show(err);
        }
      }
      return std::string();
    });
  }
  r.property("trace oracle of the identity is 1 within 1e-8", 5, [&](Sampler& g) {
    const cd p = g.point(1.5);
    const double err = std::abs(cg_numeric(op::identity(), Rational(0), {p}, N)[0] - 1.0);
    return err <= 1e-8 ? "" : "alpha = " + show(p) + ", error = " + show(err);
  });
  r.property("D(alpha) unitary on the N-8 block within 1e-10", 10, [&](Sampler& g) {
    const cd p = g.point(1.5);
    const ComplexMatrix D = displacement(p, N).matrix();
    const auto b = static_cast<Eigen::Index>(N - 8);
    const ComplexMatrix residual = (D.adjoint() * D - ComplexMatrix::Identity(D.rows(), D.cols())).topLeftCorner(b, b);
    const double err = residual.cwiseAbs().maxCoeff();
    return err <= 1e-10 ? "" : "alpha = " + show(p) + ", error = " + show(err);
  });
  r.property("tr T_u = 1 for u < 0 within 1e-6", 10, [&](Sampler& g) {
    const Rational u(-1, 1L << g.integer(0, 2));
    const cd p = g.point(1.5);
    const double err = std::abs(kernel_matrix(u, p, N).matrix().trace() - 1.0);
    return err <= 1e-6 ? "" : "u = " + u.to_string() + ", alpha = " + show(p) + ", error = " + show(err);
  });
  r.property("T_{-1} is the coherent projector within 1e-12", 10, [&](Sampler& g) {
    const cd p = g.point(1.5);
    const ComplexVector c = coherent_amplitudes(p, N);
    const double err = (kernel_matrix(Rational(-1), p, N).matrix() - c * c.adjoint()).cwiseAbs().maxCoeff();
    return err <= 1e-12 ? "" : "alpha = " + show(p) + ", error = " + show(err);
  });
}

void suite_grids(Report& r, std::size_t N, const GridSpec& grid) {
  const double pi = std::numbers::pi;
  r.property("vacuum Wigner matches (2/pi) e^{-2|a|^2} within 1e-6", 1, [&](Sampler&) {
    const GridField W = quasiprob(state_build(StateSpec::parse("fock:0"), N), Rational(0), grid);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.steps_re; ++i) {
      for (std::size_t j = 0; j < grid.steps_im; ++j) {
        err = std::max(err, std::abs(W.at(i, j) - 2.0 / pi * std::exp(-2.0 * std::norm(grid.point(i, j)))));
      }
    }
    return err <= 1e-6 ? "" : "max error " + show(err);
  });
  r.property("fock:1 Wigner at the origin = -2/pi within 1e-5", 1, [&](Sampler&) {
    const GridSpec small{-1.0, 1.0, -1.0, 1.0, 9, 9};
    const GridField W = quasiprob(state_build(StateSpec::parse("fock:1"), N), Rational(0), small);
    const double err = std::abs(W.at(4, 4) + 2.0 / pi);
    return err <= 1e-5 ? "" : "error " + show(err);
  });
  r.property("smoothed vacuum Husimi matches e^{-|a|^2}/pi within 2e-3 in the interior", 1, [&](Sampler&) {
    const GridField W = quasiprob(state_build(StateSpec::parse("fock:0"), N), Rational(0), grid);
    const GridField Q = gaussian_smooth(W, Rational(0), Rational(-1));
    const Interior in = certified_interior(grid, Rational(0), Rational(-1));
    if (in.empty()) return std::string("grid too small for a certified interior");
    double err = 0.0;
    for (std::size_t i = in.re_lo; i <= in.re_hi; ++i) {
      for (std::size_t j = in.im_lo; j <= in.im_hi; ++j) {
        err = std::max(err, std::abs(Q.at(i, j) - std::exp(-std::norm(grid.point(i, j))) / pi));
      }
    }
    return err <= 2e-3 ? "" : "max error " + show(err);
  });
  r.property("smoothed fock:1 Husimi is nonnegative", 1, [&](Sampler&) {
    const GridField W = quasiprob(state_build(StateSpec::parse("fock:1"), N), Rational(0), grid);
    const GridField Q = gaussian_smooth(W, Rational(0), Rational(-1));
    double lowest = 0.0;
    for (const cd v : Q.values) lowest = std::min(lowest, v.real());
    return lowest >= -1e-6 ? "" : "minimum " + show(lowest);
  });
  for (const char* state : {"fock:0", "fock:1", "coherent:1,0", "cat:1,0"}) {
    r.property(std::string("integral of ") + state + " is 1 within 1e-3, real within 1e-8", 1, [&](Sampler&) {
      const FockMatrix rho = state_build(StateSpec::parse(state), N);
      for (const Rational& s : {Rational(0), Rational(-1, 2), Rational(-1)}) {
        const GridField W = quasiprob(rho, s, grid);
        double imag = 0.0;
        for (const cd v : W.values) imag = std::max(imag, std::abs(v.imag()));
        const double err = std::abs(integrate_grid(W).real() - 1.0);
        if (err > 1e-3 || imag > 1e-8) {
          return "s = " + s.to_string() + ", integral error " + show(err) + ", max |Im| " + show(imag);
        }
      }
      return std::string();
    });
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> kSuites = {"roundtrip", "star-homomorphism", "hstar-homomorphism",
                                                   "bopp",      "shifts",            "brackets",
                                                   "nogo",      "oracle",            "grids"};
  return kSuites;
}

CommandResult cmd_verify(const VerifyOptions& options) {
  const auto& suites = verify_suites();
  if (std::find(suites.begin(), suites.end(), options.suite) == suites.end()) {
    return CommandResult::failure("error: unknown suite '" + options.suite + "'");
  }
  try {
    Report report(options.suite, options.seed);
    const std::string& s = options.suite;
    if (s == "roundtrip") suite_roundtrip(report);
    if (s == "star-homomorphism") suite_star_homomorphism(report);
    if (s == "hstar-homomorphism") suite_hstar_homomorphism(report);
    if (s == "bopp") suite_bopp(report);
    if (s == "shifts") suite_shifts(report);
    if (s == "brackets") suite_brackets(report);
    if (s == "nogo") suite_nogo(report);
    if (s == "oracle") suite_oracle(report, options.dim);
    if (s == "grids") {
      const GridSpec grid = options.grid.empty() ? GridSpec{} : GridSpec::parse(options.grid);
      grid.validate();
      suite_grids(report, options.dim, grid);
    }
    return report.finish(options.format);
  } catch (const Error& e) {
    return CommandResult::failure(std::string("error: ") + e.what());
  }
}

}  // namespace phasestar::cli
