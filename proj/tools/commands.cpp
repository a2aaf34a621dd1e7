#include "commands.hpp"

#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace phasestar::cli {

CommandResult CommandResult::failure(std::string diagnostic, int code) {
  CommandResult out;
  out.status = Status::ERROR;
  out.diagnostics.push_back(std::move(diagnostic));
  out.exit_code = code;
  return out;
}

namespace {

template <class Poly>
CommandResult render(const Poly& p, Format format) {
  CommandResult out;
  out.payload = (format == Format::JSON ? to_json(p) : print_canonical(p)) + "\n";
  return out;
}

// Library errors become exit code 1; anything else is a bug and propagates.
template <class Fn>
CommandResult guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return CommandResult::failure(std::string("parse error: ") + e.what());
  } catch (const Error& e) {
    return CommandResult::failure(std::string("error: ") + e.what());
  }
}

SContext context(const std::string& s, const std::string& hbar = "1") {
  SContext ctx{Rational::parse(s), Rational::parse(hbar)};
  ctx.validate();
  return ctx;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

CommandResult cmd_quantize(const std::string& expr, const std::string& s, Format format) {
  return guarded([&] { return render(icg(parse_phase(expr), context(s)), format); });
}

CommandResult cmd_dequantize(const std::string& expr, const std::string& s, Format format) {
  return guarded([&] { return render(cg(parse_operator(expr), context(s)), format); });
}

CommandResult cmd_star(const std::string& f, const std::string& g, const std::string& s, bool hatted,
                       Format format) {
  return guarded([&] {
    const SContext ctx = context(s);
    if (hatted) return render(hstar(parse_operator(f), parse_operator(g), ctx), format);
    return render(star(parse_phase(f), parse_phase(g), ctx), format);
  });
}

CommandResult cmd_bracket(BracketKind kind, const std::string& f, const std::string& g, const std::string& s,
                          const std::string& hbar, Format format) {
  return guarded([&] {
    const SContext ctx = context(s, hbar);
    switch (kind) {
      case BracketKind::POISSON:
        return render(poisson(parse_phase(f), parse_phase(g), ctx.hbar), format);
      case BracketKind::STAR:
        return render(star_commutator(parse_phase(f), parse_phase(g), ctx), format);
      case BracketKind::DEFORMED:
        break;
    }
    return render(deformed_bracket(parse_operator(f), parse_operator(g), ctx), format);
  });
}

CommandResult cmd_wigner(const WignerOptions& options) {
  return guarded([&] {
    const Rational s = Rational::parse(options.s);
    const GridSpec grid = options.grid.empty() ? GridSpec{} : GridSpec::parse(options.grid);
    grid.validate();
    const FockMatrix rho = state_build(StateSpec::parse(options.state), options.dim);
    const GridField field = quasiprob(rho, s, grid);
    const std::complex<double> integral = integrate_grid(field);

    CommandResult out;
    if (options.out.empty()) {
      std::ostringstream csv;
      write_csv(field, csv);
      out.payload = csv.str();
    } else {
      std::ofstream file(options.out);
      if (!file) return CommandResult::failure("error: cannot open " + options.out + " for writing");
      write_csv(field, file);
      file.close();
      if (!file) return CommandResult::failure("error: failed writing " + options.out);
      if (options.format == Format::JSON) {
        const nlohmann::json summary = {{"out", options.out}, {"integral", integral.real()}};
        out.payload = summary.dump() + "\n";
      } else {
        out.payload = options.out + "\n";
      }
    }
    out.diagnostics.push_back("integral = " + format_double(integral.real()));
    if (!rho.warning().empty()) out.diagnostics.push_back("warning: " + rho.warning());
    return out;
  });
}

}  // namespace phasestar::cli
