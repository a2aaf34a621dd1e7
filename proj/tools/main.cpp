#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace phasestar::cli;

const std::map<std::string, Format> kFormats = {{"text", Format::TEXT}, {"json", Format::JSON}};
const std::map<std::string, BracketKind> kKinds = {
    {"poisson", BracketKind::POISSON}, {"star", BracketKind::STAR}, {"deformed", BracketKind::DEFORMED}};

int emit(const CommandResult& result) {
  std::cout << result.payload << std::flush;
  for (const std::string& d : result.diagnostics) std::cerr << d << "\n";
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact phase-space quantization toolkit"};
  app.require_subcommand(1);

  std::string s = "0";
  std::string hbar = "1";
  std::string grid;
  std::string out;
  std::size_t dim = 60;
  std::uint64_t seed = 0;
  Format format = Format::TEXT;

  auto add_s = [&](CLI::App* sub) { sub->add_option("--s", s, "ordering parameter, rational (e.g. 1/2, -1)"); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->transform(CLI::CheckedTransformer(kFormats));
  };

  std::string f_text;
  std::string g_text;

  CLI::App* quantize = app.add_subcommand("quantize", "s-ordered quantization of a phase-space polynomial");
  quantize->add_option("expr", f_text, "phase-space expression in al, als, Q, P")->required();
  add_s(quantize);
  add_format(quantize);

  CLI::App* dequantize = app.add_subcommand("dequantize", "s-parameterized symbol of an operator");
  dequantize->add_option("expr", f_text, "operator expression in a, ad")->required();
  add_s(dequantize);
  add_format(dequantize);

  bool hatted = false;
  CLI::App* star_cmd = app.add_subcommand("star", "star product of two symbols, or the hatted product of operators");
  star_cmd->add_option("f", f_text)->required();
  star_cmd->add_option("g", g_text)->required();
  star_cmd->add_flag("--hatted", hatted, "operator-side product");
  add_s(star_cmd);
  add_format(star_cmd);

  BracketKind kind = BracketKind::POISSON;
  CLI::App* bracket = app.add_subcommand("bracket", "Poisson, star or deformed bracket");
  bracket->add_option("--kind", kind)->required()->transform(CLI::CheckedTransformer(kKinds));
  bracket->add_option("f", f_text)->required();
  bracket->add_option("g", g_text)->required();
  bracket->add_option("--hbar", hbar, "rational, > 0");
  add_s(bracket);
  add_format(bracket);

  std::string state;
  CLI::App* wigner = app.add_subcommand("wigner", "quasiprobability grid of a state, s <= 0");
  wigner->add_option("--state", state, "fock:n | coherent:re,im | cat:re,im | file:path")->required();
  wigner->add_option("--grid", grid, "remin,remax,immin,immax,nre,nim");
  wigner->add_option("--dim", dim, "Fock truncation");
  wigner->add_option("--out", out, "CSV destination (default stdout)");
  add_s(wigner);
  add_format(wigner);

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(verify_suites()));
  verify->add_option("--seed", seed);
  verify->add_option("--dim", dim, "Fock truncation for numeric suites");
  verify->add_option("--grid", grid, "grid for the grids suite");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*quantize) return emit(cmd_quantize(f_text, s, format));
  if (*dequantize) return emit(cmd_dequantize(f_text, s, format));
  if (*star_cmd) return emit(cmd_star(f_text, g_text, s, hatted, format));
  if (*bracket) return emit(cmd_bracket(kind, f_text, g_text, s, hbar, format));
  if (*wigner) return emit(cmd_wigner({state, s, grid, dim, out, format}));
  return emit(cmd_verify({suite, seed, dim, grid, format}));
}
