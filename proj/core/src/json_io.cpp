#include "phasestar/json_io.hpp"

#include "json.hpp"
#include "phasestar/error.hpp"

namespace phasestar {

namespace {

template <class Tag>
std::string dump(const TermPoly<Tag>& p, const char* kind) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"m", e.m}, {"n", e.n}, {"re", c.re().to_string()}, {"im", c.im().to_string()}});
  }
  nlohmann::json doc;
  doc["kind"] = kind;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

template <class Tag>
TermPoly<Tag> read_terms(const nlohmann::json& terms) {
  TermPoly<Tag> out;
  for (const auto& t : terms) {
    const auto m = t.at("m").get<unsigned>();
    const auto n = t.at("n").get<unsigned>();
    const Rational re = Rational::parse(t.value("re", std::string("0")));
    const Rational im = Rational::parse(t.value("im", std::string("0")));
    out.add_term(m, n, ExactComplex(re, im));
  }
  return out;
}

}  // namespace

std::string to_json(const OperatorPoly& p) { return dump(p, "operator"); }
std::string to_json(const PhasePoly& p) { return dump(p, "phase"); }

Lowered poly_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid polynomial JSON: ") + e.what(), e.byte);
  }
  try {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "operator") return read_terms<OperatorTag>(doc.at("terms"));
    if (kind == "phase") return read_terms<PhaseTag>(doc.at("terms"));
    throw ParseError("unknown polynomial kind '" + kind + "'", 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what(), 0);
  }
}

}  // namespace phasestar
