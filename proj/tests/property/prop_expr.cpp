// Printer/parser round trips and parser robustness on random token soup.

#include <gtest/gtest.h>

#include <array>
#include <random>
#include <string>
#include <string_view>

#include "oracles.hpp"

namespace {

using namespace phasestar;
using phasestar::testing::PolyGen;

TEST(ExprProperty, CanonicalTextRoundTrips) {
  PolyGen gen(41);
  for (int c = 0; c < 300; ++c) {
    const OperatorPoly F = gen.op(8);
    const std::string op_text = print_canonical(F);
    EXPECT_EQ(std::get<OperatorPoly>(lower(parse(op_text, ExprContext::OPERATOR), ExprContext::OPERATOR)), F)
        << op_text;
    const PhasePoly f = gen.phase(8);
    const std::string ph_text = print_canonical(f);
    EXPECT_EQ(std::get<PhasePoly>(lower(parse(ph_text, ExprContext::PHASE), ExprContext::PHASE)), f) << ph_text;
  }
}

bool has_adjacent_digits(std::string_view s) {
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (std::isdigit(static_cast<unsigned char>(s[k - 1])) && std::isdigit(static_cast<unsigned char>(s[k]))) {
      return true;
    }
  }
  return false;
}

TEST(ExprProperty, ParserIsTotal) {
  static constexpr std::array<std::string_view, 24> kTokens = {
      "a", "ad", "al", "als", "Q", "P", "i", "+", "-", "*", "^", "(", ")",
      "[", "]", ",", "/", " ", "0", "1", "2", "3", "x", "(("};
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> pick(0, kTokens.size() - 1);
  std::uniform_int_distribution<int> length(0, 40);
  int parsed = 0;
  for (int c = 0; c < 20000; ++c) {
    std::string text;
    const int count = length(rng);
    for (int k = 0; k < count && text.size() < 64; ++k) text += kTokens[pick(rng)];
    if (text.size() > 64) text.resize(64);
    for (ExprContext ctx : {ExprContext::OPERATOR, ExprContext::PHASE}) {
      try {
        const Expr ast = parse(text, ctx);
        ++parsed;
        // Single-digit exponents keep lowering cheap; the lowering must still be total.
        if (!has_adjacent_digits(text)) (void)lower(ast, ctx);
      } catch (const ParseError& e) {
        EXPECT_LE(e.offset(), text.size()) << text;
      } catch (const std::exception& e) {
        ADD_FAILURE() << "unexpected exception for \"" << text << "\": " << e.what();
      }
    }
  }
  EXPECT_GT(parsed, 0);
}

TEST(ExprProperty, DeepNestingIsRejectedNotCrashed) {
  const std::string deep = std::string(5000, '(') + "a" + std::string(5000, ')');
  EXPECT_THROW(parse(deep, ExprContext::OPERATOR), ParseError);
}

}  // namespace
