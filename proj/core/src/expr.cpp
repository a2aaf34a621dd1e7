#include "phasestar/expr.hpp"

#include <cctype>
#include <limits>

namespace phasestar {

namespace {

constexpr unsigned kMaxDepth = 200;

bool is_operator_symbol(Symbol s) { return s == Symbol::A || s == Symbol::ADAG; }
bool is_phase_symbol(Symbol s) {
  return s == Symbol::ALPHA || s == Symbol::ALPHASTAR || s == Symbol::Q || s == Symbol::P;
}

class Parser {
 public:
  Parser(std::string_view text, ExprContext context) : text_(text), context_(context) {}

  Expr run() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ == text_.size()) throw ParseError(std::string("expected '") + c + "' before end of input", pos_);
      throw ParseError(std::string("expected '") + c + "' but found '" + text_[pos_] + "'", pos_);
    }
    ++pos_;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) throw ParseError("expression nested too deeply", parser.pos_);
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  Expr expr() {
    DepthGuard guard(*this);
    skip_space();
    const std::size_t start = pos_;
    Expr first = term();
    if (!peek('+') && !peek('-')) return first;
    Expr sum;
    sum.kind = Expr::Kind::Sum;
    sum.offset = start;
    sum.children.push_back(std::move(first));
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_] == '-';
      const std::size_t op_at = pos_++;
      Expr next = term();
      if (minus) {
        Expr neg;
        neg.kind = Expr::Kind::Negate;
        neg.offset = op_at;
        neg.children.push_back(std::move(next));
        next = std::move(neg);
      }
      sum.children.push_back(std::move(next));
    }
    return sum;
  }

  Expr term() {
    skip_space();
    const std::size_t start = pos_;
    Expr first = factor();
    if (!peek('*')) return first;
    Expr product;
    product.kind = Expr::Kind::Product;
    product.offset = start;
    product.children.push_back(std::move(first));
    while (peek('*')) {
      ++pos_;
      product.children.push_back(factor());
    }
    return product;
  }

  Expr factor() {
    skip_space();
    const std::size_t start = pos_;
    Expr base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    const std::size_t digits_at = pos_;
    unsigned long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > kMaxExponent) throw ParseError("exponent overflow", digits_at);
      ++pos_;
    }
    if (pos_ == digits_at) throw ParseError("expected unsigned integer exponent", digits_at);
    Expr power;
    power.kind = Expr::Kind::Power;
    power.offset = start;
    power.exponent = static_cast<unsigned>(value);
    power.children.push_back(std::move(base));
    return power;
  }

  Expr primary() {
    DepthGuard guard(*this);
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (c == '[') {
      if (context_ != ExprContext::OPERATOR) throw ParseError("commutator in phase expression", start);
      ++pos_;
      Expr left = expr();
      expect(',');
      Expr right = expr();
      expect(']');
      Expr comm;
      comm.kind = Expr::Kind::Commutator;
      comm.offset = start;
      comm.children.push_back(std::move(left));
      comm.children.push_back(std::move(right));
      return comm;
    }
    if (c == '-') {
      ++pos_;
      Expr neg;
      neg.kind = Expr::Kind::Negate;
      neg.offset = start;
      neg.children.push_back(primary());
      return neg;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return symbol();
    throw ParseError(std::string("unexpected '") + c + "'", start);
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den_at = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den_at) throw ParseError("expected denominator", den_at);
    }
    Expr out;
    out.kind = Expr::Kind::Constant;
    out.offset = start;
    try {
      out.constant = ExactComplex(Rational::parse(text_.substr(start, pos_ - start)));
    } catch (const DivisionByZero&) {
      throw ParseError("zero denominator", start);
    }
    return out;
  }

  Expr symbol() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    Symbol s;
    if (name == "a") {
      s = Symbol::A;
    } else if (name == "ad") {
      s = Symbol::ADAG;
    } else if (name == "al") {
      s = Symbol::ALPHA;
    } else if (name == "als") {
      s = Symbol::ALPHASTAR;
    } else if (name == "Q") {
      s = Symbol::Q;
    } else if (name == "P") {
      s = Symbol::P;
    } else if (name == "i") {
      s = Symbol::I;
    } else {
      throw ParseError("unknown symbol '" + std::string(name) + "'", start);
    }
    if (context_ == ExprContext::OPERATOR && is_phase_symbol(s)) {
      throw ParseError("phase symbol in operator expression", start);
    }
    if (context_ == ExprContext::PHASE && is_operator_symbol(s)) {
      throw ParseError("operator symbol in phase expression", start);
    }
    Expr out;
    out.kind = Expr::Kind::Symbol;
    out.symbol = s;
    out.offset = start;
    return out;
  }

  std::string_view text_;
  ExprContext context_;
  std::size_t pos_ = 0;
  unsigned depth_ = 0;
};

OperatorPoly lower_operator(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum: {
      OperatorPoly out;
      for (const auto& child : e.children) out += lower_operator(child);
      return out;
    }
    case Expr::Kind::Product: {
      OperatorPoly out = op::identity();
      for (const auto& child : e.children) out = multiply(out, lower_operator(child));
      return out;
    }
    case Expr::Kind::Power: {
      const OperatorPoly base = lower_operator(e.children.front());
      OperatorPoly out = op::identity();
      for (unsigned k = 0; k < e.exponent; ++k) out = multiply(out, base);
      return out;
    }
    case Expr::Kind::Commutator:
      return commutator(lower_operator(e.children[0]), lower_operator(e.children[1]));
    case Expr::Kind::Symbol:
      switch (e.symbol) {
        case Symbol::A:
          return op::a();
        case Symbol::ADAG:
          return op::adag();
        case Symbol::I:
          return OperatorPoly::constant(ExactComplex::i());
        default:
          throw ParseError("phase symbol in operator expression", e.offset);
      }
    case Expr::Kind::Constant:
      return OperatorPoly::constant(e.constant);
    case Expr::Kind::Negate:
      return -lower_operator(e.children.front());
  }
  return {};
}

PhasePoly lower_phase(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum: {
      PhasePoly out;
      for (const auto& child : e.children) out += lower_phase(child);
      return out;
    }
    case Expr::Kind::Product: {
      PhasePoly out = phase::one();
      for (const auto& child : e.children) out = out * lower_phase(child);
      return out;
    }
    case Expr::Kind::Power:
      return pow(lower_phase(e.children.front()), e.exponent);
    case Expr::Kind::Commutator:
      throw ParseError("commutator in phase expression", e.offset);
    case Expr::Kind::Symbol:
      switch (e.symbol) {
        case Symbol::ALPHA:
          return phase::alpha();
        case Symbol::ALPHASTAR:
          return phase::alphastar();
        case Symbol::Q:
          return quad_to_alpha(QuadPoly::monomial(1, 0));
        case Symbol::P:
          return quad_to_alpha(QuadPoly::monomial(0, 1));
        case Symbol::I:
          return PhasePoly::constant(ExactComplex::i());
        default:
          throw ParseError("operator symbol in phase expression", e.offset);
      }
    case Expr::Kind::Constant:
      return PhasePoly::constant(e.constant);
    case Expr::Kind::Negate:
      return -lower_phase(e.children.front());
  }
  return {};
}

std::string factor_text(const char* name, unsigned power) {
  std::string out = name;
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

template <class Tag>
std::string print_terms(const TermPoly<Tag>& p, const char* creation, const char* annihilation) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    if (e.m > 0) mono = factor_text(creation, e.m);
    if (e.n > 0) mono += (mono.empty() ? "" : "*") + factor_text(annihilation, e.n);

    const bool negative = c.re().sign() < 0 || (c.re().is_zero() && c.im().sign() < 0);
    const ExactComplex mag = negative ? -c : c;
    std::string coeff;
    if (mag.is_real()) {
      if (!(mag.re() == Rational(1) && !mono.empty())) coeff = mag.re().to_string();
    } else if (mag.re().is_zero()) {
      coeff = mag.im() == Rational(1) ? "i" : mag.im().to_string() + "*i";
    } else {
      const bool im_negative = mag.im().sign() < 0;
      const Rational im_abs = im_negative ? -mag.im() : mag.im();
      coeff = "(" + mag.re().to_string() + (im_negative ? " - " : " + ") +
              (im_abs == Rational(1) ? std::string("i") : im_abs.to_string() + "*i") + ")";
    }
    std::string body = coeff;
    if (!mono.empty()) body += (body.empty() ? "" : "*") + mono;

    if (first) {
      if (negative) {
        // "-x^2" would parse as (−x)^2.
        const bool leading_power = coeff.empty() && mono.find('^') != std::string::npos &&
                                   mono.find('^') < mono.find('*');
        out += leading_power ? "-1*" + body : "-" + body;
      } else {
        out += body;
      }
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

Expr parse(std::string_view text, ExprContext context) { return Parser(text, context).run(); }

Lowered lower(const Expr& ast, ExprContext context) {
  if (context == ExprContext::OPERATOR) return lower_operator(ast);
  return lower_phase(ast);
}

OperatorPoly parse_operator(std::string_view text) {
  return lower_operator(parse(text, ExprContext::OPERATOR));
}

PhasePoly parse_phase(std::string_view text) { return lower_phase(parse(text, ExprContext::PHASE)); }

std::string print_canonical(const OperatorPoly& p) { return print_terms(p, "ad", "a"); }

std::string print_canonical(const PhasePoly& p) { return print_terms(p, "als", "al"); }

}  // namespace phasestar
