#include "eigsphere/parser.hpp"

#include <cctype>
#include <string>

#include "eigsphere/error.hpp"

namespace eigsphere {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ast::NodePtr parse_all() {
    auto node = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static ast::NodePtr make(std::size_t position, auto value) {
    auto n = std::make_unique<ast::Node>();
    n->value = std::move(value);
    n->position = position;
    return n;
  }

  std::string read_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      fail("decimal literals are not supported; write rationals as p/q (e.g. 1/2)");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  ast::NodePtr parse_expr() {
    skip_ws();
    const std::size_t start = pos_;
    ast::Sum sum;
    sum.terms.push_back(parse_term());
    sum.negated.push_back(false);
    for (;;) {
      if (accept('+')) {
        sum.negated.push_back(false);
      } else if (accept('-')) {
        sum.negated.push_back(true);
      } else {
        break;
      }
      sum.terms.push_back(parse_term());
    }
    if (sum.terms.size() == 1) return std::move(sum.terms.front());
    return make(start, std::move(sum));
  }

  ast::NodePtr parse_term() {
    skip_ws();
    const std::size_t start = pos_;
    ast::Product prod;
    prod.factors.push_back(parse_factor());
    while (accept('*')) prod.factors.push_back(parse_factor());
    if (prod.factors.size() == 1) return std::move(prod.factors.front());
    return make(start, std::move(prod));
  }

  ast::NodePtr parse_factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (accept('-')) return make(start, ast::Negate{parse_factor()});
    if (accept('+')) return parse_factor();
    return parse_power();
  }

  ast::NodePtr parse_power() {
    auto base = parse_primary();
    skip_ws();
    const std::size_t start = pos_;
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') {
      throw Error(ErrorKind::NegativeExponent,
                  "at position " + std::to_string(pos_) + ": exponents must be non-negative");
    }
    const std::string digits = read_digits();
    if (digits.size() > 6) fail("exponent too large");
    return make(start, ast::Power{std::move(base), static_cast<unsigned>(std::stoul(digits))});
  }

  std::size_t read_index(char prefix) {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail(std::string("expected an index after '") + prefix + "'");
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) fail("variable index too large");
    return std::stoul(std::string(digits));
  }

  ast::NodePtr parse_primary() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational num(read_digits());
      skip_ws();
      if (accept('/')) {
        Rational den(read_digits());
        if (den == 0) fail("zero denominator");
        Rational q = num / den;
        q.canonicalize();
        return make(start, ast::RationalLit{q});
      }
      return make(start, ast::Integer{num});
    }
    if (c == '(') {
      ++pos_;
      auto inner = parse_expr();
      expect(')');
      return inner;
    }
    if (text_.substr(pos_, 4) == "conj") {
      pos_ += 4;
      expect('(');
      auto inner = parse_expr();
      expect(')');
      return make(start, ast::Conjugate{std::move(inner)});
    }
    if (c == 'x' || c == 'z') {
      ++pos_;
      const std::size_t idx = read_index(c);
      if (idx == 0) {
        pos_ = start;
        fail("variable indices start at 1");
      }
      if (c == 'x') return make(start, ast::RealVar{idx});
      return make(start, ast::ComplexVar{idx});
    }
    if (c == 'i') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = start;
        fail("unknown identifier");
      }
      return make(start, ast::ImaginaryUnit{});
    }
    if (c == '.') fail("decimal literals are not supported; write rationals as p/q (e.g. 1/2)");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Expander {
  std::size_t nvars;

  Polynomial operator()(const ast::Node& n) const {
    return std::visit([&](const auto& v) { return expand_node(v, n.position); }, n.value);
  }

  Polynomial expand_node(const ast::Integer& v, std::size_t) const {
    return Polynomial::constant(nvars, GaussianRational(v.value));
  }
  Polynomial expand_node(const ast::RationalLit& v, std::size_t) const {
    return Polynomial::constant(nvars, GaussianRational(v.value));
  }
  Polynomial expand_node(const ast::ImaginaryUnit&, std::size_t) const {
    return Polynomial::constant(nvars, GaussianRational::i());
  }
  Polynomial expand_node(const ast::RealVar& v, std::size_t pos) const {
    if (v.index > nvars) {
      throw Error(ErrorKind::VariableOutOfRange,
                  "x" + std::to_string(v.index) + " at position " + std::to_string(pos) +
                      " exceeds " + std::to_string(nvars) + " variables");
    }
    return Polynomial::variable(nvars, v.index - 1);
  }
  Polynomial expand_node(const ast::ComplexVar& v, std::size_t pos) const {
    if (2 * v.index > nvars) {
      throw Error(ErrorKind::VariableOutOfRange,
                  "z" + std::to_string(v.index) + " at position " + std::to_string(pos) +
                      " needs " + std::to_string(2 * v.index) + " variables, have " +
                      std::to_string(nvars));
    }
    return Polynomial::variable(nvars, 2 * v.index - 2) +
           GaussianRational::i() * Polynomial::variable(nvars, 2 * v.index - 1);
  }
  Polynomial expand_node(const ast::Negate& v, std::size_t) const { return -(*this)(*v.operand); }
  Polynomial expand_node(const ast::Conjugate& v, std::size_t) const {
    return (*this)(*v.operand).conj();
  }
  Polynomial expand_node(const ast::Sum& v, std::size_t) const {
    Polynomial acc(nvars);
    for (std::size_t k = 0; k < v.terms.size(); ++k) {
      if (v.negated[k]) acc -= (*this)(*v.terms[k]);
      else acc += (*this)(*v.terms[k]);
    }
    return acc;
  }
  Polynomial expand_node(const ast::Product& v, std::size_t) const {
    Polynomial acc = (*this)(*v.factors.front());
    for (std::size_t k = 1; k < v.factors.size(); ++k) acc = acc * (*this)(*v.factors[k]);
    return acc;
  }
  Polynomial expand_node(const ast::Power& v, std::size_t) const {
    return pow((*this)(*v.base), v.exponent);
  }
};

}  // namespace

ast::NodePtr parse_expression(std::string_view text) { return Parser(text).parse_all(); }

Polynomial expand(const ast::Node& node, std::size_t nvars) {
  if (nvars == 0) throw Error(ErrorKind::InvalidArgument, "nvars must be positive");
  return Expander{nvars}(node);
}

Polynomial parse(std::string_view text, std::size_t nvars) {
  return expand(*parse_expression(text), nvars);
}

}  // namespace eigsphere
