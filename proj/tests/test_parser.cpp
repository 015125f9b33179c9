#include <doctest.h>

#include "eigsphere/error.hpp"
#include "eigsphere/parser.hpp"
#include "eigsphere/selftest.hpp"

using namespace eigsphere;

namespace {
Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i - 1); }
const GaussianRational I = GaussianRational::i();
}  // namespace

TEST_CASE("complex variable shorthand") {
  const auto f = parse("z1^2 + z2^2", 4);
  const auto expected = pow(x(4, 1), 2) - pow(x(4, 2), 2) + GaussianRational(2) * I * x(4, 1) * x(4, 2) +
                        pow(x(4, 3), 2) - pow(x(4, 4), 2) + GaussianRational(2) * I * x(4, 3) * x(4, 4);
  CHECK(f == expected);

  const auto g = parse("z1^2 * conj(z2)", 4);
  CHECK(g == pow(x(4, 1) + I * x(4, 2), 2) * (x(4, 3) - I * x(4, 4)));
}

TEST_CASE("precedence and unary minus") {
  CHECK(parse("-x1^2", 1) == -pow(x(1, 1), 2));
  CHECK(parse("2*x1^3", 1) == GaussianRational(2) * pow(x(1, 1), 3));
  CHECK(parse("x1 - x2 - x3", 3) == x(3, 1) - x(3, 2) - x(3, 3));
  CHECK(parse("(x1 + x2)^2", 2) == pow(x(2, 1) + x(2, 2), 2));
  CHECK(parse("x1 * -x2", 2) == -(x(2, 1) * x(2, 2)));
  CHECK(parse("1/2*x1", 2) == GaussianRational(Rational(1, 2)) * x(2, 1));
  CHECK(parse("2/4", 1) == Polynomial::constant(1, GaussianRational(Rational(1, 2))));
  CHECK(parse("i*i", 1) == Polynomial::constant(1, -1));
  CHECK(parse("  x1 ^ 2 ", 1) == pow(x(1, 1), 2));
}

TEST_CASE("errors") {
  CHECK_THROWS_WITH_AS(parse("x1 + x5", 4), doctest::Contains("VariableOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(parse("z3", 4), doctest::Contains("VariableOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(parse("x1^-2", 2), doctest::Contains("NegativeExponent"), Error);
  CHECK_THROWS_AS(parse("0.5*x1", 2), SyntaxError);
  CHECK_THROWS_AS(parse("x1 x2", 2), SyntaxError);
  CHECK_THROWS_AS(parse("x1 +", 2), SyntaxError);
  CHECK_THROWS_AS(parse("(x1", 2), SyntaxError);
  CHECK_THROWS_AS(parse("x0", 2), SyntaxError);
  CHECK_THROWS_AS(parse("sin(x1)", 2), SyntaxError);
  CHECK_THROWS_AS(parse("x1/2", 2), SyntaxError);
  CHECK_THROWS_AS(parse("1/0", 2), SyntaxError);

  try {
    parse("x1 + * x2", 2);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 5);
  }
  try {
    parse("1.5", 1);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(std::string(e.what()).find("p/q") != std::string::npos);
  }
}

TEST_CASE("render") {
  CHECK(render(Polynomial::zero(3)) == "0");
  const auto r = parse("2*x1*x2 + 2*x3*x4", 4);
  CHECK(render(r) == "2*x1*x2 + 2*x3*x4");
  CHECK(parse(render(r), 4) == r);
  CHECK(render(parse("1/2 * x1", 2)) == "1/2*x1");
  CHECK(render(parse("-x1^2 + 3", 2)) == "-x1^2 + 3");
  CHECK(render(parse("z1", 2)) == "x1 + i*x2");
  CHECK(render(parse("(1/2 - 3*i)*x2 - i", 2)) == "(1/2-3*i)*x2 - i");
}

TEST_CASE("render round-trips random polynomials") {
  Rng rng = make_rng(21, 0);
  for (int k = 0; k < 100; ++k) {
    const auto p = random_polynomial(rng, 5, 4, 6);
    CHECK(parse(render(p), 5) == p);
  }
}

TEST_CASE("conj is an involution and z + conj(z) = 2 Re z") {
  const char* exprs[] = {"z1^3 - i*z2*x1", "(1/3 + 2*i)*z1*conj(z2)^2", "x1 + i", "conj(z1)*z2 - 7"};
  for (const char* e : exprs) {
    const std::string twice = std::string("conj(conj(") + e + "))";
    CHECK(parse(twice, 4) == parse(e, 4));
  }
  for (std::size_t j = 1; j <= 3; ++j) {
    const std::string z = "z" + std::to_string(j);
    CHECK(parse(z, 6) + parse("conj(" + z + ")", 6) == GaussianRational(2) * x(6, 2 * j - 1));
  }
}

TEST_CASE("the AST records node kinds") {
  const auto node = parse_expression("conj(z1)^2 + 1/2");
  REQUIRE(std::holds_alternative<ast::Sum>(node->value));
  const auto& sum = std::get<ast::Sum>(node->value);
  REQUIRE(sum.terms.size() == 2);
  CHECK(std::holds_alternative<ast::Power>(sum.terms[0]->value));
  CHECK(std::holds_alternative<ast::RationalLit>(sum.terms[1]->value));
}
