#include <doctest.h>

#include <cmath>

#include "eigsphere/error.hpp"
#include "eigsphere/parser.hpp"
#include "eigsphere/polynomial.hpp"
#include "eigsphere/selftest.hpp"

using namespace eigsphere;

namespace {
Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i - 1); }
const GaussianRational I = GaussianRational::i();
}  // namespace

TEST_CASE("gaussian rationals stay canonical") {
  GaussianRational a(Rational(2, 4), Rational(-3, 6));
  CHECK(a.re() == Rational(1, 2));
  CHECK(a.re().get_den() == 2);
  CHECK(a == GaussianRational(Rational(1, 2), Rational(-1, 2)));
  CHECK(I * I == GaussianRational(-1));
  CHECK((GaussianRational(1) / I) == -I);
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), Error);
  CHECK(GaussianRational(Rational(1, 2), Rational(3)).to_string() == "(1/2+3*i)");
  CHECK((-I).to_string() == "-i");
}

TEST_CASE("add") {
  CHECK((x(2, 1) + (-x(2, 1))).is_zero());
  const Polynomial p = pow(x(2, 1), 2) + I * x(2, 2);
  CHECK(p + pow(x(2, 1), 2) == GaussianRational(2) * pow(x(2, 1), 2) + I * x(2, 2));
  CHECK_THROWS_WITH_AS(x(2, 1) + x(3, 1), doctest::Contains("DimensionMismatch"), Error);

  Rng rng = make_rng(11, 0);
  for (int k = 0; k < 20; ++k) {
    const auto q = random_polynomial(rng, 3, 3, 5);
    CHECK(q + Polynomial::zero(3) == q);
  }
}

TEST_CASE("mul") {
  CHECK((x(2, 1) + I * x(2, 2)) * (x(2, 1) - I * x(2, 2)) == pow(x(2, 1), 2) + pow(x(2, 2), 2));
  CHECK(pow(x(2, 1) + I * x(2, 2), 2) ==
        pow(x(2, 1), 2) - pow(x(2, 2), 2) + GaussianRational(2) * I * x(2, 1) * x(2, 2));
  CHECK(Polynomial::r_squared(3) * x(3, 1) ==
        pow(x(3, 1), 3) + x(3, 1) * pow(x(3, 2), 2) + x(3, 1) * pow(x(3, 3), 2));
  CHECK_THROWS_AS(mul(x(2, 1), x(4, 1)), Error);
}

TEST_CASE("pow") {
  Rng rng = make_rng(12, 0);
  for (int k = 0; k < 10; ++k) {
    const auto p = random_polynomial(rng, 3, 2, 4);
    CHECK(pow(p, 0) == Polynomial::constant(3, 1));
    CHECK(pow(p, 3) == mul(p, pow(p, 2)));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng = make_rng(13, 0);
  for (int k = 0; k < 40; ++k) {
    const auto p = random_polynomial(rng, 4, 3, 5);
    const auto q = random_polynomial(rng, 4, 3, 5);
    const auto r = random_polynomial(rng, 4, 3, 5);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("homogeneity") {
  CHECK(homogeneity(parse("x1^2-x2^2+x3^2-x4^2", 4)) == 2u);
  CHECK_FALSE(homogeneity(parse("x1 + x2^2", 2)).has_value());
  for (std::size_t n = 1; n <= 6; ++n) CHECK(homogeneity(Polynomial::r_squared(n)) == 2u);
  CHECK_THROWS_WITH_AS(homogeneity(Polynomial::zero(3)), doctest::Contains("ZeroPolynomial"), Error);
}

TEST_CASE("exact_divide") {
  const auto q = parse("x1^2-x2^2+x3^2-x4^2", 4);
  const auto quot = exact_divide(GaussianRational(8) * q, q);
  REQUIRE(quot.has_value());
  CHECK(*quot == Polynomial::constant(4, 8));

  CHECK_FALSE(exact_divide(parse("x1^2-x2^2", 4), Polynomial::r_squared(4)).has_value());
  CHECK(exact_divide(Polynomial::r_squared(4) * x(4, 1), Polynomial::r_squared(4)) == x(4, 1));
  CHECK_THROWS_WITH_AS(exact_divide(q, Polynomial::zero(4)),
                       doctest::Contains("DivisionByZeroPolynomial"), Error);

  SUBCASE("mul then divide recovers the factor") {
    Rng rng = make_rng(14, 0);
    for (int k = 0; k < 30; ++k) {
      const auto p = random_polynomial(rng, 3, 3, 4);
      auto d = random_polynomial(rng, 3, 2, 3);
      if (d.is_zero()) d = Polynomial::constant(3, 1);
      CHECK(exact_divide(mul(p, d), d) == p);
    }
  }
  SUBCASE("a nonzero remainder is detected") {
    const auto d = parse("x1 + x2", 2);
    CHECK_FALSE(exact_divide(parse("x1^2 + x2^2", 2), d).has_value());
    CHECK(exact_divide(parse("x1^2 - x2^2", 2), d) == parse("x1 - x2", 2));
  }
}

TEST_CASE("evaluate") {
  const auto q = parse("x1^2-x2^2+x3^2-x4^2", 4);
  const std::vector<double> e1{1, 0, 0, 0};
  CHECK(evaluate(q, e1) == std::complex<double>(1.0, 0.0));
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<double> pt{s, 0, s, 0};
  CHECK(std::abs(evaluate(q, pt) - 1.0) < 1e-15);
  const std::vector<double> z{0.6, 0.8, 0, 0};
  CHECK(std::abs(evaluate(parse("z1", 4), z) - std::complex<double>(0.6, 0.8)) < 1e-16);
  CHECK_THROWS_AS(evaluate(q, std::vector<double>{1.0, 2.0}), Error);
}

TEST_CASE("compiled evaluation matches bit for bit") {
  Rng rng = make_rng(15, 0);
  for (int k = 0; k < 20; ++k) {
    const auto p = random_polynomial(rng, 4, 5, 8);
    const CompiledPolynomial cp(p);
    const auto pt = random_sphere_point(rng, 4);
    CHECK(cp(pt) == p.evaluate(pt));
  }
}

TEST_CASE("homogeneous scaling law") {
  Rng rng = make_rng(16, 0);
  std::uniform_real_distribution<double> t_dist(0.3, 2.5);
  for (unsigned k = 0; k <= 5; ++k) {
    const auto p = random_homogeneous(rng, 4, k, 5);
    const auto pt = gaussian_vector(rng, 4);
    const double t = t_dist(rng);
    std::vector<double> scaled(pt);
    for (auto& v : scaled) v *= t;
    const auto lhs = evaluate(p, scaled);
    const auto rhs = std::pow(t, static_cast<double>(k)) * evaluate(p, pt);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("real_imag_parts") {
  const auto [re, im] = real_imag_parts(parse("z1^2", 2));
  CHECK(re == parse("x1^2 - x2^2", 2));
  CHECK(im == parse("2*x1*x2", 2));
  const auto p = parse("x1^3 - 2*x2", 2);
  CHECK(real_imag_parts(p).first == p);
  CHECK(real_imag_parts(p).second.is_zero());
  const auto [r0, i0] = real_imag_parts(parse("i*x1", 2));
  CHECK(r0.is_zero());
  CHECK(i0 == x(2, 1));

  Rng rng = make_rng(17, 0);
  for (int k = 0; k < 20; ++k) {
    const auto q = random_polynomial(rng, 3, 3, 6);
    const auto [a, b] = real_imag_parts(q);
    CHECK(a.is_real());
    CHECK(b.is_real());
    CHECK(a + I * b == q);
  }
}

TEST_CASE("monomials_of_degree lists the canonical order") {
  const auto ms = monomials_of_degree(3, 2);
  REQUIRE(ms.size() == 6);
  GrlexDescending greater;
  for (std::size_t k = 1; k < ms.size(); ++k) CHECK(greater(ms[k - 1], ms[k]));
  CHECK(monomials_of_degree(4, 3).size() == 20);
  CHECK(monomials_of_degree(4, 0).size() == 1);
}
