#include <doctest.h>

#include "eigsphere/calculus.hpp"
#include "eigsphere/error.hpp"
#include "eigsphere/parser.hpp"
#include "eigsphere/selftest.hpp"
#include "oracles.hpp"

using namespace eigsphere;

namespace {
Polynomial P(const char* s, std::size_t n = 4) { return parse(s, n); }
GaussianRational c(long v) { return GaussianRational(v); }
}  // namespace

TEST_CASE("partial") {
  CHECK(partial(P("x1^3", 1), 0) == P("3*x1^2", 1));
  CHECK(partial(P("x1*x2", 2), 1) == P("x1", 2));
  CHECK(partial(P("7", 2), 0).is_zero());
  CHECK_THROWS_WITH_AS(partial(P("x1", 2), 2), doctest::Contains("IndexOutOfRange"), Error);
}

TEST_CASE("gradient") {
  const auto g = gradient(P("x1^2-x2^2+x3^2-x4^2"));
  CHECK(g[0] == P("2*x1"));
  CHECK(g[1] == P("-2*x2"));
  CHECK(g[2] == P("2*x3"));
  CHECK(g[3] == P("-2*x4"));
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto gr = gradient(Polynomial::r_squared(n));
    for (std::size_t i = 0; i < n; ++i) CHECK(gr[i] == c(2) * Polynomial::variable(n, i));
  }
  for (const auto& gi : gradient(P("3"))) CHECK(gi.is_zero());
}

TEST_CASE("laplacian") {
  CHECK(laplacian(P("x1^2-x2^2")).is_zero());
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(laplacian(Polynomial::r_squared(n)) == Polynomial::constant(n, static_cast<long>(2 * n)));
  }
}

TEST_CASE("laplacian of r^{2k} matches the radial formula") {
  for (long n = 1; n <= 6; ++n) {
    const auto r2 = Polynomial::r_squared(static_cast<std::size_t>(n));
    for (long k = 1; k <= 5; ++k) {
      const long factor = oracle::radial_laplacian_factor(n, k);
      CHECK(factor == 2 * k * (n + 2 * k - 2));
      CHECK(laplacian(pow(r2, static_cast<unsigned>(k))) ==
            c(factor) * pow(r2, static_cast<unsigned>(k - 1)));
    }
  }
}

TEST_CASE("hessian") {
  const auto h = hessian(P("x1^2-x2^2+x3^2-x4^2"));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const long expected = i != j ? 0 : (i % 2 == 0 ? 2 : -2);
      CHECK(h(i, j) == Polynomial::constant(4, expected));
    }
  }
  const auto r = hessian(P("2*x1*x2+2*x3*x4"));
  CHECK(r(0, 1) == Polynomial::constant(4, 2));
  CHECK(r(1, 0) == Polynomial::constant(4, 2));
  CHECK(r(2, 3) == Polynomial::constant(4, 2));
  CHECK(r(0, 2).is_zero());
  CHECK(r(0, 0).is_zero());
}

TEST_CASE("Schwarz symmetry and trace = laplacian on random polynomials") {
  Rng rng = make_rng(31, 0);
  for (int k = 0; k < 25; ++k) {
    const auto p = random_polynomial(rng, 4, 5, 6);
    const auto h = hessian(p);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(partial(partial(p, i), j) == partial(partial(p, j), i));
        CHECK(h(i, j) == h(j, i));
      }
    }
    CHECK(h.trace() == laplacian(p));
  }
}

TEST_CASE("kappa is bilinear without conjugation") {
  CHECK(kappa(P("z1"), P("z1")).is_zero());
  CHECK(kappa(P("z1^2+z2^2"), P("z1^2+z2^2")).is_zero());
  CHECK(kappa(P("x1"), P("x2")).is_zero());
  CHECK(kappa(P("x1^2"), P("x1^2")) == P("4*x1^2"));
  CHECK(kappa(P("z1"), P("conj(z1)")) == Polynomial::constant(4, 2));
  CHECK_THROWS_AS(kappa(P("x1", 2), P("x1", 3)), Error);
}

TEST_CASE("hess_grad_grad") {
  const auto q = P("x1^2-x2^2+x3^2-x4^2");
  CHECK(hess_grad_grad(q) == c(8) * q);
  // grad = (x3, -x4, x1, -x2); Hess has H13 = 1, H24 = -1; sum = 2(x1x3 - x2x4).
  const auto p = P("x1*x3-x2*x4");
  CHECK(hess_grad_grad(p) == c(2) * p);
  CHECK(hess_grad_grad(P("3*x1 - x2 + 5*x4")).is_zero());

  SUBCASE("agrees with the explicit double sum") {
    Rng rng = make_rng(32, 0);
    for (int k = 0; k < 10; ++k) {
      const auto f = random_polynomial(rng, 3, 4, 4);
      const auto g = gradient(f);
      const auto h = hessian(f);
      Polynomial sum(3);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) sum += h(i, j) * g[i] * g[j];
      }
      CHECK(hess_grad_grad(f) == sum);
    }
  }
}

TEST_CASE("euler") {
  Rng rng = make_rng(33, 0);
  for (unsigned k = 0; k <= 6; ++k) {
    const auto p = random_homogeneous(rng, 4, k, 5);
    CHECK(euler(p) == c(static_cast<long>(k)) * p);
  }
  CHECK(euler(Polynomial::r_squared(4)) == c(2) * Polynomial::r_squared(4));
  CHECK(euler(P("x1 + x2^2")) == P("x1 + 2*x2^2"));
}

TEST_CASE("kappa against r^2/2 is the Euler operator") {
  Rng rng = make_rng(34, 0);
  const auto half_r2 = GaussianRational(Rational(1, 2)) * Polynomial::r_squared(5);
  for (unsigned k = 0; k <= 5; ++k) {
    const auto p = random_homogeneous(rng, 5, k, 4);
    CHECK(kappa(half_r2, p) == euler(p));
    CHECK(kappa(half_r2, p) == c(static_cast<long>(k)) * p);
  }
}

TEST_CASE("r2_coprime") {
  CHECK(r2_coprime(P("x1^2-x2^2")));
  CHECK_FALSE(r2_coprime(Polynomial::r_squared(4) * P("x1")));
  CHECK_THROWS_WITH_AS(r2_coprime(Polynomial::zero(4)), doctest::Contains("ZeroPolynomial"), Error);

  Rng rng = make_rng(35, 0);
  for (int k = 0; k < 100; ++k) {
    std::uniform_int_distribution<unsigned> deg(1, 6);
    const auto h = random_harmonic(rng, 4, deg(rng));
    REQUIRE(laplacian(h).is_zero());
    CHECK(r2_coprime(h));
  }
}

TEST_CASE("identity_one_check") {
  CHECK(identity_one_check(P("x1"), P("x1")));
  CHECK(identity_one_check(Polynomial::r_squared(4), P("x1")));
  Rng rng = make_rng(36, 0);
  for (int k = 0; k < 100; ++k) {
    CHECK(identity_one_check(random_polynomial(rng, 4, 4, 4), random_polynomial(rng, 4, 4, 4)));
  }
  CHECK_THROWS_AS(identity_one_check(P("x1", 2), P("x1", 3)), Error);
}
