#include "eigsphere/selftest.hpp"

#include <algorithm>
#include <numeric>

#include "eigsphere/calculus.hpp"
#include "eigsphere/parser.hpp"

namespace eigsphere {

namespace {

GaussianRational random_coefficient(Rng& rng, bool complex_coeffs) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  Rational re(num(rng), den(rng));
  re.canonicalize();
  Rational im(0);
  if (complex_coeffs) {
    im = Rational(num(rng), den(rng));
    im.canonicalize();
  }
  if (sgn(re) == 0 && sgn(im) == 0) re = 1;
  return {re, im};
}

Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned degree) {
  Monomial m(nvars);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (unsigned d = 0; d < degree; ++d) ++m[var(rng)];
  return m;
}

Polynomial complex_pair(std::size_t nvars, std::size_t a, std::size_t b) {
  return Polynomial::variable(nvars, a) + GaussianRational::i() * Polynomial::variable(nvars, b);
}

}  // namespace

Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, unsigned nterms,
                             bool complex_coeffs) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  Polynomial p(nvars);
  for (unsigned t = 0; t < nterms; ++t) {
    p += Polynomial::monomial(random_monomial(rng, nvars, deg(rng)),
                              random_coefficient(rng, complex_coeffs));
  }
  return p;
}

Polynomial random_homogeneous(Rng& rng, std::size_t nvars, unsigned degree, unsigned nterms,
                              bool complex_coeffs) {
  Polynomial p(nvars);
  while (p.is_zero()) {
    for (unsigned t = 0; t < nterms; ++t) {
      p += Polynomial::monomial(random_monomial(rng, nvars, degree),
                                random_coefficient(rng, complex_coeffs));
    }
  }
  return p;
}

Polynomial random_harmonic(Rng& rng, std::size_t nvars, unsigned degree) {
  std::vector<std::size_t> vars(nvars);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  Polynomial acc(nvars);
  while (acc.is_zero()) {
    for (int piece = 0; piece < 3; ++piece) {
      std::shuffle(vars.begin(), vars.end(), rng);
      Polynomial h = Polynomial::constant(nvars, 1);
      if (nvars >= 4 && degree >= 2 && (rng() & 1U)) {
        std::uniform_int_distribution<unsigned> split(1, degree - 1);
        const unsigned j = split(rng);
        h = pow(complex_pair(nvars, vars[0], vars[1]), j) *
            pow(complex_pair(nvars, vars[2], vars[3]), degree - j);
      } else {
        h = pow(complex_pair(nvars, vars[0], vars[1]), degree);
      }
      const auto [re, im] = real_imag_parts(h);
      acc += random_coefficient(rng, false) * ((rng() & 1U) ? re : im);
    }
  }
  return acc;
}

std::vector<SelftestItem> run_selftest(std::uint64_t seed) {
  std::vector<SelftestItem> items;
  Rng rng = make_rng(seed, 0);

  {
    SelftestItem it{"ring_axioms", true, 0, ""};
    for (int k = 0; k < 30; ++k, ++it.cases) {
      const auto p = random_polynomial(rng, 4, 3, 5);
      const auto q = random_polynomial(rng, 4, 3, 5);
      const auto r = random_polynomial(rng, 4, 3, 5);
      const bool ok = (p + q) == (q + p) && (p * q) == (q * p) &&
                      ((p + q) + r) == (p + (q + r)) && ((p * q) * r) == (p * (q * r)) &&
                      (p * (q + r)) == (p * q + p * r) && (p - p).is_zero();
      if (!ok) {
        it.passed = false;
        it.detail = "failed for p = " + render(p);
        break;
      }
    }
    items.push_back(it);
  }

  {
    SelftestItem it{"laplacian_product_rule", true, 0, ""};
    for (int k = 0; k < 100; ++k, ++it.cases) {
      const auto phi = random_polynomial(rng, 4, 4, 4);
      const auto psi = random_polynomial(rng, 4, 4, 4);
      if (!identity_one_check(phi, psi)) {
        it.passed = false;
        it.detail = "failed for phi = " + render(phi) + ", psi = " + render(psi);
        break;
      }
    }
    items.push_back(it);
  }

  {
    SelftestItem it{"euler_identity", true, 0, ""};
    for (unsigned d = 0; d <= 5; ++d) {
      for (int k = 0; k < 5; ++k, ++it.cases) {
        const auto p = random_homogeneous(rng, 5, d, 4);
        if (euler(p) != GaussianRational(static_cast<long>(d)) * p) {
          it.passed = false;
          it.detail = "failed for " + render(p);
        }
      }
    }
    items.push_back(it);
  }

  {
    SelftestItem it{"laplacian_r2k", true, 0, ""};
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r2 = Polynomial::r_squared(n);
      for (unsigned k = 1; k <= 5; ++k, ++it.cases) {
        const long factor = 2L * k * (static_cast<long>(n) + 2L * k - 2L);
        if (laplacian(pow(r2, k)) != GaussianRational(factor) * pow(r2, k - 1)) {
          it.passed = false;
          it.detail = "failed for N = " + std::to_string(n) + ", k = " + std::to_string(k);
        }
      }
    }
    items.push_back(it);
  }

  {
    SelftestItem it{"hessian_golden_8P", true, 1, ""};
    const auto p = parse("x1^2 - x2^2 + x3^2 - x4^2", 4);
    it.passed = hess_grad_grad(p) == GaussianRational(8) * p;
    if (!it.passed) it.detail = "Hess P(grad P, grad P) = " + render(hess_grad_grad(p));
    items.push_back(it);
  }

  {
    SelftestItem it{"harmonic_coprime_r2", true, 0, ""};
    for (int k = 0; k < 100; ++k, ++it.cases) {
      std::uniform_int_distribution<unsigned> deg(1, 5);
      const auto h = random_harmonic(rng, 4, deg(rng));
      if (!laplacian(h).is_zero() || !r2_coprime(h)) {
        it.passed = false;
        it.detail = "failed for " + render(h);
        break;
      }
    }
    items.push_back(it);
  }

  return items;
}

}  // namespace eigsphere
