#include "eigsphere/eigenfunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eigsphere/calculus.hpp"
#include "eigsphere/error.hpp"
#include "eigsphere/rng.hpp"

namespace eigsphere {

std::string_view to_string(EigenCondition c) {
  switch (c) {
    case EigenCondition::Homogeneity: return "homogeneity";
    case EigenCondition::LaplacianP: return "laplacian_P";
    case EigenCondition::LaplacianP2: return "laplacian_P2";
  }
  return "unknown";
}

Rational sphere_lambda(std::uint32_t k, std::uint32_t n) {
  return Rational(-static_cast<long>(k) * static_cast<long>(k + n - 1));
}

Rational sphere_mu(std::uint32_t k) { return Rational(-static_cast<long>(k) * static_cast<long>(k)); }

EigenReport verify_eigenfunction(const Polynomial& p, std::uint32_t n) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial is not an eigenfunction");
  if (n < 2) {
    throw Error(ErrorKind::SphereDimensionTooSmall,
                "sphere dimension " + std::to_string(n) + " < 2");
  }
  if (p.nvars() != n + 1) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(p.nvars()) + " variables for S^" + std::to_string(n) +
                    " (expected " + std::to_string(n + 1) + ")");
  }

  EigenReport report;
  report.n = n;
  report.k = p.total_degree();

  if (!homogeneity(p)) {
    Polynomial::Terms lower;
    for (const auto& [m, c] : p.terms()) {
      if (m.degree() != report.k) lower.emplace(m, c);
    }
    report.failure = EigenFailure{EigenCondition::Homogeneity, Polynomial(p.nvars(), lower)};
    return report;
  }

  Polynomial lap = laplacian(p);
  if (!lap.is_zero()) {
    report.failure = EigenFailure{EigenCondition::LaplacianP, std::move(lap)};
    return report;
  }

  Polynomial lap_sq = laplacian(p * p);
  const bool isotropic = kappa(p, p).is_zero();
  if (lap_sq.is_zero() != isotropic) {
    // Lap(P^2) = 2 kappa(P, P) whenever Lap(P) = 0.
    throw std::logic_error("Lap(P^2) and kappa(P,P) disagree for a harmonic P");
  }
  if (!lap_sq.is_zero()) {
    report.failure = EigenFailure{EigenCondition::LaplacianP2, std::move(lap_sq)};
    return report;
  }

  report.is_eigen = true;
  report.lambda = sphere_lambda(report.k, n);
  report.mu = sphere_mu(report.k);
  return report;
}

EigenfamilyReport verify_eigenfamily(std::span<const Polynomial> ps, std::uint32_t n) {
  EigenfamilyReport out;
  if (ps.empty()) throw Error(ErrorKind::InvalidArgument, "empty eigenfamily");
  bool all_eigen = true;
  for (const auto& p : ps) {
    out.members.push_back(verify_eigenfunction(p, n));
    all_eigen = all_eigen && out.members.back().is_eigen;
  }
  if (!all_eigen) return out;

  out.k = out.members.front().k;
  for (const auto& m : out.members) {
    if (m.k != out.k) {
      throw Error(ErrorKind::MixedDegrees, "family members have degrees " +
                                               std::to_string(out.k) + " and " +
                                               std::to_string(m.k));
    }
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      Polynomial cross = kappa(ps[i], ps[j]);
      if (!cross.is_zero()) {
        out.failing_pair = std::make_pair(i, j);
        out.pair_residual = std::move(cross);
        return out;
      }
    }
  }
  out.is_family = true;
  out.lambda = sphere_lambda(out.k, n);
  out.mu = sphere_mu(out.k);
  return out;
}

namespace {

EigenReport require_eigen(const Polynomial& p, std::uint32_t n) {
  EigenReport r = verify_eigenfunction(p, n);
  if (!r.is_eigen) {
    throw Error(ErrorKind::NotAnEigenfunction,
                "failed condition " + std::string(to_string(r.failure->condition)));
  }
  return r;
}

}  // namespace

bool power_harmonicity_check(const Polynomial& p, unsigned mmax) {
  require_eigen(p, static_cast<std::uint32_t>(p.nvars() - 1));
  Polynomial power = p;
  for (unsigned m = 2; m <= mmax; ++m) {
    power = power * p;
    if (!laplacian(power).is_zero()) return false;
  }
  return true;
}

std::complex<double> sphere_laplacian_fd(const Polynomial& p, std::span<const double> x,
                                         double h) {
  const std::size_t n = p.nvars();
  const CompiledPolynomial cp(p);
  std::vector<double> y(x.begin(), x.end());
  auto f = [&](std::span<const double> pt) {
    double s = 0.0;
    for (double v : pt) s += v * v;
    const double inv = 1.0 / std::sqrt(s);
    std::vector<double> u(pt.begin(), pt.end());
    for (auto& v : u) v *= inv;
    return cp(u);
  };
  const std::complex<double> center = f(y);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = y[i];
    y[i] = xi + h;
    const auto fp = f(y);
    y[i] = xi - h;
    const auto fm = f(y);
    y[i] = xi;
    acc += (fp - 2.0 * center + fm) / (h * h);
  }
  return acc;
}

bool mu_relation_check(const Polynomial& p, std::uint32_t n, std::uint64_t seed,
                       unsigned samples) {
  const EigenReport r = require_eigen(p, n);
  const Rational lambda1 = sphere_lambda(r.k, n);
  const Rational lambda2 = sphere_lambda(2 * r.k, n);
  if (lambda2 / 2 - lambda1 != sphere_mu(r.k) || sphere_mu(r.k) != *r.mu) return false;
  if (r.k == 0) return true;

  const Polynomial sq = p * p;
  const double l2 = lambda2.get_d();
  std::vector<std::complex<double>> fd(samples);
  std::vector<std::complex<double>> expected(samples);
  double scale = 0.0;
  for (unsigned s = 0; s < samples; ++s) {
    Rng rng = make_rng(seed, s);
    const auto x = random_sphere_point(rng, p.nvars());
    fd[s] = sphere_laplacian_fd(sq, x);
    expected[s] = l2 * sq.evaluate(x);
    scale = std::max(scale, std::abs(expected[s]));
  }
  for (unsigned s = 0; s < samples; ++s) {
    const double err = std::abs(fd[s] - expected[s]);
    if (err > 1e-5 * scale) return false;
  }
  return true;
}

}  // namespace eigsphere
