#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eigsphere/polynomial.hpp"

namespace eigsphere {

enum class EigenCondition { Homogeneity, LaplacianP, LaplacianP2 };

std::string_view to_string(EigenCondition c);

struct EigenFailure {
  EigenCondition condition;
  /// Homogeneity: the terms below the top degree. LaplacianP: Lap(P).
  /// LaplacianP2: Lap(P^2).
  Polynomial residual;
};

/// Outcome of the exact eigenfunction test for P restricted to S^n.
///
/// Sign convention: the Laplacian is div(grad), so the sphere spectrum is
/// non-positive. For an eigenfunction of degree k,
///   lambda = -k (k + n - 1),   mu = -k^2.
struct EigenReport {
  bool is_eigen = false;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  std::optional<Rational> lambda;
  std::optional<Rational> mu;
  std::optional<EigenFailure> failure;
};

Rational sphere_lambda(std::uint32_t k, std::uint32_t n);
Rational sphere_mu(std::uint32_t k);

/// P is a (lambda, mu)-eigenfunction on S^n iff P is homogeneous,
/// Lap(P) = 0 and Lap(P^2) = 0. The last condition is cross-checked
/// against kappa(P, P) = 0.
///
/// Throws ZeroPolynomial, DimensionMismatch (nvars != n+1),
/// SphereDimensionTooSmall (n < 2).
EigenReport verify_eigenfunction(const Polynomial& p, std::uint32_t n);

struct EigenfamilyReport {
  bool is_family = false;
  std::uint32_t k = 0;
  std::optional<Rational> lambda;
  std::optional<Rational> mu;
  std::vector<EigenReport> members;
  /// First pair (i, j) with kappa(P_i, P_j) != 0, if any.
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::optional<Polynomial> pair_residual;
};

/// Every member is an eigenfunction of a common degree and kappa(P_i, P_j)
/// vanishes for all pairs (which gives mu = -k^2 on the sphere).
/// Throws MixedDegrees when eigen members have different degrees.
EigenfamilyReport verify_eigenfamily(std::span<const Polynomial> ps, std::uint32_t n);

/// Lap(P^m) = 0 for 2 <= m <= mmax, on the sphere S^{nvars-1}. Throws
/// Error(NotAnEigenfunction) naming the failed condition.
bool power_harmonicity_check(const Polynomial& p, unsigned mmax);

/// Laplace-Beltrami of P restricted to S^n at a unit vector x, by central
/// differences of the degree-0 extension P(y/|y|).
std::complex<double> sphere_laplacian_fd(const Polynomial& p, std::span<const double> x,
                                         double h = 5e-4);

/// Checks lambda_2/2 - lambda_1 = -k^2 = mu, with lambda_2 the eigenvalue of
/// P^2, and that the finite-difference Laplace-Beltrami of P^2 matches
/// lambda_2 P^2 at `samples` random sphere points (relative 1e-5).
bool mu_relation_check(const Polynomial& p, std::uint32_t n, std::uint64_t seed = 1,
                       unsigned samples = 20);

}  // namespace eigsphere
