#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "eigsphere/polynomial.hpp"

namespace eigsphere {

/// Residual map for homogeneous degree-d candidates P_theta in N variables:
///
///   theta -> [Re, Im of coeffs(Lap P); Re, Im of coeffs(kappa(P, P)); |theta|^2 - 1]
///
/// theta packs the complex coefficients over monomials_of_degree(N, d) as
/// [real parts..., imaginary parts...].
class EigenResidual {
 public:
  EigenResidual(std::size_t nvars, unsigned degree);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t parameters() const { return 2 * basis_.size(); }
  std::size_t residuals() const { return 2 * (lap_rows_ + kappa_rows_) + 1; }

  Eigen::VectorXd operator()(const Eigen::VectorXd& theta) const;
  /// Analytic Jacobian, residuals() x parameters().
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& theta) const;

  Eigen::VectorXd pack(std::span<const std::complex<double>> coeffs) const;
  std::vector<std::complex<double>> unpack(const Eigen::VectorXd& theta) const;

 private:
  struct LapEntry { std::size_t row, col; double weight; };
  struct KappaEntry { std::size_t row, a, b; double weight; };

  std::size_t nvars_;
  unsigned degree_;
  std::vector<Monomial> basis_;
  std::size_t lap_rows_ = 0;
  std::size_t kappa_rows_ = 0;
  std::vector<LapEntry> lap_;
  std::vector<KappaEntry> kappa_;
};

/// Root-sum-square of every residual component, gauge included.
double residual_norm(const EigenResidual& map, std::span<const std::complex<double>> coeffs);

struct SearchOptions {
  unsigned attempts = 20;
  std::uint64_t seed = 1;
  int max_iterations = 400;
  /// Residual below which an attempt counts as a solution and is polished.
  double success_residual = 1e-10;
  unsigned denominator_bound = 64;
  /// Try zeroing small coefficients of converged solutions while staying on
  /// the solution set; generic solutions have irrational coordinates.
  bool sparsify = true;
};

struct SearchResult {
  std::size_t attempt = 0;
  std::vector<std::complex<double>> coefficients;  ///< over monomials_of_degree(N, d)
  double residual = 0.0;
  std::optional<Polynomial> exact;
};

/// Multistart Levenberg-Marquardt over Gaussian initial coefficient vectors
/// (attempt a uses the substream (seed, a)). Attempts run in parallel; the
/// result list is sorted by residual, ties broken by attempt index.
std::vector<SearchResult> search_eigen(std::size_t nvars, unsigned degree,
                                       const SearchOptions& opts = {});
/// Single-threaded reference; identical output.
std::vector<SearchResult> search_eigen_serial(std::size_t nvars, unsigned degree,
                                              const SearchOptions& opts = {});

/// Nearest rational p/q with 1 <= q <= bound (smallest q on ties).
Rational nearest_rational(double x, unsigned bound);

/// Rounds every coefficient to the nearest Gaussian rational with
/// denominators <= bound and returns the polynomial iff it is an exact
/// eigenfunction on S^{N-1}.
std::optional<Polynomial> rationalize_and_verify(std::size_t nvars, unsigned degree,
                                                 std::span<const std::complex<double>> coeffs,
                                                 unsigned denominator_bound = 64);

}  // namespace eigsphere
