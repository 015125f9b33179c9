#pragma once

// Test-only oracles. They deliberately avoid the library's calculus and
// curvature code paths.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "eigsphere/polynomial.hpp"

namespace oracle {

// Term-by-term evaluation with std::pow, independent of the library's
// evaluator.
inline std::complex<double> eval(const eigsphere::Polynomial& p, const std::vector<double>& x) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [m, c] : p.terms()) {
    double v = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) v *= std::pow(x[i], static_cast<double>(m[i]));
    sum += std::complex<double>(c.re().get_d(), c.im().get_d()) * v;
  }
  return sum;
}

// Orthonormal basis of the tangent space of S^{N-1} at unit x.
inline std::vector<Eigen::VectorXd> tangent_basis(const std::vector<double>& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) a(i, 0) = x[static_cast<std::size_t>(i)];
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  std::vector<Eigen::VectorXd> out;
  for (Eigen::Index j = 1; j < n; ++j) out.push_back(q.col(j));
  return out;
}

inline std::vector<double> geodesic(const std::vector<double>& x, const Eigen::VectorXd& e, double t) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = std::cos(t) * x[i] + std::sin(t) * e(static_cast<Eigen::Index>(i));
  }
  return y;
}

// Laplace-Beltrami on the unit sphere as the sum of second derivatives
// along great circles through x in orthonormal tangent directions.
inline std::complex<double> laplace_beltrami(const eigsphere::Polynomial& p,
                                             const std::vector<double>& x, double h = 1e-3) {
  const auto f0 = eval(p, x);
  std::complex<double> acc{0.0, 0.0};
  for (const auto& e : tangent_basis(x)) {
    acc += (eval(p, geodesic(x, e, h)) - 2.0 * f0 + eval(p, geodesic(x, e, -h))) / (h * h);
  }
  return acc;
}

// Complex-bilinear square of the sphere gradient, sum_i (d/dt f(gamma_i))^2.
inline std::complex<double> tangential_gradient_square(const eigsphere::Polynomial& p,
                                                       const std::vector<double>& x,
                                                       double h = 1e-5) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& e : tangent_basis(x)) {
    const auto d = (eval(p, geodesic(x, e, h)) - eval(p, geodesic(x, e, -h))) / (2.0 * h);
    acc += d * d;
  }
  return acc;
}

// Laplacian of a radial function r^{2k} in N dimensions:
// f'' + (N-1)/r f' = 2k(2k-1) + 2k(N-1), times r^{2k-2}.
inline long radial_laplacian_factor(long n, long k) { return 2 * k * (2 * k - 1) + 2 * k * (n - 1); }

}  // namespace oracle
