#pragma once

#include <cstddef>
#include <vector>

#include "eigsphere/polynomial.hpp"

namespace eigsphere {

using PolyVector = std::vector<Polynomial>;

/// N x N polynomial matrix, row-major. Hessians are exactly symmetric.
class PolyMatrix {
 public:
  explicit PolyMatrix(std::size_t n) : n_(n), entries_(n * n, Polynomial(n)) {}

  std::size_t size() const { return n_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  Polynomial trace() const;

 private:
  std::size_t n_;
  std::vector<Polynomial> entries_;
};

/// d p / d x_{i+1}; i is 0-based. Throws IndexOutOfRange.
Polynomial partial(const Polynomial& p, std::size_t i);

PolyVector gradient(const Polynomial& p);
PolyMatrix hessian(const Polynomial& p);

/// Flat Euclidean Laplacian on R^N.
Polynomial laplacian(const Polynomial& p);

/// Complex-bilinear gradient pairing sum_i (d_i p)(d_i q). No conjugation:
/// kappa(z1, z1) = 0.
Polynomial kappa(const Polynomial& p, const Polynomial& q);

/// Hess p (grad p, grad p) = sum_ij (d_ij p)(d_i p)(d_j p).
Polynomial hess_grad_grad(const Polynomial& p);

/// Euler operator sum_i x_i d_i p.
Polynomial euler(const Polynomial& p);

/// True iff r^2 does not divide p. Throws ZeroPolynomial for p = 0.
bool r2_coprime(const Polynomial& p);

/// Checks Lap(phi psi) = Lap(phi) psi + 2 kappa(phi, psi) + phi Lap(psi)
/// exactly.
bool identity_one_check(const Polynomial& phi, const Polynomial& psi);

}  // namespace eigsphere
