#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eigsphere/polynomial.hpp"
#include "eigsphere/rng.hpp"

namespace eigsphere {

/// Random polynomial with small integer/rational Gaussian coefficients.
Polynomial random_polynomial(Rng& rng, std::size_t nvars, unsigned max_degree, unsigned nterms,
                             bool complex_coeffs = true);

/// Random homogeneous polynomial of the given degree.
Polynomial random_homogeneous(Rng& rng, std::size_t nvars, unsigned degree, unsigned nterms,
                              bool complex_coeffs = true);

/// Nonzero real harmonic homogeneous polynomial of degree k: a random
/// rational combination of Re/Im parts of products of (x_a + i x_b)^j over
/// disjoint coordinate pairs.
Polynomial random_harmonic(Rng& rng, std::size_t nvars, unsigned degree);

struct SelftestItem {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
};

/// Exact identity suite: ring axioms, product rule for the Laplacian,
/// Euler identity, Laplacian of r^{2k}, Hessian golden value, harmonic
/// polynomials coprime to r^2.
std::vector<SelftestItem> run_selftest(std::uint64_t seed = 1);

}  // namespace eigsphere
