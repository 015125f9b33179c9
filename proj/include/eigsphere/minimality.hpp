#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eigsphere/geometry.hpp"
#include "eigsphere/polynomial.hpp"

namespace eigsphere {

enum class MinimalityStatus { ExactMinimal, NumericMinimal, NotMinimal, Inconclusive };

std::string_view to_string(MinimalityStatus s);

/// Summary of a sampled check.
struct NumericEvidence {
  std::size_t samples = 0;        ///< regular points evaluated
  std::size_t requested = 0;
  std::size_t attempts = 0;
  std::size_t singular = 0;       ///< converged but near-singular, discarded
  std::size_t nonconverged = 0;
  double max_residual = 0.0;      ///< max |criterion| over the samples
  double tol = 0.0;
  double reject = 0.0;
  std::uint64_t seed = 0;
  /// Codimension 2 only: max |radial component + dim M|.
  std::optional<double> max_radial_error;
  /// Codimension 2 on z1^k + z2^k only: max over points of
  /// min_j |z1 - zeta_j z2|, zeta_j the k-th roots of -1.
  std::optional<double> flat_section_residual;
};

struct Witness {
  Point x;
  double on_variety_residual = 0.0;
  double criterion = 0.0;
};

struct MinimalityVerdict {
  MinimalityStatus status = MinimalityStatus::Inconclusive;
  /// ExactMinimal: "Q = 0" or the rendered quotient Q / P.
  std::optional<std::string> certificate;
  std::optional<Polynomial> quotient;
  std::optional<NumericEvidence> numeric;
  std::optional<Witness> witness;
  std::optional<std::string> reason;
};

struct MinimalityOptions {
  std::size_t samples = 200;
  double tol = 1e-8;      ///< accept threshold on the normalized criterion
  double reject = 1e-3;   ///< refute threshold
  std::uint64_t seed = 1;
  /// Run the sampled check even when an exact certificate was found.
  bool cross_check = true;
  NumericOptions numeric{};
};

/// a Re F + b Im F with (a, b) divided by max(|a|, |b|). Throws ZeroLine.
Polynomial line_pullback(const Polynomial& f, const Rational& a, const Rational& b);

/// Minimality of F^{-1}(l) in S^n for the line l: a u + b v = 0, by the
/// criterion Hess P(grad P, grad P) = 0 on P^{-1}(0), P = a Re F + b Im F.
///
/// Ladder: Q = 0 or P | Q gives ExactMinimal; otherwise the sampled
/// normalized criterion Q / |grad P|^3 decides NumericMinimal / NotMinimal /
/// Inconclusive. F must be homogeneous with Lap F = 0 and kappa(F, F) = 0.
/// Throws NotAnEigenfunction, ZeroLine, DimensionMismatch.
MinimalityVerdict check_minimal_codim1(const Polynomial& f, const Rational& a, const Rational& b,
                                       std::uint32_t n, const MinimalityOptions& opts = {});

/// Samples F^{-1}(0) on S^n and checks that the sphere-intrinsic mean
/// curvature vanishes. Throws NotAnEigenfunction, EmptyFiber, SingularFiber
/// (also raised up front when Re F or Im F vanishes identically).
MinimalityVerdict check_minimal_codim2(const Polynomial& f, std::uint32_t n,
                                       const MinimalityOptions& opts = {});

struct ConformalityReport {
  Polynomial difference;  ///< kappa(u,u) - kappa(v,v)
  Polynomial cross;       ///< kappa(u,v)
  bool conformal() const { return difference.is_zero() && cross.is_zero(); }
};

ConformalityReport conformality_diagnostics(const Polynomial& f);

enum class LawsonType { Sphere, Torus, KleinBottle };

std::string_view to_string(LawsonType t);

/// Topology of the Lawson surface tau_{n,m}. Throws BothZero.
LawsonType classify_lawson(unsigned n, unsigned m);

/// z1^n z2^m in nvars >= 4 real variables.
Polynomial lawson_polynomial(unsigned n, unsigned m, std::size_t nvars = 4);

/// k when f equals z1^k + z2^k exactly.
std::optional<unsigned> flat_section_degree(const Polynomial& f);

/// max over points of min_j |z1 - zeta_j z2| with zeta_j^k = -1.
double flat_section_residual(std::span<const Point> points, unsigned k);

}  // namespace eigsphere
