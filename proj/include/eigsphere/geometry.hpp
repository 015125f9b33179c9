#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "eigsphere/polynomial.hpp"

namespace eigsphere {

using Point = std::vector<double>;

/// Zero set of real polynomial constraints g1..gc, optionally intersected
/// with the unit sphere (g0 = (|x|^2 - 1)/2, always ordered first).
struct VarietySpec {
  std::size_t nvars = 0;
  std::vector<Polynomial> constraints;
  bool include_sphere = true;
};

struct NumericOptions {
  double tol = 1e-12;      ///< max |g_a(x)| accepted as on-variety
  double eps_reg = 1e-8;   ///< smallest Jacobian singular value for a regular point
  int maxiter = 50;
};

/// Compiled values, gradients and Hessians of every constraint of a spec.
/// Immutable after construction and safe to share across threads.
class VarietyEvaluator {
 public:
  /// Throws DimensionMismatch, InvalidArgument (complex constraint or too
  /// many constraints for a positive-dimensional target).
  explicit VarietyEvaluator(const VarietySpec& spec);

  std::size_t nvars() const { return nvars_; }
  /// Number of constraints including the sphere.
  std::size_t rows() const { return rows_; }
  bool include_sphere() const { return include_sphere_; }

  Eigen::VectorXd values(std::span<const double> x) const;
  Eigen::MatrixXd jacobian(std::span<const double> x) const;
  /// Hessian of constraint a (0 is the sphere when included).
  Eigen::MatrixXd hessian(std::size_t a, std::span<const double> x) const;

 private:
  struct Compiled {
    CompiledPolynomial value;
    std::vector<CompiledPolynomial> grad;
    std::vector<CompiledPolynomial> hess;  // upper triangle, row-major
  };
  std::size_t nvars_;
  std::size_t rows_;
  bool include_sphere_;
  std::vector<Compiled> user_;
};

/// Least-squares Newton x <- x - J^+ g(x) until max |g| < tol. The
/// pseudo-inverse truncates singular values below eps_reg so rank-deficient
/// iterates still take the minimum-norm step.
///
/// Throws NonConvergence after maxiter steps and SingularJacobian when the
/// converged point has smallest Jacobian singular value below eps_reg.
Point newton_project(const VarietyEvaluator& ev, std::span<const double> seed,
                     const NumericOptions& opts = {});
Point newton_project(const VarietySpec& spec, std::span<const double> seed,
                     const NumericOptions& opts = {});

/// Smallest of the rows() singular values of the constraint Jacobian.
double jacobian_regularity(const VarietyEvaluator& ev, std::span<const double> x);

struct PointCloud {
  std::size_t nvars = 0;
  std::vector<Point> points;
  std::vector<double> residuals;   ///< max |g_a(x)|, sphere included
  std::vector<double> regularity;  ///< smallest Jacobian singular value
  std::optional<std::vector<std::array<double, 3>>> stereo;

  double tol = 0.0;
  std::uint64_t rng_seed = 0;
  std::size_t requested = 0;
  std::size_t attempts = 0;       ///< seeds tried up to the last accepted one
  std::size_t nonconverged = 0;
  std::size_t singular = 0;       ///< converged but below eps_reg

  std::size_t size() const { return points.size(); }
};

/// Draws Gaussian seeds (normalized when the sphere is included), projects
/// them and keeps converged regular points, up to `count` points within
/// 10*count attempts. Seed index s uses the substream (rng_seed, s); points
/// are ordered by seed index. Never throws for low yield.
PointCloud collect_samples(const VarietyEvaluator& ev, std::size_t count, std::uint64_t rng_seed,
                           const NumericOptions& opts = {});
/// Single-threaded reference for collect_samples; identical output.
PointCloud collect_samples_serial(const VarietyEvaluator& ev, std::size_t count,
                                  std::uint64_t rng_seed, const NumericOptions& opts = {});

/// collect_samples plus the yield contract: throws InsufficientYield when
/// fewer than count/2 points were found, InvalidArgument for count = 0.
PointCloud sample(const VarietySpec& spec, std::size_t count, std::uint64_t rng_seed,
                  const NumericOptions& opts = {});

struct CurvatureSample {
  Point point;
  /// <H, nu_b> for the sphere-intrinsic unit normals nu_1..nu_c.
  std::vector<double> normal_components;
  /// <H, x>; equals -(N - 1 - c) on the unit sphere.
  double radial_component = 0.0;
  double frame_condition = 0.0;
};

/// Mean curvature of the level-set submanifold at an on-variety point via
/// Gram-Schmidt normals nu_b = sum_a C_ba grad g_a and
///   <H, nu_b> = -sum_i (sum_a C_ba Hess g_a)(e_i, e_i)
/// over an orthonormal tangent basis e_i. Requires include_sphere.
/// Throws SingularJacobian, OffVariety (residual > 10*tol).
CurvatureSample mean_curvature(const VarietyEvaluator& ev, std::span<const double> x,
                               const NumericOptions& opts = {});
CurvatureSample mean_curvature(const VarietySpec& spec, std::span<const double> x,
                               const NumericOptions& opts = {});

/// mean_curvature over every point, OpenMP-parallel; results keep point
/// order. Points that throw are reported through `failures` (index list).
std::vector<CurvatureSample> curvature_batch(const VarietyEvaluator& ev,
                                             const std::vector<Point>& points,
                                             const NumericOptions& opts = {},
                                             std::vector<std::size_t>* failures = nullptr);
std::vector<CurvatureSample> curvature_batch_serial(const VarietyEvaluator& ev,
                                                    const std::vector<Point>& points,
                                                    const NumericOptions& opts = {},
                                                    std::vector<std::size_t>* failures = nullptr);

/// Euclidean mean curvature of the level set {P = P(x)} at x:
///   (Lap P |grad P|^2 - Hess P(grad P, grad P)) / |grad P|^3.
class ConeCurvature {
 public:
  /// P must be real.
  explicit ConeCurvature(const Polynomial& p);

  /// Throws DegeneratePoint when |grad P(x)| <= eps_reg.
  double operator()(std::span<const double> x, double eps_reg = 1e-8) const;
  /// Hess P(grad P, grad P)(x) / |grad P(x)|^3 (the normalized criterion).
  double normalized_criterion(std::span<const double> x, double eps_reg = 1e-8) const;
  double gradient_norm(std::span<const double> x) const;

 private:
  void eval(std::span<const double> x, Eigen::VectorXd& g, Eigen::MatrixXd& h) const;

  std::size_t nvars_;
  std::vector<CompiledPolynomial> grad_;
  std::vector<CompiledPolynomial> hess_;  // full N x N
};

double cone_mean_curvature(const Polynomial& p, std::span<const double> x, double eps_reg = 1e-8);

/// x in S^3 (any N, pole 1-based): y_i = x_i / (1 - x_pole) over the other
/// coordinates. Throws PoleSingularity near the pole.
std::vector<double> stereographic(std::span<const double> x, std::size_t pole);

/// Fills pc.stereo; requires nvars = 4.
void add_stereographic(PointCloud& pc, std::size_t pole);

/// CSV: header x1..xN[,s1,s2,s3],residual,regularity; 17 significant digits;
/// rows in generation order. Throws IOError.
void export_cloud(const PointCloud& pc, const std::filesystem::path& path);
/// Reads a file written by export_cloud.
PointCloud read_cloud(const std::filesystem::path& path);

}  // namespace eigsphere
