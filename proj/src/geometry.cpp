#include "eigsphere/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <omp.h>

#include "eigsphere/calculus.hpp"
#include "eigsphere/error.hpp"
#include "eigsphere/rng.hpp"

namespace eigsphere {

namespace {

Eigen::Map<const Eigen::VectorXd> as_vec(std::span<const double> x) {
  return {x.data(), static_cast<Eigen::Index>(x.size())};
}

void require_dim(std::size_t expected, std::span<const double> x) {
  if (x.size() != expected) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                  " coordinates, expected " +
                                                  std::to_string(expected));
  }
}

}  // namespace

VarietyEvaluator::VarietyEvaluator(const VarietySpec& spec)
    : nvars_(spec.nvars),
      rows_(spec.constraints.size() + (spec.include_sphere ? 1 : 0)),
      include_sphere_(spec.include_sphere) {
  if (nvars_ == 0) throw Error(ErrorKind::InvalidArgument, "variety in zero variables");
  if (include_sphere_ && rows_ + 1 > nvars_) {
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(rows_) + " constraints leave no positive-dimensional set in R^" +
                    std::to_string(nvars_));
  }
  for (const auto& g : spec.constraints) {
    if (g.nvars() != nvars_) {
      throw Error(ErrorKind::DimensionMismatch, "constraint variable count differs from spec");
    }
    if (!g.is_real()) {
      throw Error(ErrorKind::InvalidArgument,
                  "constraints must have real coefficients; split complex ones into Re/Im");
    }
    Compiled c;
    c.value = CompiledPolynomial(g);
    const PolyVector grad = gradient(g);
    for (std::size_t i = 0; i < nvars_; ++i) {
      c.grad.emplace_back(grad[i]);
      for (std::size_t j = i; j < nvars_; ++j) c.hess.emplace_back(partial(grad[i], j));
    }
    user_.push_back(std::move(c));
  }
}

Eigen::VectorXd VarietyEvaluator::values(std::span<const double> x) const {
  require_dim(nvars_, x);
  Eigen::VectorXd v(static_cast<Eigen::Index>(rows_));
  Eigen::Index r = 0;
  if (include_sphere_) v(r++) = 0.5 * (as_vec(x).squaredNorm() - 1.0);
  for (const auto& c : user_) v(r++) = c.value.real(x);
  return v;
}

Eigen::MatrixXd VarietyEvaluator::jacobian(std::span<const double> x) const {
  require_dim(nvars_, x);
  const auto n = static_cast<Eigen::Index>(nvars_);
  Eigen::MatrixXd j(static_cast<Eigen::Index>(rows_), n);
  Eigen::Index r = 0;
  if (include_sphere_) j.row(r++) = as_vec(x).transpose();
  for (const auto& c : user_) {
    for (Eigen::Index i = 0; i < n; ++i) j(r, i) = c.grad[static_cast<std::size_t>(i)].real(x);
    ++r;
  }
  return j;
}

Eigen::MatrixXd VarietyEvaluator::hessian(std::size_t a, std::span<const double> x) const {
  require_dim(nvars_, x);
  const auto n = static_cast<Eigen::Index>(nvars_);
  if (include_sphere_) {
    if (a == 0) return Eigen::MatrixXd::Identity(n, n);
    --a;
  }
  const Compiled& c = user_.at(a);
  Eigen::MatrixXd h(n, n);
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      h(i, j) = h(j, i) = c.hess[k++].real(x);
    }
  }
  return h;
}

double jacobian_regularity(const VarietyEvaluator& ev, std::span<const double> x) {
  const Eigen::MatrixXd j = ev.jacobian(x);
  if (j.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j);
  const auto& s = svd.singularValues();
  // rows() <= nvars, so there are exactly rows() singular values.
  return s(s.size() - 1);
}

namespace {

// Minimum-norm least-squares solution of J d = g, dropping singular values
// at or below cutoff.
Eigen::VectorXd pinv_step(const Eigen::MatrixXd& j, const Eigen::VectorXd& g, double cutoff) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const Eigen::VectorXd ug = svd.matrixU().transpose() * g;
  Eigen::VectorXd coeff = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > cutoff) coeff(k) = ug(k) / s(k);
  }
  return svd.matrixV() * coeff;
}

}  // namespace

Point newton_project(const VarietyEvaluator& ev, std::span<const double> seed,
                     const NumericOptions& opts) {
  require_dim(ev.nvars(), seed);
  if (!(opts.tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");
  Eigen::VectorXd x = as_vec(seed);
  std::span<const double> xs(x.data(), ev.nvars());
  for (int it = 0;; ++it) {
    const Eigen::VectorXd g = ev.values(xs);
    if (!g.allFinite() || !x.allFinite()) break;
    if (g.size() == 0 || g.cwiseAbs().maxCoeff() < opts.tol) {
      if (g.size() > 0) {
        // One more step reaches rounding level; keep it only if it helps.
        Eigen::VectorXd polished = x - pinv_step(ev.jacobian(xs), g, opts.eps_reg);
        std::span<const double> ps(polished.data(), ev.nvars());
        if (ev.values(ps).cwiseAbs().maxCoeff() < g.cwiseAbs().maxCoeff()) x = polished;
      }
      const double sigma = jacobian_regularity(ev, xs);
      if (sigma < opts.eps_reg) {
        throw Error(ErrorKind::SingularJacobian,
                    "smallest singular value " + std::to_string(sigma) + " at converged point");
      }
      return Point(x.data(), x.data() + x.size());
    }
    if (it >= opts.maxiter) break;
    x -= pinv_step(ev.jacobian(xs), g, opts.eps_reg);
  }
  throw Error(ErrorKind::NonConvergence,
              "Newton projection did not reach tol " + std::to_string(opts.tol) + " in " +
                  std::to_string(opts.maxiter) + " iterations");
}

Point newton_project(const VarietySpec& spec, std::span<const double> seed,
                     const NumericOptions& opts) {
  return newton_project(VarietyEvaluator(spec), seed, opts);
}

namespace {

enum class AttemptStatus { Accepted, NonConverged, Singular };

struct Attempt {
  AttemptStatus status = AttemptStatus::NonConverged;
  Point point;
  double residual = 0.0;
  double regularity = 0.0;
};

Attempt run_attempt(const VarietyEvaluator& ev, std::uint64_t rng_seed, std::size_t index,
                    const NumericOptions& opts) {
  Rng rng = make_rng(rng_seed, index);
  Point seed = ev.include_sphere() ? random_sphere_point(rng, ev.nvars())
                                   : gaussian_vector(rng, ev.nvars());
  Attempt a;
  try {
    a.point = newton_project(ev, seed, opts);
  } catch (const Error& e) {
    a.status = e.kind() == ErrorKind::SingularJacobian ? AttemptStatus::Singular
                                                       : AttemptStatus::NonConverged;
    return a;
  }
  a.status = AttemptStatus::Accepted;
  a.residual = ev.values(a.point).cwiseAbs().maxCoeff();
  a.regularity = jacobian_regularity(ev, a.point);
  return a;
}

PointCloud empty_cloud(const VarietyEvaluator& ev, std::size_t count, std::uint64_t rng_seed,
                       const NumericOptions& opts) {
  PointCloud pc;
  pc.nvars = ev.nvars();
  pc.tol = opts.tol;
  pc.rng_seed = rng_seed;
  pc.requested = count;
  return pc;
}

// Consumes attempts in seed-index order; returns true once `count` points
// have been accepted.
bool absorb(PointCloud& pc, Attempt&& a) {
  ++pc.attempts;
  switch (a.status) {
    case AttemptStatus::Accepted:
      pc.points.push_back(std::move(a.point));
      pc.residuals.push_back(a.residual);
      pc.regularity.push_back(a.regularity);
      break;
    case AttemptStatus::NonConverged: ++pc.nonconverged; break;
    case AttemptStatus::Singular: ++pc.singular; break;
  }
  return pc.points.size() >= pc.requested;
}

}  // namespace

PointCloud collect_samples_serial(const VarietyEvaluator& ev, std::size_t count,
                                  std::uint64_t rng_seed, const NumericOptions& opts) {
  PointCloud pc = empty_cloud(ev, count, rng_seed, opts);
  const std::size_t max_attempts = 10 * count;
  for (std::size_t s = 0; s < max_attempts; ++s) {
    if (absorb(pc, run_attempt(ev, rng_seed, s, opts))) break;
  }
  return pc;
}

PointCloud collect_samples(const VarietyEvaluator& ev, std::size_t count, std::uint64_t rng_seed,
                           const NumericOptions& opts) {
  PointCloud pc = empty_cloud(ev, count, rng_seed, opts);
  const std::size_t max_attempts = 10 * count;
  std::vector<Attempt> batch;
  for (std::size_t start = 0; start < max_attempts && pc.points.size() < count;) {
    const std::size_t need = count - pc.points.size();
    const std::size_t len = std::min(max_attempts - start, std::max<std::size_t>(need, 16));
    batch.assign(len, Attempt{});
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(len); ++k) {
      batch[static_cast<std::size_t>(k)] =
          run_attempt(ev, rng_seed, start + static_cast<std::size_t>(k), opts);
    }
    for (auto& a : batch) {
      if (absorb(pc, std::move(a))) break;
    }
    start += len;
  }
  return pc;
}

PointCloud sample(const VarietySpec& spec, std::size_t count, std::uint64_t rng_seed,
                  const NumericOptions& opts) {
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "sample count must be at least 1");
  const VarietyEvaluator ev(spec);
  PointCloud pc = collect_samples(ev, count, rng_seed, opts);
  if (2 * pc.points.size() < count) {
    throw Error(ErrorKind::InsufficientYield,
                std::to_string(pc.points.size()) + " of " + std::to_string(count) +
                    " points after " + std::to_string(pc.attempts) + " attempts");
  }
  return pc;
}

CurvatureSample mean_curvature(const VarietyEvaluator& ev, std::span<const double> x,
                               const NumericOptions& opts) {
  if (!ev.include_sphere()) {
    throw Error(ErrorKind::InvalidArgument, "mean_curvature needs the sphere constraint");
  }
  const Eigen::VectorXd g = ev.values(x);
  const double residual = g.cwiseAbs().maxCoeff();
  if (residual > 10.0 * opts.tol) {
    throw Error(ErrorKind::OffVariety, "constraint residual " + std::to_string(residual));
  }
  const Eigen::MatrixXd jac = ev.jacobian(x);
  const double sigma = jacobian_regularity(ev, x);
  if (sigma < opts.eps_reg) {
    throw Error(ErrorKind::SingularJacobian, "smallest singular value " + std::to_string(sigma));
  }

  const auto n = static_cast<Eigen::Index>(ev.nvars());
  const auto m = static_cast<Eigen::Index>(ev.rows());
  // Gram-Schmidt on the constraint gradients (rows of jac), twice for
  // stability, tracking nu_b = sum_a C(b, a) grad g_a.
  Eigen::MatrixXd nu(n, m);
  Eigen::MatrixXd coeff = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index b = 0; b < m; ++b) {
    Eigen::VectorXd w = jac.row(b).transpose();
    Eigen::VectorXd r = Eigen::VectorXd::Unit(m, b);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < b; ++j) {
        const double p = nu.col(j).dot(w);
        w -= p * nu.col(j);
        r -= p * coeff.row(j).transpose();
      }
    }
    const double len = w.norm();
    nu.col(b) = w / len;
    coeff.row(b) = r.transpose() / len;
  }

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(nu);
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd tangent = q.rightCols(n - m);

  Eigen::VectorXd traces(m);
  for (Eigen::Index a = 0; a < m; ++a) {
    const Eigen::MatrixXd h = ev.hessian(static_cast<std::size_t>(a), x);
    traces(a) = (tangent.transpose() * h * tangent).trace();
  }
  const Eigen::VectorXd h_nu = -(coeff * traces);

  CurvatureSample out;
  out.point.assign(x.begin(), x.end());
  out.radial_component = h_nu(0);
  for (Eigen::Index b = 1; b < m; ++b) out.normal_components.push_back(h_nu(b));
  out.frame_condition = sigma;
  return out;
}

CurvatureSample mean_curvature(const VarietySpec& spec, std::span<const double> x,
                               const NumericOptions& opts) {
  return mean_curvature(VarietyEvaluator(spec), x, opts);
}

std::vector<CurvatureSample> curvature_batch_serial(const VarietyEvaluator& ev,
                                                    const std::vector<Point>& points,
                                                    const NumericOptions& opts,
                                                    std::vector<std::size_t>* failures) {
  std::vector<CurvatureSample> out(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    try {
      out[k] = mean_curvature(ev, points[k], opts);
    } catch (const Error&) {
      if (failures) failures->push_back(k);
    }
  }
  return out;
}

std::vector<CurvatureSample> curvature_batch(const VarietyEvaluator& ev,
                                             const std::vector<Point>& points,
                                             const NumericOptions& opts,
                                             std::vector<std::size_t>* failures) {
  std::vector<CurvatureSample> out(points.size());
  std::vector<char> failed(points.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(points.size()); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      out[idx] = mean_curvature(ev, points[idx], opts);
    } catch (const Error&) {
      failed[idx] = 1;
    }
  }
  if (failures) {
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (failed[k]) failures->push_back(k);
    }
  }
  return out;
}

ConeCurvature::ConeCurvature(const Polynomial& p) : nvars_(p.nvars()) {
  if (!p.is_real()) throw Error(ErrorKind::InvalidArgument, "cone curvature needs a real polynomial");
  const PolyVector grad = gradient(p);
  for (std::size_t i = 0; i < nvars_; ++i) {
    grad_.emplace_back(grad[i]);
    for (std::size_t j = 0; j < nvars_; ++j) hess_.emplace_back(partial(grad[i], j));
  }
}

void ConeCurvature::eval(std::span<const double> x, Eigen::VectorXd& g, Eigen::MatrixXd& h) const {
  require_dim(nvars_, x);
  const auto n = static_cast<Eigen::Index>(nvars_);
  g.resize(n);
  h.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i) = grad_[static_cast<std::size_t>(i)].real(x);
    for (Eigen::Index j = 0; j < n; ++j) {
      h(i, j) = hess_[static_cast<std::size_t>(i * n + j)].real(x);
    }
  }
}

double ConeCurvature::gradient_norm(std::span<const double> x) const {
  Eigen::VectorXd g;
  Eigen::MatrixXd h;
  eval(x, g, h);
  return g.norm();
}

double ConeCurvature::operator()(std::span<const double> x, double eps_reg) const {
  Eigen::VectorXd g;
  Eigen::MatrixXd h;
  eval(x, g, h);
  const double len = g.norm();
  if (len <= eps_reg) throw Error(ErrorKind::DegeneratePoint, "|grad P| = " + std::to_string(len));
  const double q = g.dot(h * g);
  return (h.trace() * len * len - q) / (len * len * len);
}

double ConeCurvature::normalized_criterion(std::span<const double> x, double eps_reg) const {
  Eigen::VectorXd g;
  Eigen::MatrixXd h;
  eval(x, g, h);
  const double len = g.norm();
  if (len <= eps_reg) throw Error(ErrorKind::DegeneratePoint, "|grad P| = " + std::to_string(len));
  return g.dot(h * g) / (len * len * len);
}

double cone_mean_curvature(const Polynomial& p, std::span<const double> x, double eps_reg) {
  return ConeCurvature(p)(x, eps_reg);
}

std::vector<double> stereographic(std::span<const double> x, std::size_t pole) {
  if (pole == 0 || pole > x.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "pole index " + std::to_string(pole));
  }
  const double denom = 1.0 - x[pole - 1];
  double dist2 = denom * denom;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i + 1 != pole) dist2 += x[i] * x[i];
  }
  if (dist2 < 1e-24 || std::abs(denom) < 1e-300) {
    throw Error(ErrorKind::PoleSingularity, "point coincides with the projection pole");
  }
  std::vector<double> y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i + 1 != pole) y.push_back(x[i] / denom);
  }
  return y;
}

void add_stereographic(PointCloud& pc, std::size_t pole) {
  if (pc.nvars != 4) throw Error(ErrorKind::InvalidArgument, "stereographic export needs 4 variables");
  std::vector<std::array<double, 3>> s;
  s.reserve(pc.points.size());
  for (const auto& p : pc.points) {
    const auto y = stereographic(p, pole);
    s.push_back({y[0], y[1], y[2]});
  }
  pc.stereo = std::move(s);
}

void export_cloud(const PointCloud& pc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IOError, "cannot open " + path.string());
  for (std::size_t i = 0; i < pc.nvars; ++i) out << (i ? "," : "") << "x" << i + 1;
  if (pc.stereo) out << ",s1,s2,s3";
  out << ",residual,regularity\n";
  out << std::setprecision(17);
  for (std::size_t r = 0; r < pc.points.size(); ++r) {
    for (std::size_t i = 0; i < pc.nvars; ++i) out << (i ? "," : "") << pc.points[r][i];
    if (pc.stereo) {
      for (double v : (*pc.stereo)[r]) out << "," << v;
    }
    out << "," << pc.residuals[r] << "," << pc.regularity[r] << "\n";
  }
  if (!out) throw Error(ErrorKind::IOError, "write failed for " + path.string());
}

PointCloud read_cloud(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IOError, "cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorKind::IOError, "missing CSV header");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  PointCloud pc;
  for (const auto& h : header) {
    if (!h.empty() && h[0] == 'x') ++pc.nvars;
  }
  const bool has_stereo = std::find(header.begin(), header.end(), "s1") != header.end();
  const std::size_t width = pc.nvars + (has_stereo ? 3 : 0) + 2;
  if (header.size() != width) throw Error(ErrorKind::IOError, "unexpected CSV header");
  if (has_stereo) pc.stereo.emplace();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != width) throw Error(ErrorKind::IOError, "ragged CSV row");
    pc.points.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(pc.nvars));
    std::size_t c = pc.nvars;
    if (has_stereo) {
      pc.stereo->push_back({row[c], row[c + 1], row[c + 2]});
      c += 3;
    }
    pc.residuals.push_back(row[c]);
    pc.regularity.push_back(row[c + 1]);
  }
  return pc;
}

}  // namespace eigsphere
