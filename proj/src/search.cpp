#include "eigsphere/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "eigsphere/eigenfunction.hpp"
#include "eigsphere/error.hpp"
#include "eigsphere/rng.hpp"

namespace eigsphere {

namespace {

using IndexMap = std::map<Monomial, std::size_t, GrlexDescending>;

IndexMap index_of(const std::vector<Monomial>& ms) {
  IndexMap out;
  for (std::size_t k = 0; k < ms.size(); ++k) out.emplace(ms[k], k);
  return out;
}

}  // namespace

EigenResidual::EigenResidual(std::size_t nvars, unsigned degree)
    : nvars_(nvars), degree_(degree), basis_(monomials_of_degree(nvars, degree)) {
  if (nvars == 0 || degree == 0) {
    throw Error(ErrorKind::InvalidArgument, "search needs nvars >= 1 and degree >= 1");
  }
  if (degree >= 2) {
    const auto lap_basis = monomials_of_degree(nvars, degree - 2);
    const auto lap_index = index_of(lap_basis);
    lap_rows_ = lap_basis.size();
    for (std::size_t col = 0; col < basis_.size(); ++col) {
      for (std::size_t i = 0; i < nvars; ++i) {
        const auto e = basis_[col][i];
        if (e < 2) continue;
        Monomial t = basis_[col];
        t[i] = e - 2;
        lap_.push_back({lap_index.at(t), col, static_cast<double>(e) * (e - 1)});
      }
    }
  }
  const auto kappa_basis = monomials_of_degree(nvars, 2 * degree - 2);
  const auto kappa_index = index_of(kappa_basis);
  kappa_rows_ = kappa_basis.size();
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    for (std::size_t b = a; b < basis_.size(); ++b) {
      for (std::size_t i = 0; i < nvars; ++i) {
        const auto ea = basis_[a][i];
        const auto eb = basis_[b][i];
        if (ea == 0 || eb == 0) continue;
        Monomial t = basis_[a] * basis_[b];
        t[i] -= 2;
        const double w = static_cast<double>(ea) * eb * (a == b ? 1.0 : 2.0);
        kappa_.push_back({kappa_index.at(t), a, b, w});
      }
    }
  }
}

Eigen::VectorXd EigenResidual::pack(std::span<const std::complex<double>> coeffs) const {
  const auto m = static_cast<Eigen::Index>(basis_.size());
  if (coeffs.size() != basis_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector length differs from basis");
  }
  Eigen::VectorXd theta(2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    theta(k) = coeffs[static_cast<std::size_t>(k)].real();
    theta(m + k) = coeffs[static_cast<std::size_t>(k)].imag();
  }
  return theta;
}

std::vector<std::complex<double>> EigenResidual::unpack(const Eigen::VectorXd& theta) const {
  const auto m = static_cast<Eigen::Index>(basis_.size());
  std::vector<std::complex<double>> c(basis_.size());
  for (Eigen::Index k = 0; k < m; ++k) c[static_cast<std::size_t>(k)] = {theta(k), theta(m + k)};
  return c;
}

Eigen::VectorXd EigenResidual::operator()(const Eigen::VectorXd& theta) const {
  const auto c = unpack(theta);
  std::vector<std::complex<double>> lap(lap_rows_), kap(kappa_rows_);
  for (const auto& e : lap_) lap[e.row] += e.weight * c[e.col];
  for (const auto& e : kappa_) kap[e.row] += e.weight * c[e.a] * c[e.b];

  Eigen::VectorXd r(static_cast<Eigen::Index>(residuals()));
  Eigen::Index row = 0;
  for (const auto& v : lap) r(row++) = v.real();
  for (const auto& v : lap) r(row++) = v.imag();
  for (const auto& v : kap) r(row++) = v.real();
  for (const auto& v : kap) r(row++) = v.imag();
  r(row) = theta.squaredNorm() - 1.0;
  return r;
}

Eigen::MatrixXd EigenResidual::jacobian(const Eigen::VectorXd& theta) const {
  const auto c = unpack(theta);
  const std::size_t m = basis_.size();
  // Complex Jacobian of the holomorphic part, then the real 2x2 block form
  // d(Re r, Im r)/d(Re c, Im c) = [[Re J, -Im J], [Im J, Re J]].
  Eigen::MatrixXcd jc = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(lap_rows_ + kappa_rows_),
                                               static_cast<Eigen::Index>(m));
  for (const auto& e : lap_) {
    jc(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += e.weight;
  }
  for (const auto& e : kappa_) {
    const auto row = static_cast<Eigen::Index>(lap_rows_ + e.row);
    jc(row, static_cast<Eigen::Index>(e.a)) += e.weight * c[e.b];
    jc(row, static_cast<Eigen::Index>(e.b)) += e.weight * c[e.a];
  }

  const auto mm = static_cast<Eigen::Index>(m);
  const auto lr = static_cast<Eigen::Index>(lap_rows_);
  const auto kr = static_cast<Eigen::Index>(kappa_rows_);
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(residuals()), 2 * mm);
  auto place = [&](Eigen::Index src, Eigen::Index rows, Eigen::Index dst) {
    const auto block = jc.middleRows(src, rows);
    j.block(dst, 0, rows, mm) = block.real();
    j.block(dst, mm, rows, mm) = -block.imag();
    j.block(dst + rows, 0, rows, mm) = block.imag();
    j.block(dst + rows, mm, rows, mm) = block.real();
  };
  place(0, lr, 0);
  place(lr, kr, 2 * lr);
  j.row(j.rows() - 1) = 2.0 * theta.transpose();
  return j;
}

double residual_norm(const EigenResidual& map, std::span<const std::complex<double>> coeffs) {
  return map(map.pack(coeffs)).norm();
}

namespace {

// Levenberg-Marquardt restricted to the complex coefficients with
// free[k] = true; fixed ones keep their value.
Eigen::VectorXd levenberg_marquardt(const EigenResidual& map, Eigen::VectorXd theta,
                                    const std::vector<bool>& free, int max_iterations) {
  const auto m = static_cast<Eigen::Index>(map.basis().size());
  Eigen::VectorXd mask(2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    mask(k) = mask(m + k) = free[static_cast<std::size_t>(k)] ? 1.0 : 0.0;
  }
  Eigen::VectorXd r = map(theta);
  double cost = r.squaredNorm();
  double damping = 1e-3;
  for (int it = 0; it < max_iterations && cost > 1e-32; ++it) {
    Eigen::MatrixXd j = map.jacobian(theta) * mask.asDiagonal();
    const Eigen::MatrixXd a = j.transpose() * j;
    const Eigen::VectorXd g = j.transpose() * r;
    bool improved = false;
    while (damping < 1e16) {
      Eigen::MatrixXd lhs = a;
      for (Eigen::Index k = 0; k < lhs.rows(); ++k) {
        lhs(k, k) += damping * std::max(a(k, k), 1e-12);
        if (mask(k) == 0.0) lhs(k, k) = 1.0;
      }
      const Eigen::VectorXd step = -lhs.ldlt().solve(g).cwiseProduct(mask);
      const Eigen::VectorXd trial = theta + step;
      const Eigen::VectorXd rt = map(trial);
      const double ct = rt.squaredNorm();
      if (std::isfinite(ct) && ct < cost) {
        const double rel = step.norm() / (1.0 + theta.norm());
        theta = trial;
        r = rt;
        cost = ct;
        damping = std::max(damping / 3.0, 1e-12);
        improved = rel > 1e-16;
        break;
      }
      damping *= 4.0;
    }
    if (!improved) break;
  }
  return theta;
}

SearchResult run_attempt(const EigenResidual& map, std::size_t attempt, const SearchOptions& opts) {
  const std::size_t m = map.basis().size();
  Rng rng = make_rng(opts.seed, attempt);
  Eigen::VectorXd theta(static_cast<Eigen::Index>(2 * m));
  const auto init = gaussian_vector(rng, 2 * m);
  for (std::size_t k = 0; k < 2 * m; ++k) theta(static_cast<Eigen::Index>(k)) = init[k];
  theta /= theta.norm();

  std::vector<bool> free(m, true);
  theta = levenberg_marquardt(map, theta, free, opts.max_iterations);
  double residual = map(theta).norm();

  if (opts.sparsify && residual < opts.success_residual) {
    // Greedily zero the smallest remaining coefficient and re-solve; keep
    // the zero only if the solution survives.
    std::vector<bool> tried(m, false);
    for (;;) {
      const auto c = map.unpack(theta);
      std::size_t pick = m;
      for (std::size_t k = 0; k < m; ++k) {
        if (!free[k] || tried[k]) continue;
        if (pick == m || std::abs(c[k]) < std::abs(c[pick])) pick = k;
      }
      if (pick == m) break;
      tried[pick] = true;
      Eigen::VectorXd trial = theta;
      trial(static_cast<Eigen::Index>(pick)) = 0.0;
      trial(static_cast<Eigen::Index>(m + pick)) = 0.0;
      if (trial.norm() == 0.0) continue;
      trial /= trial.norm();
      std::vector<bool> trial_free = free;
      trial_free[pick] = false;
      trial = levenberg_marquardt(map, trial, trial_free, opts.max_iterations);
      const double tr = map(trial).norm();
      if (tr < opts.success_residual) {
        theta = trial;
        free = trial_free;
        residual = tr;
      }
    }
  }

  SearchResult out;
  out.attempt = attempt;
  out.coefficients = map.unpack(theta);
  out.residual = residual;
  if (residual < opts.success_residual && map.nvars() >= 3) {
    auto scaled = out.coefficients;
    std::size_t lead = 0;
    for (std::size_t k = 1; k < m; ++k) {
      if (std::abs(scaled[k]) > std::abs(scaled[lead])) lead = k;
    }
    const std::complex<double> pivot = scaled[lead];
    for (auto& v : scaled) v /= pivot;
    out.exact = rationalize_and_verify(map.nvars(), map.degree(), scaled, opts.denominator_bound);
  }
  return out;
}

void sort_results(std::vector<SearchResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) {
    if (a.residual != b.residual) return a.residual < b.residual;
    return a.attempt < b.attempt;
  });
}

void check_search_args(std::size_t nvars, unsigned degree) {
  if (nvars < 3) throw Error(ErrorKind::InvalidArgument, "search needs at least 3 variables");
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "search needs degree >= 1");
}

}  // namespace

std::vector<SearchResult> search_eigen_serial(std::size_t nvars, unsigned degree,
                                              const SearchOptions& opts) {
  check_search_args(nvars, degree);
  const EigenResidual map(nvars, degree);
  std::vector<SearchResult> results;
  for (std::size_t a = 0; a < opts.attempts; ++a) results.push_back(run_attempt(map, a, opts));
  sort_results(results);
  return results;
}

std::vector<SearchResult> search_eigen(std::size_t nvars, unsigned degree,
                                       const SearchOptions& opts) {
  check_search_args(nvars, degree);
  const EigenResidual map(nvars, degree);
  std::vector<SearchResult> results(opts.attempts);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(opts.attempts); ++a) {
    results[static_cast<std::size_t>(a)] = run_attempt(map, static_cast<std::size_t>(a), opts);
  }
  sort_results(results);
  return results;
}

Rational nearest_rational(double x, unsigned bound) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidArgument, "non-finite coefficient");
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "denominator bound must be positive");
  long best_p = std::lround(x);
  long best_q = 1;
  double best_err = std::abs(x - static_cast<double>(best_p));
  for (long q = 2; q <= static_cast<long>(bound); ++q) {
    const long p = std::lround(x * static_cast<double>(q));
    const double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
    if (err < best_err) {
      best_err = err;
      best_p = p;
      best_q = q;
    }
  }
  Rational r(best_p, best_q);
  r.canonicalize();
  return r;
}

std::optional<Polynomial> rationalize_and_verify(std::size_t nvars, unsigned degree,
                                                 std::span<const std::complex<double>> coeffs,
                                                 unsigned denominator_bound) {
  const auto basis = monomials_of_degree(nvars, degree);
  if (coeffs.size() != basis.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector length differs from basis");
  }
  Polynomial::Terms terms;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!std::isfinite(coeffs[k].real()) || !std::isfinite(coeffs[k].imag())) return std::nullopt;
    GaussianRational c(nearest_rational(coeffs[k].real(), denominator_bound),
                       nearest_rational(coeffs[k].imag(), denominator_bound));
    if (!c.is_zero()) terms.emplace(basis[k], c);
  }
  Polynomial p(nvars, std::move(terms));
  if (p.is_zero() || nvars < 3) return std::nullopt;
  if (!verify_eigenfunction(p, static_cast<std::uint32_t>(nvars - 1)).is_eigen) return std::nullopt;
  return p;
}

}  // namespace eigsphere
