#include "eigsphere/minimality.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "eigsphere/calculus.hpp"
#include "eigsphere/eigenfunction.hpp"
#include "eigsphere/error.hpp"

namespace eigsphere {

std::string_view to_string(MinimalityStatus s) {
  switch (s) {
    case MinimalityStatus::ExactMinimal: return "ExactMinimal";
    case MinimalityStatus::NumericMinimal: return "NumericMinimal";
    case MinimalityStatus::NotMinimal: return "NotMinimal";
    case MinimalityStatus::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

std::string_view to_string(LawsonType t) {
  switch (t) {
    case LawsonType::Sphere: return "Sphere";
    case LawsonType::Torus: return "Torus";
    case LawsonType::KleinBottle: return "KleinBottle";
  }
  return "Unknown";
}

Polynomial line_pullback(const Polynomial& f, const Rational& a, const Rational& b) {
  if (sgn(a) == 0 && sgn(b) == 0) throw Error(ErrorKind::ZeroLine, "line coefficients (0, 0)");
  const Rational scale = std::max(Rational(abs(a)), Rational(abs(b)));
  const auto [re, im] = real_imag_parts(f);
  return GaussianRational(a / scale) * re + GaussianRational(b / scale) * im;
}

namespace {

void require_flat_eigen(const Polynomial& f, std::uint32_t n) {
  const EigenReport r = verify_eigenfunction(f, n);
  if (!r.is_eigen) {
    throw Error(ErrorKind::NotAnEigenfunction,
                "failed condition " + std::string(to_string(r.failure->condition)));
  }
}

NumericEvidence evidence_from(const PointCloud& pc, const MinimalityOptions& opts) {
  NumericEvidence ev;
  ev.samples = pc.size();
  ev.requested = pc.requested;
  ev.attempts = pc.attempts;
  ev.singular = pc.singular;
  ev.nonconverged = pc.nonconverged;
  ev.tol = opts.tol;
  ev.reject = opts.reject;
  ev.seed = opts.seed;
  return ev;
}

MinimalityStatus decide(double max_residual, const MinimalityOptions& opts) {
  if (max_residual < opts.tol) return MinimalityStatus::NumericMinimal;
  if (max_residual > opts.reject) return MinimalityStatus::NotMinimal;
  return MinimalityStatus::Inconclusive;
}

struct Codim1Numeric {
  NumericEvidence evidence;
  std::optional<Witness> worst;
  bool enough = false;
};

Codim1Numeric sample_codim1(const Polynomial& p, const MinimalityOptions& opts) {
  const VarietyEvaluator ev(VarietySpec{p.nvars(), {p}, true});
  const PointCloud pc = collect_samples(ev, opts.samples, opts.seed, opts.numeric);
  const ConeCurvature cone(p);

  std::vector<double> crit(pc.size(), 0.0);
  std::vector<char> degenerate(pc.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(pc.size()); ++k) {
    const auto idx = static_cast<std::size_t>(k);
    try {
      crit[idx] = cone.normalized_criterion(pc.points[idx], opts.numeric.eps_reg);
    } catch (const Error&) {
      degenerate[idx] = 1;
    }
  }

  Codim1Numeric out;
  out.evidence = evidence_from(pc, opts);
  for (std::size_t k = 0; k < pc.size(); ++k) {
    if (degenerate[k]) {
      --out.evidence.samples;
      ++out.evidence.singular;
      continue;
    }
    const double q = std::abs(crit[k]);
    if (!out.worst || q > out.worst->criterion) {
      out.worst = Witness{pc.points[k], pc.residuals[k], q};
    }
  }
  out.evidence.max_residual = out.worst ? out.worst->criterion : 0.0;
  out.enough = opts.samples > 0 && 2 * out.evidence.samples >= opts.samples;
  return out;
}

}  // namespace

MinimalityVerdict check_minimal_codim1(const Polynomial& f, const Rational& a, const Rational& b,
                                       std::uint32_t n, const MinimalityOptions& opts) {
  if (sgn(a) == 0 && sgn(b) == 0) throw Error(ErrorKind::ZeroLine, "line coefficients (0, 0)");
  require_flat_eigen(f, n);
  const Polynomial p = line_pullback(f, a, b);

  MinimalityVerdict v;
  if (p.is_zero()) {
    v.status = MinimalityStatus::Inconclusive;
    v.reason = "a Re F + b Im F vanishes identically";
    return v;
  }

  const Polynomial q = hess_grad_grad(p);
  if (q.is_zero()) {
    v.status = MinimalityStatus::ExactMinimal;
    v.certificate = "Q = 0";
    v.quotient = Polynomial::zero(p.nvars());
  } else if (auto quot = exact_divide(q, p)) {
    v.status = MinimalityStatus::ExactMinimal;
    v.certificate = render(*quot);
    v.quotient = std::move(*quot);
  }

  const bool exact = v.status == MinimalityStatus::ExactMinimal;
  if (exact && (!opts.cross_check || opts.samples == 0)) return v;

  Codim1Numeric num = sample_codim1(p, opts);
  v.numeric = num.evidence;
  if (exact) return v;

  if (!num.enough) {
    v.status = MinimalityStatus::Inconclusive;
    v.reason = "insufficient regular samples on P^{-1}(0)";
    return v;
  }
  v.status = decide(num.evidence.max_residual, opts);
  if (v.status == MinimalityStatus::NotMinimal) v.witness = num.worst;
  if (v.status == MinimalityStatus::Inconclusive) {
    v.reason = "max normalized criterion between tol and reject";
  }
  return v;
}

MinimalityVerdict check_minimal_codim2(const Polynomial& f, std::uint32_t n,
                                       const MinimalityOptions& opts) {
  const auto [re, im] = real_imag_parts(f);
  if (re.is_zero() || im.is_zero()) {
    // A C-valued map with a vanishing component has rank <= 1 everywhere.
    throw Error(ErrorKind::SingularFiber,
                "Re F or Im F vanishes identically; 0 cannot be a regular value");
  }
  require_flat_eigen(f, n);

  const VarietyEvaluator ev(VarietySpec{f.nvars(), {re, im}, true});
  const PointCloud pc = collect_samples(ev, opts.samples, opts.seed, opts.numeric);
  if (pc.size() == 0) {
    if (pc.singular > 0) {
      throw Error(ErrorKind::SingularFiber,
                  std::to_string(pc.singular) + " converged points, all near-singular");
    }
    throw Error(ErrorKind::EmptyFiber, "no convergent samples on F^{-1}(0)");
  }

  std::vector<std::size_t> failures;
  const auto curv = curvature_batch(ev, pc.points, opts.numeric, &failures);

  MinimalityVerdict v;
  NumericEvidence evd = evidence_from(pc, opts);
  const double dim = static_cast<double>(f.nvars() - 3);
  double max_radial = 0.0;
  std::optional<Witness> worst;
  std::size_t used = 0;
  for (std::size_t k = 0; k < curv.size(); ++k) {
    if (std::find(failures.begin(), failures.end(), k) != failures.end()) continue;
    ++used;
    max_radial = std::max(max_radial, std::abs(curv[k].radial_component + dim));
    double h = 0.0;
    for (double c : curv[k].normal_components) h = std::max(h, std::abs(c));
    if (!worst || h > worst->criterion) worst = Witness{pc.points[k], pc.residuals[k], h};
  }
  evd.samples = used;
  evd.max_residual = worst ? worst->criterion : 0.0;
  evd.max_radial_error = max_radial;
  if (auto k = flat_section_degree(f)) evd.flat_section_residual = flat_section_residual(pc.points, *k);
  v.numeric = evd;

  if (2 * used < opts.samples) {
    v.status = MinimalityStatus::Inconclusive;
    v.reason = "insufficient regular samples on F^{-1}(0)";
    return v;
  }
  v.status = decide(evd.max_residual, opts);
  if (v.status == MinimalityStatus::NotMinimal) v.witness = worst;
  if (v.status == MinimalityStatus::Inconclusive) {
    v.reason = "max normal mean-curvature component between tol and reject";
  }
  return v;
}

ConformalityReport conformality_diagnostics(const Polynomial& f) {
  const auto [u, v] = real_imag_parts(f);
  return ConformalityReport{kappa(u, u) - kappa(v, v), kappa(u, v)};
}

LawsonType classify_lawson(unsigned n, unsigned m) {
  if (n == 0 && m == 0) throw Error(ErrorKind::BothZero, "Lawson indices (0, 0)");
  if (n == 0 || m == 0) return LawsonType::Sphere;
  return (static_cast<unsigned long long>(n) * m) % 2 == 1 ? LawsonType::Torus
                                                          : LawsonType::KleinBottle;
}

namespace {

Polynomial complex_coordinate(std::size_t nvars, std::size_t j) {
  return Polynomial::variable(nvars, 2 * j) +
         GaussianRational::i() * Polynomial::variable(nvars, 2 * j + 1);
}

}  // namespace

Polynomial lawson_polynomial(unsigned n, unsigned m, std::size_t nvars) {
  if (nvars < 4) throw Error(ErrorKind::InvalidArgument, "z1, z2 need 4 real variables");
  return pow(complex_coordinate(nvars, 0), n) * pow(complex_coordinate(nvars, 1), m);
}

std::optional<unsigned> flat_section_degree(const Polynomial& f) {
  if (f.nvars() < 4 || f.is_zero()) return std::nullopt;
  const auto k = homogeneity(f);
  if (!k || *k == 0) return std::nullopt;
  const Polynomial ref =
      pow(complex_coordinate(f.nvars(), 0), *k) + pow(complex_coordinate(f.nvars(), 1), *k);
  if (ref == f) return *k;
  return std::nullopt;
}

double flat_section_residual(std::span<const Point> points, unsigned k) {
  std::vector<std::complex<double>> roots;
  for (unsigned j = 0; j < k; ++j) {
    roots.push_back(std::polar(1.0, std::numbers::pi * (2.0 * j + 1.0) / k));
  }
  double worst = 0.0;
  for (const auto& x : points) {
    const std::complex<double> z1{x[0], x[1]};
    const std::complex<double> z2{x[2], x[3]};
    double best = std::numeric_limits<double>::infinity();
    for (const auto& zeta : roots) best = std::min(best, std::abs(z1 - zeta * z2));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace eigsphere
