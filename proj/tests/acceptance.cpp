// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "eigsphere/calculus.hpp"
#include "eigsphere/eigenfunction.hpp"
#include "eigsphere/geometry.hpp"
#include "eigsphere/minimality.hpp"
#include "eigsphere/parser.hpp"
#include "eigsphere/rng.hpp"
#include "eigsphere/search.hpp"
#include "eigsphere/selftest.hpp"
#include "oracles.hpp"

using namespace eigsphere;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) {
    o.ok = false;
    o.detail += " (over time limit " + std::to_string(limit_s) + " s)";
  }
  if (!o.ok) ++failures;
  std::printf("%s %2d %-34s %9.4f s  %s\n", o.ok ? "PASS" : "FAIL", id, name, s, o.detail.c_str());
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

const char* kClifford = "x1^2 - x2^2 + x3^2 - x4^2";

}  // namespace

int main() {
  criterion(1, "golden Hess(grad,grad) = 8P", 1e-3, [] {
    const auto p = parse(kClifford, 4);
    const bool ok = hess_grad_grad(p) == GaussianRational(8) * p;
    return Outcome{ok, ok ? "exact" : "mismatch"};
  });

  criterion(2, "z1^2+z2^2 eigen on S^3", 0.1, [] {
    const auto p = parse("z1^2+z2^2", 4);
    const auto r = verify_eigenfunction(p, 3);
    if (!r.is_eigen || r.k != 2 || *r.lambda != -8 || *r.mu != -4) return Outcome{false, "wrong report"};
    Rng rng = make_rng(2, 0);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
      const auto x = random_sphere_point(rng, 4);
      const auto f = oracle::eval(p, x);
      const auto lb = oracle::laplace_beltrami(p, x);
      worst = std::max(worst, std::abs(lb + 8.0 * f) / std::max(1.0, std::abs(8.0 * f)));
    }
    return Outcome{worst < 1e-5, "max relative FD error " + sci(worst)};
  });

  criterion(3, "Clifford lines exact, quotient 8", 0, [] {
    const auto f = parse("z1^2+z2^2", 4);
    double worst = 0.0;
    for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}}) {
      const auto v = check_minimal_codim1(f, a, b, 3);
      if (v.status != MinimalityStatus::ExactMinimal || *v.quotient != Polynomial::constant(4, 8)) {
        return Outcome{false, "no quotient 8"};
      }
      if (!v.numeric || v.numeric->samples < 200) return Outcome{false, "too few samples"};
      worst = std::max(worst, v.numeric->max_residual);
    }
    return Outcome{worst < 1e-8, "max normalized criterion " + sci(worst)};
  });

  criterion(4, "Lawson lines minimal", 30.0, [] {
    double worst = 0.0;
    int exact = 0;
    for (auto [n, m] : {std::pair{1u, 1u}, {2u, 1u}, {3u, 2u}, {1u, 3u}}) {
      for (auto [a, b] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}}) {
        const auto v = check_minimal_codim1(lawson_polynomial(n, m), a, b, 3);
        if (v.status != MinimalityStatus::ExactMinimal && v.status != MinimalityStatus::NumericMinimal) {
          return Outcome{false, "not minimal"};
        }
        if (!v.numeric || v.numeric->samples < 200) return Outcome{false, "too few samples"};
        exact += v.status == MinimalityStatus::ExactMinimal;
        worst = std::max(worst, v.numeric->max_residual);
      }
    }
    return Outcome{worst < 1e-8, std::to_string(exact) + "/12 exact, max criterion " + sci(worst)};
  });

  criterion(5, "codim-2 fiber of z1^2+z2^2", 0, [] {
    MinimalityOptions opts;
    opts.samples = 100;
    const auto v = check_minimal_codim2(parse("z1^2+z2^2", 4), 3, opts);
    const auto& e = *v.numeric;
    const bool ok = e.samples >= 100 && e.max_residual < 1e-8 && *e.max_radial_error < 1e-8;
    return Outcome{ok, std::to_string(e.samples) + " samples, max normal " + sci(e.max_residual) +
                           ", max |radial + 1| " + sci(*e.max_radial_error)};
  });

  criterion(6, "flat sections of z1^3+z2^3 on S^4", 0, [] {
    MinimalityOptions opts;
    opts.samples = 100;
    const auto v = check_minimal_codim2(parse("z1^3+z2^3", 5), 4, opts);
    const double r = *v.numeric->flat_section_residual;
    return Outcome{v.numeric->samples > 0 && r < 1e-8,
                   std::to_string(v.numeric->samples) + " samples, max residual " + sci(r)};
  });

  criterion(7, "Clifford torus x1^2+x3^2 = 1/2", 0, [] {
    const auto pc = sample(VarietySpec{4, {parse(kClifford, 4)}, true}, 500, 7);
    double worst = 0.0;
    for (const auto& x : pc.points) worst = std::max(worst, std::abs(x[0] * x[0] + x[2] * x[2] - 0.5));
    return Outcome{pc.size() == 500 && worst < 1e-10, std::to_string(pc.size()) + " points, max " + sci(worst)};
  });

  criterion(8, "small sphere x4 = 1/2 curvature", 0, [] {
    const VarietySpec s{4, {parse("x4 - 1/2", 4)}, true};
    const auto pc = sample(s, 100, 8);
    const VarietyEvaluator ev(s);
    double worst = 0.0;
    for (const auto& c : curvature_batch(ev, pc.points)) {
      worst = std::max(worst, std::abs(std::abs(c.normal_components[0]) - 2.0 / std::sqrt(3.0)));
    }
    return Outcome{pc.size() > 0 && worst < 1e-6, "max deviation from 2/sqrt(3) " + sci(worst)};
  });

  criterion(9, "identity suite", 0, [] {
    Rng rng = make_rng(9, 0);
    std::uniform_int_distribution<unsigned> deg(0, 4);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_polynomial(rng, 4, deg(rng), 5);
      const auto b = random_polynomial(rng, 4, deg(rng), 5);
      if (!identity_one_check(a, b)) return Outcome{false, "product rule failed"};
    }
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r2 = Polynomial::r_squared(n);
      for (unsigned k = 1; k <= 5; ++k) {
        const GaussianRational c(static_cast<long>(2 * k * (n + 2 * k - 2)));
        if (laplacian(pow(r2, k)) != c * pow(r2, k - 1)) return Outcome{false, "r^2k law failed"};
      }
    }
    for (int t = 0; t < 100; ++t) {
      std::uniform_int_distribution<unsigned> hd(1, 4);
      if (!r2_coprime(random_harmonic(rng, 4, hd(rng)))) return Outcome{false, "harmonic divisible by r^2"};
    }
    return Outcome{true, "100 pairs, 30 radial laws, 100 harmonics"};
  });

  criterion(10, "search rediscovery", 60.0, [] {
    SearchOptions opts;
    opts.attempts = 50;
    std::string detail;
    bool ok = true;
    for (unsigned d : {1u, 2u}) {
      const auto rs = search_eigen(4, d, opts);
      std::size_t exact = 0;
      for (const auto& r : rs) exact += r.exact.has_value();
      ok = ok && !rs.empty() && rs.front().residual < 1e-10;
      if (d == 1) ok = ok && exact > 0;
      detail += "d=" + std::to_string(d) + ": best " + sci(rs.front().residual) + ", " +
                std::to_string(exact) + " exact; ";
    }
    return Outcome{ok, detail};
  });

  criterion(11, "Lawson classifier table", 0, [] {
    for (unsigned n = 0; n <= 6; ++n) {
      for (unsigned m = 0; m <= 6; ++m) {
        if (n == 0 && m == 0) continue;
        const auto want = (n == 0 || m == 0) ? LawsonType::Sphere
                          : (n * m) % 2      ? LawsonType::Torus
                                             : LawsonType::KleinBottle;
        if (classify_lawson(n, m) != want) return Outcome{false, "mismatch"};
      }
    }
    return Outcome{true, "48 cases"};
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : "some criteria FAILED");
  return failures == 0 ? 0 : 1;
}
