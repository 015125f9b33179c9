// eigsphere command-line interface.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 undetermined,
// 3 operational error (bad input, failed preconditions).

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eigsphere/eigenfunction.hpp"
#include "eigsphere/error.hpp"
#include "eigsphere/geometry.hpp"
#include "eigsphere/minimality.hpp"
#include "eigsphere/parser.hpp"
#include "eigsphere/search.hpp"
#include "eigsphere/selftest.hpp"
#include "eigsphere/serialize.hpp"

namespace {

using nlohmann::json;
using namespace eigsphere;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUndetermined = 2;
constexpr int kExitError = 3;

struct Common {
  std::size_t vars = 0;
  std::uint32_t sphere_dim = 0;
  std::string poly;
  bool json = false;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json report(const std::string& command, json inputs, json verdict, const Timer& t,
            std::optional<std::uint64_t> seed = std::nullopt) {
  json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["verdict"] = std::move(verdict);
  j["timings"] = {{"total_ms", t.ms()}};
  j["tool_version"] = EIGSPHERE_VERSION;
  j["rng_seed"] = seed ? json(*seed) : json(nullptr);
  return j;
}

void require_sphere_vars(const Common& c) {
  if (c.vars != static_cast<std::size_t>(c.sphere_dim) + 1) {
    throw Error(ErrorKind::DimensionMismatch,
                "--vars must equal --sphere-dim + 1 (got " + std::to_string(c.vars) + " and " +
                    std::to_string(c.sphere_dim) + ")");
  }
}

Rational parse_rational(const std::string& text) {
  try {
    Rational q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
  }
}

std::pair<Rational, Rational> parse_line(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorKind::InvalidArgument, "--line expects a,b (got '" + text + "')");
  }
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

void emit(const json& j, bool as_json, const std::string& human) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

int exit_for(MinimalityStatus s) {
  switch (s) {
    case MinimalityStatus::ExactMinimal:
    case MinimalityStatus::NumericMinimal: return kExitPositive;
    case MinimalityStatus::NotMinimal: return kExitNegative;
    case MinimalityStatus::Inconclusive: return kExitUndetermined;
  }
  return kExitError;
}

std::string describe(const MinimalityVerdict& v) {
  std::ostringstream out;
  out << "status: " << to_string(v.status) << "\n";
  if (v.certificate) out << "certificate: " << *v.certificate << "\n";
  if (v.numeric) {
    out << "samples: " << v.numeric->samples << "\n";
    out << "max_residual: " << v.numeric->max_residual << "\n";
    if (v.numeric->flat_section_residual) {
      out << "flat_section_residual: " << *v.numeric->flat_section_residual << "\n";
    }
  }
  if (v.reason) out << "reason: " << *v.reason << "\n";
  return out.str();
}

json minimality_inputs(const Common& c, const MinimalityOptions& o) {
  return {{"vars", c.vars},   {"sphere_dim", c.sphere_dim}, {"poly", c.poly},
          {"samples", o.samples}, {"tol", o.tol},           {"reject", o.reject},
          {"seed", o.seed},   {"newton_tol", o.numeric.tol}, {"eps_reg", o.numeric.eps_reg},
          {"maxiter", o.numeric.maxiter}};
}

void add_common(CLI::App* cmd, Common& c, bool with_poly = true) {
  cmd->add_option("--vars", c.vars, "number of real variables N")->required();
  cmd->add_option("--sphere-dim", c.sphere_dim, "sphere dimension n (N = n + 1)")->required();
  if (with_poly) cmd->add_option("--poly", c.poly, "polynomial expression")->required();
  cmd->add_flag("--json", c.json, "emit a JSON report on stdout");
}

void add_minimality(CLI::App* cmd, MinimalityOptions& o) {
  cmd->add_option("--samples", o.samples, "sample count")->capture_default_str();
  cmd->add_option("--tol", o.tol, "accept threshold")->capture_default_str();
  cmd->add_option("--reject", o.reject, "reject threshold")->capture_default_str();
  cmd->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks for complex-valued eigenfunctions on spheres"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(EIGSPHERE_VERSION));

  Common eig;
  auto* eigen_cmd = app.add_subcommand("eigen-check", "verify a (lambda, mu)-eigenfunction");
  add_common(eigen_cmd, eig);

  Common fam;
  std::vector<std::string> family_polys;
  auto* family_cmd = app.add_subcommand("eigen-family", "verify an eigenfamily");
  add_common(family_cmd, fam, false);
  family_cmd->add_option("--poly", family_polys, "family member (repeatable)")->required();

  Common line;
  std::string line_text;
  MinimalityOptions line_opts;
  auto* line_cmd = app.add_subcommand("minimal-line", "minimality of F^{-1}(l) for a line l");
  add_common(line_cmd, line);
  line_cmd->add_option("--line", line_text, "line a,b for a u + b v = 0")->required();
  add_minimality(line_cmd, line_opts);

  Common zero;
  MinimalityOptions zero_opts;
  zero_opts.samples = 100;
  auto* zero_cmd = app.add_subcommand("minimal-zero", "minimality of the fiber F^{-1}(0)");
  add_common(zero_cmd, zero);
  add_minimality(zero_cmd, zero_opts);

  std::size_t sample_vars = 0;
  std::vector<std::string> constraints;
  long long sample_count = 0;
  std::uint64_t sample_seed = 1;
  std::string sample_out;
  std::optional<std::size_t> stereo_pole;
  bool sample_json = false;
  NumericOptions sample_numeric;
  auto* sample_cmd = app.add_subcommand("sample", "sample a variety on the unit sphere to CSV");
  sample_cmd->add_option("--vars", sample_vars, "number of real variables N")->required();
  sample_cmd->add_option("--constraint", constraints, "real polynomial constraint (repeatable)");
  sample_cmd->add_option("--count", sample_count, "number of points")->required();
  sample_cmd->add_option("--seed", sample_seed, "sampling seed")->capture_default_str();
  sample_cmd->add_option("--out", sample_out, "CSV output path")->required();
  sample_cmd->add_option("--stereo", stereo_pole, "add stereographic columns from this pole");
  sample_cmd->add_option("--tol", sample_numeric.tol, "Newton tolerance")->capture_default_str();
  sample_cmd->add_flag("--json", sample_json, "emit a JSON report on stdout");

  unsigned lawson_n = 0, lawson_m = 0;
  bool lawson_json = false;
  auto* lawson_cmd = app.add_subcommand("lawson", "topology of the Lawson surface tau_{n,m}");
  lawson_cmd->add_option("--n", lawson_n, "first exponent")->required();
  lawson_cmd->add_option("--m", lawson_m, "second exponent")->required();
  lawson_cmd->add_flag("--json", lawson_json, "emit a JSON report on stdout");

  std::size_t search_vars = 0;
  unsigned search_degree = 0;
  SearchOptions search_opts;
  auto* search_cmd = app.add_subcommand("search", "numerically search for eigenfunctions (JSON)");
  search_cmd->add_option("--vars", search_vars, "number of real variables N")->required();
  search_cmd->add_option("--degree", search_degree, "polynomial degree")->required();
  search_cmd->add_option("--attempts", search_opts.attempts, "multistart count")
      ->capture_default_str();
  search_cmd->add_option("--seed", search_opts.seed, "seed")->capture_default_str();
  search_cmd->add_option("--denominator-bound", search_opts.denominator_bound,
                         "rationalization bound")
      ->capture_default_str();

  std::uint64_t selftest_seed = 1;
  bool selftest_json = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the exact identity suite");
  selftest_cmd->add_option("--seed", selftest_seed, "generator seed")->capture_default_str();
  selftest_cmd->add_flag("--json", selftest_json, "emit a JSON report on stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  const Timer timer;
  try {
    if (*eigen_cmd) {
      require_sphere_vars(eig);
      const Polynomial p = parse(eig.poly, eig.vars);
      const EigenReport r = verify_eigenfunction(p, eig.sphere_dim);
      const json inputs = {{"vars", eig.vars}, {"sphere_dim", eig.sphere_dim}, {"poly", eig.poly}};
      std::ostringstream human;
      human << (r.is_eigen ? "eigenfunction" : "not an eigenfunction") << "\n";
      human << "k: " << r.k << "\n";
      if (r.is_eigen) {
        human << "lambda: " << rational_to_string(*r.lambda) << "\n";
        human << "mu: " << rational_to_string(*r.mu) << "\n";
      } else {
        human << "failure: " << to_string(r.failure->condition) << "\n";
        human << "residual: " << render(r.failure->residual) << "\n";
      }
      emit(report("eigen-check", inputs, to_json(r), timer), eig.json, human.str());
      return r.is_eigen ? kExitPositive : kExitNegative;
    }

    if (*family_cmd) {
      require_sphere_vars(fam);
      std::vector<Polynomial> ps;
      for (const auto& text : family_polys) ps.push_back(parse(text, fam.vars));
      const EigenfamilyReport r = verify_eigenfamily(ps, fam.sphere_dim);
      const json inputs = {{"vars", fam.vars}, {"sphere_dim", fam.sphere_dim}, {"poly", family_polys}};
      std::ostringstream human;
      human << (r.is_family ? "eigenfamily" : "not an eigenfamily") << "\n";
      if (r.is_family) {
        human << "k: " << r.k << "\nlambda: " << rational_to_string(*r.lambda)
              << "\nmu: " << rational_to_string(*r.mu) << "\n";
      }
      emit(report("eigen-family", inputs, to_json(r), timer), fam.json, human.str());
      return r.is_family ? kExitPositive : kExitNegative;
    }

    if (*line_cmd) {
      require_sphere_vars(line);
      const auto [a, b] = parse_line(line_text);
      const Polynomial f = parse(line.poly, line.vars);
      const MinimalityVerdict v = check_minimal_codim1(f, a, b, line.sphere_dim, line_opts);
      json inputs = minimality_inputs(line, line_opts);
      inputs["line"] = {rational_to_string(a), rational_to_string(b)};
      emit(report("minimal-line", inputs, to_json(v), timer, line_opts.seed), line.json,
           describe(v));
      return exit_for(v.status);
    }

    if (*zero_cmd) {
      require_sphere_vars(zero);
      const Polynomial f = parse(zero.poly, zero.vars);
      const MinimalityVerdict v = check_minimal_codim2(f, zero.sphere_dim, zero_opts);
      emit(report("minimal-zero", minimality_inputs(zero, zero_opts), to_json(v), timer,
                  zero_opts.seed),
           zero.json, describe(v));
      return exit_for(v.status);
    }

    if (*sample_cmd) {
      if (sample_count <= 0) throw Error(ErrorKind::InvalidArgument, "--count must be at least 1");
      VarietySpec spec{sample_vars, {}, true};
      for (const auto& text : constraints) spec.constraints.push_back(parse(text, sample_vars));
      const VarietyEvaluator ev(spec);
      const auto count = static_cast<std::size_t>(sample_count);
      PointCloud pc = collect_samples(ev, count, sample_seed, sample_numeric);
      if (stereo_pole) add_stereographic(pc, *stereo_pole);
      export_cloud(pc, sample_out);
      const bool enough = 2 * pc.size() >= count;
      json inputs = {{"vars", sample_vars},  {"constraint", constraints}, {"count", count},
                     {"seed", sample_seed}, {"out", sample_out},        {"tol", sample_numeric.tol},
                     {"eps_reg", sample_numeric.eps_reg}, {"maxiter", sample_numeric.maxiter}};
      inputs["stereo"] = stereo_pole ? json(*stereo_pole) : json(nullptr);
      json verdict = cloud_summary(pc);
      verdict["sufficient_yield"] = enough;
      std::ostringstream human;
      human << "wrote " << pc.size() << " points to " << sample_out << "\n";
      if (!enough) std::cerr << "InsufficientYield: " << pc.size() << " of " << count << " points\n";
      emit(report("sample", inputs, verdict, timer, sample_seed), sample_json, human.str());
      return enough ? kExitPositive : kExitUndetermined;
    }

    if (*lawson_cmd) {
      const LawsonType t = classify_lawson(lawson_n, lawson_m);
      emit(report("lawson", {{"n", lawson_n}, {"m", lawson_m}}, {{"type", to_string(t)}}, timer),
           lawson_json, std::string(to_string(t)) + "\n");
      return kExitPositive;
    }

    if (*search_cmd) {
      const auto results = search_eigen(search_vars, search_degree, search_opts);
      const json inputs = {{"vars", search_vars},
                           {"degree", search_degree},
                           {"attempts", search_opts.attempts},
                           {"seed", search_opts.seed},
                           {"max_iterations", search_opts.max_iterations},
                           {"success_residual", search_opts.success_residual},
                           {"denominator_bound", search_opts.denominator_bound},
                           {"sparsify", search_opts.sparsify}};
      std::cout << report("search", inputs, to_json(results), timer, search_opts.seed).dump(2)
                << "\n";
      return kExitPositive;
    }

    if (*selftest_cmd) {
      const auto items = run_selftest(selftest_seed);
      bool all = true;
      json list = json::array();
      std::ostringstream human;
      for (const auto& it : items) {
        all = all && it.passed;
        list.push_back({{"name", it.name}, {"passed", it.passed}, {"cases", it.cases},
                        {"detail", it.detail}});
        human << (it.passed ? "PASS " : "FAIL ") << it.name << " (" << it.cases << " cases)";
        if (!it.detail.empty()) human << ": " << it.detail;
        human << "\n";
      }
      emit(report("selftest", {{"seed", selftest_seed}}, {{"passed", all}, {"items", list}}, timer,
                  selftest_seed),
           selftest_json, human.str());
      return all ? kExitPositive : kExitNegative;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
