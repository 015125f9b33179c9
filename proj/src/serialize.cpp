#include "eigsphere/serialize.hpp"

namespace eigsphere {

using nlohmann::json;

json to_json(const EigenReport& r) {
  json j;
  j["is_eigen"] = r.is_eigen;
  j["k"] = r.k;
  j["n"] = r.n;
  j["lambda"] = r.lambda ? json(rational_to_string(*r.lambda)) : json(nullptr);
  j["mu"] = r.mu ? json(rational_to_string(*r.mu)) : json(nullptr);
  if (r.failure) {
    j["failure"] = {{"condition", std::string(to_string(r.failure->condition))},
                    {"residual", render(r.failure->residual)}};
  } else {
    j["failure"] = nullptr;
  }
  j["laplacian_sign_convention"] = "div_grad_nonpositive";
  return j;
}

json to_json(const EigenfamilyReport& r) {
  json j;
  j["is_family"] = r.is_family;
  j["k"] = r.k;
  j["lambda"] = r.lambda ? json(rational_to_string(*r.lambda)) : json(nullptr);
  j["mu"] = r.mu ? json(rational_to_string(*r.mu)) : json(nullptr);
  j["members"] = json::array();
  for (const auto& m : r.members) j["members"].push_back(to_json(m));
  if (r.failing_pair) {
    j["failing_pair"] = {r.failing_pair->first, r.failing_pair->second};
    j["pair_residual"] = render(*r.pair_residual);
  }
  return j;
}

json to_json(const NumericEvidence& e) {
  json j = {{"samples", e.samples},       {"requested", e.requested},
            {"attempts", e.attempts},     {"singular_discarded", e.singular},
            {"nonconverged", e.nonconverged}, {"max_residual", e.max_residual},
            {"tol", e.tol},               {"reject", e.reject},
            {"seed", e.seed}};
  if (e.max_radial_error) j["max_radial_error"] = *e.max_radial_error;
  if (e.flat_section_residual) j["flat_section_residual"] = *e.flat_section_residual;
  return j;
}

json to_json(const MinimalityVerdict& v) {
  json j;
  j["status"] = std::string(to_string(v.status));
  if (v.certificate) j["certificate"] = *v.certificate;
  if (v.numeric) {
    j["samples"] = v.numeric->samples;
    j["max_residual"] = v.numeric->max_residual;
    j["numeric"] = to_json(*v.numeric);
  }
  if (v.witness) {
    j["witness"] = {{"x", v.witness->x},
                    {"on_variety_residual", v.witness->on_variety_residual},
                    {"criterion", v.witness->criterion}};
  }
  if (v.reason) j["reason"] = *v.reason;
  return j;
}

json to_json(const SearchResult& r) {
  json coeffs = json::array();
  for (const auto& c : r.coefficients) coeffs.push_back({c.real(), c.imag()});
  json j = {{"attempt", r.attempt}, {"residual", r.residual}, {"coefficients", coeffs}};
  j["exact"] = r.exact ? json(render(*r.exact)) : json(nullptr);
  return j;
}

json to_json(const std::vector<SearchResult>& rs) {
  json j = json::array();
  for (const auto& r : rs) j.push_back(to_json(r));
  return j;
}

json to_json(const ConformalityReport& r) {
  return {{"difference", render(r.difference)},
          {"cross", render(r.cross)},
          {"conformal", r.conformal()}};
}

json cloud_summary(const PointCloud& pc) {
  return {{"nvars", pc.nvars},         {"points", pc.size()},
          {"requested", pc.requested}, {"attempts", pc.attempts},
          {"nonconverged", pc.nonconverged}, {"singular_discarded", pc.singular},
          {"tol", pc.tol},             {"rng_seed", pc.rng_seed},
          {"stereo", pc.stereo.has_value()}};
}

}  // namespace eigsphere
