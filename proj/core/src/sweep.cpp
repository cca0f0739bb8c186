#include "fsz/sweep.hpp"

#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"

namespace fsz {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "must be a number");
  return j.get<double>();
}

cplx require_complex_pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number())
    fail(path, "must be a [re, im] pair of numbers");
  return {j[0].get<double>(), j[1].get<double>()};
}

MindaTarget parse_target(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "must be an object");
  if (!j.contains("family") || !j["family"].is_string())
    fail(path + ".family", "must be a string");
  MindaFamily family;
  try {
    family = family_from_id(j["family"].get<std::string>());
  } catch (const std::domain_error& e) {
    fail(path + ".family", e.what());
  }
  auto get = [&](const char* key) {
    if (!j.contains(key)) fail(path + "." + key, "is required");
    return require_number(j[key], path + "." + key);
  };
  try {
    switch (family) {
      case MindaFamily::half_plane:
        return MindaTarget::half_plane();
      case MindaFamily::lemniscate:
        return MindaTarget::lemniscate();
      case MindaFamily::janowski:
        return MindaTarget::janowski(get("A"), get("B"));
      case MindaFamily::order_beta:
        return MindaTarget::order_beta(get("beta"));
      case MindaFamily::strong_beta:
        return MindaTarget::strong_beta(get("beta"));
      case MindaFamily::kanas_qk: {
        const double k = get("k");
        std::optional<double> t;
        if (j.contains("t")) t = require_number(j["t"], path + ".t");
        return MindaTarget::kanas_qk(k, t);
      }
    }
  } catch (const std::domain_error& e) {
    fail(path, e.what());
  }
  fail(path, "unknown family");
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("$: not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) fail("$", "must be a JSON object");

  SweepConfig cfg;

  if (!doc.contains("targets") || !doc["targets"].is_array() ||
      doc["targets"].empty())
    fail("$.targets", "must be a nonempty array");
  for (std::size_t i = 0; i < doc["targets"].size(); ++i)
    cfg.targets.push_back(parse_target(
        doc["targets"][i], "$.targets[" + std::to_string(i) + "]"));

  if (!doc.contains("lambdas") || !doc["lambdas"].is_array() ||
      doc["lambdas"].empty())
    fail("$.lambdas", "must be a nonempty array");
  for (std::size_t i = 0; i < doc["lambdas"].size(); ++i) {
    const std::string p = "$.lambdas[" + std::to_string(i) + "]";
    const double v = require_number(doc["lambdas"][i], p);
    if (!(0.0 <= v && v <= 1.0)) fail(p, "must lie in [0,1]");
    cfg.lambdas.push_back(v);
  }

  if (!doc.contains("gammas") || !doc["gammas"].is_array() ||
      doc["gammas"].empty())
    fail("$.gammas", "must be a nonempty array");
  for (std::size_t i = 0; i < doc["gammas"].size(); ++i) {
    const std::string p = "$.gammas[" + std::to_string(i) + "]";
    const cplx g = require_complex_pair(doc["gammas"][i], p);
    if (g == cplx(0.0, 0.0)) fail(p, "gamma must be nonzero");
    cfg.gammas.push_back(g);
  }

  if (!doc.contains("mus") || !doc["mus"].is_array() || doc["mus"].empty())
    fail("$.mus", "must be a nonempty array");
  for (std::size_t i = 0; i < doc["mus"].size(); ++i)
    cfg.mus.push_back(require_complex_pair(
        doc["mus"][i], "$.mus[" + std::to_string(i) + "]"));

  if (!doc.contains("theorems") || !doc["theorems"].is_array() ||
      doc["theorems"].empty())
    fail("$.theorems", "must be a nonempty array");
  for (std::size_t i = 0; i < doc["theorems"].size(); ++i) {
    const std::string p = "$.theorems[" + std::to_string(i) + "]";
    if (!doc["theorems"][i].is_string()) fail(p, "must be a string");
    try {
      cfg.theorems.push_back(
          theorem_from_label(doc["theorems"][i].get<std::string>()));
    } catch (const std::domain_error& e) {
      fail(p, e.what());
    }
  }

  if (doc.contains("oracle")) {
    const json& o = doc["oracle"];
    if (!o.is_object()) fail("$.oracle", "must be an object");
    auto geti = [&](const char* key, int fallback) {
      if (!o.contains(key)) return fallback;
      const std::string p = std::string("$.oracle.") + key;
      if (!o[key].is_number_integer()) fail(p, "must be an integer");
      return o[key].get<int>();
    };
    cfg.oracle.radial_steps = geti("radial_steps", cfg.oracle.radial_steps);
    cfg.oracle.angular_steps = geti("angular_steps", cfg.oracle.angular_steps);
    cfg.oracle.refine_iterations =
        geti("refine_iterations", cfg.oracle.refine_iterations);
    if (o.contains("feasibility_tolerance"))
      cfg.oracle.feasibility_tolerance = require_number(
          o["feasibility_tolerance"], "$.oracle.feasibility_tolerance");
    try {
      cfg.oracle.validate();
    } catch (const std::domain_error& e) {
      fail("$.oracle", e.what());
    }
  }

  if (doc.contains("output")) {
    const json& o = doc["output"];
    if (!o.is_object()) fail("$.output", "must be an object");
    if (o.contains("format")) {
      if (!o["format"].is_string()) fail("$.output.format", "must be a string");
      cfg.output.format = o["format"].get<std::string>();
      if (cfg.output.format != "csv" && cfg.output.format != "json")
        fail("$.output.format", "must be \"csv\" or \"json\"");
    }
    if (o.contains("path")) {
      if (!o["path"].is_string()) fail("$.output.path", "must be a string");
      cfg.output.path = o["path"].get<std::string>();
    }
  }

  return cfg;
}

SweepConfig parse_sweep_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("$: cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_sweep_config(ss.str());
}

std::vector<VerificationRecord> run_sweep(const SweepConfig& config,
                                          bool negate_bound) {
  config.oracle.validate();
  std::vector<VerificationRecord> rows;
  // One oracle run per (target, lambda, gamma, mu); theorems share it.
  for (const MindaTarget& target : config.targets) {
    const MindaCoeffs mc = minda_coeffs(target);
    for (double lambda : config.lambdas) {
      for (cplx gamma : config.gammas) {
        const ClassParams params{lambda, gamma};
        params.validate();
        for (cplx mu : config.mus) {
          bool have_oracle = false;
          OracleResult oracle;
          for (Theorem theorem : config.theorems) {
            if (!theorem_applicable(theorem, params, mu)) continue;
            if (!have_oracle) {
              oracle = oracle_max(OracleFunctional::fekete_szego(mu), params,
                                  mc.B1, mc.B2, config.oracle);
              have_oracle = true;
            }
            VerificationRecord rec;
            rec.target = target;
            rec.params = params;
            rec.mu = mu;
            rec.theorem = theorem_label(theorem);
            rec.bound = select_bound(theorem, params, mc.B1, mc.B2, mu);
            if (negate_bound) rec.bound.value = -rec.bound.value;
            rec.oracle = oracle;
            rec.slack = rec.bound.value - rec.oracle.max_value;
            rec.sound = rec.slack >= -kSoundnessTol;
            rec.sharpness_ratio = rec.oracle.max_value / rec.bound.value;
            rows.push_back(std::move(rec));
          }
        }
      }
    }
  }
  return rows;
}

SweepSummary summarize(const std::vector<VerificationRecord>& records) {
  SweepSummary s;
  s.rows = records.size();
  s.min_slack = std::numeric_limits<double>::infinity();
  for (const auto& r : records) {
    if (r.sound)
      ++s.sound;
    else
      ++s.unsound;
    s.min_slack = std::min(s.min_slack, r.slack);
  }
  if (records.empty()) s.min_slack = 0.0;
  return s;
}

std::vector<MuSweepRow> run_mu_sweep(const MindaTarget& target,
                                     const ClassParams& params,
                                     Theorem theorem, double mu_min,
                                     double mu_max, double step,
                                     const OracleConfig& oracle_config) {
  params.validate();
  target.validate();
  oracle_config.validate();
  if (!(step > 0.0)) throw std::domain_error("mu step must be > 0");
  if (mu_min > mu_max) throw std::domain_error("empty mu range (min > max)");
  if (!theorem_applicable(theorem, params, cplx(mu_min, 0.0)))
    throw std::domain_error("theorem " + theorem_label(theorem) +
                            " is not applicable to this gamma");
  const MindaCoeffs mc = minda_coeffs(target);
  std::vector<MuSweepRow> rows;
  // Index-based grid; the top end gets a small forgiveness so mu_max lands
  // on the grid despite rounding.
  for (int i = 0;; ++i) {
    const double mu = mu_min + i * step;
    if (mu > mu_max + 1e-12) break;
    MuSweepRow row;
    row.mu = mu;
    row.bound = select_bound(theorem, params, mc.B1, mc.B2, cplx(mu, 0.0));
    row.oracle = oracle_max(OracleFunctional::fekete_szego(cplx(mu, 0.0)),
                            params, mc.B1, mc.B2, oracle_config);
    row.branch_change =
        !rows.empty() && rows.back().bound.branch != row.bound.branch;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fsz
