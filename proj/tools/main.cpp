#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fsz/sweep.hpp"
#include "fsz/text_format.hpp"

namespace {

using fsz::cplx;

/// Complex flag syntax is "re,im"; a bare real is accepted as re,0.
cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string re_s = s.substr(0, comma);
    const std::string im_s = s.substr(comma + 1);
    const double re = std::stod(re_s, &used);
    if (used != re_s.size()) throw std::invalid_argument(s);
    const double im = std::stod(im_s, &used);
    if (used != im_s.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::exception&) {
    throw std::domain_error("cannot parse complex value \"" + s +
                            "\" (expected re,im)");
  }
}

struct FamilyFlags {
  std::optional<double> A, B, beta, k, t;
};

fsz::MindaTarget make_target(const std::string& family_id,
                             const FamilyFlags& f) {
  const fsz::MindaFamily family = fsz::family_from_id(family_id);
  auto need = [&](const std::optional<double>& v, const char* name) {
    if (!v)
      throw std::domain_error(family_id + " requires --" + name);
    return *v;
  };
  switch (family) {
    case fsz::MindaFamily::half_plane:
      return fsz::MindaTarget::half_plane();
    case fsz::MindaFamily::lemniscate:
      return fsz::MindaTarget::lemniscate();
    case fsz::MindaFamily::janowski:
      return fsz::MindaTarget::janowski(need(f.A, "A"), need(f.B, "B"));
    case fsz::MindaFamily::order_beta:
      return fsz::MindaTarget::order_beta(need(f.beta, "beta"));
    case fsz::MindaFamily::strong_beta:
      return fsz::MindaTarget::strong_beta(need(f.beta, "beta"));
    case fsz::MindaFamily::kanas_qk:
      return fsz::MindaTarget::kanas_qk(need(f.k, "k"), f.t);
  }
  throw std::domain_error("unknown phi family: " + family_id);
}

std::string family_constraints(fsz::MindaFamily family) {
  switch (family) {
    case fsz::MindaFamily::half_plane:
    case fsz::MindaFamily::lemniscate:
      return "none";
    case fsz::MindaFamily::janowski:
      return "-1 <= B < A <= 1";
    case fsz::MindaFamily::order_beta:
      return "0 <= beta < 1";
    case fsz::MindaFamily::strong_beta:
      return "0 < beta <= 1";
    case fsz::MindaFamily::kanas_qk:
      return "k >= 0; t in (0,1) required when k > 1";
  }
  return "";
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::domain_error("cannot write output file " + path);
  out << text;
}

int cmd_phi(const std::string& family_id, const FamilyFlags& flags,
            const std::string& format, const std::string& output) {
  const fsz::MindaTarget target = make_target(family_id, flags);
  const fsz::MindaCoeffs c = fsz::minda_coeffs(target);
  const std::optional<double> b3 = fsz::minda_b3(target);
  std::optional<double> kt;
  if (target.family() == fsz::MindaFamily::kanas_qk && target.k() > 1.0)
    kt = fsz::elliptic_k(*target.t());

  std::string text;
  if (format == "json") {
    text = "{\"family\":\"" + fsz::json_escape(target.family_id()) +
           "\",\"family_params\":\"" +
           fsz::json_escape(target.params_string()) +
           "\",\"B1\":" + fsz::fmt_g15(c.B1) +
           ",\"B2\":" + fsz::fmt_g15(c.B2);
    if (b3) text += ",\"B3\":" + fsz::fmt_g15(*b3);
    if (kt) text += ",\"K_t\":" + fsz::fmt_g15(*kt);
    text += ",\"constraints\":\"" +
            fsz::json_escape(family_constraints(target.family())) + "\"}\n";
  } else if (format == "text") {
    text = "family: " + target.family_id() + "\n";
    if (!target.params_string().empty())
      text += "params: " + target.params_string() + "\n";
    text += "B1 = " + fsz::fmt_g15(c.B1) + "\n";
    text += "B2 = " + fsz::fmt_g15(c.B2) + "\n";
    if (b3) text += "B3 = " + fsz::fmt_g15(*b3) + "\n";
    if (kt) text += "K(t) = " + fsz::fmt_g15(*kt) + "\n";
    text += "constraints: " + family_constraints(target.family()) + "\n";
  } else {
    throw std::domain_error("phi supports --format text or json");
  }
  write_output(text, output);
  return 0;
}

int cmd_bound(double lambda, const std::string& gamma_s,
              const std::string& mu_s, const std::string& family_id,
              const FamilyFlags& flags, const std::string& theorem_s,
              bool notes, const std::string& format,
              const std::string& output) {
  if (!format.empty() && format != "json")
    throw std::domain_error("bound reports are JSON only");
  const fsz::ClassParams params{lambda, parse_complex(gamma_s)};
  params.validate();
  const cplx mu = parse_complex(mu_s);
  const fsz::MindaTarget target = make_target(family_id, flags);
  const fsz::MindaCoeffs c = fsz::minda_coeffs(target);
  const fsz::Theorem theorem = fsz::theorem_from_label(theorem_s);

  std::string text;
  if (theorem == fsz::Theorem::Auto) {
    std::string best_label;
    double best_value = 0.0;
    text = "{\"theorems\":{";
    bool first = true;
    for (fsz::Theorem t :
         {fsz::Theorem::T1, fsz::Theorem::T2, fsz::Theorem::T3}) {
      if (!fsz::theorem_applicable(t, params, mu)) continue;
      const fsz::BoundReport r = fsz::select_bound(t, params, c.B1, c.B2, mu);
      if (!first) text += ",";
      first = false;
      text += "\"" + fsz::theorem_label(t) +
              "\":" + fsz::serialize_bound_report(r, notes);
      if (best_label.empty() || r.value < best_value) {
        best_label = fsz::theorem_label(t);
        best_value = r.value;
      }
    }
    text += "},\"min\":{\"theorem\":\"" + best_label +
            "\",\"value\":" + fsz::fmt_g15(best_value) + "}}\n";
  } else {
    const fsz::BoundReport r =
        fsz::select_bound(theorem, params, c.B1, c.B2, mu);
    text = fsz::serialize_bound_report(r, notes) + "\n";
  }
  write_output(text, output);
  return 0;
}

int cmd_verify(const std::string& config_path, const std::string& output_flag,
               const std::string& format_flag, bool negate_bound) {
  fsz::SweepConfig config = fsz::parse_sweep_config_file(config_path);
  if (!output_flag.empty()) config.output.path = output_flag;
  if (!format_flag.empty()) {
    if (format_flag != "csv" && format_flag != "json")
      throw std::domain_error("verify supports --format csv or json");
    config.output.format = format_flag;
  }

  const std::vector<fsz::VerificationRecord> rows =
      fsz::run_sweep(config, negate_bound);

  std::string report;
  if (config.output.format == "json") {
    report = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) report += ",";
      report += "\n" + fsz::serialize_verification_record(rows[i]);
    }
    report += "\n]\n";
  } else {
    report = std::string(fsz::kVerifyCsvHeader) + "\n";
    for (const auto& r : rows)
      report += fsz::verification_record_csv_row(r) + "\n";
  }
  write_output(report, config.output.path);

  const fsz::SweepSummary s = fsz::summarize(rows);
  std::ostream& summary_out =
      config.output.path.empty() ? std::cerr : std::cout;
  summary_out << "rows=" << s.rows << " sound=" << s.sound
              << " unsound=" << s.unsound
              << " min_slack=" << fsz::fmt_g15(s.min_slack) << "\n";
  return s.unsound == 0 ? 0 : 1;
}

int cmd_sweep_mu(double lambda, const std::string& gamma_s,
                 const std::string& family_id, const FamilyFlags& flags,
                 const std::string& theorem_s, double mu_min, double mu_max,
                 double mu_step, const std::string& format,
                 const std::string& output) {
  if (!format.empty() && format != "csv")
    throw std::domain_error("sweep-mu emits CSV only");
  const fsz::ClassParams params{lambda, parse_complex(gamma_s)};
  params.validate();
  const fsz::MindaTarget target = make_target(family_id, flags);
  const fsz::Theorem theorem = fsz::theorem_from_label(theorem_s);

  const std::vector<fsz::MuSweepRow> rows = fsz::run_mu_sweep(
      target, params, theorem, mu_min, mu_max, mu_step, fsz::OracleConfig{});
  std::string report = std::string(fsz::kMuSweepCsvHeader) + "\n";
  for (const auto& r : rows)
    report +=
        fsz::mu_sweep_csv_row(r.mu, r.bound, r.oracle, r.branch_change) + "\n";
  write_output(report, output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fekete-Szego coefficient bounds for bi-subordinate classes, with "
      "brute-force verification over the feasible Schwarz region"};
  app.require_subcommand(1);

  std::string output;
  std::string format;
  app.add_option("--output", output, "Write the report to this path");
  app.add_option("--format", format, "Report format (csv|json|text)");

  FamilyFlags flags;
  auto add_family_flags = [&flags](CLI::App* cmd) {
    cmd->fallthrough();
    cmd->add_option("--A", flags.A, "Janowski A");
    cmd->add_option("--B", flags.B, "Janowski B");
    cmd->add_option("--beta", flags.beta, "order/strong beta");
    cmd->add_option("--k", flags.k, "conic-domain k");
    cmd->add_option("--t", flags.t, "elliptic argument t (k > 1)");
  };

  auto* phi = app.add_subcommand("phi", "Inspect a phi family: (B1, B2), "
                                        "constraints, K(t) where used");
  std::string phi_family;
  phi->add_option("family", phi_family, "Family identifier")->required();
  add_family_flags(phi);

  auto* bound = app.add_subcommand(
      "bound", "Evaluate a Fekete-Szego bound; prints the report as JSON");
  double lambda = 0.0;
  std::string gamma_s = "1,0";
  std::string mu_s = "1,0";
  std::string bound_family;
  std::string theorem_s = "auto";
  bool notes = false;
  bound->add_option("--lambda", lambda, "class parameter lambda in [0,1]")
      ->required();
  bound->add_option("--gamma", gamma_s, "complex gamma as re,im")->required();
  bound->add_option("--mu", mu_s, "complex mu as re,im")->required();
  bound->add_option("--phi", bound_family, "phi family identifier")
      ->required();
  bound->add_option("--theorem", theorem_s, "T1|T2|T3|auto");
  bound->add_flag("--notes", notes, "Include convention notes in the report");
  add_family_flags(bound);

  auto* verify = app.add_subcommand(
      "verify", "Run a sweep config; exit 1 when any row is unsound");
  verify->fallthrough();
  std::string config_path;
  bool negate_bound = false;
  verify->add_option("config", config_path, "Sweep config JSON path")
      ->required();
  verify->add_flag("--negate-bound", negate_bound,
                   "Test fixture: corrupt every bound's sign");

  auto* sweep_mu = app.add_subcommand(
      "sweep-mu", "Tabulate bound and oracle over a range of real mu (CSV)");
  double mu_min = 0.0, mu_max = 0.0, mu_step = 0.0;
  sweep_mu->add_option("--lambda", lambda, "class parameter lambda")
      ->required();
  sweep_mu->add_option("--gamma", gamma_s, "complex gamma as re,im")
      ->required();
  sweep_mu->add_option("--phi", bound_family, "phi family identifier")
      ->required();
  sweep_mu->add_option("--theorem", theorem_s, "T1|T2|T3|auto");
  sweep_mu->add_option("--mu-min", mu_min, "range start")->required();
  sweep_mu->add_option("--mu-max", mu_max, "range end")->required();
  sweep_mu->add_option("--mu-step", mu_step, "range step (> 0)")->required();
  add_family_flags(sweep_mu);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(phi))
      return cmd_phi(phi_family, flags, format.empty() ? "text" : format,
                     output);
    if (app.got_subcommand(bound))
      return cmd_bound(lambda, gamma_s, mu_s, bound_family, flags, theorem_s,
                       notes, format, output);
    if (app.got_subcommand(verify))
      return cmd_verify(config_path, output, format, negate_bound);
    if (app.got_subcommand(sweep_mu))
      return cmd_sweep_mu(lambda, gamma_s, bound_family, flags, theorem_s,
                          mu_min, mu_max, mu_step, format, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
