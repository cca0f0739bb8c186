#include "fsz/text_format.hpp"

#include <cstdio>

namespace fsz {

std::string fmt_g15(double v) {
  if (v == 0.0) return "0";  // normalize -0
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string json_complex(cplx z) {
  return "[" + fmt_g15(z.real()) + "," + fmt_g15(z.imag()) + "]";
}

std::string serialize_bound_report(const BoundReport& report,
                                   bool include_notes) {
  std::string out = "{\"value\":" + fmt_g15(report.value) + ",\"branch\":\"" +
                    json_escape(report.branch) + "\",\"intermediates\":{";
  bool first = true;
  for (const auto& [key, val] : report.intermediates) {
    if (!first) out += ",";
    first = false;
    out += "\"" + json_escape(key) + "\":";
    if (std::holds_alternative<double>(val))
      out += fmt_g15(std::get<double>(val));
    else
      out += json_complex(std::get<cplx>(val));
  }
  out += "}";
  if (include_notes && !report.notes.empty()) {
    out += ",\"notes\":[";
    for (std::size_t i = 0; i < report.notes.size(); ++i) {
      if (i) out += ",";
      out += "\"" + json_escape(report.notes[i]) + "\"";
    }
    out += "]";
  }
  out += "}";
  return out;
}

std::string serialize_oracle_result(const OracleResult& result) {
  return "{\"max_value\":" + fmt_g15(result.max_value) +
         ",\"witness\":{\"c1\":" + json_complex(result.witness.c1) +
         ",\"c2\":" + json_complex(result.witness.c2) +
         "},\"induced_d2\":" + json_complex(result.induced_d2) +
         ",\"evaluated_points\":" + std::to_string(result.evaluated_points) +
         ",\"feasible_fraction\":" + fmt_g15(result.feasible_fraction) + "}";
}

std::string serialize_verification_record(const VerificationRecord& rec) {
  return "{\"family\":\"" + json_escape(rec.target.family_id()) +
         "\",\"family_params\":\"" + json_escape(rec.target.params_string()) +
         "\",\"lambda\":" + fmt_g15(rec.params.lambda) +
         ",\"gamma\":" + json_complex(rec.params.gamma) +
         ",\"mu\":" + json_complex(rec.mu) + ",\"theorem\":\"" +
         json_escape(rec.theorem) +
         "\",\"bound\":" + serialize_bound_report(rec.bound) +
         ",\"oracle\":" + serialize_oracle_result(rec.oracle) +
         ",\"slack\":" + fmt_g15(rec.slack) +
         ",\"sound\":" + (rec.sound ? "true" : "false") +
         ",\"sharpness_ratio\":" + fmt_g15(rec.sharpness_ratio) + "}";
}

const char* const kVerifyCsvHeader =
    "family,family_params,lambda,gamma_re,gamma_im,mu_re,mu_im,theorem,"
    "branch,bound,oracle_max,slack,ratio,evaluated_points";

std::string verification_record_csv_row(const VerificationRecord& rec) {
  return rec.target.family_id() + "," + rec.target.params_string() + "," +
         fmt_g15(rec.params.lambda) + "," + fmt_g15(rec.params.gamma.real()) +
         "," + fmt_g15(rec.params.gamma.imag()) + "," +
         fmt_g15(rec.mu.real()) + "," + fmt_g15(rec.mu.imag()) + "," +
         rec.theorem + "," + rec.bound.branch + "," + fmt_g15(rec.bound.value) +
         "," + fmt_g15(rec.oracle.max_value) + "," + fmt_g15(rec.slack) + "," +
         fmt_g15(rec.sharpness_ratio) + "," +
         std::to_string(rec.oracle.evaluated_points);
}

const char* const kMuSweepCsvHeader =
    "mu,bound,branch,branch_change,oracle_max,ratio";

std::string mu_sweep_csv_row(double mu, const BoundReport& bound,
                             const OracleResult& oracle, bool branch_change) {
  return fmt_g15(mu) + "," + fmt_g15(bound.value) + "," + bound.branch + "," +
         (branch_change ? "1" : "0") + "," + fmt_g15(oracle.max_value) + "," +
         fmt_g15(oracle.max_value / bound.value);
}

}  // namespace fsz
