#pragma once

#include <string>

#include "fsz/oracle.hpp"

namespace fsz {

/// All numeric output uses 15 significant digits with lowercase exponents
/// so that identical inputs reproduce byte-identical reports.
std::string fmt_g15(double v);
std::string json_escape(const std::string& s);
std::string json_complex(cplx z);  // [re, im]

/// {"value": ..., "branch": "...", "intermediates": {...}} with complex
/// intermediates as [re, im] pairs (keys in sorted order). `include_notes`
/// appends a "notes" array when the report carries convention remarks.
std::string serialize_bound_report(const BoundReport& report,
                                   bool include_notes = false);

std::string serialize_oracle_result(const OracleResult& result);

std::string serialize_verification_record(const VerificationRecord& rec);

/// Fixed, versioned verify CSV schema.
extern const char* const kVerifyCsvHeader;
std::string verification_record_csv_row(const VerificationRecord& rec);

/// Fixed sweep-mu CSV schema (branch_change flags rows whose branch differs
/// from the previous row's).
extern const char* const kMuSweepCsvHeader;
std::string mu_sweep_csv_row(double mu, const BoundReport& bound,
                             const OracleResult& oracle, bool branch_change);

}  // namespace fsz
