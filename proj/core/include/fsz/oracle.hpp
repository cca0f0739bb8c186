#pragma once

#include <cstdint>
#include <string>

#include "fsz/bounds.hpp"
#include "fsz/minda.hpp"

namespace fsz {

struct OracleConfig {
  int radial_steps = 60;
  int angular_steps = 96;
  int refine_iterations = 2;
  double feasibility_tolerance = 1e-9;

  /// Throws std::domain_error on out-of-range fields
  /// (grid sizes >= 8, tolerance in (0, 1e-3]).
  void validate() const;
};

/// Functional maximized by the oracle.
struct OracleFunctional {
  enum class Kind { abs_a2, abs_a3, fekete_szego };
  Kind kind = Kind::fekete_szego;
  cplx mu{0.0, 0.0};  // used by fekete_szego only

  static OracleFunctional abs_a2() { return {Kind::abs_a2, {}}; }
  static OracleFunctional abs_a3() { return {Kind::abs_a3, {}}; }
  static OracleFunctional fekete_szego(cplx mu) {
    return {Kind::fekete_szego, mu};
  }
};

struct OracleResult {
  double max_value = 0.0;
  SchwarzPair witness;
  cplx induced_d2{0.0, 0.0};
  std::int64_t evaluated_points = 0;
  double feasible_fraction = 0.0;
};

/// Two-coefficient Schwarz-Pick feasibility:
/// |c1| <= 1 + tol and |c2| <= 1 - |c1|^2 + tol.
bool is_feasible_pair(cplx c1, cplx c2, double tol);

/// Brute-force maximum of the functional over the feasible Schwarz region
/// intersected with feasibility of the induced inverse-side pair (d1, d2).
///
/// The functional modulus and both feasibility constraints are invariant
/// under (c1, c2) -> (e^{ia} c1, e^{2ia} c2), so the grid fixes arg c1 = 0
/// and scans (|c1|, |c2|, arg c2): radial_steps x radial_steps x
/// angular_steps points per level, then refine_iterations re-grids of a box
/// shrinking by 1/4 per iteration around the incumbent. Deterministic for a
/// fixed config under any parallel schedule (fixed-chunk reduction with a
/// lexicographic tie-break on (|c1|, arg c1, |c2|, arg c2)).
OracleResult oracle_max(const OracleFunctional& functional,
                        const ClassParams& params, double B1, double B2,
                        const OracleConfig& config);

enum class Theorem { T1, T2, T3, Auto };

std::string theorem_label(Theorem t);
Theorem theorem_from_label(const std::string& label);

/// T1 applies always; T2 needs real gamma > 0 and real mu; T3 needs real mu.
bool theorem_applicable(Theorem t, const ClassParams& params, cplx mu);

/// Evaluate the selected bound; Auto evaluates every applicable theorem and
/// returns the minimum (ties resolved T1 before T2 before T3).
BoundReport select_bound(Theorem t, const ClassParams& params, double B1,
                         double B2, cplx mu);

inline constexpr double kSoundnessTol = 1e-9;

struct VerificationRecord {
  MindaTarget target;
  ClassParams params;
  cplx mu{0.0, 0.0};
  std::string theorem;  // requested selector: "T1", "T2", "T3" or "auto"
  BoundReport bound;
  OracleResult oracle;
  double slack = 0.0;
  bool sound = false;
  double sharpness_ratio = 0.0;
};

/// Bound-vs-oracle comparison for one configuration. Throws
/// std::domain_error when the explicitly requested theorem is inapplicable.
VerificationRecord verify_config(const ClassParams& params,
                                 const MindaTarget& target, cplx mu,
                                 Theorem theorem, const OracleConfig& config);

}  // namespace fsz
