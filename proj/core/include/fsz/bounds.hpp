#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fsz/class_operator.hpp"

namespace fsz {

/// A computed bound together with the active piecewise branch and the named
/// intermediate quantities that drove the branch selection. `notes` is
/// in-memory metadata (convention remarks); serialization includes it only
/// on request so the default report shape stays {value, branch,
/// intermediates}.
struct BoundReport {
  double value = 0.0;
  std::string branch;
  std::map<std::string, std::variant<double, cplx>> intermediates;
  std::vector<std::string> notes;
};

/// Keogh-Merkes right-hand side 1 + (|s|-1) c1_abs^2 for the coefficient
/// inequality |c2 - s c1^2| <= 1 + (|s|-1)|c1|^2 over Schwarz functions.
/// Throws std::domain_error unless 0 <= c1_abs <= 1.
double lemma_rhs(cplx s, double c1_abs);

/// |gamma| B1 / (1+lambda).
double a2_bound(const ClassParams& params, double B1);

/// (|gamma| B1 / (4(1+2lambda))) max{2, |s|+|t|} with
/// s = B2/B1 - 4 B1 gamma (1+2lambda)/(1+lambda)^2 and t = B2/B1.
BoundReport a3_bound(const ClassParams& params, double B1, double B2);

/// Fekete-Szego bound for complex gamma and complex mu:
///   L = |B2/B1 - (1-mu) 4 B1 gamma (1+2lambda)/(1+lambda)^2| + |B2/B1|,
///   value = B1|gamma|/(2(1+2lambda))        when L <= 2,
///           B1|gamma| L /(4(1+2lambda))     when L >  2.
/// The sign of the (1-mu) term inside L is the one under which mu = 0
/// reproduces a3_bound exactly; see the note carried in the report.
BoundReport fs_bound_t1(const ClassParams& params, double B1, double B2,
                        cplx mu);

/// Fekete-Szego bound for real gamma > 0 and real mu, piecewise in mu.
/// With F = (1+lambda)^2 (B1-|B2|) / (2 gamma B1^2 (1+2lambda)):
///   |B2| >= B1:  gamma|B2|/(2(1+2lambda)) + |mu-1| gamma^2 B1^2/(1+lambda)^2
///   |B2| <  B1:  same expression for mu <= 1-F or mu >= 1+F,
///                gamma B1/(2(1+2lambda)) in between.
/// Throws std::domain_error for nonreal or nonpositive gamma.
BoundReport fs_bound_t2(const ClassParams& params, double B1, double B2,
                        double mu);

/// Fekete-Szego bound for complex gamma and real mu, with theta = arg gamma,
///   k1 = B2 (1+lambda)^2 e^{i theta} / (4 B1^2 |gamma| (1+2lambda)),
///   N  = (1+lambda)^2 [|B2|(1+|sin theta|) - 2 B1]
///        / (4 B1^2 |gamma| (1+2lambda)).
/// Case (1+|sin theta|)|B2|/(2B1) >= 1 splits at mu = 1 - Re k1; otherwise
/// the middle branch |gamma| B1/(2(1+2lambda)) holds on
/// (1 - Re k1 + N, 1 - Re k1 - N).
BoundReport fs_bound_t3(const ClassParams& params, double B1, double B2,
                        double mu);

enum class Corollary { C1, C2, C3, C4 };
enum class CorollaryVariant {
  complex_mu,            // variant (1)/(i):   complex gamma, complex mu
  real_gamma,            // variant (2)/(ii):  real gamma > 0, real mu
  complex_gamma_real_mu  // variant (3)/(iii): complex gamma, real mu
};

/// Specialized piecewise evaluators, written directly in the corollary's own
/// quantities (A, B, gamma, theta and the psi/phi threshold functions) as an
/// independent code path from the theorem evaluators:
///   C1: Janowski targets at lambda = 0      (B1 = A-B, B2 = -B(A-B))
///   C2: Janowski targets at lambda = 1
///   C3: half-plane target at lambda = 0     (B1 = B2 = 2)
///   C4: half-plane target at lambda = 1
/// A and B are ignored for C3/C4. Parameter ranges are enforced per variant.
BoundReport corollary_bound(Corollary which, CorollaryVariant variant,
                            double A, double B, cplx gamma, cplx mu);

}  // namespace fsz
