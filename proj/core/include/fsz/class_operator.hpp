#pragma once

#include <complex>

#include "fsz/series.hpp"

namespace fsz {

/// Parameters (lambda, gamma) of the subordination class defined by
///   1 + (1/gamma) [ (z f' + lambda z^2 f'') / ((1-lambda) f + lambda z f') - 1 ]
/// being subordinate to a Minda target phi.
struct ClassParams {
  double lambda = 0.0;
  cplx gamma{1.0, 0.0};

  /// Throws std::domain_error unless 0 <= lambda <= 1 and gamma != 0.
  void validate() const;
};

/// First two Taylor coefficients of a Schwarz function w(z)=c1 z + c2 z^2 + ...
/// Feasibility (two-coefficient Schwarz-Pick): |c1| <= 1, |c2| <= 1 - |c1|^2.
struct SchwarzPair {
  cplx c1{0.0, 0.0};
  cplx c2{0.0, 0.0};
};

/// Expand the class operator applied to a normalized series f
/// (f(0)=0, f'(0)=1, order >= 3) to order 2 via the full series pipeline.
/// The result's coefficients are
///   1,  (1+lambda) a2 / gamma,  [2(1+2lambda) a3 - (1+lambda)^2 a2^2] / gamma.
TruncatedSeries operator_expand(const TruncatedSeries& f,
                                const ClassParams& params);

/// Forward closed-form map from Schwarz coefficients to (a2, a3):
///   a2 = gamma B1 c1 / (1+lambda)
///   a3 = [gamma (B1 c2 + B2 c1^2) + (1+lambda)^2 a2^2] / (2 (1+2lambda))
struct ACoeffs {
  cplx a2{0.0, 0.0};
  cplx a3{0.0, 0.0};
};
ACoeffs schwarz_to_a(const SchwarzPair& pair, const ClassParams& params,
                     double B1, double B2);

/// Schwarz coefficients induced on the inverse-map side: d1 = -c1 and d2
/// solved from the inverse-side coefficient equation
///   [-2(1+2lambda) a3 + (3+6lambda-lambda^2) a2^2] / gamma = B1 d2 + B2 d1^2.
struct DCoeffs {
  cplx d1{0.0, 0.0};
  cplx d2{0.0, 0.0};
};
DCoeffs induced_inverse_schwarz(const SchwarzPair& pair,
                                const ClassParams& params, double B1,
                                double B2);

/// |a3 - mu a2^2|.
double fs_value(cplx a2, cplx a3, cplx mu);

}  // namespace fsz
