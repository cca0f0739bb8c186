#include "fsz/class_operator.hpp"

#include <stdexcept>

namespace fsz {

void ClassParams::validate() const {
  if (!(0.0 <= lambda && lambda <= 1.0))
    throw std::domain_error("lambda must lie in [0,1]");
  if (gamma == cplx(0.0, 0.0))
    throw std::domain_error("gamma must be nonzero");
}

TruncatedSeries operator_expand(const TruncatedSeries& f,
                                const ClassParams& params) {
  params.validate();
  if (f.order() < 3)
    throw std::domain_error("operator_expand: series order must be >= 3");
  if (f.coeff(0) != cplx(0.0, 0.0) || f.coeff(1) != cplx(1.0, 0.0))
    throw std::domain_error("operator_expand: f must be normalized");

  const double lam = params.lambda;
  const TruncatedSeries z = TruncatedSeries::identity(f.order());
  const TruncatedSeries fp = series_derivative(f).with_order(f.order());
  const TruncatedSeries fpp = series_derivative(fp).with_order(f.order());

  // N = z f' + lambda z^2 f'',  D = (1-lambda) f + lambda z f'.
  const TruncatedSeries num = series_add(
      series_mul(z, fp),
      series_scale(lam, series_mul(series_mul(z, z), fpp)));
  const TruncatedSeries den = series_add(series_scale(1.0 - lam, f),
                                         series_scale(lam, series_mul(z, fp)));

  // Both vanish linearly at 0; divide out one power of z.  D/z then has
  // constant term 1 for every lambda in [0,1].
  const int m = f.order() - 1;
  TruncatedSeries num_shift(m), den_shift(m);
  for (int k = 0; k <= m; ++k) {
    num_shift.set_coeff(k, num.coeff(k + 1));
    den_shift.set_coeff(k, den.coeff(k + 1));
  }
  const TruncatedSeries q = series_div(num_shift, den_shift);

  const cplx inv_gamma = cplx(1.0, 0.0) / params.gamma;
  TruncatedSeries out(2);
  out.set_coeff(0, cplx(1.0, 0.0));
  out.set_coeff(1, inv_gamma * q.coeff(1));
  out.set_coeff(2, inv_gamma * q.coeff(2));
  return out;
}

ACoeffs schwarz_to_a(const SchwarzPair& pair, const ClassParams& params,
                     double B1, double B2) {
  params.validate();
  if (!(B1 > 0.0)) throw std::domain_error("B1 must be positive");
  const double p = 1.0 + params.lambda;
  const double q = 1.0 + 2.0 * params.lambda;
  ACoeffs out;
  out.a2 = params.gamma * B1 * pair.c1 / p;
  out.a3 = (params.gamma * (B1 * pair.c2 + B2 * pair.c1 * pair.c1) +
            p * p * out.a2 * out.a2) /
           (2.0 * q);
  return out;
}

DCoeffs induced_inverse_schwarz(const SchwarzPair& pair,
                                const ClassParams& params, double B1,
                                double B2) {
  const ACoeffs a = schwarz_to_a(pair, params, B1, B2);
  const double lam = params.lambda;
  const double q = 1.0 + 2.0 * lam;
  DCoeffs out;
  out.d1 = -pair.c1;
  out.d2 = ((3.0 + 6.0 * lam - lam * lam) * a.a2 * a.a2 - 2.0 * q * a.a3 -
            params.gamma * B2 * out.d1 * out.d1) /
           (params.gamma * B1);
  return out;
}

double fs_value(cplx a2, cplx a3, cplx mu) {
  return std::abs(a3 - mu * a2 * a2);
}

}  // namespace fsz
