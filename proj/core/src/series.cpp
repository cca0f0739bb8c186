#include "fsz/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsz {

namespace {

std::size_t idx(int k) { return static_cast<std::size_t>(k); }

}  // namespace

TruncatedSeries::TruncatedSeries(int order)
    : order_(order), coeffs_(idx(order) + 1, cplx(0.0, 0.0)) {
  if (order < 0) throw std::domain_error("series order must be nonnegative");
}

TruncatedSeries::TruncatedSeries(int order, std::vector<cplx> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw std::domain_error("series order must be nonnegative");
  if (coeffs_.size() != idx(order) + 1)
    throw std::domain_error("coefficient count must equal order+1");
}

TruncatedSeries TruncatedSeries::constant(int order, cplx c) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
  if (order < 1) throw std::domain_error("identity series needs order >= 1");
  TruncatedSeries s(order);
  s.coeffs_[1] = cplx(1.0, 0.0);
  return s;
}

TruncatedSeries TruncatedSeries::with_order(int order) const {
  TruncatedSeries out(order);
  const int n = std::min(order, order_);
  for (int k = 0; k <= n; ++k) out.coeffs_[idx(k)] = coeffs_[idx(k)];
  return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) + b.coeff(k));
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) out.set_coeff(k, a.coeff(k) - b.coeff(k));
  return out;
}

TruncatedSeries series_scale(cplx s, const TruncatedSeries& a) {
  TruncatedSeries out(a.order());
  for (int k = 0; k <= a.order(); ++k) out.set_coeff(k, s * a.coeff(k));
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int k = 0; k <= n; ++k) {
    cplx acc(0.0, 0.0);
    for (int j = 0; j <= k; ++j) acc += a.coeff(j) * b.coeff(k - j);
    out.set_coeff(k, acc);
  }
  return out;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.coeff(0) == cplx(0.0, 0.0))
    throw std::domain_error("series_div: divisor has zero constant term");
  const int n = std::min(a.order(), b.order());
  TruncatedSeries q(n);
  const cplx inv_b0 = cplx(1.0, 0.0) / b.coeff(0);
  for (int k = 0; k <= n; ++k) {
    cplx acc = a.coeff(k);
    for (int j = 0; j < k; ++j) acc -= q.coeff(j) * b.coeff(k - j);
    q.set_coeff(k, acc * inv_b0);
  }
  return q;
}

TruncatedSeries series_compose(const TruncatedSeries& outer,
                               const TruncatedSeries& inner) {
  if (inner.coeff(0) != cplx(0.0, 0.0))
    throw std::domain_error("series_compose: inner constant term must be 0");
  const int n = outer.order();
  const TruncatedSeries in = inner.with_order(n);
  // Horner over the outer coefficients.
  TruncatedSeries acc = TruncatedSeries::constant(n, outer.coeff(n));
  for (int k = n - 1; k >= 0; --k) {
    acc = series_mul(acc, in);
    acc.set_coeff(0, acc.coeff(0) + outer.coeff(k));
  }
  return acc;
}

TruncatedSeries series_reversion(const TruncatedSeries& f) {
  if (f.coeff(0) != cplx(0.0, 0.0) ||
      (f.order() >= 1 && f.coeff(1) != cplx(1.0, 0.0)))
    throw std::domain_error(
        "series_reversion: input must be normalized (f(0)=0, f'(0)=1)");
  const int n = f.order();
  if (n < 1)
    throw std::domain_error("series_reversion: order must be >= 1");
  // Powers of f up to f^n; [z^m] f^m = 1 because f'(0) = 1.
  std::vector<TruncatedSeries> fpow;
  fpow.reserve(idx(n) + 1);
  fpow.push_back(TruncatedSeries::constant(n, cplx(1.0, 0.0)));
  for (int m = 1; m <= n; ++m) fpow.push_back(series_mul(fpow.back(), f));

  TruncatedSeries g(n);
  g.set_coeff(1, cplx(1.0, 0.0));
  for (int k = 2; k <= n; ++k) {
    cplx acc(0.0, 0.0);
    for (int m = 1; m < k; ++m) acc += g.coeff(m) * fpow[idx(m)].coeff(k);
    g.set_coeff(k, -acc);
  }
  return g;
}

TruncatedSeries series_derivative(const TruncatedSeries& f) {
  if (f.order() == 0) return TruncatedSeries(0);
  TruncatedSeries out(f.order() - 1);
  for (int k = 0; k <= out.order(); ++k)
    out.set_coeff(k, static_cast<double>(k + 1) * f.coeff(k + 1));
  return out;
}

}  // namespace fsz
