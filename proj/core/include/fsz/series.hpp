#pragma once

#include <complex>
#include <vector>

namespace fsz {

using cplx = std::complex<double>;

/// Shared tolerance constants. `structural` covers identities that hold
/// exactly up to rounding inside one code path; `cross_impl` covers
/// agreement between two independent numerical routes.
namespace tol {
inline constexpr double structural = 1e-12;
inline constexpr double cross_impl = 1e-9;
}  // namespace tol

/// Power series truncated at a fixed order: coeffs[k] multiplies z^k,
/// and coeffs always has exactly order+1 entries.
///
/// Binary arithmetic truncates to the smaller operand order; composition
/// and reversion keep the order of the outer/base operand.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<cplx> coeffs);

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  static TruncatedSeries constant(int order, cplx c);
  /// The series z (requires order >= 1).
  static TruncatedSeries identity(int order);

  int order() const { return order_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  void set_coeff(int k, cplx v) { coeffs_[static_cast<std::size_t>(k)] = v; }

  /// Copy truncated or zero-padded to the given order.
  TruncatedSeries with_order(int order) const;

 private:
  int order_;
  std::vector<cplx> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(cplx s, const TruncatedSeries& a);

/// Cauchy product truncated at the smaller operand order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient q with series_mul(q, b) == a up to the truncation order.
/// Throws std::domain_error when b has zero constant term.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// outer(inner(z)) truncated at outer.order().
/// Throws std::domain_error when inner has nonzero constant term.
TruncatedSeries series_compose(const TruncatedSeries& outer,
                               const TruncatedSeries& inner);

/// Compositional inverse g of a normalized series f (f(0)=0, f'(0)=1), so
/// that g(f(z)) = z up to f's order. For order 3:
/// g = w - a2 w^2 + (2 a2^2 - a3) w^3.
/// Throws std::domain_error on unnormalized input.
TruncatedSeries series_reversion(const TruncatedSeries& f);

/// Termwise derivative; order drops by one (a constant stays order 0).
TruncatedSeries series_derivative(const TruncatedSeries& f);

}  // namespace fsz
