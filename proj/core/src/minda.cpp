#include "fsz/minda.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace fsz {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

/// exp of a series with zero constant term, via h' = u' h.
TruncatedSeries series_exp0(const TruncatedSeries& u) {
  const int n = u.order();
  TruncatedSeries h(n);
  h.set_coeff(0, cplx(1.0, 0.0));
  for (int k = 1; k <= n; ++k) {
    cplx acc(0.0, 0.0);
    for (int j = 1; j <= k; ++j)
      acc += static_cast<double>(j) * u.coeff(j) * h.coeff(k - j);
    h.set_coeff(k, acc / static_cast<double>(k));
  }
  return h;
}

}  // namespace

MindaTarget MindaTarget::half_plane() {
  MindaTarget t;
  t.family_ = MindaFamily::half_plane;
  return t;
}

MindaTarget MindaTarget::janowski(double A, double B) {
  MindaTarget t;
  t.family_ = MindaFamily::janowski;
  t.a_ = A;
  t.b_ = B;
  t.validate();
  return t;
}

MindaTarget MindaTarget::order_beta(double beta) {
  MindaTarget t;
  t.family_ = MindaFamily::order_beta;
  t.beta_ = beta;
  t.validate();
  return t;
}

MindaTarget MindaTarget::strong_beta(double beta) {
  MindaTarget t;
  t.family_ = MindaFamily::strong_beta;
  t.beta_ = beta;
  t.validate();
  return t;
}

MindaTarget MindaTarget::lemniscate() {
  MindaTarget t;
  t.family_ = MindaFamily::lemniscate;
  return t;
}

MindaTarget MindaTarget::kanas_qk(double k, std::optional<double> t_arg) {
  MindaTarget t;
  t.family_ = MindaFamily::kanas_qk;
  t.k_ = k;
  t.t_ = t_arg;
  t.validate();
  return t;
}

void MindaTarget::validate() const {
  switch (family_) {
    case MindaFamily::half_plane:
    case MindaFamily::lemniscate:
      return;
    case MindaFamily::janowski:
      if (!(-1.0 <= b_ && b_ < a_ && a_ <= 1.0))
        throw std::domain_error("janowski requires -1 <= B < A <= 1");
      return;
    case MindaFamily::order_beta:
      if (!(0.0 <= beta_ && beta_ < 1.0))
        throw std::domain_error("order-beta requires 0 <= beta < 1");
      return;
    case MindaFamily::strong_beta:
      if (!(0.0 < beta_ && beta_ <= 1.0))
        throw std::domain_error("strong-beta requires 0 < beta <= 1");
      return;
    case MindaFamily::kanas_qk:
      if (!(k_ >= 0.0)) throw std::domain_error("kanas-qk requires k >= 0");
      if (k_ > 1.0) {
        if (!t_.has_value())
          throw std::domain_error("kanas-qk with k > 1 requires t");
        if (!(0.0 < *t_ && *t_ < 1.0))
          throw std::domain_error("kanas-qk requires 0 < t < 1");
      }
      return;
  }
  throw std::domain_error("unknown phi family");
}

std::string MindaTarget::family_id() const {
  switch (family_) {
    case MindaFamily::half_plane: return "half-plane";
    case MindaFamily::janowski: return "janowski";
    case MindaFamily::order_beta: return "order-beta";
    case MindaFamily::strong_beta: return "strong-beta";
    case MindaFamily::lemniscate: return "lemniscate";
    case MindaFamily::kanas_qk: return "kanas-qk";
  }
  return "?";
}

std::string MindaTarget::params_string() const {
  switch (family_) {
    case MindaFamily::half_plane:
    case MindaFamily::lemniscate:
      return "";
    case MindaFamily::janowski:
      return "A=" + fmt_param(a_) + ";B=" + fmt_param(b_);
    case MindaFamily::order_beta:
    case MindaFamily::strong_beta:
      return "beta=" + fmt_param(beta_);
    case MindaFamily::kanas_qk:
      if (t_.has_value())
        return "k=" + fmt_param(k_) + ";t=" + fmt_param(*t_);
      return "k=" + fmt_param(k_);
  }
  return "";
}

MindaFamily family_from_id(const std::string& id) {
  if (id == "half-plane") return MindaFamily::half_plane;
  if (id == "janowski") return MindaFamily::janowski;
  if (id == "order-beta") return MindaFamily::order_beta;
  if (id == "strong-beta") return MindaFamily::strong_beta;
  if (id == "lemniscate") return MindaFamily::lemniscate;
  if (id == "kanas-qk") return MindaFamily::kanas_qk;
  throw std::domain_error("unknown phi family: " + id);
}

double elliptic_k(double m) {
  if (!(0.0 <= m && m < 1.0))
    throw std::domain_error("elliptic_k: modulus must satisfy 0 <= m < 1");
  double a = 1.0;
  double g = std::sqrt(1.0 - m * m);
  // AGM converges quadratically; 40 iterations is far beyond need, the
  // loop exits on the fixed point.
  for (int i = 0; i < 40; ++i) {
    const double an = 0.5 * (a + g);
    const double gn = std::sqrt(a * g);
    if (std::abs(an - gn) <= 1e-17 * an) {
      a = an;
      break;
    }
    a = an;
    g = gn;
  }
  return kPi / (2.0 * a);
}

MindaCoeffs qk_coeffs(double k, std::optional<double> t) {
  if (!(k >= 0.0)) throw std::domain_error("qk_coeffs: k must be >= 0");
  if (k < 1.0) {
    const double bb = (2.0 / kPi) * std::acos(k);
    const double q1 = 2.0 * bb * bb / (1.0 - k * k);
    const double q2 = (bb * bb + 2.0) / 3.0 * q1;
    return {q1, q2};
  }
  if (k == 1.0) {
    const double q1 = 8.0 / (kPi * kPi);
    return {q1, (2.0 / 3.0) * q1};
  }
  if (!t.has_value())
    throw std::domain_error("qk_coeffs: k > 1 requires the argument t");
  const double tv = *t;
  if (!(0.0 < tv && tv < 1.0))
    throw std::domain_error("qk_coeffs: t must lie in (0,1)");
  const double kk = elliptic_k(tv);
  const double root = std::sqrt(tv) * (1.0 + tv) * kk * kk;
  const double q1 = kPi * kPi / (4.0 * (k * k - 1.0) * root);
  const double q2 =
      (4.0 * kk * kk * (tv * tv + 6.0 * tv + 1.0) - kPi * kPi) /
      (24.0 * root) * q1;
  return {q1, q2};
}

MindaCoeffs minda_coeffs(const MindaTarget& target) {
  target.validate();
  switch (target.family()) {
    case MindaFamily::half_plane:
      return {2.0, 2.0};
    case MindaFamily::janowski: {
      const double d = target.A() - target.B();
      return {d, -target.B() * d};
    }
    case MindaFamily::order_beta: {
      const double v = 2.0 * (1.0 - target.beta());
      return {v, v};
    }
    case MindaFamily::strong_beta: {
      const double b = target.beta();
      return {2.0 * b, 2.0 * b * b};
    }
    case MindaFamily::lemniscate:
      return {0.5, -0.125};
    case MindaFamily::kanas_qk:
      return qk_coeffs(target.k(), target.t());
  }
  throw std::domain_error("unknown phi family");
}

std::optional<double> minda_b3(const MindaTarget& target) {
  target.validate();
  switch (target.family()) {
    case MindaFamily::half_plane:
      return 2.0;
    case MindaFamily::janowski:
      return (target.A() - target.B()) * target.B() * target.B();
    case MindaFamily::order_beta:
      return 2.0 * (1.0 - target.beta());
    default:
      return std::nullopt;
  }
}

TruncatedSeries minda_series(const MindaTarget& target, int order) {
  target.validate();
  if (order < 0 || order > kMaxSeriesOrder)
    throw std::domain_error("minda_series: order must lie in [0,16]");
  TruncatedSeries s(order);
  s.set_coeff(0, cplx(1.0, 0.0));
  switch (target.family()) {
    case MindaFamily::half_plane:
      for (int n = 1; n <= order; ++n) s.set_coeff(n, cplx(2.0, 0.0));
      return s;
    case MindaFamily::janowski: {
      // (1+Az)/(1+Bz): c_n = (A-B)(-B)^(n-1) for n >= 1.
      const double d = target.A() - target.B();
      double p = 1.0;
      for (int n = 1; n <= order; ++n) {
        s.set_coeff(n, cplx(d * p, 0.0));
        p *= -target.B();
      }
      return s;
    }
    case MindaFamily::order_beta: {
      const double v = 2.0 * (1.0 - target.beta());
      for (int n = 1; n <= order; ++n) s.set_coeff(n, cplx(v, 0.0));
      return s;
    }
    case MindaFamily::strong_beta: {
      // exp(2 beta atanh z) with atanh z = z + z^3/3 + z^5/5 + ...
      TruncatedSeries u(order);
      for (int n = 1; n <= order; n += 2)
        u.set_coeff(n, cplx(2.0 * target.beta() / n, 0.0));
      return series_exp0(u);
    }
    case MindaFamily::lemniscate: {
      // Binomial series for (1+z)^(1/2).
      double c = 1.0;
      for (int n = 1; n <= order; ++n) {
        c *= (0.5 - (n - 1)) / n;
        s.set_coeff(n, cplx(c, 0.0));
      }
      return s;
    }
    case MindaFamily::kanas_qk: {
      if (order > 2)
        throw std::domain_error(
            "minda_series: kanas-qk expansion is available only to order 2");
      const MindaCoeffs c = qk_coeffs(target.k(), target.t());
      if (order >= 1) s.set_coeff(1, cplx(c.B1, 0.0));
      if (order >= 2) s.set_coeff(2, cplx(c.B2, 0.0));
      return s;
    }
  }
  throw std::domain_error("unknown phi family");
}

}  // namespace fsz
