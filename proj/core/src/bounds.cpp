#include "fsz/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace fsz {

namespace {

constexpr const char* kT1SignNote =
    "L = |B2/B1 - (1-mu) 4 B1 gamma (1+2 lambda)/(1+lambda)^2| + |B2/B1|; "
    "the minus sign on the (1-mu) term is the convention under which the "
    "mu=0 value coincides with the |a3| bound. The opposite sign seen in "
    "some displayed forms of this bound is treated as a typo.";

void require_b1(double B1) {
  if (!(B1 > 0.0)) throw std::domain_error("B1 must be positive");
}

double real_positive_gamma(const ClassParams& params) {
  if (params.gamma.imag() != 0.0 || !(params.gamma.real() > 0.0))
    throw std::domain_error("this bound requires real gamma > 0");
  return params.gamma.real();
}

void require_janowski(double A, double B) {
  if (!(-1.0 <= B && B < A && A <= 1.0))
    throw std::domain_error("corollary requires -1 <= B < A <= 1");
}

cplx require_nonzero(cplx gamma) {
  if (gamma == cplx(0.0, 0.0))
    throw std::domain_error("gamma must be nonzero");
  return gamma;
}

double require_real(cplx v, const char* what) {
  if (v.imag() != 0.0)
    throw std::domain_error(std::string(what) + " must be real");
  return v.real();
}

/// Shared three-branch layout of the complex-gamma/real-mu evaluators:
/// first/third are linear in mu with slope -+sq, the middle plateau is
/// `mid`, and the plateau window is (1-rek1+N, 1-rek1-N) when
/// tail_ratio < 1 (N <= 0 there).  `label` prefixes the branch name.
BoundReport three_branch_complex_gamma(double sq, double tail, double mid,
                                       double rek1, double N,
                                       double tail_ratio, double mu,
                                       const std::string& label) {
  BoundReport r;
  const double first = sq * (1.0 - mu - rek1) + tail;
  const double third = tail - sq * (1.0 - mu - rek1);
  if (tail_ratio >= 1.0) {
    if (mu <= 1.0 - rek1) {
      r.value = first;
      r.branch = label + ".case1.mu<=1-Rek1";
    } else {
      r.value = third;
      r.branch = label + ".case1.mu>1-Rek1";
    }
  } else {
    if (mu <= 1.0 - rek1 + N) {
      r.value = first;
      r.branch = label + ".case2.mu<=1-Rek1+N";
    } else if (mu >= 1.0 - rek1 - N) {
      r.value = third;
      r.branch = label + ".case2.mu>=1-Rek1-N";
    } else {
      r.value = mid;
      r.branch = label + ".case2.middle";
    }
  }
  return r;
}

}  // namespace

double lemma_rhs(cplx s, double c1_abs) {
  if (!(0.0 <= c1_abs && c1_abs <= 1.0))
    throw std::domain_error("lemma_rhs: |c1| must lie in [0,1]");
  return 1.0 + (std::abs(s) - 1.0) * c1_abs * c1_abs;
}

double a2_bound(const ClassParams& params, double B1) {
  params.validate();
  require_b1(B1);
  return std::abs(params.gamma) * B1 / (1.0 + params.lambda);
}

BoundReport a3_bound(const ClassParams& params, double B1, double B2) {
  params.validate();
  require_b1(B1);
  const double p = 1.0 + params.lambda;
  const double q = 1.0 + 2.0 * params.lambda;
  const double t = B2 / B1;
  const cplx s = t - 4.0 * B1 * params.gamma * q / (p * p);
  const double st = std::abs(s) + std::abs(t);
  BoundReport r;
  if (st <= 2.0) {
    r.value = std::abs(params.gamma) * B1 / (2.0 * q);
    r.branch = "a3.2";
  } else {
    r.value = std::abs(params.gamma) * B1 / (4.0 * q) * st;
    r.branch = "a3.s+t";
  }
  r.intermediates = {{"s", s}, {"t", t}, {"B1", B1}, {"B2", B2}};
  return r;
}

BoundReport fs_bound_t1(const ClassParams& params, double B1, double B2,
                        cplx mu) {
  params.validate();
  require_b1(B1);
  const double p = 1.0 + params.lambda;
  const double q = 1.0 + 2.0 * params.lambda;
  const double t = B2 / B1;
  const cplx s = t - (cplx(1.0, 0.0) - mu) * 4.0 * B1 * params.gamma * q /
                         (p * p);
  const double L = std::abs(s) + std::abs(t);
  BoundReport r;
  if (L <= 2.0) {
    r.value = B1 * std::abs(params.gamma) / (2.0 * q);
    r.branch = "T1.L<=2";
  } else {
    r.value = B1 * std::abs(params.gamma) / (4.0 * q) * L;
    r.branch = "T1.L>2";
  }
  r.intermediates = {{"s", s}, {"t", t}, {"L", L}, {"B1", B1}, {"B2", B2}};
  r.notes.push_back(kT1SignNote);
  return r;
}

BoundReport fs_bound_t2(const ClassParams& params, double B1, double B2,
                        double mu) {
  params.validate();
  require_b1(B1);
  const double g = real_positive_gamma(params);
  const double p = 1.0 + params.lambda;
  const double q = 1.0 + 2.0 * params.lambda;
  const double term_b2 = g * std::abs(B2) / (2.0 * q);
  const double quad = g * g * B1 * B1 / (p * p);
  BoundReport r;
  r.intermediates = {{"t", B2 / B1}, {"B1", B1}, {"B2", B2}};
  if (std::abs(B2) >= B1) {
    if (mu <= 1.0) {
      r.value = term_b2 + (1.0 - mu) * quad;
      r.branch = "T2.case1.mu<=1";
    } else {
      r.value = term_b2 + (mu - 1.0) * quad;
      r.branch = "T2.case1.mu>1";
    }
    return r;
  }
  const double F = p * p * (B1 - std::abs(B2)) / (2.0 * g * B1 * B1 * q);
  r.intermediates["F"] = F;
  if (mu <= 1.0 - F) {
    r.value = term_b2 + (1.0 - mu) * quad;
    r.branch = "T2.case2.mu<=1-F";
  } else if (mu >= 1.0 + F) {
    r.value = term_b2 + (mu - 1.0) * quad;
    r.branch = "T2.case2.mu>=1+F";
  } else {
    r.value = g * B1 / (2.0 * q);
    r.branch = "T2.case2.middle";
  }
  return r;
}

BoundReport fs_bound_t3(const ClassParams& params, double B1, double B2,
                        double mu) {
  params.validate();
  require_b1(B1);
  const double p = 1.0 + params.lambda;
  const double q = 1.0 + 2.0 * params.lambda;
  const double ag = std::abs(params.gamma);
  const double theta = std::arg(params.gamma);
  const double sin_abs = std::abs(std::sin(theta));
  const cplx k1 = B2 * p * p * std::polar(1.0, theta) /
                  (4.0 * B1 * B1 * ag * q);
  const double N =
      p * p * (std::abs(B2) * (1.0 + sin_abs) - 2.0 * B1) /
      (4.0 * B1 * B1 * ag * q);
  const double sq = ag * ag * B1 * B1 / (p * p);
  const double tail = ag * std::abs(B2) * (1.0 + sin_abs) / (4.0 * q);
  const double mid = ag * B1 / (2.0 * q);
  const double tail_ratio = std::abs(B2) * (1.0 + sin_abs) / (2.0 * B1);
  BoundReport r = three_branch_complex_gamma(sq, tail, mid, k1.real(), N,
                                             tail_ratio, mu, "T3");
  r.intermediates = {{"k1", k1}, {"N", N}, {"theta", theta}, {"B1", B1},
                     {"B2", B2}};
  return r;
}

namespace {

BoundReport corollary_complex_mu(Corollary which, double A, double B,
                                 cplx gamma, cplx mu) {
  require_nonzero(gamma);
  const double ag = std::abs(gamma);
  BoundReport r;
  const cplx one_minus_mu = cplx(1.0, 0.0) - mu;
  double inner = 0.0;
  switch (which) {
    case Corollary::C1: {
      require_janowski(A, B);
      const double d = A - B;
      inner = std::abs(B + 4.0 * one_minus_mu * d * gamma);
      const double L = inner + std::abs(B);
      r.value = (L <= 2.0) ? d * ag / 2.0 : d * ag * L / 4.0;
      r.branch = (L <= 2.0) ? "C1.v1.L<=2" : "C1.v1.L>2";
      r.intermediates = {{"L", L}, {"B1", d}, {"B2", -B * d}};
      break;
    }
    case Corollary::C2: {
      require_janowski(A, B);
      const double d = A - B;
      inner = std::abs(B + 3.0 * one_minus_mu * d * gamma);
      const double L = inner + std::abs(B);
      r.value = (L <= 2.0) ? d * ag / 6.0 : d * ag * L / 12.0;
      r.branch = (L <= 2.0) ? "C2.v1.L<=2" : "C2.v1.L>2";
      r.intermediates = {{"L", L}, {"B1", d}, {"B2", -B * d}};
      break;
    }
    case Corollary::C3: {
      inner = std::abs(cplx(1.0, 0.0) - 8.0 * one_minus_mu * gamma);
      r.value = (inner <= 1.0) ? ag : ag / 2.0 * (inner + 1.0);
      r.branch = (inner <= 1.0) ? "C3.v1.L<=2" : "C3.v1.L>2";
      r.intermediates = {{"L", inner + 1.0}, {"B1", 2.0}, {"B2", 2.0}};
      break;
    }
    case Corollary::C4: {
      inner = std::abs(cplx(1.0, 0.0) - 6.0 * one_minus_mu * gamma);
      r.value = (inner <= 1.0) ? ag / 3.0 : ag / 6.0 * (inner + 1.0);
      r.branch = (inner <= 1.0) ? "C4.v1.L<=2" : "C4.v1.L>2";
      r.intermediates = {{"L", inner + 1.0}, {"B1", 2.0}, {"B2", 2.0}};
      break;
    }
  }
  r.notes.push_back(kT1SignNote);
  return r;
}

BoundReport corollary_real_gamma(Corollary which, double A, double B,
                                 cplx gamma, cplx mu_c) {
  const double g = require_real(gamma, "gamma");
  if (!(g > 0.0)) throw std::domain_error("gamma must be positive");
  const double mu = require_real(mu_c, "mu");
  BoundReport r;
  switch (which) {
    case Corollary::C1:
    case Corollary::C2: {
      require_janowski(A, B);
      const double d = A - B;
      const bool convex = which == Corollary::C2;
      const double F = convex ? 2.0 * (1.0 - std::abs(B)) / (3.0 * g * d)
                              : (1.0 - std::abs(B)) / (2.0 * g * d);
      const double term = convex ? std::abs(B) * d * g / 6.0
                                 : std::abs(B) * d * g / 2.0;
      const double quad = convex ? g * g * d * d / 4.0 : g * g * d * d;
      const double mid = convex ? d * g / 6.0 : d * g / 2.0;
      const std::string label = convex ? "C2.v2" : "C1.v2";
      if (mu <= 1.0 - F) {
        r.value = term + (1.0 - mu) * quad;
        r.branch = label + ".mu<=1-F";
      } else if (mu >= 1.0 + F) {
        r.value = term + (mu - 1.0) * quad;
        r.branch = label + ".mu>=1+F";
      } else {
        r.value = mid;
        r.branch = label + ".middle";
      }
      r.intermediates = {{"F", F}, {"B1", d}, {"B2", -B * d}};
      break;
    }
    case Corollary::C3: {
      r.value = (mu <= 1.0) ? g + 4.0 * (1.0 - mu) * g * g
                            : g + 4.0 * (mu - 1.0) * g * g;
      r.branch = (mu <= 1.0) ? "C3.v2.mu<=1" : "C3.v2.mu>1";
      r.intermediates = {{"B1", 2.0}, {"B2", 2.0}};
      break;
    }
    case Corollary::C4: {
      r.value = (mu <= 1.0) ? g / 3.0 + (1.0 - mu) * g * g
                            : g / 3.0 + (mu - 1.0) * g * g;
      r.branch = (mu <= 1.0) ? "C4.v2.mu<=1" : "C4.v2.mu>1";
      r.intermediates = {{"B1", 2.0}, {"B2", 2.0}};
      break;
    }
  }
  return r;
}

BoundReport corollary_complex_gamma(Corollary which, double A, double B,
                                    cplx gamma, cplx mu_c) {
  require_nonzero(gamma);
  const double mu = require_real(mu_c, "mu");
  const double ag = std::abs(gamma);
  const double theta = std::arg(gamma);
  const double sa = std::abs(std::sin(theta));
  const double ca = std::cos(theta);
  double sq = 0.0, tail = 0.0, mid = 0.0, rek1 = 0.0, N = 0.0, ratio = 0.0;
  std::string label;
  double b1 = 2.0, b2 = 2.0;
  switch (which) {
    case Corollary::C1:
    case Corollary::C2: {
      require_janowski(A, B);
      const double d = A - B;
      const bool convex = which == Corollary::C2;
      const double scale = convex ? 3.0 : 4.0;  // denominator of psi/phi
      rek1 = -B * ca / (scale * d * ag);
      N = (std::abs(B) * (1.0 + sa) - 2.0) / (scale * d * ag);
      sq = convex ? ag * ag * d * d / 4.0 : ag * ag * d * d;
      tail = convex ? ag * std::abs(B) * d * (1.0 + sa) / 12.0
                    : ag * std::abs(B) * d * (1.0 + sa) / 4.0;
      mid = convex ? ag * d / 6.0 : ag * d / 2.0;
      ratio = std::abs(B) * (1.0 + sa) / 2.0;
      label = convex ? "C2.v3" : "C1.v3";
      b1 = d;
      b2 = -B * d;
      break;
    }
    case Corollary::C3: {
      rek1 = ca / (8.0 * ag);
      N = (sa - 1.0) / (8.0 * ag);
      sq = 4.0 * ag * ag;
      tail = ag * (1.0 + sa) / 2.0;
      mid = ag;
      ratio = (1.0 + sa) / 2.0;
      label = "C3.v3";
      break;
    }
    case Corollary::C4: {
      rek1 = ca / (6.0 * ag);
      N = (sa - 1.0) / (6.0 * ag);
      sq = ag * ag;
      tail = ag * (1.0 + sa) / 6.0;
      mid = ag / 3.0;
      ratio = (1.0 + sa) / 2.0;
      label = "C4.v3";
      break;
    }
  }
  BoundReport r =
      three_branch_complex_gamma(sq, tail, mid, rek1, N, ratio, mu, label);
  r.intermediates = {{"N", N}, {"theta", theta}, {"B1", b1}, {"B2", b2}};
  return r;
}

}  // namespace

BoundReport corollary_bound(Corollary which, CorollaryVariant variant,
                            double A, double B, cplx gamma, cplx mu) {
  switch (variant) {
    case CorollaryVariant::complex_mu:
      return corollary_complex_mu(which, A, B, gamma, mu);
    case CorollaryVariant::real_gamma:
      return corollary_real_gamma(which, A, B, gamma, mu);
    case CorollaryVariant::complex_gamma_real_mu:
      return corollary_complex_gamma(which, A, B, gamma, mu);
  }
  throw std::domain_error("unknown corollary variant");
}

}  // namespace fsz
