#pragma once

#include <optional>
#include <string>

#include "fsz/series.hpp"

namespace fsz {

/// Target functions phi for the subordination classes: analytic on the unit
/// disk with phi(0)=1, phi'(0)>0, positive real part, and real coefficients
/// B1 > 0, B2 in the expansion phi(z) = 1 + B1 z + B2 z^2 + ...
enum class MindaFamily {
  half_plane,   // (1+z)/(1-z)
  janowski,     // (1+Az)/(1+Bz), -1 <= B < A <= 1
  order_beta,   // (1+(1-2b)z)/(1-z), 0 <= b < 1
  strong_beta,  // ((1+z)/(1-z))^b, 0 < b <= 1
  lemniscate,   // sqrt(1+z)
  kanas_qk,     // conic-domain q_k; k >= 0, t in (0,1) required for k > 1
};

struct MindaCoeffs {
  double B1 = 0.0;
  double B2 = 0.0;
};

class MindaTarget {
 public:
  static MindaTarget half_plane();
  static MindaTarget janowski(double A, double B);
  static MindaTarget order_beta(double beta);
  static MindaTarget strong_beta(double beta);
  static MindaTarget lemniscate();
  static MindaTarget kanas_qk(double k, std::optional<double> t = std::nullopt);

  MindaFamily family() const { return family_; }
  double A() const { return a_; }
  double B() const { return b_; }
  double beta() const { return beta_; }
  double k() const { return k_; }
  std::optional<double> t() const { return t_; }

  /// Throws std::domain_error when the family parameters are out of range.
  void validate() const;

  /// Stable identifier used by the CLI and config files.
  std::string family_id() const;
  /// Parameters as "key=value" pairs joined by ';' (empty for
  /// parameter-free families). The numeric format is %.15g.
  std::string params_string() const;

 private:
  MindaFamily family_ = MindaFamily::half_plane;
  double a_ = 0.0, b_ = 0.0, beta_ = 0.0, k_ = 0.0;
  std::optional<double> t_;
};

/// Look up a family by its stable identifier ("half-plane", "janowski",
/// "order-beta", "strong-beta", "lemniscate", "kanas-qk").
/// Throws std::domain_error on an unknown identifier.
MindaFamily family_from_id(const std::string& id);

/// First two Taylor coefficients of the target.
MindaCoeffs minda_coeffs(const MindaTarget& target);

/// Third coefficient where a trivial closed form exists
/// (half_plane, janowski, order_beta); nullopt otherwise.
std::optional<double> minda_b3(const MindaTarget& target);

/// Complete elliptic integral of the first kind in the modulus convention,
///   K(m) = integral_0^{pi/2} dtheta / sqrt(1 - m^2 sin^2 theta),
/// evaluated as pi / (2 AGM(1, sqrt(1-m^2))). Relative error <= 1e-12.
/// Throws std::domain_error unless 0 <= m < 1.
double elliptic_k(double m);

/// (Q1, Q2) of the conic-domain function q_k. For k > 1 the elliptic
/// argument t must be supplied; the k <-> t relation itself is out of scope
/// and t is taken as an explicit input. t is ignored for k <= 1.
MindaCoeffs qk_coeffs(double k, std::optional<double> t = std::nullopt);

/// Taylor expansion of phi about 0 up to `order` (<= 16); coefficient 0 is 1.
/// kanas_qk is supported only up to order 2. Throws std::domain_error on an
/// unsupported family/order combination or invalid parameters.
TruncatedSeries minda_series(const MindaTarget& target, int order);

inline constexpr int kMaxSeriesOrder = 16;

}  // namespace fsz
