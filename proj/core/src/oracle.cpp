#include "fsz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fsz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double abs2(cplx z) { return z.real() * z.real() + z.imag() * z.imag(); }
double cabs(cplx z) { return std::sqrt(abs2(z)); }

struct Incumbent {
  double value = -1.0;
  double r1 = 0.0, rho2 = 0.0, phi2 = 0.0;  // box coordinates
  cplx c1{0.0, 0.0}, c2{0.0, 0.0}, d2{0.0, 0.0};
};

double norm_angle(double a) {
  double x = std::fmod(a, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  return x;
}

/// Strict total order used for the max reduction; ties on value fall back
/// to the lexicographically smallest (|c1|, arg c1, |c2|, arg c2) witness,
/// which makes the reduction order-independent.
bool better(const Incumbent& a, const Incumbent& b) {
  if (a.value != b.value) return a.value > b.value;
  const double ka[4] = {cabs(a.c1), norm_angle(std::arg(a.c1)), cabs(a.c2),
                        norm_angle(std::arg(a.c2))};
  const double kb[4] = {cabs(b.c1), norm_angle(std::arg(b.c1)), cabs(b.c2),
                        norm_angle(std::arg(b.c2))};
  for (int i = 0; i < 4; ++i) {
    if (ka[i] != kb[i]) return ka[i] < kb[i];
  }
  return false;
}

struct Box {
  double r1_lo, r1_hi;
  double rho2_lo, rho2_hi;
  double phi_lo, phi_hi;
  bool phi_periodic;  // initial level: half-open [0, 2pi)
};

struct EvalConstants {
  cplx ka;   // a3 - mu a2^2 = ka c2 + km c1^2;  a3 = ka c2 + kb c1^2
  cplx kb;
  cplx km;
  cplx k2;   // a2 = k2 c1
  cplx db;   // d2 = -c2 + db c1^2
  OracleFunctional::Kind kind;
  double tol;
};

EvalConstants make_constants(const OracleFunctional& f,
                             const ClassParams& params, double B1, double B2,
                             double tol) {
  const double lam = params.lambda;
  const double p = 1.0 + lam;
  const double q = 1.0 + 2.0 * lam;
  EvalConstants c;
  c.k2 = params.gamma * B1 / p;
  c.ka = params.gamma * B1 / (2.0 * q);
  c.kb = (params.gamma * B2 + p * p * c.k2 * c.k2) / (2.0 * q);
  c.km = c.kb - f.mu * c.k2 * c.k2;
  c.db = ((3.0 + 6.0 * lam - lam * lam) * c.k2 * c.k2 - 2.0 * q * c.kb -
          params.gamma * B2) /
         (params.gamma * B1);
  c.kind = f.kind;
  c.tol = tol;
  return c;
}

double eval_value(const EvalConstants& c, double r1, cplx c2) {
  const double c1sq = r1 * r1;
  switch (c.kind) {
    case OracleFunctional::Kind::abs_a2:
      return cabs(c.k2) * r1;
    case OracleFunctional::Kind::abs_a3:
      return cabs(c.ka * c2 + c.kb * c1sq);
    case OracleFunctional::Kind::fekete_szego:
      return cabs(c.ka * c2 + c.km * c1sq);
  }
  return 0.0;
}

struct ChunkResult {
  Incumbent best;
  std::int64_t evaluated = 0;
  std::int64_t feasible = 0;
};

ChunkResult scan_chunk(const EvalConstants& c, const std::vector<double>& r1s,
                       std::size_t r1_begin, std::size_t r1_end,
                       const std::vector<double>& rho2s,
                       const std::vector<double>& phis,
                       const std::vector<cplx>& units) {
  ChunkResult out;
  for (std::size_t i = r1_begin; i < r1_end; ++i) {
    const double r1 = r1s[i];
    const double c1sq = r1 * r1;
    const double c2max = 1.0 - c1sq;
    const cplx dshift = c.db * c1sq;  // d2 = dshift - c2
    const double dlimit = c2max + c.tol;
    const double dlimit2 = dlimit * dlimit;
    for (double rho2 : rho2s) {
      const double r2 = rho2 * c2max;
      for (std::size_t j = 0; j < phis.size(); ++j) {
        ++out.evaluated;
        const cplx c2 = r2 * units[j];
        const cplx d2 = dshift - c2;
        if (abs2(d2) > dlimit2) continue;
        ++out.feasible;
        const double v = eval_value(c, r1, c2);
        Incumbent cand{v, r1, rho2, phis[j], cplx(r1, 0.0), c2, d2};
        if (better(cand, out.best)) out.best = cand;
      }
    }
  }
  return out;
}

void scan_box(const EvalConstants& c, const Box& box, int radial, int angular,
              Incumbent& best, std::int64_t& evaluated,
              std::int64_t& feasible) {
  std::vector<double> r1s(static_cast<std::size_t>(radial));
  std::vector<double> rho2s(static_cast<std::size_t>(radial));
  for (int i = 0; i < radial; ++i) {
    const double u = radial > 1 ? static_cast<double>(i) / (radial - 1) : 0.0;
    r1s[static_cast<std::size_t>(i)] = box.r1_lo + (box.r1_hi - box.r1_lo) * u;
    rho2s[static_cast<std::size_t>(i)] =
        box.rho2_lo + (box.rho2_hi - box.rho2_lo) * u;
  }
  std::vector<double> phis(static_cast<std::size_t>(angular));
  for (int j = 0; j < angular; ++j) {
    const double span = box.phi_hi - box.phi_lo;
    const double u = box.phi_periodic
                         ? static_cast<double>(j) / angular
                         : (angular > 1
                                ? static_cast<double>(j) / (angular - 1)
                                : 0.0);
    phis[static_cast<std::size_t>(j)] = box.phi_lo + span * u;
  }
  std::vector<cplx> units(phis.size());
  for (std::size_t j = 0; j < phis.size(); ++j)
    units[j] = std::polar(1.0, phis[j]);

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const std::size_t n = r1s.size();
  const std::size_t nchunks = std::min<std::size_t>(hw, n);
  std::vector<std::future<ChunkResult>> futures;
  futures.reserve(nchunks);
  for (std::size_t k = 0; k < nchunks; ++k) {
    const std::size_t lo = n * k / nchunks;
    const std::size_t hi = n * (k + 1) / nchunks;
    futures.push_back(std::async(std::launch::async, [&, lo, hi] {
      return scan_chunk(c, r1s, lo, hi, rho2s, phis, units);
    }));
  }
  // Merge in fixed chunk order; `better` is a strict total order, so the
  // result is independent of thread scheduling.
  for (auto& fut : futures) {
    ChunkResult cr = fut.get();
    evaluated += cr.evaluated;
    feasible += cr.feasible;
    if (cr.best.value >= 0.0 && better(cr.best, best)) best = cr.best;
  }
}

}  // namespace

void OracleConfig::validate() const {
  if (radial_steps < 8 || angular_steps < 8)
    throw std::domain_error("oracle grid sizes must be >= 8");
  if (refine_iterations < 0)
    throw std::domain_error("refine_iterations must be >= 0");
  if (!(feasibility_tolerance > 0.0 && feasibility_tolerance <= 1e-3))
    throw std::domain_error("feasibility tolerance must lie in (0, 1e-3]");
}

bool is_feasible_pair(cplx c1, cplx c2, double tol) {
  const double a1 = cabs(c1);
  if (a1 > 1.0 + tol) return false;
  return cabs(c2) <= 1.0 - a1 * a1 + tol;
}

OracleResult oracle_max(const OracleFunctional& functional,
                        const ClassParams& params, double B1, double B2,
                        const OracleConfig& config) {
  params.validate();
  config.validate();
  if (!(B1 > 0.0)) throw std::domain_error("B1 must be positive");

  const EvalConstants consts = make_constants(functional, params, B1, B2,
                                              config.feasibility_tolerance);
  Incumbent best;
  std::int64_t evaluated = 0;
  std::int64_t feasible = 0;

  Box box{0.0, 1.0, 0.0, 1.0, 0.0, kTwoPi, true};
  scan_box(consts, box, config.radial_steps, config.angular_steps, best,
           evaluated, feasible);
  if (best.value < 0.0)
    throw std::runtime_error("oracle: empty feasible set");  // unreachable

  double wr = 1.0, wrho = 1.0, wphi = kTwoPi;
  for (int it = 0; it < config.refine_iterations; ++it) {
    wr *= 0.25;
    wrho *= 0.25;
    wphi *= 0.25;
    Box rbox;
    rbox.r1_lo = std::max(0.0, best.r1 - 0.5 * wr);
    rbox.r1_hi = std::min(1.0, best.r1 + 0.5 * wr);
    rbox.rho2_lo = std::max(0.0, best.rho2 - 0.5 * wrho);
    rbox.rho2_hi = std::min(1.0, best.rho2 + 0.5 * wrho);
    rbox.phi_lo = best.phi2 - 0.5 * wphi;
    rbox.phi_hi = best.phi2 + 0.5 * wphi;
    rbox.phi_periodic = false;
    scan_box(consts, rbox, config.radial_steps, config.angular_steps, best,
             evaluated, feasible);
  }

  OracleResult out;
  out.max_value = best.value;
  out.witness = {best.c1, best.c2};
  out.induced_d2 = best.d2;
  out.evaluated_points = evaluated;
  out.feasible_fraction =
      evaluated > 0 ? static_cast<double>(feasible) / evaluated : 0.0;
  return out;
}

std::string theorem_label(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::Auto: return "auto";
  }
  return "?";
}

Theorem theorem_from_label(const std::string& label) {
  if (label == "T1") return Theorem::T1;
  if (label == "T2") return Theorem::T2;
  if (label == "T3") return Theorem::T3;
  if (label == "auto") return Theorem::Auto;
  throw std::domain_error("unknown theorem selector: " + label);
}

bool theorem_applicable(Theorem t, const ClassParams& params, cplx mu) {
  switch (t) {
    case Theorem::T1:
      return true;
    case Theorem::T2:
      return params.gamma.imag() == 0.0 && params.gamma.real() > 0.0 &&
             mu.imag() == 0.0;
    case Theorem::T3:
      return mu.imag() == 0.0;
    case Theorem::Auto:
      return true;
  }
  return false;
}

BoundReport select_bound(Theorem t, const ClassParams& params, double B1,
                         double B2, cplx mu) {
  switch (t) {
    case Theorem::T1:
      return fs_bound_t1(params, B1, B2, mu);
    case Theorem::T2:
      if (!theorem_applicable(Theorem::T2, params, mu))
        throw std::domain_error("T2 requires real gamma > 0 and real mu");
      return fs_bound_t2(params, B1, B2, mu.real());
    case Theorem::T3:
      if (!theorem_applicable(Theorem::T3, params, mu))
        throw std::domain_error("T3 requires real mu");
      return fs_bound_t3(params, B1, B2, mu.real());
    case Theorem::Auto: {
      BoundReport best = fs_bound_t1(params, B1, B2, mu);
      for (Theorem cand : {Theorem::T2, Theorem::T3}) {
        if (!theorem_applicable(cand, params, mu)) continue;
        BoundReport r = select_bound(cand, params, B1, B2, mu);
        if (r.value < best.value) best = std::move(r);
      }
      return best;
    }
  }
  throw std::domain_error("unknown theorem selector");
}

VerificationRecord verify_config(const ClassParams& params,
                                 const MindaTarget& target, cplx mu,
                                 Theorem theorem, const OracleConfig& config) {
  params.validate();
  target.validate();
  if (!theorem_applicable(theorem, params, mu))
    throw std::domain_error("theorem " + theorem_label(theorem) +
                            " is not applicable to these gamma/mu");
  const MindaCoeffs mc = minda_coeffs(target);
  VerificationRecord rec;
  rec.target = target;
  rec.params = params;
  rec.mu = mu;
  rec.theorem = theorem_label(theorem);
  rec.bound = select_bound(theorem, params, mc.B1, mc.B2, mu);
  rec.oracle = oracle_max(OracleFunctional::fekete_szego(mu), params, mc.B1,
                          mc.B2, config);
  rec.slack = rec.bound.value - rec.oracle.max_value;
  rec.sound = rec.slack >= -kSoundnessTol;
  rec.sharpness_ratio = rec.oracle.max_value / rec.bound.value;
  return rec;
}

}  // namespace fsz
