// Acceptance suite: every criterion is pinned here with its stated
// tolerance and prints exactly one PASS/FAIL line.  Run without arguments
// to execute all criteria, or pass criterion ids (1, 2a, 2b, 2c, 3, ...)
// to run a subset.  Exit code 0 iff every selected criterion passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fsz/bounds.hpp"
#include "fsz/minda.hpp"
#include "fsz/oracle.hpp"
#include "fsz/series.hpp"
#include "fsz/sweep.hpp"
#include "fsz/text_format.hpp"
#include "test_util.hpp"

namespace {

using fsz::ClassParams;
using fsz::cplx;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

struct Checker {
  std::ostringstream log;
  int fails = 0;

  void check(bool cond, const std::string& msg) {
    if (!cond) {
      ++fails;
      if (fails <= 8) log << "    check failed: " << msg << "\n";
    }
  }
  void note(const std::string& msg) { log << "    " << msg << "\n"; }
  bool ok() const { return fails == 0; }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- criterion 1: corollary cross-check ----------------------------------

bool criterion_1(Checker& c) {
  fsz::test::Rng rng(101);
  const auto start = Clock::now();
  for (int i = 0; i < 500; ++i) {
    const double A = rng.uniform(-0.8, 1.0);
    const double B = rng.uniform(-1.0, A - 0.05);
    const double d = A - B;
    const cplx gc = rng.on_annulus(0.1, 3.0);
    const double gr = rng.uniform(0.1, 3.0);
    const cplx mc = rng.in_disk(4.0);
    const double mr = rng.uniform(-4.0, 4.0);

    struct Case {
      fsz::Corollary which;
      fsz::CorollaryVariant variant;
      double A, B, b1, b2, lambda;
      cplx gamma, mu;
    };
    const std::array<Case, 12> cases{{
        {fsz::Corollary::C1, fsz::CorollaryVariant::complex_mu, A, B, d, -B * d, 0.0, gc, mc},
        {fsz::Corollary::C1, fsz::CorollaryVariant::real_gamma, A, B, d, -B * d, 0.0, cplx(gr, 0), cplx(mr, 0)},
        {fsz::Corollary::C1, fsz::CorollaryVariant::complex_gamma_real_mu, A, B, d, -B * d, 0.0, gc, cplx(mr, 0)},
        {fsz::Corollary::C2, fsz::CorollaryVariant::complex_mu, A, B, d, -B * d, 1.0, gc, mc},
        {fsz::Corollary::C2, fsz::CorollaryVariant::real_gamma, A, B, d, -B * d, 1.0, cplx(gr, 0), cplx(mr, 0)},
        {fsz::Corollary::C2, fsz::CorollaryVariant::complex_gamma_real_mu, A, B, d, -B * d, 1.0, gc, cplx(mr, 0)},
        {fsz::Corollary::C3, fsz::CorollaryVariant::complex_mu, 0, 0, 2, 2, 0.0, gc, mc},
        {fsz::Corollary::C3, fsz::CorollaryVariant::real_gamma, 0, 0, 2, 2, 0.0, cplx(gr, 0), cplx(mr, 0)},
        {fsz::Corollary::C3, fsz::CorollaryVariant::complex_gamma_real_mu, 0, 0, 2, 2, 0.0, gc, cplx(mr, 0)},
        {fsz::Corollary::C4, fsz::CorollaryVariant::complex_mu, 0, 0, 2, 2, 1.0, gc, mc},
        {fsz::Corollary::C4, fsz::CorollaryVariant::real_gamma, 0, 0, 2, 2, 1.0, cplx(gr, 0), cplx(mr, 0)},
        {fsz::Corollary::C4, fsz::CorollaryVariant::complex_gamma_real_mu, 0, 0, 2, 2, 1.0, gc, cplx(mr, 0)},
    }};
    for (const auto& k : cases) {
      const double cor =
          fsz::corollary_bound(k.which, k.variant, k.A, k.B, k.gamma, k.mu)
              .value;
      const ClassParams params{k.lambda, k.gamma};
      double thm = 0.0;
      switch (k.variant) {
        case fsz::CorollaryVariant::complex_mu:
          thm = fsz::fs_bound_t1(params, k.b1, k.b2, k.mu).value;
          break;
        case fsz::CorollaryVariant::real_gamma:
          thm = fsz::fs_bound_t2(params, k.b1, k.b2, k.mu.real()).value;
          break;
        case fsz::CorollaryVariant::complex_gamma_real_mu:
          thm = fsz::fs_bound_t3(params, k.b1, k.b2, k.mu.real()).value;
          break;
      }
      c.check(std::abs(cor - thm) <= 1e-12,
              "corollary/theorem mismatch: " + fsz::fmt_g15(cor) + " vs " +
                  fsz::fmt_g15(thm));
    }
  }
  const double elapsed = seconds_since(start);
  c.check(elapsed < 1.0, "runtime " + fsz::fmt_g15(elapsed) + "s >= 1s");
  return c.ok();
}

// --- criterion 2: internal-consistency identities -------------------------

bool criterion_2a(Checker& c) {
  fsz::test::Rng rng(202);
  const auto start = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    const ClassParams p = rng.valid_params();
    const double B1 = rng.uniform(0.05, 3.0);
    const double B2 = rng.uniform(-3.0, 3.0);
    const double t1 = fsz::fs_bound_t1(p, B1, B2, cplx(0, 0)).value;
    const double a3 = fsz::a3_bound(p, B1, B2).value;
    c.check(std::abs(t1 - a3) <= 1e-12, "t1(mu=0) != a3 bound");
  }
  c.check(seconds_since(start) < 1.0, "runtime >= 1s");
  return c.ok();
}

bool criterion_2b(Checker& c) {
  // As stated: fs_bound_t2 == fs_bound_t1 to 1e-12 for real gamma > 0 with
  // |B2| >= B1 over random draws.  The identity is false in general: the
  // real-parameter evaluator bounds |t - (1-mu)G| by |t| + |1-mu|G, which
  // is tight iff B2 (1-mu) <= 0, so the two evaluators differ wherever
  // B2 (1-mu) > 0.  The test is kept as stated; the failure is expected
  // and the counterexamples are reported.
  fsz::test::Rng rng(203);
  const auto start = Clock::now();
  int violations = 0;
  std::string first;
  for (int i = 0; i < 1000; ++i) {
    ClassParams p = rng.valid_params();
    p.gamma = cplx(rng.uniform(0.1, 3.0), 0.0);
    const double B1 = rng.uniform(0.1, 2.0);
    const double B2 = (rng.uniform(0.0, 1.0) < 0.5 ? 1.0 : -1.0) *
                      rng.uniform(1.0, 3.0) * B1;
    const double mu = rng.uniform(-3.0, 3.0);
    const double t2 = fsz::fs_bound_t2(p, B1, B2, mu).value;
    const double t1 = fsz::fs_bound_t1(p, B1, B2, cplx(mu, 0)).value;
    if (std::abs(t2 - t1) > 1e-12) {
      ++violations;
      if (first.empty())
        first = "lambda=" + fsz::fmt_g15(p.lambda) +
                " gamma=" + fsz::fmt_g15(p.gamma.real()) +
                " B1=" + fsz::fmt_g15(B1) + " B2=" + fsz::fmt_g15(B2) +
                " mu=" + fsz::fmt_g15(mu) + ": T1=" + fsz::fmt_g15(t1) +
                " T2=" + fsz::fmt_g15(t2);
    }
  }
  c.check(violations == 0,
          std::to_string(violations) + "/1000 draws violate the identity");
  if (violations > 0) {
    c.note("first counterexample: " + first);
    c.note("T2 >= T1 always holds; equality requires B2*(1-mu) <= 0.");
    c.note("fixed point of reference: lambda=0, gamma=1, (B1,B2)=(2,2), "
           "mu=0 gives T1=4 (pinned by criteria 2a/4) and T2=5 (pinned by "
           "criterion 1 via the half-plane corollary), so this identity "
           "contradicts the other criteria and cannot hold as stated.");
  }
  c.check(seconds_since(start) < 1.0, "runtime >= 1s");
  return c.ok();
}

bool criterion_2c(Checker& c) {
  fsz::test::Rng rng(204);
  const auto start = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    const ClassParams p = rng.valid_params();
    const double B1 = rng.uniform(0.05, 3.0);
    const double B2 = rng.uniform(-3.0, 3.0);
    const double mu = rng.uniform(-4.0, 4.0);
    const double t3 = fsz::fs_bound_t3(p, B1, B2, mu).value;
    const double t1 = fsz::fs_bound_t1(p, B1, B2, cplx(mu, 0)).value;
    c.check(t3 >= t1 - 1e-12, "T3 < T1 at a real-mu draw");
  }
  c.check(seconds_since(start) < 1.0, "runtime >= 1s");
  return c.ok();
}

// --- criterion 3: oracle soundness sweep -----------------------------------

bool criterion_3(Checker& c) {
  const auto start = Clock::now();
  const std::string out = "acceptance_verify_report.csv";
  const std::string cmd = std::string(FSZEGO_BIN) + " verify " +
                          FSZEGO_CONFIG_DIR + "/default_sweep.json --output " +
                          out + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    c.check(false, "cannot launch the verify subprocess");
    return false;
  }
  std::string stdout_text;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    stdout_text.append(buf.data(), n);
  const int status = WEXITSTATUS(pclose(pipe));
  c.check(status == 0, "verify exited with code " + std::to_string(status));

  std::ifstream in(out);
  c.check(in.good(), "report file missing");
  std::string line;
  std::getline(in, line);
  c.check(line == fsz::kVerifyCsvHeader, "unexpected CSV header");
  std::size_t rows = 0, bad = 0;
  double min_slack = 1e300;
  while (std::getline(in, line)) {
    ++rows;
    // slack is column 12 of 14.
    std::size_t pos = 0;
    for (int k = 0; k < 11; ++k) pos = line.find(',', pos) + 1;
    const double slack = std::stod(line.substr(pos));
    min_slack = std::min(min_slack, slack);
    if (slack < -1e-9) ++bad;
  }
  c.check(rows >= 1000, "only " + std::to_string(rows) + " rows");
  c.check(bad == 0, std::to_string(bad) + " rows with slack < -1e-9");
  c.note("rows=" + std::to_string(rows) +
         " min_slack=" + fsz::fmt_g15(min_slack));
  const double elapsed = seconds_since(start);
  c.note("sweep time " + fsz::fmt_g15(elapsed) + "s");
  c.check(elapsed < 300.0, "runtime >= 5 min");
  return c.ok();
}

// --- criterion 4: sharpness witness ----------------------------------------

bool criterion_4(Checker& c) {
  const ClassParams p{0.0, cplx(1, 0)};
  const auto rec =
      fsz::verify_config(p, fsz::MindaTarget::half_plane(), cplx(1, 0),
                         fsz::Theorem::T1, fsz::OracleConfig{});
  c.check(rec.bound.value == 1.0, "bound at mu=1 is not 1");
  c.check(rec.sharpness_ratio >= 0.999,
          "sharpness ratio " + fsz::fmt_g15(rec.sharpness_ratio) + " < 0.999");
  c.check(std::abs(rec.oracle.witness.c1) <= 1e-9, "witness c1 != 0");
  c.check(std::abs(std::abs(rec.oracle.witness.c2) - 1.0) <= 1e-9,
          "witness |c2| != 1");
  c.check(std::abs(rec.oracle.induced_d2 + rec.oracle.witness.c2) <= 1e-9,
          "induced d2 != -c2");

  const double a3 = fsz::a3_bound(p, 2.0, 2.0).value;
  const double t1 = fsz::fs_bound_t1(p, 2.0, 2.0, cplx(0, 0)).value;
  c.check(a3 == 4.0, "a3 bound != 4");
  c.check(t1 == 4.0, "t1(mu=0) != 4");
  c.check(a3 == t1, "a3 and t1(mu=0) disagree");
  return c.ok();
}

// --- criterion 5: special functions ----------------------------------------

double simpson_elliptic(double m, int intervals) {
  auto f = [m](double th) {
    const double s = std::sin(th);
    return 1.0 / std::sqrt(1.0 - m * m * s * s);
  };
  const double h = (kPi / 2.0) / intervals;
  double acc = f(0.0) + f(kPi / 2.0);
  for (int i = 1; i < intervals; ++i)
    acc += f(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

bool criterion_5(Checker& c) {
  c.check(std::abs(fsz::elliptic_k(0.0) - kPi / 2.0) <= 1e-12,
          "K(0) != pi/2");
  for (int i = 1; i <= 9; ++i) {
    const double m = 0.1 * i;
    const double agm = fsz::elliptic_k(m);
    const double quad = simpson_elliptic(m, 100000);
    c.check(std::abs(agm - quad) <= 1e-10,
            "K(" + fsz::fmt_g15(m) + ") AGM vs quadrature differ by " +
                fsz::fmt_g15(std::abs(agm - quad)));
  }
  const auto q0 = fsz::qk_coeffs(0.0);
  c.check(std::abs(q0.B1 - 2.0) <= 1e-12 && std::abs(q0.B2 - 2.0) <= 1e-12,
          "qk(0) != (2,2)");
  const auto hp = fsz::minda_coeffs(fsz::MindaTarget::half_plane());
  c.check(q0.B1 == hp.B1 || std::abs(q0.B1 - hp.B1) <= 1e-12,
          "qk(0) does not match the half-plane target");
  const auto q1 = fsz::qk_coeffs(1.0);
  c.check(std::abs(q1.B1 - 8.0 / (kPi * kPi)) <= 1e-12, "qk(1).Q1 != 8/pi^2");
  c.check(std::abs(q1.B2 - 16.0 / (3.0 * kPi * kPi)) <= 1e-12,
          "qk(1).Q2 != 16/(3 pi^2)");
  return c.ok();
}

// --- criterion 6: series layer ---------------------------------------------

bool criterion_6(Checker& c) {
  fsz::test::Rng rng(606);
  for (int i = 0; i < 1000; ++i) {
    fsz::TruncatedSeries f(3);
    f.set_coeff(1, cplx(1, 0));
    f.set_coeff(2, rng.in_disk(2.0));
    f.set_coeff(3, rng.in_disk(2.0));
    const auto round = fsz::series_compose(fsz::series_reversion(f), f);
    const double residual =
        std::max({std::abs(round.coeff(0)),
                  std::abs(round.coeff(1) - cplx(1, 0)),
                  std::abs(round.coeff(2)), std::abs(round.coeff(3))});
    c.check(residual <= 1e-12, "reversion round-trip residual " +
                                   fsz::fmt_g15(residual));
  }

  fsz::TruncatedSeries koebe(3);
  koebe.set_coeff(1, cplx(1, 0));
  koebe.set_coeff(2, cplx(1, 0));
  koebe.set_coeff(3, cplx(1, 0));
  const auto img = fsz::operator_expand(koebe, ClassParams{0.0, cplx(1, 0)});
  c.check(img.coeff(0) == cplx(1, 0) && img.coeff(1) == cplx(1, 0) &&
              img.coeff(2) == cplx(1, 0),
          "operator on the truncated Koebe-type series is not 1+z+z^2");

  for (int i = 0; i < 300; ++i) {
    const cplx a2 = rng.in_disk(1.5);
    const cplx a3 = rng.in_disk(1.5);
    const ClassParams p = rng.valid_params();
    fsz::TruncatedSeries f(3);
    f.set_coeff(1, cplx(1, 0));
    f.set_coeff(2, a2);
    f.set_coeff(3, a3);
    const auto out = fsz::operator_expand(fsz::series_reversion(f), p);
    const double lam = p.lambda;
    const cplx want1 = -(1.0 + lam) * a2 / p.gamma;
    const cplx want2 = (-2.0 * (1.0 + 2.0 * lam) * a3 +
                        (3.0 + 6.0 * lam - lam * lam) * a2 * a2) /
                       p.gamma;
    c.check(std::abs(out.coeff(1) - want1) <= 1e-10,
            "inverse-side linear coefficient mismatch");
    c.check(std::abs(out.coeff(2) - want2) <= 1e-10,
            "inverse-side quadratic coefficient mismatch");
  }
  return c.ok();
}

// --- criterion 7: coefficient-inequality property suite ---------------------

bool criterion_7(Checker& c) {
  fsz::test::Rng rng(707);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto pair = rng.feasible_pair();
    const cplx s = rng.in_disk(10.0);
    const double lhs = std::abs(pair.c2 - s * pair.c1 * pair.c1);
    const double rhs = fsz::lemma_rhs(s, std::abs(pair.c1));
    if (lhs > rhs + 1e-12) ++violations;
  }
  c.check(violations == 0,
          std::to_string(violations) + " violations of the coefficient bound");
  return c.ok();
}

// --- criterion 8: piecewise continuity --------------------------------------

bool criterion_8(Checker& c) {
  fsz::test::Rng rng(808);
  for (int i = 0; i < 200; ++i) {
    const double lam = rng.uniform(0.0, 1.0);
    const double p = 1.0 + lam, q = 1.0 + 2.0 * lam;
    const double g = rng.uniform(0.1, 3.0);
    const double B1 = rng.uniform(0.1, 2.5);

    {
      const double B2 = rng.uniform(-1.9 * B1, 1.9 * B1);
      const double t = B2 / B1;
      const double G = 4.0 * B1 * g * q / (p * p);
      for (double sgn : {1.0, -1.0}) {
        const double mu_star = 1.0 - (t - sgn * (2.0 - std::abs(t))) / G;
        const double L = std::abs(t - (1.0 - mu_star) * G) + std::abs(t);
        const double low = B1 * g / (2.0 * q);
        const double high = B1 * g / (4.0 * q) * L;
        c.check(std::abs(low - high) <= 1e-12, "T1 branch values at L=2");
      }
    }
    {
      const double B2 = rng.uniform(-0.99 * B1, 0.99 * B1);
      const ClassParams params{lam, cplx(g, 0)};
      const double F = p * p * (B1 - std::abs(B2)) / (2.0 * g * B1 * B1 * q);
      const double mid = g * B1 / (2.0 * q);
      for (double mu_star : {1.0 - F, 1.0 + F}) {
        const double outer = g * std::abs(B2) / (2.0 * q) +
                             std::abs(mu_star - 1.0) * g * g * B1 * B1 /
                                 (p * p);
        c.check(std::abs(outer - mid) <= 1e-12, "T2 branch values at 1 -+ F");
        c.check(std::abs(fsz::fs_bound_t2(params, B1, B2, mu_star).value -
                         mid) <= 1e-12,
                "T2 evaluator at 1 -+ F");
      }
    }
    {
      const cplx gamma = rng.on_annulus(0.1, 3.0);
      const double B2 = rng.uniform(-3.0, 3.0);
      const double ag = std::abs(gamma);
      const double theta = std::arg(gamma);
      const double sa = std::abs(std::sin(theta));
      const double rek1 =
          B2 * p * p * std::cos(theta) / (4.0 * B1 * B1 * ag * q);
      const double N = p * p * (std::abs(B2) * (1.0 + sa) - 2.0 * B1) /
                       (4.0 * B1 * B1 * ag * q);
      const double sq = ag * ag * B1 * B1 / (p * p);
      const double tail = ag * std::abs(B2) * (1.0 + sa) / (4.0 * q);
      const double mid = ag * B1 / (2.0 * q);
      if (std::abs(B2) * (1.0 + sa) / (2.0 * B1) >= 1.0) {
        const double mu_star = 1.0 - rek1;
        const double first = sq * (1.0 - mu_star - rek1) + tail;
        const double third = tail - sq * (1.0 - mu_star - rek1);
        c.check(std::abs(first - third) <= 1e-12, "T3 case-1 split");
      } else {
        const double first = sq * (-N) + tail;
        const double third = tail - sq * N;
        c.check(std::abs(first - mid) <= 1e-12, "T3 value at 1-Rek1+N");
        c.check(std::abs(third - mid) <= 1e-12, "T3 value at 1-Rek1-N");
      }
    }
  }
  return c.ok();
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<bool(Checker&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"1", "corollary transcriptions match the theorem evaluators",
       criterion_1},
      {"2a", "fs_bound_t1 at mu=0 equals the |a3| bound", criterion_2a},
      {"2b", "fs_bound_t2 equals fs_bound_t1 for real gamma>0, |B2|>=B1",
       criterion_2b},
      {"2c", "fs_bound_t3 dominates fs_bound_t1 for real mu", criterion_2c},
      {"3", "standard sweep is sound (no oracle exceeds its bound)",
       criterion_3},
      {"4", "sharpness witness at the half-plane mu=1 configuration",
       criterion_4},
      {"5", "elliptic integral and conic-domain coefficients", criterion_5},
      {"6", "series layer: reversion, operator, inverse-side expansion",
       criterion_6},
      {"7", "coefficient inequality over sampled feasible pairs",
       criterion_7},
      {"8", "piecewise continuity at every branch boundary", criterion_8},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> selected(argv + 1, argv + argc);
  int failures = 0;
  bool ran_any = false;
  for (const auto& crit : criteria()) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), crit.id) ==
            selected.end())
      continue;
    ran_any = true;
    Checker checker;
    bool ok = false;
    try {
      ok = crit.run(checker);
    } catch (const std::exception& e) {
      checker.log << "    exception: " << e.what() << "\n";
    }
    std::cout << "criterion " << crit.id << " (" << crit.title
              << "): " << (ok ? "PASS" : "FAIL") << "\n";
    const std::string detail = checker.log.str();
    if (!detail.empty()) std::cout << detail;
    if (!ok) ++failures;
  }
  if (!ran_any) {
    std::cerr << "unknown criterion id\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
