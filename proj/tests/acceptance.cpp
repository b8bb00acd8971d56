// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 1 if any check fails that is not a known reference-table
// discrepancy (see README, "Known discrepancies"). With --strict every FAIL
// line counts. --skip-long drops the d = 500 / 1000 runs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bandlimit/lids.hpp"
#include "bandlimit/monotone_l2.hpp"
#include "bandlimit/monotone_poly.hpp"
#include "bandlimit/represent.hpp"
#include "bandlimit/run.hpp"
#include "bandlimit/sharp_ineq.hpp"

using namespace bandlimit;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures; // unexpected
  std::vector<std::string> known;    // documented table discrepancies
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
  void known_mismatch(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      known.push_back(what);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

bool skip_long = false;
std::vector<double> all_bounds; // every bound computed here, for 7(vi)
double poly20 = 0.0, l2_300 = 0.0;

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Rational c = certify_d2_exact();
  const auto s = solve_poly(2, 1e-12);
  const double t = seconds_since(t0);
  o.require(c == Rational(49484, 38745), "certificate " + c.str());
  o.require(gcd(numerator(c), denominator(c)) == 1, "certificate not reduced");
  o.require(std::abs(to_double(c) - s.bound) <= 1e-8, "binary64 image vs solve_poly(2)");
  o.require(t < 10.0, "runtime");
  all_bounds.push_back(s.bound);
  o.detail << c.str() << " = " << fmt("%.12f", to_double(c)) << ", solve_poly(2) "
           << fmt("%.12f", s.bound) << ", " << fmt("%.2f s", t);
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (const auto& row : golden_poly_bounds()) {
    const auto s = solve_poly(row.d, 1e-12);
    const double dev = std::abs(s.bound - row.bound);
    worst = std::max(worst, dev);
    o.require(dev <= 1e-8, "d=" + std::to_string(row.d) + " " + fmt("%.12f", s.bound));
    all_bounds.push_back(s.bound);
    if (row.d == 20) poly20 = s.bound;
  }
  const double t = seconds_since(t0);
  o.require(t < 300.0, "runtime");
  o.detail << "9 degrees, max deviation " << fmt("%.2e", worst) << ", " << fmt("%.1f s", t);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (const auto& row : golden_l2_bounds()) {
    if (row.d > l2_desk_cap) continue;
    const auto s = solve_l2(row.d, 1e-10);
    const double dev = std::abs(s.bound - row.bound);
    worst = std::max(worst, dev);
    o.require(dev <= 1e-8, "d=" + std::to_string(row.d) + " " + fmt("%.12f", s.bound));
    all_bounds.push_back(s.bound);
    if (row.d == 300) l2_300 = s.bound;
  }
  const double t = seconds_since(t0);
  o.require(t < 900.0, "desk-scale runtime");
  o.detail << "desk scale max deviation " << fmt("%.2e", worst) << " (" << fmt("%.1f s", t) << ")";
  if (skip_long) {
    o.detail << "; d=1000 skipped";
    return o;
  }
  const auto t1 = std::chrono::steady_clock::now();
  const auto big = solve_l2(1000, 1e-10);
  all_bounds.push_back(big.bound);
  o.require(std::abs(big.lambda - 0.783002554) <= 1e-8, "lambda_1000 " + fmt("%.10f", big.lambda));
  o.require(std::abs(big.bound - 1.277135042) <= 1e-8, "bound_1000 " + fmt("%.10f", big.bound));
  o.detail << "; d=1000 (long-running, " << fmt("%.1f s", seconds_since(t1)) << ") lambda "
           << fmt("%.10f", big.lambda) << " bound " << fmt("%.10f", big.bound);
  return o;
}

Outcome criterion4() {
  Outcome o;
  // two reference values whose last digit does not survive recomputation
  const auto zeros_h0 = extremizer_zeros(make_h0(), 10, 1e-12);
  const auto& g0 = golden_h0_zeros();
  o.require(zeros_h0.complete(), "h0: fewer than ten zeros");
  double worst = 0;
  for (std::size_t i = 0; i < zeros_h0.zeros.size(); ++i) {
    const double dev = std::abs(zeros_h0.zeros[i] - g0[i]);
    worst = std::max(worst, dev);
    const std::string what = "h0 x" + std::to_string(i + 1) + " = " + fmt("%.8f", zeros_h0.zeros[i]) +
                             " vs " + fmt("%.4f", g0[i]);
    if (i == 9)
      o.known_mismatch(dev <= 5e-5, what);
    else
      o.require(dev <= 5e-5, what);
  }
  o.detail << "h0 max dev " << fmt("%.1e", worst);
  if (skip_long) {
    o.detail << "; L2 zeros at d=500/1000 skipped";
    return o;
  }
  const auto& gl = golden_l2_zeros();
  for (int d : {1000, 500}) {
    const auto s = solve_l2(d, 1e-10);
    const auto z = extremizer_zeros(s.h, 10, 1e-12);
    o.require(z.complete(), "L2 d=" + std::to_string(d) + ": fewer than ten zeros");
    double w = 0;
    for (std::size_t i = 0; i < z.zeros.size(); ++i) {
      const double target = (d == 500 && i == 9) ? 10.5240 : gl[i];
      const double dev = std::abs(z.zeros[i] - target);
      const std::string what = "L2 d=" + std::to_string(d) + " x" + std::to_string(i + 1) + " = " +
                               fmt("%.8f", z.zeros[i]) + " vs " + fmt("%.4f", target);
      if (d == 500 && i == 9) {
        o.known_mismatch(dev <= 5e-5, what);
      } else {
        w = std::max(w, dev);
        o.require(dev <= 5e-5, what);
      }
    }
    o.detail << "; L2 d=" << d << " max dev " << fmt("%.1e", w);
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const double r = bessel_lid_ratio(0.5, 1e-11).value;
  o.require(std::abs(r - 4.0 / 3.0) <= 1e-8, "ratio(1/2) " + fmt("%.12f", r));
  const auto m = minimize_alpha(0.3, 2.0, 1e-4);
  o.require(std::abs(m.alpha - 0.787) <= 1e-3, "alpha* " + fmt("%.6f", m.alpha));
  o.require(std::abs(m.ratio - 1.284) <= 1e-3, "ratio* " + fmt("%.6f", m.ratio));
  o.require(!m.at_boundary, "minimum on the boundary");
  all_bounds.push_back(r);
  all_bounds.push_back(m.ratio);
  o.detail << "ratio(1/2) " << fmt("%.12f", r) << ", alpha* " << fmt("%.6f", m.alpha) << ", ratio* "
           << fmt("%.9f", m.ratio);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const double c1 = sharp_constant(WeightPoly({1.0}), 1e-13);
  const double ca = sharp_constant(WeightPoly({1.0, pi * pi}), 1e-12);
  const double cb = sharp_constant(WeightPoly({1.0, 1.0}), 1e-12);
  o.require(std::abs(c1 - 1.0) <= 1e-12, "P=1 " + fmt("%.15f", c1));
  o.require(std::abs(ca - pi / std::atan(pi)) <= 1e-10, "P=1+pi^2x " + fmt("%.15f", ca));
  o.require(std::abs(cb - 4.0 / pi) <= 1e-10, "P=1+x " + fmt("%.15f", cb));
  double worst = 0;
  for (double a : {1e-8, 1.0 / (4 * pi * pi), 0.9 / (pi * pi)}) {
    const double closed = log_corollary_constant(a);
    const double quad = sharp_constant(WeightPoly({1.0, -a * pi * pi}), 1e-13);
    worst = std::max(worst, std::abs(closed - quad));
    o.require(std::abs(closed - quad) <= 1e-10, "log corollary a=" + fmt("%.3e", a));
  }
  o.detail << "|C-1| " << fmt("%.1e", std::abs(c1 - 1)) << ", |C-pi/atan pi| "
           << fmt("%.1e", std::abs(ca - pi / std::atan(pi))) << ", |C-4/pi| "
           << fmt("%.1e", std::abs(cb - 4 / pi)) << ", log corollary " << fmt("%.1e", worst);
  return o;
}

Outcome criterion7() {
  Outcome o;
  // (i)
  const auto orth = check_orthonormal(21, 1e-9);
  o.require(orth.fourier_deviation <= 1e-8, "(i) Fourier path " + fmt("%.1e", orth.fourier_deviation));
  o.require(orth.time_deviation <= 1e-8, "(i) time path " + fmt("%.1e", orth.time_deviation));

  // (ii)
  const WeightPoly one({1.0}), lin({1.0, 1.0}), pi2({1.0, pi * pi}), quartic({1.0, 0.5, 0.25, 0.1, 0.05});
  const WeightPoly sq({1.002001, -2.002, 1.0});
  std::vector<std::pair<const WeightPoly*, PWFunction>> bridge{
      {&one, PWFunction::from_polynomial(PolyCoeffs{1.0})},
      {&lin, PWFunction::from_polynomial(PolyCoeffs{0.25, 0.0, -1.0}).normalized()},
      {&pi2, PWFunction::from_polynomial(PolyCoeffs{0.25, 0.0, -1.45, 0.0, 1.8}).normalized()}};
  for (std::uint64_t s = 1; s <= 5; ++s) bridge.emplace_back(&quartic, random_profile(s, 4));
  double bridge_worst = 0;
  for (const auto& [P, g] : bridge)
    bridge_worst = std::max(bridge_worst, std::abs(functional(*P, g, 1e-12) - time_side_functional(*P, g, 1e-10)));
  o.require(bridge_worst <= 1e-7, "(ii) Plancherel bridge " + fmt("%.1e", bridge_worst));

  // (iii)
  double margin = 1e300;
  for (const WeightPoly* P : {&lin, &pi2, &sq}) {
    const double C = sharp_constant(*P, 1e-12);
    for (std::uint64_t s = 1; s <= 500; ++s)
      margin = std::min(margin, functional(*P, random_profile(s), 1e-12) - C);
  }
  o.require(margin >= -1e-9, "(iii) worst margin " + fmt("%.3e", margin));

  // (iv)
  double gap = 0;
  for (const WeightPoly* P : {&one, &lin, &pi2, &sq})
    gap = std::max(gap, std::abs(functional(*P, extremal_profile(*P, 1e-12), 1e-12) - sharp_constant(*P, 1e-12)));
  o.require(gap <= 1e-8, "(iv) equality gap " + fmt("%.1e", gap));

  // (v)
  const double resid = derivative_identity_check(make_h0(), make_f0(), {0.5, 1.0, 3.25});
  o.require(resid <= 1e-9, "(v) derivative identity " + fmt("%.1e", resid));

  // (vi)
  double lowest = 1e300;
  for (double b : all_bounds) lowest = std::min(lowest, b);
  o.require(!all_bounds.empty() && lowest > 1.0, "(vi) a bound below 1");
  const double agree = std::abs(l2_300 - poly20);
  o.require(poly20 > 0 && l2_300 > 0 && agree <= 2e-8, "(vi) pipelines differ by " + fmt("%.2e", agree));

  o.detail << "orth " << fmt("%.1e", orth.max_deviation()) << ", bridge " << fmt("%.1e", bridge_worst)
           << ", 1500 draws min margin " << fmt("%.3f", margin) << ", equality gap " << fmt("%.1e", gap)
           << ", identity " << fmt("%.1e", resid) << ", min bound " << fmt("%.6f", lowest)
           << ", |L2(300)-poly(20)| " << fmt("%.1e", agree);
  return o;
}

} // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--strict") == 0) strict = true;
    else if (std::strcmp(argv[i], "--skip-long") == 0) skip_long = true;
    else {
      std::fprintf(stderr, "usage: %s [--strict] [--skip-long]\n", argv[0]);
      return 2;
    }
  }

  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"exact d=2 certificate", criterion1},
      {"polynomial bounds table", criterion2},
      {"L2 bounds table", criterion3},
      {"zeros table", criterion4},
      {"lid pipeline", criterion5},
      {"sharp constants", criterion6},
      {"property suites", criterion7},
  };

  int unexpected = 0, known = 0;
  for (std::size_t k = 0; k < std::size(criteria); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %s: %s | %s\n", k + 1, criteria[k].first, o.pass ? "PASS" : "FAIL",
                o.detail.str().c_str());
    for (const auto& f : o.failures) std::printf("    failed: %s\n", f.c_str());
    for (const auto& f : o.known) std::printf("    failed (known table discrepancy): %s\n", f.c_str());
    std::fflush(stdout);
    unexpected += static_cast<int>(o.failures.size());
    known += static_cast<int>(o.known.size());
  }
  std::printf("unexpected failures: %d, known table discrepancies: %d\n", unexpected, known);
  if (unexpected > 0) return 1;
  return (strict && known > 0) ? 1 : 0;
}
