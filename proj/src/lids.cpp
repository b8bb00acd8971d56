#include "bandlimit/lids.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "bandlimit/parallel.hpp"

namespace bandlimit {

SoninLid fejer_lid() {
  SoninLid lid;
  lid.g = make_sinc();
  lid.g_prime = BandFunction{sinc_pw_prime, pi, Parity::odd, "sinc'", Envelope{1.0, 1.0 / pi + 1.0 / (pi * pi), 1.0}};
  lid.C = pi * pi;
  lid.B = 2.0;
  lid.label = "fejer";
  return lid;
}

SoninLid bessel_lid(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("bessel_lid: need alpha > 0");
  SoninLid lid;
  lid.g = make_bessel_g(alpha);
  const auto up = make_bessel_g(alpha + 1.0);
  // |g'| = pi^2 |x| |g_{a+1}|
  lid.g_prime = BandFunction{[alpha](double x) { return bessel_g_prime(alpha, x); }, pi,
                             Parity::odd, "g_alpha'",
                             Envelope{alpha + 0.5, pi * pi * up.envelope->coefficient,
                                      up.envelope->x0}};
  lid.C = pi * pi;
  lid.B = 2.0 * alpha + 1.0;
  lid.label = "bessel(" + std::to_string(alpha) + ")";
  return lid;
}

double lid_eval(const SoninLid& lid, double x) {
  const double g = lid.g(x);
  const double gp = lid.g_prime(x);
  return g * g + gp * gp / lid.C;
}

BandFunction lid_function(const SoninLid& lid) {
  BandFunction f;
  f.eval = [lid](double x) { return lid_eval(lid, x); };
  f.type_bound = 2.0 * lid.g.type_bound;
  f.parity = Parity::even;
  f.label = "lid[" + lid.label + "]";
  if (lid.g.envelope && lid.g_prime.envelope) {
    const auto& a = *lid.g.envelope;
    const auto& b = *lid.g_prime.envelope;
    const double p = std::min(a.exponent, b.exponent);
    f.envelope = Envelope{2.0 * p, a.coefficient * a.coefficient + b.coefficient * b.coefficient / lid.C,
                          std::max(a.x0, b.x0)};
  }
  return f;
}

double lid_monotone_check(const SoninLid& lid, const std::vector<double>& grid) {
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < grid.size(); ++k)
    worst = std::max(worst, lid_eval(lid, grid[k + 1]) - lid_eval(lid, grid[k]));
  return grid.size() < 2 ? 0.0 : worst;
}

LidRatio bessel_lid_ratio(double alpha, double tol) {
  const auto lid = bessel_lid(alpha);
  const auto f = lid_function(lid);
  const auto& e = *f.envelope;
  DecayDeclaration decay{e.exponent, e.coefficient, e.x0, 1.0};
  LidRatio r;
  r.integral = integrate_line(f.eval, decay, tol * 0.1);
  r.peak = lid_eval(lid, 0.0);
  r.value = r.integral.value / r.peak;
  return r;
}

double bessel_lid_ratio_closed(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("bessel_lid_ratio: need alpha > 0");
  const double lg = std::lgamma(alpha + 1.0) - std::lgamma(alpha + 0.5);
  const double pre = 2.0 * std::exp(2.0 * lg) / pi;
  return pre * (boost::math::beta(0.5, 2.0 * alpha) + boost::math::beta(1.5, 2.0 * alpha));
}

AlphaMinimum minimize_alpha(double lo, double hi, double tol, double quad_tol) {
  if (!(lo > 0.0) || !(hi >= lo)) throw DomainError("minimize_alpha: need 0 < lo <= hi");
  if (!(tol > 0.0)) throw DomainError("minimize_alpha: need tol > 0");
  AlphaMinimum out;
  auto ratio = [&](double a) {
    ++out.evaluations;
    return bessel_lid_ratio(a, quad_tol).value;
  };
  if (hi - lo <= tol) {
    out.alpha = 0.5 * (lo + hi);
    out.ratio = ratio(out.alpha);
    return out;
  }

  constexpr int scan = 50;
  std::vector<double> xs(scan), ys(scan);
  for (int k = 0; k < scan; ++k) xs[k] = lo + (hi - lo) * k / (scan - 1);
  parallel_for(scan, [&](std::size_t k) { ys[k] = bessel_lid_ratio(xs[k], quad_tol).value; });
  out.evaluations += scan;
  const int best = static_cast<int>(std::min_element(ys.begin(), ys.end()) - ys.begin());
  // unimodal: nonincreasing up to the best sample, nondecreasing after it
  const double slack = 10.0 * quad_tol;
  for (int k = 0; k + 1 < scan; ++k) {
    if (k < best && ys[k + 1] > ys[k] + slack) out.unimodal = false;
    if (k >= best && ys[k + 1] < ys[k] - slack) out.unimodal = false;
  }

  double a = xs[std::max(best - 1, 0)];
  double b = xs[std::min(best + 1, scan - 1)];
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = ratio(c), fd = ratio(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = ratio(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = ratio(d);
    }
  }
  out.alpha = 0.5 * (a + b);
  out.ratio = ratio(out.alpha);
  // A minimum within tol of an end of [lo, hi] is reported at that end.
  if (best == 0 || best == scan - 1) {
    const double edge = best == 0 ? lo : hi;
    const double fe = ys[best];
    if (std::abs(out.alpha - edge) <= 2.0 * tol || fe <= out.ratio) {
      out.alpha = edge;
      out.ratio = fe;
      out.at_boundary = true;
    }
  }
  return out;
}

} // namespace bandlimit
