#include "bandlimit/represent.hpp"

#include <cmath>
#include <utility>

#include <boost/math/interpolators/cubic_hermite.hpp>

namespace bandlimit {

DecayDeclaration decay_of_moment(const BandFunction& h, int power) {
  if (!h.envelope)
    throw DomainError("function '" + h.label + "' has no decay envelope");
  const Envelope& e = *h.envelope;
  DecayDeclaration d;
  d.exponent = 2.0 * e.exponent - power;
  d.coefficient = e.coefficient * e.coefficient;
  d.x0 = std::max(e.x0, 1.0);
  d.period = 1.0;
  if (!(d.exponent > 1.0))
    throw DomainError("function '" + h.label + "' decays too slowly for this moment");
  return d;
}

namespace {

QuadResult moment(const BandFunction& h, int power, double tol) {
  // |h| is even, so both moments are twice the half-line integral
  const auto decay = decay_of_moment(h, power);
  auto r = integrate_halfline(
      [&](double t) {
        const double v = h(t);
        return std::pow(t, power) * v * v;
      },
      0.0, +1, decay, 0.5 * tol);
  r.value *= 2.0;
  r.err_est *= 2.0;
  r.tail_bound *= 2.0;
  return r;
}

QuadResult peak_integral(const BandFunction& h, double tol) {
  const auto decay = decay_of_moment(h, 1);
  return integrate_halfline(
      [&](double t) {
        const double v = h(t);
        return t * v * v;
      },
      0.0, +1, decay, tol);
}

double partial(const BandFunction& h, double a, double b, double tol) {
  if (a == b) return 0.0;
  return integrate_finite(
             [&](double t) {
               const double v = h(t);
               return t * v * v;
             },
             a, b, tol)
      .value;
}

} // namespace

double h_to_f(const BandFunction& h, double x, double tol) {
  if (x < 0.0) {
    const auto decay = decay_of_moment(h, 1);
    return integrate_halfline(
               [&](double t) {
                 const double v = h(t);
                 return -t * v * v;
               },
               x, -1, decay, tol)
        .value;
  }
  return peak_integral(h, 0.5 * tol).value - partial(h, 0.0, x, 0.5 * tol);
}

Quotient quotient(const BandFunction& h, double tol) {
  Quotient q;
  q.numerator = moment(h, 2, tol);
  q.denominator = moment(h, 1, tol);
  if (!(q.denominator.value > 0.0))
    throw DomainError("quotient: h vanishes identically");
  q.value = 2.0 * q.numerator.value / q.denominator.value;
  return q;
}

double derivative_identity_check(const BandFunction& h, const BandFunction& f,
                                 const std::vector<double>& xs, double step) {
  double worst = 0.0;
  for (double x : xs) {
    const double fp = (f(x + step) - f(x - step)) / (2.0 * step);
    const double v = h(x);
    worst = std::max(worst, std::abs(fp + x * v * v));
  }
  return worst;
}

struct MonotoneProfile::Table {
  double half_range;
  boost::math::interpolators::cubic_hermite<std::vector<double>> spline;
};

MonotoneProfile::MonotoneProfile(BandFunction h, double tol)
    : h_(std::move(h)), tol_(tol) {
  peak_ = peak_integral(h_, tol_);
  mass_ = moment(h_, 2, tol_);
}

double MonotoneProfile::f(double x) const {
  const double ax = std::abs(x);
  if (table_ && ax <= table_->half_range) return table_->spline(ax);
  return h_to_f(h_, -ax, tol_);
}

void MonotoneProfile::tabulate(double half_range, int samples) {
  if (samples < 4 || !(half_range > 0.0))
    throw DomainError("tabulate: need >= 4 samples on a positive range");
  std::vector<double> xs(samples), ys(samples), ds(samples);
  const double step = half_range / (samples - 1);
  double acc = peak_.value;
  for (int k = 0; k < samples; ++k) {
    const double x = k * step;
    if (k > 0) acc -= partial(h_, x - step, x, tol_ / samples);
    const double v = h_(x);
    xs[k] = x;
    ys[k] = acc;
    ds[k] = -x * v * v;
  }
  table_ = std::make_shared<const Table>(
      Table{half_range, boost::math::interpolators::cubic_hermite<std::vector<double>>(
                            std::move(xs), std::move(ys), std::move(ds))});
}

BandFunction MonotoneProfile::as_band_function() const {
  BandFunction out;
  auto self = std::make_shared<const MonotoneProfile>(*this);
  out.eval = [self](double x) { return self->f(x); };
  out.type_bound = 2.0 * h_.type_bound;
  out.parity = Parity::even;
  out.label = "f[" + h_.label + "]";
  if (h_.envelope) {
    const auto d = decay_of_moment(h_, 1);
    out.envelope = Envelope{d.exponent - 1.0, d.coefficient / (d.exponent - 1.0), d.x0};
  }
  return out;
}

} // namespace bandlimit
