#include "bandlimit/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bandlimit/quad.hpp"

namespace bandlimit {
namespace {

using LComplex = std::complex<long double>;

constexpr long double pi_l = std::numbers::pi_v<long double>;

// Taylor coefficients (in z) of sum_j poly_j(z) * trig_j(freq_j z), divided
// by denom * z^pole. Coefficients below z^pole must cancel exactly; the
// check runs once, in exact arithmetic.
struct TrigTerm {
  Polynomial<Rational> poly;
  enum { one, sine, cosine } kind;
  long freq;
};

std::vector<double> removable_series(const std::vector<TrigTerm>& terms,
                                     int pole, long denom, int order) {
  const int n_max = pole + order;
  std::vector<Rational> c(n_max + 1, Rational(0));
  for (const auto& t : terms) {
    std::vector<Rational> trig(n_max + 1, Rational(0));
    if (t.kind == TrigTerm::one) {
      trig[0] = 1;
    } else {
      Rational fact = 1;
      Rational power = 1;
      for (int m = 0; m <= n_max; ++m) {
        if (m > 0) {
          fact *= m;
          power *= t.freq;
        }
        const int phase = t.kind == TrigTerm::sine ? m - 1 : m;
        if (phase < 0 || phase % 2 != 0) continue;
        Rational v = power / fact;
        if ((phase / 2) % 2 == 1) v = -v;
        trig[m] = v;
      }
    }
    const auto& pc = t.poly.coeffs();
    for (std::size_t i = 0; i < pc.size(); ++i)
      for (int m = 0; m + static_cast<int>(i) <= n_max; ++m)
        c[i + m] += pc[i] * trig[m];
  }
  for (int n = 0; n < pole; ++n)
    if (c[n] != 0) throw std::logic_error("removable_series: pole does not cancel");
  std::vector<double> out(order + 1);
  for (int m = 0; m <= order; ++m) out[m] = to_double(c[pole + m] / Rational(denom));
  return out;
}

double horner(const std::vector<double>& c, double z) {
  long double acc = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return static_cast<double>(acc);
}

const std::vector<double>& h0_series_coeffs() {
  static const std::vector<double> c = [] {
    using P = Polynomial<Rational>;
    return removable_series({{P{108, 0, -25}, TrigTerm::sine, 1},
                             {P{0, -108, 0, -11}, TrigTerm::cosine, 1}},
                            5, 40, 40);
  }();
  return c;
}

const std::vector<double>& f0_series_coeffs() {
  static const std::vector<double> c = [] {
    using P = Polynomial<Rational>;
    return removable_series({{P{5832, 0, 4176, 0, 3001, 0, 242}, TrigTerm::one, 0},
                             {P{0, -11664, 0, -576, 0, -242}, TrigTerm::sine, 2},
                             {P{-5832, 0, 7488, 0, 1463}, TrigTerm::cosine, 2}},
                            8, 12800, 60);
  }();
  return c;
}

// Power series of J_nu(z)/z^nu, summed in long double.
long double bessel_g_series_z(long double nu, long double z) {
  const long double q = 0.25L * z * z;
  long double term = 1.0L / (std::pow(2.0L, nu) * std::tgamma(nu + 1.0L));
  long double sum = term;
  long double biggest = std::abs(term);
  for (int k = 1; k < 400; ++k) {
    term *= -q / (k * (k + nu));
    sum += term;
    biggest = std::max(biggest, std::abs(term));
    if (k > q && std::abs(term) < 1e-22L * biggest) break;
  }
  return sum;
}

// Hankel expansion of J_nu; the phase is taken from x = z/pi so that the
// cosine is reduced exactly.
long double bessel_j_hankel(long double nu, double x) {
  const long double z = pi_l * x;
  const long double mu = 4.0L * nu * nu;
  long double P = 0.0L, Q = 0.0L;
  long double a = 1.0L; // a_k(nu) / z^k with the sign pattern folded in
  long double prev = std::numeric_limits<long double>::infinity();
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      const long double odd = 2.0L * k - 1.0L;
      a *= (mu - odd * odd) / (k * 8.0L * z);
    }
    const long double mag = std::abs(a);
    if (mag > prev) break;
    const int s = (k / 2) % 2 == 0 ? 1 : -1;
    if (k % 2 == 0)
      P += s * a;
    else
      Q += s * a;
    if (mag < 1e-21L) break;
    prev = mag;
  }
  const double phase = x - 0.5 * static_cast<double>(nu) - 0.25;
  return std::sqrt(2.0L / (pi_l * z)) *
         (P * static_cast<long double>(cos_pi(phase)) -
          Q * static_cast<long double>(sin_pi(phase)));
}

double bessel_g_unchecked(double nu, double x) {
  const double ax = std::abs(x);
  const double z = pi * ax;
  if (z <= bessel_switch_radius(nu)) return static_cast<double>(bessel_g_series_z(nu, z));
  return static_cast<double>(bessel_j_hankel(nu, ax) / std::pow(static_cast<long double>(z), nu));
}

} // namespace

FourierProfile FourierProfile::from_polynomial(PolyCoeffs q, double half_width,
                                               std::string label) {
  FourierProfile p;
  p.half_width = half_width;
  p.kind = ProfileKind::polynomial;
  p.label = std::move(label);
  p.eval = [q, half_width](double xi) { return std::abs(xi) <= half_width ? q(xi) : 0.0; };
  p.poly = std::move(q);
  return p;
}

PiecewiseProfile::PiecewiseProfile(std::vector<double> breakpoints,
                                   std::vector<PolyCoeffs> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breaks_.size() != pieces_.size() + 1)
    throw DomainError("PiecewiseProfile: need one piece per breakpoint interval");
  if (!std::is_sorted(breaks_.begin(), breaks_.end()))
    throw DomainError("PiecewiseProfile: breakpoints must be sorted");
}

double PiecewiseProfile::operator()(double xi) const {
  const double a = std::abs(xi);
  if (a < breaks_.front() || a > breaks_.back()) return 0.0;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), a);
  std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
  i = i == 0 ? 0 : std::min(i - 1, pieces_.size() - 1);
  return pieces_[i](a);
}

double sin_pi(double x) {
  // x = 2n + r with |r| <= 1 is exact in binary64.
  const double r = x - 2.0 * std::nearbyint(0.5 * x);
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(pi * r);
}

double cos_pi(double x) {
  const double r = std::abs(x - 2.0 * std::nearbyint(0.5 * x));
  if (r == 0.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0) return -1.0;
  // cos(pi r) = sin(pi (1/2 - r)) keeps relative accuracy near the zero.
  return std::sin(pi * (0.5 - r));
}

SiCi sine_cosine_integrals(double x) {
  if (!(x > 0.0)) throw DomainError("sine_cosine_integrals: need x > 0");
  constexpr long double euler_gamma = 0.577215664901532860606512090082402431L;
  const long double t = x;
  if (t <= 4.0L) {
    long double si = 0.0L, ci = 0.0L;
    long double term = t; // x^(2k+1)/(2k+1)!
    for (int k = 0; k < 60; ++k) {
      si += term / (2 * k + 1);
      const long double next = -term * t / (2 * k + 2); // x^(2k+2)/(2k+2)! signed
      ci += next / (2 * k + 2);
      term = next * t / (2 * k + 3);
      if (std::abs(term) < 1e-24L) break;
    }
    return {static_cast<double>(si),
            static_cast<double>(euler_gamma + std::log(t) + ci)};
  }
  // Continued fraction for E1(i x), modified Lentz.
  constexpr long double tiny = 1e-4000L;
  LComplex b(1.0L, t);
  LComplex c(1.0L / tiny, 0.0L);
  LComplex d = 1.0L / b;
  LComplex h = d;
  for (int i = 2; i < 100000; ++i) {
    const long double a = -static_cast<long double>(i - 1) * (i - 1);
    b += 2.0L;
    d = 1.0L / (a * d + b);
    c = b + a / c;
    const LComplex del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0L) + std::abs(del.imag()) < 1e-20L) break;
  }
  h *= LComplex(std::cos(t), -std::sin(t));
  return {static_cast<double>(pi_l / 2 + h.imag()), static_cast<double>(-h.real())};
}

double sinc_pw(double x) {
  const double z = pi * x;
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  }
  return sin_pi(x) / z;
}

double sinc_pw_prime(double x) {
  const double z = pi * x;
  if (std::abs(z) < 0.5) {
    // sum_{m>=1} (-1)^m 2m z^(2m-1) / (2m+1)!, times dz/dx = pi
    long double term = 1.0L; // z^(2m-1)/(2m+1)! at m = 1 is z/6
    long double acc = 0.0L;
    long double zpow = z;
    long double fact = 6.0L;
    for (int m = 1; m < 12; ++m) {
      term = zpow / fact * (2 * m);
      acc += (m % 2 == 1 ? -term : term);
      zpow *= static_cast<long double>(z) * z;
      fact *= (2 * m + 2) * (2 * m + 3);
    }
    return static_cast<double>(pi * acc);
  }
  return (z * cos_pi(x) - sin_pi(x)) / (pi * x * x);
}

double fejer(double x) {
  const double s = sinc_pw(x);
  return s * s;
}

double bessel_switch_radius(double nu) { return 12.0 + 2.0 * std::max(nu, 0.0); }

double bessel_j(double nu, double z) {
  if (z < 0.0) throw DomainError("bessel_j: need z >= 0");
  if (nu < 0.0) throw DomainError("bessel_j: need nu >= 0");
  if (z <= bessel_switch_radius(nu))
    return static_cast<double>(bessel_g_series_z(nu, z) * std::pow(static_cast<long double>(z), nu));
  return static_cast<double>(bessel_j_hankel(nu, z / pi));
}

double bessel_g(double alpha, double x) {
  if (!(alpha > 0.0)) throw DomainError("bessel_g: need alpha > 0");
  return bessel_g_unchecked(alpha, x);
}

double bessel_g_prime(double alpha, double x) {
  if (!(alpha > 0.0)) throw DomainError("bessel_g_prime: need alpha > 0");
  // d/dz [z^-a J_a(z)] = -z^-a J_{a+1}(z) = -z g_{a+1}, with z = pi x.
  return -pi * pi * x * bessel_g_unchecked(alpha + 1.0, x);
}

double h0_series(double x) {
  const double z = pi * x;
  return horner(h0_series_coeffs(), z);
}

double f0_series(double x) {
  const double z = pi * x;
  return horner(f0_series_coeffs(), z) / (pi * pi);
}

double h0(double x) {
  if (std::abs(pi * x) < h0_switch_radius) return h0_series(x);
  const double z = pi * x;
  const double z2 = z * z;
  return ((108.0 - 25.0 * z2) * sin_pi(x) - z * (11.0 * z2 + 108.0) * cos_pi(x)) /
         (40.0 * z2 * z2 * z);
}

double h0_hat(double xi) {
  if (std::abs(xi) > 0.5) return 0.0;
  const double x2 = xi * xi;
  return (0.25 - x2) * (1.0 - 1.8 * x2);
}

double f0(double x) {
  if (std::abs(pi * x) < f0_switch_radius) return f0_series(x);
  const double z = pi * x;
  const double z2 = z * z;
  const double P = ((242.0 * z2 + 3001.0) * z2 + 4176.0) * z2 + 5832.0;
  const double Q = -((242.0 * z2 + 576.0) * z2 + 11664.0) * z;
  const double R = (1463.0 * z2 + 7488.0) * z2 - 5832.0;
  // sin(2z), cos(2z) with z = pi x
  const double s2 = sin_pi(2.0 * x);
  const double c2 = cos_pi(2.0 * x);
  const double z4 = z2 * z2;
  return (P + Q * s2 + R * c2) / (12800.0 * pi * pi * z4 * z4);
}

double f_half(double x) {
  const double g = sinc_pw(x);
  const double gp = sinc_pw_prime(x);
  return g * g + gp * gp / (pi * pi);
}

double f_half_hat(double xi) {
  const double a = std::abs(xi);
  if (a > 1.0) return 0.0;
  return 2.0 / 3.0 * (1.0 - a) * (1.0 - a) * (a + 2.0);
}

namespace {
void check_odd_k(int k) {
  if (k < 1 || k % 2 == 0) throw DomainError("hk: k must be an odd positive integer");
}
} // namespace

double hk(int k, double x) {
  check_odd_k(k);
  const double ax = std::abs(x);
  const double delta = ax - 0.5 * k;
  if (std::abs(delta) < 0.5) {
    // x = k/2 + delta: cos(pi x) = -(-1)^((k-1)/2) sin(pi delta) and
    // k^2 - 4x^2 = -4 delta (k + delta); the pole cancels exactly.
    const double sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::numbers::sqrt2 * sinc_pw(delta) / (k + delta);
  }
  return 4.0 * std::numbers::sqrt2 * cos_pi(x) /
         (pi * (static_cast<double>(k) * k - 4.0 * x * x));
}

double hk_hat(int k, double t) {
  check_odd_k(k);
  if (std::abs(t) > 0.5) return 0.0;
  const double sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * 2.0 * std::numbers::sqrt2 / k * cos_pi(k * t);
}

PolyTransform::PolyTransform(PolyCoeffs q) : q_(std::move(q)) {
  constexpr int n_moments = 96;
  moments_.assign(n_moments, 0.0L);
  const auto& c = q_.coeffs();
  for (int m = 0; m < n_moments; ++m) {
    long double mu = 0.0L;
    for (std::size_t l = 0; l < c.size(); ++l) {
      const int n = static_cast<int>(l) + m;
      if (n % 2 != 0) continue;
      mu += c[l] * 2.0L * std::pow(0.5L, n + 1) / (n + 1);
    }
    moments_[m] = mu;
  }
  PolyCoeffs d = q_;
  for (std::size_t k = 0; k <= q_.degree(); ++k) {
    d_plus_.push_back(d(0.5L));
    d_minus_.push_back(d(-0.5L));
    d = d.derivative();
  }
  ibp_limit_ = std::max(series_limit_ + 4.0, 2.0 * (static_cast<double>(q_.degree()) + 4.0));
}

std::complex<double> PolyTransform::operator()(double x) const {
  const double omega = 2.0 * pi * x;
  const double aw = std::abs(omega);
  if (q_.is_zero()) return {0.0, 0.0};
  if (aw <= series_limit_) {
    // sum_m (i omega)^m mu_m / m!
    LComplex acc = 0.0L;
    LComplex factor = 1.0L;
    for (std::size_t m = 0; m < moments_.size(); ++m) {
      if (m > 0) factor *= LComplex(0.0L, omega) / static_cast<long double>(m);
      acc += factor * moments_[m];
      if (m > 8 && std::abs(factor) < 1e-24L) break;
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  if (aw >= ibp_limit_) {
    // sum_k (-1)^k [q^(k) e^{i omega t}]_{-1/2}^{1/2} / (i omega)^(k+1)
    const LComplex e_plus(cos_pi(x), sin_pi(x));
    const LComplex e_minus(cos_pi(x), -sin_pi(x));
    const LComplex iw(0.0L, omega);
    LComplex denom = iw;
    LComplex acc = 0.0L;
    for (std::size_t k = 0; k < d_plus_.size(); ++k) {
      const LComplex bracket = d_plus_[k] * e_plus - d_minus_[k] * e_minus;
      acc += (k % 2 == 0 ? 1.0L : -1.0L) * bracket / denom;
      denom *= iw;
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  const GaussRule& rule = gauss_legendre(64);
  long double re = 0.0L, im = 0.0L;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double t = 0.5 * rule.nodes[j];
    const long double w = 0.5L * rule.weights[j] * q_(static_cast<long double>(t));
    re += w * std::cos(omega * t);
    im += w * std::sin(omega * t);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

double PolyTransform::envelope_first_order() const {
  // |int q e^{iwt}| <= (|q(1/2)| + |q(-1/2)| + int |q'|) / |w|, w = 2 pi x
  const PolyCoeffs dq = q_.derivative();
  double var = 0.0;
  const GaussRule& rule = gauss_legendre(64);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j)
    var += 0.5 * rule.weights[j] * std::abs(dq(0.5 * rule.nodes[j]));
  // Quadrature of |q'| can undershoot at sign changes; pad it.
  var = 1.05 * var + 1e-12;
  return (std::abs(static_cast<double>(d_plus_[0])) +
          std::abs(static_cast<double>(d_minus_[0])) + var) /
         (2.0 * pi);
}

double PolyTransform::envelope_second_order() const {
  const PolyCoeffs d2 = q_.derivative().derivative();
  double var = 0.0;
  const GaussRule& rule = gauss_legendre(64);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j)
    var += 0.5 * rule.weights[j] * std::abs(d2(0.5 * rule.nodes[j]));
  var = 1.05 * var + 1e-12;
  const double ends = d_plus_.size() > 1
                          ? std::abs(static_cast<double>(d_plus_[1])) +
                                std::abs(static_cast<double>(d_minus_[1]))
                          : 0.0;
  return (ends + var) / (4.0 * pi * pi);
}

BandFunction make_sinc() {
  return {sinc_pw, pi, Parity::even, "sinc", Envelope{1.0, 1.0 / pi, 1.0}};
}

BandFunction make_fejer() {
  return {fejer, 2.0 * pi, Parity::even, "fejer", Envelope{2.0, 1.0 / (pi * pi), 1.0}};
}

BandFunction make_h0() {
  // |h0(x)| <= 33.4 (pi x)^3 / (40 (pi x)^5) for x >= 1
  return {[](double x) { return h0(x); }, pi, Parity::even, "h0",
          Envelope{2.0, 0.0847, 1.0}};
}

BandFunction make_f0() {
  // (|P| + |Q| + |R|) / (12800 pi^2 z^8) <= 7.7e-4 / x^2 for x >= 1
  return {[](double x) { return f0(x); }, 2.0 * pi, Parity::even, "f0",
          Envelope{2.0, 7.7e-4, 1.0}};
}

BandFunction make_hk(int k) {
  check_odd_k(k);
  // |k^2 - 4x^2| >= 3 x^2 once |x| >= k
  return {[k](double x) { return hk(k, x); }, pi, Parity::even,
          "h" + std::to_string(k),
          Envelope{2.0, 4.0 * std::numbers::sqrt2 / (3.0 * pi), static_cast<double>(k)}};
}

BandFunction make_bessel_g(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("bessel_g: need alpha > 0");
  // |J_a(z)| <= sqrt(2/(pi z)) (1 + small) once z is past the series radius.
  const double x0 = std::max(1.0, bessel_switch_radius(alpha) / pi);
  const double C = 1.1 * std::sqrt(2.0 / pi) / std::pow(pi, alpha + 0.5);
  return {[alpha](double x) { return bessel_g(alpha, x); }, pi, Parity::even,
          "g_alpha", Envelope{alpha + 0.5, C, x0}};
}

BandFunction make_f_half() {
  // sinc^2 + sinc'^2/pi^2 <= (1 + (1 + 1/pi)^2) / (pi x)^2 for x >= 1
  return {[](double x) { return f_half(x); }, 2.0 * pi, Parity::even, "f_half",
          Envelope{2.0, 2.8 / (pi * pi), 1.0}};
}

FourierProfile make_h0_hat() {
  // (1/4 - xi^2)(1 - 9/5 xi^2) = 1/4 - 29/20 xi^2 + 9/5 xi^4
  return FourierProfile::from_polynomial(PolyCoeffs{0.25, 0.0, -1.45, 0.0, 1.8}, 0.5,
                                         "h0_hat");
}

PiecewiseProfile make_f_half_hat() {
  // (2/3)(1 - a)^2 (a + 2) = (2/3)(2 - 3a + a^3)
  return PiecewiseProfile({0.0, 1.0}, {PolyCoeffs{4.0 / 3.0, -2.0, 0.0, 2.0 / 3.0}});
}

} // namespace bandlimit
