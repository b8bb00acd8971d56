#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bandlimit/numeric.hpp"
#include "bandlimit/polynomial.hpp"

namespace bandlimit {

enum class Parity { even, odd, none };

// |f(x)| <= coefficient / |x|^exponent for |x| >= x0.
struct Envelope {
  double exponent = 2.0;
  double coefficient = 1.0;
  double x0 = 1.0;
};

// Real-axis evaluation rule for an entire function of exponential type
// type_bound (pi for PW-type members, 2*pi for their squares).
struct BandFunction {
  std::function<double(double)> eval;
  double type_bound = pi;
  Parity parity = Parity::none;
  std::string label;
  std::optional<Envelope> envelope;

  double operator()(double x) const { return eval(x); }
};

enum class ProfileKind { polynomial, sine_mode, piecewise, tabulated };

// A function supported on [-half_width, half_width]: the Fourier side of a
// band-limited function. For polynomial profiles the polynomial is kept so
// that transforms and moments can be taken in closed form.
struct FourierProfile {
  std::function<double(double)> eval;
  double half_width = 0.5;
  ProfileKind kind = ProfileKind::tabulated;
  std::optional<PolyCoeffs> poly;
  std::string label;

  double operator()(double xi) const { return eval(xi); }

  static FourierProfile from_polynomial(PolyCoeffs q, double half_width = 0.5,
                                        std::string label = "poly");
};

// Polynomial pieces in |xi| between sorted breakpoints; zero outside.
class PiecewiseProfile {
public:
  PiecewiseProfile(std::vector<double> breakpoints, std::vector<PolyCoeffs> pieces);
  double operator()(double xi) const;
  const std::vector<double>& breakpoints() const { return breaks_; }
  double support() const { return breaks_.back(); }

private:
  std::vector<double> breaks_;
  std::vector<PolyCoeffs> pieces_;
};

// sin(pi x), cos(pi x) with exact argument reduction (accurate for large x).
double sin_pi(double x);
double cos_pi(double x);

// Sine and cosine integrals Si(x), Ci(x) for x > 0.
struct SiCi {
  double si;
  double ci;
};
SiCi sine_cosine_integrals(double x);

double sinc_pw(double x);       // sin(pi x)/(pi x)
double sinc_pw_prime(double x); // d/dx of the above
double fejer(double x);         // (sin(pi x)/(pi x))^2

// J_alpha(pi x)/(pi x)^alpha and its x-derivative. Throws DomainError for
// alpha <= 0 (bessel_g) or alpha <= -1 (internal use of alpha + 1).
double bessel_g(double alpha, double x);
double bessel_g_prime(double alpha, double x);
// J_nu(z) for z >= 0, exposed for tests.
double bessel_j(double nu, double z);
// Radius |pi x| beyond which bessel_g switches to the Hankel expansion.
double bessel_switch_radius(double nu);

double h0(double x);
double h0_hat(double xi);
double f0(double x);
double f_half(double x);
double f_half_hat(double xi);
double hk(int k, double x);
double hk_hat(int k, double t);

// Switch radii (in z = pi x) between the Taylor branch and the closed form.
inline constexpr double h0_switch_radius = 0.5;
inline constexpr double f0_switch_radius = 1.0;

// Closed forms without the Taylor branch, for any float type; used as
// extended-precision oracles.
template <class T> T h0_direct(const T& x) {
  using std::cos;
  using std::sin;
  const T z = pi_v<T>() * x;
  const T z2 = z * z;
  return ((T(108) - T(25) * z2) * sin(z) - z * (T(11) * z2 + T(108)) * cos(z)) /
         (T(40) * z2 * z2 * z);
}

template <class T> T f0_direct(const T& x) {
  using std::cos;
  using std::sin;
  const T z = pi_v<T>() * x;
  const T z2 = z * z;
  const T P = ((T(242) * z2 + T(3001)) * z2 + T(4176)) * z2 + T(5832);
  const T Q = -((T(242) * z2 + T(576)) * z2 + T(11664)) * z;
  const T R = (T(1463) * z2 + T(7488)) * z2 - T(5832);
  const T z4 = z2 * z2;
  return (P + Q * sin(2 * z) + R * cos(2 * z)) / (T(12800) * pi_v<T>() * pi_v<T>() * z4 * z4);
}

// Series-branch values, exposed so the branch agreement can be tested.
double h0_series(double x);
double f0_series(double x);

// Fourier inverse of a polynomial profile on [-1/2, 1/2]:
//   x -> integral q(t) exp(2 pi i x t) dt.
// Taylor series in x near 0, repeated integration by parts for large |x|,
// a 64-point Gauss-Legendre rule in between.
class PolyTransform {
public:
  explicit PolyTransform(PolyCoeffs q);
  std::complex<double> operator()(double x) const;
  const PolyCoeffs& profile() const { return q_; }
  // Bound A with |transform(x)| <= A / |x| (one integration by parts).
  double envelope_first_order() const;
  // Bound A with |transform(x)| <= A / x^2; valid when q(+-1/2) = 0.
  double envelope_second_order() const;

private:
  PolyCoeffs q_;
  std::vector<long double> moments_;
  std::vector<long double> d_plus_;  // q^(k)(+1/2)
  std::vector<long double> d_minus_; // q^(k)(-1/2)
  double series_limit_ = 8.0;
  double ibp_limit_ = 12.0;
};

BandFunction make_sinc();
BandFunction make_fejer();
BandFunction make_h0();
BandFunction make_f0();
BandFunction make_hk(int k);
BandFunction make_bessel_g(double alpha);
BandFunction make_f_half();
FourierProfile make_h0_hat();
PiecewiseProfile make_f_half_hat();

} // namespace bandlimit
