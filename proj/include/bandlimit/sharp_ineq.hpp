#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bandlimit/quad.hpp"
#include "bandlimit/specfun.hpp"

namespace bandlimit {

// P(x) = sum a_n x^n, required positive on [0, 1].
class WeightPoly {
public:
  // Throws DomainError unless P > 0 on [0, 1] is certified.
  explicit WeightPoly(std::vector<double> coeffs);

  const std::vector<double>& coeffs() const { return poly_.coeffs(); }
  int degree() const { return static_cast<int>(poly_.degree()); }
  double operator()(double x) const { return poly_(x); }
  double min_on_unit() const { return min_; }
  WeightPoly scaled(double c) const;

private:
  PolyCoeffs poly_;
  double min_ = 0.0;
};

// Scan of 10^4 points plus an adaptive Lipschitz certificate on [0, 1].
// Returns a certified lower bound for min P, or a value <= 0 on failure.
double certify_positive(const PolyCoeffs& p);

// A band-limited g given by its Fourier profile on I = [-1/2, 1/2].
class PWFunction {
public:
  explicit PWFunction(FourierProfile profile);
  static PWFunction from_polynomial(const PolyCoeffs& q);

  const FourierProfile& profile() const { return profile_; }
  double g0() const { return g0_; } // integral of the profile
  std::complex<double> operator()(double x, double tol = 1e-12) const;
  // Same function with profile scaled so that g(0) = 1.
  PWFunction normalized() const;

private:
  FourierProfile profile_;
  double g0_ = 0.0;
  std::shared_ptr<const PolyTransform> transform_;
};

double sharp_constant(const WeightPoly& P, double tol);

// The extremal function C(P) int_0^1 cos(pi x t)/P(t^2) dt.
double extremal_g(const WeightPoly& P, double x, double tol);

// Profile lambda/P(4t^2) on I with lambda = C(P), so that g(0) = 1.
PWFunction extremal_profile(const WeightPoly& P, double tol);

// int_I P(4t^2) |profile(t)|^2 dt.
double functional(const WeightPoly& P, const PWFunction& g, double tol);

// sum_n a_n / pi^(2n) int |g^(n)|^2 over the line; polynomial profiles,
// deg P <= 4.
double time_side_functional(const WeightPoly& P, const PWFunction& g, double tol);

// sqrt(functional): the P-weighted Sobolev-type norm of g.
double sobolev_norm(const WeightPoly& P, const PWFunction& g, double tol);

// int (1 - 4 pi^2 xi^2 / sigma^2)^N |f_hat|^2 d xi, N <= 4; profile must
// live in [-sigma/(2pi), sigma/(2pi)].
double binomial_inequality_check(int N, double sigma, const FourierProfile& f_hat, double tol);

// (1/(2 pi sqrt a) log((1 + pi sqrt a)/(1 - pi sqrt a)))^-1, 0 < a < 1/pi^2.
double log_corollary_constant(double a);
// pi sqrt a / arctan(pi sqrt a), a > 0.
double arctan_corollary_constant(double a);

// Polynomial profile of degree <= max_degree with coefficients uniform in
// [-1, 1], normalized to g(0) = 1 (draws with vanishing integral rejected).
PWFunction random_profile(std::uint64_t seed, int max_degree = 6);

} // namespace bandlimit
