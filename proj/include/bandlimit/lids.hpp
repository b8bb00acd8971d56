#pragma once

#include <string>
#include <vector>

#include "bandlimit/quad.hpp"
#include "bandlimit/specfun.hpp"

namespace bandlimit {

// f = g^2 + g'^2 / C for a solution g of y'' + (B/x) y' + C y = 0.
struct SoninLid {
  BandFunction g;
  BandFunction g_prime;
  double C = pi * pi;
  double B = 2.0;
  std::string label;
};

SoninLid fejer_lid(); // g = sin(pi x)/(pi x)
SoninLid bessel_lid(double alpha); // g = J_alpha(pi x)/(pi x)^alpha, B = 2 alpha + 1

double lid_eval(const SoninLid& lid, double x);
BandFunction lid_function(const SoninLid& lid);

// max over consecutive grid points of f(x_{k+1}) - f(x_k); <= 0 when f
// decreases along the (sorted, positive) grid.
double lid_monotone_check(const SoninLid& lid, const std::vector<double>& grid);

struct LidRatio {
  double value = 0.0;     // int f / f(0)
  QuadResult integral;    // int f over the line
  double peak = 0.0;      // f(0) = g(0)^2
};

LidRatio bessel_lid_ratio(double alpha, double tol);

// The same ratio from the Beta-function form of the transform at 0:
// 2 Gamma(a+1)^2 / (pi Gamma(a+1/2)^2) (B(1/2, 2a) + B(3/2, 2a)).
double bessel_lid_ratio_closed(double alpha);

struct AlphaMinimum {
  double alpha = 0.0;
  double ratio = 0.0;
  bool at_boundary = false;
  bool unimodal = true; // outcome of the 50-point scan
  int evaluations = 0;
};

// Golden-section search for the minimizing alpha on [lo, hi], preceded by a
// 50-point scan that checks unimodality and locates the bracket.
AlphaMinimum minimize_alpha(double lo, double hi, double tol, double quad_tol = 1e-10);

} // namespace bandlimit
