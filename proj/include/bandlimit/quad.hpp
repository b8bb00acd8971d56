#pragma once

#include <functional>
#include <vector>

#include "bandlimit/numeric.hpp"

namespace bandlimit {

using RealFn = std::function<double(double)>;

// Outcome of every integral in the library. The claim attached to a result
// is |value - exact| <= err_est + tail_bound. When tail_extrapolated is set,
// tail_bound is the spread of the last two Richardson levels rather than a
// rigorous bound.
struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  long n_evals = 0;
  double tail_bound = 0.0;
  int subdivisions = 0;
  bool tail_extrapolated = false;

  double total_error() const { return err_est + tail_bound; }
};

// Asserts |f(x)| <= coefficient / |x|^exponent for |x| >= x0. The integrand
// is assumed to oscillate with the given period (or a divisor of it), which
// is what makes tail extrapolation on the period lattice legitimate.
struct DecayDeclaration {
  double exponent = 2.0;
  double coefficient = 1.0;
  double x0 = 1.0;
  double period = 1.0;
};

// C / ((p - 1) X^(p - 1)): the bound on one tail beyond X.
double one_sided_tail_bound(const DecayDeclaration& decay, double X);

struct FiniteOptions {
  // Extra panel boundaries (integrand zeros, poles, lattice points).
  std::vector<double> breakpoints;
  int max_subdivisions = 200000;
};

// Adaptive Gauss-Kronrod (7/15) with global bisection of the worst panel.
// Throws QuadratureError if tol is not reached.
QuadResult integrate_finite(const RealFn& f, double a, double b, double tol,
                            const FiniteOptions& options = {});

enum class TailMode {
  bound,       // grow X until the declared-decay bound is <= tol/2
  extrapolate, // Richardson on the period lattice, exponents p-1, p, p+1...
  automatic,   // whichever of the two is satisfied first
};

// Integral of f over [a, +inf) (direction > 0) or (-inf, a] (direction < 0).
// Panels are aligned to the half-integer lattice.
QuadResult integrate_halfline(const RealFn& f, double a, int direction,
                              const DecayDeclaration& decay, double tol,
                              TailMode mode = TailMode::automatic);

// Integral over the real line, split at 0 into two half-lines.
QuadResult integrate_line(const RealFn& f, const DecayDeclaration& decay,
                          double tol, TailMode mode = TailMode::automatic);

// Sum of independent results (values add, errors add).
QuadResult combine(const QuadResult& a, const QuadResult& b, double sign = 1.0);

// Bracketed root by Brent's method; requires f(a) f(b) <= 0.
double brent_root(const RealFn& f, double a, double b, double tol);

// Scans a uniform grid for sign changes and refines each bracket. Two roots
// inside one grid cell cancel and are missed.
std::vector<double> find_roots(const RealFn& f, double a, double b, int grid,
                               double tol);

struct GaussRule {
  std::vector<double> nodes;   // on [-1, 1]
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule, computed once per n and cached.
const GaussRule& gauss_legendre(int n);

} // namespace bandlimit
