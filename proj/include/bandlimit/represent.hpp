#pragma once

#include <memory>
#include <vector>

#include "bandlimit/quad.hpp"
#include "bandlimit/specfun.hpp"

namespace bandlimit {

// Tail declarations for t*h^2 and t^2*h^2 derived from h's envelope.
// Throws DomainError when h has none.
DecayDeclaration decay_of_moment(const BandFunction& h, int power);

// f(x) = integral_{-inf}^x -t h(t)^2 dt. For x >= 0 it is taken as
// f(0) - integral_0^x t h^2, using |h(t)| = |h(-t)|.
double h_to_f(const BandFunction& h, double x, double tol);

struct Quotient {
  double value = 0.0; // 2 int x^2 h^2 / int |x| h^2
  QuadResult numerator;   // int x^2 h^2
  QuadResult denominator; // int |x| h^2
};
Quotient quotient(const BandFunction& h, double tol);

// max |f'(x) + x h(x)^2| over xs, f' by central differences.
double derivative_identity_check(const BandFunction& h, const BandFunction& f,
                                 const std::vector<double>& xs, double step = 1e-5);

class MonotoneProfile {
public:
  MonotoneProfile(BandFunction h, double tol);

  const BandFunction& h() const { return h_; }
  double peak() const { return peak_.value; } // f(0)
  double mass() const { return mass_.value; } // int x^2 h^2 = int f
  const QuadResult& peak_diagnostics() const { return peak_; }
  const QuadResult& mass_diagnostics() const { return mass_; }

  double f(double x) const;

  // Cubic Hermite table of f (exact slopes -x h^2) on [0, half_range]; f is even
  // so negative x is mirrored. Outside the range the integral is evaluated.
  void tabulate(double half_range, int samples);
  bool tabulated() const { return static_cast<bool>(table_); }

  BandFunction as_band_function() const;

private:
  struct Table;
  BandFunction h_;
  double tol_;
  QuadResult peak_;
  QuadResult mass_;
  std::shared_ptr<const Table> table_;
};

} // namespace bandlimit
