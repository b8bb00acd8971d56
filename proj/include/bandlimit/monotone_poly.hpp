#pragma once

#include <string>
#include <vector>

#include "bandlimit/eigen.hpp"
#include "bandlimit/quad.hpp"
#include "bandlimit/specfun.hpp"

namespace bandlimit {

inline constexpr int max_poly_degree = 40;

// p_i(y) = (1/4 - y^2) y^i on I = [-1/2, 1/2].
Polynomial<Rational> basis_profile_exact(int i);
PolyCoeffs basis_profile(int i);

// f_i(x) = integral_I p_i(y) e^{2 pi i x y} dy. For odd i this is purely
// imaginary; basis_eval returns the real function f_i / i in that case.
double basis_eval(int i, double x);
BandFunction basis_function(int i);

// pi^2 N and pi^2 D for the basis p_0..p_d, exact.
struct ExactND {
  RationalMatrix N;
  RationalMatrix D;
};
ExactND exact_entries(int d);

enum class DPath { quadrature, exact };

struct NDMatrices {
  SymMatrix<double> N;
  SymMatrix<double> D;
  double max_err_est = 0.0; // worst err_est + tail over quadrature entries
  long n_evals = 0;
};

// N always from its closed form; D by time-domain quadrature of
// 2 int_0^inf x f_i f_j (decay x^-3) or from the exact entries.
NDMatrices assemble_ND(int d, double tol, DPath path = DPath::quadrature);

struct MonotoneSolution {
  int d = 0;
  double bound = 0.0;
  std::vector<double> coeffs; // a_0 = 1 gauge (unit norm if a_0 vanishes)
  double rayleigh = 0.0;      // 2 a'Na / a'Da recomputed at coeffs
  BandFunction h;
  DPath path = DPath::exact;
  double max_err_est = 0.0;
  long n_evals = 0;
};

// Smallest eigenvalue of the pencil (2N, D). The exact path solves in
// 50-digit arithmetic; the quadrature path in binary64.
MonotoneSolution solve_poly(int d, double tol, DPath path = DPath::exact);

// h = sum a_i f_i (real members) as a band function with envelope.
BandFunction poly_combination(const std::vector<double>& a, std::string label = "h");

// 2 a'Na / a'Da at a = (1, 0, -9/5), exactly.
Rational certify_d2_exact();

} // namespace bandlimit
