#pragma once

#include <memory>
#include <vector>

#include "bandlimit/eigen.hpp"
#include "bandlimit/quad.hpp"
#include "bandlimit/specfun.hpp"

namespace bandlimit {

struct OrthonormalityReport {
  double fourier_deviation = 0.0; // max |<s_k, s_j> - delta_kj|
  double time_deviation = 0.0;    // max |int x^2 h_k h_j - delta_kj|
  double max_deviation() const { return std::max(fourier_deviation, time_deviation); }
};

// Gram matrix of h_1, h_3, ..., h_kmax in the x^2-weighted inner product,
// computed on the Fourier side (2 int_I sin sin) and in the time domain.
OrthonormalityReport check_orthonormal(int kmax, double tol);

enum class QMethod { closed_form, quadrature };

// Q_ij = int_{-inf}^0 -x h_{2i-1} h_{2j-1}, i, j = 1..d. The closed form is
// (8/pi^2)(G(a) - G(b))/(a^2 - b^2), G(a) = -log(a)/2 + Ci(pi a)/2, with the
// diagonal (8/pi^2)((pi/2) Si(pi a) - 1/a)/(2a).
SymMatrix<double> assemble_Q(int d, double tol, QMethod method = QMethod::closed_form);
double q_entry_closed(int a, int b);
QuadResult q_entry_quadrature(int a, int b, double tol);

struct L2Solution {
  int d = 0;
  double lambda = 0.0; // largest |eigenvalue| of Q
  double bound = 0.0;  // 1/|lambda|
  std::vector<double> coeffs;
  double rayleigh = 0.0; // a'Qa / a'a at coeffs
  int sweeps = 0;
  BandFunction h;
};

L2Solution solve_l2(int d, double tol, QMethod method = QMethod::closed_form);

// sum_k a_k h_{2k-1}
BandFunction l2_combination(const std::vector<double>& a);

struct ZeroReport {
  std::vector<double> zeros;
  int requested = 0;
  bool complete() const { return static_cast<int>(zeros.size()) >= requested; }
};

// First `count` positive zeros of h by find_roots on [0.5, count + 2].
ZeroReport extremizer_zeros(const BandFunction& h, int count, double tol = 1e-10);

} // namespace bandlimit
