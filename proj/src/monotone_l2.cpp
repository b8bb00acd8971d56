#include "bandlimit/monotone_l2.hpp"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "bandlimit/parallel.hpp"

namespace bandlimit {
namespace {

// |h_k(x)| <= hk_envelope / x^2 for |x| >= k
const double hk_envelope = 4.0 * std::sqrt(2.0) / (3.0 * pi);

void check_modes(int d) {
  if (d < 1) throw DomainError("number of modes must be >= 1");
}

} // namespace

OrthonormalityReport check_orthonormal(int kmax, double tol) {
  if (kmax < 1 || kmax % 2 == 0) throw DomainError("kmax must be a positive odd integer");
  std::vector<std::pair<int, int>> pairs;
  for (int k = 1; k <= kmax; k += 2)
    for (int j = 1; j <= k; j += 2) pairs.emplace_back(k, j);

  std::vector<double> fourier(pairs.size()), time(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t n) {
    const auto [k, j] = pairs[n];
    fourier[n] = integrate_finite(
                     [k = k, j = j](double t) { return 2.0 * sin_pi(k * t) * sin_pi(j * t); },
                     -0.5, 0.5, 0.1 * tol)
                     .value;
    DecayDeclaration decay{2.0, hk_envelope * hk_envelope, static_cast<double>(k), 1.0};
    time[n] = integrate_line(
                  [k = k, j = j](double x) { return x * x * hk(k, x) * hk(j, x); }, decay,
                  0.1 * tol)
                  .value;
  });
  OrthonormalityReport rep;
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    const double delta = pairs[n].first == pairs[n].second ? 1.0 : 0.0;
    rep.fourier_deviation = std::max(rep.fourier_deviation, std::abs(fourier[n] - delta));
    rep.time_deviation = std::max(rep.time_deviation, std::abs(time[n] - delta));
  }
  return rep;
}

double q_entry_closed(int a, int b) {
  if (a < 1 || b < 1 || a % 2 == 0 || b % 2 == 0)
    throw DomainError("Q indices must be positive odd integers");
  if (a > b) std::swap(a, b);
  const double c = 8.0 / (pi * pi);
  if (a == b) {
    const double s = sine_cosine_integrals(pi * a).si;
    return c * (0.5 * pi * s - 1.0 / a) / (2.0 * a);
  }
  const double log_ratio = std::log1p(static_cast<double>(a - b) / b);
  const double ci_diff =
      sine_cosine_integrals(pi * a).ci - sine_cosine_integrals(pi * b).ci;
  const double num = -0.5 * log_ratio + 0.5 * ci_diff;
  return c * num / (static_cast<double>(a - b) * static_cast<double>(a + b));
}

QuadResult q_entry_quadrature(int a, int b, double tol) {
  if (a < 1 || b < 1 || a % 2 == 0 || b % 2 == 0)
    throw DomainError("Q indices must be positive odd integers");
  DecayDeclaration decay{3.0, hk_envelope * hk_envelope, static_cast<double>(std::max(a, b)), 1.0};
  return integrate_halfline([a, b](double x) { return x * hk(a, x) * hk(b, x); }, 0.0, +1,
                            decay, tol);
}

SymMatrix<double> assemble_Q(int d, double tol, QMethod method) {
  check_modes(d);
  SymMatrix<double> Q(d, method == QMethod::closed_form
                             ? "Q: closed form in Si, Ci"
                             : "Q: half-line quadrature int_0^inf x h_a h_b");
  if (method == QMethod::closed_form) {
    std::vector<double> G(d), S(d);
    for (int i = 0; i < d; ++i) {
      const int a = 2 * i + 1;
      const auto sc = sine_cosine_integrals(pi * a);
      G[i] = 0.5 * sc.ci;
      S[i] = sc.si;
    }
    const double c = 8.0 / (pi * pi);
    for (int i = 0; i < d; ++i) {
      const int a = 2 * i + 1;
      Q.set(i, i, c * (0.5 * pi * S[i] - 1.0 / a) / (2.0 * a));
      for (int j = 0; j < i; ++j) {
        const int b = 2 * j + 1;
        const double num = -0.5 * std::log1p(static_cast<double>(a - b) / b) + G[i] - G[j];
        Q.set(i, j, c * num / (static_cast<double>(a - b) * static_cast<double>(a + b)));
      }
    }
    return Q;
  }
  std::vector<std::pair<int, int>> jobs;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) jobs.emplace_back(i, j);
  std::vector<double> vals(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t n) {
    const auto [i, j] = jobs[n];
    vals[n] = q_entry_quadrature(2 * i + 1, 2 * j + 1, tol).value;
  });
  for (std::size_t n = 0; n < jobs.size(); ++n) Q.set(jobs[n].first, jobs[n].second, vals[n]);
  return Q;
}

BandFunction l2_combination(const std::vector<double>& a) {
  if (a.empty()) throw DomainError("empty coefficient vector");
  auto coeffs = std::make_shared<const std::vector<double>>(a);
  BandFunction h;
  h.eval = [coeffs](double x) {
    // h_k = (4 sqrt2 / pi) cos(pi x) / (k^2 - 4x^2), except next to the pole
    const double c = cos_pi(x);
    const double x2 = 4.0 * x * x;
    double sum = 0.0, near = 0.0;
    for (std::size_t i = 0; i < coeffs->size(); ++i) {
      const int k = static_cast<int>(2 * i + 1);
      const double den = static_cast<double>(k) * k - x2;
      if (std::abs(den) < 0.5 * k)
        near += (*coeffs)[i] * hk(k, x);
      else
        sum += (*coeffs)[i] / den;
    }
    return 4.0 * std::sqrt(2.0) / pi * c * sum + near;
  };
  h.type_bound = pi;
  h.parity = Parity::even;
  h.label = "h[l2 d=" + std::to_string(a.size()) + "]";
  double l1 = 0.0;
  for (double v : a) l1 += std::abs(v);
  h.envelope = Envelope{2.0, hk_envelope * l1, static_cast<double>(2 * a.size() - 1)};
  return h;
}

L2Solution solve_l2(int d, double tol, QMethod method) {
  check_modes(d);
  const auto Q = assemble_Q(d, tol, method);
  const auto sys = eig_sym(Q, 1e-10);
  const auto& top = sys.pairs.front();
  L2Solution sol;
  sol.d = d;
  sol.lambda = std::abs(top.value);
  sol.bound = 1.0 / sol.lambda;
  sol.coeffs = top.vector;
  double nn = 0.0;
  for (double v : sol.coeffs) nn += v * v;
  sol.rayleigh = Q.quadform(sol.coeffs) / nn;
  sol.sweeps = sys.sweeps;
  sol.h = l2_combination(sol.coeffs);
  return sol;
}

ZeroReport extremizer_zeros(const BandFunction& h, int count, double tol) {
  if (count < 1) throw DomainError("count must be >= 1");
  ZeroReport rep;
  rep.requested = count;
  auto roots = find_roots(h.eval, 0.5, count + 2.0, 400 * (count + 2), tol);
  if (static_cast<int>(roots.size()) > count) roots.resize(count);
  rep.zeros = std::move(roots);
  return rep;
}

} // namespace bandlimit
