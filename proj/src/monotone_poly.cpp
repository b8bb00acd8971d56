#include "bandlimit/monotone_poly.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "bandlimit/parallel.hpp"

namespace bandlimit {
namespace {

using RPoly = Polynomial<Rational>;

void check_degree(int d) {
  if (d < 0) throw DomainError("polynomial degree must be >= 0");
  if (d > max_poly_degree)
    throw DomainError("polynomial degree above the supported cap of " +
                      std::to_string(max_poly_degree));
}

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// pi^2 N_ij = (1/4) int_I p_i' p_j'
Rational n_entry(const RPoly& pi_, const RPoly& pj) {
  const Rational half(1, 2);
  return (pi_.derivative() * pj.derivative()).integrate(-half, half) / 4;
}

// pi^2 D_ij = -int_0^1 c'(s)/s ds with c(s) = int_{s-1/2}^{1/2} p_i(y) p_j(y-s) dy
Rational d_entry(const RPoly& pi_, const RPoly& pj) {
  const Rational half(1, 2);
  const auto& b = pj.coeffs();
  // p_j(y - s) = sum_m s^m B_m(y)
  std::vector<RPoly> B(b.size());
  for (std::size_t n = 0; n < b.size(); ++n) {
    if (b[n] == 0) continue;
    for (std::size_t m = 0; m <= n; ++m) {
      Rational c = b[n] * binomial(static_cast<int>(n), static_cast<int>(m));
      if (m % 2 == 1) c = -c;
      B[m] = B[m] + RPoly::monomial(n - m, c);
    }
  }
  RPoly c;
  for (std::size_t m = 0; m < B.size(); ++m) {
    if (B[m].is_zero()) continue;
    const RPoly F = (pi_ * B[m]).antiderivative();
    const RPoly lower = F.compose_shift(-half); // F(s - 1/2) as a polynomial in s
    c = c + RPoly::monomial(m) * (RPoly{F(half)} - lower);
  }
  const RPoly dc = c.derivative();
  if (dc.coeff(0) != 0) throw NumericalError("d_entry: c'(0) does not vanish");
  std::vector<Rational> shifted;
  for (std::size_t k = 1; k < dc.coeffs().size(); ++k) shifted.push_back(dc.coeffs()[k]);
  return -RPoly(shifted).integrate(0, 1);
}

class PolyCombination {
public:
  explicit PolyCombination(const std::vector<double>& a) {
    std::vector<double> even(a.size() + 2, 0.0), odd(a.size() + 2, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto& dst = i % 2 == 0 ? even : odd;
      dst[i] += 0.25 * a[i];
      dst[i + 2] -= a[i];
    }
    even_ = std::make_unique<PolyTransform>(PolyCoeffs(even));
    odd_ = std::make_unique<PolyTransform>(PolyCoeffs(odd));
  }
  double operator()(double x) const { return (*even_)(x).real() + (*odd_)(x).imag(); }
  double envelope() const {
    return even_->envelope_second_order() + odd_->envelope_second_order();
  }

private:
  std::unique_ptr<PolyTransform> even_, odd_;
};

} // namespace

RPoly basis_profile_exact(int i) {
  if (i < 0) throw DomainError("basis index must be >= 0");
  return RPoly::monomial(i, Rational(1, 4)) - RPoly::monomial(i + 2);
}

PolyCoeffs basis_profile(int i) {
  if (i < 0) throw DomainError("basis index must be >= 0");
  return PolyCoeffs::monomial(i, 0.25) - PolyCoeffs::monomial(i + 2);
}

double basis_eval(int i, double x) {
  const PolyTransform t(basis_profile(i));
  const auto v = t(x);
  return i % 2 == 0 ? v.real() : v.imag();
}

BandFunction basis_function(int i) {
  std::vector<double> a(i + 1, 0.0);
  a[i] = 1.0;
  return poly_combination(a, "f" + std::to_string(i));
}

BandFunction poly_combination(const std::vector<double>& a, std::string label) {
  auto comb = std::make_shared<const PolyCombination>(a);
  BandFunction h;
  h.eval = [comb](double x) { return (*comb)(x); };
  h.type_bound = pi;
  bool has_even = false, has_odd = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0.0) (i % 2 == 0 ? has_even : has_odd) = true;
  h.parity = has_even && has_odd ? Parity::none : (has_odd ? Parity::odd : Parity::even);
  h.label = std::move(label);
  h.envelope = Envelope{2.0, comb->envelope(), 1.0};
  return h;
}

ExactND exact_entries(int d) {
  check_degree(d);
  const std::size_t n = d + 1;
  std::vector<RPoly> p;
  for (int i = 0; i <= d; ++i) p.push_back(basis_profile_exact(i));
  ExactND out{RationalMatrix(n, std::vector<Rational>(n, Rational(0))),
              RationalMatrix(n, std::vector<Rational>(n, Rational(0)))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      if ((i + j) % 2 == 1) continue;
      out.N[i][j] = out.N[j][i] = n_entry(p[i], p[j]);
      out.D[i][j] = out.D[j][i] = d_entry(p[i], p[j]);
    }
  return out;
}

NDMatrices assemble_ND(int d, double tol, DPath path) {
  check_degree(d);
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  const std::size_t n = d + 1;
  const double pi2 = pi * pi;
  NDMatrices out{SymMatrix<double>(n, "N: closed form (1/4pi^2) int p_i' p_j'"),
                 SymMatrix<double>(n)};
  std::vector<RPoly> p;
  for (int i = 0; i <= d; ++i) p.push_back(basis_profile_exact(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if ((i + j) % 2 == 0) out.N.set(i, j, to_double(n_entry(p[i], p[j])) / pi2);

  if (path == DPath::exact) {
    out.D.set_provenance("D: exact rational / pi^2");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if ((i + j) % 2 == 0) out.D.set(i, j, to_double(d_entry(p[i], p[j])) / pi2);
    return out;
  }

  out.D.set_provenance("D: time-domain quadrature 2 int_0^inf x f_i f_j");
  std::vector<std::unique_ptr<PolyTransform>> tr;
  std::vector<double> env;
  for (int i = 0; i <= d; ++i) {
    tr.push_back(std::make_unique<PolyTransform>(basis_profile(i)));
    env.push_back(tr.back()->envelope_second_order());
  }
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if ((i + j) % 2 == 0) jobs.emplace_back(i, j);
  std::vector<QuadResult> res(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    const auto [i, j] = jobs[k];
    const bool odd = i % 2 == 1;
    const PolyTransform& ti = *tr[i];
    const PolyTransform& tj = *tr[j];
    auto integrand = [&](double x) {
      const auto a = ti(x), b = tj(x);
      return odd ? x * a.imag() * b.imag() : x * a.real() * b.real();
    };
    DecayDeclaration decay{3.0, env[i] * env[j], 1.0, 1.0};
    res[k] = integrate_halfline(integrand, 0.0, +1, decay, 0.5 * tol);
  });
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto [i, j] = jobs[k];
    out.D.set(i, j, 2.0 * res[k].value);
    out.max_err_est = std::max(out.max_err_est, 2.0 * res[k].total_error());
    out.n_evals += res[k].n_evals;
  }
  return out;
}

MonotoneSolution solve_poly(int d, double tol, DPath path) {
  check_degree(d);
  MonotoneSolution sol;
  sol.d = d;
  sol.path = path;
  std::vector<double> a;
  if (path == DPath::exact) {
    const auto ex = exact_entries(d);
    const std::size_t n = d + 1;
    SymMatrix<Extended> A(n, "2 pi^2 N"), B(n, "pi^2 D");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        A.set(i, j, 2 * to_extended(ex.N[i][j]));
        B.set(i, j, to_extended(ex.D[i][j]));
      }
    const auto g = eig_gen_min(A, B, Extended("1e-35"));
    std::vector<Extended> v = g.vector;
    if (v[0] != 0)
      for (auto& x : v) x /= g.vector[0];
    sol.rayleigh = (A.quadform(v) / B.quadform(v)).convert_to<double>();
    sol.bound = g.lambda.convert_to<double>();
    for (const auto& x : v) a.push_back(x.convert_to<double>());
  } else {
    const auto m = assemble_ND(d, tol, DPath::quadrature);
    const auto A = m.N.scaled(2.0);
    const auto g = eig_gen_min(A, m.D, 1e-10);
    a = g.vector;
    if (a[0] != 0.0)
      for (auto& x : a) x /= g.vector[0];
    sol.rayleigh = A.quadform(a) / m.D.quadform(a);
    sol.bound = g.lambda;
    sol.max_err_est = m.max_err_est;
    sol.n_evals = m.n_evals;
  }
  sol.coeffs = a;
  sol.h = poly_combination(a, "h[poly d=" + std::to_string(d) + "]");
  return sol;
}

Rational certify_d2_exact() {
  const auto ex = exact_entries(2);
  const std::vector<Rational> a{Rational(1), Rational(0), Rational(-9, 5)};
  return 2 * rational_quadform(a, ex.N) / rational_quadform(a, ex.D);
}

} // namespace bandlimit
