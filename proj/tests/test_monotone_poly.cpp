#include <doctest.h>

#include <cmath>
#include <random>

#include "bandlimit/monotone_poly.hpp"
#include "bandlimit/represent.hpp"
#include "bandlimit/run.hpp"

using namespace bandlimit;
using doctest::Approx;

TEST_CASE("basis values at the origin") {
  CHECK(basis_eval(0, 0.0) == Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(basis_eval(2, 0.0) == Approx(1.0 / 120.0).epsilon(1e-15));
  for (int i : {1, 3, 7}) CHECK(basis_eval(i, 0.0) == 0.0);
  CHECK(basis_profile_exact(1) == Polynomial<Rational>{Rational(0), Rational(1, 4), Rational(0), Rational(-1)});
}

TEST_CASE("odd basis members are odd, even members even") {
  for (int i = 0; i <= 6; ++i)
    for (double x : {0.3, 1.7, 9.2}) {
      const double s = (i % 2 == 0) ? 1.0 : -1.0;
      CHECK(basis_eval(i, -x) == Approx(s * basis_eval(i, x)).epsilon(1e-14).scale(1e-16));
    }
}

TEST_CASE("exact entries") {
  const auto e = exact_entries(4);
  CHECK(e.N[0][0] == Rational(1, 12));
  CHECK(e.D[0][0] == Rational(1, 8));
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      CHECK(e.N[i][j] == e.N[j][i]);
      CHECK(e.D[i][j] == e.D[j][i]);
      if ((i + j) % 2 == 1) {
        CHECK(e.N[i][j] == 0);
        CHECK(e.D[i][j] == 0);
      }
    }
}

TEST_CASE("quadrature D agrees with the exact entries") {
  const auto q = assemble_ND(6, 1e-12, DPath::quadrature);
  const auto x = assemble_ND(6, 1e-12, DPath::exact);
  CHECK(x.N(0, 0) == Approx(1.0 / (12 * pi * pi)).epsilon(1e-15));
  CHECK(q.D(0, 0) == Approx(1.0 / (8 * pi * pi)).epsilon(1e-10));
  CHECK(q.N(1, 0) == 0.0);
  CHECK(q.D(1, 0) == 0.0);
  for (std::size_t i = 0; i <= 6; ++i)
    for (std::size_t j = 0; j <= i; ++j) CHECK(std::abs(q.D(i, j) - x.D(i, j)) < 1e-11);
  CHECK(q.n_evals > 0);
  CHECK(q.max_err_est < 1e-9);
  // positive definite
  CHECK_NOTHROW(cholesky(q.N));
  CHECK_NOTHROW(cholesky(q.D));
}

TEST_CASE("time-domain second moment equals the Fourier-side form") {
  const auto nd = assemble_ND(4, 1e-12, DPath::exact);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int draw = 0; draw < 4; ++draw) {
    std::vector<double> a(5);
    for (auto& v : a) v = u(rng);
    a[1] = a[3] = 0.0; // real combinations use even members
    const auto h = poly_combination(a);
    const auto d = decay_of_moment(h, 2);
    const auto r = integrate_line([&](double x) { return x * x * h(x) * h(x); }, d, 1e-12,
                                  TailMode::extrapolate);
    CHECK(r.value == Approx(nd.N.quadform(a)).epsilon(1e-8));
  }
}

TEST_CASE("certificate at degree 2") {
  const Rational c = certify_d2_exact();
  CHECK(c == Rational(49484, 38745));
  CHECK(gcd(numerator(c), denominator(c)) == 1);
  const auto s = solve_poly(2, 1e-12);
  CHECK(std::abs(to_double(c) - s.bound) < 1e-8);
  CHECK(s.coeffs[0] == 1.0);
  CHECK(s.coeffs[2] == Approx(-1.8006622589170012).epsilon(1e-10));
}

TEST_CASE("table bounds, Rayleigh consistency and nestedness") {
  double prev = 1e300;
  for (const auto& row : golden_poly_bounds()) {
    const auto s = solve_poly(row.d, 1e-12);
    CHECK(s.d == row.d);
    CHECK(std::abs(s.bound - row.bound) < 1e-8);
    CHECK(std::abs(s.rayleigh - s.bound) < 1e-10);
    CHECK(s.bound > 1.0);
    CHECK(s.bound <= prev + 1e-12);
    prev = s.bound;
  }
}

TEST_CASE("bound is scale invariant in the coefficients") {
  const auto nd = assemble_ND(8, 1e-12, DPath::exact);
  const auto s = solve_poly(8, 1e-12);
  auto q = [&](const std::vector<double>& a) { return 2 * nd.N.quadform(a) / nd.D.quadform(a); };
  std::vector<double> c = s.coeffs;
  for (auto& v : c) v *= -3.7;
  CHECK(q(c) == Approx(q(s.coeffs)).epsilon(1e-12));
  CHECK(q(s.coeffs) == Approx(s.bound).epsilon(1e-10));
}

TEST_CASE("quadrature path reproduces the exact path") {
  const auto q = solve_poly(6, 1e-12, DPath::quadrature);
  const auto x = solve_poly(6, 1e-12, DPath::exact);
  CHECK(std::abs(q.bound - x.bound) < 1e-9);
}

TEST_CASE("reconstructed h carries the bound") {
  const auto s = solve_poly(4, 1e-12);
  CHECK(quotient(s.h, 1e-12).value == Approx(s.bound).epsilon(1e-9));
}

TEST_CASE("degree caps") {
  CHECK_THROWS_AS(solve_poly(max_poly_degree + 1, 1e-10), DomainError);
  CHECK_THROWS_AS(assemble_ND(-1, 1e-10), DomainError);
}
