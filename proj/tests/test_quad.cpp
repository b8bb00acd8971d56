#include <doctest.h>

#include <cmath>

#include "bandlimit/quad.hpp"
#include "bandlimit/specfun.hpp"

using namespace bandlimit;
using doctest::Approx;

namespace {
// mpmath, 30 digits
const double h0_zeros[] = {1.5839396590438692, 2.571462013074104,  3.5573117728316987,
                           4.54695249612872,   5.5394863644452874, 6.5339578509648974,
                           7.5297359714047075, 8.5264214528661835, 9.5237571130840305,
                           10.521572257944537};
// (1/4 pi^2) int_I (h0_hat')^2 = 12371 / (42000 * 4 pi^2)
const double x2_h0sq = 12371.0 / (168000.0 * pi * pi);
}

TEST_CASE("finite integrals") {
  const auto r = integrate_finite([](double t) { return t * t; }, 0.0, 1.0, 1e-12);
  CHECK(r.value == Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.err_est >= 0.0);
  CHECK(r.err_est <= 1e-12);
  CHECK(r.tail_bound == 0.0);

  for (int k : {1, 3, 5})
    for (int j : {1, 3, 5}) {
      const auto s = integrate_finite(
          [=](double t) { return std::sin(pi * k * t) * std::sin(pi * j * t); }, -0.5, 0.5,
          1e-12);
      CHECK(s.value == Approx(k == j ? 0.5 : 0.0).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("breakpoints and accuracy failure") {
  FiniteOptions opt;
  opt.breakpoints = {0.3};
  const auto r = integrate_finite([](double t) { return std::abs(t - 0.3); }, 0.0, 1.0, 1e-13, opt);
  CHECK(r.value == Approx(0.045 + 0.245).epsilon(1e-14));

  FiniteOptions tight;
  tight.max_subdivisions = 3;
  CHECK_THROWS_AS(
      integrate_finite([](double t) { return std::sqrt(std::abs(t - 0.123)); }, 0.0, 1.0, 1e-15, tight),
      QuadratureError);
}

TEST_CASE("one-sided tail bound") {
  CHECK(one_sided_tail_bound({3.0, 1.0, 1.0, 1.0}, 1.0) == Approx(0.5));
  CHECK(one_sided_tail_bound({2.0, 2.0, 1.0, 1.0}, 10.0) == Approx(0.2));
}

TEST_CASE("line integrals with trivial values") {
  const DecayDeclaration fejer_decay{2.0, 1.0 / (pi * pi), 1.0, 1.0};
  for (auto mode : {TailMode::extrapolate, TailMode::automatic}) {
    const auto r = integrate_line(fejer, fejer_decay, 1e-10, mode);
    CHECK(r.value == Approx(1.0).epsilon(1e-10));
    CHECK(r.tail_bound >= 0.0);
    CHECK(std::abs(r.value - 1.0) <= r.total_error() + 1e-13);
  }
  // int K^2 = 2/3, decay x^-4 is fast enough for a rigorous tail bound
  const DecayDeclaration sq_decay{4.0, 1.0 / std::pow(pi, 4), 1.0, 1.0};
  const auto sq = integrate_line([](double x) { return fejer(x) * fejer(x); }, sq_decay, 1e-10,
                                 TailMode::bound);
  CHECK(sq.value == Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(!sq.tail_extrapolated);
  CHECK(sq.tail_bound <= 5e-11);

  const auto f = integrate_finite(fejer, -40.0, 40.0, 1e-10);
  const double tails = 2 * one_sided_tail_bound(fejer_decay, 40.0);
  CHECK(std::abs(f.value - 1.0) <= tails);
}

TEST_CASE("second moment of h0 matches its Fourier side") {
  const DecayDeclaration d{2.0, 0.0847 * 0.0847, 1.0, 2.0};
  const auto r = integrate_line([](double x) { return x * x * h0(x) * h0(x); }, d, 1e-11,
                                TailMode::extrapolate);
  CHECK(r.value == Approx(x2_h0sq).epsilon(1e-9));
}

TEST_CASE("halving tol never moves further from the reference") {
  const DecayDeclaration d{4.0, 1.0 / std::pow(pi, 4), 1.0, 1.0};
  const auto k2 = [](double x) { return fejer(x) * fejer(x); };
  double prev = 1.0;
  for (double tol : {1e-6, 5e-7, 2.5e-7, 1.25e-7, 6.25e-8}) {
    const double err = std::abs(integrate_line(k2, d, tol, TailMode::bound).value - 2.0 / 3.0);
    CHECK(err <= prev * (1 + 1e-9) + 1e-15);
    prev = err;
  }
}

TEST_CASE("odd integrand integrates to zero within its error estimate") {
  const DecayDeclaration d{3.0, 1.0 / (pi * pi), 1.0, 1.0};
  const auto r = integrate_line([](double x) { return fejer(x) * std::sin(x) / (1 + x * x); }, d, 1e-10);
  CHECK(std::abs(r.value) <= r.err_est + 1e-15);
}

TEST_CASE("roots") {
  const auto s = find_roots([](double x) { return std::sin(pi * x); }, 0.5, 1.5, 100, 1e-10);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == Approx(1.0).epsilon(1e-10));

  const auto g = find_roots(sinc_pw, 0.5, 3.5, 400, 1e-10);
  REQUIRE(g.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(g[i] == Approx(i + 1.0).epsilon(1e-10));

  const auto z = find_roots([](double x) { return h0(x); }, 1.0, 11.0, 2000, 1e-12);
  REQUIRE(z.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CHECK(z[i] == Approx(h0_zeros[i]).epsilon(1e-11));
    if (i > 0) CHECK(z[i] > z[i - 1]);
    CHECK(h0(z[i] - 1e-10) * h0(z[i] + 1e-10) <= 0.0);
  }

  CHECK(find_roots([](double x) { return 1 + x * x; }, -1.0, 1.0, 50, 1e-10).empty());
  CHECK(brent_root([](double x) { return x * x - 2; }, 0.0, 2.0, 1e-14) ==
        Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("Gauss-Legendre exactness") {
  const auto& g = gauss_legendre(10);
  double s = 0, m = 0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    s += g.weights[i];
    m += g.weights[i] * std::pow(g.nodes[i], 18);
  }
  CHECK(s == Approx(2.0).epsilon(1e-15));
  CHECK(m == Approx(2.0 / 19.0).epsilon(1e-14));
  CHECK(&gauss_legendre(10) == &g);
}

TEST_CASE("combine adds values and errors") {
  QuadResult a{1.0, 1e-9, 10, 1e-10, 1, false};
  QuadResult b{0.5, 2e-9, 20, 0.0, 2, true};
  const auto c = combine(a, b, -1.0);
  CHECK(c.value == Approx(0.5));
  CHECK(c.err_est == Approx(3e-9));
  CHECK(c.n_evals == 30);
  CHECK(c.tail_extrapolated);
}
