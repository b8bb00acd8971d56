#include <doctest.h>

#include <cmath>
#include <random>

#include "bandlimit/eigen.hpp"
#include "bandlimit/monotone_l2.hpp"
#include "bandlimit/monotone_poly.hpp"

using namespace bandlimit;
using doctest::Approx;

namespace {

SymMatrix<double> random_sym(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymMatrix<double> A(n, "random");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) A.set(i, j, u(rng));
  return A;
}

SymMatrix<double> diag(std::initializer_list<double> d) {
  SymMatrix<double> A(d.size());
  std::size_t i = 0;
  for (double v : d) A.set(i, i, v), ++i;
  return A;
}

} // namespace

TEST_CASE("SymMatrix storage") {
  SymMatrix<double> A(3, "test");
  A.set(0, 2, 5.0);
  CHECK(A(2, 0) == 5.0);
  CHECK(A.provenance() == "test");
  CHECK_THROWS_AS(SymMatrix<double>(0), DomainError);
}

TEST_CASE("eig_sym on small analytic cases") {
  const auto I = eig_sym(diag({1.0, 1.0}), 1e-14);
  CHECK(I.pairs[0].value == Approx(1.0));
  CHECK(I.pairs[1].value == Approx(1.0));

  SymMatrix<double> A(2);
  A.set(0, 0, 2.0);
  A.set(1, 1, 2.0);
  A.set(1, 0, 1.0);
  const auto s = eig_sym(A, 1e-14);
  CHECK(s.pairs[0].value == Approx(3.0).epsilon(1e-15));
  CHECK(s.pairs[1].value == Approx(1.0).epsilon(1e-15));
  CHECK(s.pairs[0].vector[0] > 0.0);
  CHECK(std::abs(s.pairs[0].vector[0]) == Approx(std::sqrt(0.5)).epsilon(1e-14));
}

TEST_CASE("ties in absolute value prefer the positive eigenvalue") {
  const auto s = eig_sym(diag({-2.0, 1.0, 2.0}), 1e-14);
  CHECK(s.pairs[0].value == 2.0);
  CHECK(s.pairs[1].value == -2.0);
  CHECK(s.pairs[2].value == 1.0);
}

TEST_CASE("eig_sym invariants on random matrices") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto A = random_sym(25, seed);
    const double tol = 1e-12;
    const auto s = eig_sym(A, tol);
    REQUIRE(s.pairs.size() == 25);
    double sum = 0;
    for (const auto& p : s.pairs) sum += p.value;
    CHECK(std::abs(sum - A.trace()) <= tol * 25 * A.norm());
    CHECK(s.max_residual <= tol);
    for (std::size_t i = 1; i < s.pairs.size(); ++i)
      CHECK(std::abs(s.pairs[i].value) <= std::abs(s.pairs[i - 1].value));
    for (std::size_t i = 0; i < 25; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        double dot = 0;
        for (std::size_t k = 0; k < 25; ++k) dot += s.pairs[i].vector[k] * s.pairs[j].vector[k];
        CHECK(std::abs(dot) <= 1e-12);
      }
  }
}

TEST_CASE("eig_sym in extended precision") {
  SymMatrix<Extended> A(3);
  A.set(0, 0, Extended(2));
  A.set(1, 1, Extended(2));
  A.set(2, 2, Extended(5));
  A.set(1, 0, Extended(1));
  const auto s = eig_sym(A, Extended("1e-40"));
  CHECK(abs(s.pairs[0].value - 5) < Extended("1e-40"));
  CHECK(abs(s.pairs[1].value - 3) < Extended("1e-40"));
  CHECK(abs(s.pairs[2].value - 1) < Extended("1e-40"));
}

TEST_CASE("generalized pencil minimum") {
  const auto B = random_sym(6, 4);
  SymMatrix<double> Bp(6);
  // B' = B B^T + I is positive definite
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = i == j ? 1.0 : 0.0;
      for (std::size_t k = 0; k < 6; ++k) s += B(i, k) * B(j, k);
      Bp.set(i, j, s);
    }
  const auto same = eig_gen_min(Bp, Bp, 1e-13);
  CHECK(same.lambda == Approx(1.0).epsilon(1e-12));

  const auto e = eig_gen_min(diag({1.0, 5.0}), diag({1.0, 1.0}), 1e-14);
  CHECK(e.lambda == Approx(1.0));
  CHECK(e.vector[0] == Approx(1.0));
  CHECK(std::abs(e.vector[1]) < 1e-14);

  const auto A = random_sym(6, 5);
  const auto base = eig_gen_min(A, Bp, 1e-13);
  const auto both = eig_gen_min(A.scaled(3.0), Bp.scaled(3.0), 1e-13);
  const auto one = eig_gen_min(A.scaled(3.0), Bp, 1e-13);
  CHECK(both.lambda == Approx(base.lambda).epsilon(1e-12));
  CHECK(one.lambda == Approx(3.0 * base.lambda).epsilon(1e-12));
  // Rayleigh quotient at the returned vector
  CHECK(A.quadform(base.vector) / Bp.quadform(base.vector) == Approx(base.lambda).epsilon(1e-11));

  CHECK_THROWS_AS(eig_gen_min(A, diag({1.0, -1.0, 1.0, 1.0, 1.0, 1.0}), 1e-12), EigenError);
  CHECK_THROWS_AS(eig_gen_min(A, diag({1.0, 1.0}), 1e-12), DomainError);
}

TEST_CASE("rational quadratic forms are exact") {
  CHECK(rational_quadform({Rational(1)}, {{Rational(1, 3)}}) == Rational(1, 3));
  const RationalMatrix M{{Rational(1), Rational(1, 2)}, {Rational(1, 2), Rational(1)}};
  CHECK(rational_quadform({Rational(1), Rational(2)}, M) == Rational(7));

  const RationalMatrix H{{Rational(1), Rational(1, 2), Rational(1, 3)},
                         {Rational(1, 2), Rational(1, 3), Rational(1, 4)},
                         {Rational(1, 3), Rational(1, 4), Rational(1, 5)}};
  const std::vector<Rational> a{Rational(3, 7), Rational(-2), Rational(5, 11)};
  const Rational q = rational_quadform(a, H);
  CHECK(gcd(numerator(q), denominator(q)) == 1);
  double ref = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ref += to_double(a[i]) * to_double(H[i][j]) * to_double(a[j]);
  CHECK(to_double(q) == Approx(ref).epsilon(1e-12));
}

TEST_CASE("the degree-2 pencil and the 10-mode Q matrix") {
  const auto nd = assemble_ND(2, 1e-12, DPath::exact);
  const auto g = eig_gen_min(nd.N.scaled(2.0), nd.D, 1e-14);
  CHECK(g.lambda == Approx(1.277171240).epsilon(1e-9));

  const auto Q = assemble_Q(10, 1e-12);
  const auto s = eig_sym(Q, 1e-13);
  CHECK(std::abs(s.pairs[0].value) == Approx(1.0 / 1.277199350).epsilon(1e-9));
}
