#include "bandlimit/sharp_ineq.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace bandlimit {
namespace {

double derivative_bound(const PolyCoeffs& p) {
  // sup over [0, 1] of |P'| <= sum k |a_k|
  double L = 0.0;
  const auto& c = p.coeffs();
  for (std::size_t k = 1; k < c.size(); ++k) L += k * std::abs(c[k]);
  return L;
}

// Lower bound for P on [a, b] from endpoint values and the Lipschitz bound,
// splitting until positive or hopeless.
double certify_interval(const PolyCoeffs& p, double L, double a, double b, double pa,
                        double pb, int depth) {
  const double lower = 0.5 * (pa + pb) - 0.5 * L * (b - a);
  if (lower > 0.0) return lower;
  if (std::min(pa, pb) <= 0.0 || depth > 40) return std::min({pa, pb, lower});
  const double m = 0.5 * (a + b);
  const double pm = p(m);
  return std::min(certify_interval(p, L, a, m, pa, pm, depth + 1),
                  certify_interval(p, L, m, b, pm, pb, depth + 1));
}

FourierProfile chi_profile_check(const FourierProfile& f) {
  if (!(f.half_width > 0.0) || f.half_width > 0.5 + 1e-15)
    throw DomainError("profile must be supported in [-1/2, 1/2]");
  return f;
}

std::vector<double> oscillation_breaks(double freq, double a, double b) {
  // zeros of cos(pi freq t) on (a, b)
  std::vector<double> out;
  const double w = std::abs(freq);
  if (w < 1e-12) return out;
  for (double t = 0.5 / w; t < b && out.size() < 100000; t += 1.0 / w)
    if (t > a) out.push_back(t);
  return out;
}

} // namespace

double certify_positive(const PolyCoeffs& p) {
  constexpr int n = 10000;
  const double L = derivative_bound(p);
  double lower = std::numeric_limits<double>::infinity();
  double prev = p(0.0);
  for (int k = 1; k <= n; ++k) {
    const double x1 = static_cast<double>(k) / n;
    const double cur = p(x1);
    lower = std::min(lower, certify_interval(p, L, x1 - 1.0 / n, x1, prev, cur, 0));
    if (lower <= 0.0) return lower;
    prev = cur;
  }
  return lower;
}

WeightPoly::WeightPoly(std::vector<double> coeffs) : poly_(std::move(coeffs)) {
  min_ = certify_positive(poly_);
  if (!(min_ > 0.0))
    throw DomainError("weight polynomial is not positive on [0, 1]");
}

WeightPoly WeightPoly::scaled(double c) const {
  auto v = coeffs();
  for (auto& x : v) x *= c;
  return WeightPoly(std::move(v));
}

PWFunction::PWFunction(FourierProfile profile) : profile_(chi_profile_check(profile)) {
  if (profile_.poly) {
    transform_ = std::make_shared<const PolyTransform>(*profile_.poly);
    g0_ = (*transform_)(0.0).real();
  } else {
    g0_ = integrate_finite(profile_.eval, -profile_.half_width, profile_.half_width, 1e-13).value;
  }
}

PWFunction PWFunction::from_polynomial(const PolyCoeffs& q) {
  return PWFunction(FourierProfile::from_polynomial(q, 0.5, "poly"));
}

std::complex<double> PWFunction::operator()(double x, double tol) const {
  if (transform_ && profile_.half_width == 0.5) return (*transform_)(x);
  const double w = profile_.half_width;
  const auto breaks = oscillation_breaks(2.0 * x, -w, w);
  FiniteOptions opt{breaks, 200000};
  const double re = integrate_finite(
                        [&](double t) { return profile_(t) * cos_pi(2.0 * x * t); }, -w, w,
                        tol, opt)
                        .value;
  const double im = integrate_finite(
                        [&](double t) { return profile_(t) * sin_pi(2.0 * x * t); }, -w, w,
                        tol, opt)
                        .value;
  return {re, im};
}

PWFunction PWFunction::normalized() const {
  if (g0_ == 0.0) throw DomainError("profile integrates to 0; cannot normalize g(0) = 1");
  const double s = 1.0 / g0_;
  FourierProfile p = profile_;
  const auto inner = profile_.eval;
  p.eval = [inner, s](double t) { return s * inner(t); };
  if (p.poly) p.poly = *p.poly * s;
  return PWFunction(std::move(p));
}

double sharp_constant(const WeightPoly& P, double tol) {
  const RealFn w = [&](double t) { return 1.0 / P(t * t); };
  // error in 1/I is about dI / I^2
  const double rough = integrate_finite(w, 0.0, 1.0, 1e-6 / P.min_on_unit()).value;
  const double itol = std::max(0.1 * tol * rough * rough, 1e-15 * rough);
  return 1.0 / integrate_finite(w, 0.0, 1.0, itol).value;
}

double extremal_g(const WeightPoly& P, double x, double tol) {
  const double C = sharp_constant(P, 0.1 * tol);
  FiniteOptions opt{oscillation_breaks(x, 0.0, 1.0), 200000};
  const auto r = integrate_finite([&](double t) { return cos_pi(x * t) / P(t * t); }, 0.0, 1.0,
                                  0.1 * tol / C, opt);
  return C * r.value;
}

PWFunction extremal_profile(const WeightPoly& P, double tol) {
  const double lambda = sharp_constant(P, tol);
  FourierProfile f;
  f.half_width = 0.5;
  f.kind = ProfileKind::tabulated;
  f.label = "extremal";
  f.eval = [P, lambda](double t) {
    return std::abs(t) <= 0.5 ? lambda / P(4.0 * t * t) : 0.0;
  };
  return PWFunction(std::move(f));
}

double functional(const WeightPoly& P, const PWFunction& g, double tol) {
  const auto& f = g.profile();
  const double w = f.half_width;
  return integrate_finite(
             [&](double t) {
               const double v = f(t);
               return P(4.0 * t * t) * v * v;
             },
             -w, w, tol)
      .value;
}

double time_side_functional(const WeightPoly& P, const PWFunction& g, double tol) {
  const auto& f = g.profile();
  if (!f.poly || f.half_width != 0.5)
    throw DomainError("time_side_functional needs a polynomial profile on [-1/2, 1/2]");
  if (P.degree() > 4) throw DomainError("time_side_functional supports deg P <= 4");
  const auto& a = P.coeffs();
  double total = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (a[n] == 0.0) continue;
    // g^(n) has profile (2 pi i t)^n q(t)
    const PolyTransform T(PolyCoeffs::monomial(n, std::pow(2.0 * pi, n)) * *f.poly);
    const double A = T.envelope_first_order();
    DecayDeclaration decay{2.0, A * A, 1.0, 1.0};
    const double weight = a[n] / std::pow(pi, 2.0 * n);
    const auto r = integrate_line(
        [&](double x) { return std::norm(T(x)); }, decay,
        tol / (a.size() * std::max(1.0, std::abs(weight))), TailMode::extrapolate);
    total += weight * r.value;
  }
  return total;
}

double sobolev_norm(const WeightPoly& P, const PWFunction& g, double tol) {
  return std::sqrt(functional(P, g, tol));
}

double binomial_inequality_check(int N, double sigma, const FourierProfile& f_hat, double tol) {
  if (N < 0 || N > 4) throw DomainError("binomial check supports 0 <= N <= 4");
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  const double limit = sigma / (2.0 * pi);
  if (f_hat.half_width > limit * (1.0 + 1e-12))
    throw DomainError("profile support exceeds [-sigma/2pi, sigma/2pi]");
  const double w = f_hat.half_width;
  const double c = 4.0 * pi * pi / (sigma * sigma);
  return integrate_finite(
             [&](double xi) {
               const double v = f_hat(xi);
               return std::pow(1.0 - c * xi * xi, N) * v * v;
             },
             -w, w, tol)
      .value;
}

double log_corollary_constant(double a) {
  if (!(a > 0.0) || !(a < 1.0 / (pi * pi)))
    throw DomainError("log corollary needs 0 < a < 1/pi^2");
  // (1/(2u)) log((1+u)/(1-u)) = atanh(u)/u with u = pi sqrt(a)
  const double u = pi * std::sqrt(a);
  return u / std::atanh(u);
}

double arctan_corollary_constant(double a) {
  if (!(a > 0.0)) throw DomainError("arctan corollary needs a > 0");
  const double u = pi * std::sqrt(a);
  return u / std::atan(u);
}

PWFunction random_profile(std::uint64_t seed, int max_degree) {
  if (max_degree < 0) throw DomainError("max_degree must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (;;) {
    const int n = deg(rng);
    std::vector<double> c(n + 1);
    for (auto& v : c) v = coef(rng);
    PWFunction g = PWFunction::from_polynomial(PolyCoeffs(c));
    if (std::abs(g.g0()) > 1e-3) return g.normalized();
  }
}

} // namespace bandlimit
