#include "bandlimit/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>

namespace bandlimit {
namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// Kronrod 15-point abscissae and weights with the embedded Gauss 7-point
// weights (QUADPACK qk15).
constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
  double resabs = 0.0;
  bool operator<(const Panel& o) const { return err < o.err; }
};

Panel gk15(const RealFn& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> fv1{}, fv2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * xgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += wgk[j] * (f1 + f2);
    resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
  }
  const double reskh = resk * 0.5;
  double resasc = wgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += wgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * resabs, err);
  p.err = err;
  p.resabs = resabs;
  return p;
}

// Global adaptive bisection over an initial panel list. Panels whose error
// is already at roundoff level are never split again.
QuadResult adaptive(const RealFn& f, const std::vector<double>& edges,
                    double tol, int max_subdivisions) {
  QuadResult out;
  long evals = 0;
  auto counted = [&](double x) {
    ++evals;
    return f(x);
  };
  const RealFn g = counted;

  std::priority_queue<Panel> open;
  double value = 0.0;
  double err = 0.0;
  double settled_value = 0.0;
  double settled_err = 0.0;
  auto push = [&](const Panel& p) {
    if (p.err <= 50.0 * eps * p.resabs || p.b - p.a <= 1e3 * eps * std::abs(p.a)) {
      settled_value += p.value;
      settled_err += p.err;
    } else {
      open.push(p);
      value += p.value;
      err += p.err;
    }
  };
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    push(gk15(g, edges[i], edges[i + 1]));

  int splits = 0;
  while (!open.empty() && err + settled_err > tol) {
    if (splits >= max_subdivisions) break;
    Panel worst = open.top();
    open.pop();
    value -= worst.value;
    err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    push(gk15(g, worst.a, mid));
    push(gk15(g, mid, worst.b));
    ++splits;
    // Running sums drift; refresh from the queue now and then.
    if (splits % 4096 == 0) {
      auto copy = open;
      value = 0.0;
      err = 0.0;
      while (!copy.empty()) {
        value += copy.top().value;
        err += copy.top().err;
        copy.pop();
      }
    }
  }
  err = std::max(err, 0.0);
  out.value = value + settled_value;
  out.err_est = err + settled_err;
  out.n_evals = evals;
  out.subdivisions = splits;
  if (out.err_est > tol) {
    // Accept a result whose only obstacle is roundoff in the settled panels.
    if (err > tol || settled_err > std::max(tol, 1e3 * eps * std::abs(out.value))) {
      std::ostringstream msg;
      msg << "quadrature accuracy not reached on [" << edges.front() << ", "
          << edges.back() << "]: err_est " << out.err_est << " > tol " << tol
          << " after " << splits << " subdivisions";
      throw QuadratureError(msg.str());
    }
  }
  return out;
}

std::vector<double> make_edges(double a, double b, std::vector<double> extra) {
  std::vector<double> edges{a, b};
  for (double x : extra)
    if (x > a && x < b) edges.push_back(x);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

// Edges at every half-integer strictly inside (a, b).
std::vector<double> lattice_edges(double a, double b) {
  std::vector<double> edges{a};
  double x = std::floor(2.0 * a) / 2.0 + 0.5;
  for (; x < b; x += 0.5)
    if (x > a) edges.push_back(x);
  edges.push_back(b);
  return edges;
}

} // namespace

double one_sided_tail_bound(const DecayDeclaration& decay, double X) {
  const double p = decay.exponent;
  return decay.coefficient / ((p - 1.0) * std::pow(X, p - 1.0));
}

QuadResult integrate_finite(const RealFn& f, double a, double b, double tol,
                            const FiniteOptions& options) {
  if (!(a < b)) throw DomainError("integrate_finite: need a < b");
  if (!(tol > 0.0)) throw DomainError("integrate_finite: need tol > 0");
  return adaptive(f, make_edges(a, b, options.breakpoints), tol,
                  options.max_subdivisions);
}

QuadResult combine(const QuadResult& a, const QuadResult& b, double sign) {
  QuadResult r;
  r.value = a.value + sign * b.value;
  r.err_est = a.err_est + b.err_est;
  r.n_evals = a.n_evals + b.n_evals;
  r.tail_bound = a.tail_bound + b.tail_bound;
  r.subdivisions = a.subdivisions + b.subdivisions;
  r.tail_extrapolated = a.tail_extrapolated || b.tail_extrapolated;
  return r;
}

QuadResult integrate_halfline(const RealFn& f, double a, int direction,
                              const DecayDeclaration& decay, double tol,
                              TailMode mode) {
  if (!(decay.exponent > 1.0))
    throw DomainError("decay exponent must exceed 1 for an integrable tail");
  if (!(decay.coefficient >= 0.0) || !(decay.period > 0.0))
    throw DomainError("invalid decay declaration");
  if (!(tol > 0.0)) throw DomainError("integrate_halfline: need tol > 0");

  // Work on [start, inf) of g.
  const double start = direction >= 0 ? a : -a;
  const RealFn g = direction >= 0 ? f : RealFn([&f](double x) { return f(-x); });

  const double period = decay.period;
  double X = std::max({decay.x0, start + period, 8.0 * period});
  X = std::ceil(X / period) * period;

  constexpr int max_levels = 22;
  constexpr int max_order = 6;
  std::vector<std::vector<double>> rich;
  QuadResult acc;
  double lo = start;
  double prev_estimate = 0.0;
  double prev_spread = std::numeric_limits<double>::infinity();

  // Lattice extent is capped so a hopeless tolerance fails in bounded time.
  const double x_max = std::max(131072.0, 256.0 * X);
  for (int k = 0; k < max_levels && X <= x_max; ++k) {
    const double level_tol = tol / (4.0 * (k + 1) * (k + 1));
    QuadResult piece = adaptive(g, lattice_edges(lo, X), level_tol, 200000);
    acc = combine(acc, piece);
    lo = X;

    if (mode != TailMode::extrapolate && X >= decay.x0) {
      const double bound = one_sided_tail_bound(decay, X);
      if (bound <= 0.5 * tol) {
        acc.tail_bound = bound;
        acc.tail_extrapolated = false;
        return acc;
      }
    }
    if (mode != TailMode::bound) {
      std::vector<double> row{acc.value};
      const int order = std::min(k, max_order);
      for (int m = 1; m <= order; ++m) {
        const double q = decay.exponent - 1.0 + (m - 1);
        const double ratio = std::pow(2.0, q) - 1.0;
        row.push_back(row[m - 1] + (row[m - 1] - rich.back()[m - 1]) / ratio);
      }
      rich.push_back(row);
      const double estimate = row.back();
      if (k >= 2) {
        const double spread = std::abs(estimate - prev_estimate);
        if (spread <= 0.5 * tol && prev_spread <= 4.0 * tol && k >= 3) {
          QuadResult r = acc;
          r.value = estimate;
          r.tail_bound = spread;
          r.tail_extrapolated = true;
          return r;
        }
        prev_spread = spread;
      }
      prev_estimate = estimate;
    }
    X *= 2.0;
  }
  std::ostringstream msg;
  msg << "half-line tail did not converge to tol " << tol << " (X reached "
      << X / 2.0 << ")";
  throw QuadratureError(msg.str());
}

QuadResult integrate_line(const RealFn& f, const DecayDeclaration& decay,
                          double tol, TailMode mode) {
  QuadResult left = integrate_halfline(f, 0.0, -1, decay, 0.5 * tol, mode);
  QuadResult right = integrate_halfline(f, 0.0, +1, decay, 0.5 * tol, mode);
  return combine(left, right);
}

double brent_root(const RealFn& f, double a, double b, double tol) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) throw DomainError("brent_root: root is not bracketed");
  double c = a, fc = fa, d = b - a, e = d;
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

std::vector<double> find_roots(const RealFn& f, double a, double b, int grid,
                               double tol) {
  if (!(a < b) || grid < 1) throw DomainError("find_roots: bad interval or grid");
  std::vector<double> roots;
  const double h = (b - a) / grid;
  double x_prev = a;
  double f_prev = f(a);
  if (f_prev == 0.0) roots.push_back(a);
  for (int i = 1; i <= grid; ++i) {
    const double x = i == grid ? b : a + i * h;
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && (f_prev < 0.0) != (fx < 0.0)) {
      roots.push_back(brent_root(f, x_prev, x, tol));
    }
    x_prev = x;
    f_prev = fx;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [tol](double u, double v) { return std::abs(u - v) <= tol; }),
              roots.end());
  return roots;
}

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    long double dp = 0.0L;
    for (int it2 = 0; it2 < 100; ++it2) {
      long double p0 = 1.0L, p1 = 0.0L;
      for (int j = 1; j <= n; ++j) {
        const long double p2 = p1;
        p1 = p0;
        p0 = ((2.0L * j - 1.0L) * z * p1 - (j - 1.0L) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0L);
      const long double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-19L) break;
    }
    rule.nodes[i] = -static_cast<double>(z);
    rule.nodes[n - 1 - i] = static_cast<double>(z);
    const long double w = 2.0L / ((1.0L - z * z) * dp * dp);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

} // namespace bandlimit
