#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bandlimit/numeric.hpp"

namespace bandlimit {

// Dense symmetric matrix, lower triangle packed row by row.
template <class T> class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim, std::string provenance = "")
      : dim_(dim), data_(dim * (dim + 1) / 2, T(0)), provenance_(std::move(provenance)) {
    if (dim == 0) throw DomainError("SymMatrix: dim must be >= 1");
  }

  std::size_t dim() const { return dim_; }
  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  T operator()(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
  void set(std::size_t i, std::size_t j, const T& v) { data_[index(i, j)] = v; }

  // Frobenius norm.
  T norm() const {
    using std::sqrt;
    T s(0);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const T v = (*this)(i, j);
        s += (i == j ? T(1) : T(2)) * v * v;
      }
    return sqrt(s);
  }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

  std::vector<T> multiply(const std::vector<T>& v) const {
    std::vector<T> out(dim_, T(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  T quadform(const std::vector<T>& v) const {
    const auto w = multiply(v);
    T s(0);
    for (std::size_t i = 0; i < dim_; ++i) s += v[i] * w[i];
    return s;
  }

  SymMatrix scaled(const T& c) const {
    SymMatrix out = *this;
    for (auto& v : out.data_) v *= c;
    return out;
  }

  template <class U> SymMatrix<U> cast() const {
    SymMatrix<U> out(dim_, provenance_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j <= i; ++j) out.set(i, j, static_cast<U>((*this)(i, j)));
    return out;
  }

private:
  static std::size_t tri(std::size_t i, std::size_t j) { return i * (i + 1) / 2 + j; }
  std::size_t index(std::size_t i, std::size_t j) const {
    return i >= j ? tri(i, j) : tri(j, i);
  }

  std::size_t dim_ = 0;
  std::vector<T> data_;
  std::string provenance_;
};

template <class T> struct EigenPair {
  T value;
  std::vector<T> vector; // unit length
};

template <class T> struct EigenSystem {
  std::vector<EigenPair<T>> pairs; // descending |value|, positive first on ties
  int sweeps = 0;
  T max_residual = T(0); // max ||A v - lambda v|| / ||A||
};

namespace detail {

template <class T> T default_eps() {
  return std::numeric_limits<T>::epsilon();
}

template <class T> void flip_to_gauge(std::vector<T>& v) {
  using std::abs;
  for (const auto& x : v) {
    if (x != T(0)) {
      if (x < T(0))
        for (auto& y : v) y = -y;
      return;
    }
  }
}

} // namespace detail

// Cyclic Jacobi with the Rutishauser threshold strategy. Throws EigenError
// if 64 sweeps are not enough or a residual exceeds tol * ||A||.
template <class T>
EigenSystem<T> eig_sym(const SymMatrix<T>& A, const T& tol) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = A.dim();
  std::vector<T> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = A(i, j);
  std::vector<T> v(n * n, T(0)); // column k of v is eigenvector k, stored as row k
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = T(1);

  const T eps = detail::default_eps<T>();
  const T anorm = A.norm();
  constexpr int max_sweeps = 64;
  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    T off(0);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (sqrt(off) <= eps * anorm || off == T(0)) break;
    const T threshold = sweep < 3 ? T(0.2) * sqrt(off) / T(static_cast<long>(n * n)) : T(0);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        T& apq = a[p * n + q];
        const T g = T(100) * abs(apq);
        const T app = a[p * n + p];
        const T aqq = a[q * n + q];
        if (sweep > 3 && abs(app) + g == abs(app) && abs(aqq) + g == abs(aqq)) {
          apq = T(0);
          a[q * n + p] = T(0);
          continue;
        }
        if (abs(apq) <= threshold || apq == T(0)) continue;
        const T h = aqq - app;
        T t;
        if (abs(h) + g == abs(h)) {
          t = apq / h;
        } else {
          const T theta = T(0.5) * h / apq;
          t = T(1) / (abs(theta) + sqrt(T(1) + theta * theta));
          if (theta < T(0)) t = -t;
        }
        const T c = T(1) / sqrt(T(1) + t * t);
        const T s = t * c;
        const T tau = s / (T(1) + c);
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        apq = T(0);
        a[q * n + p] = T(0);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const T arp = a[r * n + p];
          const T arq = a[r * n + q];
          const T np = arp - s * (arq + tau * arp);
          const T nq = arq + s * (arp - tau * arq);
          a[r * n + p] = np;
          a[p * n + r] = np;
          a[r * n + q] = nq;
          a[q * n + r] = nq;
        }
        T* vp = &v[p * n];
        T* vq = &v[q * n];
        for (std::size_t r = 0; r < n; ++r) {
          const T x = vp[r];
          const T y = vq[r];
          vp[r] = x - s * (y + tau * x);
          vq[r] = y + s * (x - tau * y);
        }
      }
    }
  }
  if (sweep == max_sweeps) throw EigenError("eig_sym: Jacobi did not converge in 64 sweeps");

  EigenSystem<T> out;
  out.sweeps = sweep;
  out.pairs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    EigenPair<T> pr{a[k * n + k], std::vector<T>(v.begin() + k * n, v.begin() + (k + 1) * n)};
    T nrm(0);
    for (const auto& x : pr.vector) nrm += x * x;
    nrm = sqrt(nrm);
    for (auto& x : pr.vector) x /= nrm;
    detail::flip_to_gauge(pr.vector);
    out.pairs.push_back(std::move(pr));
  }
  const T tie = tol * (anorm > T(0) ? anorm : T(1));
  std::stable_sort(out.pairs.begin(), out.pairs.end(), [&](const auto& x, const auto& y) {
    const T ax = abs(x.value), ay = abs(y.value);
    if (abs(ax - ay) <= tie) return x.value > y.value;
    return ax > ay;
  });

  const T scale = anorm > T(0) ? anorm : T(1);
  for (const auto& pr : out.pairs) {
    auto w = A.multiply(pr.vector);
    T r(0);
    for (std::size_t i = 0; i < n; ++i) {
      const T d = w[i] - pr.value * pr.vector[i];
      r += d * d;
    }
    r = sqrt(r) / scale;
    if (r > out.max_residual) out.max_residual = r;
  }
  if (out.max_residual > tol)
    throw EigenError("eig_sym: residual above tolerance");
  return out;
}

template <class T> struct GeneralizedMin {
  T lambda;
  std::vector<T> vector; // unit length, first nonzero coordinate positive
};

// Lower Cholesky factor of B, row-major n x n. Throws EigenError unless B is
// numerically positive definite.
template <class T> std::vector<T> cholesky(const SymMatrix<T>& B) {
  using std::sqrt;
  const std::size_t n = B.dim();
  std::vector<T> L(n * n, T(0));
  for (std::size_t j = 0; j < n; ++j) {
    T d = B(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= L[j * n + k] * L[j * n + k];
    if (!(d > T(0))) throw EigenError("cholesky: matrix is not positive definite");
    const T ljj = sqrt(d);
    L[j * n + j] = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      T s = B(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= L[i * n + k] * L[j * n + k];
      L[i * n + j] = s / ljj;
    }
  }
  return L;
}

// min over a != 0 of a'Aa / a'Ba via B = L L', eig_sym(L^-1 A L^-T).
template <class T>
GeneralizedMin<T> eig_gen_min(const SymMatrix<T>& A, const SymMatrix<T>& B, const T& tol) {
  using std::sqrt;
  const std::size_t n = A.dim();
  if (B.dim() != n) throw DomainError("eig_gen_min: dimension mismatch");
  const auto L = cholesky(B);

  // X = L^-1 A (forward substitution per column), then C = X L^-T.
  std::vector<T> X(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      T s = A(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= L[i * n + k] * X[k * n + c];
      X[i * n + c] = s / L[i * n + i];
    }
  SymMatrix<T> C(n, "L^-1 A L^-T");
  std::vector<T> row(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) {
      T s = X[r * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= L[j * n + k] * row[k];
      row[j] = s / L[j * n + j];
    }
    // only the lower triangle is kept; C is symmetric up to rounding
    for (std::size_t j = 0; j <= r; ++j) C.set(r, j, row[j]);
  }

  const auto sys = eig_sym(C, tol);
  const auto best = std::min_element(sys.pairs.begin(), sys.pairs.end(),
                                     [](const auto& x, const auto& y) { return x.value < y.value; });
  // a = L^-T y
  std::vector<T> a(n);
  for (std::size_t ii = n; ii-- > 0;) {
    T s = best->vector[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= L[k * n + ii] * a[k];
    a[ii] = s / L[ii * n + ii];
  }
  T nrm(0);
  for (const auto& x : a) nrm += x * x;
  nrm = sqrt(nrm);
  for (auto& x : a) x /= nrm;
  detail::flip_to_gauge(a);
  return {best->value, std::move(a)};
}

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact a' M a.
Rational rational_quadform(const std::vector<Rational>& a, const RationalMatrix& M);

} // namespace bandlimit
