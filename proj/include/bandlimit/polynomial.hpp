#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace bandlimit {

// Dense polynomial c[0] + c[1] x + ... + c[n] x^n over any field-like T
// (double, Extended, Rational).
template <class T> class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> c) : coeffs_(c) { trim(); }
  explicit Polynomial(std::vector<T> c) : coeffs_(std::move(c)) { trim(); }

  static Polynomial monomial(std::size_t n, T scale = T(1)) {
    std::vector<T> c(n + 1, T(0));
    c[n] = scale;
    return Polynomial(std::move(c));
  }

  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const {
    return coeffs_.empty() ? 0 : coeffs_.size() - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  template <class X> X operator()(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + X(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      c[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(c));
  }

  // Antiderivative vanishing at 0.
  Polynomial antiderivative() const {
    std::vector<T> c(coeffs_.size() + 1, T(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      c[i + 1] = coeffs_[i] / T(static_cast<long>(i + 1));
    return Polynomial(std::move(c));
  }

  T integrate(const T& a, const T& b) const {
    auto F = antiderivative();
    return F(b) - F(a);
  }

  // p(x + shift), by Horner on the shifted variable.
  Polynomial compose_shift(const T& shift) const {
    Polynomial acc;
    const Polynomial lin{shift, T(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * lin + Polynomial{*it};
    return acc;
  }

  // p(s x)
  Polynomial scale_argument(const T& s) const {
    std::vector<T> c = coeffs_;
    T f(1);
    for (auto& v : c) {
      v *= f;
      f *= s;
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b * T(-1);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const T& s) {
    std::vector<T> c = a.coeffs_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  template <class U> Polynomial<U> cast() const {
    std::vector<U> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(static_cast<U>(v));
    return Polynomial<U>(std::move(c));
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using PolyCoeffs = Polynomial<double>;

} // namespace bandlimit
