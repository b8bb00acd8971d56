#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace bandlimit {

/// Software-emulated float with 50 significant decimal digits, used for
/// oracles and for the ill-conditioned polynomial-basis eigenproblem.
using Extended = boost::multiprecision::cpp_bin_float_50;

/// Arbitrary-precision rational, always kept in lowest terms.
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double pi = std::numbers::pi;

// Failures of a numerical method (quadrature accuracy, eigen sweeps).
// The CLI maps these to exit status 3.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class EigenError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// Precondition violations (bad α, even k, non-positive weight...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class T> inline T pi_v() {
  return boost::math::constants::pi<T>();
}
template <> inline double pi_v<double>() { return std::numbers::pi; }
template <> inline long double pi_v<long double>() {
  return std::numbers::pi_v<long double>;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline Extended to_extended(const Rational& r) {
  return Extended(numerator(r)) / Extended(denominator(r));
}

} // namespace bandlimit
