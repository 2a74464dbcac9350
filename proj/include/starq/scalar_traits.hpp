#pragma once

#include <complex>

#include "starq/exact.hpp"

namespace starq {

template <class R>
struct scalar_traits;

template <>
struct scalar_traits<ExactScalar> {
  static constexpr bool exact = true;
  static ExactScalar zero() { return ExactScalar::zero(); }
  static ExactScalar one() { return ExactScalar::one(); }
  static ExactScalar from_rational(long num, long den = 1) { return ExactScalar::rational(num, den); }
  static ExactScalar conj(const ExactScalar& a) { return a.conj(); }
  static bool is_zero(const ExactScalar& a) { return a.is_zero(); }
  static double abs(const ExactScalar& a) { return std::abs(a.to_complex(1.0, 1.0)); }
  static ExactScalar inverse(const ExactScalar& a) { return a.inverse(); }
};

template <>
struct scalar_traits<std::complex<double>> {
  static constexpr bool exact = false;
  static std::complex<double> zero() { return {0.0, 0.0}; }
  static std::complex<double> one() { return {1.0, 0.0}; }
  static std::complex<double> from_rational(long num, long den = 1) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static std::complex<double> conj(const std::complex<double>& a) { return std::conj(a); }
  static bool is_zero(const std::complex<double>& a) { return a == std::complex<double>{0.0, 0.0}; }
  static double abs(const std::complex<double>& a) { return std::abs(a); }
  static std::complex<double> inverse(const std::complex<double>& a) {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return 1.0 / a;
  }
};

inline int compare(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real() ? -1 : 1;
  if (a.imag() != b.imag()) return a.imag() < b.imag() ? -1 : 1;
  return 0;
}

}  // namespace starq
