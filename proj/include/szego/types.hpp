#pragma once

#include <complex>
#include <cstddef>
#include <type_traits>

#include <gmpxx.h>

namespace szego {

using Index = std::size_t;
using Complex = std::complex<double>;
using Rational = mpq_class;

/// Real counterpart of a kernel scalar: double for complex kernels, the
/// rational itself for exact kernels.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  using Real = double;
  static Complex conj(const Complex& v) { return std::conj(v); }
  static double real(const Complex& v) { return v.real(); }
  static double magnitude(const Complex& v) { return std::abs(v); }
  static bool is_zero(const Complex& v) { return v == Complex{}; }
};

template <>
struct ScalarTraits<Rational> {
  using Real = Rational;
  static Rational conj(const Rational& v) { return v; }
  static Rational real(const Rational& v) { return v; }
  static Rational magnitude(const Rational& v) { return abs(v); }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
};

template <class T>
using RealOf = typename ScalarTraits<T>::Real;

}  // namespace szego
