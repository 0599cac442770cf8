#pragma once

// Scalar plumbing shared by the templated kernels. The closed forms are
// evaluated either in double or in IEEE binary128 (boost float128), which
// absorbs the cancellation between the large individual terms that appear
// when Bessel factors are expanded at small arguments.

#include <quadmath.h>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <complex>
#include <limits>

namespace sbi::detail {

using quad = boost::multiprecision::float128;
using complex_quad = boost::multiprecision::complex128;

template <class R>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  using complex = std::complex<double>;
  static double euler() { return 0.57721566490153286061; }
  static double pi() { return boost::math::constants::pi<double>(); }
  static double tgamma(double x) { return std::tgamma(x); }
};

template <>
struct scalar_traits<quad> {
  using complex = complex_quad;
  static quad euler() {
    static const quad value("0.57721566490153286060651209008240243104215933593992");
    return value;
  }
  static quad pi() { return boost::math::constants::pi<quad>(); }
  static quad tgamma(const quad& x) { return quad(tgammaq(x.backend().value())); }
};

template <class R>
using complex_t = typename scalar_traits<R>::complex;

template <class R>
R epsilon() {
  return std::numeric_limits<R>::epsilon();
}

template <class T>
T ipow(T base, int exponent) {
  if (exponent < 0) return T(1) / ipow(base, -exponent);
  T result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

inline std::complex<double> to_double(const complex_quad& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}
inline std::complex<double> to_double(const std::complex<double>& z) { return z; }
inline double to_double(const quad& x) { return static_cast<double>(x); }
inline double to_double(double x) { return x; }

inline complex_quad to_quad(const std::complex<double>& z) {
  return complex_quad(quad(z.real()), quad(z.imag()));
}

}  // namespace sbi::detail
