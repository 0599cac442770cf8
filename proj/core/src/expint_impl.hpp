#pragma once

#include <string>

#include "sbi/errors.hpp"
#include "scalar.hpp"

namespace sbi::detail {

// psi(p) = -gamma + sum_{j<p} 1/j
template <class R>
R digamma_int(int p) {
  R value = -scalar_traits<R>::euler();
  for (int j = 1; j < p; ++j) value += R(1) / R(j);
  return value;
}

// E_p(z) = (-z)^{p-1}/(p-1)! (psi(p) - log z) - sum_{k != p-1} (-z)^k / ((k-p+1) k!)
template <class R>
complex_t<R> en_series(int p, const complex_t<R>& z, const complex_t<R>& log_z) {
  using C = complex_t<R>;
  using std::abs;
  const R eps = epsilon<R>();
  C term(R(1), R(0));  // (-z)^k / k!
  C sum(R(0), R(0));
  for (int k = 0; k < 2000; ++k) {
    if (k > 0) term *= -z / R(k);
    if (k == p - 1) {
      sum += term * (C(digamma_int<R>(p), R(0)) - log_z);
    } else {
      const C contribution = term / R(k - p + 1);
      sum -= contribution;
      if (k > p - 1 && abs(contribution) <= eps * abs(sum)) return sum;
    }
  }
  throw ConvergenceError("E_" + std::to_string(p) + " power series did not converge");
}

// Modified Lentz evaluation of the continued fraction for E_p(z), valid off
// the negative real axis; converges quickly once |z| is moderate.
template <class R>
complex_t<R> en_continued_fraction(int p, const complex_t<R>& z) {
  using C = complex_t<R>;
  using std::abs;
  using std::exp;
  const R eps = epsilon<R>();
  const R big(1e300);
  C b = z + C(R(p), R(0));
  C c(big, R(0));
  C d = C(R(1), R(0)) / b;
  C h = d;
  for (int i = 1; i < 200000; ++i) {
    const R an = -R(i) * R(p - 1 + i);
    b += C(R(2), R(0));
    C denom = an * d + b;
    if (abs(denom) == R(0)) denom = C(R(1) / big, R(0));
    d = C(R(1), R(0)) / denom;
    c = b + an / c;
    if (abs(c) == R(0)) c = C(R(1) / big, R(0));
    const C del = c * d;
    h *= del;
    if (abs(del - C(R(1), R(0))) <= eps) return h * exp(-z);
  }
  throw ConvergenceError("E_" + std::to_string(p) + " continued fraction did not converge");
}

// Generalised exponential integral E_p(z), p >= 0, principal branch. The
// caller guarantees z != 0 and z off the negative real axis.
template <class R>
complex_t<R> expint_en(int p, const complex_t<R>& z) {
  using std::abs;
  using std::exp;
  using std::log;
  if (p == 0) return exp(-z) / z;
  if (abs(z) <= R(4)) return en_series<R>(p, z, log(z));
  return en_continued_fraction<R>(p, z);
}

// x^{n+1} sum_k (cx)^k / (k! (n+k+1)) : antiderivative of x^n e^{cx}, n >= 0,
// for small |c| where the polynomial form cancels.
template <class R>
complex_t<R> zn_small_scale_series(int n, const complex_t<R>& c, const R& x) {
  using C = complex_t<R>;
  using std::abs;
  const R eps = epsilon<R>();
  const C cx = c * x;
  C term(R(1), R(0));
  C sum = term / R(n + 1);
  for (int k = 1; k < 100000; ++k) {
    term *= cx / R(k);
    const C contribution = term / R(n + k + 1);
    sum += contribution;
    if (abs(contribution) <= eps * abs(sum)) return sum * ipow(x, n + 1);
  }
  throw ConvergenceError("small-scale series for x^n e^{cx} did not converge");
}

// Principal-value antiderivative of x^{-p} e^{cx} for real c > 0:
//   x^{1-p} [ t_{p-1} (ln(cx) - psi(p)) + sum_{k != p-1} t_k/(k-p+1) ],
//   t_k = (cx)^k / k!.
// For p = 1 this is exactly Ei(cx).
template <class R>
R zn_negative_real_series(int p, const R& c, const R& x) {
  using std::abs;
  using std::log;
  const R eps = epsilon<R>();
  const R cx = c * x;
  if (cx > R(700)) {
    throw OverflowError("antiderivative of x^n e^{cx} overflows for c*x > 700");
  }
  R term(1);
  R sum(0);
  for (int k = 0; k < 100000; ++k) {
    if (k > 0) term *= cx / R(k);
    if (k == p - 1) {
      sum += term * (log(cx) - digamma_int<R>(p));
    } else {
      const R contribution = term / R(k - p + 1);
      sum += contribution;
      if (k > p - 1 && abs(contribution) <= eps * abs(sum)) {
        return sum * ipow(x, 1 - p);
      }
    }
  }
  throw ConvergenceError("series for x^n e^{cx} with real c > 0 did not converge");
}

// An antiderivative of x^n e^{cx} for x > 0.
//   n >= 0 : e^{cx} sum_j (-1)^j n!/(n-j)! x^{n-j} / c^{j+1}
//   n <= -1: -x^{n+1} E_{-n}(-cx); for real c > 0 (-cx on the branch cut)
//            the principal-value real series above.
//   c == 0 : x^{n+1}/(n+1), or log x for n = -1.
template <class R>
complex_t<R> z_antiderivative(int n, const complex_t<R>& c, const R& x) {
  using C = complex_t<R>;
  using std::abs;
  using std::exp;
  using std::log;
  if (c.real() == R(0) && c.imag() == R(0)) {
    if (n == -1) return C(log(x), R(0));
    return C(ipow(x, n + 1) / R(n + 1), R(0));
  }
  if (n >= 0) {
    if (abs(c) < R(1e-2)) return zn_small_scale_series<R>(n, c, x);
    C term = ipow(x, n) / c;
    C sum = term;
    for (int j = 0; j < n; ++j) {
      term *= -R(n - j) / (x * c);
      sum += term;
    }
    return exp(c * x) * sum;
  }
  const int p = -n;
  if (c.imag() == R(0) && c.real() > R(0)) {
    return C(zn_negative_real_series<R>(p, c.real(), x), R(0));
  }
  return -ipow(x, 1 - p) * expint_en<R>(p, -c * x);
}

}  // namespace sbi::detail
