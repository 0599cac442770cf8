#pragma once

#include "sbi/types.hpp"

/// Exponential-type integrals: the Z_n antiderivative family, Ei, li, Si/Ci,
/// the upper incomplete gamma function for positive integer order, and the
/// complex generalised exponential integral E_p.
namespace sbi::expint {

/// Euler–Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// An antiderivative F of x^n e^{cx} on x > 0.
///
/// n >= 0 gives e^{cx} times a degree-n polynomial, so that with c = 1 the
/// family satisfies Z_n = x^n e^x - n Z_{n-1}. For n <= -1 the value is
/// -x^{n+1} E_{-n}(-cx) (principal branch); when c is real and positive the
/// argument -cx lies on the branch cut and the real principal-value form is
/// used instead, so that z_antiderivative(-1, 1, x) == Ei(x). For c = 0 the
/// pure power x^{n+1}/(n+1), or log x when n = -1.
///
/// For a fixed (n, c) the same representation is used at every x, so
/// differences F(b) - F(a) are definite integrals.
ComplexValue z_antiderivative(int n, ComplexValue c, double x);

/// Principal-value exponential integral Ei(x), x != 0.
double ei(double x);

/// Logarithmic integral li(x) = Ei(ln x), x > 0, x != 1.
double li(double x);

/// Γ(s, z) = (s-1)! e^{-z} sum_{k<s} z^k/k!  for integer s >= 1.
ComplexValue upper_incomplete_gamma(int s, ComplexValue z);

/// E_1(z) off the branch cut (z not on the closed negative real axis).
ComplexValue e1_complex(ComplexValue z);

/// Generalised exponential integral E_p(z) = z^{p-1} Γ(1-p, z), p >= 0,
/// principal branch. Same domain as e1_complex.
ComplexValue expint_en(int p, ComplexValue z);

/// Sine integral Si(x) = ∫_0^x sin t / t dt (odd in x).
double si(double x);

/// Cosine integral Ci(x) = γ + ln x + ∫_0^x (cos t - 1)/t dt, x > 0.
double ci(double x);

namespace detail {
// Exposed so the series/asymptotic switchover of ei can be checked.
double ei_series(double x);
double ei_asymptotic(double x);
}  // namespace detail

}  // namespace sbi::expint
