#pragma once

#include <functional>
#include <vector>

#include "sbi/types.hpp"

/// Independent numerical ground truth for the closed forms: adaptive
/// Gauss–Kronrod quadrature on finite intervals, semi-infinite integration of
/// products of spherical Bessel functions, and finite-difference derivatives.
namespace sbi::oracle {

enum class TailPolicy {
  /// m > 0: truncate where the bound ∫_X^∞ x^n e^{-mx} dx drops below the
  /// tolerance. m = 0: the tail is split into single-frequency pieces that
  /// are integrated along rotated contours X ± it, where they decay
  /// exponentially.
  exponential_bound,
  /// Half-period panels summed on the real axis with Wynn epsilon
  /// acceleration of the partial sums (per frequency for m = 0).
  period_summation,
};

struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 50;
  TailPolicy tail_policy = TailPolicy::exponential_bound;
  /// Upper bound on the number of live subintervals of one adaptive run.
  int max_intervals = 200000;

  /// Throws DomainError unless tolerances are positive and max_depth >= 10.
  void validate() const;
};

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<ComplexValue(double)>;

/// Global adaptive 15-point Kronrod / 7-point Gauss quadrature of f on [a, b].
/// Subintervals are bisected in order of decreasing error estimate until the
/// total estimate is below max(abs_tol, rel_tol |value|). `converged` is false
/// when an interval at max_depth (or the interval budget) blocks progress;
/// the best estimate is returned in that case.
EvalResult quad_finite(const RealFunction& f, double a, double b, const QuadConfig& cfg = {});
EvalResult quad_finite_complex(const ComplexFunction& f, double a, double b,
                               const QuadConfig& cfg = {});
/// As quad_finite with the interval pre-split at the sorted `points`
/// (first and last are the integration limits).
EvalResult quad_finite_points(const RealFunction& f, std::vector<double> points,
                              const QuadConfig& cfg = {});

/// x^n e^{-mx} Π_i j_{orders[i]}(freqs[i] x); `m` real.
struct BesselProduct {
  double n = 0.0;
  double m = 0.0;
  std::vector<int> orders;
  std::vector<double> freqs;
};

double product_integrand(const BesselProduct& p, double x);

/// The integrand of `spec` evaluated directly from spherical Bessel values
/// (complex only for the undamped e^{-ix} case).
ComplexValue integrand(const IntegralSpec& spec, double x);

/// ∫_0^∞ of a Bessel product. Requires n + Σ orders > -1 and either m > 0 or
/// n < K - 1 for K factors; throws DivergenceError otherwise.
EvalResult quad_product_semi_infinite(const BesselProduct& p, const QuadConfig& cfg = {});

/// ∫_0^∞ of the integrand of `spec` (real damping only).
EvalResult quad_semi_infinite(const IntegralSpec& spec, const QuadConfig& cfg = {});

/// Five-point central difference (-F(x+2h) + 8F(x+h) - 8F(x-h) + F(x-2h)) / 12h.
template <class F>
auto finite_diff_derivative(F&& f, double x, double h) {
  return (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h);
}

}  // namespace sbi::oracle
