#pragma once

#include <array>
#include <vector>

#include "sbi/types.hpp"

/// Closed forms for  I(x) = ∫ x^n e^{-mx} j_h(αx) j_k(βx) j_l(μx) dx.
///
/// The three Bessel factors are expanded into finite sums of
/// y^{-r} sin y and y^{-r} cos y, the triple trigonometric products are split
/// into single sines/cosines of the combined frequencies ±α±β±μ, and every
/// resulting base term x^p e^{-mx} trig(γx) is integrated through the Z_n
/// family. Antiderivatives follow the convention that each base term's
/// antiderivative vanishes at +∞ whenever that limit exists.
namespace sbi::triple {

enum class Kind { sin, cos };

inline const char* to_string(Kind k) { return k == Kind::sin ? "sin" : "cos"; }

/// One term `weight * kind(freq * x)` of a product-to-sum split.
struct TrigTerm {
  double weight = 0.0;
  double freq = 0.0;
  Kind kind = Kind::sin;
};

/// Splits ka(a x) kb(b x) kc(c x) into four single-frequency terms with
/// frequencies a ± b ± c (first sign fixed to +) and weights ±1/4.
/// With all kinds sin:
///   4 sin A sin B sin C = sin(A+B-C) + sin(B+C-A) + sin(C+A-B) - sin(A+B+C).
std::array<TrigTerm, 4> trig_decompose(double a, double b, double c, Kind ka = Kind::sin,
                                       Kind kb = Kind::sin, Kind kc = Kind::sin);

/// coeff * x^power * kind(freq * x); freq >= 0 after canonicalisation.
struct BaseTerm {
  double coeff = 0.0;
  int power = 0;
  Kind kind = Kind::sin;
  double freq = 0.0;
};

/// Coefficients of j_l(y) = sum_r (sin_coeff[r] sin y + cos_coeff[r] cos y) y^{-r},
/// r = 0..l+1 (entry 0 is always zero). Exact integers.
struct BesselExpansion {
  std::vector<double> sin_coeff;
  std::vector<double> cos_coeff;
};
BesselExpansion bessel_expansion(int l);

/// Expands x^n j_h(αx) j_k(βx) j_l(μx) into merged base terms with powers in
/// [n-3-h-k-l, n-3]. Requires integral n.
std::vector<BaseTerm> reduce_orders(const IntegralSpec& spec);

/// Same expansion with the power of x left at n = 0 (powers in
/// [-3-h-k-l, -3]); shared by the definite evaluation for non-integer n.
std::vector<BaseTerm> expand_orders(const IntegralSpec& spec);

/// Antiderivative of x^p e^{-mx} kind(γx) (coefficient ignored), real m >= 0.
/// The γ = 0 cosine term at m = 0 is the pure power x^{p+1}/(p+1) (log x for
/// p = -1).
ComplexValue antiderivative_base(const BaseTerm& term, double m, double x);

/// Antiderivative of x^p e^{-ix} kind(γx) (the undamped m = i case).
ComplexValue antiderivative_base_imaginary(const BaseTerm& term, double x);

/// Sum of coeff * antiderivative_base over reduce_orders(spec).
EvalResult eval_indefinite(const IntegralSpec& spec, double x);

/// Independent h = k = l = 0 assembly through upper incomplete gamma
/// functions. `damping` = m for real damping, i for the undamped case.
/// Requires integral n >= 0.
ComplexValue special_case_000(int n, ComplexValue damping, double alpha, double beta, double mu,
                              double x);

/// ∫_0^∞ x^n e^{-mx} j_h(αx) j_k(βx) j_l(μx) dx for real m.
/// Converges when n + h + k + l > -1 and (m > 0 or n < 2).
EvalResult eval_definite(const IntegralSpec& spec);

/// Throws DivergenceError naming the violated condition.
void check_definite_convergence(const IntegralSpec& spec);

namespace detail {
/// The h = k = l = 0 definite value through the four-S form, without the
/// integer-n limit handling.
double definite_000_direct(double n, double m, double alpha, double beta, double mu);
/// Term-wise analytically continued Mellin transforms of expand_orders,
/// without the integer-n limit handling.
double definite_termwise_direct(const IntegralSpec& spec);
}  // namespace detail

}  // namespace sbi::triple
