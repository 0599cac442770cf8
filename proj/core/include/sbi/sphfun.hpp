#pragma once

#include <vector>

#include "sbi/types.hpp"

/// Spherical Bessel, Neumann and Hankel functions of integer order, Legendre
/// polynomials and the axis plane-wave expansion.
///
/// Sign conventions are the standard ones: n_0(x) = -cos(x)/x and
/// h^(1)_l = j_l + i n_l, so that h^(1)_0(x) = -i e^{ix}/x.
namespace sbi::sphfun {

/// j_l(x) for x > 0.
///
/// Power series when x^2 <= 2l + 3, upward recurrence when x >= l, and
/// Miller's downward recurrence (rescaled, normalised against j_0 and j_1)
/// in between. Throws DomainError for l < 0 or x <= 0 (use
/// sph_bessel_j_at_zero for the limit at the origin).
double sph_bessel_j(int l, double x);

/// lim_{x->0} j_l(x): 1 for l = 0, 0 otherwise.
double sph_bessel_j_at_zero(int l);

/// j_0(x) ... j_{l_max}(x) in one pass. Accepts x = 0 (limit values).
std::vector<double> sph_bessel_j_sequence(int l_max, double x);

/// n_l(x) for x > 0 by upward recurrence. Throws OverflowError when the
/// value exceeds the double range (very small x, large l).
double sph_bessel_n(int l, double x);

/// h^(1)_l(x) = j_l(x) + i n_l(x).
ComplexValue sph_hankel1(int l, double x);

/// h^(2)_l(x) = j_l(x) - i n_l(x).
ComplexValue sph_hankel2(int l, double x);

/// Legendre polynomial P_l(u), -1 <= u <= 1.
double legendre_p(int l, double u);

/// Sum_{l=0}^{l_max} (2l+1) i^l j_l(kr) P_l(u), which converges to
/// e^{i kr u} as l_max grows.
ComplexValue plane_wave_partial_sum(double kr, double u, int l_max);

}  // namespace sbi::sphfun
