#include "sbi/sphfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sbi/errors.hpp"

namespace sbi::sphfun {
namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleFactor = 1e-250;

void require_order(int l) {
  if (l < 0) {
    throw DomainError("spherical function order must be >= 0, got " + std::to_string(l));
  }
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " requires finite x > 0, got " + std::to_string(x));
  }
}

bool use_series(int l, double x) { return x * x <= 2.0 * l + 3.0; }

// j_l(x) = x^l/(2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1)).
double j_series(int l, double x) {
  double prefactor = 1.0;
  for (int i = 1; i <= l; ++i) prefactor *= x / (2.0 * i + 1.0);
  if (prefactor == 0.0) return 0.0;
  const double half_x2 = 0.5 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    term *= -half_x2 / ((k + 1.0) * (2.0 * l + 2.0 * k + 3.0));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return prefactor * sum;
}

double j0_direct(double x) { return std::sin(x) / x; }
double j1_direct(double x) { return (std::sin(x) / x - std::cos(x)) / x; }

int miller_start(int l) {
  return l + static_cast<int>(std::ceil(std::sqrt(40.0 * l))) + 20;
}

// Downward recurrence from a zero tail; `sink(k, f_k)` receives the
// unnormalised value of every order k <= l_keep, `rescale(factor)` is called
// whenever the running values are scaled down. Returns the normalisation.
template <class Sink, class Rescale>
double miller(int l_keep, double x, Sink&& sink, Rescale&& rescale) {
  const int start = miller_start(l_keep);
  double f_next = 0.0;  // f_{k+1}
  double f = 1.0;       // f_k, k = start
  for (int k = start; k > 0; --k) {
    if (k <= l_keep) sink(k, f);
    const double f_prev = (2.0 * k + 1.0) / x * f - f_next;
    f_next = f;
    f = f_prev;
    if (std::abs(f) > kRescaleAbove) {
      f *= kRescaleFactor;
      f_next *= kRescaleFactor;
      rescale(kRescaleFactor);
    }
  }
  sink(0, f);
  const double f0 = f;
  const double f1 = f_next;
  const double j0 = j0_direct(x);
  if (x < 1.0) return j0 / f0;
  const double j1 = j1_direct(x);
  // Least-squares match of (f0, f1) onto (j0, j1): robust near zeros of j0.
  const double s = std::max(std::abs(f0), std::abs(f1));
  const double u0 = f0 / s;
  const double u1 = f1 / s;
  return (u0 * j0 + u1 * j1) / (s * (u0 * u0 + u1 * u1));
}

}  // namespace

double sph_bessel_j_at_zero(int l) {
  require_order(l);
  return l == 0 ? 1.0 : 0.0;
}

double sph_bessel_j(int l, double x) {
  require_order(l);
  require_positive(x, "sph_bessel_j");
  if (use_series(l, x)) return j_series(l, x);
  if (l == 0) return j0_direct(x);
  if (x >= l) {
    double jm = j0_direct(x);
    double j = j1_direct(x);
    for (int k = 1; k < l; ++k) {
      const double jp = (2.0 * k + 1.0) / x * j - jm;
      jm = j;
      j = jp;
    }
    return j;
  }
  double kept = 0.0;
  const double scale = miller(
      l, x, [&](int k, double f) { if (k == l) kept = f; },
      [&](double factor) { kept *= factor; });
  const double value = kept * scale;
  if (!std::isfinite(value)) {
    throw OverflowError("sph_bessel_j: downward recurrence could not be normalised");
  }
  return value;
}

std::vector<double> sph_bessel_j_sequence(int l_max, double x) {
  require_order(l_max);
  if (x < 0.0 || !std::isfinite(x)) {
    throw DomainError("sph_bessel_j_sequence requires finite x >= 0");
  }
  std::vector<double> out(static_cast<std::size_t>(l_max) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (use_series(0, x)) {
    for (int l = 0; l <= l_max; ++l) out[l] = j_series(l, x);
    return out;
  }
  if (x >= l_max || l_max <= 1) {
    for (int l = 0; l <= std::min(l_max, 1); ++l) out[l] = sph_bessel_j(l, x);
    for (int k = 1; k < l_max; ++k) {
      out[k + 1] = (2.0 * k + 1.0) / x * out[k] - out[k - 1];
    }
    return out;
  }
  const double scale = miller(
      l_max, x, [&](int k, double f) { out[k] = f; },
      [&](double factor) {
        for (double& v : out) v *= factor;
      });
  for (double& v : out) v *= scale;
  return out;
}

double sph_bessel_n(int l, double x) {
  require_order(l);
  require_positive(x, "sph_bessel_n");
  double nm = -std::cos(x) / x;
  if (l == 0) return nm;
  double n = (nm - std::sin(x)) / x;
  for (int k = 1; k < l; ++k) {
    const double np = (2.0 * k + 1.0) / x * n - nm;
    nm = n;
    n = np;
  }
  if (!std::isfinite(n)) {
    throw OverflowError("sph_bessel_n(" + std::to_string(l) + ", " + std::to_string(x) +
                        ") exceeds the double range");
  }
  return n;
}

ComplexValue sph_hankel1(int l, double x) {
  return {sph_bessel_j(l, x), sph_bessel_n(l, x)};
}

ComplexValue sph_hankel2(int l, double x) {
  return {sph_bessel_j(l, x), -sph_bessel_n(l, x)};
}

double legendre_p(int l, double u) {
  require_order(l);
  if (!(u >= -1.0 && u <= 1.0)) {
    throw DomainError("legendre_p requires -1 <= u <= 1, got " + std::to_string(u));
  }
  if (l == 0) return 1.0;
  double pm = 1.0;
  double p = u;
  for (int k = 1; k < l; ++k) {
    const double pp = ((2.0 * k + 1.0) * u * p - k * pm) / (k + 1.0);
    pm = p;
    p = pp;
  }
  return p;
}

ComplexValue plane_wave_partial_sum(double kr, double u, int l_max) {
  require_order(l_max);
  if (!(kr >= 0.0) || !std::isfinite(kr)) {
    throw DomainError("plane_wave_partial_sum requires finite kr >= 0");
  }
  if (!(u >= -1.0 && u <= 1.0)) {
    throw DomainError("plane_wave_partial_sum requires -1 <= u <= 1");
  }
  const std::vector<double> j = sph_bessel_j_sequence(l_max, kr);
  // i^l cycles through 1, i, -1, -i.
  static constexpr ComplexValue kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  ComplexValue sum{};
  double pm = 0.0;
  double p = 1.0;
  for (int l = 0; l <= l_max; ++l) {
    sum += (2.0 * l + 1.0) * j[l] * p * kIPow[l % 4];
    const double pp = ((2.0 * l + 1.0) * u * p - l * pm) / (l + 1.0);
    pm = p;
    p = pp;
  }
  return sum;
}

}  // namespace sbi::sphfun
