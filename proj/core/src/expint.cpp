#include "sbi/expint.hpp"

#include <cmath>
#include <string>

#include "expint_impl.hpp"
#include "sbi/errors.hpp"

namespace sbi::expint {
namespace {

constexpr double kEiSeriesLimit = 40.0;
constexpr double kTrigSeriesLimit = 4.0;

void require_off_cut(ComplexValue z, const char* what) {
  if (z == ComplexValue{}) {
    throw DomainError(std::string(what) + " is singular at z = 0");
  }
  if (z.imag() == 0.0 && z.real() < 0.0) {
    throw BranchCutError(std::string(what) + " is evaluated on its branch cut (negative real axis)");
  }
}

ComplexValue checked(ComplexValue v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw OverflowError(std::string(what) + " is not representable in double");
  }
  return v;
}

}  // namespace

namespace detail {

double ei_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= x / k;
    const double contribution = term / k;
    sum += contribution;
    if (std::abs(contribution) <= 1e-17 * std::abs(sum)) break;
  }
  return euler_gamma + std::log(std::abs(x)) + sum;
}

// e^x/x sum_k k!/x^k, truncated at the smallest term.
double ei_asymptotic(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * k / x;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return std::exp(x) / x * sum;
}

}  // namespace detail

ComplexValue z_antiderivative(int n, ComplexValue c, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("z_antiderivative requires finite x > 0");
  }
  return checked(sbi::detail::z_antiderivative<double>(n, c, x), "z_antiderivative");
}

double ei(double x) {
  if (x == 0.0 || !std::isfinite(x)) {
    throw DomainError("Ei(x) requires finite x != 0 (logarithmic singularity at 0)");
  }
  if (x < -1.0) {
    // Alternating series cancels badly here; Ei(x) = -E_1(-x).
    return -sbi::detail::en_continued_fraction<double>(1, ComplexValue{-x, 0.0}).real();
  }
  if (x <= kEiSeriesLimit) return detail::ei_series(x);
  const double v = detail::ei_asymptotic(x);
  if (!std::isfinite(v)) throw OverflowError("Ei(x) overflows for x = " + std::to_string(x));
  return v;
}

double li(double x) {
  if (!(x > 0.0) || x == 1.0 || !std::isfinite(x)) {
    throw DomainError("li(x) requires finite x > 0 and x != 1");
  }
  return ei(std::log(x));
}

ComplexValue upper_incomplete_gamma(int s, ComplexValue z) {
  if (s < 1) {
    throw DomainError("upper_incomplete_gamma requires integer s >= 1, got " + std::to_string(s));
  }
  ComplexValue term{1.0, 0.0};
  ComplexValue sum = term;
  for (int k = 1; k < s; ++k) {
    term *= z / static_cast<double>(k);
    sum += term;
  }
  double factorial = 1.0;
  for (int k = 2; k < s; ++k) factorial *= k;
  if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()) || !std::isfinite(factorial)) {
    throw OverflowError("upper_incomplete_gamma: partial sum overflows");
  }
  return checked(factorial * std::exp(-z) * sum, "upper_incomplete_gamma");
}

ComplexValue e1_complex(ComplexValue z) {
  require_off_cut(z, "E_1(z)");
  return checked(sbi::detail::expint_en<double>(1, z), "E_1(z)");
}

ComplexValue expint_en(int p, ComplexValue z) {
  if (p < 0) throw DomainError("expint_en requires p >= 0");
  require_off_cut(z, "E_p(z)");
  return checked(sbi::detail::expint_en<double>(p, z), "E_p(z)");
}

double si(double x) {
  if (!std::isfinite(x)) throw DomainError("Si(x) requires finite x");
  if (x < 0.0) return -si(-x);
  if (x == 0.0) return 0.0;
  if (x <= kTrigSeriesLimit) {
    // sum_k (-1)^k x^{2k+1} / ((2k+1) (2k+1)!)
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 100; ++k) {
      term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
      const double contribution = term / (2.0 * k + 1.0);
      sum += contribution;
      if (std::abs(contribution) <= 1e-17 * std::abs(sum)) break;
    }
    return sum;
  }
  // E_1(ix) = -Ci(x) + i (Si(x) - pi/2)
  const ComplexValue e1 = sbi::detail::en_continued_fraction<double>(1, ComplexValue{0.0, x});
  return 0.5 * M_PI + e1.imag();
}

double ci(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("Ci(x) requires finite x > 0");
  if (x <= kTrigSeriesLimit) {
    // gamma + ln x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
    const double x2 = x * x;
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
      term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
      const double contribution = term / (2.0 * k);
      sum += contribution;
      if (std::abs(contribution) <= 1e-17 * std::abs(sum)) break;
    }
    return euler_gamma + std::log(x) + sum;
  }
  return -sbi::detail::en_continued_fraction<double>(1, ComplexValue{0.0, x}).real();
}

}  // namespace sbi::expint
