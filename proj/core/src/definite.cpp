#include <cmath>
#include <limits>
#include <string>

#include "sbi/errors.hpp"
#include "sbi/triple.hpp"
#include "scalar.hpp"

namespace sbi::triple {
namespace {

using sbi::detail::complex_quad;
using sbi::detail::quad;
using Traits = sbi::detail::scalar_traits<quad>;

constexpr double kIntegerWindow = 1e-6;
constexpr double kLimitStep = 1e-4;

// S(γ) = (m² + γ²)^{(2-n)/2} sin((n-2) atan(γ/m))
quad s_term(const quad& n, const quad& m, const quad& gamma) {
  return pow(m * m + gamma * gamma, (2 - n) / 2) * sin((n - 2) * atan2(gamma, m));
}

quad definite_000(const quad& n, double m, double alpha, double beta, double mu) {
  const quad a(alpha), b(beta), c(mu), mq(m);
  const quad bracket = -s_term(n, mq, a + b + c) + s_term(n, mq, c + b - a) +
                       s_term(n, mq, c + a - b) + s_term(n, mq, a + b - c);
  const quad pi = Traits::pi();
  const quad prefactor = pi / (a * b * c * Traits::tgamma(3 - n) * sin(pi * n));
  return quad(0.25) * prefactor * bracket;
}

// ∫_0^∞ x^ν e^{-mx} kind(γx) dx = Γ(ν+1) [Im | Re] (m - iγ)^{-(ν+1)},
// continued analytically in ν; the γ = 0, m = 0 power has value 0.
quad definite_termwise(const quad& n, const IntegralSpec& spec,
                       const std::vector<BaseTerm>& terms) {
  quad sum(0);
  for (const BaseTerm& t : terms) {
    if (spec.m == 0.0 && t.freq == 0.0) continue;
    const quad nu1 = n + t.power + 1;
    const complex_quad w(quad(spec.m), -quad(t.freq));
    const complex_quad power = exp(-nu1 * log(w));
    const quad trig = t.kind == Kind::sin ? power.imag() : power.real();
    sum += quad(t.coeff) * Traits::tgamma(nu1) * trig;
  }
  return sum;
}

template <class Fn>
EvalResult evaluate_with_limit(double n, Fn&& at) {
  EvalResult result;
  result.method = Method::closed_form;
  const double nearest = std::round(n);
  if (std::abs(n - nearest) >= kIntegerWindow) {
    const double v = static_cast<double>(at(quad(n)));
    result.value = {v, 0.0};
    result.err_estimate = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
    return result;
  }
  // Symmetric offsets cancel odd powers of ε; Richardson removes the ε² term.
  const quad eps(kLimitStep);
  const quad center(n);
  const quad d1 = (at(center + eps) + at(center - eps)) / 2;
  const quad d2 = (at(center + 2 * eps) + at(center - 2 * eps)) / 2;
  const double v = static_cast<double>((4 * d1 - d2) / 3);
  result.value = {v, 0.0};
  result.err_estimate = static_cast<double>(abs(d1 - d2)) * kLimitStep * kLimitStep +
                        4.0 * std::numeric_limits<double>::epsilon() * std::abs(v);
  return result;
}

}  // namespace

void check_definite_convergence(const IntegralSpec& spec) {
  validate(spec);
  if (spec.damping == Damping::imaginary_unit) {
    throw UnsupportedError("the definite integral is evaluated for real damping m >= 0 only");
  }
  const int orders = spec.h + spec.k + spec.l;
  if (!(spec.n + orders > -1.0)) {
    throw DivergenceError("definite integral diverges at the origin: requires n + h + k + l > -1 (" +
                          describe(spec) + ")");
  }
  if (spec.m == 0.0 && !(spec.n < 2.0)) {
    throw DivergenceError("definite integral diverges at infinity: m = 0 requires n < 2 (" +
                          describe(spec) + ")");
  }
}

EvalResult eval_definite(const IntegralSpec& spec) {
  check_definite_convergence(spec);
  EvalResult result;
  if (spec.h == 0 && spec.k == 0 && spec.l == 0) {
    result = evaluate_with_limit(spec.n, [&](const quad& n) {
      return definite_000(n, spec.m, spec.alpha, spec.beta, spec.mu);
    });
  } else {
    const std::vector<BaseTerm> terms = expand_orders(spec);
    result = evaluate_with_limit(spec.n, [&](const quad& n) {
      return definite_termwise(n, spec, terms);
    });
  }
  if (!std::isfinite(result.value.real())) {
    throw OverflowError("definite value is not representable in double for " + describe(spec));
  }
  return result;
}

namespace detail {

double definite_000_direct(double n, double m, double alpha, double beta, double mu) {
  return static_cast<double>(definite_000(quad(n), m, alpha, beta, mu));
}

double definite_termwise_direct(const IntegralSpec& spec) {
  validate(spec);
  return static_cast<double>(definite_termwise(quad(spec.n), spec, expand_orders(spec)));
}

}  // namespace detail
}  // namespace sbi::triple
