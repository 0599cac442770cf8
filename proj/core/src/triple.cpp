#include "sbi/triple.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <string>

#include "expint_impl.hpp"
#include "sbi/errors.hpp"
#include "sbi/expint.hpp"
#include "scalar.hpp"
#include "triple_impl.hpp"

namespace sbi {

void validate(const IntegralSpec& spec) {
  if (!std::isfinite(spec.n)) throw DomainError("power n must be finite");
  if (spec.h < 0 || spec.k < 0 || spec.l < 0) {
    throw DomainError("orders h, k, l must be non-negative");
  }
  const double freqs[3] = {spec.alpha, spec.beta, spec.mu};
  const char* names[3] = {"alpha", "beta", "mu"};
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(freqs[i])) throw DomainError(std::string(names[i]) + " must be finite");
    if (freqs[i] == 0.0) {
      throw DomainError(std::string(names[i]) + " must be nonzero (frequencies alpha, beta, mu != 0)");
    }
  }
  if (spec.damping == Damping::real && (!std::isfinite(spec.m) || spec.m < 0.0)) {
    throw DomainError("damping m must be finite and >= 0");
  }
}

std::string describe(const IntegralSpec& spec) {
  std::ostringstream out;
  out.precision(12);
  out << "n=" << spec.n << " m=";
  if (spec.damping == Damping::imaginary_unit) {
    out << "i";
  } else {
    out << spec.m;
  }
  out << " h=" << spec.h << " k=" << spec.k << " l=" << spec.l << " alpha=" << spec.alpha
      << " beta=" << spec.beta << " mu=" << spec.mu;
  return out.str();
}

namespace triple {
namespace {

using sbi::detail::complex_quad;
using sbi::detail::quad;

std::string describe(const BaseTerm& t) {
  std::ostringstream out;
  out.precision(17);
  out << "base term " << t.coeff << " * x^" << t.power << " * " << to_string(t.kind) << "("
      << t.freq << " x)";
  return out.str();
}

// Re-raises a library error with the offending term prepended, keeping its type.
template <class Fn>
auto with_term_context(const BaseTerm& term, Fn&& fn) -> decltype(fn()) {
  const std::string prefix = describe(term) + ": ";
  try {
    return fn();
  } catch (const BranchCutError& e) {
    throw BranchCutError(prefix + e.what());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const OverflowError& e) {
    throw OverflowError(prefix + e.what());
  } catch (const SingularError& e) {
    throw SingularError(prefix + e.what());
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(prefix + e.what());
  }
}

void require_positive_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("the antiderivative is evaluated at finite x > 0 only");
  }
}

int integral_power(double n) {
  if (n != std::round(n) || std::abs(n) > 1e6) {
    throw DomainError("indefinite evaluation requires an integral power n, got " +
                      std::to_string(n));
  }
  return static_cast<int>(n);
}

}  // namespace

std::array<TrigTerm, 4> trig_decompose(double a, double b, double c, Kind ka, Kind kb, Kind kc) {
  // kind(θ) = sum_{s=±1} w(s) e^{isθ} with w = s/(2i) for sin, 1/2 for cos.
  // Pairing s with -s turns the eight exponentials into four real terms.
  const Kind kinds[3] = {ka, kb, kc};
  int sin_count = 0;
  for (Kind k : kinds) sin_count += (k == Kind::sin);
  std::array<TrigTerm, 4> out{};
  int slot = 0;
  for (int s2 : {1, -1}) {
    for (int s3 : {1, -1}) {
      const int signs[3] = {1, s2, s3};
      std::complex<double> w{1.0, 0.0};
      for (int i = 0; i < 3; ++i) {
        w *= kinds[i] == Kind::sin ? std::complex<double>{0.0, -0.5 * signs[i]}
                                   : std::complex<double>{0.5, 0.0};
      }
      TrigTerm& t = out[slot++];
      t.freq = a + s2 * b + s3 * c;
      if (sin_count % 2 == 1) {
        t.kind = Kind::sin;
        t.weight = (std::complex<double>{0.0, 2.0} * w).real();
      } else {
        t.kind = Kind::cos;
        t.weight = 2.0 * w.real();
      }
    }
  }
  return out;
}

BesselExpansion bessel_expansion(int l) {
  if (l < 0) throw DomainError("bessel_expansion requires l >= 0");
  const std::size_t size = static_cast<std::size_t>(l) + 2;
  BesselExpansion prev{std::vector<double>(size, 0.0), std::vector<double>(size, 0.0)};
  BesselExpansion cur = prev;
  prev.cos_coeff[1] = 1.0;  // j_{-1} = cos y / y
  cur.sin_coeff[1] = 1.0;   // j_0 = sin y / y
  for (int k = 0; k < l; ++k) {
    BesselExpansion next{std::vector<double>(size, 0.0), std::vector<double>(size, 0.0)};
    for (std::size_t r = 0; r + 1 < size; ++r) {
      next.sin_coeff[r + 1] += (2.0 * k + 1.0) * cur.sin_coeff[r];
      next.cos_coeff[r + 1] += (2.0 * k + 1.0) * cur.cos_coeff[r];
    }
    for (std::size_t r = 0; r < size; ++r) {
      next.sin_coeff[r] -= prev.sin_coeff[r];
      next.cos_coeff[r] -= prev.cos_coeff[r];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BaseTerm> expand_orders(const IntegralSpec& spec) {
  validate(spec);
  const int orders[3] = {spec.h, spec.k, spec.l};
  const double freqs[3] = {spec.alpha, spec.beta, spec.mu};
  std::vector<detail::Factor> factors[3];
  for (int i = 0; i < 3; ++i) factors[i] = detail::bessel_factors(orders[i], freqs[i]);

  std::vector<BaseTerm> raw;
  for (const auto& f1 : factors[0]) {
    for (const auto& f2 : factors[1]) {
      for (const auto& f3 : factors[2]) {
        const double coeff = f1.coeff * f2.coeff * f3.coeff;
        const int power = -(f1.power + f2.power + f3.power);
        for (const TrigTerm& t :
             trig_decompose(spec.alpha, spec.beta, spec.mu, f1.kind, f2.kind, f3.kind)) {
          raw.push_back({coeff * t.weight, power, t.kind, t.freq});
        }
      }
    }
  }
  const double scale = std::abs(spec.alpha) + std::abs(spec.beta) + std::abs(spec.mu);
  return detail::canonicalize(std::move(raw), 8.0 * std::numeric_limits<double>::epsilon() * scale);
}

std::vector<BaseTerm> reduce_orders(const IntegralSpec& spec) {
  const int n = integral_power(spec.n);
  std::vector<BaseTerm> terms = expand_orders(spec);
  for (BaseTerm& t : terms) t.power += n;
  return terms;
}

ComplexValue antiderivative_base(const BaseTerm& term, double m, double x) {
  require_positive_x(x);
  if (!std::isfinite(m) || m < 0.0) throw DomainError("damping m must be finite and >= 0");
  return sbi::detail::to_double(detail::base_antiderivative<quad>(term, m, x));
}

ComplexValue antiderivative_base_imaginary(const BaseTerm& term, double x) {
  require_positive_x(x);
  return sbi::detail::to_double(detail::base_antiderivative_imaginary<quad>(term, x));
}

EvalResult eval_indefinite(const IntegralSpec& spec, double x) {
  require_positive_x(x);
  const std::vector<BaseTerm> terms = reduce_orders(spec);
  const bool imaginary = spec.damping == Damping::imaginary_unit;
  complex_quad sum(quad(0), quad(0));
  quad magnitude(0);
  for (const BaseTerm& t : terms) {
    const complex_quad f = with_term_context(t, [&] {
      return imaginary ? detail::base_antiderivative_imaginary<quad>(t, x)
                       : detail::base_antiderivative<quad>(t, spec.m, x);
    });
    const complex_quad contribution = quad(t.coeff) * f;
    sum += contribution;
    magnitude += abs(contribution);
  }
  EvalResult result;
  result.value = sbi::detail::to_double(sum);
  if (!imaginary) result.value.imag(0.0);
  if (!std::isfinite(result.value.real()) || !std::isfinite(result.value.imag())) {
    throw OverflowError("indefinite value is not representable in double for " +
                        sbi::describe(spec));
  }
  result.method = Method::closed_form;
  result.err_estimate = std::numeric_limits<double>::epsilon() * std::abs(result.value) +
                        1e3 * sbi::detail::to_double(magnitude) *
                            static_cast<double>(std::numeric_limits<quad>::epsilon());
  return result;
}

ComplexValue special_case_000(int n, ComplexValue damping, double alpha, double beta, double mu,
                              double x) {
  if (n < 0) {
    throw UnsupportedError("special_case_000 needs n >= 0; use eval_indefinite for n = " +
                           std::to_string(n));
  }
  require_positive_x(x);
  IntegralSpec check;
  check.alpha = alpha;
  check.beta = beta;
  check.mu = mu;
  validate(check);
  const int s = n - 2;
  // Antiderivative of x^{s-1} e^{-w x} that vanishes at infinity.
  auto antiderivative = [&](ComplexValue w) -> ComplexValue {
    if (w == ComplexValue{}) {
      if (s == 0) return std::log(x);
      return std::pow(x, s) / static_cast<double>(s);
    }
    if (s >= 1) return -std::pow(w, -s) * expint::upper_incomplete_gamma(s, w * x);
    return -std::pow(x, s) * expint::expint_en(1 - s, w * x);
  };
  // -i/2 [A(m - iγ) - A(m + iγ)] integrates x^{s-1} e^{-mx} sin(γx).
  auto sine_term = [&](double gamma) {
    const ComplexValue ig{0.0, gamma};
    return antiderivative(damping - ig) - antiderivative(damping + ig);
  };
  const ComplexValue bracket = sine_term(alpha + beta - mu) + sine_term(beta + mu - alpha) +
                               sine_term(mu + alpha - beta) - sine_term(alpha + beta + mu);
  const ComplexValue prefactor = ComplexValue{0.0, -1.0} / (2.0 * alpha * beta * mu);
  return 0.25 * prefactor * bracket;
}

}  // namespace triple
}  // namespace sbi
