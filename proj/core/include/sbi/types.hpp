#pragma once

#include <complex>
#include <string>

namespace sbi {

using ComplexValue = std::complex<double>;

enum class Method { closed_form, oracle };

inline const char* to_string(Method m) {
  return m == Method::closed_form ? "closed_form" : "oracle";
}

/// A computed value together with how it was obtained and an estimate of its
/// absolute error. `converged` is false when an adaptive oracle gave up
/// (depth or panel limit) and `value` is only the best estimate available.
struct EvalResult {
  ComplexValue value{};
  Method method = Method::closed_form;
  double err_estimate = 0.0;
  bool converged = true;
};

/// How the exponential factor e^{-m x} is interpreted. `imaginary_unit`
/// replaces it by the undamped e^{-i x}; the numeric `m` is then ignored.
enum class Damping { real, imaginary_unit };

/// Parameters of  ∫ x^n e^{-m x} j_h(αx) j_k(βx) j_l(μx) dx.
///
/// `n` is stored as a double because the definite integral is defined for
/// non-integer powers; the indefinite evaluation requires an integral value.
struct IntegralSpec {
  double n = 0.0;
  double m = 0.0;
  int h = 0;
  int k = 0;
  int l = 0;
  double alpha = 1.0;
  double beta = 1.0;
  double mu = 1.0;
  Damping damping = Damping::real;

  ComplexValue damping_value() const {
    return damping == Damping::imaginary_unit ? ComplexValue{0.0, 1.0}
                                              : ComplexValue{m, 0.0};
  }
};

/// Throws DomainError naming the first violated invariant: orders must be
/// non-negative, frequencies nonzero and finite, m finite and >= 0.
void validate(const IntegralSpec& spec);

std::string describe(const IntegralSpec& spec);

}  // namespace sbi
