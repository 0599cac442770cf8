#include "sbi_cli/errata.hpp"

#include <cmath>
#include <complex>

#include "sbi/expint.hpp"
#include "sbi/oracle.hpp"
#include "sbi/sphfun.hpp"
#include "sbi/triple.hpp"

namespace sbi::cli {
namespace {

using C = ComplexValue;
constexpr C kI{0.0, 1.0};

bool close(C value, C reference, double tol) {
  return std::abs(value - reference) <= tol * std::max(1.0, std::abs(reference));
}

// j_l(x) = (1/(2 i^l)) ∫_{-1}^{1} e^{ixt} P_l(t) dt
double oracle_j(int l, double x) {
  oracle::QuadConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.rel_tol = 1e-14;
  const auto r = oracle::quad_finite_complex(
      [&](double t) { return std::exp(kI * (x * t)) * std::legendre(l, t); }, -1.0, 1.0, cfg);
  return (r.value / (2.0 * std::pow(kI, l))).real();
}

double std_j(int l, double x) { return std::sph_bessel(l, x); }
double std_n(int l, double x) { return std::sph_neumann(l, x); }


double second_derivative(int l, double x) {
  const double h = 1e-3;
  auto f = [l](double t) { return std_j(l, t); };
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
}

// Library derivative through j_l' = j_{l-1} - (l+1)/x j_l.
double lib_j_prime(int l, double x) {
  if (l == 0) return -sphfun::sph_bessel_j(1, x);
  return sphfun::sph_bessel_j(l - 1, x) - (l + 1.0) / x * sphfun::sph_bessel_j(l, x);
}

// Ei(x) = γ + ln x + ∫_0^x (e^t - 1)/t dt, x > 0
double oracle_ei(double x) {
  const auto r = oracle::quad_finite(
      [](double t) { return t == 0.0 ? 1.0 : std::expm1(t) / t; }, 0.0, x);
  return expint::euler_gamma + std::log(x) + r.value.real();
}

double four_s_definite(double n, double m, double a, double b, double c, bool swap_second_arctan,
                       double constant) {
  auto s = [&](double bracket_freq, double arctan_freq) {
    return std::pow(m * m + bracket_freq * bracket_freq, (2.0 - n) / 2.0) *
           std::sin((n - 2.0) * std::atan(arctan_freq / m));
  };
  const double second = swap_second_arctan ? s(c + b - a, c + b + a) : s(c + b - a, c + b - a);
  const double bracket = -s(a + b + c, a + b + c) + second + s(c + a - b, c + a - b) + s(a + b - c, a + b - c);
  return constant * M_PI / (a * b * c * std::tgamma(3.0 - n) * std::sin(M_PI * n)) * bracket;
}

// -i/(2αβμ) q Σ σ_j [G(m + iγ_j) - G(m - iγ_j)] with G(w) = w^{-s} Γ(s, w x).
C assembly(int s, double m, double a, double b, double c, double x, bool with_fourth, double q) {
  auto g = [&](C w) -> C {
    if (s >= 1) return std::pow(w, -s) * expint::upper_incomplete_gamma(s, w * x);
    return std::pow(x, s) * expint::expint_en(1 - s, w * x);
  };
  auto term = [&](double gamma) { return g(m + kI * gamma) - g(m - kI * gamma); };
  C bracket = term(a - b + c) + term(a + b - c) - term(a + b + c);
  if (with_fourth) bracket += term(b + c - a);
  return q * (-kI / (2.0 * a * b * c)) * bracket;
}

template <class F>
C derivative(F&& f, double x) {
  const double h = 1e-3;
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

}  // namespace

bool ErrataEntry::printed_matches() const { return close(printed, oracle, tolerance); }
bool ErrataEntry::corrected_matches() const { return close(corrected, oracle, tolerance); }

std::vector<ErrataEntry> errata_entries() {
  std::vector<ErrataEntry> out;
  const double x = 1.5;

  {
    const int l = 2;
    const double y = sphfun::sph_bessel_j(l, x);
    const double dy = lib_j_prime(l, x);
    out.push_back({"ode-sign", "j_2''(x) solved from the radial equation",
                   "y'' + (2/x) y' + [1 + l(l+1)/x^2] y = 0",
                   "y'' + (2/x) y' + [1 - l(l+1)/x^2] y = 0", "l = 2, x = 1.5",
                   "finite-difference second derivative of std::sph_bessel",
                   -(2.0 / x) * dy - (1.0 + l * (l + 1.0) / (x * x)) * y,
                   -(2.0 / x) * dy - (1.0 - l * (l + 1.0) / (x * x)) * y, second_derivative(l, x), 1e-6});
  }
  out.push_back({"rayleigh-sign", "j_1(x) from the Rayleigh formula",
                 "j_l = (-1)(-x)^l (x^-1 d/dx) sin(x)/x", "j_l = (-x)^l (x^-1 d/dx)^l sin(x)/x",
                 "l = 1, x = 1.5", "integral representation (1/2i^l) int e^{ixt} P_l(t) dt",
                 (x * std::cos(x) - std::sin(x)) / (x * x), (std::sin(x) - x * std::cos(x)) / (x * x),
                 oracle_j(1, x)});
  out.push_back({"rayleigh-operator-power", "j_2(x) from the Rayleigh formula",
                 "j_l = (-1)(-x)^l (x^-1 d/dx) sin(x)/x (operator applied once)",
                 "j_l = (-x)^l (x^-1 d/dx)^l sin(x)/x", "l = 2, x = 1.5",
                 "integral representation (1/2i^l) int e^{ixt} P_l(t) dt",
                 (std::sin(x) - x * std::cos(x)) / x,
                 (3.0 * std::sin(x) - 3.0 * x * std::cos(x) - x * x * std::sin(x)) / (x * x * x),
                 oracle_j(2, x)});
  {
    const C e = std::exp(-kI * x);
    out.push_back({"rayleigh-hankel2", "h^(2)_1(x) from the Rayleigh formula",
                   "h2_l = (-1)(-x)^l (x^-1 d/dx) (i/x) e^{-ix}", "h2_l = (-x)^l (x^-1 d/dx)^l (i/x) e^{-ix}",
                   "l = 1, x = 1.5", "std::sph_bessel - i std::sph_neumann",
                   e * (1.0 / x - kI / (x * x)), -e * (1.0 / x - kI / (x * x)),
                   C{std_j(1, x), -std_n(1, x)}});
  }
  out.push_back({"n0-sign", "n_0(x)", "n_0 = cos(x)/x", "n_0 = -cos(x)/x", "x = 1.5",
                 "std::sph_neumann", std::cos(x) / x, -std::cos(x) / x, std_n(0, x)});
  out.push_back({"n1-line-label", "j_1(x) as labelled on the second line of explicit forms",
                 "j_1 = -cos(x)/x^2 - sin(x)/x (this is n_1)", "j_1 = sin(x)/x^2 - cos(x)/x", "x = 1.5",
                 "integral representation (1/2i^l) int e^{ixt} P_l(t) dt",
                 -std::cos(x) / (x * x) - std::sin(x) / x, sphfun::sph_bessel_j(1, x), oracle_j(1, x)});
  out.push_back({"n2-line", "n_2(x) (the line is also labelled j_2)",
                 "(3/x^3 - 1/x) cos(x) - (3/x^2) sin(x)", "n_2 = -(3/x^3 - 1/x) cos(x) - (3/x^2) sin(x)",
                 "x = 1.5", "std::sph_neumann",
                 (3.0 / (x * x * x) - 1.0 / x) * std::cos(x) - 3.0 / (x * x) * std::sin(x),
                 -(3.0 / (x * x * x) - 1.0 / x) * std::cos(x) - 3.0 / (x * x) * std::sin(x), std_n(2, x)});
  {
    const C e = std::exp(kI * x);
    out.push_back({"hankel1-l1-sign", "h^(1)_1(x)", "h1_1 = e^{ix} (1/x - i/x^2)",
                   "h1_1 = -e^{ix} (1/x + i/x^2)", "x = 1.5", "std::sph_bessel + i std::sph_neumann",
                   e * (1.0 / x - kI / (x * x)), -e * (1.0 / x + kI / (x * x)),
                   C{std_j(1, x), std_n(1, x)}});
  }
  {
    const double big = 1000.0;
    const int l = 1;
    out.push_back({"hankel-asymptote", "x h^(1)_l(x) e^{-ix} for x >> l",
                   "h1_l ~ (-1)^{1+l} e^{ix}/x", "h1_l ~ (-i)^{l+1} e^{ix}/x", "l = 1, x = 1000",
                   "std::sph_bessel + i std::sph_neumann", std::pow(-1.0, 1 + l),
                   std::pow(-kI, l + 1), big * C{std_j(l, big), std_n(l, big)} * std::exp(-kI * big), 1e-2});
  }
  {
    const int l = 2;
    out.push_back({"recurrence-missing-factor", "j_{l-1}(x) + j_{l+1}(x)", "y_{l-1} + y_{l+1} = (2l+1)/x",
                   "y_{l-1} + y_{l+1} = ((2l+1)/x) y_l", "l = 2, x = 1.5", "std::sph_bessel",
                   (2.0 * l + 1.0) / x, (2.0 * l + 1.0) / x * sphfun::sph_bessel_j(l, x),
                   std_j(l - 1, x) + std_j(l + 1, x)});
  }
  {
    const int l = 3;
    out.push_back({"derivative-recurrence-index", "l j_{l-1}(x) - (l+1) j_{l+1}(x)",
                   "l y_{l-1} - (l+1) y_{l+1} = (2l+1) dy_1/dx", "l y_{l-1} - (l+1) y_{l+1} = (2l+1) dy_l/dx",
                   "l = 3, x = 1.5", "std::sph_bessel", (2.0 * l + 1.0) * lib_j_prime(1, x),
                   (2.0 * l + 1.0) * lib_j_prime(l, x), l * std_j(l - 1, x) - (l + 1.0) * std_j(l + 1, x)});
  }
  {
    auto f = [](double t) { return std_j(1, t) / t; };
    out.push_back({"derivative-power-rule", "d/dx [x^-1 j_1(x)] (l = 1, where x^-1 = x^-l)",
                   "d/dx[x^-1 y_l] = x^-1 y_{l+1}", "d/dx[x^-l y_l] = -x^-l y_{l+1}", "l = 1, x = 1.5",
                   "finite difference of std::sph_bessel", sphfun::sph_bessel_j(2, x) / x,
                   -sphfun::sph_bessel_j(2, x) / x, oracle::finite_diff_derivative(f, x, 1e-3), 1e-7});
  }
  {
    const int l = 2;
    const double xl = 1.3;
    auto j = [](int order, double t) { return sphfun::sph_bessel_j(order, t); };
    out.push_back({"ladder-derivative-upper-sign", "j_2(x) from the derivative ladder, upper sign",
                   "y_l = +d/dx y_{l-1} + ((l+1)/x) y_{l+1}", "y_l = d/dx y_{l+1} + ((l+2)/x) y_{l+1}",
                   "l = 2, x = 1.3", "std::sph_bessel", lib_j_prime(l - 1, xl) + (l + 1.0) / xl * j(l + 1, xl),
                   lib_j_prime(l + 1, xl) + (l + 2.0) / xl * j(l + 1, xl), std_j(l, xl)});
    out.push_back({"ladder-three-term-upper-sign", "j_2(x) from the three-term ladder, upper sign",
                   "y_l = +y_{l+2} + ((2l+1)/x) y_{l+1}", "y_l = -y_{l+2} + ((2l+3)/x) y_{l+1}",
                   "l = 2, x = 1.3", "std::sph_bessel", j(l + 2, xl) + (2.0 * l + 1.0) / xl * j(l + 1, xl),
                   -j(l + 2, xl) + (2.0 * l + 3.0) / xl * j(l + 1, xl), std_j(l, xl)});
  }
  {
    const double xt = M_PI / 2.0;
    double corrected = 0.0;
    for (const auto& t : triple::trig_decompose(1.0, 1.0, 1.0)) corrected += t.weight * std::sin(t.freq * xt);
    out.push_back({"trig-identity", "sin(ax) sin(bx) sin(cx)",
                   "-sin[x(a+b+c)] + sin[x(a-b+c)] + sin[x(a+b-c)]",
                   "(1/4){sin[x(a+b-c)] + sin[x(b+c-a)] + sin[x(c+a-b)] - sin[x(a+b+c)]}",
                   "a = b = c = 1, x = pi/2", "direct product of sines",
                   -std::sin(3.0 * xt) + std::sin(xt) + std::sin(xt), corrected, std::pow(std::sin(xt), 3)});
  }
  {
    const double xe = 0.2;
    const double v = expint::ei(xe);
    out.push_back({"ei-sign-on-positive-axis", "sign of Ei(x) for 0 < x < 0.3725",
                   "Ei is positive on x > 0", "Ei < 0 on (0, x0) and > 0 beyond its zero x0 = 0.37250741",
                   "x = 0.2", "sign of gamma + ln x + quadrature of (e^t - 1)/t", 1.0,
                   v > 0 ? 1.0 : -1.0, oracle_ei(xe) > 0 ? 1.0 : -1.0});
  }
  {
    IntegralSpec spec;
    spec.n = 0.5;
    spec.m = 1.0;
    spec.alpha = 1.3;
    spec.beta = 0.7;
    spec.mu = 2.1;
    const double reference = oracle::quad_semi_infinite(spec).value.real();
    const double corrected = triple::eval_definite(spec).value.real();
    out.push_back({"definite-arctan-argument", "definite integral, h = k = l = 0",
                   "second term: sin[(n-2) arctan((mu+beta+alpha)/m)]",
                   "second term: sin[(n-2) arctan((mu+beta-alpha)/m)]",
                   "n = 0.5, m = 1, alpha = 1.3, beta = 0.7, mu = 2.1", "semi-infinite quadrature",
                   four_s_definite(0.5, 1.0, 1.3, 0.7, 2.1, true, 0.25), corrected, reference});
    out.push_back({"definite-prefactor", "definite integral, h = k = l = 0",
                   "pi / (alpha beta mu Gamma(3-n) sin(pi n)) {...}",
                   "(1/4) pi / (alpha beta mu Gamma(3-n) sin(pi n)) {...}",
                   "n = 0.5, m = 1, alpha = 1.3, beta = 0.7, mu = 2.1", "semi-infinite quadrature",
                   four_s_definite(0.5, 1.0, 1.3, 0.7, 2.1, false, 1.0), corrected, reference});
  }
  {
    const int n = 2;
    const double m = 1.0, a = 1.3, b = 0.7, c = 2.1, xa = 1.2;
    IntegralSpec spec;
    spec.n = n;
    spec.m = m;
    spec.alpha = a;
    spec.beta = b;
    spec.mu = c;
    const C target = oracle::integrand(spec, xa);
    const C corrected =
        derivative([&](double t) { return triple::special_case_000(n, m, a, b, c, t); }, xa);
    const char* point = "n = 2, m = 1, alpha = 1.3, beta = 0.7, mu = 2.1, x = 1.2";
    out.push_back({"assembly-gamma-order", "d/dx of the h = k = l = 0 assembly",
                   "Gamma[n+1, w x] with factor x^{n+1} (x w)^{-n-1}",
                   "Gamma[n-2, w x] w^{-(n-2)} (x^{n-2} E_{3-n}(w x) for n <= 2)", point,
                   "direct integrand x^n e^{-mx} j_0 j_0 j_0",
                   derivative([&](double t) { return assembly(n + 1, m, a, b, c, t, true, 0.25); }, xa),
                   corrected, target, 1e-6});
    out.push_back({"assembly-missing-term", "d/dx of the h = k = l = 0 assembly",
                   "A + B + C (frequencies a-b+c, a+b-c, a+b+c)",
                   "A + B + C + D with D at frequency b+c-a", point,
                   "direct integrand x^n e^{-mx} j_0 j_0 j_0",
                   derivative([&](double t) { return assembly(n - 2, m, a, b, c, t, false, 0.25); }, xa),
                   corrected, target, 1e-6});
    out.push_back({"assembly-prefactor", "d/dx of the h = k = l = 0 assembly", "-i/(2 alpha beta mu) [...]",
                   "-i/(8 alpha beta mu) [...]", point, "direct integrand x^n e^{-mx} j_0 j_0 j_0",
                   derivative([&](double t) { return assembly(n - 2, m, a, b, c, t, true, 1.0); }, xa),
                   corrected, target, 1e-6});
  }
  return out;
}

}  // namespace sbi::cli
