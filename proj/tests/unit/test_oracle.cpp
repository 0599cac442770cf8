#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sbi/errors.hpp"
#include "sbi/oracle.hpp"
#include "sbi/sphfun.hpp"
#include "sbi/triple.hpp"

namespace {

using namespace sbi::oracle;
using sbi::IntegralSpec;
constexpr double kPi = std::numbers::pi;

IntegralSpec make_spec(double n, double m, int h, int k, int l, double a, double b, double c) {
  IntegralSpec s;
  s.n = n;
  s.m = m;
  s.h = h;
  s.k = k;
  s.l = l;
  s.alpha = a;
  s.beta = b;
  s.mu = c;
  return s;
}

QuadConfig with_policy(TailPolicy p) {
  QuadConfig cfg;
  cfg.tail_policy = p;
  return cfg;
}

TEST(QuadFinite, Examples) {
  EXPECT_NEAR(quad_finite([](double x) { return x; }, 0.0, 1.0).value.real(), 0.5, 1e-15);
  EXPECT_NEAR(quad_finite([](double x) { return std::sin(x); }, 0.0, kPi).value.real(), 2.0, 1e-14);
  const auto r = quad_finite([](double x) { return sbi::sphfun::sph_bessel_j(0, x); }, 1e-300, 40.0 * kPi);
  EXPECT_NEAR(r.value.real(), 1.56283958673632065699, 1e-10);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.method, sbi::Method::oracle);
}

TEST(QuadFinite, ErrorEstimateCoversTrueError) {
  const auto r = quad_finite([](double x) { return std::exp(-x) * std::cos(7.0 * x); }, 0.0, 3.0);
  const double exact = (1.0 - std::exp(-3.0) * (std::cos(21.0) - 7.0 * std::sin(21.0))) / 50.0;
  EXPECT_LE(std::abs(r.value.real() - exact), std::max(r.err_estimate, 1e-15));
  EXPECT_LE(r.err_estimate, std::max(1e-10, 1e-10 * std::abs(exact)));
}

TEST(QuadFinite, SelfConsistencyUnderSplits) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> split(0.0, 1.0);
  auto f = [](double x) { return std::pow(x, 2.5) * std::exp(-0.3 * x) * sbi::sphfun::sph_bessel_j(2, 1.7 * x); };
  const QuadConfig cfg;
  const double a = 0.1, b = 12.0;
  const double whole = quad_finite(f, a, b, cfg).value.real();
  for (int i = 0; i < 20; ++i) {
    const double c = a + (b - a) * split(rng);
    const double parts = quad_finite(f, a, c, cfg).value.real() + quad_finite(f, c, b, cfg).value.real();
    EXPECT_LE(std::abs(parts - whole), 2.0 * cfg.abs_tol) << c;
  }
}

TEST(QuadFinite, RefinementMonotonicity) {
  auto f = [](double x) { return std::sqrt(x) * std::cos(9.0 * x) * std::exp(-x); };
  QuadConfig ref_cfg;
  ref_cfg.abs_tol = 1e-15;
  ref_cfg.rel_tol = 1e-15;
  const double ref = quad_finite(f, 0.0, 4.0, ref_cfg).value.real();
  double previous = INFINITY;
  for (double tol = 1e-3; tol >= 1e-12; tol /= 2.0) {
    QuadConfig cfg;
    cfg.abs_tol = 1e-300;
    cfg.rel_tol = tol;
    const double diff = std::abs(quad_finite(f, 0.0, 4.0, cfg).value.real() - ref);
    EXPECT_LE(diff, previous + 1e-15) << tol;
    previous = diff;
  }
}

TEST(QuadFinite, NonConvergenceIsFlagged) {
  QuadConfig cfg;
  cfg.max_depth = 10;
  const auto r = quad_finite([](double x) { return 1.0 / x; }, 0.0, 1.0, cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_TRUE(std::isfinite(r.value.real()));
  EXPECT_GT(r.err_estimate, cfg.abs_tol);
}

TEST(QuadFinite, ComplexAndBreakpoints) {
  const auto c = quad_finite_complex([](double x) { return std::exp(sbi::ComplexValue{0.0, x}); }, 0.0, kPi);
  EXPECT_NEAR(c.value.real(), 0.0, 1e-14);
  EXPECT_NEAR(c.value.imag(), 2.0, 1e-14);
  const auto p = quad_finite_points([](double x) { return std::abs(x - 1.0); }, {0.0, 1.0, 3.0});
  EXPECT_NEAR(p.value.real(), 2.5, 1e-14);
}

TEST(QuadFinite, Deterministic) {
  auto f = [](double x) { return std::sin(x * x) / (1.0 + x); };
  const auto a = quad_finite(f, 0.0, 10.0);
  const auto b = quad_finite(f, 0.0, 10.0);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.err_estimate, b.err_estimate);
}

TEST(QuadConfig, Validation) {
  QuadConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.abs_tol = 0.0;
  EXPECT_THROW(cfg.validate(), sbi::DomainError);
  cfg = QuadConfig{};
  cfg.rel_tol = -1.0;
  EXPECT_THROW(cfg.validate(), sbi::DomainError);
  cfg = QuadConfig{};
  cfg.max_depth = 9;
  EXPECT_THROW(cfg.validate(), sbi::DomainError);
  EXPECT_THROW(quad_finite([](double) { return 1.0; }, 1.0, 0.0), sbi::DomainError);
}

TEST(QuadSemiInfinite, SineCubeBothPolicies) {
  const auto s = make_spec(0, 0, 0, 0, 0, 1, 1, 1);
  for (TailPolicy p : {TailPolicy::exponential_bound, TailPolicy::period_summation}) {
    const auto r = quad_semi_infinite(s, with_policy(p));
    EXPECT_NEAR(r.value.real(), 3.0 * kPi / 8.0, 1e-9);
    EXPECT_TRUE(r.converged);
  }
}

TEST(QuadSemiInfinite, PoliciesAgreeWithDamping) {
  const IntegralSpec specs[] = {
      make_spec(0, 1, 0, 0, 0, 1, 1, 1),       make_spec(2, 0.5, 1, 0, 2, 1.3, 0.7, 2.1),
      make_spec(-0.5, 2, 0, 0, 0, 0.4, 1.9, 1.1), make_spec(3, 0.25, 2, 2, 1, 2.5, 0.6, 1.0),
      make_spec(0.5, 1, 1, 1, 0, 1.1, 0.9, 2.0),
  };
  for (const auto& s : specs) {
    const auto a = quad_semi_infinite(s, with_policy(TailPolicy::exponential_bound));
    const auto b = quad_semi_infinite(s, with_policy(TailPolicy::period_summation));
    EXPECT_LE(std::abs(a.value - b.value), std::max(1e-9, a.err_estimate + b.err_estimate)) << sbi::describe(s);
  }
}

TEST(QuadSemiInfinite, OriginIntegrablePower) {
  const auto r = quad_semi_infinite(make_spec(-0.5, 1, 0, 0, 0, 1, 1, 1));
  EXPECT_TRUE(std::isfinite(r.value.real()));
  EXPECT_NEAR(r.value.real(), sbi::triple::eval_definite(make_spec(-0.5, 1, 0, 0, 0, 1, 1, 1)).value.real(), 1e-8);
}

TEST(QuadSemiInfinite, MatchesClosedFormWithoutDamping) {
  for (const auto& s : {make_spec(0, 0, 1, 1, 1, 1.0, 1.5, 2.0), make_spec(1, 0, 0, 1, 0, 1.3, 0.7, 2.1),
                        make_spec(-0.5, 0, 0, 0, 0, 1.3, 0.7, 2.1)}) {
    for (TailPolicy p : {TailPolicy::exponential_bound, TailPolicy::period_summation}) {
      const double closed = sbi::triple::eval_definite(s).value.real();
      EXPECT_NEAR(quad_semi_infinite(s, with_policy(p)).value.real(), closed, 1e-8) << sbi::describe(s);
    }
  }
}

TEST(QuadSemiInfinite, Divergence) {
  EXPECT_THROW(quad_semi_infinite(make_spec(2, 0, 0, 0, 0, 1, 1, 1)), sbi::DivergenceError);
  EXPECT_THROW(quad_semi_infinite(make_spec(-1, 1, 0, 0, 0, 1, 1, 1)), sbi::DivergenceError);
  auto s = make_spec(1, 0, 0, 0, 0, 1, 1, 1);
  s.damping = sbi::Damping::imaginary_unit;
  EXPECT_THROW(quad_semi_infinite(s), sbi::UnsupportedError);
}

TEST(QuadProduct, Orthogonality) {
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; l <= 4; ++l) {
      double full = 0.0;
      if ((k + l) % 2 == 0) {
        BesselProduct p;
        p.orders = {k, l};
        p.freqs = {1.0, 1.0};
        full = 2.0 * quad_product_semi_infinite(p).value.real();
      }
      const double expected = k == l ? kPi / (2.0 * l + 1.0) : 0.0;
      EXPECT_NEAR(full, expected, 1e-3) << k << " " << l;
    }
  }
}

TEST(FiniteDiff, Examples) {
  EXPECT_NEAR(finite_diff_derivative([](double x) { return x * x; }, 3.0, 1e-3), 6.0, 1e-10);
  EXPECT_NEAR(finite_diff_derivative([](double x) { return std::sin(x); }, 0.0, 1e-3), 1.0, 1e-10);
}

}  // namespace
