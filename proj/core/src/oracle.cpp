#include "sbi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <queue>
#include <string>

#include "sbi/errors.hpp"
#include "sbi/sphfun.hpp"

namespace sbi::oracle {
namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct RuleResult {
  ComplexValue value;
  double error;
};

double quadpack_error(double kronrod_minus_gauss, double resabs, double resasc) {
  double err = std::abs(kronrod_minus_gauss);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
  return err;
}

RuleResult gauss_kronrod(const ComplexFunction& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  ComplexValue fv[15];
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(center - half * kXgk[j]);
    fv[14 - j] = f(center + half * kXgk[j]);
  }
  ComplexValue kronrod = kWgk[7] * fv[7];
  ComplexValue gauss = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    kronrod += kWgk[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) gauss += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  const ComplexValue mean = 0.5 * kronrod;
  double error = 0.0;
  for (int part = 0; part < 2; ++part) {
    auto comp = [part](ComplexValue z) { return part == 0 ? z.real() : z.imag(); };
    double resabs = 0.0;
    double resasc = 0.0;
    for (int j = 0; j < 15; ++j) {
      const double w = kWgk[j < 8 ? j : 14 - j];
      resabs += w * std::abs(comp(fv[j]));
      resasc += w * std::abs(comp(fv[j]) - comp(mean));
    }
    error += quadpack_error(comp(kronrod - gauss) * half, resabs * std::abs(half),
                            resasc * std::abs(half));
  }
  return {kronrod * half, error};
}

struct Interval {
  double a;
  double b;
  int depth;
  ComplexValue value;
  double error;
};

struct ByError {
  bool operator()(const Interval& x, const Interval& y) const { return x.error < y.error; }
};

EvalResult adaptive(const ComplexFunction& f, const std::vector<double>& points, const QuadConfig& cfg) {
  std::priority_queue<Interval, std::vector<Interval>, ByError> live;
  std::vector<Interval> frozen;
  ComplexValue total{};
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] == points[i]) continue;
    const RuleResult r = gauss_kronrod(f, points[i], points[i + 1]);
    live.push({points[i], points[i + 1], 0, r.value, r.error});
    total += r.value;
    total_error += r.error;
  }
  bool converged = true;
  while (!live.empty() && total_error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (static_cast<int>(live.size() + frozen.size()) >= cfg.max_intervals) {
      converged = false;
      break;
    }
    Interval worst = live.top();
    live.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.depth >= cfg.max_depth || mid <= worst.a || mid >= worst.b) {
      frozen.push_back(worst);
      continue;
    }
    const RuleResult left = gauss_kronrod(f, worst.a, mid);
    const RuleResult right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    live.push({worst.a, mid, worst.depth + 1, left.value, left.error});
    live.push({mid, worst.b, worst.depth + 1, right.value, right.error});
  }
  if (!frozen.empty()) converged = false;
  // Deterministic final reduction in interval order.
  std::vector<Interval> all = std::move(frozen);
  while (!live.empty()) {
    all.push_back(live.top());
    live.pop();
  }
  std::sort(all.begin(), all.end(), [](const Interval& x, const Interval& y) { return x.a < y.a; });
  EvalResult result;
  result.method = Method::oracle;
  for (const Interval& iv : all) {
    result.value += iv.value;
    result.err_estimate += iv.error;
  }
  result.converged = converged;
  return result;
}

void require_finite_interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("quadrature requires finite limits a < b");
  }
}

// Wynn epsilon extrapolation of a sequence of partial sums.
ComplexValue wynn_epsilon(const std::vector<ComplexValue>& s) {
  const std::size_t count = s.size();
  if (count < 3) return s.back();
  std::vector<ComplexValue> previous(count + 1, ComplexValue{});  // ε_{k-1}
  std::vector<ComplexValue> current(s.begin(), s.end());          // ε_k
  ComplexValue best = s.back();
  for (std::size_t k = 0; current.size() > 1; ++k) {
    std::vector<ComplexValue> next(current.size() - 1);
    for (std::size_t j = 0; j + 1 < current.size(); ++j) {
      const ComplexValue diff = current[j + 1] - current[j];
      if (std::abs(diff) == 0.0) return k % 2 == 0 ? current[j + 1] : best;
      next[j] = previous[j + 1] + 1.0 / diff;
    }
    previous = std::move(current);
    current = std::move(next);
    if (k % 2 == 1) best = current.back();
  }
  return best;
}

double signed_bessel(int l, double freq, double x) {
  const double value = sphfun::sph_bessel_j(l, std::abs(freq) * x);
  return (freq < 0.0 && l % 2 == 1) ? -value : value;
}

// Breakpoints every `step` on [a, b], at most `cap` panels.
std::vector<double> panel_points(double a, double b, double step, int cap) {
  const double count = std::ceil((b - a) / step);
  const int panels = static_cast<int>(std::clamp(count, 1.0, static_cast<double>(cap)));
  std::vector<double> points(panels + 1);
  for (int i = 0; i <= panels; ++i) points[i] = a + (b - a) * i / panels;
  points.back() = b;
  return points;
}

// Finite expansion of the product into c x^p e^{iωx} via
// j_l(y) = ½ Σ_{σ=±1} (-σi)^{l+1} e^{iσy} Σ_k (σi/2)^k (l+k)!/(k!(l-k)!) y^{-k-1}.
struct Component {
  ComplexValue coeff;
  double power;
  double omega;
};

std::vector<Component> hankel_components(const BesselProduct& p) {
  std::vector<Component> comps{{ComplexValue{1.0, 0.0}, p.n, 0.0}};
  for (std::size_t i = 0; i < p.orders.size(); ++i) {
    const int l = p.orders[i];
    const double w = std::abs(p.freqs[i]);
    const double parity = (p.freqs[i] < 0.0 && l % 2 == 1) ? -1.0 : 1.0;
    std::vector<Component> factor;
    for (int sigma : {1, -1}) {
      const ComplexValue lead = std::pow(ComplexValue{0.0, -1.0 * sigma}, l + 1);
      double ratio = 1.0;  // (l+k)!/(k!(l-k)!)
      for (int k = 0; k <= l; ++k) {
        if (k > 0) ratio *= static_cast<double>((l + k) * (l - k + 1)) / k;
        const ComplexValue c = 0.5 * parity * lead * std::pow(ComplexValue{0.0, 0.5 * sigma}, k) *
                               ratio * std::pow(w, -k - 1.0);
        factor.push_back({c, -k - 1.0, sigma * w});
      }
    }
    std::vector<Component> next;
    for (const Component& a : comps) {
      for (const Component& b : factor) next.push_back({a.coeff * b.coeff, a.power + b.power, a.omega + b.omega});
    }
    comps = std::move(next);
  }
  return comps;
}

// Components grouped by frequency: g_ω(x) = Σ c x^p.
std::map<double, std::vector<Component>> group_by_frequency(std::vector<Component> comps, double zero_tol) {
  std::map<double, std::vector<Component>> groups;
  for (Component& c : comps) {
    if (std::abs(c.omega) <= zero_tol) c.omega = 0.0;
    auto it = groups.lower_bound(c.omega - zero_tol);
    if (it != groups.end() && std::abs(it->first - c.omega) <= zero_tol) {
      it->second.push_back(c);
    } else {
      groups[c.omega].push_back(c);
    }
  }
  return groups;
}

ComplexValue eval_group(const std::vector<Component>& group, ComplexValue x) {
  ComplexValue sum{};
  for (const Component& c : group) sum += c.coeff * std::pow(x, c.power);
  return sum;
}

// ∫_X^∞ g(x) dx for a non-oscillating group (all powers < -1).
ComplexValue zero_frequency_tail(const std::vector<Component>& group, double X) {
  ComplexValue sum{};
  for (const Component& c : group) sum -= c.coeff * std::pow(X, c.power + 1.0) / (c.power + 1.0);
  return sum;
}

// ∫_X^∞ g(x) e^{iωx} dx along x = X + i sign(ω) t.
EvalResult rotated_tail(const std::vector<Component>& group, double omega, double X, const QuadConfig& cfg) {
  const double direction = omega > 0.0 ? 1.0 : -1.0;
  const double rate = std::abs(omega);
  const ComplexValue phase = std::exp(ComplexValue{0.0, omega * X});
  const ComplexValue jacobian{0.0, direction};
  auto f = [&](double t) {
    const ComplexValue z{X, direction * t};
    return jacobian * phase * eval_group(group, z) * std::exp(-rate * t);
  };
  const double length = 45.0 / rate;
  return adaptive(f, panel_points(0.0, length, 2.0 / rate, 64), cfg);
}

// ∫_X^∞ g(x) e^{iωx} dx on the real axis: half-period panels + Wynn epsilon.
EvalResult summed_tail(const std::vector<Component>& group, double omega, double X, const QuadConfig& cfg) {
  const double step = M_PI / std::abs(omega);
  auto f = [&](double x) { return eval_group(group, ComplexValue{x, 0.0}) * std::exp(ComplexValue{0.0, omega * x}); };
  QuadConfig panel_cfg = cfg;
  panel_cfg.abs_tol = cfg.abs_tol * 1e-3;
  std::vector<ComplexValue> partial;
  ComplexValue running{};
  double err = 0.0;
  ComplexValue last_estimate{};
  int stable = 0;
  for (int k = 0; k < 400; ++k) {
    const EvalResult panel = adaptive(f, {X + k * step, X + (k + 1) * step}, panel_cfg);
    running += panel.value;
    err += panel.err_estimate;
    partial.push_back(running);
    if (partial.size() > 40) partial.erase(partial.begin());
    const ComplexValue estimate = wynn_epsilon(partial);
    const double change = std::abs(estimate - last_estimate);
    last_estimate = estimate;
    if (k >= 8 && change <= 0.01 * cfg.abs_tol) {
      if (++stable >= 3) {
        EvalResult r;
        r.value = estimate;
        r.err_estimate = err + change;
        r.method = Method::oracle;
        return r;
      }
    } else {
      stable = 0;
    }
  }
  EvalResult r;
  r.value = last_estimate;
  r.err_estimate = err;
  r.method = Method::oracle;
  r.converged = false;
  return r;
}

int total_order(const BesselProduct& p) {
  int sum = 0;
  for (int l : p.orders) sum += l;
  return sum;
}

void check_product(const BesselProduct& p) {
  if (p.orders.size() != p.freqs.size() || p.orders.empty()) {
    throw DomainError("Bessel product needs matching, nonempty order and frequency lists");
  }
  for (std::size_t i = 0; i < p.orders.size(); ++i) {
    if (p.orders[i] < 0) throw DomainError("orders must be non-negative");
    if (p.freqs[i] == 0.0 || !std::isfinite(p.freqs[i])) throw DomainError("frequencies must be finite and nonzero");
  }
  if (!std::isfinite(p.n) || !std::isfinite(p.m) || p.m < 0.0) {
    throw DomainError("power n must be finite and damping m finite and >= 0");
  }
  const int factors = static_cast<int>(p.orders.size());
  if (!(p.n + total_order(p) > -1.0)) {
    throw DivergenceError("integral diverges at the origin: requires n + sum of orders > -1");
  }
  if (p.m == 0.0 && !(p.n < factors - 1.0)) {
    throw DivergenceError("integral diverges at infinity: m = 0 requires n < " + std::to_string(factors - 1));
  }
}

EvalResult add(EvalResult a, const EvalResult& b) {
  a.value += b.value;
  a.err_estimate += b.err_estimate;
  a.converged = a.converged && b.converged;
  return a;
}

// ∫_0^{x1}, substituting x = t^q when the integrand has an integrable
// power singularity x^ν, ν < 0, at the origin.
EvalResult origin_piece(const BesselProduct& p, double x1, const QuadConfig& cfg) {
  const double nu = p.n + total_order(p);
  if (nu >= 0.0) {
    return adaptive([&](double x) { return ComplexValue{product_integrand(p, x), 0.0}; }, {0.0, x1}, cfg);
  }
  const double q = 1.0 / (nu + 1.0);
  auto g = [&](double t) { return ComplexValue{product_integrand(p, std::pow(t, q)) * q * std::pow(t, q - 1.0), 0.0}; };
  return adaptive(g, {0.0, std::pow(x1, 1.0 / q)}, cfg);
}

// Upper bound of ∫_X^∞ x^n e^{-mx} dx, valid for m X >= 2 max(n, 0).
double exponential_tail_bound(double n, double m, double X) {
  return 2.0 / m * std::pow(X, n) * std::exp(-m * X);
}

}  // namespace

void QuadConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
  if (max_depth < 10) throw DomainError("max_depth must be at least 10");
  if (max_intervals < 1) throw DomainError("max_intervals must be positive");
}

EvalResult quad_finite_complex(const ComplexFunction& f, double a, double b, const QuadConfig& cfg) {
  cfg.validate();
  require_finite_interval(a, b);
  return adaptive(f, {a, b}, cfg);
}

EvalResult quad_finite(const RealFunction& f, double a, double b, const QuadConfig& cfg) {
  cfg.validate();
  require_finite_interval(a, b);
  EvalResult r = adaptive([&](double x) { return ComplexValue{f(x), 0.0}; }, {a, b}, cfg);
  r.value.imag(0.0);
  return r;
}

EvalResult quad_finite_points(const RealFunction& f, std::vector<double> points, const QuadConfig& cfg) {
  cfg.validate();
  if (points.size() < 2) throw DomainError("quad_finite_points needs at least two points");
  std::sort(points.begin(), points.end());
  require_finite_interval(points.front(), points.back());
  EvalResult r = adaptive([&](double x) { return ComplexValue{f(x), 0.0}; }, points, cfg);
  r.value.imag(0.0);
  return r;
}

double product_integrand(const BesselProduct& p, double x) {
  double value = std::pow(x, p.n) * std::exp(-p.m * x);
  for (std::size_t i = 0; i < p.orders.size(); ++i) value *= signed_bessel(p.orders[i], p.freqs[i], x);
  return value;
}

ComplexValue integrand(const IntegralSpec& spec, double x) {
  const double bessel = signed_bessel(spec.h, spec.alpha, x) * signed_bessel(spec.k, spec.beta, x) *
                        signed_bessel(spec.l, spec.mu, x);
  const double power = std::pow(x, spec.n);
  if (spec.damping == Damping::imaginary_unit) return power * bessel * std::exp(ComplexValue{0.0, -x});
  return {power * std::exp(-spec.m * x) * bessel, 0.0};
}

EvalResult quad_product_semi_infinite(const BesselProduct& p, const QuadConfig& cfg) {
  cfg.validate();
  check_product(p);
  double fastest = 0.0;
  double slowest = std::numeric_limits<double>::infinity();
  for (double w : p.freqs) {
    fastest += std::abs(w);
    slowest = std::min(slowest, std::abs(w));
  }
  const double half_period = M_PI / fastest;
  const double x1 = std::min(1.0, half_period);
  QuadConfig piece_cfg = cfg;
  piece_cfg.abs_tol = 0.1 * cfg.abs_tol;

  EvalResult result = origin_piece(p, x1, piece_cfg);
  auto f = [&](double x) { return ComplexValue{product_integrand(p, x), 0.0}; };

  if (p.m > 0.0) {
    double X = std::max({x1 + half_period, 2.0 * std::max(p.n, 0.0) / p.m, 1.0});
    while (exponential_tail_bound(p.n, p.m, X) > 0.1 * cfg.abs_tol) X *= 1.05;
    if (cfg.tail_policy == TailPolicy::exponential_bound) {
      result = add(result, adaptive(f, panel_points(x1, X, half_period, 4000), piece_cfg));
      result.err_estimate += exponential_tail_bound(p.n, p.m, X);
    } else {
      ComplexValue running = result.value;
      std::vector<ComplexValue> partial{running};
      QuadConfig panel_cfg = cfg;
      panel_cfg.abs_tol = 1e-3 * cfg.abs_tol;
      ComplexValue last{};
      int stable = 0;
      bool done = false;
      for (int k = 0; !done; ++k) {
        const double a = x1 + k * half_period;
        const EvalResult panel = adaptive(f, {a, a + half_period}, panel_cfg);
        running += panel.value;
        result.err_estimate += panel.err_estimate;
        result.converged = result.converged && panel.converged;
        partial.push_back(running);
        if (partial.size() > 40) partial.erase(partial.begin());
        const ComplexValue estimate = wynn_epsilon(partial);
        const double change = std::abs(estimate - last);
        last = estimate;
        stable = (k >= 8 && change <= 0.01 * cfg.abs_tol) ? stable + 1 : 0;
        if (stable >= 3) {
          result.value = estimate;
          result.err_estimate += change;
          done = true;
        } else if (a + half_period >= X) {
          result.value = running;
          result.err_estimate += exponential_tail_bound(p.n, p.m, a + half_period);
          done = true;
        }
      }
    }
  } else {
    const double X = std::max(x1, (10.0 + 2.0 * total_order(p)) / slowest);
    result = add(result, adaptive(f, panel_points(x1, X, half_period, 4000), piece_cfg));
    const auto groups = group_by_frequency(hankel_components(p), 64.0 * kEps * fastest);
    QuadConfig tail_cfg = cfg;
    tail_cfg.abs_tol = 0.1 * cfg.abs_tol / static_cast<double>(groups.size());
    for (const auto& [omega, group] : groups) {
      if (omega == 0.0) {
        result.value += zero_frequency_tail(group, X);
        continue;
      }
      result = add(result, cfg.tail_policy == TailPolicy::exponential_bound
                               ? rotated_tail(group, omega, X, tail_cfg)
                               : summed_tail(group, omega, X, tail_cfg));
    }
  }
  result.value.imag(0.0);
  result.method = Method::oracle;
  return result;
}

EvalResult quad_semi_infinite(const IntegralSpec& spec, const QuadConfig& cfg) {
  validate(spec);
  if (spec.damping == Damping::imaginary_unit) {
    throw UnsupportedError("semi-infinite quadrature is defined for real damping only");
  }
  BesselProduct p;
  p.n = spec.n;
  p.m = spec.m;
  p.orders = {spec.h, spec.k, spec.l};
  p.freqs = {spec.alpha, spec.beta, spec.mu};
  return quad_product_semi_infinite(p, cfg);
}

}  // namespace sbi::oracle
