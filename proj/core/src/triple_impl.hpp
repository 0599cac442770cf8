#pragma once

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "expint_impl.hpp"
#include "sbi/triple.hpp"
#include "scalar.hpp"

namespace sbi::triple::detail {

using sbi::detail::complex_t;

// coeff * x^{-power} * kind(freq x): one piece of j_l(freq x).
struct Factor {
  double coeff;
  int power;
  Kind kind;
};

inline std::vector<Factor> bessel_factors(int l, double freq) {
  const BesselExpansion e = bessel_expansion(l);
  std::vector<Factor> out;
  double scale = 1.0;
  for (std::size_t r = 1; r < e.sin_coeff.size(); ++r) {
    scale /= freq;
    if (e.sin_coeff[r] != 0.0) out.push_back({e.sin_coeff[r] * scale, static_cast<int>(r), Kind::sin});
    if (e.cos_coeff[r] != 0.0) out.push_back({e.cos_coeff[r] * scale, static_cast<int>(r), Kind::cos});
  }
  return out;
}

// Folds negative frequencies, snaps near-zero ones, merges duplicates and
// drops terms that vanish identically.
inline std::vector<BaseTerm> canonicalize(std::vector<BaseTerm> terms, double zero_tol) {
  for (BaseTerm& t : terms) {
    if (std::abs(t.freq) <= zero_tol) t.freq = 0.0;
    if (t.freq < 0.0) {
      t.freq = -t.freq;
      if (t.kind == Kind::sin) t.coeff = -t.coeff;
    }
  }
  std::stable_sort(terms.begin(), terms.end(), [](const BaseTerm& a, const BaseTerm& b) {
    return std::tie(a.power, a.kind, a.freq) < std::tie(b.power, b.kind, b.freq);
  });
  std::vector<BaseTerm> merged;
  for (const BaseTerm& t : terms) {
    if (!merged.empty()) {
      BaseTerm& last = merged.back();
      if (last.power == t.power && last.kind == t.kind && std::abs(last.freq - t.freq) <= zero_tol) {
        last.coeff += t.coeff;
        continue;
      }
    }
    merged.push_back(t);
  }
  std::vector<BaseTerm> out;
  for (const BaseTerm& t : merged) {
    if (t.coeff == 0.0) continue;
    if (t.kind == Kind::sin && t.freq == 0.0) continue;
    out.push_back(t);
  }
  return out;
}

// ∫ x^p e^{-mx} kind(γx) dx as Re/Im of Z_p with scale c = -m + iγ.
template <class R>
complex_t<R> base_antiderivative(const BaseTerm& term, double m, double x) {
  using C = complex_t<R>;
  const C c(R(-m), R(term.freq));
  const C z = sbi::detail::z_antiderivative<R>(term.power, c, R(x));
  return term.kind == Kind::sin ? C(z.imag(), R(0)) : C(z.real(), R(0));
}

// ∫ x^p e^{-ix} kind(γx) dx from the two exponentials e^{i(±γ-1)x}.
template <class R>
complex_t<R> base_antiderivative_imaginary(const BaseTerm& term, double x) {
  using C = complex_t<R>;
  const C up = sbi::detail::z_antiderivative<R>(term.power, C(R(0), R(term.freq) - R(1)), R(x));
  const C down = sbi::detail::z_antiderivative<R>(term.power, C(R(0), -R(term.freq) - R(1)), R(x));
  if (term.kind == Kind::sin) return (up - down) / C(R(0), R(2));
  return (up + down) / C(R(2), R(0));
}

}  // namespace sbi::triple::detail
