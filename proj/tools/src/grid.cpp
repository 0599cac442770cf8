#include "sbi_cli/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sbi::cli {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& raw) {
  const std::string s = trim(raw);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument("not a finite number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

// Negative orders pass through so that spec validation reports them.
int to_order(double v) {
  if (v != std::floor(v) || std::abs(v) > 1000.0) {
    throw std::invalid_argument("orders must be integers");
  }
  return static_cast<int>(v);
}

}  // namespace

std::vector<double> parse_values(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) return {};
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be min:max:count, got '" + s + "'");
    const double lo = parse_number(parts[0]);
    const double hi = parse_number(parts[1]);
    const double count = parse_number(parts[2]);
    if (count < 1 || count != std::floor(count)) throw std::invalid_argument("range count must be an integer >= 1");
    if (lo > hi) throw std::invalid_argument("range min must not exceed max");
    const int c = static_cast<int>(count);
    if (c == 1) return {lo};
    std::vector<double> out(c);
    for (int i = 0; i < c; ++i) out[i] = (lo * (c - 1 - i) + hi * i) / (c - 1);
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_number(part));
  return out;
}

std::vector<DampingValue> parse_damping(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) return {};
  if (s.find(':') != std::string::npos) {
    std::vector<DampingValue> out;
    for (double v : parse_values(s)) out.push_back({v, false});
    return out;
  }
  std::vector<DampingValue> out;
  for (const auto& part : split(s, ',')) {
    if (trim(part) == "i") {
      out.push_back({0.0, true});
    } else {
      out.push_back({parse_number(part), false});
    }
  }
  return out;
}

SweepGrid parse_grid(const std::string& n, const std::string& m, const std::string& h,
                     const std::string& k, const std::string& l, const std::string& alpha,
                     const std::string& beta, const std::string& mu) {
  SweepGrid g;
  g.n = parse_values(n);
  g.m = parse_damping(m);
  g.h = parse_values(h);
  g.k = parse_values(k);
  g.l = parse_values(l);
  g.alpha = parse_values(alpha);
  g.beta = parse_values(beta);
  g.mu = parse_values(mu);
  return g;
}

std::vector<IntegralSpec> expand(const SweepGrid& g) {
  std::vector<IntegralSpec> out;
  for (double n : g.n)
    for (const DampingValue& m : g.m)
      for (double h : g.h)
        for (double k : g.k)
          for (double l : g.l)
            for (double a : g.alpha)
              for (double b : g.beta)
                for (double c : g.mu) {
                  IntegralSpec s;
                  s.n = n;
                  s.m = m.m;
                  s.damping = m.imaginary ? Damping::imaginary_unit : Damping::real;
                  s.h = to_order(h);
                  s.k = to_order(k);
                  s.l = to_order(l);
                  s.alpha = a;
                  s.beta = b;
                  s.mu = c;
                  out.push_back(s);
                }
  return out;
}

}  // namespace sbi::cli
