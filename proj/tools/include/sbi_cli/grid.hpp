#pragma once

#include <string>
#include <vector>

#include "sbi/types.hpp"

namespace sbi::cli {

/// Parses "v1,v2,..." or "min:max:count" (count evenly spaced values,
/// endpoints included). An empty string is an empty list. Throws
/// std::invalid_argument on malformed input, count < 1 or min > max.
std::vector<double> parse_values(const std::string& text);

/// Damping list: numbers as in parse_values, plus the token "i".
struct DampingValue {
  double m = 0.0;
  bool imaginary = false;
};
std::vector<DampingValue> parse_damping(const std::string& text);

/// Per-field value lists; the cartesian product is enumerated in field order
/// n, m, h, k, l, alpha, beta, mu with mu varying fastest.
struct SweepGrid {
  std::vector<double> n, h, k, l, alpha, beta, mu;
  std::vector<DampingValue> m;
};

SweepGrid parse_grid(const std::string& n, const std::string& m, const std::string& h,
                     const std::string& k, const std::string& l, const std::string& alpha,
                     const std::string& beta, const std::string& mu);

/// Throws std::invalid_argument when an order is not an integer.
std::vector<IntegralSpec> expand(const SweepGrid& grid);

}  // namespace sbi::cli
