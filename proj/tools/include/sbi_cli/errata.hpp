#pragma once

#include <string>
#include <vector>

#include "sbi/types.hpp"

namespace sbi::cli {

/// One published formula that disagrees with its own defining relations,
/// demonstrated numerically: the printed form, the corrected form and an
/// independent reference value of the same quantity at the same point.
struct ErrataEntry {
  std::string id;
  std::string quantity;
  std::string printed_form;
  std::string corrected_form;
  std::string point;
  std::string oracle_method;
  ComplexValue printed;
  ComplexValue corrected;
  ComplexValue oracle;
  /// Agreement means |value - oracle| <= tolerance * max(1, |oracle|).
  double tolerance = 1e-8;

  bool printed_matches() const;
  bool corrected_matches() const;
};

/// The full report in a fixed order.
std::vector<ErrataEntry> errata_entries();

}  // namespace sbi::cli
