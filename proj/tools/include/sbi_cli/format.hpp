#pragma once

#include <string>
#include <vector>

#include "sbi/types.hpp"

namespace sbi::cli {

enum class Format { csv, json };

/// Every float leaves the tool through this: "%.12e".
std::string format_double(double v);

/// A complex value prints as its real part when the imaginary part is zero,
/// otherwise as "re+imi".
std::string format_complex(ComplexValue v);

std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

/// Minimal streaming JSON writer with fixed float formatting.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(const std::string& s);
  JsonWriter& value(const char* s);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  JsonWriter& value(ComplexValue v);
  JsonWriter& null();
  const std::string& str() const { return out_; }

 private:
  void separate();
  std::string out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

std::string json_escape(const std::string& s);

}  // namespace sbi::cli
