#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace oor {

/// Stable text form for report values: shortest round-trip-exact decimal,
/// '.' separator, no locale involvement.
std::string csv_double(double v);

/// Minimal RFC-4180-style writer: header row, comma separator, quoting only
/// when a field needs it. Output is byte-stable for identical inputs.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void row(std::initializer_list<std::string_view> fields);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
  void write_field(std::string_view f, bool first);
};

}  // namespace oor
