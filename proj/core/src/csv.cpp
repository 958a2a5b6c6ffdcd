#include "oor/csv.hpp"

#include <cmath>
#include <cstdio>

namespace oor {

std::string csv_double(double v) {
  char buf[40];
  // integral values print as plain integers
  if (v == std::floor(v) && std::fabs(v) < 9.007199254740992e15) {
    std::snprintf(buf, sizeof buf, "%.0f", v);
    return buf;
  }
  // otherwise the shortest representation that round-trips
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    double back = 0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) break;
  }
  return buf;
}

void CsvWriter::write_field(std::string_view f, bool first) {
  if (!first) out_ << ',';
  const bool needs_quotes = f.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) {
    out_ << f;
    return;
  }
  out_ << '"';
  for (char c : f) {
    if (c == '"') out_ << '"';
    out_ << c;
  }
  out_ << '"';
}

void CsvWriter::row(std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (auto f : fields) {
    write_field(f, first);
    first = false;
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  bool first = true;
  for (const auto& f : fields) {
    write_field(f, first);
    first = false;
  }
  out_ << '\n';
}

}  // namespace oor
