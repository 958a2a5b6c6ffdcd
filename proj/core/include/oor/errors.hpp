#pragma once

#include <stdexcept>
#include <string>

namespace oor {

/// Error categories surfaced by the library. The CLI maps `validation` and
/// `parse` to exit status 2, everything else to 1.
enum class errc {
  domain,              // mathematically invalid argument (e.g. totient of 0)
  capacity,            // exceeds a configured width or enumeration ceiling
  validation,          // input violates a documented invariant
  parse,               // malformed document
  length_mismatch,     // bit strings of unequal length combined
  invalid_seed,        // all-zero LFSR seed
  degenerate_model,    // e.g. P(exactly one path available) = 0
  scenario_too_small,  // 2^L - 2 < eta + 1
  access_denied,       // sealed layer opened with the wrong private handle
  misconfigured,       // circuit key/wavelength lookup failed mid-transmission
  blocked,             // no path available in this trial's sample
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace oor
