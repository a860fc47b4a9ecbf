#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bredonk/bredon/datum.hpp"

namespace bredonk::cli {

struct PrimeRange {
  std::uint64_t lo = 2;
  std::uint64_t hi = 200;

  /// "a..b" with a ≤ b. Throws DomainError otherwise.
  static PrimeRange parse(std::string_view text);
  std::string to_string() const;
};

struct VerifyOptions {
  PrimeRange primes;
  /// Replaces the shipped SL_3(Z) datum, e.g. to check that a corrupted
  /// complex is caught.
  std::optional<GammaCWDatum> sl3;
};

struct CheckResult {
  std::string anchor;
  bool passed = false;
  std::string detail;
};

/// Every regression check, in a fixed order. The prime sweep runs in parallel;
/// the result does not depend on the thread count.
std::vector<CheckResult> verify_all(const VerifyOptions& options);

}  // namespace bredonk::cli
