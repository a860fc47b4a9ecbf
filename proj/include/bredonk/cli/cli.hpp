#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bredonk/bredon/datum.hpp"
#include "bredonk/fuchsian/signature.hpp"
#include "bredonk/ko_assembly/ko_assembly.hpp"

namespace bredonk::cli {

enum ExitCode : int { Ok = 0, DomainFailure = 1, InputParseFailure = 2, VerificationFailure = 3 };

struct Input {
  std::string key;
  std::string value;
  bool numeric = false;
};

/// Result of one named computation, independent of output format.
struct Report {
  std::string command;
  std::vector<Input> inputs;
  /// Bredon homology H_0, H_1, ... when the command computes it.
  std::optional<std::vector<FinAbGroup>> homology;
  /// "K" (period 2) or "KO" (period 8).
  std::string theory = "K";
  GradedGroup groups;
};

/// Equivariant KO from Bredon homology when every stabiliser of `datum` has
/// coinciding real, complex and quaternionic tables and the E^2 page is a
/// single column. Throws DomainError otherwise.
GradedGroup ko_from_homology(const GammaCWDatum& datum, const std::vector<FinAbGroup>& h);

Report sl3_report(bool ko, const GammaCWDatum& sl3);
Report gl3_report(bool ko, const GammaCWDatum& sl3);
Report fuchsian_report(const Signature& sig, bool lift, bool ko);
Report hecke_report(std::uint64_t p, bool lift, bool ko);
Report psl2zp_report(std::uint64_t p);
Report sl2zp_report(std::uint64_t p);
Report cstar_report(std::uint64_t p, bool ko);
Report complex_report(const GammaCWDatum& datum, const std::string& path, bool ko);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

/// Parses a prime argument; anything but a prime below 2^64 is a DomainError.
std::uint64_t parse_prime(const std::string& text);

/// Runs one command. `args` excludes the program name. Returns the process
/// exit status: 0 success, 1 domain error, 2 input parse error (Γ-CW file or
/// command line), 3 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bredonk::cli
