#pragma once

#include <stdexcept>
#include <string>

namespace bredonk {

/// Input that is well-formed but mathematically invalid: a composite where a
/// prime is required, a bad signature, a complex with nonzero d∘d, a regime
/// the library refuses to guess in.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed Γ-CW input text (syntax, unknown labels, unknown group names).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bredonk
