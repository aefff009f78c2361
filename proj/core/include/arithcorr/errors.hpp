#pragma once

#include <stdexcept>
#include <string>

namespace arithcorr {

/// Input that is well-formed but mathematically unusable: a non-primitive
/// polynomial, an all-zero state or period, a sequence that is not an m-sequence.
class MathError : public std::domain_error {
 public:
  explicit MathError(const std::string& what) : std::domain_error(what) {}
};

/// Two independent computation routes disagreed.
class OracleMismatch : public std::logic_error {
 public:
  explicit OracleMismatch(const std::string& what) : std::logic_error(what) {}
};

}  // namespace arithcorr
