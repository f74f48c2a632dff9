#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "szego/types.hpp"

namespace szego {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, schema violation or broken precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A Gram section that is singular or indefinite, or a zero pivot where an
/// invertible element was required. `first`/`last` name the offending
/// section (inclusive index range) when one is known.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, std::optional<Index> first = std::nullopt,
                 std::optional<Index> last = std::nullopt)
      : Error(what), first_(first), last_(last) {}

  std::optional<Index> first() const { return first_; }
  std::optional<Index> last() const { return last_; }

 private:
  std::optional<Index> first_;
  std::optional<Index> last_;
};

}  // namespace szego
