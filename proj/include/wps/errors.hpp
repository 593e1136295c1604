#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wps {

/// A precondition on an argument was violated (bad weight, non-prime, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational was passed where an element of Z_P was required.
class NotAnElement : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Tabulated data (e.g. a divisor-count function) is not realisable.
class InconsistentData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration budget was exhausted. `processed` records how far it got.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(const std::string& what, std::uint64_t processed,
                std::uint64_t required)
      : std::runtime_error(what), processed_(processed), required_(required) {}

  std::uint64_t processed() const noexcept { return processed_; }
  std::uint64_t required() const noexcept { return required_; }

 private:
  std::uint64_t processed_;
  std::uint64_t required_;
};

}  // namespace wps
