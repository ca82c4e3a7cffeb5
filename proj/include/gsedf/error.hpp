#pragma once

#include <stdexcept>
#include <string>

namespace gsedf {

enum class ErrorKind {
  invalid,
  invalid_factors,
  wrong_group,
  too_large,
  not_prime_power,
  unsupported,
  not_disjoint,
  not_applicable,
  not_liftable,
  hypothesis_violation,
  not_twin_prime_powers,
  not_constructible,
  empty_range,
  rejected_before_search,
  usage,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gsedf
