#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unisample {

/// Default cap on the number of candidates an exhaustive search may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Raised when an enumeration would visit more candidates than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : std::runtime_error("enumeration needs " + std::to_string(required) +
                           " candidates, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// A requested construction cannot exist for the given input.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace unisample
