#pragma once

#include <cstdint>

namespace fqlab {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Resource knobs shared by every enumerating operation.
struct RunOptions {
  std::uint64_t budget = kDefaultBudget;  // max points a single enumeration may visit
  unsigned threads = 1;
};

/// q^n, throwing BudgetError when it exceeds `budget` (or overflows).
std::uint64_t checked_power(std::uint64_t q, std::uint64_t n, std::uint64_t budget);

}  // namespace fqlab
