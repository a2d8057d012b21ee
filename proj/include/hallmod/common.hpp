#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hallmod/errors.hpp"

namespace hallmod {

using DimVec = std::vector<int>;

struct Budget {
  std::uint64_t tuples = 10'000'000;
  std::uint64_t group_elements = 1'000'000;
};

inline void check_budget(const std::string& what, std::uint64_t count, std::uint64_t limit) {
  if (count > limit) throw BudgetExceeded(what, count);
}

// Saturating power used for size estimates before enumeration.
inline std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

DimVec dim_add(const DimVec& a, const DimVec& b);
DimVec dim_sub(const DimVec& a, const DimVec& b);
bool dim_leq(const DimVec& a, const DimVec& b);
bool dim_is_zero(const DimVec& a);
int dim_total(const DimVec& a);
std::string dim_to_string(const DimVec& d);

// All dimension vectors e with 0 <= e <= bound componentwise, in lexicographic order.
std::vector<DimVec> dims_below(const DimVec& bound);

}  // namespace hallmod
