#include "hallmod/common.hpp"

namespace hallmod {

DimVec dim_add(const DimVec& a, const DimVec& b) {
  DimVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DimVec dim_sub(const DimVec& a, const DimVec& b) {
  DimVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool dim_leq(const DimVec& a, const DimVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dim_is_zero(const DimVec& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}

int dim_total(const DimVec& a) {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

std::string dim_to_string(const DimVec& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

std::vector<DimVec> dims_below(const DimVec& bound) {
  std::vector<DimVec> out;
  DimVec cur(bound.size(), 0);
  for (int x : bound)
    if (x < 0) return out;
  while (true) {
    out.push_back(cur);
    std::size_t i = cur.size();
    bool done = true;
    while (i-- > 0) {
      if (++cur[i] <= bound[i]) {
        done = false;
        break;
      }
      cur[i] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace hallmod
