#pragma once

#include "hallmod/hallmodule.hpp"

namespace hallmod {

struct CuspidalElement {
  ModuleVector vector;
  GWClass gw;
  std::vector<int> weight2;  // twice the nu-exponent of T_i on the element, per node
};

std::string weight_to_string(const std::vector<int>& weight2);

// Sparse vectors kept in fully reduced echelon form, for spans and membership tests.
class SpanBasis {
 public:
  // Adds v to the span; returns false when v was already in it.
  bool add(const ModuleVector& v);
  bool contains(const ModuleVector& v) const;
  ModuleVector reduce(ModuleVector v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::pair<SDKey, ModuleVector>> rows_;  // (pivot, row with pivot coefficient 1)
};

// Basis of the solutions c of sum_k c_k images[k] = 0, by Gauss-Jordan elimination.
template <class K>
std::vector<std::vector<Scalar>> kernel(const std::vector<std::map<K, Scalar>>& images) {
  std::size_t m = images.size();
  std::map<K, std::size_t> row_of;
  for (const auto& v : images)
    for (const auto& [k, c] : v) row_of.emplace(k, 0);
  std::size_t r = 0;
  for (auto& [k, idx] : row_of) idx = r++;

  std::vector<std::vector<Scalar>> a(row_of.size(), std::vector<Scalar>(m));
  for (std::size_t col = 0; col < m; ++col)
    for (const auto& [k, c] : images[col]) a[row_of[k]][col] = c;

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Scalar inv = a[row][col].inv();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Scalar f = a[i][col];
      for (std::size_t c = 0; c < m; ++c) a[i][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<std::vector<Scalar>> out;
  std::size_t next_pivot = 0;
  for (std::size_t free = 0; free < m; ++free) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == free) {
      ++next_pivot;
      continue;
    }
    std::vector<Scalar> v(m);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    out.push_back(std::move(v));
  }
  return out;
}

// Isometry classes with dim <= bound, grouped by Grothendieck-Witt class.
std::map<GWClass, std::vector<SDKey>> weight_spaces(HallContext& ctx, const DimVec& bound);
std::map<GWClass, int> character(HallContext& ctx, const DimVec& bound);

// Per GW class: basis of the common kernel of all E_i, orthogonalized for the Green form,
// each scaled so that its first coefficient in key order is 1.
std::vector<CuspidalElement> cuspidals(HallContext& ctx, const DimVec& bound);
// rho(xi) = [0] (x) xi.
bool cuspidal_alternative_check(HallContext& ctx, const ModuleVector& xi);

struct Summand {
  CuspidalElement generator;
  std::map<GWClass, std::vector<ModuleVector>> basis;  // truncated F-orbit span per class
};

struct Decomposition {
  std::vector<Summand> summands;
  std::map<GWClass, int> ranks;
  Report checks;
  std::string to_string() const;
};

// Spans of the cuspidals under the F_i within bound, checked for mutual orthogonality,
// exhaustion of each weight space and the highest-weight property.
Decomposition decompose(HallContext& ctx, const DimVec& bound);

// The closed-form cuspidals on type A with every arrow pointing from -n toward n: unitary
// ([0] and, for an odd number of nodes, [R_0]), symplectic with an even number of nodes and
// orthogonal with an odd number of nodes. Only elements with dim <= bound are returned.
std::vector<ModuleVector> closed_form_cuspidals(HallContext& ctx, const DimVec& bound);

}  // namespace hallmod
