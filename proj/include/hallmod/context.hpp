#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "hallmod/scalar.hpp"
#include "hallmod/selfdual.hpp"

namespace hallmod {

// Sparse vectors over Q(q^(1/4)); zero coefficients are never stored.
using HallVector = std::map<RepKey, Scalar>;
using ModuleVector = std::map<SDKey, Scalar>;
using HallTensor = std::map<std::pair<RepKey, RepKey>, Scalar>;
using ModuleTensor = std::map<std::pair<RepKey, SDKey>, Scalar>;

template <class K>
void add_term(std::map<K, Scalar>& v, const K& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = v.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

template <class K>
std::map<K, Scalar> scaled(const std::map<K, Scalar>& v, const Scalar& c) {
  std::map<K, Scalar> out;
  for (const auto& [k, x] : v) add_term(out, k, x * c);
  return out;
}

template <class K>
std::map<K, Scalar> combined(const std::map<K, Scalar>& a, const std::map<K, Scalar>& b, const Scalar& cb = 1) {
  std::map<K, Scalar> out = a;
  for (const auto& [k, x] : b) add_term(out, k, x * cb);
  return out;
}

// Owns the quiver, the finite field, the scalar field and both catalogs.
class HallContext {
 public:
  explicit HallContext(const Quiver& Q, Budget budget = {});
  HallContext(const HallContext&) = delete;
  HallContext& operator=(const HallContext&) = delete;

  const Quiver& quiver() const { return Q_; }
  const Field& field() const { return *F_; }
  const ScalarField* scalars() const { return K_; }
  const Budget& budget() const { return reps_->budget(); }
  RepCatalog& reps() { return *reps_; }
  SDCatalog& sd() { return *sd_; }

  Scalar nu(long k) const { return nu_power(K_, k); }
  Scalar nu_half(long h) const { return nu_half_power(K_, h); }
  // q^(k/4)
  Scalar q_quarter(long k) const { return Scalar::t_power(K_, k); }

 private:
  Quiver Q_;
  std::unique_ptr<Field> F_;
  const ScalarField* K_;
  std::unique_ptr<RepCatalog> reps_;
  std::unique_ptr<SDCatalog> sd_;
};

std::string term_key(const RepKey& k);
std::string term_key(const SDKey& k);
std::string vector_to_string(const HallVector& v);
std::string vector_to_string(const ModuleVector& v);
std::string vector_to_string(const HallTensor& v);
std::string vector_to_string(const ModuleTensor& v);
std::string scalar_to_string(const Scalar& c);

}  // namespace hallmod
