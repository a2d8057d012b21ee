#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hallmod/ffield.hpp"
#include "hallmod/quiver.hpp"

namespace hallmod {

struct Representation {
  DimVec dim;
  std::vector<Mat> maps;  // maps[a] has shape dim[head] x dim[tail]

  bool operator==(const Representation&) const = default;
};

Representation zero_rep(const Quiver& Q, const DimVec& d);
Representation simple_rep(const Quiver& Q, int i);
Representation direct_sum(const Quiver& Q, const Representation& a, const Representation& b);
bool is_valid_rep(const Quiver& Q, const Representation& R);
// Text record "dim:(..);arrow<id>:[..];..."
std::string rep_to_string(const Field& F, const Quiver& Q, const Representation& R);

// A morphism is one matrix per node.
using Morphism = std::vector<Mat>;

std::vector<Morphism> hom_basis(const Field& F, const Quiver& Q, const Representation& V, const Representation& W);
int hom_dim(const Field& F, const Quiver& Q, const Representation& V, const Representation& W);
// Dimension of the cokernel of the differential A^0 -> A^1.
int ext_dim(const Field& F, const Quiver& Q, const Representation& V, const Representation& W);
bool is_isomorphism(const Field& F, const Morphism& f);
bool is_morphism(const Field& F, const Quiver& Q, const Representation& V, const Representation& W, const Morphism& f);

// Brute-force |Aut(U)|: runs over all of End(U) and tests invertibility.
mpz_class aut_count_bruteforce(const Field& F, const Quiver& Q, const Representation& U, const Budget& budget);

mpz_class gl_order_exact(int q, int n);
mpz_class gl_order_exact(int q, const DimVec& d);

struct RepKey {
  DimVec dim;
  int index = 0;
  auto operator<=>(const RepKey&) const = default;
};
std::string key_to_string(const RepKey& k);

// A subrepresentation given by a reduced echelon basis at each node.
using SubspaceTuple = std::vector<Mat>;

// Visits every subrepresentation of X with dimension vector d. extra_row_ok(node, R, r, chosen)
// may prune a partially filled basis at a node; chosen holds the bases of earlier nodes.
void for_each_subrep(const Field& F, const Quiver& Q, const Representation& X, const DimVec& d,
                     const std::function<bool(int, const Mat&, int, const SubspaceTuple&)>& extra_row_ok,
                     const std::function<bool(const SubspaceTuple&)>& visit);

Representation restrict_to_sub(const Field& F, const Quiver& Q, const Representation& X, const SubspaceTuple& U);
Representation quotient_by_sub(const Field& F, const Quiver& Q, const Representation& X, const SubspaceTuple& U);
// Coordinates of v in the span of a reduced echelon basis (v must lie in it).
std::vector<Elt> echelon_coordinates(const Mat& R, const std::vector<Elt>& v);
std::vector<int> echelon_pivots(const Mat& R);

struct RepClass {
  Representation rep;
  std::uint64_t orbit_size = 0;
  mpz_class aut;
};

using HallTally = std::map<std::pair<RepKey, RepKey>, std::uint64_t>;

// Isomorphism classes per dimension vector, enumerated lazily and memoized.
class RepCatalog {
 public:
  RepCatalog(const Quiver& Q, const Field& F, Budget budget);

  const Quiver& quiver() const { return Q_; }
  const Field& field() const { return F_; }
  const Budget& budget() const { return budget_; }

  const std::vector<RepClass>& classes(const DimVec& d);
  std::vector<RepKey> keys(const DimVec& d);
  // All classes with dimension at most bound, ordered by (dim, index).
  std::vector<RepKey> keys_below(const DimVec& bound);
  RepKey classify(const Representation& R);
  const Representation& rep(const RepKey& k);
  const mpz_class& aut(const RepKey& k);
  RepKey zero_key() const { return RepKey{DimVec(Q_.num_nodes(), 0), 0}; }
  RepKey simple_key(int i);

  // Subrepresentations of X with dimension d, tallied by (sub class, quotient class).
  const HallTally& hall_tally(const RepKey& X, const DimVec& d);
  std::uint64_t hall_number(const RepKey& U, const RepKey& V, const RepKey& X);

  std::uint64_t encode(const Representation& R) const;
  Representation decode(const DimVec& d, std::uint64_t code) const;

 private:
  struct DimData {
    std::vector<RepClass> classes;
    std::vector<std::int32_t> table;  // tuple code -> class index
  };
  DimData& data(const DimVec& d);

  Quiver Q_;
  const Field& F_;
  Budget budget_;
  std::map<DimVec, std::unique_ptr<DimData>> dims_;
  std::map<std::pair<RepKey, DimVec>, HallTally> tallies_;
};

}  // namespace hallmod
