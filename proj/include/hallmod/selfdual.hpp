#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hallmod/rep.hpp"

namespace hallmod {

// A representation with a compatible nondegenerate form. psi[i] has shape
// dim[i] x dim[sigma(i)] and <v, w> = v^T psi[i] iota(w) for v in M_i, w in M_sigma(i).
struct SelfDualRep {
  Representation rep;
  std::vector<Mat> psi;

  bool operator==(const SelfDualRep&) const = default;
};

std::vector<std::string> selfdual_violations(const Field& F, const Quiver& Q, const SelfDualRep& N);
bool is_selfdual(const Field& F, const Quiver& Q, const SelfDualRep& N);
std::string selfdual_to_string(const Field& F, const Quiver& Q, const SelfDualRep& N);

Representation dual_rep(const Field& F, const Quiver& Q, const Representation& U);
SelfDualRep hyperbolic(const Field& F, const Quiver& Q, const Representation& U);
SelfDualRep orthogonal_sum(const Quiver& Q, const SelfDualRep& a, const SelfDualRep& b);
SelfDualRep zero_selfdual(const Quiver& Q);

// Witt group element of a single form, encoded as a small integer.
// Symmetric forms: parity + 2 * [signed discriminant is a nonsquare]. Hermitian forms: parity.
int witt_code(const Field& F, const Mat& P, bool hermitian);
int witt_add(const Field& F, int a, int b, bool hermitian);
int witt_group_size(const Field& F, bool hermitian);
std::string witt_to_string(int code, bool hermitian);

struct GWClass {
  DimVec dim;
  std::vector<int> witt;  // one code per decorated node, in node order
  auto operator<=>(const GWClass&) const = default;
};
std::string gw_to_string(const GWClass& g);

GWClass gw_class(const Field& F, const Quiver& Q, const SelfDualRep& N);
GWClass gw_add(const Field& F, const Quiver& Q, const GWClass& a, const GWClass& b);
GWClass gw_hyperbolic(const Quiver& Q, const DimVec& d);

// Normal form of the form at a sigma-fixed node for a given Witt code.
Mat normal_form(const Field& F, int n, int s, bool iota, int code);
// Change of basis g with g^T P iota(g) equal to the normal form of P.
Mat to_normal_basis(const Field& F, const Mat& P, int s, bool iota);
// Order of the isometry group of a form at a fixed node.
mpz_class isometry_group_order(const Field& F, int n, int s, bool iota, int code);
// Generators of the isometry group of P (a normal form).
std::vector<Mat> isometry_generators(const Field& F, const Mat& P, int s, bool iota, const Budget& budget);
// All isometries of P by backtracking, for small groups.
std::vector<Mat> isometries_bruteforce(const Field& F, const Mat& P, bool iota, const Budget& budget);

// Visits the isotropic subrepresentations of N with dimension vector u.
void for_each_isotropic_sub(const Field& F, const Quiver& Q, const SelfDualRep& N, const DimVec& u,
                            const std::function<bool(const SubspaceTuple&)>& visit);
bool is_isotropic(const Field& F, const Quiver& Q, const SelfDualRep& N, const SubspaceTuple& U);
// The induced structure on U-perp / U; throws ContractViolation when U is not isotropic.
SelfDualRep reduce(const Field& F, const Quiver& Q, const SelfDualRep& N, const SubspaceTuple& U);

bool is_isometry(const Field& F, const Quiver& Q, const SelfDualRep& M, const SelfDualRep& N, const Morphism& f);
// Brute-force checks that run over all of Hom(M, N).
bool isometric_bruteforce(const Field& F, const Quiver& Q, const SelfDualRep& M, const SelfDualRep& N,
                          const Budget& budget);
mpz_class aut_s_count_bruteforce(const Field& F, const Quiver& Q, const SelfDualRep& M, const Budget& budget);

struct SDKey {
  GWClass gw;
  int index = 0;
  auto operator<=>(const SDKey&) const = default;
};
std::string key_to_string(const SDKey& k);

struct SDClass {
  SelfDualRep rep;
  std::uint64_t orbit_size = 0;
  mpz_class aut;
};

using SDTally = std::map<std::pair<RepKey, SDKey>, std::uint64_t>;

// Isometry classes per Grothendieck-Witt class, enumerated lazily and memoized.
class SDCatalog {
 public:
  explicit SDCatalog(RepCatalog& reps);

  RepCatalog& reps() { return reps_; }
  const Quiver& quiver() const { return reps_.quiver(); }
  const Field& field() const { return reps_.field(); }

  // The Grothendieck-Witt classes of dimension d that contain objects.
  std::vector<GWClass> gw_classes(const DimVec& d);
  const std::vector<SDClass>& classes(const GWClass& g);
  std::vector<SDKey> keys(const GWClass& g);
  std::vector<SDKey> keys(const DimVec& d);
  // All classes of sigma-symmetric dimension at most bound.
  std::vector<SDKey> keys_below(const DimVec& bound);
  SDKey classify(const SelfDualRep& N);
  const SelfDualRep& rep(const SDKey& k);
  const mpz_class& aut(const SDKey& k);
  SDKey zero_key();
  bool isometric(const SelfDualRep& M, const SelfDualRep& N);

  // Self-dual structures on U, one per isometry class.
  std::vector<SDKey> structures_on(const Representation& U);

  // Isotropic subrepresentations of N with dimension u, tallied by (sub class, reduction class).
  const SDTally& sd_tally(const SDKey& N, const DimVec& u);
  std::uint64_t sd_hall_number(const RepKey& U, const SDKey& M, const SDKey& N);

 private:
  struct GWData {
    std::vector<Mat> P;
    std::vector<int> fixed_arrows;             // arrows with sigma(a) = a
    std::vector<std::vector<Mat>> valid;       // allowed maps per fixed arrow, sorted
    std::vector<int> free_arrows;              // min of each non-fixed arrow orbit
    std::vector<std::uint64_t> radix;          // per encoded slot
    std::vector<std::int32_t> table;
    std::vector<SDClass> classes;
  };
  GWData& data(const GWClass& g);
  std::uint64_t encode(const GWData& gd, const Representation& R) const;
  SelfDualRep decode(const GWClass& g, const GWData& gd, std::uint64_t code) const;
  void fill_dependent(const GWData& gd, Representation& R) const;
  SelfDualRep normalize(const SelfDualRep& N, const GWClass& g);

  RepCatalog& reps_;
  std::map<GWClass, std::unique_ptr<GWData>> data_;
  std::map<std::pair<SDKey, DimVec>, SDTally> tallies_;
};

// Type A constructions on the symmetric positions of type_a(); positions index the nodes.
// Interval representation with one-dimensional spaces on [a, b] and identity maps.
Representation interval_rep(const Quiver& Q, int a, int b);
// Self-dual structure on the interval [-i, i] whose form pairing the ends has the given
// square class (c = +1 or -1); nullopt when no structure exists.
std::optional<SelfDualRep> r_object(const Field& F, const Quiver& Q, int i, int c);

struct IndecomposableInfo {
  SDKey key;
  std::string label;
  bool underlying_indecomposable = false;
  bool underlying_hyperbolic_pair = false;  // underlying rep is I + S(I) with I indecomposable
};

// Self-dual indecomposables with dimension at most bound: classes that are not orthogonal
// sums of two nonzero classes. Labels come from matching against the type A constructions
// and are empty when the quiver is not of type A.
std::vector<IndecomposableInfo> sd_indecomposables(SDCatalog& cat, const DimVec& bound);

}  // namespace hallmod
