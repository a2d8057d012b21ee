#pragma once

#include <string>
#include <vector>

#include "hallmod/common.hpp"

namespace hallmod {

enum class Duality { Orthogonal, Symplectic, Unitary };

std::string duality_name(Duality d);

struct Arrow {
  std::string id;
  int tail = 0, head = 0;
  int tau = -1;
};

struct Quiver {
  std::vector<std::string> node_ids;
  std::vector<int> s;  // sign per node
  std::vector<Arrow> arrows;
  std::vector<int> sigma_node, sigma_arrow;
  Duality duality = Duality::Orthogonal;
  int q = 3;

  int num_nodes() const { return static_cast<int>(node_ids.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  bool iota() const { return duality == Duality::Unitary; }
  bool has_loops() const;
  int node_index(const std::string& id) const;   // -1 if absent
  int arrow_index(const std::string& id) const;  // -1 if absent

  DimVec unit(int i) const;
  // Coordinates permuted by sigma: (sigma* d)_i = d_{sigma(i)}.
  DimVec sigma_dim(const DimVec& d) const;
  bool is_symmetric(const DimVec& d) const;
  // d + sigma* d.
  DimVec hyperbolic_dim(const DimVec& d) const;
  // Nodes fixed by sigma with s = +1: the nodes carrying Witt decorations.
  std::vector<int> decorated_nodes() const;
};

// All invariant violations, empty when the quiver is valid.
std::vector<std::string> validate(const Quiver& Q);

// Parses the line-based config format; throws ParseError.
Quiver parse_quiver(const std::string& text);
Quiver load_quiver(const std::string& path);
std::string quiver_to_config(const Quiver& Q);

int euler_form(const Quiver& Q, const DimVec& d, const DimVec& e);
int cartan_form(const Quiver& Q, const DimVec& d, const DimVec& e);

// Twice the twist function on dimension vectors (it is half-integral in the unitary case).
int e_twist2(const Quiver& Q, const DimVec& d);
// Same function evaluated with the alternate choice of arrow orbit representatives.
int e_twist2_alternate(const Quiver& Q, const DimVec& d);
// Twice the nu-exponent of T_i on weight d: -(d, e_i) - E(e_i) - E(e_sigma(i)).
int t_weight2(const Quiver& Q, const DimVec& d, int i);

// Single node, no arrows.
Quiver single_node(Duality kind, int q);
// Jordan quiver: one node with a loop, trivial involution.
Quiver jordan(Duality kind, int q);
// Type A on the symmetric positions -m..m (0 omitted when n is even) with sigma(i) = -i.
// toward_center[k] orients the k-th arrow on the positive side (counted outward from
// the middle) toward the middle node; the middle arrow of an even chain
// points -1 -> 1 unless middle_reversed.
Quiver type_a(int n, Duality kind, int q, const std::vector<bool>& toward_center = {},
              bool middle_reversed = false);
// All orientations of type A compatible with the involution.
std::vector<Quiver> type_a_orientations(int n, Duality kind, int q);
// Q together with its opposite, exchanged by the involution.
Quiver disjoint_double(const Quiver& base, Duality kind);
// Positions of type A nodes, recovered from integer node ids; empty if not of that shape.
std::vector<int> type_a_positions(const Quiver& Q);

}  // namespace hallmod
