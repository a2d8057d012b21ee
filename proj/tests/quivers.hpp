#pragma once

#include <string>

#include "hallmod/quiver.hpp"

namespace fixture {

using namespace hallmod;

// A_2 with sigma exchanging the two nodes.
inline Quiver swap_a2(Duality kind, int q) {
  return parse_quiver("duality " + duality_name(kind) + "\nq " + std::to_string(q) +
                      "\nnode 1\nnode 2\narrow a 1 2\nsigma node 1 2\n");
}

// Plain A_2 (1 -> 2), used as the base of a disjoint double.
inline Quiver plain_a2(int q) {
  Quiver Q;
  Q.node_ids = {"1", "2"};
  Q.arrows = {Arrow{"a", 0, 1, -1}};
  Q.q = q;
  return Q;
}

}  // namespace fixture
