#pragma once

#include <tuple>

#include "hallmod/context.hpp"
#include "hallmod/report.hpp"

namespace hallmod {

using HallTensor3 = std::map<std::tuple<RepKey, RepKey, RepKey>, Scalar>;

HallVector basis_vector(const RepKey& k);
HallTensor basis_tensor(const RepKey& a, const RepKey& b);

// Twisted product [U][V] = nu^(-<V,U>) sum_X F^X_{U,V} [X].
HallVector product(HallContext& ctx, const HallVector& x, const HallVector& y);
// Delta[X] = sum nu^(-<V,U>) a(U) a(V) / a(X) F^X_{U,V} [U] (x) [V].
HallTensor coproduct(HallContext& ctx, const HallVector& x);
// ([U], [V]) = delta_{UV} / a(U).
Scalar green_form(HallContext& ctx, const HallVector& x, const HallVector& y);
Scalar green_form(HallContext& ctx, const HallTensor& x, const HallTensor& y);
// (x (x) y)(z (x) w) = nu^(-(dim y, dim z)) xz (x) yw with the symmetrized Euler form.
HallTensor tensor_product(HallContext& ctx, const HallTensor& a, const HallTensor& b);
HallTensor3 coproduct_left(HallContext& ctx, const HallTensor& t);   // (Delta (x) 1)
HallTensor3 coproduct_right(HallContext& ctx, const HallTensor& t);  // (1 (x) Delta)

// Associativity, coassociativity, multiplicativity of Delta and the Hopf pairing
// on all basis elements whose dimensions stay within bound.
Report verify_bialgebra(HallContext& ctx, const DimVec& bound);

}  // namespace hallmod
