#pragma once

#include <optional>
#include <tuple>

#include "hallmod/hallalg.hpp"

namespace hallmod {

using ModuleTensor3 = std::map<std::tuple<RepKey, RepKey, SDKey>, Scalar>;

ModuleVector basis_vector(const SDKey& k);
ModuleTensor basis_tensor(const RepKey& u, const SDKey& m);

// Twice the module twist c~(M, U) = -<M, U> - E(U).
int act_twist2(const Quiver& Q, const DimVec& m, const DimVec& u);

// [U] * [M] = nu^c~(M,U) sum_N G^N_{U,M} [N].
ModuleVector act(HallContext& ctx, const HallVector& x, const ModuleVector& m);
// rho[N] = sum nu^c~(M,U) a(U) a_S(M) / a_S(N) G^N_{U,M} [U] (x) [M].
ModuleTensor coact(HallContext& ctx, const ModuleVector& m);

ModuleVector op_F(HallContext& ctx, int i, const ModuleVector& m);
ModuleVector op_E(HallContext& ctx, int i, const ModuleVector& m);
ModuleVector op_T(HallContext& ctx, int i, const ModuleVector& m);

// ([M], [N]) = delta_{MN} / a_S(M).
Scalar green_form_mod(HallContext& ctx, const ModuleVector& x, const ModuleVector& y);
Scalar green_form_mod(HallContext& ctx, const ModuleTensor& x, const ModuleTensor& y);

// sum_N a(U) a_S(M) G^N_{U,M} / a_S(N) against q^(-<M,U> - E(U)).
ReportLine check_riedtmann(HallContext& ctx, const RepKey& U, const SDKey& M);
// All pairs with dim U + dim M <= bound and, when given, dim M + H(dim U) <= ambient.
Report verify_riedtmann(HallContext& ctx, const DimVec& bound, const std::optional<DimVec>& ambient = {});

// Both sides of the counting identity behind E_i F_j = nu^-(e_i,e_j) F_j E_i + delta_ij + delta_{i,sigma j} T_i.
ReportLine check_sd_hall_identity(HallContext& ctx, int i, int j, const SDKey& X, const SDKey& Y);

// T relations, the E/F commutation relation, quantum Serre relations (loopless quivers only),
// the E/F adjunction and the counting identity, wherever every intermediate dimension stays
// within bound. relation3_only restricts to the commutation relation and the counting identity.
Report verify_bsigma(HallContext& ctx, const DimVec& bound, bool relation3_only = false);

// Associativity counts, twisted module associativity, comodule coassociativity, the
// Green-form adjunction, Witt-block preservation and the twist cocycle on random triples.
Report verify_module_axioms(HallContext& ctx, const DimVec& bound, int cocycle_samples = 100, unsigned seed = 1);

// E(W) = E(U) + E(V) + <S(U), V> on short exact sequences 0 -> U -> W -> V -> 0 taken from
// the subrepresentations of classes within bound, for up to count sequences.
Report verify_twist_additivity(HallContext& ctx, const DimVec& bound, int count = 200);

// For Q a disjoint union Q' + Q'^op exchanged by sigma: the counting identity relating
// hyperbolic self-dual Hall numbers to products of Hall numbers, the induced module map and
// Green forms, on classes of Q' with dim X <= bound restricted to Q'.
Report verify_hyperbolic(HallContext& ctx, const DimVec& bound);
// Number of nodes of Q' when Q has that shape, nullopt otherwise.
std::optional<int> double_base_size(const Quiver& Q);

}  // namespace hallmod
