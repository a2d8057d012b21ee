#include "hallmod/decomp.hpp"

#include <algorithm>

namespace hallmod {

std::string weight_to_string(const std::vector<int>& weight2) {
  std::string out = "(";
  for (std::size_t i = 0; i < weight2.size(); ++i) {
    if (i) out += ",";
    int w = weight2[i];
    out += w % 2 == 0 ? std::to_string(w / 2) : std::to_string(w) + "/2";
  }
  return out + ")";
}

ModuleVector SpanBasis::reduce(ModuleVector v) const {
  for (const auto& [p, row] : rows_) {
    auto it = v.find(p);
    if (it == v.end()) continue;
    Scalar c = it->second;
    v = combined(v, row, -c);
  }
  return v;
}

bool SpanBasis::contains(const ModuleVector& v) const { return reduce(v).empty(); }

bool SpanBasis::add(const ModuleVector& v) {
  ModuleVector w = reduce(v);
  if (w.empty()) return false;
  SDKey pivot = w.begin()->first;
  w = scaled(w, w.begin()->second.inv());
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it != row.end()) row = combined(row, w, -it->second);
  }
  rows_.emplace_back(pivot, std::move(w));
  return true;
}

std::map<GWClass, std::vector<SDKey>> weight_spaces(HallContext& ctx, const DimVec& bound) {
  std::map<GWClass, std::vector<SDKey>> out;
  for (const SDKey& k : ctx.sd().keys_below(bound)) out[k.gw].push_back(k);
  return out;
}

std::map<GWClass, int> character(HallContext& ctx, const DimVec& bound) {
  std::map<GWClass, int> out;
  for (const auto& [g, keys] : weight_spaces(ctx, bound)) out[g] = static_cast<int>(keys.size());
  return out;
}

namespace {

std::vector<int> weight_of(const Quiver& Q, const DimVec& d) {
  std::vector<int> w;
  for (int i = 0; i < Q.num_nodes(); ++i) w.push_back(t_weight2(Q, d, i));
  return w;
}

// The E_i images of each basis vector, keyed by (node, class) so different E_i stay apart.
std::vector<std::map<std::pair<int, SDKey>, Scalar>> e_images(HallContext& ctx, const std::vector<ModuleVector>& basis) {
  std::vector<std::map<std::pair<int, SDKey>, Scalar>> out;
  for (const ModuleVector& v : basis) {
    std::map<std::pair<int, SDKey>, Scalar> all;
    for (int i = 0; i < ctx.quiver().num_nodes(); ++i)
      for (const auto& [k, c] : op_E(ctx, i, v)) add_term(all, std::pair{i, k}, c);
    out.push_back(std::move(all));
  }
  return out;
}

ModuleVector combine(const std::vector<ModuleVector>& basis, const std::vector<Scalar>& c) {
  ModuleVector out;
  for (std::size_t k = 0; k < basis.size(); ++k) out = combined(out, basis[k], c[k]);
  return out;
}

}  // namespace

std::vector<CuspidalElement> cuspidals(HallContext& ctx, const DimVec& bound) {
  std::vector<CuspidalElement> out;
  for (const auto& [g, keys] : weight_spaces(ctx, bound)) {
    std::vector<ModuleVector> basis;
    for (const SDKey& k : keys) basis.push_back(basis_vector(k));
    std::vector<ModuleVector> found;
    for (const auto& c : kernel(e_images(ctx, basis))) {
      ModuleVector v = combine(basis, c);
      for (const ModuleVector& u : found)
        v = combined(v, u, -(green_form_mod(ctx, v, u) / green_form_mod(ctx, u, u)));
      found.push_back(std::move(v));
    }
    for (ModuleVector& v : found) {
      v = scaled(v, v.begin()->second.inv());
      out.push_back(CuspidalElement{v, g, weight_of(ctx.quiver(), g.dim)});
    }
  }
  return out;
}

bool cuspidal_alternative_check(HallContext& ctx, const ModuleVector& xi) {
  ModuleTensor expect;
  for (const auto& [k, c] : xi) add_term(expect, std::pair{ctx.reps().zero_key(), k}, c);
  return coact(ctx, xi) == expect;
}

std::string Decomposition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const Summand& s = summands[k];
    out += "summand " + std::to_string(k) + ": weight " + weight_to_string(s.generator.weight2) + ", cuspidal " +
           vector_to_string(s.generator.vector) + ", graded dims {";
    bool first = true;
    for (const auto& [g, b] : s.basis) {
      out += (first ? "" : ", ") + gw_to_string(g) + ": " + std::to_string(b.size());
      first = false;
    }
    out += "}\n";
  }
  return out;
}

Decomposition decompose(HallContext& ctx, const DimVec& bound) {
  const Quiver& Q = ctx.quiver();
  Decomposition dec;
  dec.ranks = character(ctx, bound);

  std::vector<CuspidalElement> cusp = cuspidals(ctx, bound);
  std::stable_sort(cusp.begin(), cusp.end(), [](const CuspidalElement& a, const CuspidalElement& b) {
    return std::tie(a.gw, a.weight2) < std::tie(b.gw, b.weight2);
  });

  for (const CuspidalElement& xi : cusp) {
    Summand s{xi, {}};
    std::map<GWClass, SpanBasis> spans;
    std::vector<ModuleVector> frontier{xi.vector};
    spans[xi.gw].add(xi.vector);
    s.basis[xi.gw].push_back(xi.vector);
    while (!frontier.empty()) {
      ModuleVector v = std::move(frontier.back());
      frontier.pop_back();
      for (int i = 0; i < Q.num_nodes(); ++i) {
        DimVec d = dim_add(v.begin()->first.gw.dim, Q.hyperbolic_dim(Q.unit(i)));
        if (!dim_leq(d, bound)) continue;
        ModuleVector w = op_F(ctx, i, v);
        if (w.empty()) continue;
        GWClass g = w.begin()->first.gw;
        if (spans[g].add(w)) {
          s.basis[g].push_back(w);
          frontier.push_back(w);
        }
      }
    }
    std::string name = vector_to_string(xi.vector);
    bool killed = true;
    for (int i = 0; i < Q.num_nodes(); ++i) killed = killed && op_E(ctx, i, xi.vector).empty();
    dec.checks.add_check("cuspidal", "-", name, killed ? "E=0" : "E!=0", "E=0", killed);
    bool prim = cuspidal_alternative_check(ctx, xi.vector);
    dec.checks.add_check("cuspidal-coaction", "-", name, prim ? "primitive" : "not primitive", "primitive", prim);

    // Within the span, only multiples of the generator are killed by every E_i.
    for (const auto& [g, b] : s.basis) {
      std::size_t expect = g == xi.gw ? 1 : 0;
      std::size_t got = kernel(e_images(ctx, b)).size();
      dec.checks.add_check("highest-weight", "-", name + " @ " + gw_to_string(g), std::to_string(got),
                           std::to_string(expect), got == expect);
    }
    dec.summands.push_back(std::move(s));
  }

  for (std::size_t a = 0; a < dec.summands.size(); ++a)
    for (std::size_t b = a + 1; b < dec.summands.size(); ++b) {
      bool orth = true;
      for (const auto& [g, va] : dec.summands[a].basis) {
        auto it = dec.summands[b].basis.find(g);
        if (it == dec.summands[b].basis.end()) continue;
        for (const ModuleVector& x : va)
          for (const ModuleVector& y : it->second) orth = orth && green_form_mod(ctx, x, y).is_zero();
      }
      dec.checks.add_check("orthogonal", std::to_string(a) + "," + std::to_string(b), "-", orth ? "0" : "nonzero", "0",
                           orth);
    }

  for (const auto& [g, rank] : dec.ranks) {
    int total = 0;
    for (const Summand& s : dec.summands) {
      auto it = s.basis.find(g);
      if (it != s.basis.end()) total += static_cast<int>(it->second.size());
    }
    dec.checks.add_check("exhaustion", "-", gw_to_string(g), std::to_string(total), std::to_string(rank),
                         total == rank);
  }
  return dec;
}

std::vector<ModuleVector> closed_form_cuspidals(HallContext& ctx, const DimVec& bound) {
  const Quiver& Q = ctx.quiver();
  const Field& F = ctx.field();
  std::vector<int> pos = type_a_positions(Q);
  if (pos.empty()) throw Unsupported("closed-form cuspidals need a type A quiver");
  for (const Arrow& a : Q.arrows)
    if (pos[a.tail] > pos[a.head]) throw Unsupported("closed-form cuspidals need every arrow pointing from -n to n");
  bool odd = Q.num_nodes() % 2 == 1;
  int n = pos.back();
  int lowest = odd ? 0 : 1;
  if (Q.duality == Duality::Symplectic && odd) throw Unsupported("symplectic closed forms need an even number of nodes");
  if (Q.duality == Duality::Orthogonal && !odd) throw Unsupported("orthogonal closed forms need an odd number of nodes");

  std::vector<ModuleVector> out{basis_vector(ctx.sd().zero_key())};
  auto fits = [&](const SelfDualRep& N) { return dim_leq(N.rep.dim, bound); };

  if (Q.duality == Duality::Unitary) {
    if (!odd) return out;
    std::optional<SelfDualRep> r = r_object(F, Q, 0, 1);
    if (!r) r = r_object(F, Q, 0, -1);
    if (r && fits(*r)) out.push_back(basis_vector(ctx.sd().classify(*r)));
    return out;
  }

  // Sums over sign vectors c on [lowest, j] with coefficient the product of c_i over odd i,
  // grouped by Grothendieck-Witt class (the Witt class b in the orthogonal case).
  for (int j = lowest; j <= n; ++j) {
    int len = j - lowest + 1;
    std::map<GWClass, ModuleVector> by_class;
    bool within = true;
    for (int mask = 0; mask < (1 << len) && within; ++mask) {
      SelfDualRep N = zero_selfdual(Q);
      long coeff = 1;
      for (int k = 0; k < len; ++k) {
        int i = lowest + k;
        int c = (mask >> k) & 1 ? -1 : 1;
        if (i % 2 != 0) coeff *= c;
        std::optional<SelfDualRep> r = r_object(F, Q, i, c);
        if (!r) throw Unsupported("missing self-dual structure on the interval");
        N = orthogonal_sum(Q, N, *r);
      }
      if (!fits(N)) {
        within = false;
        break;
      }
      SDKey key = ctx.sd().classify(N);
      add_term(by_class[key.gw], key, Scalar(coeff));
    }
    if (!within) continue;
    for (auto& [g, v] : by_class)
      if (!v.empty()) out.push_back(scaled(v, v.begin()->second.inv()));
  }
  return out;
}

}  // namespace hallmod
