#include "hallmod/hallalg.hpp"

namespace hallmod {

HallVector basis_vector(const RepKey& k) { return HallVector{{k, Scalar(1)}}; }

HallTensor basis_tensor(const RepKey& a, const RepKey& b) { return HallTensor{{{a, b}, Scalar(1)}}; }

namespace {

HallVector product_basis(HallContext& ctx, const RepKey& u, const RepKey& v) {
  HallVector out;
  Scalar twist = ctx.nu(-euler_form(ctx.quiver(), v.dim, u.dim));
  for (const RepKey& x : ctx.reps().keys(dim_add(u.dim, v.dim))) {
    std::uint64_t n = ctx.reps().hall_number(u, v, x);
    if (n != 0) add_term(out, x, twist * Scalar(mpz_class(n)));
  }
  return out;
}

HallTensor coproduct_basis(HallContext& ctx, const RepKey& x) {
  HallTensor out;
  const mpz_class& ax = ctx.reps().aut(x);
  for (const DimVec& d : dims_below(x.dim))
    for (const auto& [uv, n] : ctx.reps().hall_tally(x, d)) {
      const auto& [u, v] = uv;
      mpq_class c(mpz_class(n) * ctx.reps().aut(u) * ctx.reps().aut(v), ax);
      c.canonicalize();
      add_term(out, uv, ctx.nu(-euler_form(ctx.quiver(), v.dim, u.dim)) * Scalar(c));
    }
  return out;
}

std::string tensor3_to_string(const HallTensor3& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : t) {
    if (!out.empty()) out += " + ";
    out += scalar_to_string(c) + " * " + term_key(std::get<0>(k)) + "(x)" + term_key(std::get<1>(k)) + "(x)" +
           term_key(std::get<2>(k));
  }
  return out;
}

}  // namespace

HallVector product(HallContext& ctx, const HallVector& x, const HallVector& y) {
  HallVector out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y)
      for (const auto& [w, c] : product_basis(ctx, u, v)) add_term(out, w, a * b * c);
  return out;
}

HallTensor coproduct(HallContext& ctx, const HallVector& x) {
  HallTensor out;
  for (const auto& [k, a] : x)
    for (const auto& [uv, c] : coproduct_basis(ctx, k)) add_term(out, uv, a * c);
  return out;
}

Scalar green_form(HallContext& ctx, const HallVector& x, const HallVector& y) {
  Scalar out;
  for (const auto& [k, a] : x) {
    auto it = y.find(k);
    if (it != y.end()) out += a * it->second / Scalar(ctx.reps().aut(k));
  }
  return out;
}

Scalar green_form(HallContext& ctx, const HallTensor& x, const HallTensor& y) {
  Scalar out;
  for (const auto& [k, a] : x) {
    auto it = y.find(k);
    if (it != y.end())
      out += a * it->second / Scalar(mpz_class(ctx.reps().aut(k.first) * ctx.reps().aut(k.second)));
  }
  return out;
}

HallTensor tensor_product(HallContext& ctx, const HallTensor& a, const HallTensor& b) {
  HallTensor out;
  for (const auto& [xy, c1] : a)
    for (const auto& [zw, c2] : b) {
      Scalar c = c1 * c2 * ctx.nu(-cartan_form(ctx.quiver(), xy.second.dim, zw.first.dim));
      HallVector left = product_basis(ctx, xy.first, zw.first);
      HallVector right = product_basis(ctx, xy.second, zw.second);
      for (const auto& [l, cl] : left)
        for (const auto& [r, cr] : right) add_term(out, std::pair{l, r}, c * cl * cr);
    }
  return out;
}

HallTensor3 coproduct_left(HallContext& ctx, const HallTensor& t) {
  HallTensor3 out;
  for (const auto& [xy, c] : t)
    for (const auto& [uv, d] : coproduct_basis(ctx, xy.first)) {
      auto k = std::tuple{uv.first, uv.second, xy.second};
      auto [it, fresh] = out.emplace(k, c * d);
      if (!fresh) it->second += c * d;
    }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

HallTensor3 coproduct_right(HallContext& ctx, const HallTensor& t) {
  HallTensor3 out;
  for (const auto& [xy, c] : t)
    for (const auto& [uv, d] : coproduct_basis(ctx, xy.second)) {
      auto k = std::tuple{xy.first, uv.first, uv.second};
      auto [it, fresh] = out.emplace(k, c * d);
      if (!fresh) it->second += c * d;
    }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

Report verify_bialgebra(HallContext& ctx, const DimVec& bound) {
  Report report;
  std::vector<RepKey> keys = ctx.reps().keys_below(bound);
  auto fits = [&](const DimVec& d) { return dim_leq(d, bound); };

  for (const RepKey& x : keys)
    for (const RepKey& y : keys) {
      if (!fits(dim_add(x.dim, y.dim))) continue;
      HallVector xy = product(ctx, basis_vector(x), basis_vector(y));
      for (const RepKey& z : keys) {
        if (!fits(dim_add(dim_add(x.dim, y.dim), z.dim))) continue;
        HallVector lhs = product(ctx, xy, basis_vector(z));
        HallVector rhs = product(ctx, basis_vector(x), product(ctx, basis_vector(y), basis_vector(z)));
        report.add_check("associativity", "-", term_key(x) + "," + term_key(y) + "," + term_key(z),
                         vector_to_string(lhs), vector_to_string(rhs), lhs == rhs);
      }
      HallTensor lhs = coproduct(ctx, xy);
      HallTensor rhs = tensor_product(ctx, coproduct(ctx, basis_vector(x)), coproduct(ctx, basis_vector(y)));
      report.add_check("delta-multiplicative", "-", term_key(x) + "," + term_key(y), vector_to_string(lhs),
                       vector_to_string(rhs), lhs == rhs);
    }

  for (const RepKey& x : keys) {
    HallTensor d = coproduct(ctx, basis_vector(x));
    HallTensor3 lhs = coproduct_left(ctx, d), rhs = coproduct_right(ctx, d);
    report.add_check("coassociativity", "-", term_key(x), tensor3_to_string(lhs), tensor3_to_string(rhs), lhs == rhs);
  }

  // (x (x) y, Delta z) = (xy, z) on basis elements.
  for (const RepKey& z : keys) {
    HallTensor dz = coproduct(ctx, basis_vector(z));
    for (const DimVec& d : dims_below(z.dim))
      for (const RepKey& x : ctx.reps().keys(d))
        for (const RepKey& y : ctx.reps().keys(dim_sub(z.dim, d))) {
          Scalar lhs = green_form(ctx, basis_tensor(x, y), dz);
          Scalar rhs = green_form(ctx, product(ctx, basis_vector(x), basis_vector(y)), basis_vector(z));
          report.add_check("hopf-pairing", "-", term_key(x) + "," + term_key(y) + "," + term_key(z),
                           scalar_to_string(lhs), scalar_to_string(rhs), lhs == rhs);
        }
  }
  return report;
}

}  // namespace hallmod
