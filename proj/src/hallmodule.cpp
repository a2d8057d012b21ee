#include "hallmod/hallmodule.hpp"

#include <random>
#include <set>

namespace hallmod {

ModuleVector basis_vector(const SDKey& k) { return ModuleVector{{k, Scalar(1)}}; }

ModuleTensor basis_tensor(const RepKey& u, const SDKey& m) { return ModuleTensor{{{u, m}, Scalar(1)}}; }

int act_twist2(const Quiver& Q, const DimVec& m, const DimVec& u) {
  return -2 * euler_form(Q, m, u) - e_twist2(Q, u);
}

namespace {

Scalar ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return Scalar(r);
}

ModuleVector act_basis(HallContext& ctx, const RepKey& u, const SDKey& m) {
  ModuleVector out;
  const Quiver& Q = ctx.quiver();
  Scalar twist = ctx.nu_half(act_twist2(Q, m.gw.dim, u.dim));
  for (const SDKey& n : ctx.sd().keys(dim_add(m.gw.dim, Q.hyperbolic_dim(u.dim)))) {
    std::uint64_t g = ctx.sd().sd_hall_number(u, m, n);
    if (g != 0) add_term(out, n, twist * Scalar(mpz_class(g)));
  }
  return out;
}

ModuleTensor coact_basis(HallContext& ctx, const SDKey& n) {
  ModuleTensor out;
  const Quiver& Q = ctx.quiver();
  for (const DimVec& u : dims_below(n.gw.dim)) {
    if (!dim_leq(Q.hyperbolic_dim(u), n.gw.dim)) continue;
    for (const auto& [um, g] : ctx.sd().sd_tally(n, u)) {
      const auto& [U, M] = um;
      Scalar c = ctx.nu_half(act_twist2(Q, M.gw.dim, U.dim)) *
                 ratio(mpz_class(g) * ctx.reps().aut(U) * ctx.sd().aut(M), ctx.sd().aut(n));
      add_term(out, um, c);
    }
  }
  return out;
}

ModuleVector e_basis(HallContext& ctx, int i, const SDKey& n) {
  ModuleVector out;
  const Quiver& Q = ctx.quiver();
  if (!dim_leq(Q.hyperbolic_dim(Q.unit(i)), n.gw.dim)) return out;
  RepKey s = ctx.reps().simple_key(i);
  for (const auto& [um, g] : ctx.sd().sd_tally(n, Q.unit(i))) {
    const auto& [U, M] = um;
    if (U != s) continue;
    Scalar c = ctx.nu_half(act_twist2(Q, M.gw.dim, U.dim)) *
               ratio(mpz_class(g) * ctx.reps().aut(U) * ctx.sd().aut(M), ctx.sd().aut(n));
    add_term(out, M, c);
  }
  return out;
}

// The counted quantity a(U) a_S(M) G^N_{U,M}.
mpz_class weighted_g(HallContext& ctx, const RepKey& U, const SDKey& M, const SDKey& N) {
  return mpz_class(ctx.sd().sd_hall_number(U, M, N)) * ctx.reps().aut(U) * ctx.sd().aut(M);
}

std::string tensor3_to_string(const ModuleTensor3& t) {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : t) {
    if (!out.empty()) out += " + ";
    out += scalar_to_string(c) + " * " + term_key(std::get<0>(k)) + "(x)" + term_key(std::get<1>(k)) + "(x)" +
           term_key(std::get<2>(k));
  }
  return out;
}

void add3(ModuleTensor3& t, const std::tuple<RepKey, RepKey, SDKey>& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

std::string node_pair(const Quiver& Q, int i, int j) { return Q.node_ids[i] + "," + Q.node_ids[j]; }

// [n]_v evaluated at nu.
Scalar quantum_int(HallContext& ctx, int n) {
  return (ctx.nu(n) - ctx.nu(-n)) / (ctx.nu(1) - ctx.nu(-1));
}

Scalar quantum_binomial(HallContext& ctx, int a, int p) {
  Scalar num = 1, den = 1;
  for (int k = 1; k <= p; ++k) {
    num *= quantum_int(ctx, a - p + k);
    den *= quantum_int(ctx, k);
  }
  return num / den;
}

}  // namespace

ModuleVector act(HallContext& ctx, const HallVector& x, const ModuleVector& m) {
  ModuleVector out;
  for (const auto& [u, a] : x)
    for (const auto& [k, b] : m)
      for (const auto& [n, c] : act_basis(ctx, u, k)) add_term(out, n, a * b * c);
  return out;
}

ModuleTensor coact(HallContext& ctx, const ModuleVector& m) {
  ModuleTensor out;
  for (const auto& [n, a] : m)
    for (const auto& [um, c] : coact_basis(ctx, n)) add_term(out, um, a * c);
  return out;
}

ModuleVector op_F(HallContext& ctx, int i, const ModuleVector& m) {
  return act(ctx, basis_vector(ctx.reps().simple_key(i)), m);
}

ModuleVector op_E(HallContext& ctx, int i, const ModuleVector& m) {
  ModuleVector out;
  for (const auto& [n, a] : m)
    for (const auto& [k, c] : e_basis(ctx, i, n)) add_term(out, k, a * c);
  return out;
}

ModuleVector op_T(HallContext& ctx, int i, const ModuleVector& m) {
  ModuleVector out;
  for (const auto& [n, a] : m) add_term(out, n, a * ctx.nu_half(t_weight2(ctx.quiver(), n.gw.dim, i)));
  return out;
}

Scalar green_form_mod(HallContext& ctx, const ModuleVector& x, const ModuleVector& y) {
  Scalar out;
  for (const auto& [k, a] : x) {
    auto it = y.find(k);
    if (it != y.end()) out += a * it->second / Scalar(ctx.sd().aut(k));
  }
  return out;
}

Scalar green_form_mod(HallContext& ctx, const ModuleTensor& x, const ModuleTensor& y) {
  Scalar out;
  for (const auto& [k, a] : x) {
    auto it = y.find(k);
    if (it != y.end()) out += a * it->second / Scalar(mpz_class(ctx.reps().aut(k.first) * ctx.sd().aut(k.second)));
  }
  return out;
}

ReportLine check_riedtmann(HallContext& ctx, const RepKey& U, const SDKey& M) {
  const Quiver& Q = ctx.quiver();
  Scalar lhs;
  for (const SDKey& N : ctx.sd().keys(dim_add(M.gw.dim, Q.hyperbolic_dim(U.dim))))
    lhs += ratio(weighted_g(ctx, U, M, N), ctx.sd().aut(N));
  Scalar rhs = ctx.q_quarter(-4L * euler_form(Q, M.gw.dim, U.dim) - 2L * e_twist2(Q, U.dim));
  return ReportLine{"riedtmann", "-", term_key(U) + "," + term_key(M), scalar_to_string(lhs), scalar_to_string(rhs),
                    lhs == rhs};
}

Report verify_riedtmann(HallContext& ctx, const DimVec& bound, const std::optional<DimVec>& ambient) {
  Report report;
  const Quiver& Q = ctx.quiver();
  for (const RepKey& U : ctx.reps().keys_below(bound))
    for (const SDKey& M : ctx.sd().keys_below(dim_sub(bound, U.dim))) {
      if (!dim_leq(dim_add(U.dim, M.gw.dim), bound)) continue;
      if (ambient && !dim_leq(dim_add(M.gw.dim, Q.hyperbolic_dim(U.dim)), *ambient)) continue;
      report.add(check_riedtmann(ctx, U, M));
    }
  return report;
}

ReportLine check_sd_hall_identity(HallContext& ctx, int i, int j, const SDKey& X, const SDKey& Y) {
  const Quiver& Q = ctx.quiver();
  RepKey si = ctx.reps().simple_key(i), sj = ctx.reps().simple_key(j);
  DimVec hi = Q.hyperbolic_dim(Q.unit(i)), hj = Q.hyperbolic_dim(Q.unit(j));
  std::string basis = term_key(X) + "," + term_key(Y);
  std::string idx = node_pair(Q, i, j);
  DimVec n = dim_add(X.gw.dim, hi);
  if (n != dim_add(Y.gw.dim, hj)) return ReportLine{"sd-hall-identity", idx, basis, "0", "0", true};

  Scalar lhs;
  for (const SDKey& N : ctx.sd().keys(n))
    lhs += ratio(weighted_g(ctx, si, X, N) * weighted_g(ctx, sj, Y, N), ctx.sd().aut(N));

  Scalar corner;
  if (dim_leq(hj, X.gw.dim)) {
    for (const SDKey& Z : ctx.sd().keys(dim_sub(X.gw.dim, hj)))
      corner += ratio(weighted_g(ctx, si, Z, Y) * weighted_g(ctx, sj, Z, X), ctx.sd().aut(Z));
  }
  int sj_partner = Q.sigma_node[j];
  Scalar rhs = ctx.q_quarter(-4L * euler_form(Q, Q.unit(sj_partner), Q.unit(i))) * corner;
  Scalar base = Scalar(mpz_class(ctx.reps().aut(si) * ctx.sd().aut(X)));
  if (X == Y && i == sj_partner) rhs += base;
  if (X == Y && i == j)
    rhs += base * ctx.q_quarter(-4L * euler_form(Q, X.gw.dim, Q.unit(i)) - 2L * e_twist2(Q, Q.unit(i)));
  return ReportLine{"sd-hall-identity", idx, basis, scalar_to_string(lhs), scalar_to_string(rhs), lhs == rhs};
}

Report verify_bsigma(HallContext& ctx, const DimVec& bound, bool relation3_only) {
  Report report;
  const Quiver& Q = ctx.quiver();
  int n = Q.num_nodes();
  auto fits = [&](const DimVec& d) { return dim_leq(d, bound); };
  auto h = [&](int i) { return Q.hyperbolic_dim(Q.unit(i)); };
  std::vector<SDKey> keys = ctx.sd().keys_below(bound);

  for (const SDKey& M : keys) {
    ModuleVector m = basis_vector(M);
    std::string b = term_key(M);
    for (int i = 0; i < n; ++i) {
      if (!relation3_only) {
        ModuleVector t1 = op_T(ctx, i, m), t2 = op_T(ctx, Q.sigma_node[i], m);
        report.add_check("T-sigma", Q.node_ids[i], b, vector_to_string(t1), vector_to_string(t2), t1 == t2);
      }
      for (int j = 0; j < n; ++j) {
        std::string idx = node_pair(Q, i, j);
        int w2 = cartan_form(Q, h(j), Q.unit(i));
        if (!relation3_only) {
          ModuleVector lhs = op_T(ctx, i, op_E(ctx, j, m));
          ModuleVector rhs = scaled(op_E(ctx, j, op_T(ctx, i, m)), ctx.nu(w2));
          report.add_check("TE", idx, b, vector_to_string(lhs), vector_to_string(rhs), lhs == rhs);
          if (fits(dim_add(M.gw.dim, h(j)))) {
            lhs = op_T(ctx, i, op_F(ctx, j, m));
            rhs = scaled(op_F(ctx, j, op_T(ctx, i, m)), ctx.nu(-w2));
            report.add_check("TF", idx, b, vector_to_string(lhs), vector_to_string(rhs), lhs == rhs);
          }
        }
        if (fits(dim_add(M.gw.dim, h(j)))) {
          ModuleVector lhs = op_E(ctx, i, op_F(ctx, j, m));
          ModuleVector rhs = scaled(op_F(ctx, j, op_E(ctx, i, m)), ctx.nu(-cartan_form(Q, Q.unit(i), Q.unit(j))));
          if (i == j) rhs = combined(rhs, m);
          if (i == Q.sigma_node[j]) rhs = combined(rhs, op_T(ctx, i, m));
          report.add_check("EF", idx, b, vector_to_string(lhs), vector_to_string(rhs), lhs == rhs);
        }
      }
    }
  }

  // The counting identity on pairs (X, Y) whose common extension stays within bound.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const SDKey& X : keys) {
        DimVec nd = dim_add(X.gw.dim, h(i));
        if (!fits(nd) || !dim_leq(h(j), nd)) continue;
        for (const SDKey& Y : ctx.sd().keys(dim_sub(nd, h(j)))) report.add(check_sd_hall_identity(ctx, i, j, X, Y));
      }

  if (relation3_only) return report;

  for (int i = 0; i < n; ++i)
    for (const SDKey& M : keys) {
      DimVec nd = dim_add(M.gw.dim, h(i));
      if (!fits(nd)) continue;
      ModuleVector fm = op_F(ctx, i, basis_vector(M));
      for (const SDKey& N : ctx.sd().keys(nd)) {
        Scalar lhs = green_form_mod(ctx, fm, basis_vector(N));
        Scalar rhs = green_form_mod(ctx, basis_vector(M), op_E(ctx, i, basis_vector(N))) / (ctx.nu(-2) - Scalar(1));
        report.add_check("EF-adjoint", Q.node_ids[i], term_key(M) + "," + term_key(N), scalar_to_string(lhs),
                         scalar_to_string(rhs), lhs == rhs);
      }
    }

  if (Q.has_loops()) return report;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int a = 1 - cartan_form(Q, Q.unit(i), Q.unit(j));
      DimVec span = h(j);
      for (int k = 0; k < a; ++k) span = dim_add(span, h(i));
      for (const SDKey& M : keys) {
        ModuleVector m = basis_vector(M);
        if (fits(dim_add(M.gw.dim, span))) {
          ModuleVector total;
          for (int p = 0; p <= a; ++p) {
            ModuleVector v = m;
            for (int k = 0; k < a - p; ++k) v = op_F(ctx, i, v);
            v = op_F(ctx, j, v);
            for (int k = 0; k < p; ++k) v = op_F(ctx, i, v);
            Scalar c = quantum_binomial(ctx, a, p) * Scalar(p % 2 == 0 ? 1 : -1);
            total = combined(total, v, c);
          }
          report.add_check("serre-F", node_pair(Q, i, j), term_key(M), vector_to_string(total), "0", total.empty());
        }
        if (dim_leq(span, M.gw.dim)) {
          ModuleVector total;
          for (int p = 0; p <= a; ++p) {
            ModuleVector v = m;
            for (int k = 0; k < a - p; ++k) v = op_E(ctx, i, v);
            v = op_E(ctx, j, v);
            for (int k = 0; k < p; ++k) v = op_E(ctx, i, v);
            Scalar c = quantum_binomial(ctx, a, p) * Scalar(p % 2 == 0 ? 1 : -1);
            total = combined(total, v, c);
          }
          report.add_check("serre-E", node_pair(Q, i, j), term_key(M), vector_to_string(total), "0", total.empty());
        }
      }
    }
  return report;
}

Report verify_module_axioms(HallContext& ctx, const DimVec& bound, int cocycle_samples, unsigned seed) {
  Report report;
  const Quiver& Q = ctx.quiver();
  std::vector<SDKey> keys = ctx.sd().keys_below(bound);
  using Triple = std::tuple<RepKey, RepKey, SDKey>;

  // Counting form: sum_W F^W_{U,V} G^N_{W,M} = sum_P G^N_{U,P} G^P_{V,M}.
  for (const SDKey& N : keys)
    for (const DimVec& u : dims_below(N.gw.dim)) {
      if (dim_is_zero(u) || !dim_leq(Q.hyperbolic_dim(u), N.gw.dim)) continue;
      DimVec rest = dim_sub(N.gw.dim, Q.hyperbolic_dim(u));
      for (const DimVec& v : dims_below(rest)) {
        if (dim_is_zero(v) || !dim_leq(Q.hyperbolic_dim(v), rest)) continue;
        std::map<Triple, std::uint64_t> lhs, rhs;
        for (const auto& [wm, g] : ctx.sd().sd_tally(N, dim_add(u, v)))
          for (const auto& [uv, f] : ctx.reps().hall_tally(wm.first, u))
            lhs[{uv.first, uv.second, wm.second}] += f * g;
        for (const auto& [up, g1] : ctx.sd().sd_tally(N, u))
          for (const auto& [vm, g2] : ctx.sd().sd_tally(up.second, v))
            rhs[{up.first, vm.first, vm.second}] += g1 * g2;
        std::set<Triple> all;
        for (const auto& e : lhs) all.insert(e.first);
        for (const auto& e : rhs) all.insert(e.first);
        for (const Triple& t : all) {
          std::uint64_t l = lhs.count(t) ? lhs[t] : 0, r = rhs.count(t) ? rhs[t] : 0;
          report.add_check("associativity-counts", "-",
                           term_key(std::get<0>(t)) + "," + term_key(std::get<1>(t)) + "," +
                               term_key(std::get<2>(t)) + "," + term_key(N),
                           std::to_string(l), std::to_string(r), l == r);
        }
      }
    }

  // Twisted module associativity and Witt-block preservation.
  std::vector<RepKey> reps = ctx.reps().keys_below(bound);
  for (const SDKey& M : keys)
    for (const RepKey& V : reps) {
      DimVec mv = dim_add(M.gw.dim, Q.hyperbolic_dim(V.dim));
      if (dim_is_zero(V.dim) || !dim_leq(mv, bound)) continue;
      ModuleVector vm = act(ctx, basis_vector(V), basis_vector(M));
      GWClass expect = gw_add(ctx.field(), Q, M.gw, gw_hyperbolic(Q, V.dim));
      bool same_block = true;
      for (const auto& [k, c] : vm) same_block = same_block && k.gw == expect;
      report.add_check("witt-block", "-", term_key(V) + "," + term_key(M), gw_to_string(expect),
                       vm.empty() ? "-" : gw_to_string(vm.begin()->first.gw), same_block);
      for (const RepKey& U : reps) {
        if (dim_is_zero(U.dim) || !dim_leq(dim_add(mv, Q.hyperbolic_dim(U.dim)), bound)) continue;
        ModuleVector lhs = act(ctx, basis_vector(U), vm);
        ModuleVector rhs = act(ctx, product(ctx, basis_vector(U), basis_vector(V)), basis_vector(M));
        report.add_check("module-associativity", "-", term_key(U) + "," + term_key(V) + "," + term_key(M),
                         vector_to_string(lhs), vector_to_string(rhs), lhs == rhs);
      }
    }

  // (Delta (x) 1) rho = (1 (x) rho) rho.
  for (const SDKey& N : keys) {
    ModuleTensor r = coact(ctx, basis_vector(N));
    ModuleTensor3 lhs, rhs;
    for (const auto& [um, c] : r) {
      for (const auto& [ab, d] : coproduct(ctx, basis_vector(um.first))) add3(lhs, {ab.first, ab.second, um.second}, c * d);
      for (const auto& [bm, d] : coact(ctx, basis_vector(um.second))) add3(rhs, {um.first, bm.first, bm.second}, c * d);
    }
    report.add_check("comodule-coassociativity", "-", term_key(N), tensor3_to_string(lhs), tensor3_to_string(rhs),
                     lhs == rhs);
  }

  // (x (x) xi, rho zeta) = (x * xi, zeta).
  for (const SDKey& Z : keys) {
    ModuleTensor r = coact(ctx, basis_vector(Z));
    for (const DimVec& u : dims_below(Z.gw.dim)) {
      if (!dim_leq(Q.hyperbolic_dim(u), Z.gw.dim)) continue;
      for (const RepKey& U : ctx.reps().keys(u))
        for (const SDKey& M : ctx.sd().keys(dim_sub(Z.gw.dim, Q.hyperbolic_dim(u)))) {
          Scalar lhs = green_form_mod(ctx, basis_tensor(U, M), r);
          Scalar rhs = green_form_mod(ctx, act(ctx, basis_vector(U), basis_vector(M)), basis_vector(Z));
          report.add_check("green-adjunction", "-", term_key(U) + "," + term_key(M) + "," + term_key(Z),
                           scalar_to_string(lhs), scalar_to_string(rhs), lhs == rhs);
        }
    }
  }

  // c(a,b) + c~(g,a+b) = c~(g,a) + c~(g+H(a),b), doubled to stay integral.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(0, 3);
  int n = Q.num_nodes();
  for (int s = 0; s < cocycle_samples; ++s) {
    DimVec a(n), b(n), g0(n);
    for (int i = 0; i < n; ++i) {
      a[i] = coord(rng);
      b[i] = coord(rng);
      g0[i] = coord(rng);
    }
    DimVec g = Q.hyperbolic_dim(g0);
    long lhs = -2L * euler_form(Q, a, b) + act_twist2(Q, g, dim_add(a, b));
    long rhs = act_twist2(Q, g, a) + act_twist2(Q, dim_add(g, Q.hyperbolic_dim(a)), b);
    report.add_check("twist-cocycle", "-", dim_to_string(a) + "," + dim_to_string(b) + "," + dim_to_string(g),
                     std::to_string(lhs), std::to_string(rhs), lhs == rhs);
  }
  return report;
}

Report verify_twist_additivity(HallContext& ctx, const DimVec& bound, int count) {
  Report report;
  const Quiver& Q = ctx.quiver();
  const Field& F = ctx.field();
  int seen = 0;
  for (const RepKey& W : ctx.reps().keys_below(bound)) {
    const Representation& WR = ctx.reps().rep(W);
    for (const DimVec& d : dims_below(W.dim)) {
      if (seen >= count) return report;
      for_each_subrep(F, Q, WR, d, nullptr, [&](const SubspaceTuple& t) {
        DimVec u = restrict_to_sub(F, Q, WR, t).dim, v = quotient_by_sub(F, Q, WR, t).dim;
        long lhs = e_twist2(Q, W.dim);
        long rhs = e_twist2(Q, u) + e_twist2(Q, v) + 2L * euler_form(Q, Q.sigma_dim(u), v);
        bool alt = e_twist2_alternate(Q, W.dim) == lhs;
        report.add_check("twist-additivity", "-", dim_to_string(u) + "->" + term_key(W) + "->" + dim_to_string(v),
                         std::to_string(lhs), std::to_string(rhs), lhs == rhs && alt);
        return ++seen < count;
      });
    }
  }
  return report;
}

std::optional<int> double_base_size(const Quiver& Q) {
  int n = Q.num_nodes();
  if (n % 2 != 0) return std::nullopt;
  int h = n / 2;
  for (int i = 0; i < n; ++i)
    if (Q.sigma_node[i] != (i < h ? i + h : i - h)) return std::nullopt;
  for (const Arrow& a : Q.arrows)
    if ((a.tail < h) != (a.head < h)) return std::nullopt;
  return h;
}

Report verify_hyperbolic(HallContext& ctx, const DimVec& bound) {
  const Quiver& Q = ctx.quiver();
  auto half = double_base_size(Q);
  if (!half) throw Unsupported("hyperbolic check needs a quiver of the form Q' + Q'^op");
  const Field& F = ctx.field();
  Report report;
  DimVec base_bound = bound;
  for (int i = *half; i < Q.num_nodes(); ++i) base_bound[i] = 0;
  std::vector<RepKey> base = ctx.reps().keys_below(base_bound);

  auto h_key = [&](const RepKey& X) { return ctx.sd().classify(hyperbolic(F, Q, ctx.reps().rep(X))); };

  // Every self-dual class is hyperbolic on a unique base class, and Green forms agree.
  std::set<DimVec> dims;
  for (const RepKey& X : base) dims.insert(X.dim);
  for (const DimVec& d : dims) {
    std::set<SDKey> images;
    for (const RepKey& X : ctx.reps().keys(d)) {
      SDKey H = h_key(X);
      images.insert(H);
      report.add_check("hyperbolic-green-form", "-", term_key(X), ctx.reps().aut(X).get_str(),
                       ctx.sd().aut(H).get_str(), ctx.reps().aut(X) == ctx.sd().aut(H));
    }
    std::size_t total = ctx.sd().keys(Q.hyperbolic_dim(d)).size();
    report.add_check("hyperbolic-bijection", "-", dim_to_string(d), std::to_string(images.size()),
                     std::to_string(total), images.size() == total && images.size() == ctx.reps().keys(d).size());
  }

  // G^{H(X)}_{U1 + S(U2), H(Y)} = sum_W F^X_{U1,W} F^W_{Y,U2}.
  for (const RepKey& X : base) {
    SDKey HX = h_key(X);
    for (const DimVec& u1 : dims_below(X.dim))
      for (const DimVec& y : dims_below(dim_sub(X.dim, u1))) {
        DimVec u2 = dim_sub(dim_sub(X.dim, u1), y);
        for (const RepKey& U1 : ctx.reps().keys(u1))
          for (const RepKey& U2 : ctx.reps().keys(u2)) {
            Representation sub = direct_sum(Q, ctx.reps().rep(U1), dual_rep(F, Q, ctx.reps().rep(U2)));
            RepKey sub_key = ctx.reps().classify(sub);
            mpz_class aut_sub = ctx.reps().aut(sub_key);
            mpz_class aut_pair = ctx.reps().aut(U1) * ctx.reps().aut(U2);
            report.add_check("hyperbolic-aut", "-", term_key(U1) + "," + term_key(U2) + "," + term_key(X),
                             aut_sub.get_str(), aut_pair.get_str(), aut_sub == aut_pair);
            for (const RepKey& Y : ctx.reps().keys(y)) {
              SDKey HY = h_key(Y);
              std::uint64_t lhs = ctx.sd().sd_hall_number(sub_key, HY, HX);
              std::uint64_t rhs = 0;
              for (const RepKey& W : ctx.reps().keys(dim_add(y, u2)))
                rhs += ctx.reps().hall_number(U1, W, X) * ctx.reps().hall_number(Y, U2, W);
              std::string b = term_key(U1) + "," + term_key(U2) + "," + term_key(Y) + "," + term_key(X);
              report.add_check("hyperbolic-counts", "-", b, std::to_string(lhs), std::to_string(rhs), lhs == rhs);
            }
          }
      }
  }
  return report;
}

}  // namespace hallmod
