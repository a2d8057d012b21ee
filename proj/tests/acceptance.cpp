// Acceptance run: one pass/fail line per criterion. Arguments select criteria by number.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "hallmod/decomp.hpp"
#include "hallmod/hallalg.hpp"
#include "hallmod/hallmodule.hpp"
#include "quivers.hpp"

using namespace hallmod;
using fixture::swap_a2;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
  void note(const std::string& s) { detail << " " << s; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

void require_report(Outcome& o, const std::string& name, const Report& r) {
  o.note(name + ":" + std::to_string(r.lines().size()));
  o.require(!r.lines().empty(), name + " ran no checks");
  o.require(r.ok(), name + " " + r.summary());
}

SDKey r_key(HallContext& ctx, std::vector<std::pair<int, int>> parts) {
  SelfDualRep N = zero_selfdual(ctx.quiver());
  for (auto [i, c] : parts) N = orthogonal_sum(ctx.quiver(), N, *r_object(ctx.field(), ctx.quiver(), i, c));
  return ctx.sd().classify(N);
}

bool is_multiple(const ModuleVector& a, const ModuleVector& b) {
  if (a.size() != b.size() || a.empty()) return false;
  return scaled(a, b.begin()->second / a.begin()->second) == b;
}

void riedtmann(Outcome& o) {
  for (int q : {3, 5})
    for (Duality k : {Duality::Orthogonal, Duality::Symplectic}) {
      auto t0 = std::chrono::steady_clock::now();
      HallContext ctx(single_node(k, q));
      require_report(o, duality_name(k) + "-A1-F" + std::to_string(q), verify_riedtmann(ctx, {3}));
      o.require(seconds_since(t0) < 60, "runtime");
    }
  auto t0 = std::chrono::steady_clock::now();
  HallContext u(swap_a2(Duality::Unitary, 9));
  require_report(o, "unitary-swap-F9", verify_riedtmann(u, {2, 2}, DimVec{2, 2}));
  o.require(seconds_since(t0) < 60, "runtime");
}

void bsigma(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  for (Duality k : {Duality::Orthogonal, Duality::Symplectic}) {
    HallContext ctx(single_node(k, 3));
    require_report(o, duality_name(k) + "-A1", verify_bsigma(ctx, {4}));
  }
  for (auto [k, q] : {std::pair{Duality::Orthogonal, 3}, {Duality::Symplectic, 3}, {Duality::Unitary, 9}}) {
    HallContext ctx(swap_a2(k, q));
    require_report(o, duality_name(k) + "-swap", verify_bsigma(ctx, {2, 2}));
  }
  HallContext j(jordan(Duality::Symplectic, 3));
  Report r = verify_bsigma(j, {2}, true);
  require_report(o, "jordan-symplectic-relation3", r);
  o.require(r.count("EF") > 0, "jordan EF checks");
  o.require(seconds_since(t0) < 300, "runtime");
}

void five_summands(Outcome& o) {
  HallContext ctx(type_a(3, Duality::Orthogonal, 3));
  Decomposition d = decompose(ctx, {1, 2, 1});
  require_report(o, "decomposition-checks", d.checks);
  ModuleVector x1 = combined(basis_vector(r_key(ctx, {{0, 1}, {1, 1}})),
                             basis_vector(r_key(ctx, {{0, -1}, {1, -1}})), Scalar(-1));
  ModuleVector x2 = combined(basis_vector(r_key(ctx, {{0, -1}, {1, 1}})),
                             basis_vector(r_key(ctx, {{0, 1}, {1, -1}})), Scalar(-1));
  std::vector<ModuleVector> listed{basis_vector(ctx.sd().zero_key()), basis_vector(r_key(ctx, {{0, 1}})),
                                   basis_vector(r_key(ctx, {{0, -1}})), x1, x2};
  std::vector<bool> used(d.summands.size(), false);
  int found = 0;
  for (const ModuleVector& v : listed)
    for (std::size_t s = 0; s < d.summands.size(); ++s)
      if (!used[s] && is_multiple(v, d.summands[s].generator.vector)) {
        used[s] = true;
        ++found;
        break;
      }
  o.note("summands:" + std::to_string(d.summands.size()) + " listed-found:" + std::to_string(found) + "/5");
  for (std::size_t s = 0; s < d.summands.size(); ++s)
    if (!used[s]) o.note("extra:" + vector_to_string(d.summands[s].generator.vector));
  o.require(found == 5, "listed generators");
  o.require(d.summands.size() == 5, "exactly five summands");
}

void symplectic_a3(Outcome& o) {
  int n = 0;
  for (const Quiver& Q : type_a_orientations(3, Duality::Symplectic, 3)) {
    HallContext ctx(Q);
    auto c = cuspidals(ctx, {1, 1, 1});
    o.require(c.size() == 1 && c[0].vector == basis_vector(ctx.sd().zero_key()), "cuspidals = {[0]}");
    Decomposition d = decompose(ctx, {1, 1, 1});
    o.require(d.checks.ok() && d.checks.count("exhaustion") == d.ranks.size(), "exhaustion");
    ++n;
  }
  o.note("orientations:" + std::to_string(n));
}

void closed_forms(Outcome& o) {
  struct Case {
    std::string name;
    Quiver Q;
    DimVec bound;
  };
  std::vector<Case> cases{{"symplectic-A2", type_a(2, Duality::Symplectic, 3), {2, 2}},
                          {"orthogonal-A3", type_a(3, Duality::Orthogonal, 3), {1, 2, 1}},
                          {"unitary-A3", type_a(3, Duality::Unitary, 9), {1, 2, 1}}};
  for (auto& cs : cases) {
    HallContext ctx(cs.Q);
    std::map<GWClass, SpanBasis> solver;
    std::map<GWClass, std::size_t> solver_dim, closed_dim;
    for (const auto& c : cuspidals(ctx, cs.bound)) {
      solver[c.gw].add(c.vector);
      ++solver_dim[c.gw];
    }
    bool contained = true;
    for (const ModuleVector& v : closed_form_cuspidals(ctx, cs.bound)) {
      GWClass g = v.begin()->first.gw;
      ++closed_dim[g];
      contained = contained && solver[g].contains(v);
    }
    std::vector<std::string> differing;
    for (const auto& [g, n] : solver_dim)
      if (closed_dim[g] != n)
        differing.push_back(gw_to_string(g) + " solver " + std::to_string(n) + " closed " +
                            std::to_string(closed_dim[g]));
    o.note(cs.name + (contained && differing.empty() ? ":equal" : ":differs"));
    for (const auto& s : differing) o.note("(" + s + ")");
    o.require(contained, cs.name + " containment");
    o.require(differing.empty(), cs.name + " dimensions");
  }
}

void hall_algebra(Outcome& o) {
  HallContext a1(single_node(Duality::Orthogonal, 3));
  HallContext a2(type_a(2, Duality::Orthogonal, 3));
  for (auto* item : {&a1, &a2}) {
    DimVec bound = item == &a1 ? DimVec{3} : DimVec{2, 2};
    Report r = verify_bialgebra(*item, bound);
    std::string name = item == &a1 ? "A1" : "A2";
    require_report(o, name, r);
    for (const char* rel : {"associativity", "coassociativity", "delta-multiplicative", "hopf-pairing"})
      o.require(r.count(rel) > 0, name + " " + rel);
  }
}

void module_axioms(Outcome& o) {
  for (Duality k : {Duality::Orthogonal, Duality::Symplectic}) {
    HallContext a1(single_node(k, 3));
    HallContext sw(swap_a2(k, 3));
    for (auto* ctx : {&a1, &sw}) {
      std::string name = duality_name(k) + (ctx == &a1 ? "-A1" : "-swap");
      // One node: N up to 6 covers every triple with dim U + dim V + dim M <= 3.
      DimVec bound = ctx == &a1 ? DimVec{6} : DimVec{3, 3};
      Report r = verify_module_axioms(*ctx, bound);
      require_report(o, name, r);
      o.require(r.count("associativity-counts") > 0, name + " associativity counts");
      o.require(r.count("comodule-coassociativity") > 0, name + " coassociativity");
      o.require(r.count("twist-cocycle") == 100, name + " cocycle samples");
    }
  }
}

void twist_additivity(Outcome& o) {
  struct Case {
    std::string name;
    Quiver Q;
    DimVec bound;
  };
  std::vector<Case> cases{{"swap-A2", swap_a2(Duality::Orthogonal, 3), {3, 3}},
                          {"jordan-orthogonal", jordan(Duality::Orthogonal, 3), {3}},
                          {"jordan-symplectic", jordan(Duality::Symplectic, 3), {3}}};
  for (auto& c : cases) {
    HallContext ctx(c.Q);
    Report r = verify_twist_additivity(ctx, c.bound, 200);
    require_report(o, c.name, r);
    o.require(r.lines().size() == 200, c.name + " sequence count");
  }
}

void hyperbolic_module(Outcome& o) {
  for (Duality k : {Duality::Orthogonal, Duality::Symplectic}) {
    HallContext a1(disjoint_double(single_node(k, 3), k));
    HallContext a2(disjoint_double(fixture::plain_a2(3), k));
    for (auto* ctx : {&a1, &a2}) {
      std::string name = duality_name(k) + (ctx == &a1 ? "-A1-double" : "-A2-double");
      Report r = verify_hyperbolic(*ctx, DimVec(ctx->quiver().num_nodes(), 2));
      require_report(o, name, r);
      o.require(r.count("hyperbolic-green-form") > 0, name + " green form");
    }
  }
}

void classification(Outcome& o) {
  struct C {
    int n;
    Duality kind;
    std::vector<int> qs;
  };
  for (auto c : std::vector<C>{{2, Duality::Orthogonal, {3, 5}},
                               {2, Duality::Symplectic, {3, 5}},
                               {2, Duality::Unitary, {9, 25}},
                               {3, Duality::Orthogonal, {3, 5}},
                               {3, Duality::Symplectic, {3, 5}},
                               {3, Duality::Unitary, {9, 25}}}) {
    std::multiset<DimVec> reference;
    bool first = true, same = true;
    for (int q : c.qs)
      for (const Quiver& Q : type_a_orientations(c.n, c.kind, q)) {
        HallContext ctx(Q);
        DimVec bound(Q.num_nodes(), 2);
        if (c.kind == Duality::Unitary && c.n == 3) bound = {1, 2, 1};
        std::multiset<DimVec> dims;
        for (const auto& info : sd_indecomposables(ctx.sd(), bound)) dims.insert(info.key.gw.dim);
        if (first) reference = dims;
        same = same && dims == reference;
        first = false;
      }
    std::string name = "A" + std::to_string(c.n) + "-" + duality_name(c.kind);
    o.note(name + ":" + std::to_string(reference.size()));
    o.require(same, name + " independence");
  }
  const std::set<std::string> six{"H(I_{1,1})", "H(I_{0,1})", "R_0^+", "R_0^-", "R_1^+", "R_1^-"};
  for (bool toward : {false, true}) {
    HallContext ctx(type_a(3, Duality::Orthogonal, 3, {toward}));
    auto list = sd_indecomposables(ctx.sd(), {2, 2, 2});
    std::set<std::string> labels;
    for (const auto& info : list) labels.insert(info.label);
    o.require(list.size() == 6 && labels == six, "six orthogonal A3 indecomposables");
  }
}

void witt_table(Outcome& o) {
  for (int q : {3, 5}) {
    HallContext ctx(single_node(Duality::Orthogonal, q));
    const Field& F = ctx.field();
    const Quiver& Q = ctx.quiver();
    // Representatives of every class up to dimension 2, summed pairwise.
    std::vector<SDKey> reps;
    for (int n = 0; n <= 2; ++n)
      for (const SDKey& k : ctx.sd().keys(DimVec{n})) reps.push_back(k);
    std::set<int> elements;
    bool additive = true;
    for (const SDKey& a : reps) {
      elements.insert(a.gw.witt[0]);
      for (const SDKey& b : reps) {
        GWClass sum = gw_class(F, Q, orthogonal_sum(Q, ctx.sd().rep(a), ctx.sd().rep(b)));
        additive = additive && sum.witt[0] == witt_add(F, a.gw.witt[0], b.gw.witt[0], false);
        elements.insert(sum.witt[0]);
      }
    }
    int max_order = 1;
    for (int a : elements) {
      int ord = 1;
      for (int y = a; y != 0; y = witt_add(F, y, a, false)) ++ord;
      max_order = std::max(max_order, ord);
    }
    std::string shape = max_order == 4 ? "Z4" : max_order == 2 ? "Z2xZ2" : "?";
    o.note("F" + std::to_string(q) + ":|W|=" + std::to_string(elements.size()) + "," + shape);
    o.require(additive, "sums match the Witt table");
    o.require(elements.size() == 4 && witt_group_size(F, false) == 4, "order 4");
    o.require(shape == (q == 3 ? "Z4" : "Z2xZ2"), "group structure");
  }
}

struct Criterion {
  int number;
  std::string name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{{1, "riedtmann identity", riedtmann},
                             {2, "B-sigma relations", bsigma},
                             {3, "orthogonal A3 has five summands", five_summands},
                             {4, "symplectic A3 cuspidals", symplectic_a3},
                             {5, "closed-form cuspidals", closed_forms},
                             {6, "Hall algebra laws", hall_algebra},
                             {7, "module axioms", module_axioms},
                             {8, "twist additivity", twist_additivity},
                             {9, "hyperbolic module", hyperbolic_module},
                             {10, "classification", classification},
                             {11, "Witt table", witt_table}};
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  bool all_pass = true;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.count(c.number)) continue;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all_pass = all_pass && o.pass;
    std::cout << "criterion " << c.number << ": " << (o.pass ? "PASS" : "FAIL") << " " << c.name << " ["
              << fmt_seconds(seconds_since(t0)) << "]" << o.detail.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
