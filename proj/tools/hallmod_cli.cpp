#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hallmod/decomp.hpp"
#include "hallmod/hallalg.hpp"
#include "hallmod/hallmodule.hpp"

using namespace hallmod;

namespace {

enum Exit { kOk = 0, kChecksFailed = 1, kParse = 2, kBudget = 3, kUnsupported = 4, kUsage = 5 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config;
  std::string bound;
  int q = 0;
  std::uint64_t budget = 0;
  std::string format = "text";
  std::string x, y, u, m, ambient;
  bool relation3_only = false;
  int samples = 100;
  unsigned seed = 1;
};

// Rows of named columns, printed as key=value lines or as TSV with a header.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string format(bool tsv) const {
    std::ostringstream out;
    if (tsv) {
      for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "\t" : "") << columns_[c];
      out << "\n";
    }
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < columns_.size(); ++c)
        out << (c ? (tsv ? "\t" : " ") : "") << (tsv ? "" : columns_[c] + "=") << row[c];
      out << "\n";
    }
    return out.str();
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

DimVec parse_dims(const std::string& s, int n, const std::string& what) {
  DimVec d;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || x < 0) throw UsageError(what + " must be a list of nonnegative integers: " + s);
    d.push_back(x);
  }
  if (d.size() == 1 && n > 1) d.assign(n, d[0]);
  if (static_cast<int>(d.size()) != n)
    throw UsageError(what + " needs " + std::to_string(n) + " entries: " + s);
  return d;
}

DimVec require_bound(const Options& o, const Quiver& Q) {
  if (o.bound.empty()) throw UsageError("--bound is required");
  return parse_dims(o.bound, Q.num_nodes(), "--bound");
}

// Keys as printed by enumerate-reps / enumerate-selfdual, e.g. (1,0)#0 or (0,2,0)w2#0;
// the bracketed form [(1,0);0] used in vectors is accepted too.
std::string normalize_key(std::string s) {
  if (s.size() > 2 && s.front() == '[' && s.back() == ']') {
    s = s.substr(1, s.size() - 2);
    auto semi = s.rfind(';');
    if (semi != std::string::npos) s[semi] = '#';
  }
  return s;
}

RepKey find_rep_key(HallContext& ctx, const std::string& raw, const std::string& what) {
  std::string s = normalize_key(raw);
  auto hash = s.find('#');
  auto open = s.find('('), close = s.find(')');
  if (hash == std::string::npos || open != 0 || close == std::string::npos) throw UsageError(what + ": bad key " + s);
  DimVec d = parse_dims(s.substr(1, close - 1), ctx.quiver().num_nodes(), what);
  for (const RepKey& k : ctx.reps().keys(d))
    if (key_to_string(k) == s) return k;
  throw UsageError(what + ": no such class " + s);
}

SDKey find_sd_key(HallContext& ctx, const std::string& raw, const std::string& what) {
  std::string s = normalize_key(raw);
  auto open = s.find('('), close = s.find(')');
  if (open != 0 || close == std::string::npos) throw UsageError(what + ": bad key " + s);
  DimVec d = parse_dims(s.substr(1, close - 1), ctx.quiver().num_nodes(), what);
  for (const SDKey& k : ctx.sd().keys(d))
    if (key_to_string(k) == s) return k;
  throw UsageError(what + ": no such class " + s);
}

int finish(const Report& r, bool tsv) {
  std::cout << r.format(tsv);
  if (!tsv) std::cout << r.summary() << "\n";
  return r.ok() ? kOk : kChecksFailed;
}

int run_validate(const Options& o) {
  Quiver Q = load_quiver(o.config);
  if (o.q) Q.q = o.q;
  Report r;
  auto v = validate(Q);
  if (v.empty()) r.add_check("valid-quiver", "", o.config, "", "", true);
  for (const auto& msg : v) r.add_check("valid-quiver", "", o.config, msg, "", false);
  return finish(r, o.format == "tsv");
}

int run_command(const std::string& cmd, const Options& o) {
  if (cmd == "validate") return run_validate(o);
  Quiver Q = load_quiver(o.config);
  if (o.q) Q.q = o.q;
  Budget budget;
  if (o.budget) budget.tuples = budget.group_elements = o.budget;
  HallContext ctx(Q, budget);
  bool tsv = o.format == "tsv";

  if (cmd == "enumerate-reps") {
    Table t({"key", "aut", "rep"});
    for (const RepKey& k : ctx.reps().keys_below(require_bound(o, Q)))
      t.add({key_to_string(k), ctx.reps().aut(k).get_str(), rep_to_string(ctx.field(), Q, ctx.reps().rep(k))});
    std::cout << t.format(tsv);
  } else if (cmd == "enumerate-selfdual") {
    Table t({"key", "aut", "rep"});
    for (const SDKey& k : ctx.sd().keys_below(require_bound(o, Q)))
      t.add({key_to_string(k), ctx.sd().aut(k).get_str(), selfdual_to_string(ctx.field(), Q, ctx.sd().rep(k))});
    std::cout << t.format(tsv);
  } else if (cmd == "hall-product") {
    RepKey a = find_rep_key(ctx, o.x, "--x"), b = find_rep_key(ctx, o.y, "--y");
    Table t({"x", "y", "product"});
    t.add({term_key(a), term_key(b), vector_to_string(product(ctx, basis_vector(a), basis_vector(b)))});
    std::cout << t.format(tsv);
  } else if (cmd == "module-act") {
    RepKey a = find_rep_key(ctx, o.u, "--u");
    SDKey b = find_sd_key(ctx, o.m, "--m");
    Table t({"u", "m", "action"});
    t.add({term_key(a), term_key(b), vector_to_string(act(ctx, basis_vector(a), basis_vector(b)))});
    std::cout << t.format(tsv);
  } else if (cmd == "coact") {
    SDKey b = find_sd_key(ctx, o.m, "--m");
    Table t({"m", "coaction"});
    t.add({term_key(b), vector_to_string(coact(ctx, basis_vector(b)))});
    std::cout << t.format(tsv);
  } else if (cmd == "bialgebra") {
    return finish(verify_bialgebra(ctx, require_bound(o, Q)), tsv);
  } else if (cmd == "module-axioms") {
    return finish(verify_module_axioms(ctx, require_bound(o, Q), o.samples, o.seed), tsv);
  } else if (cmd == "bsigma") {
    return finish(verify_bsigma(ctx, require_bound(o, Q), o.relation3_only), tsv);
  } else if (cmd == "riedtmann") {
    std::optional<DimVec> ambient;
    if (!o.ambient.empty()) ambient = parse_dims(o.ambient, Q.num_nodes(), "--ambient");
    return finish(verify_riedtmann(ctx, require_bound(o, Q), ambient), tsv);
  } else if (cmd == "hyperbolic") {
    return finish(verify_hyperbolic(ctx, require_bound(o, Q)), tsv);
  } else if (cmd == "cuspidals") {
    Table t({"class", "weight", "vector"});
    for (const auto& c : cuspidals(ctx, require_bound(o, Q)))
      t.add({gw_to_string(c.gw), weight_to_string(c.weight2), vector_to_string(c.vector)});
    std::cout << t.format(tsv);
  } else if (cmd == "decompose") {
    Decomposition d = decompose(ctx, require_bound(o, Q));
    Table t({"summand", "weight", "cuspidal", "graded_dims"});
    for (std::size_t k = 0; k < d.summands.size(); ++k) {
      const Summand& s = d.summands[k];
      std::string dims;
      for (const auto& [g, b] : s.basis) dims += (dims.empty() ? "" : ",") + gw_to_string(g) + ":" + std::to_string(b.size());
      t.add({std::to_string(k), weight_to_string(s.generator.weight2), vector_to_string(s.generator.vector), dims});
    }
    std::cout << t.format(tsv);
    if (!tsv) std::cout << "summands=" << d.summands.size() << "\n";
    return finish(d.checks, tsv);
  } else if (cmd == "classify-indecomposables") {
    Table t({"key", "dim", "label", "underlying"});
    for (const auto& info : sd_indecomposables(ctx.sd(), require_bound(o, Q))) {
      std::string under = info.underlying_indecomposable    ? "indecomposable"
                          : info.underlying_hyperbolic_pair ? "hyperbolic-pair"
                                                            : "other";
      t.add({key_to_string(info.key), dim_to_string(info.key.gw.dim), info.label.empty() ? "-" : info.label, under});
    }
    std::cout << t.format(tsv);
  } else if (cmd == "character") {
    Table t({"class", "rank"});
    for (const auto& [g, n] : character(ctx, require_bound(o, Q))) t.add({gw_to_string(g), std::to_string(n)});
    std::cout << t.format(tsv);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall algebras and Hall modules of quivers with involution over finite fields"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;

  auto common = [&](CLI::App* sub, bool needs_bound) {
    sub->add_option("config", o.config, "quiver config file")->required();
    sub->add_option("--q", o.q, "override the field size");
    sub->add_option("--budget", o.budget, "enumeration size limit")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "tsv"}));
    if (needs_bound) sub->add_option("--bound", o.bound, "componentwise dimension bound a,b,...");
    sub->callback([&chosen, sub] { chosen = sub->get_name(); });
  };

  common(app.add_subcommand("validate", "check the quiver config"), false);
  common(app.add_subcommand("enumerate-reps", "isomorphism classes of representations"), true);
  common(app.add_subcommand("enumerate-selfdual", "isometry classes of self-dual representations"), true);
  auto* hp = app.add_subcommand("hall-product", "product of two basis elements");
  common(hp, false);
  hp->add_option("--x", o.x, "left class, e.g. (1,0)#0")->required();
  hp->add_option("--y", o.y, "right class")->required();
  auto* ma = app.add_subcommand("module-act", "action of a representation on a self-dual class");
  common(ma, false);
  ma->add_option("--u", o.u, "representation class")->required();
  ma->add_option("--m", o.m, "self-dual class, e.g. (0)w0#0")->required();
  auto* co = app.add_subcommand("coact", "coaction on a self-dual class");
  common(co, false);
  co->add_option("--m", o.m, "self-dual class")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  common(verify->add_subcommand("bialgebra", "Hall algebra laws"), true);
  auto* axioms = verify->add_subcommand("module-axioms", "module and comodule axioms");
  common(axioms, true);
  axioms->add_option("--samples", o.samples, "random triples for the twist cocycle");
  axioms->add_option("--seed", o.seed, "seed for the random triples");
  auto* bs = verify->add_subcommand("bsigma", "reduced module relations");
  common(bs, true);
  bs->add_flag("--relation3-only", o.relation3_only, "only the E/F commutation relation");
  auto* ried = verify->add_subcommand("riedtmann", "summed Hall number identity");
  common(ried, true);
  ried->add_option("--ambient", o.ambient, "bound on M plus the hyperbolic of U");
  common(verify->add_subcommand("hyperbolic", "disjoint double comparison"), true);

  common(app.add_subcommand("cuspidals", "basis of the cuspidal space"), true);
  common(app.add_subcommand("decompose", "highest weight decomposition within the bound"), true);
  common(app.add_subcommand("classify-indecomposables", "self-dual indecomposables"), true);
  common(app.add_subcommand("character", "weight space ranks"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run_command(chosen, o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ContractViolation& e) {
    std::cerr << "invalid quiver: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidField& e) {
    std::cerr << "invalid field: " << e.what() << "\n";
    return kParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kBudget;
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  }
}
