#include "hallmod/quiver.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace hallmod {

std::string duality_name(Duality d) {
  switch (d) {
    case Duality::Orthogonal: return "orthogonal";
    case Duality::Symplectic: return "symplectic";
    case Duality::Unitary: return "unitary";
  }
  return "";
}

bool Quiver::has_loops() const {
  for (const auto& a : arrows)
    if (a.tail == a.head) return true;
  return false;
}

int Quiver::node_index(const std::string& id) const {
  for (int i = 0; i < num_nodes(); ++i)
    if (node_ids[i] == id) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& id) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].id == id) return i;
  return -1;
}

DimVec Quiver::unit(int i) const {
  DimVec d(num_nodes(), 0);
  d[i] = 1;
  return d;
}

DimVec Quiver::sigma_dim(const DimVec& d) const {
  DimVec r(d.size());
  for (int i = 0; i < num_nodes(); ++i) r[i] = d[sigma_node[i]];
  return r;
}

bool Quiver::is_symmetric(const DimVec& d) const { return sigma_dim(d) == d; }

DimVec Quiver::hyperbolic_dim(const DimVec& d) const { return dim_add(d, sigma_dim(d)); }

std::vector<int> Quiver::decorated_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < num_nodes(); ++i)
    if (sigma_node[i] == i && s[i] == 1) out.push_back(i);
  return out;
}

std::vector<std::string> validate(const Quiver& Q) {
  std::vector<std::string> v;
  int n = Q.num_nodes(), m = Q.num_arrows();
  if (Q.q < 3 || Q.q % 2 == 0) v.push_back("q must be an odd prime power >= 3");
  if (static_cast<int>(Q.s.size()) != n || static_cast<int>(Q.sigma_node.size()) != n ||
      static_cast<int>(Q.sigma_arrow.size()) != m) {
    v.push_back("node or arrow tables have inconsistent sizes");
    return v;
  }
  bool sigma_ok = true;
  for (int i = 0; i < n; ++i) {
    int j = Q.sigma_node[i];
    if (j < 0 || j >= n || Q.sigma_node[j] != i) {
      v.push_back("sigma on nodes is not an involution at node " + Q.node_ids[i]);
      sigma_ok = false;
    }
    if (Q.s[i] != 1 && Q.s[i] != -1) v.push_back("s must be +1 or -1 at node " + Q.node_ids[i]);
  }
  for (int a = 0; a < m; ++a) {
    int b = Q.sigma_arrow[a];
    const Arrow& al = Q.arrows[a];
    if (al.tail < 0 || al.tail >= n || al.head < 0 || al.head >= n) {
      v.push_back("arrow " + al.id + " has an unknown endpoint");
      sigma_ok = false;
      continue;
    }
    if (b < 0 || b >= m || Q.sigma_arrow[b] != a) {
      v.push_back("sigma on arrows is not an involution at arrow " + al.id);
      sigma_ok = false;
    }
    if (al.tau != 1 && al.tau != -1) v.push_back("tau must be +1 or -1 at arrow " + al.id);
  }
  if (!sigma_ok) return v;
  for (int a = 0; a < m; ++a) {
    const Arrow& al = Q.arrows[a];
    const Arrow& bl = Q.arrows[Q.sigma_arrow[a]];
    if (bl.head != Q.sigma_node[al.tail] || bl.tail != Q.sigma_node[al.head])
      v.push_back("sigma reverses arrow " + al.id + " inconsistently with the node involution");
    if (Q.sigma_node[al.tail] == al.head && Q.sigma_arrow[a] != a)
      v.push_back("arrow " + al.id + " joins a node to its image but is not fixed by sigma");
    if (al.tau * bl.tau != Q.s[al.head] * Q.s[al.tail])
      v.push_back("tau product condition fails at arrow " + al.id);
  }
  for (int i = 0; i < n; ++i)
    if (Q.s[i] != Q.s[Q.sigma_node[i]]) v.push_back("s is not sigma-invariant at node " + Q.node_ids[i]);
  if (Q.iota()) {
    int r = 1;
    while (r * r < Q.q) ++r;
    if (r * r != Q.q) v.push_back("unitary duality needs q to be a perfect square");
    for (int i = 0; i < n; ++i)
      if (Q.s[i] != 1) v.push_back("unitary duality needs s = +1 at node " + Q.node_ids[i]);
    for (const auto& a : Q.arrows)
      if (a.tau != -1) v.push_back("unitary duality needs tau = -1 at arrow " + a.id);
  }
  return v;
}

namespace {

int parse_sign(const std::string& tok, const std::string& key, int line) {
  std::string prefix = key + "=";
  if (tok.rfind(prefix, 0) != 0) throw ParseError("line " + std::to_string(line) + ": expected " + prefix);
  std::string val = tok.substr(prefix.size());
  if (val == "1" || val == "+1") return 1;
  if (val == "-1") return -1;
  throw ParseError("line " + std::to_string(line) + ": " + key + " must be +1 or -1");
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  Quiver Q;
  std::vector<std::optional<int>> s_given;
  std::vector<std::optional<int>> tau_given;
  std::vector<std::pair<std::string, std::string>> sig_nodes, sig_arrows;
  std::vector<std::tuple<std::string, std::string, std::string, int>> raw_arrows;
  bool have_q = false, have_duality = false;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(ln) + ": ";
    if (tok[0] == "node") {
      if (tok.size() < 2 || tok.size() > 3) throw ParseError(where + "expected: node <id> s=<+-1>");
      if (Q.node_index(tok[1]) >= 0) throw ParseError(where + "duplicate node " + tok[1]);
      Q.node_ids.push_back(tok[1]);
      s_given.push_back(tok.size() == 3 ? std::optional<int>(parse_sign(tok[2], "s", ln)) : std::nullopt);
    } else if (tok[0] == "arrow") {
      if (tok.size() < 4 || tok.size() > 5) throw ParseError(where + "expected: arrow <id> <tail> <head> tau=<+-1>");
      for (const auto& a : raw_arrows)
        if (std::get<0>(a) == tok[1]) throw ParseError(where + "duplicate arrow " + tok[1]);
      raw_arrows.emplace_back(tok[1], tok[2], tok[3], ln);
      tau_given.push_back(tok.size() == 5 ? std::optional<int>(parse_sign(tok[4], "tau", ln)) : std::nullopt);
    } else if (tok[0] == "sigma") {
      if (tok.size() != 4 || (tok[1] != "node" && tok[1] != "arrow"))
        throw ParseError(where + "expected: sigma node|arrow <id> <id>");
      (tok[1] == "node" ? sig_nodes : sig_arrows).emplace_back(tok[2], tok[3]);
    } else if (tok[0] == "duality") {
      if (tok.size() != 2) throw ParseError(where + "expected: duality <kind>");
      if (tok[1] == "orthogonal")
        Q.duality = Duality::Orthogonal;
      else if (tok[1] == "symplectic")
        Q.duality = Duality::Symplectic;
      else if (tok[1] == "unitary")
        Q.duality = Duality::Unitary;
      else
        throw ParseError(where + "unknown duality " + tok[1]);
      have_duality = true;
    } else if (tok[0] == "q") {
      if (tok.size() != 2) throw ParseError(where + "expected: q <integer>");
      try {
        std::size_t used = 0;
        Q.q = std::stoi(tok[1], &used);
        if (used != tok[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(where + "q must be an integer");
      }
      have_q = true;
    } else {
      throw ParseError(where + "unknown directive " + tok[0]);
    }
  }
  if (!have_q) throw ParseError("missing q line");
  if (!have_duality) throw ParseError("missing duality line");
  if (Q.node_ids.empty()) throw ParseError("no nodes declared");
  int default_s = Q.duality == Duality::Symplectic ? -1 : 1;
  for (const auto& sg : s_given) Q.s.push_back(sg.value_or(default_s));
  for (std::size_t k = 0; k < raw_arrows.size(); ++k) {
    const auto& [id, t, h, l] = raw_arrows[k];
    Arrow a;
    a.id = id;
    a.tail = Q.node_index(t);
    a.head = Q.node_index(h);
    if (a.tail < 0 || a.head < 0) throw ParseError("line " + std::to_string(l) + ": unknown node in arrow " + id);
    a.tau = tau_given[k].value_or(-1);
    Q.arrows.push_back(a);
  }
  Q.sigma_node.resize(Q.num_nodes());
  for (int i = 0; i < Q.num_nodes(); ++i) Q.sigma_node[i] = i;
  Q.sigma_arrow.resize(Q.num_arrows());
  for (int i = 0; i < Q.num_arrows(); ++i) Q.sigma_arrow[i] = i;
  for (const auto& [a, b] : sig_nodes) {
    int i = Q.node_index(a), j = Q.node_index(b);
    if (i < 0 || j < 0) throw ParseError("sigma names an unknown node: " + a + " " + b);
    Q.sigma_node[i] = j;
    Q.sigma_node[j] = i;
  }
  for (const auto& [a, b] : sig_arrows) {
    int i = Q.arrow_index(a), j = Q.arrow_index(b);
    if (i < 0 || j < 0) throw ParseError("sigma names an unknown arrow: " + a + " " + b);
    Q.sigma_arrow[i] = j;
    Q.sigma_arrow[j] = i;
  }
  return Q;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_quiver(ss.str());
}

std::string quiver_to_config(const Quiver& Q) {
  std::ostringstream out;
  out << "duality " << duality_name(Q.duality) << "\n";
  out << "q " << Q.q << "\n";
  for (int i = 0; i < Q.num_nodes(); ++i) out << "node " << Q.node_ids[i] << " s=" << (Q.s[i] > 0 ? "+1" : "-1") << "\n";
  for (const auto& a : Q.arrows)
    out << "arrow " << a.id << " " << Q.node_ids[a.tail] << " " << Q.node_ids[a.head] << " tau="
        << (a.tau > 0 ? "+1" : "-1") << "\n";
  for (int i = 0; i < Q.num_nodes(); ++i)
    if (Q.sigma_node[i] > i) out << "sigma node " << Q.node_ids[i] << " " << Q.node_ids[Q.sigma_node[i]] << "\n";
  for (int a = 0; a < Q.num_arrows(); ++a)
    if (Q.sigma_arrow[a] > a) out << "sigma arrow " << Q.arrows[a].id << " " << Q.arrows[Q.sigma_arrow[a]].id << "\n";
  return out.str();
}

int euler_form(const Quiver& Q, const DimVec& d, const DimVec& e) {
  int r = 0;
  for (int i = 0; i < Q.num_nodes(); ++i) r += d[i] * e[i];
  for (const auto& a : Q.arrows) r -= d[a.tail] * e[a.head];
  return r;
}

int cartan_form(const Quiver& Q, const DimVec& d, const DimVec& e) { return euler_form(Q, d, e) + euler_form(Q, e, d); }

namespace {

int four_sum2(const Quiver& Q, const DimVec& u, bool alternate) {
  auto rep_of_orbit = [&](int x, int sx) { return alternate ? x > sx : x < sx; };
  int r = 0;
  for (int i = 0; i < Q.num_nodes(); ++i) {
    int si = Q.sigma_node[i];
    if (si == i)
      r += u[i] * (u[i] - Q.s[i]);
    else if (rep_of_orbit(i, si))
      r += 2 * u[si] * u[i];
  }
  for (int a = 0; a < Q.num_arrows(); ++a) {
    const Arrow& al = Q.arrows[a];
    int sa = Q.sigma_arrow[a];
    if (sa == a) {
      int i = al.head;
      r -= u[i] * (u[i] + al.tau * Q.s[i]);
    } else if (rep_of_orbit(a, sa)) {
      r -= 2 * u[Q.sigma_node[al.tail]] * u[al.head];
    }
  }
  return r;
}

}  // namespace

int e_twist2(const Quiver& Q, const DimVec& d) {
  if (Q.iota()) return euler_form(Q, Q.sigma_dim(d), d);
  return four_sum2(Q, d, false);
}

int e_twist2_alternate(const Quiver& Q, const DimVec& d) {
  if (Q.iota()) return euler_form(Q, Q.sigma_dim(d), d);
  return four_sum2(Q, d, true);
}

int t_weight2(const Quiver& Q, const DimVec& d, int i) {
  return -2 * cartan_form(Q, d, Q.unit(i)) - e_twist2(Q, Q.unit(i)) - e_twist2(Q, Q.unit(Q.sigma_node[i]));
}

namespace {

void set_signs(Quiver& Q, Duality kind, int q) {
  Q.duality = kind;
  Q.q = q;
  Q.s.assign(Q.num_nodes(), kind == Duality::Symplectic ? -1 : 1);
  for (auto& a : Q.arrows) a.tau = -1;
}

}  // namespace

Quiver single_node(Duality kind, int q) {
  Quiver Q;
  Q.node_ids = {"1"};
  Q.sigma_node = {0};
  set_signs(Q, kind, q);
  return Q;
}

Quiver jordan(Duality kind, int q) {
  Quiver Q;
  Q.node_ids = {"1"};
  Q.sigma_node = {0};
  Q.arrows = {Arrow{"a", 0, 0, -1}};
  Q.sigma_arrow = {0};
  set_signs(Q, kind, q);
  return Q;
}

Quiver type_a(int n, Duality kind, int q, const std::vector<bool>& toward_center, bool middle_reversed) {
  if (n < 1) throw ContractViolation("type A needs at least one node");
  Quiver Q;
  int m = n / 2;
  std::vector<int> pos;
  for (int p = -m; p <= m; ++p)
    if (p != 0 || n % 2 == 1) pos.push_back(p);
  for (int p : pos) Q.node_ids.push_back(std::to_string(p));
  auto idx = [&](int p) {
    for (int i = 0; i < n; ++i)
      if (pos[i] == p) return i;
    return -1;
  };
  for (int i = 0; i < n; ++i) Q.sigma_node.push_back(idx(-pos[i]));
  // Arrows between consecutive positions, listed left to right.
  std::vector<int> outward_rank(n - 1);
  for (int k = 0; k + 1 < n; ++k) {
    int a = pos[k], b = pos[k + 1];
    Arrow ar;
    ar.id = "a" + std::to_string(k);
    if (a < 0 && b > 0) {
      ar.tail = middle_reversed ? idx(b) : idx(a);
      ar.head = middle_reversed ? idx(a) : idx(b);
    } else {
      // r counts edges outward from the middle on the side of this edge.
      int outer = std::abs(a) > std::abs(b) ? a : b, inner = outer == a ? b : a;
      int r = n % 2 == 1 ? std::abs(outer) - 1 : std::abs(outer) - 2;
      bool toward = r < static_cast<int>(toward_center.size()) && toward_center[r];
      ar.tail = toward ? idx(outer) : idx(inner);
      ar.head = toward ? idx(inner) : idx(outer);
      // The vector orientation points left to right on both sides.
      if (outer < 0) std::swap(ar.tail, ar.head);
    }
    Q.arrows.push_back(ar);
  }
  for (int k = 0; k + 1 < n; ++k) Q.sigma_arrow.push_back(n - 2 - k);
  set_signs(Q, kind, q);
  return Q;
}

std::vector<Quiver> type_a_orientations(int n, Duality kind, int q) {
  int side = n % 2 == 1 ? n / 2 : n / 2 - 1;
  std::vector<Quiver> out;
  for (int mid = 0; mid < (n % 2 == 0 ? 2 : 1); ++mid)
    for (int mask = 0; mask < (1 << side); ++mask) {
      std::vector<bool> tc(side);
      for (int r = 0; r < side; ++r) tc[r] = (mask >> r) & 1;
      out.push_back(type_a(n, kind, q, tc, mid == 1));
    }
  return out;
}

Quiver disjoint_double(const Quiver& base, Duality kind) {
  Quiver Q;
  int n = base.num_nodes(), m = base.num_arrows();
  for (const auto& id : base.node_ids) Q.node_ids.push_back(id);
  for (const auto& id : base.node_ids) Q.node_ids.push_back(id + "'");
  for (const auto& a : base.arrows) Q.arrows.push_back(Arrow{a.id, a.tail, a.head, -1});
  for (const auto& a : base.arrows) Q.arrows.push_back(Arrow{a.id + "'", a.head + n, a.tail + n, -1});
  for (int i = 0; i < 2 * n; ++i) Q.sigma_node.push_back(i < n ? i + n : i - n);
  for (int a = 0; a < 2 * m; ++a) Q.sigma_arrow.push_back(a < m ? a + m : a - m);
  set_signs(Q, kind, base.q);
  return Q;
}

std::vector<int> type_a_positions(const Quiver& Q) {
  std::vector<int> pos;
  for (const auto& id : Q.node_ids) {
    try {
      std::size_t used = 0;
      int p = std::stoi(id, &used);
      if (used != id.size()) return {};
      pos.push_back(p);
    } catch (const std::exception&) {
      return {};
    }
  }
  for (int i = 0; i < Q.num_nodes(); ++i) {
    int j = Q.sigma_node[i];
    if (pos[j] != -pos[i]) return {};
    if (i > 0 && pos[i] <= pos[i - 1]) return {};
  }
  for (const auto& a : Q.arrows) {
    int lo = std::min(pos[a.tail], pos[a.head]), hi = std::max(pos[a.tail], pos[a.head]);
    bool consecutive = hi - lo == 1 || (lo == -1 && hi == 1 && Q.node_index("0") < 0);
    if (!consecutive) return {};
  }
  if (Q.num_arrows() + 1 != Q.num_nodes()) return {};
  return pos;
}

}  // namespace hallmod
