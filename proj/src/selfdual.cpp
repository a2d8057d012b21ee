#include "hallmod/selfdual.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace hallmod {

namespace {

std::vector<Elt> row_vec(const Mat& R, int r) {
  return std::vector<Elt>(R.e.begin() + r * R.cols, R.e.begin() + (r + 1) * R.cols);
}

// v^T P iota(w)
Elt form_value(const Field& F, const Mat& P, const std::vector<Elt>& v, const std::vector<Elt>& w, bool iota) {
  Elt acc = 0;
  for (int i = 0; i < P.rows; ++i) {
    if (v[i] == 0) continue;
    Elt inner = 0;
    for (int j = 0; j < P.cols; ++j) inner = F.add(inner, F.mul(P(i, j), F.conj(w[j], iota)));
    acc = F.add(acc, F.mul(v[i], inner));
  }
  return acc;
}

Mat scalar_mat(const Field& F, int n, Elt c) { return mat_scale(F, c, identity(n)); }

// Matrix map required on sigma(a) by the map on a.
Mat partner_map(const Field& F, const Quiver& Q, const std::vector<Mat>& P, int k, const Mat& m) {
  const Arrow& a = Q.arrows[k];
  Mat x = mat_mul(F, mat_mul(F, inverse(F, P[a.tail]), transpose(m)), P[a.head]);
  return conj(F, mat_scale(F, F.from_int(a.tau), x), Q.iota());
}

bool next_vector(const Field& F, std::vector<Elt>& c) {
  for (std::size_t b = c.size(); b-- > 0;) {
    if (++c[b] < F.q()) return true;
    c[b] = 0;
  }
  return false;
}

std::vector<Elt> combine(const Field& F, const std::vector<Elt>& c, const std::vector<std::vector<Elt>>& basis, int n) {
  std::vector<Elt> v(n, 0);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j])
      for (int x = 0; x < n; ++x) v[x] = F.add(v[x], F.mul(c[j], basis[j][x]));
  return v;
}

// Basis of {w in span(W) : B(w, v) = 0 for all v in vs}.
std::vector<std::vector<Elt>> perp_within(const Field& F, const Mat& P, bool iota, const std::vector<std::vector<Elt>>& W,
                                          const std::vector<std::vector<Elt>>& vs) {
  int n = P.rows;
  Mat A(static_cast<int>(vs.size()), static_cast<int>(W.size()));
  for (std::size_t r = 0; r < vs.size(); ++r)
    for (std::size_t j = 0; j < W.size(); ++j) A(r, j) = form_value(F, P, W[j], vs[r], iota);
  Mat K = kernel(F, A);
  std::vector<std::vector<Elt>> out;
  for (int r = 0; r < K.rows; ++r) out.push_back(combine(F, row_vec(K, r), W, n));
  return out;
}

int eta_minus_one(const Field& F) { return F.quad_character(F.neg(1)); }

std::uint64_t encode_slots(const std::vector<std::uint64_t>& radix, const std::vector<std::uint64_t>& digits) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < radix.size(); ++i) code = code * radix[i] + digits[i];
  return code;
}

}  // namespace

std::vector<std::string> selfdual_violations(const Field& F, const Quiver& Q, const SelfDualRep& N) {
  std::vector<std::string> out;
  const auto& R = N.rep;
  if (!is_valid_rep(Q, R)) return {"malformed representation"};
  if (static_cast<int>(N.psi.size()) != Q.num_nodes()) return {"wrong number of forms"};
  bool iota = Q.iota();
  for (int i = 0; i < Q.num_nodes(); ++i) {
    int j = Q.sigma_node[i];
    const Mat& P = N.psi[i];
    if (P.rows != R.dim[i] || P.cols != R.dim[j]) {
      out.push_back("form at node " + Q.node_ids[i] + " has the wrong shape");
      return out;
    }
  }
  for (int i = 0; i < Q.num_nodes(); ++i) {
    int j = Q.sigma_node[i];
    const Mat& P = N.psi[i];
    if (P.rows != P.cols || rank(F, P) != P.rows) out.push_back("form at node " + Q.node_ids[i] + " is degenerate");
    Mat want = mat_scale(F, F.from_int(Q.s[i]), transpose(conj(F, N.psi[j], iota)));
    if (P != want) out.push_back("form at node " + Q.node_ids[i] + " fails the symmetry condition");
  }
  if (!out.empty()) return out;
  for (int k = 0; k < Q.num_arrows(); ++k) {
    int sk = Q.sigma_arrow[k];
    if (partner_map(F, Q, N.psi, k, R.maps[k]) != R.maps[sk])
      out.push_back("arrow " + Q.arrows[k].id + " is not compatible with the form");
  }
  return out;
}

bool is_selfdual(const Field& F, const Quiver& Q, const SelfDualRep& N) { return selfdual_violations(F, Q, N).empty(); }

std::string selfdual_to_string(const Field& F, const Quiver& Q, const SelfDualRep& N) {
  std::string s = rep_to_string(F, Q, N.rep);
  for (int i = 0; i < Q.num_nodes(); ++i) s += ";psi" + Q.node_ids[i] + ":" + mat_to_string(F, N.psi[i]);
  return s;
}

Representation dual_rep(const Field& F, const Quiver& Q, const Representation& U) {
  Representation D = zero_rep(Q, Q.sigma_dim(U.dim));
  for (int k = 0; k < Q.num_arrows(); ++k) {
    int sk = Q.sigma_arrow[k];
    Mat m = transpose(conj(F, U.maps[sk], Q.iota()));
    D.maps[k] = mat_scale(F, F.from_int(Q.arrows[k].tau), m);
  }
  return D;
}

SelfDualRep hyperbolic(const Field& F, const Quiver& Q, const Representation& U) {
  SelfDualRep H;
  H.rep = direct_sum(Q, U, dual_rep(F, Q, U));
  for (int i = 0; i < Q.num_nodes(); ++i) {
    int j = Q.sigma_node[i];
    int a = U.dim[i], b = U.dim[j];
    // H_i = U_i + U_sigma(i)^*, H_sigma(i) = U_sigma(i) + U_i^*.
    Mat P(a + b, b + a);
    Elt s = F.from_int(Q.s[i]);
    for (int x = 0; x < a; ++x) P(x, b + x) = s;
    for (int x = 0; x < b; ++x) P(a + x, x) = 1;
    H.psi.push_back(P);
  }
  return H;
}

SelfDualRep orthogonal_sum(const Quiver& Q, const SelfDualRep& a, const SelfDualRep& b) {
  SelfDualRep S;
  S.rep = direct_sum(Q, a.rep, b.rep);
  for (int i = 0; i < Q.num_nodes(); ++i) {
    const Mat &x = a.psi[i], &y = b.psi[i];
    Mat P(x.rows + y.rows, x.cols + y.cols);
    for (int r = 0; r < x.rows; ++r)
      for (int c = 0; c < x.cols; ++c) P(r, c) = x(r, c);
    for (int r = 0; r < y.rows; ++r)
      for (int c = 0; c < y.cols; ++c) P(x.rows + r, x.cols + c) = y(r, c);
    S.psi.push_back(P);
  }
  return S;
}

SelfDualRep zero_selfdual(const Quiver& Q) {
  SelfDualRep Z;
  Z.rep = zero_rep(Q, DimVec(Q.num_nodes(), 0));
  Z.psi.assign(Q.num_nodes(), Mat());
  return Z;
}

int witt_code(const Field& F, const Mat& P, bool hermitian) {
  int n = P.rows;
  int parity = n % 2;
  if (hermitian) return parity;
  Elt d = det(F, P);
  if ((n * (n - 1) / 2) % 2) d = F.neg(d);
  return parity + (n > 0 && F.quad_character(d) == -1 ? 2 : 0);
}

int witt_add(const Field& F, int a, int b, bool hermitian) {
  if (hermitian) return a ^ b;
  int p1 = a & 1, p2 = b & 1;
  int d1 = (a & 2) ? -1 : 1, d2 = (b & 2) ? -1 : 1;
  int d = d1 * d2 * ((p1 & p2) ? eta_minus_one(F) : 1);
  return (p1 ^ p2) + (d == -1 ? 2 : 0);
}

int witt_group_size(const Field&, bool hermitian) { return hermitian ? 2 : 4; }

std::string witt_to_string(int code, bool hermitian) {
  if (hermitian) return std::to_string(code);
  return std::to_string(code & 1) + ((code & 2) ? "-" : "+");
}

std::string gw_to_string(const GWClass& g) {
  std::string s = dim_to_string(g.dim);
  if (!g.witt.empty()) {
    s += "w";
    for (std::size_t i = 0; i < g.witt.size(); ++i) s += (i ? "," : "") + std::to_string(g.witt[i]);
  }
  return s;
}

GWClass gw_class(const Field& F, const Quiver& Q, const SelfDualRep& N) {
  GWClass g{N.rep.dim, {}};
  for (int i : Q.decorated_nodes()) g.witt.push_back(witt_code(F, N.psi[i], Q.iota()));
  return g;
}

GWClass gw_add(const Field& F, const Quiver& Q, const GWClass& a, const GWClass& b) {
  GWClass g{dim_add(a.dim, b.dim), {}};
  for (std::size_t k = 0; k < a.witt.size(); ++k) g.witt.push_back(witt_add(F, a.witt[k], b.witt[k], Q.iota()));
  return g;
}

GWClass gw_hyperbolic(const Quiver& Q, const DimVec& d) {
  return GWClass{Q.hyperbolic_dim(d), std::vector<int>(Q.decorated_nodes().size(), 0)};
}

Mat normal_form(const Field& F, int n, int s, bool iota, int code) {
  if (iota) {
    if (s == 1) return identity(n);
    return scalar_mat(F, n, F.generator_x());
  }
  if (s == -1) {
    if (n % 2) throw ContractViolation("symplectic form of odd dimension");
    Mat J(n, n);
    for (int k = 0; k < n; k += 2) {
      J(k, k + 1) = 1;
      J(k + 1, k) = F.neg(1);
    }
    return J;
  }
  if ((code & 1) != n % 2 || (n == 0 && code != 0)) throw ContractViolation("Witt code does not match the dimension");
  Mat D = identity(n);
  if (n == 0) return D;
  int sign = (n * (n - 1) / 2) % 2 ? eta_minus_one(F) : 1;
  int want = (code & 2) ? -1 : 1;
  if (sign != want) D(n - 1, n - 1) = F.least_nonsquare();
  return D;
}

Mat to_normal_basis(const Field& F, const Mat& P, int s, bool iota) {
  int n = P.rows;
  int code = (s == 1) ? witt_code(F, P, iota) : 0;
  Mat N = normal_form(F, n, s, iota, code);
  std::vector<std::vector<Elt>> W;
  for (int i = 0; i < n; ++i) {
    std::vector<Elt> e(n, 0);
    e[i] = 1;
    W.push_back(e);
  }
  Mat g(n, n);
  auto set_col = [&](int k, const std::vector<Elt>& v) {
    for (int x = 0; x < n; ++x) g(x, k) = v[x];
  };
  if (s == -1 && !iota) {
    for (int k = 0; k < n; k += 2) {
      std::vector<Elt> v = W[0], w;
      for (const auto& cand : W) {
        Elt b = form_value(F, P, v, cand, iota);
        if (b) {
          w = cand;
          for (Elt& x : w) x = F.mul(x, F.inv(b));
          break;
        }
      }
      if (w.empty()) throw ContractViolation("degenerate form");
      set_col(k, v);
      set_col(k + 1, w);
      W = perp_within(F, P, iota, W, {v, w});
    }
  } else {
    for (int k = 0; k < n; ++k) {
      Elt target = N(k, k);
      std::vector<Elt> c(W.size(), 0), found;
      while (next_vector(F, c)) {
        auto v = combine(F, c, W, n);
        if (form_value(F, P, v, v, iota) == target) {
          found = v;
          break;
        }
      }
      if (found.empty()) throw ContractViolation("form has no vector of the required length");
      set_col(k, found);
      W = perp_within(F, P, iota, W, {found});
    }
  }
  if (mat_mul(F, mat_mul(F, transpose(g), P), conj(F, g, iota)) != N)
    throw std::logic_error("normal form reduction failed");
  return g;
}

mpz_class isometry_group_order(const Field& F, int n, int s, bool iota, int code) {
  auto pw = [](long b, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), b, e);
    return r;
  };
  if (iota) {
    long q0 = F.p();
    mpz_class r = pw(q0, static_cast<long>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) r *= pw(q0, i) - (i % 2 ? -1 : 1);
    return r;
  }
  long q = F.q();
  if (s == -1) {
    int m = n / 2;
    mpz_class r = pw(q, static_cast<long>(m) * m);
    for (int i = 1; i <= m; ++i) r *= pw(q, 2 * i) - 1;
    return r;
  }
  if (n == 0) return 1;
  int m = n / 2;
  if (n % 2) {
    mpz_class r = 2 * pw(q, static_cast<long>(m) * m);
    for (int i = 1; i <= m; ++i) r *= pw(q, 2 * i) - 1;
    return r;
  }
  bool plus = (code & 2) == 0;
  mpz_class r = 2 * pw(q, static_cast<long>(m) * (m - 1)) * (plus ? mpz_class(pw(q, m) - 1) : mpz_class(pw(q, m) + 1));
  for (int i = 1; i < m; ++i) r *= pw(q, 2 * i) - 1;
  return r;
}

std::vector<Mat> isometries_bruteforce(const Field& F, const Mat& P, bool iota, const Budget& budget) {
  int n = P.rows;
  std::vector<Mat> out;
  std::vector<std::vector<Elt>> cols(n);
  std::uint64_t visited = 0;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      Mat g(n, n);
      for (int j = 0; j < n; ++j)
        for (int x = 0; x < n; ++x) g(x, j) = cols[j][x];
      out.push_back(g);
      check_budget("isometries", out.size(), budget.group_elements);
      return;
    }
    std::vector<Elt> v(n, 0);
    do {
      check_budget("isometry search nodes", ++visited, budget.tuples);
      bool ok = form_value(F, P, v, v, iota) == P(k, k);
      for (int j = 0; ok && j < k; ++j)
        ok = form_value(F, P, cols[j], v, iota) == P(j, k) && form_value(F, P, v, cols[j], iota) == P(k, j);
      if (ok) {
        cols[k] = v;
        rec(k + 1);
      }
    } while (next_vector(F, v));
  };
  rec(0);
  return out;
}

std::vector<Mat> isometry_generators(const Field& F, const Mat& P, int s, bool iota, const Budget& budget) {
  int n = P.rows;
  if (n == 0) return {};
  int code = s == 1 ? witt_code(F, P, iota) : 0;
  mpz_class order = isometry_group_order(F, n, s, iota, code);
  if (order > mpz_class(std::to_string(budget.group_elements)))
    throw BudgetExceeded("isometry group elements", order.fits_ulong_p() ? order.get_ui() : UINT64_MAX);
  std::vector<Mat> all = isometries_bruteforce(F, P, iota, budget);
  if (mpz_class(std::to_string(all.size())) != order) throw std::logic_error("isometry group order mismatch");
  // Greedy generating set: add any element outside the subgroup generated so far.
  std::vector<Mat> gens;
  std::set<Mat> H{identity(n)};
  for (const Mat& g : all) {
    if (H.count(g)) continue;
    gens.push_back(g);
    std::deque<Mat> queue(H.begin(), H.end());
    while (!queue.empty()) {
      Mat h = queue.front();
      queue.pop_front();
      for (const Mat& x : gens) {
        Mat y = mat_mul(F, h, x);
        if (H.insert(y).second) queue.push_back(y);
      }
    }
  }
  return gens;
}

void for_each_isotropic_sub(const Field& F, const Quiver& Q, const SelfDualRep& N, const DimVec& u,
                            const std::function<bool(const SubspaceTuple&)>& visit) {
  bool iota = Q.iota();
  auto extra = [&](int i, const Mat& R, int r, const SubspaceTuple& chosen) {
    int j = Q.sigma_node[i];
    auto w = row_vec(R, r);
    if (j < i) {
      const Mat& Uj = chosen[j];
      for (int x = 0; x < Uj.rows; ++x)
        if (form_value(F, N.psi[j], row_vec(Uj, x), w, iota) != 0) return false;
    } else if (j == i) {
      for (int x = 0; x <= r; ++x)
        if (form_value(F, N.psi[i], row_vec(R, x), w, iota) != 0) return false;
    }
    return true;
  };
  for_each_subrep(F, Q, N.rep, u, extra, visit);
}

bool is_isotropic(const Field& F, const Quiver& Q, const SelfDualRep& N, const SubspaceTuple& U) {
  for (int i = 0; i < Q.num_nodes(); ++i) {
    int j = Q.sigma_node[i];
    for (int x = 0; x < U[i].rows; ++x)
      for (int y = 0; y < U[j].rows; ++y)
        if (form_value(F, N.psi[i], row_vec(U[i], x), row_vec(U[j], y), Q.iota()) != 0) return false;
  }
  return true;
}

SelfDualRep reduce(const Field& F, const Quiver& Q, const SelfDualRep& N, const SubspaceTuple& U) {
  if (!is_isotropic(F, Q, N, U)) throw ContractViolation("subrepresentation is not isotropic");
  int n = Q.num_nodes();
  bool iota = Q.iota();
  std::vector<Mat> C(n);
  for (int i = 0; i < n; ++i) {
    int j = Q.sigma_node[i];
    // U-perp at i: vectors w with <u, w> = 0 for u in U_sigma(i), i.e. iota(U_j P_j) w = 0.
    Mat perp = U[j].rows ? kernel(F, conj(F, mat_mul(F, U[j], N.psi[j]), iota)) : identity(N.rep.dim[i]);
    Mat cur = U[i];
    int rk = rank(F, cur);
    Mat comp(0, N.rep.dim[i]);
    for (int r = 0; r < perp.rows; ++r) {
      Mat trial = vstack(cur, row(perp, r));
      int t = rank(F, trial);
      if (t > rk) {
        cur = trial;
        rk = t;
        comp = vstack(comp, row(perp, r));
      }
    }
    C[i] = comp;
  }
  SelfDualRep M;
  DimVec d(n);
  for (int i = 0; i < n; ++i) d[i] = C[i].rows;
  M.rep = zero_rep(Q, d);
  for (int i = 0; i < n; ++i) {
    int j = Q.sigma_node[i];
    M.psi.push_back(mat_mul(F, mat_mul(F, C[i], N.psi[i]), transpose(conj(F, C[j], iota))));
  }
  for (int k = 0; k < Q.num_arrows(); ++k) {
    const Arrow& a = Q.arrows[k];
    Mat basis = transpose(vstack(U[a.head], C[a.head]));
    int off = U[a.head].rows;
    for (int c = 0; c < d[a.tail]; ++c) {
      auto y = mat_vec(F, N.rep.maps[k], row_vec(C[a.tail], c));
      auto coords = solve(F, basis, y);
      if (!coords) throw std::logic_error("U-perp is not a subrepresentation");
      for (int r = 0; r < d[a.head]; ++r) M.rep.maps[k](r, c) = (*coords)[off + r];
    }
  }
  return M;
}

bool is_isometry(const Field& F, const Quiver& Q, const SelfDualRep& M, const SelfDualRep& N, const Morphism& f) {
  if (!is_morphism(F, Q, M.rep, N.rep, f) || !is_isomorphism(F, f)) return false;
  for (int i = 0; i < Q.num_nodes(); ++i) {
    int j = Q.sigma_node[i];
    if (mat_mul(F, mat_mul(F, transpose(f[i]), N.psi[i]), conj(F, f[j], Q.iota())) != M.psi[i]) return false;
  }
  return true;
}

namespace {

// Calls visit on every element of Hom(M, N); stops when visit returns false.
void for_each_hom(const Field& F, const Quiver& Q, const Representation& M, const Representation& N,
                  const Budget& budget, const std::function<bool(const Morphism&)>& visit) {
  auto basis = hom_basis(F, Q, M, N);
  check_budget("morphisms", sat_pow(F.q(), basis.size()), budget.group_elements);
  std::vector<Elt> c(basis.size(), 0);
  do {
    Morphism f;
    for (int i = 0; i < Q.num_nodes(); ++i) f.emplace_back(N.dim[i], M.dim[i]);
    for (std::size_t b = 0; b < c.size(); ++b)
      if (c[b])
        for (int i = 0; i < Q.num_nodes(); ++i) f[i] = mat_add(F, f[i], mat_scale(F, c[b], basis[b][i]));
    if (!visit(f)) return;
  } while (next_vector(F, c));
}

}  // namespace

bool isometric_bruteforce(const Field& F, const Quiver& Q, const SelfDualRep& M, const SelfDualRep& N,
                          const Budget& budget) {
  if (M.rep.dim != N.rep.dim) return false;
  bool found = false;
  for_each_hom(F, Q, M.rep, N.rep, budget, [&](const Morphism& f) {
    found = is_isometry(F, Q, M, N, f);
    return !found;
  });
  return found;
}

mpz_class aut_s_count_bruteforce(const Field& F, const Quiver& Q, const SelfDualRep& M, const Budget& budget) {
  mpz_class count = 0;
  for_each_hom(F, Q, M.rep, M.rep, budget, [&](const Morphism& f) {
    if (is_isometry(F, Q, M, M, f)) ++count;
    return true;
  });
  return count;
}

std::string key_to_string(const SDKey& k) { return gw_to_string(k.gw) + "#" + std::to_string(k.index); }

SDCatalog::SDCatalog(RepCatalog& reps) : reps_(reps) {}

std::vector<GWClass> SDCatalog::gw_classes(const DimVec& d) {
  const Quiver& Q = quiver();
  if (!Q.is_symmetric(d)) return {};
  for (int i = 0; i < Q.num_nodes(); ++i)
    if (Q.sigma_node[i] == i && Q.s[i] == -1 && !Q.iota() && d[i] % 2) return {};
  std::vector<GWClass> out{GWClass{d, {}}};
  for (int i : Q.decorated_nodes()) {
    std::vector<int> codes;
    if (Q.iota() || d[i] == 0)
      codes = {d[i] % 2};
    else
      codes = {d[i] % 2, d[i] % 2 + 2};
    std::vector<GWClass> next;
    for (const auto& g : out)
      for (int c : codes) {
        GWClass h = g;
        h.witt.push_back(c);
        next.push_back(h);
      }
    out = next;
  }
  return out;
}

void SDCatalog::fill_dependent(const GWData& gd, Representation& R) const {
  const Quiver& Q = quiver();
  for (int k : gd.free_arrows) R.maps[Q.sigma_arrow[k]] = partner_map(field(), Q, gd.P, k, R.maps[k]);
}

std::uint64_t SDCatalog::encode(const GWData& gd, const Representation& R) const {
  std::vector<std::uint64_t> digits;
  for (int k = 0; k < quiver().num_arrows(); ++k) {
    auto f = std::find(gd.free_arrows.begin(), gd.free_arrows.end(), k);
    if (f != gd.free_arrows.end()) {
      for (Elt e : R.maps[k].e) digits.push_back(e);
      continue;
    }
    auto x = std::find(gd.fixed_arrows.begin(), gd.fixed_arrows.end(), k);
    if (x != gd.fixed_arrows.end()) {
      const auto& list = gd.valid[x - gd.fixed_arrows.begin()];
      auto it = std::lower_bound(list.begin(), list.end(), R.maps[k]);
      if (it == list.end() || *it != R.maps[k]) throw std::logic_error("map outside the compatible set");
      digits.push_back(static_cast<std::uint64_t>(it - list.begin()));
    }
  }
  return encode_slots(gd.radix, digits);
}

SelfDualRep SDCatalog::decode(const GWClass& g, const GWData& gd, std::uint64_t code) const {
  const Quiver& Q = quiver();
  std::vector<std::uint64_t> digits(gd.radix.size());
  for (std::size_t i = gd.radix.size(); i-- > 0;) {
    digits[i] = code % gd.radix[i];
    code /= gd.radix[i];
  }
  SelfDualRep N;
  N.rep = zero_rep(Q, g.dim);
  N.psi = gd.P;
  std::size_t pos = 0;
  for (int k = 0; k < Q.num_arrows(); ++k) {
    auto f = std::find(gd.free_arrows.begin(), gd.free_arrows.end(), k);
    if (f != gd.free_arrows.end()) {
      for (Elt& e : N.rep.maps[k].e) e = static_cast<Elt>(digits[pos++]);
      continue;
    }
    auto x = std::find(gd.fixed_arrows.begin(), gd.fixed_arrows.end(), k);
    if (x != gd.fixed_arrows.end()) N.rep.maps[k] = gd.valid[x - gd.fixed_arrows.begin()][digits[pos++]];
  }
  fill_dependent(gd, N.rep);
  return N;
}

SDCatalog::GWData& SDCatalog::data(const GWClass& g) {
  auto it = data_.find(g);
  if (it != data_.end()) return *it->second;
  auto valid_gw = gw_classes(g.dim);
  if (std::find(valid_gw.begin(), valid_gw.end(), g) == valid_gw.end())
    throw ContractViolation("no self-dual objects in class " + gw_to_string(g));
  const Quiver& Q = quiver();
  const Field& F = field();
  const Budget& budget = reps_.budget();
  bool iota = Q.iota();
  int n = Q.num_nodes();
  const DimVec& d = g.dim;
  auto gd = std::make_unique<GWData>();

  auto decorated = Q.decorated_nodes();
  gd->P.resize(n);
  for (int i = 0; i < n; ++i) {
    int j = Q.sigma_node[i];
    if (i < j) {
      gd->P[i] = identity(d[i]);
      gd->P[j] = scalar_mat(F, d[i], F.from_int(Q.s[i]));
    } else if (i == j) {
      auto pos = std::find(decorated.begin(), decorated.end(), i);
      int code = pos == decorated.end() ? 0 : g.witt[pos - decorated.begin()];
      gd->P[i] = normal_form(F, d[i], Q.s[i], iota, code);
    }
  }

  std::uint64_t total = 1;
  for (int k = 0; k < Q.num_arrows(); ++k) {
    const Arrow& a = Q.arrows[k];
    int sk = Q.sigma_arrow[k];
    int entries = d[a.head] * d[a.tail];
    if (sk > k) {
      gd->free_arrows.push_back(k);
      for (int e = 0; e < entries; ++e) gd->radix.push_back(F.q());
      total = sat_mul(total, sat_pow(F.q(), entries));
    } else if (sk == k) {
      check_budget("matrices on a fixed arrow", sat_pow(F.q(), entries), budget.tuples);
      std::vector<Mat> list;
      Mat m(d[a.head], d[a.tail]);
      std::vector<Elt> c(entries, 0);
      do {
        m.e = c;
        if (partner_map(F, Q, gd->P, k, m) == m) list.push_back(m);
      } while (next_vector(F, c));
      std::sort(list.begin(), list.end());
      gd->fixed_arrows.push_back(k);
      gd->radix.push_back(list.size());
      total = sat_mul(total, list.size());
      gd->valid.push_back(std::move(list));
    }
  }
  check_budget("self-dual tuples in class " + gw_to_string(g), total, budget.tuples);

  mpz_class group = 1;
  for (int i = 0; i < n; ++i) {
    int j = Q.sigma_node[i];
    if (i < j) group *= gl_order_exact(F.q(), d[i]);
    if (i == j) {
      auto pos = std::find(decorated.begin(), decorated.end(), i);
      int code = pos == decorated.end() ? 0 : g.witt[pos - decorated.begin()];
      group *= isometry_group_order(F, d[i], Q.s[i], iota, code);
    }
  }

  // Generators as pairs (g, g^-1) of node tuples.
  std::vector<std::pair<Morphism, Morphism>> gens;
  if (total > 1) {
    auto tuple_with = [&](std::vector<std::pair<int, Mat>> parts) {
      Morphism t;
      for (int i = 0; i < n; ++i) t.push_back(identity(d[i]));
      for (auto& [i, m] : parts) t[i] = m;
      return t;
    };
    for (int i = 0; i < n; ++i) {
      int j = Q.sigma_node[i];
      if (d[i] == 0) continue;
      if (i < j) {
        for (const Mat& x : gl_generators(F, d[i])) {
          Mat xi = inverse(F, x);
          Mat y = conj(F, transpose(xi), iota), yi = conj(F, transpose(x), iota);
          gens.emplace_back(tuple_with({{i, x}, {j, y}}), tuple_with({{i, xi}, {j, yi}}));
        }
      } else if (i == j) {
        for (const Mat& x : isometry_generators(F, gd->P[i], Q.s[i], iota, budget))
          gens.emplace_back(tuple_with({{i, x}}), tuple_with({{i, inverse(F, x)}}));
      }
    }
  }

  gd->table.assign(total, -1);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (gd->table[start] >= 0) continue;
    int id = static_cast<int>(gd->classes.size());
    gd->table[start] = id;
    queue.push_back(start);
    std::uint64_t size = 0;
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop_front();
      ++size;
      SelfDualRep N = decode(g, *gd, cur);
      for (const auto& [x, xi] : gens) {
        Representation S = N.rep;
        for (int k = 0; k < Q.num_arrows(); ++k) {
          const Arrow& a = Q.arrows[k];
          S.maps[k] = mat_mul(F, mat_mul(F, x[a.head], S.maps[k]), xi[a.tail]);
        }
        std::uint64_t code = encode(*gd, S);
        if (gd->table[code] < 0) {
          gd->table[code] = id;
          queue.push_back(code);
        }
      }
    }
    SDClass c;
    c.rep = decode(g, *gd, start);
    c.orbit_size = size;
    c.aut = group / mpz_class(std::to_string(size));
    gd->classes.push_back(std::move(c));
  }
  auto& ref = *gd;
  data_.emplace(g, std::move(gd));
  return ref;
}

const std::vector<SDClass>& SDCatalog::classes(const GWClass& g) { return data(g).classes; }

std::vector<SDKey> SDCatalog::keys(const GWClass& g) {
  std::vector<SDKey> out;
  for (int k = 0; k < static_cast<int>(classes(g).size()); ++k) out.push_back(SDKey{g, k});
  return out;
}

std::vector<SDKey> SDCatalog::keys(const DimVec& d) {
  std::vector<SDKey> out;
  for (const auto& g : gw_classes(d))
    for (const auto& k : keys(g)) out.push_back(k);
  return out;
}

std::vector<SDKey> SDCatalog::keys_below(const DimVec& bound) {
  std::vector<SDKey> out;
  for (const DimVec& d : dims_below(bound))
    for (const auto& k : keys(d)) out.push_back(k);
  return out;
}

SelfDualRep SDCatalog::normalize(const SelfDualRep& N, const GWClass& g) {
  const Quiver& Q = quiver();
  const Field& F = field();
  bool iota = Q.iota();
  int n = Q.num_nodes();
  std::vector<Mat> h(n), hinv(n);
  for (int i = 0; i < n; ++i) {
    int j = Q.sigma_node[i];
    if (i < j) {
      h[i] = identity(N.rep.dim[i]);
      h[j] = conj(F, inverse(F, N.psi[i]), iota);
    } else if (i == j) {
      h[i] = to_normal_basis(F, N.psi[i], Q.s[i], iota);
    }
  }
  for (int i = 0; i < n; ++i) hinv[i] = inverse(F, h[i]);
  SelfDualRep out;
  out.rep = N.rep;
  for (int k = 0; k < Q.num_arrows(); ++k) {
    const Arrow& a = Q.arrows[k];
    out.rep.maps[k] = mat_mul(F, mat_mul(F, hinv[a.head], N.rep.maps[k]), h[a.tail]);
  }
  for (int i = 0; i < n; ++i) {
    int j = Q.sigma_node[i];
    out.psi.push_back(mat_mul(F, mat_mul(F, transpose(h[i]), N.psi[i]), conj(F, h[j], iota)));
  }
  if (out.psi != data(g).P) throw std::logic_error("normalization did not reach the normal form");
  return out;
}

SDKey SDCatalog::classify(const SelfDualRep& N) {
  auto v = selfdual_violations(field(), quiver(), N);
  if (!v.empty()) throw ContractViolation("not a self-dual representation: " + v.front());
  GWClass g = gw_class(field(), quiver(), N);
  GWData& gd = data(g);
  SelfDualRep M = normalize(N, g);
  return SDKey{g, gd.table[encode(gd, M.rep)]};
}

const SelfDualRep& SDCatalog::rep(const SDKey& k) { return data(k.gw).classes.at(k.index).rep; }

const mpz_class& SDCatalog::aut(const SDKey& k) { return data(k.gw).classes.at(k.index).aut; }

SDKey SDCatalog::zero_key() {
  return SDKey{GWClass{DimVec(quiver().num_nodes(), 0), std::vector<int>(quiver().decorated_nodes().size(), 0)}, 0};
}

bool SDCatalog::isometric(const SelfDualRep& M, const SelfDualRep& N) {
  if (M.rep.dim != N.rep.dim) return false;
  return classify(M) == classify(N);
}

std::vector<SDKey> SDCatalog::structures_on(const Representation& U) {
  RepKey target = reps_.classify(U);
  std::vector<SDKey> out;
  for (const auto& g : gw_classes(U.dim))
    for (const auto& k : keys(g))
      if (reps_.classify(rep(k).rep) == target) out.push_back(k);
  return out;
}

const SDTally& SDCatalog::sd_tally(const SDKey& N, const DimVec& u) {
  auto key = std::make_pair(N, u);
  auto it = tallies_.find(key);
  if (it != tallies_.end()) return it->second;
  const Quiver& Q = quiver();
  const Field& F = field();
  std::uint64_t candidates = 1;
  for (int i = 0; i < Q.num_nodes(); ++i) {
    if (u[i] > N.gw.dim[i]) return tallies_.emplace(key, SDTally{}).first->second;
    candidates = sat_mul(candidates, count_subspaces(F.q(), N.gw.dim[i], u[i]));
  }
  check_budget("isotropic subspace tuples in " + key_to_string(N), candidates, reps_.budget().tuples);
  SDTally t;
  SelfDualRep NR = rep(N);
  for_each_isotropic_sub(F, Q, NR, u, [&](const SubspaceTuple& U) {
    RepKey sub = reps_.classify(restrict_to_sub(F, Q, NR.rep, U));
    SDKey red = classify(reduce(F, Q, NR, U));
    ++t[{sub, red}];
    return true;
  });
  return tallies_.emplace(key, std::move(t)).first->second;
}

std::uint64_t SDCatalog::sd_hall_number(const RepKey& U, const SDKey& M, const SDKey& N) {
  if (dim_add(M.gw.dim, quiver().hyperbolic_dim(U.dim)) != N.gw.dim) return 0;
  const SDTally& t = sd_tally(N, U.dim);
  auto it = t.find({U, M});
  return it == t.end() ? 0 : it->second;
}

Representation interval_rep(const Quiver& Q, int a, int b) {
  auto pos = type_a_positions(Q);
  if (pos.empty()) throw Unsupported("interval representations need a type A quiver");
  DimVec d(Q.num_nodes(), 0);
  bool any = false;
  for (int i = 0; i < Q.num_nodes(); ++i)
    if (pos[i] >= a && pos[i] <= b) d[i] = 1, any = true;
  if (!any) throw ContractViolation("empty interval");
  Representation R = zero_rep(Q, d);
  for (int k = 0; k < Q.num_arrows(); ++k) {
    const Arrow& e = Q.arrows[k];
    if (d[e.head] && d[e.tail]) R.maps[k](0, 0) = 1;
  }
  return R;
}

std::optional<SelfDualRep> r_object(const Field& F, const Quiver& Q, int i, int c) {
  auto pos = type_a_positions(Q);
  if (pos.empty()) throw Unsupported("type A constructions need a type A quiver");
  auto node_at = [&](int p) {
    auto it = std::find(pos.begin(), pos.end(), p);
    return it == pos.end() ? -1 : static_cast<int>(it - pos.begin());
  };
  if (node_at(-i) < 0) return std::nullopt;
  Representation R = interval_rep(Q, -i, i);
  bool iota = Q.iota();
  for (Elt start = 1; start < F.q(); ++start) {
    if (F.quad_character(start) != c) continue;
    std::vector<Elt> p(Q.num_nodes(), 0);
    p[node_at(-i)] = start;
    // Walk outward-to-inward along the chain: p_head = tau * iota(p_tail) on each arrow.
    for (int x = node_at(-i); x + 1 < Q.num_nodes() && pos[x + 1] <= i; ++x) {
      int k = -1;
      for (int a = 0; a < Q.num_arrows(); ++a) {
        const Arrow& e = Q.arrows[a];
        if ((e.tail == x && e.head == x + 1) || (e.tail == x + 1 && e.head == x)) k = a;
      }
      Elt tau = F.from_int(Q.arrows[k].tau);
      p[x + 1] = F.mul(tau, F.conj(p[x], iota));
      if (Q.arrows[k].tail == x + 1) p[x + 1] = F.conj(F.mul(F.inv(tau), p[x]), iota);
    }
    SelfDualRep N;
    N.rep = R;
    for (int x = 0; x < Q.num_nodes(); ++x) {
      Mat P(R.dim[x], R.dim[Q.sigma_node[x]]);
      if (R.dim[x]) P(0, 0) = p[x];
      N.psi.push_back(P);
    }
    if (is_selfdual(F, Q, N)) return N;
  }
  return std::nullopt;
}

namespace {

std::set<RepKey> decomposable_rep_keys(RepCatalog& reps, const DimVec& bound) {
  const Quiver& Q = reps.quiver();
  std::set<RepKey> out;
  auto keys = reps.keys_below(bound);
  for (std::size_t a = 0; a < keys.size(); ++a) {
    if (dim_is_zero(keys[a].dim)) continue;
    for (std::size_t b = a; b < keys.size(); ++b) {
      if (dim_is_zero(keys[b].dim)) continue;
      DimVec d = dim_add(keys[a].dim, keys[b].dim);
      if (!dim_leq(d, bound)) continue;
      out.insert(reps.classify(direct_sum(Q, reps.rep(keys[a]), reps.rep(keys[b]))));
    }
  }
  return out;
}

}  // namespace

std::vector<IndecomposableInfo> sd_indecomposables(SDCatalog& cat, const DimVec& bound) {
  const Quiver& Q = cat.quiver();
  const Field& F = cat.field();
  RepCatalog& reps = cat.reps();
  auto keys = cat.keys_below(bound);
  std::set<SDKey> decomposable;
  for (std::size_t a = 0; a < keys.size(); ++a) {
    if (dim_is_zero(keys[a].gw.dim)) continue;
    for (std::size_t b = a; b < keys.size(); ++b) {
      if (dim_is_zero(keys[b].gw.dim)) continue;
      if (!dim_leq(dim_add(keys[a].gw.dim, keys[b].gw.dim), bound)) continue;
      decomposable.insert(cat.classify(orthogonal_sum(Q, cat.rep(keys[a]), cat.rep(keys[b]))));
    }
  }
  auto rep_decomposable = decomposable_rep_keys(reps, bound);
  std::vector<RepKey> rep_indec;
  for (const auto& k : reps.keys_below(bound))
    if (!dim_is_zero(k.dim) && !rep_decomposable.count(k)) rep_indec.push_back(k);

  std::map<SDKey, std::string> labels;
  auto pos = type_a_positions(Q);
  if (!pos.empty()) {
    auto fits = [&](const DimVec& d) { return dim_leq(d, bound); };
    for (int i : pos) {
      if (i < 0) continue;
      for (int c : {1, -1}) {
        auto R = r_object(F, Q, i, c);
        if (!R || !fits(R->rep.dim)) continue;
        std::string name = "R_" + std::to_string(i) + (Q.iota() ? "" : (c == 1 ? "^+" : "^-"));
        labels.emplace(cat.classify(*R), name);
      }
    }
    for (int a : pos)
      for (int b : pos) {
        if (b < a || a + b < 0) continue;
        SelfDualRep H = hyperbolic(F, Q, interval_rep(Q, a, b));
        if (!fits(H.rep.dim)) continue;
        labels.emplace(cat.classify(H), "H(I_{" + std::to_string(a) + "," + std::to_string(b) + "})");
      }
  }

  std::vector<IndecomposableInfo> out;
  for (const auto& k : keys) {
    if (dim_is_zero(k.gw.dim) || decomposable.count(k)) continue;
    IndecomposableInfo info;
    info.key = k;
    auto it = labels.find(k);
    if (it != labels.end()) info.label = it->second;
    const Representation& R = cat.rep(k).rep;
    RepKey rk = reps.classify(R);
    info.underlying_indecomposable = !rep_decomposable.count(rk);
    for (const auto& I : rep_indec) {
      if (Q.hyperbolic_dim(I.dim) != R.dim) continue;
      const Representation& IR = reps.rep(I);
      if (reps.classify(direct_sum(Q, IR, dual_rep(F, Q, IR))) == rk) {
        info.underlying_hyperbolic_pair = true;
        break;
      }
    }
    out.push_back(info);
  }
  return out;
}

}  // namespace hallmod
