#include "hallmod/rep.hpp"

#include <deque>

namespace hallmod {

Representation zero_rep(const Quiver& Q, const DimVec& d) {
  Representation R;
  R.dim = d;
  for (const auto& a : Q.arrows) R.maps.emplace_back(d[a.head], d[a.tail]);
  return R;
}

Representation simple_rep(const Quiver& Q, int i) { return zero_rep(Q, Q.unit(i)); }

Representation direct_sum(const Quiver& Q, const Representation& a, const Representation& b) {
  Representation R = zero_rep(Q, dim_add(a.dim, b.dim));
  for (int k = 0; k < Q.num_arrows(); ++k) {
    const Mat &x = a.maps[k], &y = b.maps[k];
    Mat& m = R.maps[k];
    for (int i = 0; i < x.rows; ++i)
      for (int j = 0; j < x.cols; ++j) m(i, j) = x(i, j);
    for (int i = 0; i < y.rows; ++i)
      for (int j = 0; j < y.cols; ++j) m(x.rows + i, x.cols + j) = y(i, j);
  }
  return R;
}

bool is_valid_rep(const Quiver& Q, const Representation& R) {
  if (static_cast<int>(R.dim.size()) != Q.num_nodes() || static_cast<int>(R.maps.size()) != Q.num_arrows())
    return false;
  for (int k = 0; k < Q.num_arrows(); ++k) {
    const Mat& m = R.maps[k];
    if (m.rows != R.dim[Q.arrows[k].head] || m.cols != R.dim[Q.arrows[k].tail]) return false;
    if (m.e.size() != static_cast<std::size_t>(m.rows) * m.cols) return false;
  }
  return true;
}

std::string rep_to_string(const Field& F, const Quiver& Q, const Representation& R) {
  std::string s = "dim:" + dim_to_string(R.dim);
  for (int k = 0; k < Q.num_arrows(); ++k) s += ";arrow" + Q.arrows[k].id + ":" + mat_to_string(F, R.maps[k]);
  return s;
}

namespace {

// Matrix of the differential A^0(V,W) -> A^1(V,W) in the entry bases.
Mat differential(const Field& F, const Quiver& Q, const Representation& V, const Representation& W,
                 std::vector<int>& offsets) {
  int n = Q.num_nodes();
  offsets.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + W.dim[i] * V.dim[i];
  int rows = 0;
  for (const auto& a : Q.arrows) rows += W.dim[a.head] * V.dim[a.tail];
  Mat D(rows, offsets[n]);
  int r0 = 0;
  for (int k = 0; k < Q.num_arrows(); ++k) {
    int i = Q.arrows[k].tail, j = Q.arrows[k].head;
    const Mat &v = V.maps[k], &w = W.maps[k];
    // Entry (x, y) of w f_i - f_j v, with x < W_j and y < V_i.
    for (int x = 0; x < W.dim[j]; ++x)
      for (int y = 0; y < V.dim[i]; ++y) {
        int row = r0 + x * V.dim[i] + y;
        for (int z = 0; z < W.dim[i]; ++z) {
          int col = offsets[i] + z * V.dim[i] + y;
          D(row, col) = F.add(D(row, col), w(x, z));
        }
        for (int z = 0; z < V.dim[j]; ++z) {
          int col = offsets[j] + x * V.dim[j] + z;
          D(row, col) = F.sub(D(row, col), v(z, y));
        }
      }
    r0 += W.dim[j] * V.dim[i];
  }
  return D;
}

}  // namespace

std::vector<Morphism> hom_basis(const Field& F, const Quiver& Q, const Representation& V, const Representation& W) {
  std::vector<int> off;
  Mat D = differential(F, Q, V, W, off);
  Mat K = kernel(F, D);
  std::vector<Morphism> out;
  for (int r = 0; r < K.rows; ++r) {
    Morphism f;
    for (int i = 0; i < Q.num_nodes(); ++i) {
      Mat m(W.dim[i], V.dim[i]);
      for (std::size_t e = 0; e < m.e.size(); ++e) m.e[e] = K(r, off[i] + static_cast<int>(e));
      f.push_back(m);
    }
    out.push_back(f);
  }
  return out;
}

int hom_dim(const Field& F, const Quiver& Q, const Representation& V, const Representation& W) {
  std::vector<int> off;
  Mat D = differential(F, Q, V, W, off);
  return D.cols - rank(F, D);
}

int ext_dim(const Field& F, const Quiver& Q, const Representation& V, const Representation& W) {
  std::vector<int> off;
  Mat D = differential(F, Q, V, W, off);
  return D.rows - rank(F, D);
}

bool is_isomorphism(const Field& F, const Morphism& f) {
  for (const Mat& m : f)
    if (m.rows != m.cols || rank(F, m) != m.rows) return false;
  return true;
}

bool is_morphism(const Field& F, const Quiver& Q, const Representation& V, const Representation& W, const Morphism& f) {
  for (int k = 0; k < Q.num_arrows(); ++k) {
    int i = Q.arrows[k].tail, j = Q.arrows[k].head;
    if (mat_mul(F, W.maps[k], f[i]) != mat_mul(F, f[j], V.maps[k])) return false;
  }
  return true;
}

mpz_class aut_count_bruteforce(const Field& F, const Quiver& Q, const Representation& U, const Budget& budget) {
  auto basis = hom_basis(F, Q, U, U);
  std::size_t k = basis.size();
  check_budget("endomorphisms", sat_pow(F.q(), k), budget.group_elements);
  std::vector<int> c(k, 0);
  mpz_class count = 0;
  while (true) {
    Morphism f;
    for (int i = 0; i < Q.num_nodes(); ++i) f.emplace_back(U.dim[i], U.dim[i]);
    for (std::size_t b = 0; b < k; ++b)
      if (c[b])
        for (int i = 0; i < Q.num_nodes(); ++i)
          f[i] = mat_add(F, f[i], mat_scale(F, static_cast<Elt>(c[b]), basis[b][i]));
    if (is_isomorphism(F, f)) ++count;
    std::size_t b = k;
    bool done = true;
    while (b-- > 0) {
      if (++c[b] < F.q()) {
        done = false;
        break;
      }
      c[b] = 0;
    }
    if (done) break;
  }
  return count;
}

mpz_class gl_order_exact(int q, int n) {
  mpz_class r = 1, qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
  for (int k = 0; k < n; ++k) {
    mpz_class qk;
    mpz_ui_pow_ui(qk.get_mpz_t(), q, k);
    r *= qn - qk;
  }
  return r;
}

mpz_class gl_order_exact(int q, const DimVec& d) {
  mpz_class r = 1;
  for (int x : d) r *= gl_order_exact(q, x);
  return r;
}

std::string key_to_string(const RepKey& k) { return dim_to_string(k.dim) + "#" + std::to_string(k.index); }

std::vector<int> echelon_pivots(const Mat& R) {
  std::vector<int> piv;
  for (int r = 0; r < R.rows; ++r)
    for (int c = 0; c < R.cols; ++c)
      if (R(r, c) != 0) {
        piv.push_back(c);
        break;
      }
  return piv;
}

std::vector<Elt> echelon_coordinates(const Mat& R, const std::vector<Elt>& v) {
  std::vector<Elt> out;
  for (int p : echelon_pivots(R)) out.push_back(v[p]);
  return out;
}

namespace {

Echelon as_echelon(const Mat& R) { return Echelon{R, echelon_pivots(R)}; }

std::vector<Elt> row_of(const Mat& R, int r) { return std::vector<Elt>(R.e.begin() + r * R.cols, R.e.begin() + (r + 1) * R.cols); }

struct SubrepWalker {
  const Field& F;
  const Quiver& Q;
  const Representation& X;
  const DimVec& d;
  const std::function<bool(int, const Mat&, int, const SubspaceTuple&)>& extra;
  const std::function<bool(const SubspaceTuple&)>& visit;
  SubspaceTuple chosen;
  std::vector<Echelon> ech;
  bool stop = false;

  bool image_inside(int arrow, const std::vector<Elt>& v, const Echelon& target) {
    return in_row_space(F, target, mat_vec(F, X.maps[arrow], v));
  }

  void at_node(int i) {
    if (stop) return;
    if (i == Q.num_nodes()) {
      if (!visit(chosen)) stop = true;
      return;
    }
    auto row_ok = [&](const Mat& R, int r) {
      auto v = row_of(R, r);
      for (int k = 0; k < Q.num_arrows(); ++k) {
        const Arrow& a = Q.arrows[k];
        if (a.tail == i && a.head < i && !image_inside(k, v, ech[a.head])) return false;
      }
      return !extra || extra(i, R, r, chosen);
    };
    auto complete = [&](const Mat& R) {
      Echelon e = as_echelon(R);
      for (int k = 0; k < Q.num_arrows(); ++k) {
        const Arrow& a = Q.arrows[k];
        if (a.head != i || a.tail > i) continue;
        const Mat& src = a.tail == i ? R : chosen[a.tail];
        for (int r = 0; r < src.rows; ++r)
          if (!image_inside(k, row_of(src, r), e)) return true;
      }
      chosen[i] = R;
      ech[i] = e;
      at_node(i + 1);
      return !stop;
    };
    for_each_subspace(F, X.dim[i], d[i], row_ok, complete);
  }
};

}  // namespace

void for_each_subrep(const Field& F, const Quiver& Q, const Representation& X, const DimVec& d,
                     const std::function<bool(int, const Mat&, int, const SubspaceTuple&)>& extra_row_ok,
                     const std::function<bool(const SubspaceTuple&)>& visit) {
  if (!dim_leq(d, X.dim)) return;
  for (int x : d)
    if (x < 0) return;
  SubrepWalker w{F, Q, X, d, extra_row_ok, visit, SubspaceTuple(Q.num_nodes()), std::vector<Echelon>(Q.num_nodes())};
  w.at_node(0);
}

Representation restrict_to_sub(const Field& F, const Quiver& Q, const Representation& X, const SubspaceTuple& U) {
  DimVec d;
  for (const Mat& m : U) d.push_back(m.rows);
  Representation R = zero_rep(Q, d);
  for (int k = 0; k < Q.num_arrows(); ++k) {
    const Arrow& a = Q.arrows[k];
    for (int c = 0; c < d[a.tail]; ++c) {
      auto coords = echelon_coordinates(U[a.head], mat_vec(F, X.maps[k], row_of(U[a.tail], c)));
      for (int r = 0; r < d[a.head]; ++r) R.maps[k](r, c) = coords[r];
    }
  }
  return R;
}

Representation quotient_by_sub(const Field& F, const Quiver& Q, const Representation& X, const SubspaceTuple& U) {
  int n = Q.num_nodes();
  std::vector<std::vector<int>> free_cols(n);
  std::vector<Echelon> ech(n);
  DimVec d(n);
  for (int i = 0; i < n; ++i) {
    ech[i] = as_echelon(U[i]);
    std::vector<bool> piv(X.dim[i], false);
    for (int p : ech[i].pivots) piv[p] = true;
    for (int c = 0; c < X.dim[i]; ++c)
      if (!piv[c]) free_cols[i].push_back(c);
    d[i] = static_cast<int>(free_cols[i].size());
  }
  Representation R = zero_rep(Q, d);
  for (int k = 0; k < Q.num_arrows(); ++k) {
    const Arrow& a = Q.arrows[k];
    for (int c = 0; c < d[a.tail]; ++c) {
      std::vector<Elt> img(X.dim[a.head]);
      for (int r = 0; r < X.dim[a.head]; ++r) img[r] = X.maps[k](r, free_cols[a.tail][c]);
      img = reduce_against(F, ech[a.head], img);
      for (int r = 0; r < d[a.head]; ++r) R.maps[k](r, c) = img[free_cols[a.head][r]];
    }
  }
  return R;
}

RepCatalog::RepCatalog(const Quiver& Q, const Field& F, Budget budget) : Q_(Q), F_(F), budget_(budget) {}

std::uint64_t RepCatalog::encode(const Representation& R) const {
  std::vector<const Mat*> ms;
  for (const Mat& m : R.maps) ms.push_back(&m);
  return encode_entries(F_, ms);
}

Representation RepCatalog::decode(const DimVec& d, std::uint64_t code) const {
  Representation R = zero_rep(Q_, d);
  for (int k = Q_.num_arrows(); k-- > 0;) {
    Mat& m = R.maps[k];
    for (std::size_t e = m.e.size(); e-- > 0;) {
      m.e[e] = static_cast<Elt>(code % F_.q());
      code /= F_.q();
    }
  }
  return R;
}

RepCatalog::DimData& RepCatalog::data(const DimVec& d) {
  auto it = dims_.find(d);
  if (it != dims_.end()) return *it->second;
  for (int x : d)
    if (x < 0) throw ContractViolation("negative dimension vector");
  std::uint64_t entries = 0;
  for (const auto& a : Q_.arrows) entries += static_cast<std::uint64_t>(d[a.head]) * d[a.tail];
  std::uint64_t total = sat_pow(F_.q(), entries);
  check_budget("representation tuples of dimension " + dim_to_string(d), total, budget_.tuples);

  auto dd = std::make_unique<DimData>();
  dd->table.assign(total, -1);
  int n = Q_.num_nodes();
  std::vector<std::vector<std::pair<Mat, Mat>>> gens(n);
  for (int i = 0; i < n; ++i)
    for (const Mat& g : gl_generators(F_, d[i])) gens[i].emplace_back(g, inverse(F_, g));
  mpz_class group = gl_order_exact(F_.q(), d);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (dd->table[start] >= 0) continue;
    int id = static_cast<int>(dd->classes.size());
    dd->table[start] = id;
    queue.push_back(start);
    std::uint64_t size = 0;
    while (!queue.empty()) {
      std::uint64_t cur = queue.front();
      queue.pop_front();
      ++size;
      Representation R = decode(d, cur);
      for (int i = 0; i < n; ++i)
        for (const auto& [g, gi] : gens[i]) {
          Representation S = R;
          for (int k = 0; k < Q_.num_arrows(); ++k) {
            const Arrow& a = Q_.arrows[k];
            if (a.head == i) S.maps[k] = mat_mul(F_, g, S.maps[k]);
            if (a.tail == i) S.maps[k] = mat_mul(F_, S.maps[k], gi);
          }
          std::uint64_t code = encode(S);
          if (dd->table[code] < 0) {
            dd->table[code] = id;
            queue.push_back(code);
          }
        }
    }
    RepClass c;
    c.rep = decode(d, start);
    c.orbit_size = size;
    c.aut = group / mpz_class(std::to_string(size));
    dd->classes.push_back(std::move(c));
  }
  auto& ref = *dd;
  dims_.emplace(d, std::move(dd));
  return ref;
}

const std::vector<RepClass>& RepCatalog::classes(const DimVec& d) { return data(d).classes; }

std::vector<RepKey> RepCatalog::keys(const DimVec& d) {
  std::vector<RepKey> out;
  for (int k = 0; k < static_cast<int>(classes(d).size()); ++k) out.push_back(RepKey{d, k});
  return out;
}

std::vector<RepKey> RepCatalog::keys_below(const DimVec& bound) {
  std::vector<RepKey> out;
  for (const DimVec& d : dims_below(bound))
    for (const RepKey& k : keys(d)) out.push_back(k);
  return out;
}

RepKey RepCatalog::classify(const Representation& R) {
  if (!is_valid_rep(Q_, R)) throw ContractViolation("malformed representation");
  DimData& dd = data(R.dim);
  return RepKey{R.dim, dd.table[encode(R)]};
}

const Representation& RepCatalog::rep(const RepKey& k) { return data(k.dim).classes.at(k.index).rep; }

const mpz_class& RepCatalog::aut(const RepKey& k) { return data(k.dim).classes.at(k.index).aut; }

RepKey RepCatalog::simple_key(int i) { return classify(simple_rep(Q_, i)); }

const HallTally& RepCatalog::hall_tally(const RepKey& X, const DimVec& d) {
  auto key = std::make_pair(X, d);
  auto it = tallies_.find(key);
  if (it != tallies_.end()) return it->second;
  std::uint64_t candidates = 1;
  for (int i = 0; i < Q_.num_nodes(); ++i) candidates = sat_mul(candidates, count_subspaces(F_.q(), X.dim[i], d[i]));
  check_budget("subspace tuples in " + key_to_string(X), candidates, budget_.tuples);
  HallTally t;
  Representation XR = rep(X);
  for_each_subrep(F_, Q_, XR, d, nullptr, [&](const SubspaceTuple& U) {
    RepKey sub = classify(restrict_to_sub(F_, Q_, XR, U));
    RepKey quo = classify(quotient_by_sub(F_, Q_, XR, U));
    ++t[{sub, quo}];
    return true;
  });
  return tallies_.emplace(key, std::move(t)).first->second;
}

std::uint64_t RepCatalog::hall_number(const RepKey& U, const RepKey& V, const RepKey& X) {
  if (dim_add(U.dim, V.dim) != X.dim) return 0;
  const HallTally& t = hall_tally(X, U.dim);
  auto it = t.find({U, V});
  return it == t.end() ? 0 : it->second;
}

}  // namespace hallmod
