#pragma once

// Brute-force reference computations shared by the tests. Nothing here uses the
// orbit machinery of the library; everything is plain exhaustive search.

#include <set>
#include <vector>

#include "hallmod/ffield.hpp"
#include "hallmod/quiver.hpp"
#include "hallmod/rep.hpp"
#include "hallmod/selfdual.hpp"

namespace oracle {

using namespace hallmod;

inline std::vector<Mat> all_matrices(const Field& F, int r, int c) {
  std::vector<Mat> out;
  Mat m(r, c);
  std::size_t n = m.e.size();
  while (true) {
    out.push_back(m);
    std::size_t i = n;
    bool done = true;
    while (i-- > 0) {
      if (++m.e[i] < F.q()) {
        done = false;
        break;
      }
      m.e[i] = 0;
    }
    if (done) break;
  }
  return out;
}

inline std::vector<Mat> all_invertible(const Field& F, int n) {
  std::vector<Mat> out;
  for (const Mat& m : all_matrices(F, n, n))
    if (rank(F, m) == n) out.push_back(m);
  return out;
}

// Every structure-map tuple of dimension d.
inline std::vector<Representation> all_reps(const Field& F, const Quiver& Q, const DimVec& d) {
  std::vector<Representation> out{zero_rep(Q, d)};
  for (int k = 0; k < Q.num_arrows(); ++k) {
    std::vector<Representation> next;
    for (const Representation& R : out)
      for (const Mat& m : all_matrices(F, d[Q.arrows[k].head], d[Q.arrows[k].tail])) {
        Representation S = R;
        S.maps[k] = m;
        next.push_back(S);
      }
    out = std::move(next);
  }
  return out;
}

// Every element of GL(d) as a tuple of matrices.
inline std::vector<std::vector<Mat>> all_group(const Field& F, const DimVec& d) {
  std::vector<std::vector<Mat>> out{{}};
  for (int x : d) {
    std::vector<std::vector<Mat>> next;
    auto gl = all_invertible(F, x);
    for (const auto& g : out)
      for (const Mat& m : gl) {
        auto h = g;
        h.push_back(m);
        next.push_back(h);
      }
    out = std::move(next);
  }
  return out;
}

inline Representation act(const Field& F, const Quiver& Q, const std::vector<Mat>& g, const Representation& R) {
  Representation S = R;
  for (int k = 0; k < Q.num_arrows(); ++k)
    S.maps[k] = mat_mul(F, mat_mul(F, g[Q.arrows[k].head], R.maps[k]), inverse(F, g[Q.arrows[k].tail]));
  return S;
}

// Canonical form: the least tuple in the full orbit.
inline std::vector<Elt> orbit_min(const Field& F, const Quiver& Q, const std::vector<std::vector<Mat>>& group,
                                  const Representation& R) {
  std::vector<Elt> best;
  for (const auto& g : group) {
    Representation S = act(F, Q, g, R);
    std::vector<Elt> flat;
    for (const Mat& m : S.maps) flat.insert(flat.end(), m.e.begin(), m.e.end());
    if (best.empty() || flat < best) best = flat;
  }
  return best;
}

// Number of subrepresentations found by testing every subspace tuple for closure.
inline std::uint64_t count_subreps(const Field& F, const Quiver& Q, const Representation& X, const DimVec& d) {
  std::vector<std::vector<Mat>> tuples{{}};
  for (int i = 0; i < Q.num_nodes(); ++i) {
    std::vector<Mat> subs;
    for_each_subspace(F, X.dim[i], d[i], [](const Mat&, int) { return true; },
                      [&](const Mat& R) {
                        subs.push_back(R);
                        return true;
                      });
    std::vector<std::vector<Mat>> next;
    for (const auto& t : tuples)
      for (const Mat& s : subs) {
        auto u = t;
        u.push_back(s);
        next.push_back(u);
      }
    tuples = std::move(next);
  }
  std::uint64_t count = 0;
  for (const auto& t : tuples) {
    bool closed = true;
    for (int k = 0; k < Q.num_arrows() && closed; ++k) {
      const Arrow& a = Q.arrows[k];
      Mat img = mat_mul(F, X.maps[k], transpose(t[a.tail]));
      closed = rank(F, vstack(t[a.head], transpose(img))) == t[a.head].rows;
    }
    if (closed) ++count;
  }
  return count;
}

// Every tuple of nondegenerate forms satisfying the symmetry condition, for a symmetric d.
inline std::vector<std::vector<Mat>> all_forms(const Field& F, const Quiver& Q, const DimVec& d) {
  int n = Q.num_nodes();
  std::vector<std::vector<Mat>> out{std::vector<Mat>(n)};
  for (int i = 0; i < n; ++i) {
    int j = Q.sigma_node[i];
    if (j < i) continue;
    std::vector<std::vector<Mat>> next;
    for (const auto& t : out)
      for (const Mat& P : all_invertible(F, d[i])) {
        Mat partner = mat_scale(F, F.from_int(Q.s[i]), transpose(conj(F, P, Q.iota())));
        if (i == j && partner != P) continue;
        auto u = t;
        u[i] = P;
        u[j] = partner;
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

// Every self-dual representation of dimension d.
inline std::vector<SelfDualRep> all_selfdual(const Field& F, const Quiver& Q, const DimVec& d) {
  std::vector<SelfDualRep> out;
  auto reps = all_reps(F, Q, d);
  for (const auto& psi : all_forms(F, Q, d))
    for (const auto& R : reps) {
      SelfDualRep N{R, psi};
      if (is_selfdual(F, Q, N)) out.push_back(N);
    }
  return out;
}

// Transport of structure along g: maps g m g^-1 and forms g^-T psi iota(g_sigma)^-1.
inline SelfDualRep act_sd(const Field& F, const Quiver& Q, const std::vector<Mat>& g, const SelfDualRep& N) {
  SelfDualRep M{act(F, Q, g, N.rep), {}};
  for (int i = 0; i < Q.num_nodes(); ++i) {
    int j = Q.sigma_node[i];
    M.psi.push_back(mat_mul(F, mat_mul(F, transpose(inverse(F, g[i])), N.psi[i]),
                            inverse(F, conj(F, g[j], Q.iota()))));
  }
  return M;
}

inline std::vector<Elt> sd_orbit_min(const Field& F, const Quiver& Q, const std::vector<std::vector<Mat>>& group,
                                     const SelfDualRep& N) {
  std::vector<Elt> best;
  for (const auto& g : group) {
    SelfDualRep S = act_sd(F, Q, g, N);
    std::vector<Elt> flat;
    for (const Mat& m : S.rep.maps) flat.insert(flat.end(), m.e.begin(), m.e.end());
    for (const Mat& m : S.psi) flat.insert(flat.end(), m.e.begin(), m.e.end());
    if (best.empty() || flat < best) best = flat;
  }
  return best;
}

// Isotropic subrepresentations counted over all subspace tuples.
inline std::uint64_t count_isotropic_subreps(const Field& F, const Quiver& Q, const SelfDualRep& N, const DimVec& d) {
  std::vector<std::vector<Mat>> tuples{{}};
  for (int i = 0; i < Q.num_nodes(); ++i) {
    std::vector<Mat> subs;
    for_each_subspace(F, N.rep.dim[i], d[i], [](const Mat&, int) { return true; },
                      [&](const Mat& R) {
                        subs.push_back(R);
                        return true;
                      });
    std::vector<std::vector<Mat>> next;
    for (const auto& t : tuples)
      for (const Mat& s : subs) {
        auto u = t;
        u.push_back(s);
        next.push_back(u);
      }
    tuples = std::move(next);
  }
  std::uint64_t count = 0;
  for (const auto& t : tuples) {
    bool ok = true;
    for (int k = 0; k < Q.num_arrows() && ok; ++k) {
      const Arrow& a = Q.arrows[k];
      Mat img = mat_mul(F, N.rep.maps[k], transpose(t[a.tail]));
      ok = rank(F, vstack(t[a.head], transpose(img))) == t[a.head].rows;
    }
    for (int i = 0; i < Q.num_nodes() && ok; ++i) {
      int j = Q.sigma_node[i];
      ok = is_zero(mat_mul(F, mat_mul(F, t[i], N.psi[i]), transpose(conj(F, t[j], Q.iota()))));
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
