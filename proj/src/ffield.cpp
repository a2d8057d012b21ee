#include "hallmod/ffield.hpp"

#include <algorithm>
#include <numeric>

namespace hallmod {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field::Field(int q) : q_(q), p_(0) {
  if (q < 3 || q % 2 == 0) throw InvalidField("field size must be an odd prime power >= 3, got " + std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  if (!is_prime(p) || (q != p && q != p * p))
    throw InvalidField("field size must be p or p^2 for an odd prime p, got " + std::to_string(q));
  if (q > 255) throw InvalidField("field size too large for the element encoding: " + std::to_string(q));
  p_ = p;

  if (q != p) {
    if (p % 4 == 3) {
      r_ = p - 1;
    } else {
      for (int n = 2; n < p; ++n) {
        bool square = false;
        for (int y = 1; y < p; ++y)
          if (y * y % p == n) square = true;
        if (!square) {
          r_ = n;
          break;
        }
      }
    }
    for (int y = 0; y < p; ++y)
      if (y * y % p == r_) throw InvalidField("extension polynomial is reducible");
  }

  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    int a0 = a % p, a1 = a / p;
    neg_[a] = static_cast<Elt>((p - a0) % p + p * ((p - a1) % p));
    for (int b = 0; b < q; ++b) {
      int b0 = b % p, b1 = b / p;
      add_[a * q + b] = static_cast<Elt>((a0 + b0) % p + p * ((a1 + b1) % p));
      int c0 = (a0 * b0 + a1 * b1 % p * r_) % p;
      int c1 = (a0 * b1 + a1 * b0) % p;
      mul_[a * q + b] = static_cast<Elt>(c0 + p * c1);
    }
  }
  inv_.assign(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<Elt>(b);

  frob_.assign(q, 0);
  for (int a = 0; a < q; ++a) frob_[a] = pow(static_cast<Elt>(a), p);

  chi_.assign(q, 0);
  for (int a = 1; a < q; ++a) chi_[a] = pow(static_cast<Elt>(a), (q - 1) / 2) == 1 ? 1 : -1;

  for (int g = 1; g < q; ++g) {
    int order = 1;
    Elt x = static_cast<Elt>(g);
    while (x != 1) {
      x = mul(x, static_cast<Elt>(g));
      ++order;
    }
    if (order == q - 1) {
      prim_ = static_cast<Elt>(g);
      break;
    }
  }
  for (int a = 1; a < q; ++a)
    if (chi_[a] == -1) {
      nonsq_ = static_cast<Elt>(a);
      break;
    }
}

Elt Field::inv(Elt a) const {
  if (a == 0) throw DivisionByZero();
  return inv_[a];
}

Elt Field::pow(Elt a, long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elt r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elt Field::frobenius(Elt a) const {
  if (!is_extension()) throw Unsupported("Frobenius involution requires q = p^2");
  return frob_[a];
}

int Field::quad_character(Elt a) const {
  if (a == 0) throw DomainError("quadratic character of zero");
  return chi_[a];
}

Elt Field::from_int(long v) const {
  long r = v % p_;
  if (r < 0) r += p_;
  return static_cast<Elt>(r);
}

Elt Field::make(int a, int b) const {
  return add(from_int(a), mul(from_int(b), generator_x()));
}

Elt Field::generator_x() const { return is_extension() ? static_cast<Elt>(p_) : 0; }

std::string Field::to_string(Elt a) const {
  if (!is_extension()) return std::to_string(a);
  return "(" + std::to_string(a % p_) + "," + std::to_string(a / p_) + ")";
}

Mat identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat mat_mul(const Field& F, const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw ContractViolation("matrix shape mismatch in product");
  Mat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      Elt x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols; ++j) c(i, j) = F.add(c(i, j), F.mul(x, b(k, j)));
    }
  return c;
}

Mat mat_add(const Field& F, const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ContractViolation("matrix shape mismatch in sum");
  Mat c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = F.add(a.e[i], b.e[i]);
  return c;
}

Mat mat_sub(const Field& F, const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw ContractViolation("matrix shape mismatch in difference");
  Mat c(a.rows, a.cols);
  for (std::size_t i = 0; i < a.e.size(); ++i) c.e[i] = F.sub(a.e[i], b.e[i]);
  return c;
}

Mat mat_scale(const Field& F, Elt c, const Mat& a) {
  Mat r = a;
  for (auto& x : r.e) x = F.mul(c, x);
  return r;
}

Mat transpose(const Mat& a) {
  Mat t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Mat conj(const Field& F, const Mat& a, bool iota) {
  if (!iota) return a;
  Mat r = a;
  for (auto& x : r.e) x = F.frobenius(x);
  return r;
}

Mat adjoint(const Field& F, const Mat& a, bool iota) { return transpose(conj(F, a, iota)); }

bool is_zero(const Mat& a) {
  return std::all_of(a.e.begin(), a.e.end(), [](Elt x) { return x == 0; });
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) throw ContractViolation("hstack row mismatch");
  Mat c(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols; ++j) c(i, a.cols + j) = b(i, j);
  }
  return c;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols != b.cols) throw ContractViolation("vstack column mismatch");
  Mat c(a.rows + b.rows, a.cols);
  std::copy(a.e.begin(), a.e.end(), c.e.begin());
  std::copy(b.e.begin(), b.e.end(), c.e.begin() + static_cast<std::ptrdiff_t>(a.e.size()));
  return c;
}

Mat column(const std::vector<Elt>& v) {
  Mat c(static_cast<int>(v.size()), 1);
  c.e = v;
  return c;
}

Mat row(const Mat& a, int i) {
  Mat r(1, a.cols);
  for (int j = 0; j < a.cols; ++j) r(0, j) = a(i, j);
  return r;
}

Echelon rref(const Field& F, const Mat& a) {
  Mat m = a;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(r, j));
    Elt s = F.inv(m(r, c));
    for (int j = 0; j < m.cols; ++j) m(r, j) = F.mul(s, m(r, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Elt f = m(i, c);
      for (int j = 0; j < m.cols; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  Echelon out;
  out.R = Mat(r, m.cols);
  std::copy(m.e.begin(), m.e.begin() + static_cast<std::ptrdiff_t>(r) * m.cols, out.R.e.begin());
  out.pivots = std::move(piv);
  return out;
}

int rank(const Field& F, const Mat& a) { return static_cast<int>(rref(F, a).pivots.size()); }

Mat kernel(const Field& F, const Mat& a) {
  Echelon ech = rref(F, a);
  std::vector<bool> is_piv(a.cols, false);
  for (int c : ech.pivots) is_piv[c] = true;
  Mat basis(0, a.cols);
  std::vector<Elt> rows;
  int k = 0;
  for (int f = 0; f < a.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Elt> v(a.cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = F.neg(ech.R(static_cast<int>(r), f));
    rows.insert(rows.end(), v.begin(), v.end());
    ++k;
  }
  basis.rows = k;
  basis.e = rows;
  return rref(F, basis).R;
}

std::optional<std::vector<Elt>> solve(const Field& F, const Mat& a, const std::vector<Elt>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw ContractViolation("solve: right-hand side size mismatch");
  Echelon ech = rref(F, hstack(a, column(b)));
  std::vector<Elt> x(a.cols, 0);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    int c = ech.pivots[r];
    if (c == a.cols) return std::nullopt;
    x[c] = ech.R(static_cast<int>(r), a.cols);
  }
  return x;
}

Mat inverse(const Field& F, const Mat& a) {
  if (a.rows != a.cols) throw ContractViolation("inverse of a non-square matrix");
  int n = a.rows;
  Echelon ech = rref(F, hstack(a, identity(n)));
  if (static_cast<int>(ech.pivots.size()) < n || (n > 0 && ech.pivots[n - 1] != n - 1)) throw SingularMatrix();
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = ech.R(i, n + j);
  return inv;
}

Elt det(const Field& F, const Mat& a) {
  if (a.rows != a.cols) throw ContractViolation("determinant of a non-square matrix");
  Mat m = a;
  int n = m.rows;
  Elt d = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return 0;
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(c, c));
    Elt s = F.inv(m(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Elt f = F.mul(m(i, c), s);
      for (int j = c; j < n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
    }
  }
  return d;
}

std::vector<Elt> reduce_against(const Field& F, const Echelon& ech, std::vector<Elt> v) {
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    Elt f = v[ech.pivots[r]];
    if (f == 0) continue;
    for (int j = 0; j < ech.R.cols; ++j) v[j] = F.sub(v[j], F.mul(f, ech.R(static_cast<int>(r), j)));
  }
  return v;
}

bool in_row_space(const Field& F, const Echelon& ech, const std::vector<Elt>& v) {
  auto rem = reduce_against(F, ech, v);
  return std::all_of(rem.begin(), rem.end(), [](Elt x) { return x == 0; });
}

std::vector<Elt> mat_vec(const Field& F, const Mat& a, const std::vector<Elt>& v) {
  std::vector<Elt> out(a.rows, 0);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out[i] = F.add(out[i], F.mul(a(i, j), v[j]));
  return out;
}

namespace {

struct SubspaceWalker {
  const Field& F;
  int n, k;
  const std::function<bool(const Mat&, int)>& row_ok;
  const std::function<bool(const Mat&)>& visit;
  std::vector<int> piv;
  Mat R;
  bool stop = false;

  // Fill the free entries of row r, then move on to row r + 1.
  void fill_row(int r) {
    if (stop) return;
    if (r == k) {
      if (!visit(R)) stop = true;
      return;
    }
    std::vector<int> free_cols;
    for (int c = piv[r] + 1; c < n; ++c)
      if (std::find(piv.begin(), piv.end(), c) == piv.end()) free_cols.push_back(c);
    for (int c = 0; c < n; ++c) R(r, c) = 0;
    R(r, piv[r]) = 1;
    std::size_t m = free_cols.size();
    std::vector<int> digits(m, 0);
    while (true) {
      for (std::size_t i = 0; i < m; ++i) R(r, free_cols[i]) = static_cast<Elt>(digits[i]);
      if (row_ok(R, r)) fill_row(r + 1);
      if (stop) return;
      bool carried_out = true;
      for (std::size_t i = m; i-- > 0;) {
        if (++digits[i] < F.q()) {
          carried_out = false;
          break;
        }
        digits[i] = 0;
      }
      if (carried_out) break;
    }
  }

  void choose_pivots(int r, int start) {
    if (stop) return;
    if (r == k) {
      fill_row(0);
      return;
    }
    for (int c = start; c <= n - (k - r); ++c) {
      piv[r] = c;
      choose_pivots(r + 1, c + 1);
      if (stop) return;
    }
  }
};

}  // namespace

void for_each_subspace(const Field& F, int n, int k, const std::function<bool(const Mat&, int)>& row_ok,
                       const std::function<bool(const Mat&)>& visit) {
  if (k < 0 || k > n) return;
  SubspaceWalker w{F, n, k, row_ok, visit, std::vector<int>(k, 0), Mat(k, n)};
  w.choose_pivots(0, 0);
}

std::uint64_t count_subspaces(int q, int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num = sat_mul(num, sat_pow(q, n - i) - 1);
    den = sat_mul(den, sat_pow(q, i + 1) - 1);
  }
  return num == UINT64_MAX ? UINT64_MAX : num / den;
}

std::uint64_t gl_order(int q, int n) {
  std::uint64_t r = 1;
  for (int k = 0; k < n; ++k) r = sat_mul(r, sat_pow(q, n) - sat_pow(q, k));
  return r;
}

std::vector<Mat> gl_generators(const Field& F, int n) {
  std::vector<Mat> gens;
  if (n == 0) return gens;
  Mat d = identity(n);
  d(0, 0) = F.primitive();
  gens.push_back(d);
  if (n >= 2) {
    Mat t = identity(n);
    t(0, 1) = 1;
    gens.push_back(t);
    Mat s(n, n);
    s(0, 1) = 1;
    s(1, 0) = 1;
    for (int i = 2; i < n; ++i) s(i, i) = 1;
    gens.push_back(s);
  }
  if (n >= 3) {
    Mat c(n, n);
    for (int i = 0; i < n; ++i) c((i + 1) % n, i) = 1;
    gens.push_back(c);
  }
  return gens;
}

std::uint64_t encode_entries(const Field& F, const std::vector<const Mat*>& ms) {
  std::uint64_t code = 0;
  for (const Mat* m : ms)
    for (Elt x : m->e) code = code * static_cast<std::uint64_t>(F.q()) + x;
  return code;
}

std::string mat_to_string(const Field& F, const Mat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (i) s += ",";
    s += F.to_string(m.e[i]);
  }
  return s + "]";
}

}  // namespace hallmod
