#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hallmod/common.hpp"

namespace hallmod {

using Elt = std::uint8_t;

// F_q for q = p or p^2 with p an odd prime. Elements are small integer codes:
// a for F_p, and a + p*b for a + b*x in F_p[x]/(x^2 - r).
class Field {
 public:
  explicit Field(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  bool is_extension() const { return q_ != p_; }
  // x^2 = r in the quadratic extension.
  int extension_constant() const { return r_; }

  Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
  Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
  Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt inv(Elt a) const;
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long e) const;

  Elt frobenius(Elt a) const;
  Elt conj(Elt a, bool iota) const { return iota ? frob_[a] : a; }
  int quad_character(Elt a) const;
  bool is_square(Elt a) const { return a == 0 || quad_character(a) == 1; }

  Elt from_int(long v) const;
  Elt make(int a, int b) const;  // a + b*x
  Elt generator_x() const;        // x, or 0 for a prime field
  Elt primitive() const { return prim_; }
  Elt least_nonsquare() const { return nonsq_; }
  // Fixed field of the Frobenius: the prime field codes 0..p-1.
  bool in_prime_field(Elt a) const { return a < p_; }

  std::string to_string(Elt a) const;

 private:
  int q_, p_, r_ = 0;
  Elt prim_ = 0, nonsq_ = 0;
  std::vector<Elt> add_, mul_, neg_, inv_, frob_;
  std::vector<int> chi_;
};

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Elt> e;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}

  Elt& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
  Elt operator()(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }

  auto operator<=>(const Mat&) const = default;
  bool operator==(const Mat&) const = default;
};

Mat identity(int n);
Mat mat_mul(const Field& F, const Mat& a, const Mat& b);
Mat mat_add(const Field& F, const Mat& a, const Mat& b);
Mat mat_sub(const Field& F, const Mat& a, const Mat& b);
Mat mat_scale(const Field& F, Elt c, const Mat& a);
Mat transpose(const Mat& a);
Mat conj(const Field& F, const Mat& a, bool iota);
// Conjugate transpose: transpose of the entrywise iota image.
Mat adjoint(const Field& F, const Mat& a, bool iota);
bool is_zero(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat column(const std::vector<Elt>& v);
Mat row(const Mat& a, int i);

struct Echelon {
  Mat R;                    // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

Echelon rref(const Field& F, const Mat& a);
int rank(const Field& F, const Mat& a);
// Kernel of a as the rows of a matrix in reduced row echelon form.
Mat kernel(const Field& F, const Mat& a);
std::optional<std::vector<Elt>> solve(const Field& F, const Mat& a, const std::vector<Elt>& b);
Mat inverse(const Field& F, const Mat& a);
Elt det(const Field& F, const Mat& a);

// Reduces v against the rows of an echelon form; returns the remainder.
std::vector<Elt> reduce_against(const Field& F, const Echelon& ech, std::vector<Elt> v);
bool in_row_space(const Field& F, const Echelon& ech, const std::vector<Elt>& v);

std::vector<Elt> mat_vec(const Field& F, const Mat& a, const std::vector<Elt>& v);

// Visits every k-dimensional subspace of F^n as a k x n reduced echelon matrix.
// row_ok(R, r) is consulted once row r (and all rows above it) are filled;
// returning false prunes the branch. visit returns false to stop early.
void for_each_subspace(const Field& F, int n, int k,
                       const std::function<bool(const Mat&, int)>& row_ok,
                       const std::function<bool(const Mat&)>& visit);

// Gaussian binomial coefficient: number of k-dimensional subspaces of F_q^n.
std::uint64_t count_subspaces(int q, int n, int k);

// |GL_n(F_q)|, saturating.
std::uint64_t gl_order(int q, int n);

// Generators of GL_n(F_q): diag(w,1,..), I + E_12, the transposition (1 2) and the n-cycle.
std::vector<Mat> gl_generators(const Field& F, int n);

// Mixed-radix encoding of matrix entries (first entry most significant).
std::uint64_t encode_entries(const Field& F, const std::vector<const Mat*>& ms);
std::string mat_to_string(const Field& F, const Mat& m);

}  // namespace hallmod
