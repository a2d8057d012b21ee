#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "hallmod/errors.hpp"

namespace hallmod {

// Q(t) with t the positive real fourth root of q. The minimal polynomial of t
// always has the shape t^deg - root with deg in {1, 2, 4}.
class ScalarField {
 public:
  // Interned descriptor; the returned pointer stays valid for the program lifetime.
  static const ScalarField* get(int q);

  int q() const { return q_; }
  int degree() const { return deg_; }
  const mpq_class& root() const { return root_; }
  // Coefficients of the minimal polynomial, lowest degree first.
  std::vector<mpq_class> minimal_polynomial() const;

 private:
  explicit ScalarField(int q);
  int q_;
  int deg_;
  mpq_class root_;
};

class Scalar {
 public:
  Scalar() : c_(1, 0) {}
  Scalar(long v) : c_(1, v) {}  // NOLINT: rationals convert implicitly
  Scalar(const mpq_class& v) : c_(1, v) {}  // NOLINT
  Scalar(const mpz_class& v) : c_(1, mpq_class(v)) {}  // NOLINT
  Scalar(const ScalarField* f, std::vector<mpq_class> coeffs);

  static Scalar t(const ScalarField* f);
  static Scalar t_power(const ScalarField* f, long e);

  const ScalarField* field() const { return f_; }
  // Coefficients in the basis 1, t, ..., t^(deg-1).
  std::vector<mpq_class> coeffs() const;
  bool is_zero() const;
  bool is_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inv() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  // Order induced by the real embedding t -> q^(1/4).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  // Rational interval containing the real value; width shrinks with precision bits.
  std::pair<mpq_class, mpq_class> enclose(int precision_bits) const;

  // Canonical text form: "c0 + c1*t + c2*t^2" up to the highest nonzero term.
  std::string to_string() const;

 private:
  void promote(const ScalarField* f);
  int sign() const;

  const ScalarField* f_ = nullptr;
  std::vector<mpq_class> c_;
};

// nu = q^(-1/2) = t^(-2); nu^k.
Scalar nu_power(const ScalarField* f, long k);
// nu^(h/2) = t^(-h); used for half-integral exponents.
Scalar nu_half_power(const ScalarField* f, long h);
// q^(h/2) = t^(2h).
Scalar q_half_power(const ScalarField* f, long h);

}  // namespace hallmod
