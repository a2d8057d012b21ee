#include <cmath>
#include <random>

#include "doctest.h"
#include "hallmod/scalar.hpp"

using namespace hallmod;

namespace {

// Floating evaluation at t = q^(1/4), used as an independent check.
double eval(const Scalar& x, int q) {
  double t = std::pow(static_cast<double>(q), 0.25), v = 0, pw = 1;
  for (const auto& c : x.coeffs()) {
    v += c.get_d() * pw;
    pw *= t;
  }
  return v;
}

Scalar random_scalar(const ScalarField* f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<mpq_class> c(f->degree());
  for (auto& x : c) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
  }
  return Scalar(f, c);
}

}  // namespace

TEST_CASE("minimal polynomial of the fourth root") {
  CHECK(ScalarField::get(3)->minimal_polynomial() == std::vector<mpq_class>{-3, 0, 0, 0, 1});
  CHECK(ScalarField::get(9)->minimal_polynomial() == std::vector<mpq_class>{-3, 0, 1});
  CHECK(ScalarField::get(81)->minimal_polynomial() == std::vector<mpq_class>{-3, 1});
  CHECK(ScalarField::get(25)->degree() == 2);
  CHECK(ScalarField::get(5)->degree() == 4);
  CHECK_THROWS_AS(ScalarField::get(4), InvalidField);
  CHECK_THROWS_AS(ScalarField::get(1), InvalidField);
  CHECK_THROWS_AS(ScalarField::get(15), InvalidField);
}

TEST_CASE("nu powers") {
  const ScalarField* f = ScalarField::get(3);
  CHECK(nu_power(f, 0) == Scalar(1));
  CHECK(nu_power(f, -2) == Scalar(3));
  CHECK(nu_power(f, -2).is_rational());
  Scalar nu = nu_power(f, 1);
  CHECK(nu.coeffs() == std::vector<mpq_class>{0, 0, mpq_class(1, 3), 0});
  CHECK(nu.to_string() == "0 + 0*t + 1/3*t^2");
  for (int k = -5; k <= 5; ++k)
    for (int j = -5; j <= 5; ++j) CHECK(nu_power(f, k) * nu_power(f, j) == nu_power(f, k + j));
  Scalar nu0 = Scalar::t(f).inv();
  CHECK(nu0 * nu0 == nu);
  CHECK(nu_half_power(f, 1) == nu0);
  CHECK(q_half_power(f, 1) * q_half_power(f, 1) == Scalar(3));
  CHECK(nu.inv() * nu == Scalar(1));
  CHECK((nu + (-nu)).is_zero());
}

TEST_CASE("field axioms against floating evaluation") {
  std::mt19937 rng(7);
  for (int q : {3, 5, 9, 25, 81}) {
    const ScalarField* f = ScalarField::get(q);
    for (int rep = 0; rep < 40; ++rep) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(eval(a + b, q) == doctest::Approx(eval(a, q) + eval(b, q)));
      CHECK(eval(a * b, q) == doctest::Approx(eval(a, q) * eval(b, q)).epsilon(1e-9));
      if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
      auto [lo, hi] = a.enclose(40);
      CHECK(lo.get_d() <= eval(a, q) + 1e-9);
      CHECK(hi.get_d() >= eval(a, q) - 1e-9);
      double da = eval(a, q), db = eval(b, q);
      if (std::abs(da - db) > 1e-9) CHECK(((a < b) == (da < db)));
    }
  }
}

TEST_CASE("ordering is total and exact") {
  const ScalarField* f = ScalarField::get(5);
  Scalar t = Scalar::t(f);
  CHECK(t > Scalar(1));
  CHECK(t * t < Scalar(3));
  CHECK(t * t > Scalar(2));
  CHECK((t - t) == Scalar(0));
  CHECK((t <=> t) == std::strong_ordering::equal);
  CHECK(Scalar(mpq_class(1, 3)) < Scalar(mpq_class(1, 2)));
}

TEST_CASE("errors and mixing") {
  CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar::t(ScalarField::get(3)) + Scalar::t(ScalarField::get(5)), ContractViolation);
  Scalar r = Scalar(2) + Scalar::t(ScalarField::get(3));
  CHECK(r.to_string() == "2 + 1*t");
  CHECK(Scalar(mpq_class(1, 3)).to_string() == "1/3");
}
