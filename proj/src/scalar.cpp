#include "hallmod/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace hallmod {

namespace {

long integer_root(long q, int k) {
  long r = 0;
  while (true) {
    long next = r + 1, pw = 1;
    for (int i = 0; i < k; ++i) pw *= next;
    if (pw > q) return r;
    r = next;
  }
}

bool is_prime_power(long q) {
  long p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

mpq_class qpow(const mpq_class& b, long e) {
  mpq_class r = 1;
  mpq_class base = e < 0 ? mpq_class(1 / b) : b;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

}  // namespace

ScalarField::ScalarField(int q) : q_(q) {
  if (q < 3 || q % 2 == 0 || !is_prime_power(q))
    throw InvalidField("scalar field needs an odd prime power q >= 3, got " + std::to_string(q));
  long r4 = integer_root(q, 4), r2 = integer_root(q, 2);
  if (r4 * r4 * r4 * r4 == q) {
    deg_ = 1;
    root_ = r4;
  } else if (r2 * r2 == q) {
    deg_ = 2;
    root_ = r2;
  } else {
    deg_ = 4;
    root_ = q;
  }
}

const ScalarField* ScalarField::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<ScalarField>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto it = fields.find(q);
  if (it != fields.end()) return it->second.get();
  auto f = std::unique_ptr<ScalarField>(new ScalarField(q));
  const ScalarField* out = f.get();
  fields.emplace(q, std::move(f));
  return out;
}

std::vector<mpq_class> ScalarField::minimal_polynomial() const {
  std::vector<mpq_class> m(deg_ + 1, 0);
  m[0] = -root_;
  m[deg_] = 1;
  return m;
}

Scalar::Scalar(const ScalarField* f, std::vector<mpq_class> coeffs) : f_(f), c_(std::move(coeffs)) {
  if (f_ == nullptr) {
    if (c_.size() != 1) throw ContractViolation("rational scalar needs exactly one coefficient");
    return;
  }
  if (static_cast<int>(c_.size()) != f_->degree()) throw ContractViolation("coefficient count must equal field degree");
}

Scalar Scalar::t(const ScalarField* f) { return t_power(f, 1); }

Scalar Scalar::t_power(const ScalarField* f, long e) {
  long d = f->degree();
  long a = e >= 0 ? e / d : -((-e + d - 1) / d);
  long b = e - a * d;
  std::vector<mpq_class> c(d, 0);
  c[b] = qpow(f->root(), a);
  return Scalar(f, std::move(c));
}

std::vector<mpq_class> Scalar::coeffs() const { return c_; }

bool Scalar::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void Scalar::promote(const ScalarField* f) {
  if (f == nullptr || f_ == f) return;
  if (f_ != nullptr) throw ContractViolation("scalars from different fields");
  mpq_class c0 = c_[0];
  c_.assign(f->degree(), 0);
  c_[0] = c0;
  f_ = f;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar b = o;
  promote(b.f_);
  b.promote(f_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar b = o;
  promote(b.f_);
  b.promote(f_);
  std::size_t d = c_.size();
  if (d == 1) {
    c_[0] *= b.c_[0];
    return *this;
  }
  std::vector<mpq_class> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.c_[j] != 0) prod[i + j] += c_[i] * b.c_[j];
  }
  for (std::size_t k = 2 * d - 2; k >= d; --k) {
    if (prod[k] != 0) prod[k - d] += prod[k] * f_->root();
  }
  for (std::size_t i = 0; i < d; ++i) c_[i] = prod[i];
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  std::size_t d = c_.size();
  if (d == 1) return Scalar(f_, {mpq_class(1 / c_[0])});
  // Columns of the multiplication-by-this matrix are this * t^j.
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1, 0));
  for (std::size_t j = 0; j < d; ++j) {
    Scalar col = *this * Scalar::t_power(f_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.c_[i];
  }
  m[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t sel = c;
    while (m[sel][c] == 0) ++sel;
    std::swap(m[sel], m[c]);
    mpq_class s = 1 / m[c][c];
    for (auto& x : m[c]) x *= s;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = 0; j <= d; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<mpq_class> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = m[i][d];
  return Scalar(f_, std::move(x));
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

std::pair<mpq_class, mpq_class> Scalar::enclose(int precision_bits) const {
  if (f_ == nullptr || f_->degree() == 1) {
    mpq_class v = c_[0];
    if (f_ != nullptr) v = c_[0];
    return {v, v};
  }
  int d = f_->degree();
  mpq_class lo = 0, hi = f_->root() + 1;
  mpq_class eps(1);
  eps /= mpq_class(mpz_class(1) << precision_bits);
  while (hi - lo > eps) {
    mpq_class mid = (lo + hi) / 2;
    if (qpow(mid, d) <= f_->root())
      lo = mid;
    else
      hi = mid;
  }
  mpq_class vlo = 0, vhi = 0, plo = 1, phi = 1;
  for (int k = 0; k < d; ++k) {
    const mpq_class& c = c_[k];
    if (c >= 0) {
      vlo += c * plo;
      vhi += c * phi;
    } else {
      vlo += c * phi;
      vhi += c * plo;
    }
    plo *= lo;
    phi *= hi;
  }
  return {vlo, vhi};
}

int Scalar::sign() const {
  if (is_zero()) return 0;
  for (int bits = 16;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
  if (f_ == nullptr) return c_[0].get_str();
  int h = 0;
  for (int i = 0; i < static_cast<int>(c_.size()); ++i)
    if (c_[i] != 0) h = i;
  std::string s;
  for (int i = 0; i <= h; ++i) {
    if (i) s += " + ";
    s += c_[i].get_str();
    if (i == 1) s += "*t";
    if (i > 1) s += "*t^" + std::to_string(i);
  }
  return s;
}

Scalar nu_power(const ScalarField* f, long k) { return Scalar::t_power(f, -2 * k); }

Scalar nu_half_power(const ScalarField* f, long h) { return Scalar::t_power(f, -h); }

Scalar q_half_power(const ScalarField* f, long h) { return Scalar::t_power(f, 2 * h); }

}  // namespace hallmod
