#include "aca/scalar.hpp"

#include <stdexcept>

namespace aca {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field rationals() { return Field{0}; }

Field prime_field(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return Field{p};
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

// extended Euclid, residue inverse mod p
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("residue has no inverse");
  return mod_reduce(t, p);
}

}  // namespace

Scalar Scalar::of(const Field& f, long v) {
  Scalar s;
  s.field_ = f;
  if (f.rational())
    s.rat_ = v;
  else
    s.res_ = mod_reduce(v, f.p);
  return s;
}

Scalar Scalar::of(const Field& f, const mpz_class& v) {
  Scalar s;
  s.field_ = f;
  if (f.rational()) {
    s.rat_ = v;
  } else {
    mpz_class r = v % f.p;
    if (r < 0) r += f.p;
    s.res_ = static_cast<std::int64_t>(r.get_si());
  }
  return s;
}

Scalar Scalar::of(const Field& f, const mpq_class& v) {
  Scalar s;
  s.field_ = f;
  if (f.rational()) {
    s.rat_ = v;
    s.rat_.canonicalize();
  } else {
    Scalar num = of(f, v.get_num());
    Scalar den = of(f, v.get_den());
    if (den.is_zero()) throw std::domain_error("denominator divisible by the modulus");
    s.res_ = (num * den.inverse()).res_;
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::domain_error("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

bool Scalar::is_zero() const { return field_.rational() ? rat_ == 0 : res_ == 0; }
bool Scalar::is_one() const { return field_.rational() ? rat_ == 1 : res_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.rational())
    s.rat_ = rat_ + o.rat_;
  else
    s.res_ = (res_ + o.res_) % field_.p;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.rational())
    s.rat_ = rat_ - o.rat_;
  else
    s.res_ = mod_reduce(res_ - o.res_, field_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.rational())
    s.rat_ = rat_ * o.rat_;
  else
    s.res_ = (res_ * o.res_) % field_.p;  // p < 2^31, product fits
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.rational())
    s.rat_ = -rat_;
  else
    s.res_ = res_ == 0 ? 0 : field_.p - res_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar s;
  s.field_ = field_;
  if (field_.rational())
    s.rat_ = 1 / rat_;
  else
    s.res_ = mod_inverse(res_, field_.p);
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar acc = one(field_);
  Scalar base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return field_.rational() ? rat_ == o.rat_ : res_ == o.res_;
}

bool Scalar::operator<(const Scalar& o) const {
  check_same(o);
  return field_.rational() ? rat_ < o.rat_ : res_ < o.res_;
}

std::int64_t Scalar::residue() const {
  if (field_.rational()) throw std::domain_error("residue() on a rational");
  return res_;
}

const mpq_class& Scalar::rat() const {
  if (!field_.rational()) throw std::domain_error("rat() on a prime-field element");
  return rat_;
}

std::string Scalar::str() const {
  if (field_.rational()) return rat_.get_str();
  return std::to_string(res_);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar literal '" + text + "'");
  q.canonicalize();
  return of(f, q);
}

}  // namespace aca
