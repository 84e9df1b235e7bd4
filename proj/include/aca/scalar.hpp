#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace aca {

// Coefficient domain: the rationals (p == 0) or a prime field F_p.
struct Field {
  std::uint32_t p = 0;

  bool rational() const { return p == 0; }
  bool operator==(const Field&) const = default;
  std::string name() const { return p == 0 ? std::string("Q") : "F" + std::to_string(p); }
};

bool is_prime(std::uint64_t n);
Field rationals();
Field prime_field(std::uint32_t p);

// Exact element of F_p or Q. Prime-field residues live in [0, p);
// rationals are kept in lowest terms with positive denominator
// (mpq_class canonicalizes on every operation).
class Scalar {
 public:
  Scalar() = default;  // 0 over Q

  static Scalar of(const Field& f, long v);
  static Scalar of(const Field& f, const mpz_class& v);
  static Scalar of(const Field& f, const mpq_class& v);
  static Scalar zero(const Field& f) { return of(f, 0L); }
  static Scalar one(const Field& f) { return of(f, 1L); }

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // total order within one field

  std::int64_t residue() const;  // F_p backends
  const mpq_class& rat() const;  // Q backend

  std::string str() const;
  static Scalar parse(const Field& f, const std::string& text);

 private:
  Field field_;
  std::int64_t res_ = 0;
  mpq_class rat_ = 0;

  void check_same(const Scalar& o) const;
};

}  // namespace aca
