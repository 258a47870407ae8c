/* Exact coefficient arithmetic over Q (arbitrary precision rationals) and
   prime fields F_p for 64-bit primes. A Scalar knows its field, so mixed
   operands are rejected with DomainMismatch instead of producing garbage. */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "arcmodel/errors.hpp"

namespace arcmodel {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

bool is_prime_u64(std::uint64_t n);

struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;  // only meaningful for PrimeField

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p);

  bool is_rationals() const { return kind == Kind::Rationals; }
  std::uint64_t characteristic() const {
    return kind == Kind::Rationals ? 0 : p;
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string to_string() const;
};

// modular helpers (p < 2^63 so sums never overflow)
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);  // a != 0 mod p
std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);

class Scalar {
 public:
  Scalar() = default;  // zero of Q; prefer zero(field)
  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long long v);
  static Scalar from_rational(const FieldSpec& f, const BigInt& num,
                              const BigInt& den);
  // exact string form: "-3/8", "17"; in F_p the canonical residue "0".."p-1"
  static Scalar parse(const FieldSpec& f, const std::string& text);

  const FieldSpec& field() const { return field_; }

  // context-preserving identities (shared coefficient-ring protocol)
  Scalar zero() const { return Scalar::zero(field_); }
  Scalar one() const { return Scalar::one(field_); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // o must be nonzero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  Scalar times_int(long long k) const;  // scalar * (k mod char)

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

  // Only valid in the respective mode; used by serialization and hashing.
  const BigRational& rational_value() const { return rat_; }
  std::uint64_t residue_value() const { return rem_; }

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_ = FieldSpec::rationals();
  BigRational rat_;        // Q payload
  std::uint64_t rem_ = 0;  // F_p payload
};

}  // namespace arcmodel
