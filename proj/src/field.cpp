#include "arcmodel/field.hpp"

#include <charconv>

namespace arcmodel {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u128(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

bool miller_rabin(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  u64 x = 1, base = a % n, e = d;
  while (e) {
    if (e & 1) x = mulmod_u128(x, base, n);
    base = mulmod_u128(base, base, n);
    e >>= 1;
  }
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u128(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // deterministic base set for 64-bit integers
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(u64 p) {
  require(p >= 2 && p < (1ull << 62), ErrorCode::SchemaError,
          "prime field characteristic out of range");
  require(is_prime_u64(p), ErrorCode::SchemaError,
          "field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p);
}

u64 mod_add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 mod_sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mod_mul(u64 a, u64 b, u64 p) { return mulmod_u128(a, b, p); }

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 x = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) x = mod_mul(x, b, p);
    b = mod_mul(b, b, p);
    e >>= 1;
  }
  return x;
}

u64 mod_inv(u64 a, u64 p) {
  // extended Euclid on (a, p), p prime, a != 0 mod p
  a %= p;
  require(a != 0, ErrorCode::DivisionByZeroCoefficient,
          "inverse of 0 in F" + std::to_string(p));
  long long t = 0, nt = 1;
  long long r = (long long)p, nr = (long long)a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += (long long)p;
  return (u64)t;
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rationals()) {
    s.rat_ = BigRational(v);
  } else {
    long long m = v % (long long)f.p;
    if (m < 0) m += (long long)f.p;
    s.rem_ = (u64)m;
  }
  return s;
}

Scalar Scalar::from_rational(const FieldSpec& f, const BigInt& num,
                             const BigInt& den) {
  require(den != 0, ErrorCode::DivisionByZeroCoefficient,
          "zero denominator");
  Scalar s;
  s.field_ = f;
  if (f.is_rationals()) {
    BigInt n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    s.rat_ = BigRational(n, d);
  } else {
    BigInt p = f.p;
    BigInt n = num % p;
    if (n < 0) n += p;
    BigInt d = den % p;
    if (d < 0) d += p;
    require(d != 0, ErrorCode::DivisionByZeroCoefficient,
            "denominator divisible by " + std::to_string(f.p));
    u64 nn = (u64)n, dd = (u64)d;
    s.rem_ = mod_mul(nn, mod_inv(dd, f.p), f.p);
  }
  return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
  // [-]digits[/digits]
  require(!text.empty(), ErrorCode::SyntaxError, "empty number literal");
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '-') {
    neg = true;
    ++i;
  }
  require(i < text.size() && std::isdigit((unsigned char)text[i]),
          ErrorCode::SyntaxError, "bad number literal '" + text + "'");
  BigInt num = 0;
  while (i < text.size() && std::isdigit((unsigned char)text[i])) {
    num = num * 10 + (text[i] - '0');
    ++i;
  }
  BigInt den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    require(i < text.size() && std::isdigit((unsigned char)text[i]),
            ErrorCode::SyntaxError, "bad number literal '" + text + "'");
    den = 0;
    while (i < text.size() && std::isdigit((unsigned char)text[i])) {
      den = den * 10 + (text[i] - '0');
      ++i;
    }
  }
  require(i == text.size(), ErrorCode::SyntaxError,
          "trailing characters in number literal '" + text + "'");
  if (neg) num = -num;
  return from_rational(f, num, den);
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_.is_zero() : rem_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : rem_ == 1 % field_.p;
}

void Scalar::check_same_field(const Scalar& o) const {
  require(field_ == o.field_, ErrorCode::DomainMismatch,
          "scalar fields differ: " + field_.to_string() + " vs " +
              o.field_.to_string());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rationals())
    s.rat_ = -rat_;
  else
    s.rem_ = rem_ == 0 ? 0 : field_.p - rem_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rationals())
    s.rat_ = BigRational(rat_ + o.rat_);
  else
    s.rem_ = mod_add(rem_, o.rem_, field_.p);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rationals())
    s.rat_ = BigRational(rat_ - o.rat_);
  else
    s.rem_ = mod_sub(rem_, o.rem_, field_.p);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s = *this;
  if (field_.is_rationals())
    s.rat_ = BigRational(rat_ * o.rat_);
  else
    s.rem_ = mod_mul(rem_, o.rem_, field_.p);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  require(!is_zero(), ErrorCode::DivisionByZeroCoefficient,
          "inverse of zero scalar");
  Scalar s = *this;
  if (field_.is_rationals())
    s.rat_ = BigRational(1) / rat_;
  else
    s.rem_ = mod_inv(rem_, field_.p);
  return s;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar acc = Scalar::one(field_);
  Scalar base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Scalar Scalar::times_int(long long k) const {
  return *this * Scalar::from_int(field_, k);
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : rem_ == o.rem_;
}

std::string Scalar::to_string() const {
  if (!field_.is_rationals()) return std::to_string(rem_);
  std::string s = numerator(rat_).str();
  if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
  return s;
}

}  // namespace arcmodel
