/* Univariate polynomials in t over an arbitrary exact coefficient ring R
   (field scalars, test-ring elements, or multivariate polynomials for the
   symbolic model construction). Coefficients ascend; trailing zeros trimmed.
   Division by a monic polynomial is exact Euclidean division, valid over any
   commutative ring. */

#pragma once

#include <string>
#include <vector>

#include "arcmodel/errors.hpp"

namespace arcmodel {

template <typename R>
class UniPoly {
 public:
  UniPoly() = default;

  explicit UniPoly(R proto) : proto_(proto.zero()) {}

  UniPoly(R proto, std::vector<R> coeffs)
      : proto_(proto.zero()), coeffs_(std::move(coeffs)) {
    trim();
  }

  static UniPoly zero_of(const R& proto) { return UniPoly(proto); }

  static UniPoly constant(const R& value) {
    UniPoly p(value);
    if (!value.is_zero()) p.coeffs_.push_back(value);
    return p;
  }

  // c * t^e
  static UniPoly monomial(const R& c, std::size_t e) {
    UniPoly p(c);
    if (c.is_zero()) return p;
    p.coeffs_.assign(e + 1, c.zero());
    p.coeffs_[e] = c;
    return p;
  }

  static UniPoly t_power(const R& proto, std::size_t e) {
    return monomial(proto.one(), e);
  }

  const R& proto() const { return proto_; }
  const std::vector<R>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1
  long long degree() const { return (long long)coeffs_.size() - 1; }

  const R& coefficient(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : proto_;
  }

  R leading_coefficient() const {
    return coeffs_.empty() ? proto_ : coeffs_.back();
  }

  bool is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
  }

  // index of the lowest nonzero coefficient; -1 for zero
  long long order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return (long long)i;
    return -1;
  }

  UniPoly zero() const { return UniPoly(proto_); }
  UniPoly one() const { return constant(proto_.one()); }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly r(proto_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), proto_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] = coefficient(i) + o.coefficient(i);
    r.trim();
    return r;
  }

  UniPoly operator-(const UniPoly& o) const {
    UniPoly r(proto_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), proto_);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
      r.coeffs_[i] = coefficient(i) - o.coefficient(i);
    r.trim();
    return r;
  }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(proto_);
    UniPoly r(proto_);
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, proto_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        if (o.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
      }
    }
    r.trim();
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  UniPoly scaled(const R& c) const {
    UniPoly r(proto_);
    if (c.is_zero()) return r;
    r.coeffs_ = coeffs_;
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
  }

  UniPoly times_int(long long k) const {
    return scaled(proto_.one().times_int(k));
  }

  UniPoly shifted(std::size_t e) const {  // * t^e
    if (is_zero()) return *this;
    UniPoly r(proto_);
    r.coeffs_.assign(coeffs_.size() + e, proto_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[e + i] = coeffs_[i];
    return r;
  }

  // coefficients of t^lo .. t^(hi-1), shifted down by lo
  UniPoly slice(std::size_t lo, std::size_t hi) const {
    UniPoly r(proto_);
    for (std::size_t i = lo; i < hi && i < coeffs_.size(); ++i)
      r.coeffs_.push_back(coeffs_[i]);
    r.trim();
    return r;
  }

  UniPoly truncated(std::size_t deg_lt) const { return slice(0, deg_lt); }

  // quotient by t^e; requires the low coefficients to vanish
  UniPoly div_t_power(std::size_t e) const {
    for (std::size_t i = 0; i < e && i < coeffs_.size(); ++i)
      require(coeffs_[i].is_zero(), ErrorCode::Internal,
              "div_t_power on a polynomial with nonzero low coefficients");
    return slice(e, coeffs_.size());
  }

  bool operator==(const UniPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!(coeffs_[i] == o.coeffs_[i])) return false;
    return true;
  }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  std::string to_string(const std::string& var = "t") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (coeffs_[i].is_zero()) continue;
      std::string cs = coeffs_[i].to_string();
      std::string piece;
      if (i == 0)
        piece = cs;
      else {
        std::string tv = i == 1 ? var : var + "^" + std::to_string(i);
        piece = cs == "1" ? tv : "(" + cs + ")*" + tv;
      }
      if (out.empty())
        out = piece;
      else if (!piece.empty() && piece[0] == '-')
        out += " - " + piece.substr(1);
      else
        out += " + " + piece;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  R proto_;
  std::vector<R> coeffs_;
};

// Euclidean division by a monic divisor: num = quo * den + rem with
// deg rem < deg den, exact over any commutative ring.
template <typename R>
std::pair<UniPoly<R>, UniPoly<R>> monic_divrem(const UniPoly<R>& num,
                                               const UniPoly<R>& den) {
  require(den.is_monic(), ErrorCode::Internal,
          "monic_divrem requires a monic divisor");
  const long long d = den.degree();
  if (num.degree() < d) return {num.zero(), num};
  std::vector<R> rem(num.coeffs());
  std::vector<R> quo((std::size_t)(num.degree() - d + 1), num.proto());
  for (long long i = num.degree(); i >= d; --i) {
    R c = rem[(std::size_t)i];
    if (c.is_zero()) continue;
    quo[(std::size_t)(i - d)] = c;
    for (long long j = 0; j <= d; ++j) {
      rem[(std::size_t)(i - d + j)] =
          rem[(std::size_t)(i - d + j)] - c * den.coefficient((std::size_t)j);
    }
  }
  return {UniPoly<R>(num.proto(), std::move(quo)),
          UniPoly<R>(num.proto(), std::move(rem))};
}

}  // namespace arcmodel
