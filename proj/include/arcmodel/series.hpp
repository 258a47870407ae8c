/* Truncated power series: coefficients of t^0..t^N are exact, everything
   beyond t^N is unknown. Arithmetic follows conservative window rules: sums
   and products carry the minimum of the operand precisions, multiplying by an
   exact polynomial keeps precision, multiplying by t^e gains e. Order queries
   return BeyondPrecision instead of guessing. */

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arcmodel/errors.hpp"
#include "arcmodel/multipoly.hpp"
#include "arcmodel/unipoly.hpp"

namespace arcmodel {

// Result of an order query at finite precision: either the exact least index
// of a nonzero coefficient, or "all known coefficients vanish" at precision N.
struct SeriesOrd {
  std::optional<int> value;
  int precision = 0;

  bool finite() const { return value.has_value(); }
  bool beyond() const { return !value.has_value(); }

  std::string to_string() const {
    return finite() ? std::to_string(*value)
                    : "BeyondPrecision(" + std::to_string(precision) + ")";
  }
};

template <typename C>
class TruncSeries {
 public:
  TruncSeries() = default;

  // zero series at the given precision
  TruncSeries(const C& proto, int precision)
      : precision_(precision),
        coeffs_((std::size_t)precision + 1, proto.zero()) {
    require(precision >= 0, ErrorCode::PrecisionExhausted,
            "series precision must be nonnegative");
  }

  TruncSeries(std::vector<C> coeffs, int precision)
      : precision_(precision), coeffs_(std::move(coeffs)) {
    require(precision >= 0 && coeffs_.size() == (std::size_t)precision + 1,
            ErrorCode::DomainMismatch,
            "series coefficient count must equal precision + 1");
  }

  static TruncSeries from_poly(const UniPoly<C>& p, int precision) {
    TruncSeries s(p.proto(), precision);
    for (int i = 0; i <= precision; ++i) s.coeffs_[(std::size_t)i] = p.coefficient((std::size_t)i);
    return s;
  }

  int precision() const { return precision_; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& coefficient(std::size_t i) const { return coeffs_[i]; }
  const C& proto() const { return coeffs_[0]; }

  // the known coefficients as an exact polynomial representative
  UniPoly<C> representative() const {
    return UniPoly<C>(coeffs_[0].zero(), coeffs_);
  }

  bool known_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  SeriesOrd ord() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return SeriesOrd{(int)i, precision_};
    return SeriesOrd{std::nullopt, precision_};
  }

  // ---- ring protocol (zero/one keep this series' precision) ----
  bool is_zero() const { return known_zero(); }
  bool is_one() const {
    if (!coeffs_[0].is_one()) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }
  TruncSeries zero() const { return TruncSeries(coeffs_[0], precision_); }
  TruncSeries one() const {
    TruncSeries s(coeffs_[0], precision_);
    s.coeffs_[0] = coeffs_[0].one();
    return s;
  }

  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  TruncSeries operator+(const TruncSeries& o) const {
    int prec = std::min(precision_, o.precision_);
    TruncSeries r(coeffs_[0], prec);
    for (int i = 0; i <= prec; ++i)
      r.coeffs_[(std::size_t)i] = coeffs_[(std::size_t)i] + o.coeffs_[(std::size_t)i];
    return r;
  }

  TruncSeries operator-(const TruncSeries& o) const {
    int prec = std::min(precision_, o.precision_);
    TruncSeries r(coeffs_[0], prec);
    for (int i = 0; i <= prec; ++i)
      r.coeffs_[(std::size_t)i] = coeffs_[(std::size_t)i] - o.coeffs_[(std::size_t)i];
    return r;
  }

  TruncSeries operator*(const TruncSeries& o) const {
    int prec = std::min(precision_, o.precision_);
    TruncSeries r(coeffs_[0], prec);
    for (int i = 0; i <= prec; ++i) {
      if (coeffs_[(std::size_t)i].is_zero()) continue;
      for (int j = 0; i + j <= prec; ++j) {
        if (o.coeffs_[(std::size_t)j].is_zero()) continue;
        r.coeffs_[(std::size_t)(i + j)] =
            r.coeffs_[(std::size_t)(i + j)] +
            coeffs_[(std::size_t)i] * o.coeffs_[(std::size_t)j];
      }
    }
    return r;
  }

  TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
  TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  TruncSeries scaled(const C& c) const {
    TruncSeries r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    return r;
  }

  TruncSeries times_int(long long k) const {
    return scaled(coeffs_[0].one().times_int(k));
  }

  // multiplication by an exact polynomial keeps precision
  TruncSeries times_poly(const UniPoly<C>& p) const {
    TruncSeries r(coeffs_[0], precision_);
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
      const C& pc = p.coeffs()[j];
      if (pc.is_zero()) continue;
      for (int i = 0; i + (int)j <= precision_; ++i)
        r.coeffs_[(std::size_t)(i + (int)j)] =
            r.coeffs_[(std::size_t)(i + (int)j)] + coeffs_[(std::size_t)i] * pc;
    }
    return r;
  }

  TruncSeries truncated(int new_prec) const {
    require(new_prec >= 0 && new_prec <= precision_,
            ErrorCode::PrecisionExhausted, "cannot extend series precision");
    std::vector<C> c(coeffs_.begin(), coeffs_.begin() + new_prec + 1);
    return TruncSeries(std::move(c), new_prec);
  }

  // multiply by t^e: precision gains e
  TruncSeries shifted_up(int e) const {
    TruncSeries r(coeffs_[0], precision_ + e);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      r.coeffs_[i + (std::size_t)e] = coeffs_[i];
    return r;
  }

  // exact division by t^e; the low coefficients must vanish
  TruncSeries div_t_power(int e) const {
    require(precision_ >= e, ErrorCode::PrecisionExhausted,
            "not enough precision to divide by t^" + std::to_string(e));
    for (int i = 0; i < e; ++i)
      require(coeffs_[(std::size_t)i].is_zero(), ErrorCode::Internal,
              "div_t_power on series with nonzero low coefficients");
    std::vector<C> c(coeffs_.begin() + e, coeffs_.end());
    return TruncSeries(std::move(c), precision_ - e);
  }

  bool operator==(const TruncSeries& o) const {
    return precision_ == o.precision_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  // equality of all coefficients up to index w (inclusive)
  bool agrees_to(const TruncSeries& o, int w) const {
    if (w > precision_ || w > o.precision_) return false;
    for (int i = 0; i <= w; ++i)
      if (!(coeffs_[(std::size_t)i] == o.coeffs_[(std::size_t)i])) return false;
    return true;
  }

  std::string to_string() const {
    std::string out = representative().to_string();
    out += " + O(t^" + std::to_string(precision_ + 1) + ")";
    return out;
  }

 private:
  int precision_ = 0;
  std::vector<C> coeffs_;
};

// f(args...) where f has coefficients in the base field of the series'
// coefficient ring; result precision is the minimum argument precision.
template <typename C, typename Embed>
TruncSeries<C> compose_poly(const Poly& f, std::span<const TruncSeries<C>> args,
                            Embed&& embed, const C& coeff_proto,
                            int fallback_precision) {
  int prec = fallback_precision;
  if (!args.empty()) {
    prec = args[0].precision();
    for (const auto& a : args) prec = std::min(prec, a.precision());
  }
  TruncSeries<C> proto_series(coeff_proto, prec);
  return eval_poly<Scalar, TruncSeries<C>>(
      f, args,
      [&](const Scalar& c) { return proto_series.one().scaled(embed(c)); },
      proto_series);
}

// invert a unit series to its own precision
template <typename C>
TruncSeries<C> invert_series(const TruncSeries<C>& s) {
  const C c0 = s.coefficient(0);
  C c0_inv = c0.inverse();
  TruncSeries<C> r = s.zero();
  std::vector<C> out(r.coeffs());
  out[0] = c0_inv;
  for (int i = 1; i <= s.precision(); ++i) {
    C acc = c0.zero();
    for (int k = 1; k <= i; ++k) acc = acc + s.coefficient((std::size_t)k) * out[(std::size_t)(i - k)];
    out[(std::size_t)i] = -(c0_inv * acc);
  }
  return TruncSeries<C>(std::move(out), s.precision());
}

using ScalarSeries = TruncSeries<Scalar>;

}  // namespace arcmodel
