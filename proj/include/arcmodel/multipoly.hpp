/* Sparse multivariate polynomials over an exact coefficient ring.
   Terms are kept in canonical form: degree-lexicographic on the declared
   variable order, descending, no zero coefficients, no duplicate monomials.

   The coefficient type C must provide: +, -, unary -, *, ==, is_zero(),
   zero(), one() (context-preserving identities), times_int(), to_string().
   Scalar and TestElem satisfy this, and MultiPoly itself does, so polynomial
   rings can be nested where symbolic computations need it. */

#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "arcmodel/errors.hpp"
#include "arcmodel/field.hpp"
#include "arcmodel/varset.hpp"

namespace arcmodel {

template <typename C>
class MultiPoly {
 public:
  struct Term {
    ExpVec exp;
    C coeff;
  };

  MultiPoly() = default;

  MultiPoly(VarSetPtr vars, const C& proto)
      : vars_(std::move(vars)), proto_(proto.zero()) {}

  static MultiPoly zero_poly(VarSetPtr vars, const C& proto) {
    return MultiPoly(std::move(vars), proto);
  }

  static MultiPoly constant(VarSetPtr vars, const C& value) {
    MultiPoly p(vars, value);
    if (!value.is_zero())
      p.terms_.push_back({ExpVec(p.vars_->size(), 0), value});
    return p;
  }

  static MultiPoly variable(VarSetPtr vars, std::size_t idx, const C& one) {
    MultiPoly p(vars, one);
    ExpVec e(p.vars_->size(), 0);
    require(idx < e.size(), ErrorCode::UnknownVariable,
            "variable index out of range");
    e[idx] = 1;
    p.terms_.push_back({std::move(e), one});
    return p;
  }

  static MultiPoly monomial(VarSetPtr vars, ExpVec e, const C& coeff) {
    MultiPoly p(vars, coeff);
    require(e.size() == p.vars_->size(), ErrorCode::DomainMismatch,
            "exponent vector length mismatch");
    if (!coeff.is_zero()) p.terms_.push_back({std::move(e), coeff});
    return p;
  }

  static MultiPoly from_terms(VarSetPtr vars, const C& proto,
                              std::vector<Term> raw) {
    MultiPoly p(vars, proto);
    std::map<ExpVec, C, DeglexDesc> acc;
    for (auto& t : raw) {
      require(t.exp.size() == p.vars_->size(), ErrorCode::DomainMismatch,
              "exponent vector length mismatch");
      auto it = acc.find(t.exp);
      if (it == acc.end())
        acc.emplace(std::move(t.exp), std::move(t.coeff));
      else
        it->second = it->second + t.coeff;
    }
    for (auto& [e, c] : acc)
      if (!c.is_zero()) p.terms_.push_back({e, c});
    return p;
  }

  const VarSetPtr& vars() const { return vars_; }
  const C& coeff_proto() const { return proto_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_one() const {
    return terms_.size() == 1 && total_degree(terms_[0].exp) == 0 &&
           terms_[0].coeff.is_one();
  }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_[0].exp) == 0);
  }

  // total degree; -1 for the zero polynomial
  long long degree() const {
    long long d = -1;
    for (const auto& t : terms_)
      d = std::max(d, (long long)total_degree(t.exp));
    return d;
  }

  // leading term in the canonical (deglex) order
  const Term& leading_term() const {
    require(!terms_.empty(), ErrorCode::Internal,
            "leading term of zero polynomial");
    return terms_.front();
  }

  C coefficient(const ExpVec& e) const {
    for (const auto& t : terms_)
      if (t.exp == e) return t.coeff;
    return proto_;
  }

  C constant_term() const { return coefficient(ExpVec(vars_->size(), 0)); }

  // ---- ring protocol ----
  MultiPoly zero() const { return MultiPoly(vars_, proto_); }
  MultiPoly one() const { return constant(vars_, proto_.one()); }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(vars_, proto_);
    r.terms_ = merge(terms_, o.terms_, false);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(vars_, proto_);
    r.terms_ = merge(terms_, o.terms_, true);
    return r;
  }

  MultiPoly operator*(const MultiPoly& o) const {
    check_compatible(o);
    std::map<ExpVec, C, DeglexDesc> acc;
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        ExpVec e = exp_add(a.exp, b.exp);
        C c = a.coeff * b.coeff;
        auto it = acc.find(e);
        if (it == acc.end())
          acc.emplace(std::move(e), std::move(c));
        else
          it->second = it->second + c;
      }
    }
    MultiPoly r(vars_, proto_);
    for (auto& [e, c] : acc)
      if (!c.is_zero()) r.terms_.push_back({e, c});
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const C& c) const {
    MultiPoly r(vars_, proto_);
    if (c.is_zero()) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    // products can vanish over rings with zero divisors (test rings)
    std::erase_if(r.terms_, [](const Term& t) { return t.coeff.is_zero(); });
    return r;
  }

  MultiPoly times_int(long long k) const {
    return scaled(proto_.one().times_int(k));
  }

  MultiPoly pow(std::uint64_t e) const {
    MultiPoly acc = one();
    MultiPoly base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const MultiPoly& o) const {
    if (!same_varset(vars_, o.vars_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].exp != o.terms_[i].exp) return false;
      if (!(terms_[i].coeff == o.terms_[i].coeff)) return false;
    }
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly derivative(std::size_t var) const {
    require(var < vars_->size(), ErrorCode::UnknownVariable,
            "derivative variable index out of range");
    MultiPoly r(vars_, proto_);
    for (const auto& t : terms_) {
      if (t.exp[var] == 0) continue;
      C c = t.coeff.times_int((long long)t.exp[var]);
      if (c.is_zero()) continue;  // positive characteristic
      ExpVec e = t.exp;
      e[var] -= 1;
      r.terms_.push_back({std::move(e), std::move(c)});
    }
    // canonical order is preserved... only within equal degrees; resort
    r.sort_canonical();
    return r;
  }

  // evaluation at coefficients of the same ring
  C eval(std::span<const C> point) const {
    require(point.size() == vars_->size(), ErrorCode::DomainMismatch,
            "evaluation point arity mismatch");
    C acc = proto_;
    for (const auto& t : terms_) {
      C m = t.coeff;
      for (std::size_t v = 0; v < point.size(); ++v) {
        for (std::uint32_t k = 0; k < t.exp[v]; ++k) m = m * point[v];
      }
      acc = acc + m;
    }
    return acc;
  }

  // ring homomorphism sending one variable to a polynomial of the same ring
  MultiPoly substitute(std::size_t var, const MultiPoly& g) const;

  std::string to_string() const;

 private:
  struct DeglexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
      return compare_deglex(a, b) > 0;
    }
  };

  void check_compatible(const MultiPoly& o) const {
    require(same_varset(vars_, o.vars_), ErrorCode::DomainMismatch,
            "polynomials over different variable sets");
  }

  void sort_canonical() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return compare_deglex(a.exp, b.exp) > 0;
    });
  }

  static std::vector<Term> merge(const std::vector<Term>& a,
                                 const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp;
      if (i == a.size())
        cmp = -1;
      else if (j == b.size())
        cmp = 1;
      else
        cmp = compare_deglex(a[i].exp, b[j].exp);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        Term t = b[j++];
        if (subtract) t.coeff = -t.coeff;
        out.push_back(std::move(t));
      } else {
        C c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
        if (!c.is_zero()) out.push_back({a[i].exp, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  VarSetPtr vars_;
  C proto_;  // zero coefficient carrying the ring context
  std::vector<Term> terms_;
};

// Evaluate f in an arbitrary commutative ring R: args gives one R-value per
// variable and embed lifts coefficients into R. Powers are cached per
// variable. R follows the same ring protocol as coefficient types.
template <typename C, typename R, typename Embed>
R eval_poly(const MultiPoly<C>& f, std::span<const R> args, Embed&& embed,
            const R& zero_proto) {
  require(args.size() == f.vars()->size(), ErrorCode::DomainMismatch,
          "eval_poly arity mismatch");
  std::vector<std::vector<R>> pows(args.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const R& {
    auto& cache = pows[v];
    if (cache.empty()) cache.push_back(zero_proto.one());
    while (cache.size() <= e) cache.push_back(cache.back() * args[v]);
    return cache[e];
  };
  R acc = zero_proto.zero();
  for (const auto& t : f.terms()) {
    R m = embed(t.coeff);
    for (std::size_t v = 0; v < args.size(); ++v) {
      if (t.exp[v] > 0) m = m * power(v, t.exp[v]);
    }
    acc = acc + m;
  }
  return acc;
}

template <typename C>
MultiPoly<C> MultiPoly<C>::substitute(std::size_t var,
                                     const MultiPoly& g) const {
  check_compatible(g);
  require(var < vars_->size(), ErrorCode::UnknownVariable,
          "substitution variable index out of range");
  std::vector<MultiPoly> args;
  args.reserve(vars_->size());
  for (std::size_t v = 0; v < vars_->size(); ++v) {
    if (v == var)
      args.push_back(g);
    else
      args.push_back(variable(vars_, v, proto_.one()));
  }
  return eval_poly<C, MultiPoly>(
      *this, std::span<const MultiPoly>(args),
      [&](const C& c) { return constant(vars_, c); }, zero());
}

template <typename C>
std::string MultiPoly<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string cs = t.coeff.to_string();
    bool negative = !cs.empty() && cs[0] == '-';
    if (first) {
      first = false;
    } else if (negative) {
      out += " - ";
      cs = cs.substr(1);
    } else {
      out += " + ";
    }
    std::string mono;
    for (std::size_t v = 0; v < vars_->size(); ++v) {
      if (t.exp[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_->name(v);
      if (t.exp[v] > 1) mono += "^" + std::to_string(t.exp[v]);
    }
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

// ---- small polynomial matrices (Jacobians, adjugates) ----

template <typename C>
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, MultiPoly<C> fill)
      : rows_(rows),
        cols_(cols),
        proto_(fill.zero()),
        entries_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const MultiPoly<C>& proto() const { return proto_; }

  MultiPoly<C>& at(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const MultiPoly<C>& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  PolyMatrix minor_matrix(std::size_t di, std::size_t dj) const {
    PolyMatrix m(rows_ - 1, cols_ - 1, proto_);
    for (std::size_t i = 0, r = 0; i < rows_; ++i) {
      if (i == di) continue;
      for (std::size_t j = 0, c = 0; j < cols_; ++j) {
        if (j == dj) continue;
        m.at(r, c) = at(i, j);
        ++c;
      }
      ++r;
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  MultiPoly<C> proto_;
  std::vector<MultiPoly<C>> entries_;
};

template <typename C>
MultiPoly<C> det(const PolyMatrix<C>& m) {
  require(m.rows() == m.cols(), ErrorCode::NotSquare,
          "determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return m.proto().one();  // empty-minor convention
  if (n == 1) return m.at(0, 0);
  MultiPoly<C> acc = m.proto();
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    MultiPoly<C> cof = m.at(0, j) * det(m.minor_matrix(0, j));
    if (j % 2)
      acc -= cof;
    else
      acc += cof;
  }
  return acc;
}

// adjugate: M * adjugate(M) = det(M) * I; the 1x1 adjugate is (1)
template <typename C>
PolyMatrix<C> adjugate(const PolyMatrix<C>& m) {
  require(m.rows() == m.cols(), ErrorCode::NotSquare,
          "adjugate of non-square matrix");
  std::size_t n = m.rows();
  PolyMatrix<C> adj(n, n, m.proto());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly<C> c = det(m.minor_matrix(i, j));
      if ((i + j) % 2) c = -c;
      adj.at(j, i) = std::move(c);  // transpose of cofactors
    }
  }
  return adj;
}

using Poly = MultiPoly<Scalar>;

}  // namespace arcmodel
