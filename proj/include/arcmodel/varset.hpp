#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arcmodel/errors.hpp"

namespace arcmodel {

// Exponent vector; length always equals the variable count of the owning ring.
using ExpVec = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const ExpVec& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

inline bool divides(const ExpVec& a, const ExpVec& b) {
  // a | b componentwise
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

// An ordered list of variable names shared by the polynomials of one ring.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        require(names_[i] != names_[j], ErrorCode::SchemaError,
                "duplicate variable name '" + names_[i] + "'");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }

  bool operator==(const VarSet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

inline bool same_varset(const VarSetPtr& a, const VarSetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// Monomial orders. Storage order of polynomials is always DegLex on the
// declared variable order; Groebner computations pick their own order.
struct MonomialOrder {
  enum class Kind { DegLex, DegRevLex, Lex, Elimination };

  Kind kind = Kind::DegRevLex;
  // For Elimination: consecutive block sizes, compared block by block with
  // degrevlex inside each block. Monomials in earlier blocks dominate.
  std::vector<int> block_sizes;

  static MonomialOrder deglex() { return {Kind::DegLex, {}}; }
  static MonomialOrder degrevlex() { return {Kind::DegRevLex, {}}; }
  static MonomialOrder lex() { return {Kind::Lex, {}}; }
  static MonomialOrder elimination(std::vector<int> blocks) {
    return {Kind::Elimination, std::move(blocks)};
  }

  // > 0 if a comes after b (a is larger), < 0 if smaller, 0 if equal.
  int compare(const ExpVec& a, const ExpVec& b) const;

  bool less(const ExpVec& a, const ExpVec& b) const { return compare(a, b) < 0; }

  std::string to_string() const;
};

int compare_deglex(const ExpVec& a, const ExpVec& b);

}  // namespace arcmodel
