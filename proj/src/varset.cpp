#include "arcmodel/varset.hpp"

namespace arcmodel {

namespace {

int cmp_u64(std::uint64_t a, std::uint64_t b) {
  return a < b ? -1 : (a > b ? 1 : 0);
}

int lex_cmp(const ExpVec& a, const ExpVec& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int degrevlex_cmp(const ExpVec& a, const ExpVec& b, std::size_t lo,
                  std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (int c = cmp_u64(da, db)) return c;
  // last differing exponent: smaller wins
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int compare_deglex(const ExpVec& a, const ExpVec& b) {
  if (int c = cmp_u64(total_degree(a), total_degree(b))) return c;
  return lex_cmp(a, b, 0, a.size());
}

int MonomialOrder::compare(const ExpVec& a, const ExpVec& b) const {
  require(a.size() == b.size(), ErrorCode::DomainMismatch,
          "exponent vectors of different length");
  switch (kind) {
    case Kind::DegLex:
      return compare_deglex(a, b);
    case Kind::Lex:
      return lex_cmp(a, b, 0, a.size());
    case Kind::DegRevLex:
      return degrevlex_cmp(a, b, 0, a.size());
    case Kind::Elimination: {
      std::size_t lo = 0;
      for (int bs : block_sizes) {
        std::size_t hi = lo + (std::size_t)bs;
        require(hi <= a.size(), ErrorCode::DomainMismatch,
                "elimination blocks exceed variable count");
        if (int c = degrevlex_cmp(a, b, lo, hi)) return c;
        lo = hi;
      }
      if (lo < a.size()) return degrevlex_cmp(a, b, lo, a.size());
      return 0;
    }
  }
  return 0;
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case Kind::DegLex: return "deglex";
    case Kind::DegRevLex: return "degrevlex";
    case Kind::Lex: return "lex";
    case Kind::Elimination: {
      std::string s = "elimination(";
      for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(block_sizes[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace arcmodel
