#include "arcmodel/testring.hpp"

#include <algorithm>
#include <map>

namespace arcmodel {

namespace {

bool reduces_to_zero(const ExpVec& mono, const std::vector<ExpVec>& relations) {
  for (const auto& r : relations)
    if (divides(r, mono)) return true;
  return false;
}

}  // namespace

TestRingPtr TestRing::make(FieldSpec base, std::vector<std::string> generators,
                           std::vector<ExpVec> relations) {
  auto ring = std::shared_ptr<TestRing>(new TestRing());
  ring->base_ = base;
  ring->gens_ = std::move(generators);
  const std::size_t s = ring->gens_.size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      require(ring->gens_[i] != ring->gens_[j], ErrorCode::SchemaError,
              "duplicate test-ring generator '" + ring->gens_[i] + "'");

  for (const auto& r : relations) {
    require(r.size() == s, ErrorCode::DomainMismatch,
            "relation monomial arity mismatch");
    require(total_degree(r) >= 1, ErrorCode::SchemaError,
            "relation monomial must be nonconstant");
  }
  ring->relations_ = std::move(relations);

  // Nilpotency: every generator must admit a pure power inside the ideal,
  // i.e. some relation supported on that generator alone.
  std::vector<std::uint32_t> bound(s, 0);
  for (std::size_t g = 0; g < s; ++g) {
    for (const auto& r : ring->relations_) {
      bool pure = r[g] > 0;
      for (std::size_t j = 0; pure && j < s; ++j)
        if (j != g && r[j] > 0) pure = false;
      if (pure) {
        if (bound[g] == 0 || r[g] < bound[g]) bound[g] = r[g];
      }
    }
    require(bound[g] > 0, ErrorCode::NotNilpotent,
            "no power of generator '" + ring->gens_[g] +
                "' lies in the relations ideal");
  }

  // Standard monomials: exponents below the pure-power bounds that no
  // relation divides. Collected in deglex-ascending order.
  std::vector<ExpVec> all;
  ExpVec cur(s, 0);
  for (;;) {
    if (!reduces_to_zero(cur, ring->relations_)) all.push_back(cur);
    std::size_t k = 0;
    while (k < s) {
      if (cur[k] + 1 < bound[k]) {
        ++cur[k];
        break;
      }
      cur[k] = 0;
      ++k;
    }
    if (k == s) break;
  }
  std::sort(all.begin(), all.end(), [](const ExpVec& a, const ExpVec& b) {
    return compare_deglex(a, b) < 0;
  });
  ring->basis_ = std::move(all);

  int maxdeg = 0;
  ring->basis_degrees_.reserve(ring->basis_.size());
  for (const auto& b : ring->basis_) {
    int d = (int)total_degree(b);
    ring->basis_degrees_.push_back(d);
    maxdeg = std::max(maxdeg, d);
  }
  ring->nilpotency_index_ = maxdeg + 1;

  const std::size_t dim = ring->basis_.size();
  std::map<ExpVec, int> index;
  for (std::size_t i = 0; i < dim; ++i) index[ring->basis_[i]] = (int)i;
  ring->mul_table_.assign(dim * dim, -1);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      ExpVec prod = exp_add(ring->basis_[i], ring->basis_[j]);
      if (reduces_to_zero(prod, ring->relations_)) continue;
      auto it = index.find(prod);
      require(it != index.end(), ErrorCode::Internal,
              "standard monomial set not closed under products");
      ring->mul_table_[i * dim + j] = it->second;
    }
  }
  return ring;
}

std::string TestRing::basis_monomial_name(std::size_t i) const {
  const ExpVec& e = basis_[i];
  std::string out;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (e[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens_[g];
    if (e[g] > 1) out += "^" + std::to_string(e[g]);
  }
  return out.empty() ? "1" : out;
}

bool TestRing::same(const TestRingPtr& a, const TestRingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->base_ == b->base_ && a->gens_ == b->gens_ &&
         a->relations_ == b->relations_;
}

TestElem::TestElem(TestRingPtr ring, std::vector<Scalar> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  require(coords_.size() == ring_->dimension(), ErrorCode::DomainMismatch,
          "coordinate count does not match test-ring basis");
}

TestElem TestElem::zero_of(const TestRingPtr& ring) {
  return TestElem(ring, std::vector<Scalar>(ring->dimension(),
                                            Scalar::zero(ring->base())));
}

TestElem TestElem::one_of(const TestRingPtr& ring) {
  return embed(ring, Scalar::one(ring->base()));
}

TestElem TestElem::embed(const TestRingPtr& ring, const Scalar& c) {
  require(c.field() == ring->base(), ErrorCode::DomainMismatch,
          "scalar field does not match test-ring base");
  TestElem x = zero_of(ring);
  x.coords_[0] = c;
  return x;
}

TestElem TestElem::generator(const TestRingPtr& ring, std::size_t g) {
  require(g < ring->generators().size(), ErrorCode::UnknownVariable,
          "test-ring generator index out of range");
  ExpVec e(ring->generators().size(), 0);
  e[g] = 1;
  for (std::size_t i = 0; i < ring->dimension(); ++i) {
    if (ring->basis()[i] == e) return basis_element(ring, i);
  }
  // the generator itself may reduce to zero (degree-1 relation)
  return zero_of(ring);
}

TestElem TestElem::basis_element(const TestRingPtr& ring, std::size_t i) {
  TestElem x = zero_of(ring);
  x.coords_[i] = Scalar::one(ring->base());
  return x;
}

bool TestElem::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool TestElem::is_one() const {
  if (!coords_[0].is_one()) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

int TestElem::m_level() const {
  int level = ring_->nilpotency_index();
  bool any = false;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    any = true;
    level = std::min(level, ring_->basis_degree(i));
  }
  return any ? level : ring_->nilpotency_index();
}

void TestElem::check_same_ring(const TestElem& o) const {
  require(TestRing::same(ring_, o.ring_), ErrorCode::DomainMismatch,
          "test-ring elements from different rings");
}

TestElem TestElem::operator-() const {
  TestElem r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

TestElem TestElem::operator+(const TestElem& o) const {
  check_same_ring(o);
  TestElem r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] = r.coords_[i] + o.coords_[i];
  return r;
}

TestElem TestElem::operator-(const TestElem& o) const {
  check_same_ring(o);
  TestElem r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    r.coords_[i] = r.coords_[i] - o.coords_[i];
  return r;
}

TestElem TestElem::operator*(const TestElem& o) const {
  check_same_ring(o);
  TestElem r = zero_of(ring_);
  const std::size_t dim = coords_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (o.coords_[j].is_zero()) continue;
      int k = ring_->product_index(i, j);
      if (k < 0) continue;
      r.coords_[(std::size_t)k] += coords_[i] * o.coords_[j];
    }
  }
  return r;
}

TestElem TestElem::scaled(const Scalar& c) const {
  TestElem r = *this;
  for (auto& x : r.coords_) x = x * c;
  return r;
}

TestElem TestElem::times_int(long long k) const {
  return scaled(Scalar::from_int(ring_->base(), k));
}

TestElem TestElem::inverse() const {
  require(is_unit(), ErrorCode::DivisionByZeroCoefficient,
          "inverse of a non-unit test-ring element");
  // x = a(1 - z) with a = iota(sigma(x)) and z in m; geometric series stops
  // at the nilpotency index
  Scalar a_inv = coords_[0].inverse();
  TestElem z = one_of(ring_) - scaled(a_inv);
  TestElem acc = one_of(ring_);
  TestElem zp = z;
  for (int k = 1; k < ring_->nilpotency_index(); ++k) {
    acc += zp;
    zp *= z;
  }
  return acc.scaled(a_inv);
}

bool TestElem::operator==(const TestElem& o) const {
  if (!TestRing::same(ring_, o.ring_)) return false;
  return coords_ == o.coords_;
}

std::string TestElem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    std::string cs = coords_[i].to_string();
    std::string mono = ring_->basis_monomial_name(i);
    std::string piece;
    if (mono == "1")
      piece = cs;
    else if (cs == "1")
      piece = mono;
    else
      piece = cs + "*" + mono;
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace arcmodel
