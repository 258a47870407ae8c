/* Finite-dimensional local Artinian algebras A = K[e1..es]/(monomial ideal)
   with nilpotent maximal ideal m = (e1..es). The defining ideal is generated
   by monomials, so normal forms are computed against a fixed standard-monomial
   basis and multiplication reduces through a precomputed table. The residue
   map sigma_A : A -> K is evaluation at e_i = 0, i.e. the basis-1 coordinate. */

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "arcmodel/field.hpp"
#include "arcmodel/varset.hpp"

namespace arcmodel {

class TestRing;
using TestRingPtr = std::shared_ptr<const TestRing>;

class TestRing {
 public:
  // relations: exponent vectors of the monomial generators of the ideal.
  // Fails with NotNilpotent when no power of (e1..es) lies in the ideal.
  static TestRingPtr make(FieldSpec base, std::vector<std::string> generators,
                          std::vector<ExpVec> relations);

  const FieldSpec& base() const { return base_; }
  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<ExpVec>& relations() const { return relations_; }
  const std::vector<ExpVec>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  int nilpotency_index() const { return nilpotency_index_; }

  // index into basis, or -1 when the product monomial reduces to zero
  int product_index(std::size_t i, std::size_t j) const {
    return mul_table_[i * basis_.size() + j];
  }

  // total degree of each basis monomial (m-adic level)
  int basis_degree(std::size_t i) const { return basis_degrees_[i]; }

  std::string basis_monomial_name(std::size_t i) const;

  static bool same(const TestRingPtr& a, const TestRingPtr& b);

 private:
  TestRing() = default;

  FieldSpec base_;
  std::vector<std::string> gens_;
  std::vector<ExpVec> relations_;
  std::vector<ExpVec> basis_;  // deglex ascending; basis_[0] = 1
  std::vector<int> basis_degrees_;
  std::vector<int> mul_table_;
  int nilpotency_index_ = 1;
};

class TestElem {
 public:
  TestElem() = default;
  TestElem(TestRingPtr ring, std::vector<Scalar> coords);

  static TestElem zero_of(const TestRingPtr& ring);
  static TestElem one_of(const TestRingPtr& ring);
  // coefficient-field section iota : K -> A
  static TestElem embed(const TestRingPtr& ring, const Scalar& c);
  static TestElem generator(const TestRingPtr& ring, std::size_t gen_index);
  static TestElem basis_element(const TestRingPtr& ring, std::size_t basis_index);

  const TestRingPtr& ring() const { return ring_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& coord(std::size_t i) const { return coords_[i]; }

  // sigma_A(x): the residue of x in the base field
  const Scalar& reduce_mod_m() const { return coords_[0]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const { return !coords_[0].is_zero(); }

  // smallest m-adic level of a supporting basis monomial;
  // nilpotency_index for the zero element (deepest possible level)
  int m_level() const;
  bool in_m_power(int k) const { return m_level() >= k; }

  TestElem zero() const { return zero_of(ring_); }
  TestElem one() const { return one_of(ring_); }

  TestElem operator-() const;
  TestElem operator+(const TestElem& o) const;
  TestElem operator-(const TestElem& o) const;
  TestElem operator*(const TestElem& o) const;
  TestElem& operator+=(const TestElem& o) { return *this = *this + o; }
  TestElem& operator-=(const TestElem& o) { return *this = *this - o; }
  TestElem& operator*=(const TestElem& o) { return *this = *this * o; }

  TestElem scaled(const Scalar& c) const;
  TestElem times_int(long long k) const;
  TestElem inverse() const;  // requires is_unit()

  bool operator==(const TestElem& o) const;
  bool operator!=(const TestElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same_ring(const TestElem& o) const;

  TestRingPtr ring_;
  std::vector<Scalar> coords_;  // one per basis monomial
};

}  // namespace arcmodel
