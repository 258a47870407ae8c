#include <doctest.h>

#include "arcmodel/rng.hpp"
#include "arcmodel/testring.hpp"

using namespace arcmodel;

namespace {

TestElem rand_elem(Rng& rng, const TestRingPtr& A) {
  std::vector<Scalar> coords;
  for (std::size_t i = 0; i < A->dimension(); ++i)
    coords.push_back(rng.scalar(A->base()));
  return TestElem(A, std::move(coords));
}

}  // namespace

TEST_CASE("dual numbers over F5") {
  auto A = TestRing::make(FieldSpec::prime(5), {"e"}, {{2}});
  CHECK(A->dimension() == 2);
  CHECK(A->nilpotency_index() == 2);
  CHECK(A->basis_monomial_name(0) == "1");
  CHECK(A->basis_monomial_name(1) == "e");

  auto e = TestElem::generator(A, 0);
  CHECK((e * e).is_zero());
  CHECK(e.m_level() == 1);
}

TEST_CASE("square-zero ring on two generators") {
  auto A = TestRing::make(FieldSpec::rationals(), {"e1", "e2"},
                          {{2, 0}, {0, 2}, {1, 1}});
  CHECK(A->dimension() == 3);  // 1, e1, e2
  CHECK(A->nilpotency_index() == 2);
  auto e1 = TestElem::generator(A, 0);
  auto e2 = TestElem::generator(A, 1);
  CHECK((e1 * e2).is_zero());
  CHECK(!(e1 + e2).is_zero());
}

TEST_CASE("(1+e)(1-e) = 1 in Q[e]/e^2") {
  auto A = TestRing::make(FieldSpec::rationals(), {"e"}, {{2}});
  auto one = TestElem::one_of(A);
  auto e = TestElem::generator(A, 0);
  CHECK((one + e) * (one - e) == one);
}

TEST_CASE("non-nilpotent relation sets are rejected") {
  CHECK_THROWS_AS(
      TestRing::make(FieldSpec::rationals(), {"e1", "e2"}, {{2, 0}, {1, 1}}),
      Error);
  try {
    TestRing::make(FieldSpec::rationals(), {"e"}, {});
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotNilpotent);
  }
}

TEST_CASE("cube ring arithmetic and inverse") {
  auto A = TestRing::make(FieldSpec::prime(7), {"e"}, {{3}});
  CHECK(A->dimension() == 3);
  CHECK(A->nilpotency_index() == 3);
  auto one = TestElem::one_of(A);
  auto e = TestElem::generator(A, 0);
  auto x = one + e;  // unit
  auto inv = x.inverse();
  CHECK(x * inv == one);
  CHECK(inv == one - e + e * e);
  CHECK_THROWS_AS(e.inverse(), Error);
}

TEST_CASE("reduce_mod_m is a ring homomorphism to the base field") {
  Rng rng(5);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    auto A = TestRing::make(field, {"e1", "e2"}, {{2, 0}, {0, 3}, {1, 1}});
    for (int i = 0; i < 50; ++i) {
      auto a = rand_elem(rng, A);
      auto b = rand_elem(rng, A);
      CHECK((a + b).reduce_mod_m() == a.reduce_mod_m() + b.reduce_mod_m());
      CHECK((a * b).reduce_mod_m() == a.reduce_mod_m() * b.reduce_mod_m());
    }
    CHECK(TestElem::one_of(A).reduce_mod_m().is_one());
  }
}

TEST_CASE("test-ring ring axioms on random triples") {
  Rng rng(9);
  auto A = TestRing::make(FieldSpec::prime(101), {"e1", "e2"},
                          {{3, 0}, {0, 2}, {2, 1}});
  for (int i = 0; i < 50; ++i) {
    auto a = rand_elem(rng, A);
    auto b = rand_elem(rng, A);
    auto c = rand_elem(rng, A);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("unit inversion over every supported shape") {
  Rng rng(13);
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (auto A : {TestRing::make(field, {"e"}, {{2}}),
                   TestRing::make(field, {"e"}, {{4}}),
                   TestRing::make(field, {"e1", "e2"}, {{2, 0}, {0, 2}})}) {
      for (int i = 0; i < 30; ++i) {
        auto x = rand_elem(rng, A);
        if (!x.is_unit()) continue;
        CHECK(x * x.inverse() == TestElem::one_of(A));
      }
    }
  }
}
