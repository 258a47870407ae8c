#include <doctest.h>

#include "arcmodel/multipoly.hpp"
#include "arcmodel/parser.hpp"
#include "arcmodel/rng.hpp"

using namespace arcmodel;

namespace {

Poly rand_poly(Rng& rng, const VarSetPtr& vars, const FieldSpec& f,
               std::uint32_t max_exp = 2) {
  std::vector<Poly::Term> terms;
  int nterms = (int)rng.below(5);
  for (int i = 0; i < nterms; ++i) {
    ExpVec e(vars->size());
    for (auto& x : e) x = (std::uint32_t)rng.below(max_exp + 1);
    terms.push_back({e, rng.scalar(f)});
  }
  return Poly::from_terms(vars, Scalar::zero(f), std::move(terms));
}

}  // namespace

TEST_CASE("basic arithmetic and derivatives") {
  auto Q = FieldSpec::rationals();
  auto xy = make_varset({"x", "y"});
  Poly f = parse_poly("y^2 - x^3", xy, Q);

  CHECK(f.derivative(1) == parse_poly("2*y", xy, Q));
  CHECK(f.derivative(0) == parse_poly("-3*x^2", xy, Q));

  std::vector<Scalar> pt{Scalar::one(Q), Scalar::one(Q)};
  CHECK(f.eval(pt).is_zero());  // (1,1) lies on the cusp

  Poly x2 = parse_poly("x^2", xy, Q);
  Poly xp1 = parse_poly("x + 1", xy, Q);
  CHECK(x2.substitute(0, xp1) == parse_poly("x^2 + 2*x + 1", xy, Q));
}

TEST_CASE("derivative in positive characteristic drops p-th powers") {
  auto F5 = FieldSpec::prime(5);
  auto x = make_varset({"x"});
  Poly f = parse_poly("x^5 + x^2", x, F5);
  CHECK(f.derivative(0) == parse_poly("2*x", x, F5));
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(7);
  auto vars = make_varset({"x", "y"});
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    for (int i = 0; i < 60; ++i) {
      Poly a = rand_poly(rng, vars, field);
      Poly b = rand_poly(rng, vars, field);
      Poly c = rand_poly(rng, vars, field);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("substitute is a ring homomorphism") {
  Rng rng(11);
  auto vars = make_varset({"x", "y"});
  auto Q = FieldSpec::rationals();
  for (int i = 0; i < 40; ++i) {
    Poly a = rand_poly(rng, vars, Q);
    Poly b = rand_poly(rng, vars, Q);
    Poly g = rand_poly(rng, vars, Q);
    CHECK((a * b).substitute(0, g) == a.substitute(0, g) * b.substitute(0, g));
    CHECK((a + b).substitute(0, g) == a.substitute(0, g) + b.substitute(0, g));
  }
}

TEST_CASE("determinant and adjugate") {
  auto Q = FieldSpec::rationals();
  auto ab = make_varset({"a", "b", "c", "d"});

  SUBCASE("adjugate of 1x1 is the empty-minor convention") {
    PolyMatrix<Scalar> m(1, 1, Poly::zero_poly(ab, Scalar::zero(Q)));
    m.at(0, 0) = parse_poly("a", ab, Q);
    auto adj = adjugate(m);
    CHECK(adj.at(0, 0).is_one());
    CHECK(det(m) == parse_poly("a", ab, Q));
  }

  SUBCASE("2x2 adjugate swaps and negates") {
    PolyMatrix<Scalar> m(2, 2, Poly::zero_poly(ab, Scalar::zero(Q)));
    m.at(0, 0) = parse_poly("a", ab, Q);
    m.at(0, 1) = parse_poly("b", ab, Q);
    m.at(1, 0) = parse_poly("c", ab, Q);
    m.at(1, 1) = parse_poly("d", ab, Q);
    auto adj = adjugate(m);
    CHECK(adj.at(0, 0) == parse_poly("d", ab, Q));
    CHECK(adj.at(0, 1) == parse_poly("0 - b", ab, Q));
    CHECK(adj.at(1, 0) == parse_poly("0 - c", ab, Q));
    CHECK(adj.at(1, 1) == parse_poly("a", ab, Q));
  }

  SUBCASE("M * adj(M) = det(M) * I for random matrices") {
    Rng rng(23);
    auto vars = make_varset({"x", "y"});
    for (auto field : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
          PolyMatrix<Scalar> m(n, n, Poly::zero_poly(vars, Scalar::zero(field)));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              m.at(i, j) = rand_poly(rng, vars, field);
          Poly dm = det(m);
          auto adj = adjugate(m);
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              Poly acc = Poly::zero_poly(vars, Scalar::zero(field));
              for (std::size_t k = 0; k < n; ++k)
                acc += m.at(i, k) * adj.at(k, j);
              CHECK(acc == (i == j ? dm : acc.zero()));
            }
          }
        }
      }
    }
  }

  SUBCASE("non-square inputs are rejected") {
    PolyMatrix<Scalar> m(1, 2, Poly::zero_poly(ab, Scalar::zero(Q)));
    CHECK_THROWS_AS(det(m), Error);
    CHECK_THROWS_AS(adjugate(m), Error);
  }
}

TEST_CASE("deglex storage order is canonical") {
  auto Q = FieldSpec::rationals();
  auto xy = make_varset({"x", "y"});
  Poly p = parse_poly("y + x^2*y + x", xy, Q);
  // descending deglex: x^2*y, then x, then y (x before y at equal degree)
  CHECK(p.terms()[0].exp == ExpVec{2, 1});
  CHECK(p.terms()[1].exp == ExpVec{1, 0});
  CHECK(p.terms()[2].exp == ExpVec{0, 1});
  CHECK(render_poly(p) == "x^2*y + x + y");
}
