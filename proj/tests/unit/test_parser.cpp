#include <doctest.h>

#include "arcmodel/parser.hpp"
#include "arcmodel/rng.hpp"

using namespace arcmodel;

namespace {

Poly random_poly(Rng& rng, const VarSetPtr& vars, const FieldSpec& f,
                 int max_terms = 5, std::uint32_t max_exp = 3) {
  std::vector<Poly::Term> terms;
  int nterms = (int)rng.below((std::uint64_t)max_terms + 1);
  for (int i = 0; i < nterms; ++i) {
    ExpVec e(vars->size());
    for (auto& x : e) x = (std::uint32_t)rng.below(max_exp + 1);
    terms.push_back({e, rng.scalar(f)});
  }
  return Poly::from_terms(vars, Scalar::zero(f), std::move(terms));
}

}  // namespace

TEST_CASE("spec examples") {
  auto Q = FieldSpec::rationals();
  auto xy = make_varset({"x", "y"});

  Poly p = parse_poly("y^2 - x^3", xy, Q);
  CHECK(p.terms().size() == 2);
  CHECK(p.coefficient({0, 2}).to_string() == "1");
  CHECK(p.coefficient({3, 0}).to_string() == "-1");

  auto x_only = make_varset({"x"});
  Poly q = parse_poly("x + x", x_only, Q);
  CHECK(q.terms().size() == 1);
  CHECK(q.coefficient({1}).to_string() == "2");

  Poly r = parse_poly("1/2*x", x_only, FieldSpec::prime(5));
  CHECK(r.coefficient({1}).to_string() == "3");
}

TEST_CASE("syntax errors carry positions") {
  auto Q = FieldSpec::rationals();
  auto xy = make_varset({"x", "y"});

  CHECK_THROWS_WITH_AS(parse_poly("x y", xy, Q),
                       "SyntaxError: missing operator before this token "
                       "[position 2]",
                       Error);
  CHECK_THROWS_AS(parse_poly("2x", xy, Q), Error);
  CHECK_THROWS_AS(parse_poly("x^-2", xy, Q), Error);
  CHECK_THROWS_AS(parse_poly("-x", xy, Q), Error);
  CHECK_THROWS_AS(parse_poly("x +", xy, Q), Error);
  CHECK_THROWS_AS(parse_poly("(x", xy, Q), Error);
  CHECK_THROWS_AS(parse_poly("", xy, Q), Error);

  try {
    parse_poly("x + z", xy, Q);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
  }
}

TEST_CASE("grammar corners") {
  auto Q = FieldSpec::rationals();
  auto xy = make_varset({"x", "y"});
  CHECK(parse_poly("x - -3", xy, Q) ==
        parse_poly("x + 3", xy, Q));
  CHECK(parse_poly("(x + y)^2", xy, Q) ==
        parse_poly("x^2 + 2*x*y + y^2", xy, Q));
  CHECK(parse_poly("  y ^ 2  -  x ^ 3 ", xy, Q) ==
        parse_poly("y^2-x^3", xy, Q));
  CHECK(parse_poly("3/6*x", xy, Q).coefficient({1, 0}).to_string() == "1/2");
  CHECK(parse_poly("0", xy, Q).is_zero());
  // '/' is part of rational literals only
  CHECK_THROWS_AS(parse_poly("x/2", xy, Q), Error);
}

TEST_CASE("parse of render is identity") {
  Rng rng(2024);
  auto vars = make_varset({"x", "y", "z"});
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    for (int i = 0; i < 200; ++i) {
      Poly p = random_poly(rng, vars, field);
      CHECK(parse_poly(render_poly(p), vars, field) == p);
    }
  }
}
