#include <doctest.h>

#include "arcmodel/parser.hpp"
#include "arcmodel/rng.hpp"
#include "arcmodel/series.hpp"
#include "arcmodel/testring.hpp"

using namespace arcmodel;

namespace {

ScalarSeries series_from_ints(const FieldSpec& f, std::vector<long long> cs) {
  std::vector<Scalar> coeffs;
  for (auto v : cs) coeffs.push_back(Scalar::from_int(f, v));
  return ScalarSeries(std::move(coeffs), (int)cs.size() - 1);
}

ScalarSeries compose_scalar(const Poly& f, std::span<const ScalarSeries> args,
                            int fallback = 0) {
  const FieldSpec& field = f.coeff_proto().field();
  return compose_poly<Scalar>(
      f, args, [](const Scalar& c) { return c; }, Scalar::zero(field),
      fallback);
}

}  // namespace

TEST_CASE("composition of the cusp equation along its standard arc") {
  auto Q = FieldSpec::rationals();
  auto xy = make_varset({"x", "y"});
  Poly f = parse_poly("y^2 - x^3", xy, Q);

  // x = t^2, y = t^3 at precision 10
  ScalarSeries x = series_from_ints(Q, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
  ScalarSeries y = series_from_ints(Q, {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0});
  std::vector<ScalarSeries> args{x, y};

  ScalarSeries v = compose_scalar(f, args);
  CHECK(v.precision() == 10);
  CHECK(v.known_zero());
  auto o = v.ord();
  CHECK(o.beyond());
  CHECK(o.precision == 10);

  Poly delta = parse_poly("2*y", xy, Q);
  ScalarSeries dv = compose_scalar(delta, args);
  auto od = dv.ord();
  CHECK(od.finite());
  CHECK(*od.value == 3);
  CHECK(dv.coefficient(3).to_string() == "2");
}

TEST_CASE("ord of an all-zero window is BeyondPrecision") {
  auto Q = FieldSpec::rationals();
  ScalarSeries z(Scalar::zero(Q), 4);
  auto o = z.ord();
  CHECK(o.beyond());
  CHECK(o.precision == 4);
  CHECK(o.to_string() == "BeyondPrecision(4)");
}

TEST_CASE("precision bookkeeping") {
  auto Q = FieldSpec::rationals();
  ScalarSeries a = series_from_ints(Q, {1, 2, 3, 4, 5});     // prec 4
  ScalarSeries b = series_from_ints(Q, {1, 1, 1});           // prec 2
  CHECK((a + b).precision() == 2);
  CHECK((a * b).precision() == 2);
  CHECK(a.shifted_up(3).precision() == 7);
  CHECK(a.truncated(1).precision() == 1);
  ScalarSeries t2 = series_from_ints(Q, {0, 0, 7, 1});
  CHECK(t2.div_t_power(2).precision() == 1);
  CHECK(t2.div_t_power(2).coefficient(0).to_string() == "7");
}

TEST_CASE("compose_poly is multiplicative at matched precision") {
  Rng rng(31);
  auto vars = make_varset({"x", "y"});
  for (auto field : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<Poly::Term> ta, tb;
      for (int i = 0; i < 3; ++i) {
        ExpVec e{(std::uint32_t)rng.below(3), (std::uint32_t)rng.below(3)};
        ta.push_back({e, rng.scalar(field)});
        ExpVec e2{(std::uint32_t)rng.below(3), (std::uint32_t)rng.below(3)};
        tb.push_back({e2, rng.scalar(field)});
      }
      Poly f = Poly::from_terms(vars, Scalar::zero(field), ta);
      Poly g = Poly::from_terms(vars, Scalar::zero(field), tb);
      std::vector<ScalarSeries> args;
      for (int v = 0; v < 2; ++v) {
        std::vector<Scalar> cs;
        for (int i = 0; i <= 6; ++i) cs.push_back(rng.scalar(field));
        args.emplace_back(std::move(cs), 6);
      }
      ScalarSeries lhs = compose_scalar(f * g, args);
      ScalarSeries rhs = compose_scalar(f, args) * compose_scalar(g, args);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("series inversion over a test ring") {
  auto A = TestRing::make(FieldSpec::prime(5), {"e"}, {{2}});
  auto one = TestElem::one_of(A);
  auto e = TestElem::generator(A, 0);
  // s = 1 + e + (2 + e) t + t^2
  std::vector<TestElem> cs{one + e, one.times_int(2) + e, one};
  TruncSeries<TestElem> s(std::move(cs), 2);
  auto inv = invert_series(s);
  auto prod = s * inv;
  CHECK(prod.is_one());
}

TEST_CASE("series over test rings embed and reduce consistently") {
  auto A = TestRing::make(FieldSpec::rationals(), {"e"}, {{2}});
  auto Q = FieldSpec::rationals();
  auto xy = make_varset({"x", "y"});
  Poly f = parse_poly("y^2 - x^3", xy, Q);

  auto lift = [&](std::vector<long long> v) {
    std::vector<TestElem> cs;
    for (auto x : v) cs.push_back(TestElem::embed(A, Scalar::from_int(Q, x)));
    return TruncSeries<TestElem>(std::move(cs), (int)v.size() - 1);
  };
  std::vector<TruncSeries<TestElem>> args{lift({0, 0, 1, 0, 0, 0, 0}),
                                          lift({0, 0, 0, 1, 0, 0, 0})};
  auto v = compose_poly<TestElem>(
      f, std::span<const TruncSeries<TestElem>>(args),
      [&](const Scalar& c) { return TestElem::embed(A, c); },
      TestElem::zero_of(A), 0);
  CHECK(v.known_zero());
}
