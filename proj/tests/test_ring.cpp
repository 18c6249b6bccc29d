#include "support.hpp"

#include "lamod/error.hpp"

using namespace lamod;
using lamod::test::S;

namespace {

const ChartPtr xy = make_chart({"x", "y"}, {});
const ChartPtr t = make_chart({}, {"t"});
const ChartPtr xt = make_chart({"x"}, {"t"});

Monomial mono(std::initializer_list<int> exps) {
  Monomial m{};
  std::size_t i = 0;
  for (int e : exps) m[i++] = static_cast<std::int16_t>(e);
  return m;
}

}  // namespace

TEST_CASE("gaussian rationals") {
  const Gaussian i = Gaussian::i();
  CHECK(i * i == Gaussian(-1));
  CHECK((Gaussian(1) / Gaussian(3)).to_string() == "1/3");
  CHECK((Gaussian(1, 2) * Gaussian(1, -2)) == Gaussian(5));
  CHECK((Gaussian(mpq_class(1, 2), mpq_class(-1))).to_string() == "(1/2-I)");
  CHECK(Gaussian(0, -2).to_string() == "-2*I");
}

TEST_CASE("parsing monomials and torus powers") {
  const Scalar s = S("x^2*y", xy);
  REQUIRE(s.size() == 1);
  CHECK(s.coefficient(mono({2, 1})) == Gaussian(1));

  const Scalar expected = Scalar::monomial(t, mono({0})) - Scalar::monomial(t, mono({1}), 2) + Scalar::monomial(t, mono({2}));
  CHECK(S("(1 - cis(1,t))^2", t) == expected);
  CHECK(S("cis(1,t)*cis(-1,t)", t) == Scalar(1));
  CHECK(S("x/2 + I*y", xy) == S("1/2*x + y*I", xy));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(S("x + q", xy), UnknownCoordinate);
  CHECK_THROWS_AS(S("x +", xy), ParseError);
  CHECK_THROWS_AS(S("1/x", xy), ParseError);
  CHECK_THROWS_AS(S("cis(1,x)", xy), ParseError);
  try {
    S("x + q", xy);
  } catch (const UnknownCoordinate& e) {
    CHECK(std::string(e.what()).find("4") != std::string::npos);
  }
}

TEST_CASE("ring operations") {
  CHECK((S("x", xy) + S("-x", xy)).is_zero());
  CHECK(S("cis(1,t)", t) * S("cis(-1,t)", t) == Scalar(1));
  CHECK(S("x+y", xy) * S("x-y", xy) == S("x^2-y^2", xy));
  CHECK_THROWS_AS(S("x", xy) + S("x", make_chart({"x"}, {})), ChartMismatch);
  CHECK(S("x", xy) + Scalar(3) == S("3+x", xy));
}

TEST_CASE("partial derivatives") {
  CHECK(S("x^2*y", xy).derivative("x") == S("2*x*y", xy));
  CHECK(S("cis(2,t)", t).derivative("t") == S("2*I*cis(2,t)", t));
  CHECK(Scalar(1, xy).derivative("x").is_zero());
}

TEST_CASE("torus integral") {
  CHECK(torus_integral(S("1", t)) == Scalar(1));
  CHECK(torus_integral(S("cis(3,t) + 5", t)) == Scalar(5));
  CHECK_THROWS_AS(torus_integral(S("x*cis(1,t)", xt)), NonCompactError);
}

TEST_CASE("exact division") {
  CHECK(*exact_divide(S("x^2-1", xy), S("x-1", xy)) == S("x+1", xy));
  CHECK_FALSE(exact_divide(S("2*(1-cis(1,t))*(-I*cis(1,t))", t), S("(1-cis(1,t))^2", t)).has_value());
  CHECK(exact_divide(Scalar(0, xy), S("x", xy))->is_zero());
  CHECK_THROWS_AS(exact_divide(S("x", xy), Scalar(0, xy)), DivisionByZero);
  CHECK(*exact_divide(S("cis(-1,t) - cis(1,t)", t), S("1 - cis(2,t)", t)) == S("cis(-1,t)", t));
}

TEST_CASE("rendering round trips") {
  for (const char* text : {"0", "1", "-x^2*y + 3/4*I", "(1-2*I)*x*y^3 - y", "x*y + 7"}) {
    const Scalar s = S(text, xy);
    CHECK(S(s.to_string(), xy) == s);
  }
  const Scalar f = S("(1 - cis(1,t))^3 * (2 + I)", t);
  CHECK(S(f.to_string(), t) == f);
}
