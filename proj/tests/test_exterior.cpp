#include "support.hpp"

#include "lamod/error.hpp"

using namespace lamod;
using lamod::test::S;

namespace {

const ChartPtr xy = make_chart({"x", "y"}, {});

Multivector e(std::vector<int> idx, const std::string& c = "1", FrameKind kind = FrameKind::Algebroid) {
  for (int& i : idx) --i;
  return Multivector::basis(kind, 2, idx, S(c, xy));
}
Multivector es(std::vector<int> idx, const std::string& c = "1") { return e(std::move(idx), c, FrameKind::DualAlgebroid); }

}  // namespace

TEST_CASE("wedge") {
  CHECK(wedge(e({1}), e({2})) == e({1, 2}));
  CHECK(wedge(e({2}), e({1})) == -e({1, 2}));
  CHECK(wedge(e({1}, "x"), e({2}, "y")) == e({1, 2}, "x*y"));
  CHECK(wedge(e({1}), e({1})).is_zero());
  CHECK(e({2, 1}) == -e({1, 2}));
  CHECK_THROWS_AS(wedge(e({1}), es({1})), KindMismatch);
}

TEST_CASE("degree beyond the rank is the zero element") {
  const Multivector big = wedge(e({1, 2}), e({1}));
  CHECK(big.is_zero());
  CHECK(big.degree() == 3);
}

TEST_CASE("contraction and pairing conventions") {
  CHECK(contract(e({1}), es({1, 2})) == es({2}));
  CHECK(contract(e({2}), es({1, 2})) == -es({1}));
  CHECK(contract(e({1}), es({2})).is_zero());
  CHECK(contract(e({1, 2}), es({1, 2})) == Multivector::scalar(FrameKind::DualAlgebroid, 2, 1));
  CHECK(pair(es({1, 2}), e({1, 2})) == Scalar(1));
  CHECK(pair(es({1, 2}), e({2, 1})) == Scalar(-1));
  CHECK(pair(es({1}, "x"), e({1}, "y")) == S("x*y", xy));
  CHECK_THROWS_AS(pair(es({1}), e({1, 2})), DegreeMismatch);
}

TEST_CASE("contraction defining identity on frame elements") {
  const std::vector<std::vector<int>> sets = {{}, {1}, {2}, {1, 2}};
  for (const auto& xs : sets) {
    for (const auto& ys : sets) {
      if (xs.size() + ys.size() > 2) continue;
      for (const auto& zs : sets) {
        if (zs.size() != xs.size() + ys.size()) continue;
        const Multivector x = e(xs), y = e(ys), xi = es(zs);
        CHECK(pair(contract(x, xi), y) == pair(xi, wedge(x, y)));
      }
    }
  }
}

TEST_CASE("rendering") {
  CHECK(es({1}).to_string() == "e1*");
  CHECK(es({1, 2}, "2*y").to_string() == "(2*y) e1*^e2*");
  CHECK(e({1}, "x", FrameKind::Tangent).to_string() == "(x) d/dx");
  CHECK(e({2}, "1", FrameKind::Cotangent).to_string() == "dy");
}
