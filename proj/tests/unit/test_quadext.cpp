#include <doctest.h>

#include "helpers.hpp"
#include "splitforge/quadext.hpp"
#include "splitforge/verify.hpp"

using namespace sft;

namespace {

QuadExtContext ctx(const RingDescriptor& ring, const std::string& f) {
  return QuadExtContext::from_quadratic(quad_x(ring, f));
}

QuadExtElement qe(const RingDescriptor& ring, const std::string& base,
                  const std::string& radical) {
  return QuadExtElement{fr(ring, base), fr(ring, radical)};
}

}  // namespace

TEST_CASE("multiplication in the quadratic extension") {
  auto E18 = ctx(Z(), "x^2 - 18");
  auto one_xbar = qe(Z(), "0", "1");
  auto sq = quadext_mul(E18, one_xbar, one_xbar);
  CHECK(sq.base == fr(Z(), "18"));
  CHECK(sq.radical.is_zero());

  QuadExtElement two_thirds{fr(Z(), "0"), fr(Z(), "2", "3")};
  auto sq2 = quadext_mul(E18, two_thirds, two_thirds);
  CHECK(sq2.base == fr(Z(), "8"));
  CHECK(sq2.radical.is_zero());

  auto E5 = ctx(Z(), "x^2 - 5");
  QuadExtElement h{fr(Z(), "1", "2"), fr(Z(), "1", "2")};
  auto sq3 = quadext_mul(E5, h, h);
  CHECK(sq3.base == fr(Z(), "3", "2"));
  CHECK(sq3.radical == fr(Z(), "1", "2"));
}

TEST_CASE("square roots in a radical extension") {
  auto u = fr(Z(), "18");
  auto s1 = square_root_in_ext(fr(Z(), "8"), u);
  REQUIRE(s1);
  CHECK(s1->base.is_zero());
  CHECK(s1->radical == fr(Z(), "2", "3"));

  auto s2 = square_root_in_ext(fr(Z(), "4"), u);
  REQUIRE(s2);
  CHECK(s2->base == fr(Z(), "2"));
  CHECK(s2->radical.is_zero());

  CHECK(!square_root_in_ext(fr(Z(), "3"), u));
  CHECK_THROWS_AS(square_root_in_ext(fr(Z(), "3"), fr(Z(), "4")), SplitError);
}

TEST_CASE("square roots square back to the input") {
  std::mt19937_64 rng(15);
  for (const auto& ring : {Z(), Qt(), F5t()}) {
    auto u = ring.kind == RingKind::Integers ? fr(ring, "18")
                                             : FractionElement(el(ring, "t"));
    QuadExtContext radical{FractionElement::zero(ring), -u};
    for (int i = 0; i < 40; ++i) {
      RingElement n = random_ring_element(ring, rng, 20);
      RingElement d = random_ring_element(ring, rng, 20);
      if (d.is_zero()) continue;
      FractionElement v(n, d);
      auto s = square_root_in_ext(v, u);
      if (s) {
        auto sq = quadext_mul(radical, *s, *s);
        CHECK(sq.base == v);
        CHECK(sq.radical.is_zero());
      } else {
        CHECK(!is_square(v));
        CHECK(!is_square(v / u));
      }
    }
  }
}

TEST_CASE("roots of quadratics inside the extension") {
  auto golden = ctx(Z(), "x^2 - x - 1");
  auto g1 = quadratic_root_in_ext(fr(Z(), "1"), fr(Z(), "-1"), golden);
  REQUIRE(g1);
  CHECK(g1->base.is_zero());
  CHECK(g1->radical == fr(Z(), "1"));  // gamma = xbar

  auto E18 = ctx(Z(), "x^2 - 18");
  auto g2 = quadratic_root_in_ext(fr(Z(), "0"), fr(Z(), "-8"), E18);
  REQUIRE(g2);
  CHECK(g2->base.is_zero());
  CHECK(g2->radical == fr(Z(), "2", "3"));

  auto E2 = ctx(Z(), "x^2 - 2");
  CHECK(!quadratic_root_in_ext(fr(Z(), "0"), fr(Z(), "-3"), E2));

  CHECK_THROWS_AS(
      quadratic_root_in_ext(fr(Z(), "0"), fr(Z(), "1"), ctx(Z(), "x^2 - 9")),
      SplitError);
}

TEST_CASE("returned roots satisfy their quadratic") {
  std::mt19937_64 rng(16);
  for (const auto& ring : {Z(), Qt()}) {
    QuadExtContext E =
        ring.kind == RingKind::Integers ? ctx(ring, "x^2 - x - 1")
                                        : ctx(ring, "x^2 - t");
    for (int i = 0; i < 60; ++i) {
      FractionElement c(random_ring_element(ring, rng, 15));
      FractionElement d(random_ring_element(ring, rng, 15));
      auto gamma = quadratic_root_in_ext(c, d, E);
      if (!gamma) continue;
      auto val = quadext_mul(E, *gamma, *gamma);
      val.base -= c * gamma->base - d;
      val.radical -= c * gamma->radical;
      CHECK(val.base.is_zero());
      CHECK(val.radical.is_zero());
      if (!gamma->radical.is_zero())
        CHECK(leading_sign_normalized(gamma->radical));
    }
  }
}
