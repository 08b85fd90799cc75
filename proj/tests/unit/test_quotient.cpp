#include <doctest.h>

#include "helpers.hpp"
#include "splitforge/verify.hpp"

using namespace sft;

namespace {

TPresentation pres_18_8() {
  return TPresentation{quad_x(Z(), "x^2 - 18"), quad_y(Z(), "y^2 - 8")};
}

RadicalWitnesses w232() { return RadicalWitnesses{zi(2), zi(3), zi(2)}; }

}  // namespace

TEST_CASE("multiplication in T") {
  TPresentation pres = pres_18_8();
  TElement xbar = t_from_coords(pres, {zi(0), zi(1), zi(0), zi(0)});
  TElement sq = t_mul(xbar, xbar);
  CHECK(sq == t_from_coords(pres, {zi(18), zi(0), zi(0), zi(0)}));

  TElement left = t_from_coords(pres, {zi(0), zi(-2), zi(3), zi(0)});
  TElement right = t_from_coords(pres, {zi(0), zi(2), zi(3), zi(0)});
  CHECK(t_mul(left, right).is_zero());

  TPresentation golden{quad_x(Z(), "x^2 - x - 1"), quad_y(Z(), "y^2 - y - 1")};
  TElement gx = t_from_coords(golden, {zi(0), zi(1), zi(0), zi(0)});
  CHECK(t_mul(gx, gx) == t_from_coords(golden, {zi(1), zi(1), zi(0), zi(0)}));

  CHECK_THROWS_AS(t_mul(xbar, gx), SplitError);
}

TEST_CASE("t_mul agrees with polynomial reduction and is a ring product") {
  std::mt19937_64 rng(17);
  for (const auto& ring : {Z(), Qt(), F5t()}) {
    TPresentation pres{
        MonicQuadratic(random_ring_element(ring, rng, 9),
                       random_ring_element(ring, rng, 9), 'x'),
        MonicQuadratic(random_ring_element(ring, rng, 9),
                       random_ring_element(ring, rng, 9), 'y')};
    for (int i = 0; i < 40; ++i) {
      TElement a = t_from_coords(pres, {random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9)});
      TElement b = t_from_coords(pres, {random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9)});
      TElement c = t_from_coords(pres, {random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9),
                                        random_ring_element(ring, rng, 9)});
      // reduction route
      CHECK(t_mul(a, b) ==
            t_reduce(t_to_bipoly(a) * t_to_bipoly(b), pres));
      // commutative, associative, distributive
      CHECK(t_mul(a, b) == t_mul(b, a));
      CHECK(t_mul(t_mul(a, b), c) == t_mul(a, t_mul(b, c)));
      CHECK(t_mul(a, t_add(b, c)) == t_add(t_mul(a, b), t_mul(a, c)));
    }
  }
}

TEST_CASE("psi evaluation") {
  auto w = w232();
  auto v1 = psi_eval(bp(Z(), "3*y + 2*x"), 0, w);
  CHECK(v1.is_zero());
  auto v2 = psi_eval(bp(Z(), "x*y - 12"), 1, w);
  CHECK(v2.is_zero());
  auto v3 = psi_eval(bp(Z(), "1"), 0, w);
  CHECK(v3.c0 == zi(1));
  CHECK(v3.c1.is_zero());
  auto v4 = psi_eval(bp(Z(), "3*y + 2*x"), 1, w);
  CHECK(v4.c1 == zi(12));

  CHECK_THROWS_AS(require_radical_presentation(pres_18_8(),
                                               RadicalWitnesses{zi(2), zi(3), zi(3)}),
                  SplitError);
  require_radical_presentation(pres_18_8(), w);  // must not throw
}

TEST_CASE("psi is a ring homomorphism") {
  std::mt19937_64 rng(18);
  auto w = w232();
  for (int i = 0; i < 60; ++i) {
    BiPoly h1 = random_bipoly(Z(), rng, 3);
    BiPoly h2 = random_bipoly(Z(), rng, 3);
    for (int r = 0; r < 2; ++r) {
      CHECK(psi_eval(h1 * h2, r, w) ==
            qm_mul(psi_eval(h1, r, w), psi_eval(h2, r, w)));
      CHECK(psi_eval(h1 + h2, r, w) ==
            qm_add(psi_eval(h1, r, w), psi_eval(h2, r, w)));
    }
  }
}

TEST_CASE("all four generators of P_r die under psi_r") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 40; ++i) {
    RingElement c = zi(static_cast<long>(rng() % 40) + 1);
    RingElement d = zi(static_cast<long>(rng() % 40) + 1);
    RingElement g = gcd_normalized(c, d);
    c = exact_div(c, g);
    d = exact_div(d, g);
    RingElement u = zi(static_cast<long>(rng() % 50) + 2);
    RadicalWitnesses w{c, d, u};
    for (int r = 0; r < 2; ++r)
      for (const char* tag : {"f1", "f2", "f3r", "f4r"})
        CHECK(psi_eval(radical_divisor(tag, r, w), r, w).is_zero());
  }
}

TEST_CASE("linear normal form") {
  auto w = w232();
  auto nf1 = reduce_to_linear(bp(Z(), "x^2 - 18"), 0, w);
  CHECK(nf1.v1.is_zero());
  CHECK(nf1.b1.is_zero());
  CHECK(nf1.v2.is_zero());
  CHECK(nf1.steps[0].quotient == bp(Z(), "1"));

  auto nf2 = reduce_to_linear(bp(Z(), "3*y + 2*x"), 0, w);
  CHECK(nf2.v1 == zi(3));
  CHECK(nf2.b1 == zi(2));
  CHECK(nf2.v2.is_zero());

  auto nf3 = reduce_to_linear(bp(Z(), "4*x^2 - 9*y^2"), 0, w);
  CHECK(nf3.v1.is_zero());
  CHECK(nf3.b1.is_zero());
  CHECK(nf3.v2.is_zero());
  CHECK(nf3.steps[0].quotient == bp(Z(), "4"));
  CHECK(nf3.steps[1].quotient == bp(Z(), "-9"));
}

TEST_CASE("transcript replay reconstructs the input") {
  std::mt19937_64 rng(20);
  auto w = w232();
  for (int i = 0; i < 80; ++i) {
    BiPoly h = random_bipoly(Z(), rng, 5);
    for (int r = 0; r < 2; ++r) {
      auto nf = reduce_to_linear(h, r, w);
      BiPoly sum(Z());
      for (const auto& step : nf.steps)
        sum += radical_divisor(step.divisor_tag, r, w) * step.quotient;
      BiPoly lin(Z());
      lin.add_term(0, 1, nf.v1);
      lin.add_term(1, 0, nf.b1);
      lin.add_term(0, 0, nf.v2);
      CHECK(sum + lin == h);
    }
  }
}

TEST_CASE("membership in the minimal primes") {
  auto w = w232();
  CHECK(membership_in_Pr(bp(Z(), "3*y + 2*x"), 0, w));
  CHECK(!membership_in_Pr(bp(Z(), "3*y + 2*x"), 1, w));
  CHECK(membership_in_Pr(bp(Z(), "3*y - 2*x"), 1, w));
  CHECK(!membership_in_Pr(bp(Z(), "x"), 0, w));
  CHECK(!membership_in_Pr(bp(Z(), "x"), 1, w));
  // adversarial: a generator plus one is in neither prime
  CHECK(!membership_in_Pr(bp(Z(), "3*y + 2*x + 1"), 0, w));
  // zero is in both
  CHECK(membership_in_Pr(BiPoly(Z()), 0, w));
  CHECK(membership_in_Pr(BiPoly(Z()), 1, w));
}

TEST_CASE("membership routes agree on random samples") {
  CHECK(cross_check_membership(w232(), 500, 4, 424242));
  CHECK(cross_check_membership(RadicalWitnesses{zi(1), zi(1), zi(5)}, 200, 4,
                               77));
  // polynomial rings too
  CHECK(cross_check_membership(
      RadicalWitnesses{el(Qt(), "2"), el(Qt(), "1"), el(Qt(), "t")}, 100, 4,
      99));
  CHECK(cross_check_membership(
      RadicalWitnesses{el(F5t(), "2"), el(F5t(), "1"), el(F5t(), "t")}, 100, 4,
      13));
}

TEST_CASE("zero divisor pair") {
  auto [a, b] = zero_divisor_pair(w232());
  CHECK(!a.is_zero());
  CHECK(!b.is_zero());
  CHECK(t_mul(a, b).is_zero());
  CHECK(a.coords[1] == zi(-2));
  CHECK(a.coords[2] == zi(3));
}
