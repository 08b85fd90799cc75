#include <doctest.h>

#include "helpers.hpp"
#include "splitforge/splitting.hpp"
#include "splitforge/verify.hpp"

using namespace sft;

namespace {

ExtensionProblem problem(const std::string& text) {
  return parse_problem(text);
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SplitError& e) {
    return e.code();
  }
  return Errc::usage;  // sentinel: nothing was thrown
}

}  // namespace

TEST_CASE("domain test") {
  auto v1 = domain_test(quad_x(Z(), "x^2 - 2"), quad_y(Z(), "y^2 - 3"), Z());
  CHECK(v1.kind == DomainVerdict::Kind::Domain);

  auto v2 = domain_test(quad_x(Z(), "x^2 - 18"), quad_y(Z(), "y^2 - 8"), Z());
  REQUIRE(v2.kind == DomainVerdict::Kind::NonDomain);
  CHECK(v2.f2_root->base.is_zero());
  CHECK(v2.f2_root->radical == fr(Z(), "2", "3"));

  auto v3 = domain_test(quad_x(Z(), "x^2 - 9"), quad_y(Z(), "y^2 - 3"), Z());
  REQUIRE(v3.kind == DomainVerdict::Kind::ReducibleF1);
  CHECK(*v3.f1_root == zi(3));
}

TEST_CASE("radical decomposition") {
  auto w1 = radical_decompose(zi(18), zi(8));
  CHECK(w1.c == zi(2));
  CHECK(w1.d == zi(3));
  CHECK(w1.u == zi(2));

  auto w2 = radical_decompose(zi(2), zi(8));
  CHECK(w2.c == zi(2));
  CHECK(w2.d == zi(1));
  CHECK(w2.u == zi(2));

  auto w3 = radical_decompose(zi(5), zi(5));
  CHECK(w3.c == zi(1));
  CHECK(w3.d == zi(1));
  CHECK(w3.u == zi(5));

  CHECK(code_of([] { radical_decompose(zi(2), zi(3)); }) ==
        Errc::not_applicable);
  CHECK(code_of([] { radical_decompose(zi(4), zi(8)); }) ==
        Errc::not_applicable);
}

TEST_CASE("minimal primes in the radical case") {
  auto primes = minimal_primes_radical(RadicalWitnesses{zi(2), zi(3), zi(2)});
  CHECK(primes[0].generators[2] == bp(Z(), "3*y + 2*x"));
  CHECK(primes[0].generators[3] == bp(Z(), "x*y + 12"));
  CHECK(primes[1].generators[2] == bp(Z(), "3*y - 2*x"));
  CHECK(primes[1].generators[3] == bp(Z(), "x*y - 12"));
  CHECK(psi_eval(bp(Z(), "x*y - 12"), 1,
                 RadicalWitnesses{zi(2), zi(3), zi(2)})
            .is_zero());

  auto p2 = minimal_primes_radical(RadicalWitnesses{zi(1), zi(1), zi(5)});
  CHECK(p2[0].generators[0] == bp(Z(), "x^2 - 5"));
  CHECK(p2[0].generators[1] == bp(Z(), "y^2 - 5"));
  CHECK(p2[0].generators[2] == bp(Z(), "y + x"));
  CHECK(p2[0].generators[3] == bp(Z(), "x*y + 5"));
}

TEST_CASE("completing the square") {
  auto sc = complete_square(quad_x(Qt(), "x^2 - 2*t*x + (t^2 - t)"),
                            quad_y(Qt(), "y^2 - 2*y + (1 - 4*t)"));
  CHECK(sc.a1_prime == el(Qt(), "t"));
  CHECK(sc.a2_prime == el(Qt(), "4*t"));
  CHECK(sc.shift_x == el(Qt(), "t"));
  CHECK(sc.shift_y == el(Qt(), "1"));

  auto w = radical_decompose(sc.a1_prime, sc.a2_prime);
  CHECK(w.c == el(Qt(), "2"));
  CHECK(w.d == el(Qt(), "1"));
  CHECK(w.u == el(Qt(), "t"));

  // an already-radical f: identity shift
  auto sc2 = complete_square(quad_x(Qt(), "x^2 - t"), quad_y(Qt(), "y^2 - 4*t"));
  CHECK(sc2.shift_x.is_zero());
  CHECK(sc2.a1_prime == el(Qt(), "t"));

  CHECK(code_of([] {
          complete_square(quad_x(Z(), "x^2 - x - 1"),
                          quad_y(Z(), "y^2 - y - 1"));
        }) == Errc::two_not_unit);
}

TEST_CASE("nonradical witnesses") {
  auto w1 = nonradical_witness(quad_x(Z(), "x^2 - x - 1"),
                               quad_y(Z(), "y^2 - y - 1"));
  CHECK(w1.e == zi(1));
  CHECK(w1.half_minus == zi(0));
  CHECK(w1.half_plus == zi(1));

  auto w2 = nonradical_witness(quad_x(Z(), "x^2 - x - 1"),
                               quad_y(Z(), "y^2 - 3*y + 1"));
  CHECK(w2.e == zi(1));
  CHECK(w2.half_minus == zi(1));
  CHECK(w2.half_plus == zi(2));

  CHECK(code_of([] {
          nonradical_witness(quad_x(Z(), "x^2 - x - 1"),
                             quad_y(Z(), "y^2 - y + 1"));
        }) == Errc::hypotheses_not_met);
  CHECK(code_of([] {
          nonradical_witness(quad_x(Z(), "x^2 - x - 11"),
                             quad_y(Z(), "y^2 - 7*y + 1"));
        }) == Errc::hypotheses_not_met);
  CHECK(code_of([] {
          nonradical_witness(quad_x(Z(), "x^2 - x - 1"),
                             quad_y(Z(), "y^2 - 2*y + 1"));
        }) == Errc::hypotheses_not_met);
}

TEST_CASE("minimal primes in the nonradical case") {
  MonicQuadratic f = quad_x(Z(), "x^2 - x - 1");
  MonicQuadratic g = quad_y(Z(), "y^2 - y - 1");
  auto w = nonradical_witness(f, g);
  auto primes = minimal_primes_nonradical(f, g, w);
  CHECK(primes[0].generators[2] == bp(Z(), "y - x"));
  CHECK(primes[1].generators[2] == bp(Z(), "y + x - 1"));

  // h1*h2 = g - e^2*f exactly and == e^2*f + g modulo the presentation
  BiPoly h1h2 = primes[0].generators[2] * primes[1].generators[2];
  BiPoly fb = f.as_bipoly(Var::X), gb = g.as_bipoly(Var::Y);
  CHECK(h1h2 == gb - fb);
  BiPoly diff = h1h2 - (fb + gb);
  CHECK(reduce_mod_presentation(diff, f, g).is_zero());

  // elimination for P2: g(-x + 1) is divisible by f
  auto img = eval_bipoly(gb, primes[1].elimination->img_x,
                         primes[1].elimination->img_y);
  CHECK(img.is_zero());
}

TEST_CASE("corrupt nonradical witnesses trip the identity guard") {
  CHECK(code_of([] {
          minimal_primes_nonradical(
              quad_x(Z(), "x^2 - x - 1"), quad_y(Z(), "y^2 - y - 1"),
              NonradicalWitnesses{zi(2), zi(0), zi(1)});
        }) == Errc::internal_identity_failure);
}

TEST_CASE("psi refuses a presentation that is not the radical one") {
  TPresentation golden{quad_x(Z(), "x^2 - x - 1"), quad_y(Z(), "y^2 - y - 1")};
  CHECK(code_of([&] {
          psi_eval(golden, bp(Z(), "x"), 0, RadicalWitnesses{zi(2), zi(3), zi(2)});
        }) == Errc::non_radical_presentation);
}

TEST_CASE("worked examples build the expected retractions") {
  auto certs1 = build_retraction(
      problem("ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\nJ: 3*y - 2*x\n"));
  REQUIRE(certs1.size() == 1);
  CHECK(certs1[0].tag == CaseTag::Radical);
  CHECK(certs1[0].selected == "P1");
  CHECK(certs1[0].retraction ==
        std::array<RingElement, 4>{zi(1), zi(0), zi(0), zi(12)});

  auto certs2 = build_retraction(
      problem("ring: Z\nf1: x^2 - x - 1\nf2: y^2 - y - 1\nJ: y - x\n"));
  CHECK(certs2[0].tag == CaseTag::Nonradical);
  CHECK(certs2[0].selected == "P1");
  CHECK(certs2[0].retraction ==
        std::array<RingElement, 4>{zi(1), zi(0), zi(0), zi(1)});

  auto certs3 = build_retraction(
      problem("ring: Z\nf1: x^2 - x - 1\nf2: y^2 - y - 1\nJ: y + x - 1\n"));
  CHECK(certs3[0].selected == "P2");
  CHECK(certs3[0].retraction ==
        std::array<RingElement, 4>{zi(1), zi(0), zi(1), zi(-1)});

  auto certs4 =
      build_retraction(problem("ring: Z\nf1: x^2 - 2\nf2: y^2 - 3\n"));
  CHECK(certs4[0].tag == CaseTag::Free);
  CHECK(certs4[0].retraction ==
        std::array<RingElement, 4>{zi(1), zi(0), zi(0), zi(0)});
}

TEST_CASE("J generated inside the ideal collapses to the free case") {
  auto certs = build_retraction(
      problem("ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\nJ: x^2 - 18\n"));
  CHECK(certs[0].tag == CaseTag::Free);
}

TEST_CASE("all primes are emitted on request when J = (0)") {
  BuildOptions options;
  options.all_primes = true;
  auto certs = build_retraction(
      problem("ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\n"), options);
  REQUIRE(certs.size() == 3);
  CHECK(certs[0].tag == CaseTag::Free);
  CHECK(certs[1].selected == "P0");
  CHECK(certs[2].selected == "P1");
}

TEST_CASE("reducible dispatch substitutes roots") {
  auto c1 = build_retraction(
      problem("ring: Z\nf1: x^2 - 9\nf2: y^2 - 3\nJ: x - 3\n"));
  CHECK(c1[0].tag == CaseTag::Reducible);
  CHECK(c1[0].retraction ==
        std::array<RingElement, 4>{zi(1), zi(3), zi(0), zi(0)});

  // swapped roles: f1 irreducible, f2 splits
  auto c2 = build_retraction(
      problem("ring: Z\nf1: x^2 - 3\nf2: y^2 - 9\nJ: y + 3\n"));
  CHECK(c2[0].tag == CaseTag::Reducible);
  CHECK(c2[0].retraction ==
        std::array<RingElement, 4>{zi(1), zi(0), zi(-3), zi(0)});

  // both split: rank-one target
  auto c3 = build_retraction(
      problem("ring: Z\nf1: x^2 - 9\nf2: y^2 - 1\nJ: x - 3, y + 1\n"));
  CHECK(c3[0].tag == CaseTag::Reducible);
  CHECK(c3[0].retraction ==
        std::array<RingElement, 4>{zi(1), zi(3), zi(-1), zi(-3)});
}

TEST_CASE("completed square pulls the radical retraction back") {
  auto certs = build_retraction(problem(
      "ring: Q[t]\nf1: x^2 - 2*t*x + (t^2 - t)\nf2: y^2 - 2*y + (1 - 4*t)\n"
      "J: 2*x + y - (1 + 2*t)\n"));
  REQUIRE(certs.size() == 1);
  const auto& cert = certs[0];
  CHECK(cert.tag == CaseTag::CompletedSquare);

  // compose the direct radical certificate with the basis change by hand
  auto radical = build_retraction(
      problem("ring: Q[t]\nf1: x^2 - t\nf2: y^2 - 4*t\nJ: y + 2*x\n"));
  REQUIRE(radical.size() == 1);
  const auto& rho2 = radical[0].retraction;
  RingElement sx = el(Qt(), "t"), sy = el(Qt(), "1");
  TPresentation shifted{quad_x(Qt(), "x^2 - t"), quad_y(Qt(), "y^2 - 4*t")};
  auto apply = [&](const TElement& t) {
    RingElement acc(Qt());
    for (int i = 0; i < 4; ++i) acc += t.coords[i] * rho2[i];
    return acc;
  };
  TElement ux = t_from_coords(
      shifted, {sx, el(Qt(), "1"), RingElement(Qt()), RingElement(Qt())});
  TElement vy = t_from_coords(shifted, {sy, RingElement(Qt()), el(Qt(), "1"), RingElement(Qt())});
  CHECK(cert.retraction[0] == el(Qt(), "1"));
  CHECK(cert.retraction[1] == apply(ux));
  CHECK(cert.retraction[2] == apply(vy));
  CHECK(cert.retraction[3] == apply(t_mul(ux, vy)));
}

TEST_CASE("inputs outside every construction are rejected with the reason") {
  CHECK(code_of([] {
          build_retraction(problem(
              "ring: Z\nf1: x^2 - x - 11\nf2: y^2 - 7*y + 1\nJ: y - x - 3\n"));
        }) == Errc::hypotheses_not_met);

  // T is a domain but J is nonzero
  CHECK(code_of([] {
          build_retraction(
              problem("ring: Z\nf1: x^2 - 2\nf2: y^2 - 3\nJ: y - x\n"));
        }) == Errc::no_prime_contains_j);

  // J not inside any minimal prime
  CHECK(code_of([] {
          build_retraction(problem(
              "ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\nJ: 3*y - 2*x, 3*y + 2*x\n"));
        }) == Errc::no_prime_contains_j);
}

TEST_CASE("zero divisors exist exactly in the non-domain case") {
  auto verdict =
      domain_test(quad_x(Z(), "x^2 - 18"), quad_y(Z(), "y^2 - 8"), Z());
  REQUIRE(verdict.kind == DomainVerdict::Kind::NonDomain);
  auto [a, b] = nondomain_zero_divisors(quad_x(Z(), "x^2 - 18"),
                                        quad_y(Z(), "y^2 - 8"), *verdict.f2_root);
  CHECK(!a.is_zero());
  CHECK(!b.is_zero());
  CHECK(t_mul(a, b).is_zero());

  // nonradical non-domain too
  auto verdict2 = domain_test(quad_x(Z(), "x^2 - x - 1"),
                              quad_y(Z(), "y^2 - y - 1"), Z());
  REQUIRE(verdict2.kind == DomainVerdict::Kind::NonDomain);
  auto [c, d] = nondomain_zero_divisors(quad_x(Z(), "x^2 - x - 1"),
                                        quad_y(Z(), "y^2 - y - 1"),
                                        *verdict2.f2_root);
  CHECK(!c.is_zero());
  CHECK(!d.is_zero());
  CHECK(t_mul(c, d).is_zero());
}

TEST_CASE("certificates are deterministic") {
  auto a = build_retraction(
      problem("ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\nJ: 3*y - 2*x\n"));
  auto b = build_retraction(
      problem("ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\nJ: 3*y - 2*x\n"));
  CHECK(a == b);
}
