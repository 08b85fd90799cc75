#include "splitforge/splitting.hpp"

#include <algorithm>

namespace splitforge {

namespace {

RingElement sign_pow(const RingDescriptor& ring, int r) {
  return RingElement::from_int(ring, r % 2 == 0 ? 1 : -1);
}

FractionElement embed(const RingElement& r) { return FractionElement(r); }

RingElement lcm_el(const RingElement& a, const RingElement& b) {
  if (a.is_zero() || b.is_zero()) fail(Errc::zero_input, "lcm of zero");
  return exact_div(a * b, gcd_normalized(a, b));
}

BiPoly linear_bipoly(const RingDescriptor& ring, const RingElement& cy,
                     const RingElement& cx, const RingElement& c0) {
  BiPoly p(ring);
  p.add_term(0, 1, cy);
  p.add_term(1, 0, cx);
  p.add_term(0, 0, c0);
  return p;
}

MonicQuadratic radical_modulus(const RadicalWitnesses& w) {
  return MonicQuadratic(RingElement(w.u.ring()), -w.u, 'z');
}

}  // namespace

DomainVerdict domain_test(const MonicQuadratic& f1, const MonicQuadratic& f2,
                          const RingDescriptor& ring) {
  if (!(f1.ring() == ring) || !(f2.ring() == ring))
    fail(Errc::mixed_contexts, "domain_test: polynomials over a foreign ring");
  FractionElement d1(discriminant(f1));
  if (auto s = is_square(d1)) {
    FractionElement root =
        (embed(f1.a) + *s) / FractionElement::from_int(ring, 2);
    return DomainVerdict{DomainVerdict::Kind::ReducibleF1, std::nullopt,
                         root.as_ring_element()};
  }
  QuadExtContext ext = QuadExtContext::from_quadratic(f1);
  auto gamma = quadratic_root_in_ext(embed(f2.a), embed(f2.b), ext);
  if (gamma)
    return DomainVerdict{DomainVerdict::Kind::NonDomain, *gamma, std::nullopt};
  return DomainVerdict{DomainVerdict::Kind::Domain, std::nullopt, std::nullopt};
}

RadicalWitnesses radical_decompose(const RingElement& a1,
                                   const RingElement& a2) {
  if (a1.is_zero() || is_square(embed(a1)))
    fail(Errc::not_applicable,
         "radical_decompose: x^2 - a1 is reducible over L");
  auto e2 = is_square(embed(a2) / embed(a1));
  if (!e2)
    fail(Errc::not_applicable,
         "radical_decompose: y^2 - a2 has no root in E (domain case)");
  if (e2->is_zero())
    fail(Errc::not_applicable,
         "radical_decompose: a2 = 0 makes y^2 - a2 reducible over L");
  if (!leading_sign_normalized(*e2)) *e2 = -*e2;
  RingElement c = e2->numerator();
  RingElement d = e2->denominator();
  RingElement u = exact_div(a1, d * d);
  if (!(a2 == c * c * u))
    fail(Errc::internal_identity_failure,
         "radical_decompose: witness equations failed to close");
  return RadicalWitnesses{c, d, u};
}

std::array<MinimalPrimeCert, 2> minimal_primes_radical(
    const RadicalWitnesses& w) {
  const auto& ring = w.c.ring();
  MonicQuadratic mod = radical_modulus(w);
  std::array<MinimalPrimeCert, 2> out;
  for (int r = 0; r < 2; ++r) {
    MinimalPrimeCert cert;
    cert.name = "P" + std::to_string(r);
    cert.tag = CaseTag::Radical;
    cert.index = r;
    cert.generators = {radical_divisor("f1", r, w), radical_divisor("f2", r, w),
                       radical_divisor("f3r", r, w),
                       radical_divisor("f4r", r, w)};
    cert.witnesses = w;
    cert.elimination =
        EliminationMap{mod, QuadModElement{RingElement(ring), w.d, mod},
                       QuadModElement{RingElement(ring),
                                      -sign_pow(ring, r) * w.c, mod}};
    out[static_cast<std::size_t>(r)] = std::move(cert);
  }
  return out;
}

SquareCompletion complete_square(const MonicQuadratic& f,
                                 const MonicQuadratic& g) {
  const auto& ring = f.ring();
  if (ring.kind == RingKind::Integers)
    fail(Errc::two_not_unit,
         "complete_square needs 2 invertible; over Z use the nonradical path");
  RingElement two = RingElement::from_int(ring, 2);
  RingElement four = RingElement::from_int(ring, 4);
  return SquareCompletion{exact_div(discriminant(f), four),
                          exact_div(discriminant(g), four),
                          exact_div(f.a, two), exact_div(g.a, two)};
}

NonradicalWitnesses nonradical_witness(const MonicQuadratic& f,
                                       const MonicQuadratic& g,
                                       FactorBudget budget) {
  const auto& ring = f.ring();
  if (ring.kind != RingKind::Integers)
    fail(Errc::hypotheses_not_met,
         "nonradical witnesses apply over Z only; 2 is a unit here, use "
         "complete_square");
  RingElement two = RingElement::from_int(ring, 2);
  if (g.a.is_zero() || !gcd_normalized(two, g.a).is_one())
    fail(Errc::hypotheses_not_met, "hypothesis gcd(2, c) = 1 fails");
  RingElement disc_f = discriminant(f);
  if (disc_f.is_zero())
    fail(Errc::hypotheses_not_met, "hypothesis a^2 - 4b != 0 fails");
  if (!is_square_free(disc_f, budget))
    fail(Errc::hypotheses_not_met,
         "hypothesis fails: a^2 - 4b (the discriminant of f) is not "
         "square-free");
  RingElement disc_g = discriminant(g);
  auto quotient = try_exact_div(disc_g, disc_f);
  if (!quotient)
    fail(Errc::hypotheses_not_met,
         "(c^2 - 4d) is not divisible by (a^2 - 4b): T is a domain, no "
         "witness exists");
  auto e = is_square(*quotient);
  if (!e)
    fail(Errc::hypotheses_not_met,
         "(c^2 - 4d)/(a^2 - 4b) is not a square in Z: T is a domain, no "
         "witness exists");
  auto half_minus = try_exact_div(g.a - f.a * *e, two);
  auto half_plus = try_exact_div(g.a + f.a * *e, two);
  if (!half_minus || !half_plus)
    fail(Errc::hypotheses_not_met, "2 does not divide c -+ a*e");
  return NonradicalWitnesses{*e, *half_minus, *half_plus};
}

std::array<MinimalPrimeCert, 2> minimal_primes_nonradical(
    const MonicQuadratic& f, const MonicQuadratic& g,
    const NonradicalWitnesses& w) {
  const auto& ring = f.ring();
  RingElement one = RingElement::from_int(ring, 1);
  BiPoly h1 = linear_bipoly(ring, one, -w.e, -w.half_minus);
  BiPoly h2 = linear_bipoly(ring, one, w.e, -w.half_plus);
  BiPoly fb = f.as_bipoly(Var::X);
  BiPoly gb = g.as_bipoly(Var::Y);
  BiPoly e2f = fb;
  e2f.scale(w.e * w.e);
  if (!(h1 * h2 == gb - e2f))
    fail(Errc::internal_identity_failure,
         "h1*h2 != g - e^2*f: nonradical witnesses are corrupt");

  MonicQuadratic mod(f.a, f.b, 'z');
  std::array<MinimalPrimeCert, 2> out;
  for (int j = 1; j <= 2; ++j) {
    MinimalPrimeCert cert;
    cert.name = "P" + std::to_string(j);
    cert.tag = CaseTag::Nonradical;
    cert.index = j;
    cert.generators = {fb, gb, j == 1 ? h1 : h2};
    cert.witnesses = w;
    QuadModElement img_x{RingElement(ring), one, mod};
    QuadModElement img_y{j == 1 ? w.half_minus : w.half_plus,
                         j == 1 ? w.e : -w.e, mod};
    if (!eval_bipoly(gb, img_x, img_y).is_zero())
      fail(Errc::internal_identity_failure,
           "g does not vanish at the eliminated root");
    cert.elimination = EliminationMap{mod, img_x, img_y};
    out[static_cast<std::size_t>(j - 1)] = std::move(cert);
  }
  return out;
}

std::pair<TElement, TElement> nondomain_zero_divisors(
    const MonicQuadratic& f1, const MonicQuadratic& f2,
    const QuadExtElement& f2_root) {
  const auto& ring = f1.ring();
  QuadExtContext ext = QuadExtContext::from_quadratic(f1);
  QuadExtElement gamma = f2_root;
  QuadExtElement other = gamma.radical.is_zero()
                             ? QuadExtElement{embed(f2.a) - gamma.base,
                                              FractionElement::zero(ring)}
                             : quadext_conjugate(ext, gamma);

  // clear denominators; lambda^2 * (y - gamma)(y - other) stays in R[x,y]
  RingElement lambda = lcm_el(
      lcm_el(gamma.base.denominator(), gamma.radical.denominator()),
      lcm_el(other.base.denominator(), other.radical.denominator()));
  FractionElement lam = embed(lambda);

  TPresentation pres{f1, f2};
  TElement left = t_zero(pres);
  left.coords[0] = -(lam * gamma.base).as_ring_element();
  left.coords[1] = -(lam * gamma.radical).as_ring_element();
  left.coords[2] = lambda;
  TElement right = t_zero(pres);
  right.coords[0] = -(lam * other.base).as_ring_element();
  right.coords[1] = -(lam * other.radical).as_ring_element();
  right.coords[2] = lambda;
  return {left, right};
}

// ---- case analysis and certificate assembly --------------------------------

namespace {

struct CaseAnalysis {
  CaseTag tag = CaseTag::Free;
  std::vector<MinimalPrimeCert> primes;
  std::vector<IdentityRecord> identities;
  // completed square: J generators are tested after this substitution
  std::optional<std::pair<RingElement, RingElement>> shift;
};

BiPoly radical_zero_divisor_identity(const RingDescriptor& ring,
                                     const RadicalWitnesses& w) {
  // c^2*f1 - d^2*f2 + (d*y - c*x)(c*x + d*y)
  BiPoly f1 = radical_divisor("f1", 0, w);
  BiPoly f2 = radical_divisor("f2", 0, w);
  f1.scale(w.c * w.c);
  f2.scale(w.d * w.d);
  RingElement zero(ring);
  BiPoly left = linear_bipoly(ring, w.d, -w.c, zero);
  BiPoly right = linear_bipoly(ring, w.d, w.c, zero);
  return f1 - f2 + left * right;
}

std::vector<IdentityRecord> radical_identities(const RadicalWitnesses& w) {
  return {IdentityRecord{"zero-divisor-factorization",
                         IdentityRecord::Kind::ExactZero,
                         radical_zero_divisor_identity(w.c.ring(), w)}};
}

std::vector<IdentityRecord> nonradical_identities(
    const MonicQuadratic& f, const MonicQuadratic& g,
    const NonradicalWitnesses& w) {
  const auto& ring = f.ring();
  RingElement one = RingElement::from_int(ring, 1);
  BiPoly h1 = linear_bipoly(ring, one, -w.e, -w.half_minus);
  BiPoly h2 = linear_bipoly(ring, one, w.e, -w.half_plus);
  BiPoly fb = f.as_bipoly(Var::X);
  BiPoly gb = g.as_bipoly(Var::Y);
  BiPoly e2f = fb;
  e2f.scale(w.e * w.e);
  return {IdentityRecord{"h1h2-equals-g-minus-e2f",
                         IdentityRecord::Kind::ExactZero,
                         h1 * h2 - (gb - e2f)},
          IdentityRecord{"h1h2-equals-e2f-plus-g-mod-presentation",
                         IdentityRecord::Kind::ZeroModPresentation,
                         h1 * h2 - (e2f + gb)}};
}

std::vector<IdentityRecord> completed_square_identities(
    const MonicQuadratic& f1, const MonicQuadratic& f2,
    const CompletedSquareWitnesses& w) {
  const auto& ring = f1.ring();
  const RadicalWitnesses& in = w.inner;
  // (x - shift_x)^2 - a1' equals f1 exactly; same in y
  BiPoly ux = shift_vars(radical_divisor("f1", 0, in), -w.shift_x, -w.shift_y);
  BiPoly vy = shift_vars(radical_divisor("f2", 0, in), -w.shift_x, -w.shift_y);
  return {IdentityRecord{"square-completion-x", IdentityRecord::Kind::ExactZero,
                         ux - f1.as_bipoly(Var::X)},
          IdentityRecord{"square-completion-y", IdentityRecord::Kind::ExactZero,
                         vy - f2.as_bipoly(Var::Y)},
          IdentityRecord{"zero-divisor-factorization",
                         IdentityRecord::Kind::ExactZero,
                         radical_zero_divisor_identity(ring, in)}};
}

std::vector<IdentityRecord> reducible_identities(const MonicQuadratic& f1,
                                                 const MonicQuadratic& f2,
                                                 const ReducibleWitnesses& w) {
  std::vector<IdentityRecord> out;
  const auto& ring = f1.ring();
  RingElement one = RingElement::from_int(ring, 1);
  auto factor_check = [&](const MonicQuadratic& f, const RingElement& root,
                          Var v, const std::string& name) {
    RingElement other = f.a - root;
    BiPoly lin1(ring), lin2(ring);
    lin1.add_term(v == Var::X ? 1 : 0, v == Var::X ? 0 : 1, one);
    lin1.add_term(0, 0, -root);
    lin2.add_term(v == Var::X ? 1 : 0, v == Var::X ? 0 : 1, one);
    lin2.add_term(0, 0, -other);
    out.push_back(IdentityRecord{name, IdentityRecord::Kind::ExactZero,
                                 f.as_bipoly(v) - lin1 * lin2});
  };
  if (w.root_x) factor_check(f1, *w.root_x, Var::X, "root-factorization-x");
  if (w.root_y) factor_check(f2, *w.root_y, Var::Y, "root-factorization-y");
  return out;
}

std::vector<RingElement> quadratic_roots_in_R(const MonicQuadratic& f) {
  FractionElement d(discriminant(f));
  auto s = is_square(d);
  if (!s) return {};
  FractionElement two = FractionElement::from_int(f.ring(), 2);
  std::vector<RingElement> roots;
  roots.push_back(((embed(f.a) + *s) / two).as_ring_element());
  RingElement second = ((embed(f.a) - *s) / two).as_ring_element();
  if (!(second == roots[0])) roots.push_back(second);
  return roots;
}

CaseAnalysis analyze_reducible(const ExtensionProblem& p,
                               const std::vector<RingElement>& roots_x,
                               const std::vector<RingElement>& roots_y) {
  CaseAnalysis ca;
  ca.tag = CaseTag::Reducible;
  const auto& ring = p.ring;
  RingElement one = RingElement::from_int(ring, 1);
  RingElement zero(ring);
  BiPoly f1b = p.f1.as_bipoly(Var::X);
  BiPoly f2b = p.f2.as_bipoly(Var::Y);
  int counter = 0;
  auto next_name = [&] { return "P" + std::to_string(counter++); };

  if (!roots_x.empty() && roots_y.empty()) {
    // minimal primes (x - r); target R[y]/(f2)
    MonicQuadratic mod(p.f2.a, p.f2.b, 'z');
    for (const auto& r : roots_x) {
      MinimalPrimeCert cert;
      cert.name = next_name();
      cert.tag = CaseTag::Reducible;
      cert.index = counter - 1;
      BiPoly lin(ring);
      lin.add_term(1, 0, one);
      lin.add_term(0, 0, -r);
      cert.generators = {f1b, f2b, lin};
      cert.witnesses = ReducibleWitnesses{r, std::nullopt};
      cert.elimination = EliminationMap{
          mod, QuadModElement{r, zero, mod}, QuadModElement{zero, one, mod}};
      ca.primes.push_back(std::move(cert));
    }
    ca.identities = reducible_identities(
        p.f1, p.f2, ReducibleWitnesses{roots_x[0], std::nullopt});
  } else if (roots_x.empty() && !roots_y.empty()) {
    // swapped roles: minimal primes (y - s); target R[x]/(f1)
    MonicQuadratic mod(p.f1.a, p.f1.b, 'z');
    for (const auto& s : roots_y) {
      MinimalPrimeCert cert;
      cert.name = next_name();
      cert.tag = CaseTag::Reducible;
      cert.index = counter - 1;
      BiPoly lin(ring);
      lin.add_term(0, 1, one);
      lin.add_term(0, 0, -s);
      cert.generators = {f1b, f2b, lin};
      cert.witnesses = ReducibleWitnesses{std::nullopt, s};
      cert.elimination = EliminationMap{
          mod, QuadModElement{zero, one, mod}, QuadModElement{s, zero, mod}};
      ca.primes.push_back(std::move(cert));
    }
    ca.identities = reducible_identities(
        p.f1, p.f2, ReducibleWitnesses{std::nullopt, roots_y[0]});
  } else {
    // both split: minimal primes (x - r, y - s); target R
    MonicQuadratic mod(zero, zero, 'z');
    for (const auto& r : roots_x) {
      for (const auto& s : roots_y) {
        MinimalPrimeCert cert;
        cert.name = next_name();
        cert.tag = CaseTag::Reducible;
        cert.index = counter - 1;
        BiPoly linx(ring), liny(ring);
        linx.add_term(1, 0, one);
        linx.add_term(0, 0, -r);
        liny.add_term(0, 1, one);
        liny.add_term(0, 0, -s);
        cert.generators = {f1b, f2b, linx, liny};
        cert.witnesses = ReducibleWitnesses{r, s};
        cert.elimination = EliminationMap{
            mod, QuadModElement{r, zero, mod}, QuadModElement{s, zero, mod}};
        ca.primes.push_back(std::move(cert));
      }
    }
    ca.identities =
        reducible_identities(p.f1, p.f2, ReducibleWitnesses{roots_x[0], roots_y[0]});
  }
  return ca;
}

// Case analysis for a problem whose quotient is not free (or whose minimal
// primes are wanted anyway). Throws when the input sits outside every
// supported construction.
CaseAnalysis analyze_case(const ExtensionProblem& p, FactorBudget budget) {
  auto roots_x = quadratic_roots_in_R(p.f1);
  auto roots_y = quadratic_roots_in_R(p.f2);
  if (!roots_x.empty() || !roots_y.empty())
    return analyze_reducible(p, roots_x, roots_y);

  // both irreducible over L
  DomainVerdict verdict = domain_test(p.f1, p.f2, p.ring);
  if (verdict.kind == DomainVerdict::Kind::Domain) {
    CaseAnalysis ca;
    ca.tag = CaseTag::Free;  // domain: no prime is available or needed
    return ca;
  }

  if (p.f1.is_radical() && p.f2.is_radical()) {
    CaseAnalysis ca;
    ca.tag = CaseTag::Radical;
    RadicalWitnesses w = radical_decompose(-p.f1.b, -p.f2.b);
    auto primes = minimal_primes_radical(w);
    ca.primes.assign(primes.begin(), primes.end());
    ca.identities = radical_identities(w);
    return ca;
  }

  if (p.ring.kind != RingKind::Integers) {
    // 2 is a unit: complete the square, solve the radical problem, pull back
    CaseAnalysis ca;
    ca.tag = CaseTag::CompletedSquare;
    SquareCompletion sc = complete_square(p.f1, p.f2);
    RadicalWitnesses w = radical_decompose(sc.a1_prime, sc.a2_prime);
    auto primes = minimal_primes_radical(w);
    for (int r = 0; r < 2; ++r) {
      MinimalPrimeCert& cert = primes[static_cast<std::size_t>(r)];
      cert.tag = CaseTag::CompletedSquare;
      CompletedSquareWitnesses cw{sc.shift_x, sc.shift_y, w, r};
      cert.witnesses = cw;
      for (auto& gen : cert.generators)
        gen = shift_vars(gen, -sc.shift_x, -sc.shift_y);
      // elimination gains the affine part: x -> d*z + a/2, y -> ... + c/2
      cert.elimination->img_x.c0 = sc.shift_x;
      cert.elimination->img_y.c0 = sc.shift_y;
    }
    ca.identities = completed_square_identities(
        p.f1, p.f2, CompletedSquareWitnesses{sc.shift_x, sc.shift_y, w, 0});
    ca.primes.assign(primes.begin(), primes.end());
    ca.shift = std::make_pair(sc.shift_x, sc.shift_y);
    return ca;
  }

  // Z with a nonradical pair: the arithmetic hypotheses hold or nothing does
  CaseAnalysis ca;
  ca.tag = CaseTag::Nonradical;
  NonradicalWitnesses w = nonradical_witness(p.f1, p.f2, budget);
  auto primes = minimal_primes_nonradical(p.f1, p.f2, w);
  ca.primes.assign(primes.begin(), primes.end());
  ca.identities = nonradical_identities(p.f1, p.f2, w);
  return ca;
}

bool generator_in_prime(const BiPoly& gen, const MinimalPrimeCert& prime,
                        const CaseAnalysis& ca) {
  BiPoly h = gen;
  if (ca.shift) h = shift_vars(h, ca.shift->first, ca.shift->second);
  switch (prime.tag) {
    case CaseTag::Radical:
      return membership_in_Pr(h, prime.index,
                              std::get<RadicalWitnesses>(prime.witnesses));
    case CaseTag::CompletedSquare:
      return membership_in_Pr(
          h, prime.index,
          std::get<CompletedSquareWitnesses>(prime.witnesses).inner);
    default:
      return eval_bipoly(gen, prime.elimination->img_x,
                         prime.elimination->img_y)
          .is_zero();
  }
}

MembershipTranscript make_transcript(const BiPoly& gen,
                                     const MinimalPrimeCert& prime,
                                     const CaseAnalysis& ca,
                                     const ExtensionProblem& p) {
  MembershipTranscript tr;
  const auto& ring = p.ring;
  switch (prime.tag) {
    case CaseTag::Radical:
    case CaseTag::CompletedSquare: {
      const RadicalWitnesses& w =
          prime.tag == CaseTag::Radical
              ? std::get<RadicalWitnesses>(prime.witnesses)
              : std::get<CompletedSquareWitnesses>(prime.witnesses).inner;
      BiPoly h = gen;
      if (ca.shift) h = shift_vars(h, ca.shift->first, ca.shift->second);
      tr.generator = h;
      LinearNormalForm nf = reduce_to_linear(h, prime.index, w);
      tr.steps = nf.steps;
      tr.remainder = linear_bipoly(ring, nf.v1, nf.b1, nf.v2);
      tr.cofactor = exact_div(nf.b1, w.c);
      return tr;
    }
    case CaseTag::Nonradical: {
      tr.generator = gen;
      const BiPoly& hj = prime.generators.at(2);
      auto step1 = monic_divide(gen, hj, Var::Y);
      auto step2 =
          monic_divide(step1.remainder, p.f1.as_bipoly(Var::X), Var::X);
      tr.steps = {
          TranscriptStep{prime.index == 1 ? "h1" : "h2", step1.quotient},
          TranscriptStep{"f1", step2.quotient}};
      tr.remainder = step2.remainder;
      return tr;
    }
    case CaseTag::Reducible: {
      tr.generator = gen;
      const auto& w = std::get<ReducibleWitnesses>(prime.witnesses);
      if (w.root_x && w.root_y) {
        BiPoly linx(ring), liny(ring);
        linx.add_term(1, 0, RingElement::from_int(ring, 1));
        linx.add_term(0, 0, -*w.root_x);
        liny.add_term(0, 1, RingElement::from_int(ring, 1));
        liny.add_term(0, 0, -*w.root_y);
        auto step1 = monic_divide(gen, linx, Var::X);
        auto step2 = monic_divide(step1.remainder, liny, Var::Y);
        tr.steps = {TranscriptStep{"x-root", step1.quotient},
                    TranscriptStep{"y-root", step2.quotient}};
        tr.remainder = step2.remainder;
      } else if (w.root_x) {
        BiPoly linx(ring);
        linx.add_term(1, 0, RingElement::from_int(ring, 1));
        linx.add_term(0, 0, -*w.root_x);
        auto step1 = monic_divide(gen, linx, Var::X);
        auto step2 =
            monic_divide(step1.remainder, p.f2.as_bipoly(Var::Y), Var::Y);
        tr.steps = {TranscriptStep{"x-root", step1.quotient},
                    TranscriptStep{"f2", step2.quotient}};
        tr.remainder = step2.remainder;
      } else {
        BiPoly liny(ring);
        liny.add_term(0, 1, RingElement::from_int(ring, 1));
        liny.add_term(0, 0, -*w.root_y);
        auto step1 = monic_divide(gen, liny, Var::Y);
        auto step2 =
            monic_divide(step1.remainder, p.f1.as_bipoly(Var::X), Var::X);
        tr.steps = {TranscriptStep{"y-root", step1.quotient},
                    TranscriptStep{"f1", step2.quotient}};
        tr.remainder = step2.remainder;
      }
      return tr;
    }
    case CaseTag::Free: {
      tr.generator = gen;
      auto step1 = monic_divide(gen, p.f1.as_bipoly(Var::X), Var::X);
      auto step2 =
          monic_divide(step1.remainder, p.f2.as_bipoly(Var::Y), Var::Y);
      tr.steps = {TranscriptStep{"f1", step1.quotient},
                  TranscriptStep{"f2", step2.quotient}};
      tr.remainder = step2.remainder;
      return tr;
    }
  }
  fail(Errc::internal_identity_failure, "unreachable transcript case");
}

std::array<RingElement, 4> retraction_from_elimination(
    const EliminationMap& elim, const RingDescriptor& ring) {
  return {RingElement::from_int(ring, 1), qm_pi1(elim.img_x),
          qm_pi1(elim.img_y), qm_pi1(qm_mul(elim.img_x, elim.img_y))};
}

SplitCertificate make_free_certificate(const ExtensionProblem& p,
                                       const BuildOptions& options) {
  SplitCertificate cert;
  cert.problem = p;
  cert.tag = CaseTag::Free;
  MinimalPrimeCert free_prime;
  free_prime.name = "free";
  free_prime.tag = CaseTag::Free;
  cert.minimal_primes.push_back(free_prime);
  cert.selected = "free";
  RingElement zero(p.ring);
  cert.retraction = {RingElement::from_int(p.ring, 1), zero, zero, zero};
  CaseAnalysis dummy;
  for (const auto& gen : p.j_generators)
    cert.transcripts.push_back(
        make_transcript(gen, free_prime, dummy, p));
  cert.probe_seed = options.probe_seed;
  return cert;
}

SplitCertificate assemble_certificate(const ExtensionProblem& p,
                                      const CaseAnalysis& ca,
                                      std::size_t selected_index,
                                      const BuildOptions& options) {
  SplitCertificate cert;
  cert.problem = p;
  cert.tag = ca.tag;
  cert.minimal_primes = ca.primes;
  const MinimalPrimeCert& sel = ca.primes.at(selected_index);
  cert.selected = sel.name;
  cert.retraction = retraction_from_elimination(*sel.elimination, p.ring);
  for (const auto& gen : p.j_generators)
    cert.transcripts.push_back(make_transcript(gen, sel, ca, p));
  cert.identities = ca.identities;
  cert.probe_seed = options.probe_seed;
  return cert;
}

void validate_problem(const ExtensionProblem& p) {
  if (!(p.f1.ring() == p.ring) || !(p.f2.ring() == p.ring))
    fail(Errc::mixed_contexts, "problem polynomials over a foreign ring");
  for (const auto& gen : p.j_generators)
    if (!(gen.ring() == p.ring))
      fail(Errc::mixed_contexts, "J generator over a foreign ring");
}

}  // namespace

std::vector<SplitCertificate> build_retraction(const ExtensionProblem& problem,
                                               const BuildOptions& options) {
  validate_problem(problem);
  TPresentation pres = problem.presentation();
  bool j_zero = true;
  for (const auto& gen : problem.j_generators)
    if (!t_reduce(gen, pres).is_zero()) {
      j_zero = false;
      break;
    }

  if (j_zero) {
    std::vector<SplitCertificate> out;
    out.push_back(make_free_certificate(problem, options));
    if (options.all_primes) {
      CaseAnalysis ca = analyze_case(problem, options.budget);
      for (std::size_t i = 0; i < ca.primes.size(); ++i)
        out.push_back(assemble_certificate(problem, ca, i, options));
    }
    return out;
  }

  CaseAnalysis ca = analyze_case(problem, options.budget);
  if (ca.primes.empty())
    fail(Errc::no_prime_contains_j,
         "T is a domain, so J must be (0); a nonzero J cannot have height "
         "zero here");
  for (std::size_t i = 0; i < ca.primes.size(); ++i) {
    bool all_in = true;
    for (const auto& gen : problem.j_generators)
      if (!generator_in_prime(gen, ca.primes[i], ca)) {
        all_in = false;
        break;
      }
    if (all_in) return {assemble_certificate(problem, ca, i, options)};
  }
  fail(Errc::no_prime_contains_j,
       "no minimal prime contains every J generator; the input is not a "
       "height-zero quotient of T");
}

}  // namespace splitforge
