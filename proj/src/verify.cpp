#include "splitforge/verify.hpp"

#include <functional>

namespace splitforge {

namespace {

RingElement sign_pow(const RingDescriptor& ring, int r) {
  return RingElement::from_int(ring, r % 2 == 0 ? 1 : -1);
}

long next_in(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

BiPoly linear_bipoly(const RingDescriptor& ring, const RingElement& cy,
                     const RingElement& cx, const RingElement& c0) {
  BiPoly p(ring);
  p.add_term(0, 1, cy);
  p.add_term(1, 0, cx);
  p.add_term(0, 0, c0);
  return p;
}

const RadicalWitnesses* radical_part(const MinimalPrimeCert& prime) {
  if (const auto* w = std::get_if<RadicalWitnesses>(&prime.witnesses))
    return w;
  if (const auto* w = std::get_if<CompletedSquareWitnesses>(&prime.witnesses))
    return &w->inner;
  return nullptr;
}

// The verifier re-derives every divisor from the problem and the recorded
// witnesses; transcript bodies are never trusted for divisor polynomials.
BiPoly divisor_for_tag(const std::string& tag, const ExtensionProblem& problem,
                       const MinimalPrimeCert& prime) {
  const auto& ring = problem.ring;
  switch (prime.tag) {
    case CaseTag::Radical:
    case CaseTag::CompletedSquare:
      return radical_divisor(tag, prime.index, *radical_part(prime));
    case CaseTag::Nonradical: {
      const auto& w = std::get<NonradicalWitnesses>(prime.witnesses);
      RingElement one = RingElement::from_int(ring, 1);
      if (tag == "h1" && prime.index == 1)
        return linear_bipoly(ring, one, -w.e, -w.half_minus);
      if (tag == "h2" && prime.index == 2)
        return linear_bipoly(ring, one, w.e, -w.half_plus);
      if (tag == "f1") return problem.f1.as_bipoly(Var::X);
      if (tag == "f2") return problem.f2.as_bipoly(Var::Y);
      fail(Errc::malformed_certificate,
           "transcript divisor '" + tag + "' is not valid for " + prime.name);
    }
    case CaseTag::Reducible: {
      const auto& w = std::get<ReducibleWitnesses>(prime.witnesses);
      RingElement one = RingElement::from_int(ring, 1);
      if (tag == "x-root" && w.root_x) {
        BiPoly p(ring);
        p.add_term(1, 0, one);
        p.add_term(0, 0, -*w.root_x);
        return p;
      }
      if (tag == "y-root" && w.root_y) {
        BiPoly p(ring);
        p.add_term(0, 1, one);
        p.add_term(0, 0, -*w.root_y);
        return p;
      }
      if (tag == "f1") return problem.f1.as_bipoly(Var::X);
      if (tag == "f2") return problem.f2.as_bipoly(Var::Y);
      fail(Errc::malformed_certificate,
           "transcript divisor '" + tag + "' is not valid for " + prime.name);
    }
    case CaseTag::Free: {
      if (tag == "f1") return problem.f1.as_bipoly(Var::X);
      if (tag == "f2") return problem.f2.as_bipoly(Var::Y);
      fail(Errc::malformed_certificate,
           "transcript divisor '" + tag + "' is not valid in the free case");
    }
  }
  fail(Errc::malformed_certificate, "unknown case tag");
}

struct CheckContext {
  const ExtensionProblem& problem;
  const SplitCertificate& cert;
  const MinimalPrimeCert* selected = nullptr;
};

using CheckFn = std::function<std::pair<bool, std::string>(const CheckContext&)>;

std::pair<bool, std::string> ok() { return {true, ""}; }
std::pair<bool, std::string> bad(std::string detail) {
  return {false, std::move(detail)};
}

std::pair<bool, std::string> check_structure(const CheckContext& ctx) {
  const auto& cert = ctx.cert;
  if (!ctx.selected) return bad("selected prime '" + cert.selected + "' is not listed");
  const auto& prime = *ctx.selected;
  if (prime.tag != cert.tag) return bad("case tag differs from the selected prime's tag");
  if (cert.tag != CaseTag::Free && !prime.elimination)
    return bad("missing elimination map");
  bool witness_shape_ok = false;
  switch (cert.tag) {
    case CaseTag::Free:
      witness_shape_ok =
          std::holds_alternative<std::monostate>(prime.witnesses);
      break;
    case CaseTag::Radical:
      witness_shape_ok = std::holds_alternative<RadicalWitnesses>(prime.witnesses);
      break;
    case CaseTag::CompletedSquare:
      witness_shape_ok =
          std::holds_alternative<CompletedSquareWitnesses>(prime.witnesses);
      break;
    case CaseTag::Nonradical:
      witness_shape_ok =
          std::holds_alternative<NonradicalWitnesses>(prime.witnesses);
      break;
    case CaseTag::Reducible:
      witness_shape_ok =
          std::holds_alternative<ReducibleWitnesses>(prime.witnesses);
      break;
  }
  if (!witness_shape_ok) return bad("witness payload does not match the case");
  if (cert.transcripts.size() != ctx.problem.j_generators.size())
    return bad("expected one transcript per J generator");
  for (const auto& r : cert.retraction)
    if (!(r.ring() == ctx.problem.ring)) return bad("retraction over a foreign ring");
  return ok();
}

std::pair<bool, std::string> check_echo(const CheckContext& ctx) {
  if (!(ctx.cert.problem == ctx.problem))
    return bad("certificate echoes a different problem");
  return ok();
}

std::pair<bool, std::string> check_witness_equations(const CheckContext& ctx) {
  const auto& p = ctx.problem;
  const auto& prime = *ctx.selected;
  const auto& ring = p.ring;
  RingElement two = RingElement::from_int(ring, 2);
  switch (ctx.cert.tag) {
    case CaseTag::Free:
      return ok();
    case CaseTag::Radical: {
      const auto& w = std::get<RadicalWitnesses>(prime.witnesses);
      if (w.c.is_zero() || w.d.is_zero() || w.u.is_zero())
        return bad("witnesses must be nonzero");
      if (!p.f1.a.is_zero() || !p.f2.a.is_zero())
        return bad("presentation is not radical");
      if (!(-p.f1.b == w.d * w.d * w.u)) return bad("a1 != d^2*u");
      if (!(-p.f2.b == w.c * w.c * w.u)) return bad("a2 != c^2*u");
      if (!gcd_normalized(w.c, w.d).is_one()) return bad("gcd(c, d) != 1");
      return ok();
    }
    case CaseTag::CompletedSquare: {
      const auto& w = std::get<CompletedSquareWitnesses>(prime.witnesses);
      const auto& in = w.inner;
      if (in.c.is_zero() || in.d.is_zero() || in.u.is_zero())
        return bad("witnesses must be nonzero");
      if (w.inner_r != prime.index) return bad("inner r differs from the prime index");
      if (!(two * w.shift_x == p.f1.a)) return bad("shift_x != a/2");
      if (!(two * w.shift_y == p.f2.a)) return bad("shift_y != c/2");
      if (!(in.d * in.d * in.u == w.shift_x * w.shift_x - p.f1.b))
        return bad("a1' != d^2*u after completing the square");
      if (!(in.c * in.c * in.u == w.shift_y * w.shift_y - p.f2.b))
        return bad("a2' != c^2*u after completing the square");
      if (!gcd_normalized(in.c, in.d).is_one()) return bad("gcd(c, d) != 1");
      return ok();
    }
    case CaseTag::Nonradical: {
      const auto& w = std::get<NonradicalWitnesses>(prime.witnesses);
      RingElement disc_f = discriminant(p.f1);
      RingElement disc_g = discriminant(p.f2);
      if (!(disc_g == w.e * w.e * disc_f))
        return bad("c^2 - 4d != e^2*(a^2 - 4b)");
      if (!(two * w.half_minus == p.f2.a - p.f1.a * w.e))
        return bad("half_minus != (c - a*e)/2");
      if (!(two * w.half_plus == p.f2.a + p.f1.a * w.e))
        return bad("half_plus != (c + a*e)/2");
      if (p.f2.a.is_zero() || !gcd_normalized(two, p.f2.a).is_one())
        return bad("gcd(2, c) != 1");
      return ok();
    }
    case CaseTag::Reducible: {
      const auto& w = std::get<ReducibleWitnesses>(prime.witnesses);
      if (!w.root_x && !w.root_y) return bad("no substituted root recorded");
      if (w.root_x) {
        const auto& r = *w.root_x;
        if (!(r * r - p.f1.a * r + p.f1.b).is_zero())
          return bad("root_x is not a root of f1");
      }
      if (w.root_y) {
        const auto& s = *w.root_y;
        if (!(s * s - p.f2.a * s + p.f2.b).is_zero())
          return bad("root_y is not a root of f2");
      }
      return ok();
    }
  }
  return bad("unknown case");
}

std::pair<bool, std::string> check_elimination_matches(const CheckContext& ctx) {
  if (ctx.cert.tag == CaseTag::Free) return ok();
  const auto& prime = *ctx.selected;
  const auto& elim = *prime.elimination;
  const auto& ring = ctx.problem.ring;
  RingElement zero(ring);
  RingElement one = RingElement::from_int(ring, 1);
  switch (ctx.cert.tag) {
    case CaseTag::Radical:
    case CaseTag::CompletedSquare: {
      const auto& w = *radical_part(prime);
      RingElement cx = zero, cy = zero;
      if (const auto* cs =
              std::get_if<CompletedSquareWitnesses>(&prime.witnesses)) {
        cx = cs->shift_x;
        cy = cs->shift_y;
      }
      if (!(elim.modulus.a.is_zero() && elim.modulus.b == -w.u))
        return bad("target modulus is not z^2 - u");
      if (!(elim.img_x.c0 == cx && elim.img_x.c1 == w.d))
        return bad("image of x is not d*z (+ shift)");
      RingElement expect = -sign_pow(ring, prime.index) * w.c;
      if (!(elim.img_y.c0 == cy && elim.img_y.c1 == expect))
        return bad("image of y is not (-1)^(r+1)*c*z (+ shift)");
      return ok();
    }
    case CaseTag::Nonradical: {
      const auto& w = std::get<NonradicalWitnesses>(prime.witnesses);
      if (!(elim.modulus.a == ctx.problem.f1.a &&
            elim.modulus.b == ctx.problem.f1.b))
        return bad("target modulus is not f1");
      if (!(elim.img_x.c0 == zero && elim.img_x.c1 == one))
        return bad("image of x is not zbar");
      RingElement want_c0 = prime.index == 1 ? w.half_minus : w.half_plus;
      RingElement want_c1 = prime.index == 1 ? w.e : -w.e;
      if (!(elim.img_y.c0 == want_c0 && elim.img_y.c1 == want_c1))
        return bad("image of y is not e*zbar + (c -+ a*e)/2");
      return ok();
    }
    case CaseTag::Reducible: {
      const auto& w = std::get<ReducibleWitnesses>(prime.witnesses);
      if (w.root_x) {
        if (!(elim.img_x.c0 == *w.root_x && elim.img_x.c1.is_zero()))
          return bad("image of x is not the recorded root");
      } else if (!(elim.img_x.c0 == zero && elim.img_x.c1 == one)) {
        return bad("image of x is not zbar");
      }
      if (w.root_y) {
        if (!(elim.img_y.c0 == *w.root_y && elim.img_y.c1.is_zero()))
          return bad("image of y is not the recorded root");
      } else if (!(elim.img_y.c0 == zero && elim.img_y.c1 == one)) {
        return bad("image of y is not zbar");
      }
      return ok();
    }
    default:
      return ok();
  }
}

std::pair<bool, std::string> check_elimination_well_defined(
    const CheckContext& ctx) {
  if (ctx.cert.tag == CaseTag::Free) return ok();
  const auto& elim = *ctx.selected->elimination;
  if (!eval_bipoly(ctx.problem.f1.as_bipoly(Var::X), elim.img_x, elim.img_y)
           .is_zero())
    return bad("f1 does not vanish under the elimination map");
  if (!eval_bipoly(ctx.problem.f2.as_bipoly(Var::Y), elim.img_x, elim.img_y)
           .is_zero())
    return bad("f2 does not vanish under the elimination map");
  return ok();
}

std::pair<bool, std::string> check_prime_generators(const CheckContext& ctx) {
  for (const auto& prime : ctx.cert.minimal_primes) {
    if (!prime.elimination) continue;  // free pseudo-prime
    for (std::size_t g = 0; g < prime.generators.size(); ++g) {
      if (!eval_bipoly(prime.generators[g], prime.elimination->img_x,
                       prime.elimination->img_y)
               .is_zero())
        return bad(prime.name + " generator " + std::to_string(g) +
                   " does not vanish under its elimination map");
    }
  }
  return ok();
}

std::pair<bool, std::string> check_transcripts(const CheckContext& ctx) {
  const auto& cert = ctx.cert;
  const auto& prime = *ctx.selected;
  const auto& ring = ctx.problem.ring;
  for (std::size_t i = 0; i < ctx.problem.j_generators.size(); ++i) {
    const auto& tr = cert.transcripts.at(i);
    BiPoly expected = ctx.problem.j_generators[i];
    if (const auto* cs =
            std::get_if<CompletedSquareWitnesses>(&prime.witnesses))
      expected = shift_vars(expected, cs->shift_x, cs->shift_y);
    if (!(tr.generator == expected))
      return bad("transcript " + std::to_string(i) +
                 " does not carry the J generator");
    if (tr.steps.size() > 8)
      return bad("transcript " + std::to_string(i) + " is oversized");
    BiPoly sum = tr.remainder;
    for (const auto& step : tr.steps)
      sum += divisor_for_tag(step.divisor_tag, ctx.problem, prime) *
             step.quotient;
    if (!(sum == tr.generator))
      return bad("transcript " + std::to_string(i) +
                 " does not replay to the generator");
    if (prime.tag == CaseTag::Radical ||
        prime.tag == CaseTag::CompletedSquare) {
      const auto& w = *radical_part(prime);
      RingElement v1 = tr.remainder.coeff(0, 1);
      RingElement b1 = tr.remainder.coeff(1, 0);
      RingElement v2 = tr.remainder.coeff(0, 0);
      if (!(tr.remainder == linear_bipoly(ring, v1, b1, v2)))
        return bad("transcript " + std::to_string(i) +
                   " remainder is not linear");
      if (!v2.is_zero())
        return bad("transcript " + std::to_string(i) + ": v2 != 0");
      RingElement sr = sign_pow(ring, prime.index);
      if (!(-sr * v1 * w.c + b1 * w.d).is_zero())
        return bad("transcript " + std::to_string(i) +
                   ": (-1)^(r+1)*v1*c + b1*d != 0");
      if (!tr.cofactor)
        return bad("transcript " + std::to_string(i) + ": missing cofactor");
      if (!(b1 == *tr.cofactor * w.c && v1 == sr * *tr.cofactor * w.d))
        return bad("transcript " + std::to_string(i) +
                   ": cofactor relations fail");
    } else {
      if (!tr.remainder.is_zero())
        return bad("transcript " + std::to_string(i) +
                   " leaves a nonzero remainder");
    }
  }
  return ok();
}

std::pair<bool, std::string> check_membership_by_elimination(
    const CheckContext& ctx) {
  const auto& prime = *ctx.selected;
  for (std::size_t i = 0; i < ctx.problem.j_generators.size(); ++i) {
    const BiPoly& gen = ctx.problem.j_generators[i];
    bool in = false;
    switch (prime.tag) {
      case CaseTag::Free:
        in = t_reduce(gen, ctx.problem.presentation()).is_zero();
        break;
      case CaseTag::Radical:
        in = psi_eval(gen, prime.index, *radical_part(prime)).is_zero();
        break;
      case CaseTag::CompletedSquare: {
        const auto& cs = std::get<CompletedSquareWitnesses>(prime.witnesses);
        BiPoly shifted = shift_vars(gen, cs.shift_x, cs.shift_y);
        in = psi_eval(shifted, prime.index, cs.inner).is_zero();
        break;
      }
      default:
        in = eval_bipoly(gen, prime.elimination->img_x,
                         prime.elimination->img_y)
                 .is_zero();
        break;
    }
    if (!in)
      return bad("J generator " + std::to_string(i) +
                 " is not in the selected prime");
  }
  return ok();
}

std::pair<bool, std::string> check_retraction_unit(const CheckContext& ctx) {
  if (!ctx.cert.retraction[0].is_one()) return bad("rho(1) != 1");
  return ok();
}

std::pair<bool, std::string> check_retraction_matches(const CheckContext& ctx) {
  const auto& ring = ctx.problem.ring;
  std::array<RingElement, 4> expect = {RingElement::from_int(ring, 1),
                                       RingElement(ring), RingElement(ring),
                                       RingElement(ring)};
  if (ctx.cert.tag != CaseTag::Free) {
    const auto& elim = *ctx.selected->elimination;
    expect[1] = qm_pi1(elim.img_x);
    expect[2] = qm_pi1(elim.img_y);
    expect[3] = qm_pi1(qm_mul(elim.img_x, elim.img_y));
  }
  for (int i = 0; i < 4; ++i)
    if (!(ctx.cert.retraction[static_cast<std::size_t>(i)] ==
          expect[static_cast<std::size_t>(i)]))
      return bad("rho coordinate " + std::to_string(i) +
                 " differs from pi1 of the elimination images");
  return ok();
}

RingElement apply_retraction(const std::array<RingElement, 4>& rho,
                             const TElement& t) {
  RingElement acc(t.ring());
  for (std::size_t i = 0; i < 4; ++i) acc += t.coords[i] * rho[i];
  return acc;
}

TElement random_t_element(const TPresentation& pres, std::mt19937_64& rng) {
  TElement t = t_zero(pres);
  for (auto& c : t.coords) c = random_ring_element(pres.f1.ring(), rng, 99);
  return t;
}

std::pair<bool, std::string> check_linearity(const CheckContext& ctx,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TPresentation pres = ctx.problem.presentation();
  for (int k = 0; k < 100; ++k) {
    RingElement r = random_ring_element(ctx.problem.ring, rng, 99);
    TElement t = random_t_element(pres, rng);
    RingElement lhs = apply_retraction(ctx.cert.retraction, t_scale(r, t));
    RingElement rhs = r * apply_retraction(ctx.cert.retraction, t);
    if (!(lhs == rhs))
      return bad("rho(r*t) != r*rho(t) at probe " + std::to_string(k));
  }
  return ok();
}

std::pair<bool, std::string> check_ideal_kill(const CheckContext& ctx,
                                              std::uint64_t seed) {
  if (ctx.cert.tag == CaseTag::Free) return ok();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  TPresentation pres = ctx.problem.presentation();
  const auto& prime = *ctx.selected;
  for (std::size_t g = 0; g < prime.generators.size(); ++g) {
    TElement gen_t = t_reduce(prime.generators[g], pres);
    for (int k = 0; k < 25; ++k) {
      TElement t = random_t_element(pres, rng);
      RingElement image =
          apply_retraction(ctx.cert.retraction, t_mul(gen_t, t));
      if (!image.is_zero())
        return bad("rho does not kill generator " + std::to_string(g) +
                   " times a random element");
    }
  }
  return ok();
}

std::pair<bool, std::string> check_identity_suite(const CheckContext& ctx);

}  // namespace

// Expected identity list per case, recomputed from the recorded witnesses.
std::vector<std::pair<std::string, bool>> check_identities(
    const SplitCertificate& cert) {
  std::vector<std::pair<std::string, bool>> out;
  const MinimalPrimeCert* sel = cert.selected_prime();
  if (!sel) return out;
  const auto& p = cert.problem;
  const auto& ring = p.ring;
  RingElement one = RingElement::from_int(ring, 1);
  RingElement zero(ring);

  auto record = [&](const std::string& name, const BiPoly& recomputed,
                    IdentityRecord::Kind kind) {
    bool good = true;
    // the stored expansion must match the recomputation term by term
    const IdentityRecord* stored = nullptr;
    for (const auto& id : cert.identities)
      if (id.name == name) stored = &id;
    if (!stored || stored->kind != kind || !(stored->difference == recomputed))
      good = false;
    if (kind == IdentityRecord::Kind::ExactZero) {
      if (!recomputed.is_zero()) good = false;
    } else {
      if (!reduce_mod_presentation(recomputed, p.f1, p.f2).is_zero())
        good = false;
    }
    out.emplace_back(name, good);
  };

  auto radical_identity = [&](const RadicalWitnesses& w) {
    BiPoly f1 = radical_divisor("f1", 0, w);
    BiPoly f2 = radical_divisor("f2", 0, w);
    f1.scale(w.c * w.c);
    f2.scale(w.d * w.d);
    BiPoly left = linear_bipoly(ring, w.d, -w.c, zero);
    BiPoly right = linear_bipoly(ring, w.d, w.c, zero);
    return f1 - f2 + left * right;
  };

  switch (cert.tag) {
    case CaseTag::Free:
      break;
    case CaseTag::Radical: {
      const auto& w = std::get<RadicalWitnesses>(sel->witnesses);
      record("zero-divisor-factorization", radical_identity(w),
             IdentityRecord::Kind::ExactZero);
      break;
    }
    case CaseTag::CompletedSquare: {
      const auto& w = std::get<CompletedSquareWitnesses>(sel->witnesses);
      BiPoly ux =
          shift_vars(radical_divisor("f1", 0, w.inner), -w.shift_x, -w.shift_y);
      BiPoly vy =
          shift_vars(radical_divisor("f2", 0, w.inner), -w.shift_x, -w.shift_y);
      record("square-completion-x", ux - p.f1.as_bipoly(Var::X),
             IdentityRecord::Kind::ExactZero);
      record("square-completion-y", vy - p.f2.as_bipoly(Var::Y),
             IdentityRecord::Kind::ExactZero);
      record("zero-divisor-factorization", radical_identity(w.inner),
             IdentityRecord::Kind::ExactZero);
      break;
    }
    case CaseTag::Nonradical: {
      const auto& w = std::get<NonradicalWitnesses>(sel->witnesses);
      BiPoly h1 = linear_bipoly(ring, one, -w.e, -w.half_minus);
      BiPoly h2 = linear_bipoly(ring, one, w.e, -w.half_plus);
      BiPoly fb = p.f1.as_bipoly(Var::X);
      BiPoly gb = p.f2.as_bipoly(Var::Y);
      BiPoly e2f = fb;
      e2f.scale(w.e * w.e);
      record("h1h2-equals-g-minus-e2f", h1 * h2 - (gb - e2f),
             IdentityRecord::Kind::ExactZero);
      record("h1h2-equals-e2f-plus-g-mod-presentation", h1 * h2 - (e2f + gb),
             IdentityRecord::Kind::ZeroModPresentation);
      break;
    }
    case CaseTag::Reducible: {
      const auto& w = std::get<ReducibleWitnesses>(sel->witnesses);
      auto factor_check = [&](const MonicQuadratic& f, const RingElement& root,
                              Var v, const std::string& name) {
        RingElement other = f.a - root;
        BiPoly lin1(ring), lin2(ring);
        lin1.add_term(v == Var::X ? 1 : 0, v == Var::X ? 0 : 1, one);
        lin1.add_term(0, 0, -root);
        lin2.add_term(v == Var::X ? 1 : 0, v == Var::X ? 0 : 1, one);
        lin2.add_term(0, 0, -other);
        record(name, f.as_bipoly(v) - lin1 * lin2,
               IdentityRecord::Kind::ExactZero);
      };
      if (w.root_x) factor_check(p.f1, *w.root_x, Var::X, "root-factorization-x");
      if (w.root_y) factor_check(p.f2, *w.root_y, Var::Y, "root-factorization-y");
      break;
    }
  }
  return out;
}

namespace {

std::pair<bool, std::string> check_identity_suite(const CheckContext& ctx) {
  auto results = check_identities(ctx.cert);
  if (results.size() != ctx.cert.identities.size())
    return bad("identity checklist has the wrong length");
  for (const auto& [name, good] : results)
    if (!good) return bad("identity '" + name + "' fails");
  return ok();
}

}  // namespace

VerificationReport verify_certificate(const ExtensionProblem& problem,
                                      const SplitCertificate& cert,
                                      std::optional<std::uint64_t> seed) {
  VerificationReport report;
  report.seed = seed ? *seed : cert.probe_seed;

  CheckContext ctx{problem, cert, cert.selected_prime()};
  auto guarded = [&](const std::string& name, auto&& fn) {
    VerificationCheck check;
    check.name = name;
    try {
      auto [good, detail] = fn();
      check.ok = good;
      check.detail = detail;
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(check));
  };

  guarded("structure", [&] { return check_structure(ctx); });
  guarded("problem-echo", [&] { return check_echo(ctx); });
  guarded("witness-equations", [&] { return check_witness_equations(ctx); });
  guarded("elimination-matches-witnesses",
          [&] { return check_elimination_matches(ctx); });
  guarded("elimination-well-defined",
          [&] { return check_elimination_well_defined(ctx); });
  guarded("prime-generators-vanish",
          [&] { return check_prime_generators(ctx); });
  guarded("j-membership-transcripts", [&] { return check_transcripts(ctx); });
  guarded("j-membership-elimination",
          [&] { return check_membership_by_elimination(ctx); });
  guarded("retraction-unit", [&] { return check_retraction_unit(ctx); });
  guarded("retraction-matches-elimination",
          [&] { return check_retraction_matches(ctx); });
  guarded("linearity-probes", [&] { return check_linearity(ctx, report.seed); });
  guarded("ideal-kill-probes",
          [&] { return check_ideal_kill(ctx, report.seed); });
  guarded("identities", [&] { return check_identity_suite(ctx); });

  report.pass = true;
  for (const auto& c : report.checks)
    if (!c.ok) report.pass = false;
  return report;
}

RingElement random_ring_element(const RingDescriptor& ring,
                                std::mt19937_64& rng, long bound) {
  switch (ring.kind) {
    case RingKind::Integers:
      return RingElement::integer(next_in(rng, -bound, bound));
    case RingKind::RationalPolys: {
      unsigned deg = static_cast<unsigned>(rng() % 3);
      RingElement::QCoeffs cs(deg + 1);
      for (auto& c : cs)
        c = Rational(next_in(rng, -9, 9), next_in(rng, 1, 3));
      return RingElement::rational_poly(std::move(cs), ring.variable);
    }
    case RingKind::PrimePolys: {
      unsigned deg = static_cast<unsigned>(rng() % 3);
      RingElement::PCoeffs cs(deg + 1);
      for (auto& c : cs) c = rng() % ring.characteristic;
      return RingElement::prime_poly(ring.characteristic, std::move(cs),
                                     ring.variable);
    }
  }
  fail(Errc::unknown_ring, "bad ring descriptor");
}

BiPoly random_bipoly(const RingDescriptor& ring, std::mt19937_64& rng,
                     unsigned degree_bound, unsigned max_terms,
                     long coeff_bound) {
  BiPoly p(ring);
  unsigned terms = 1 + static_cast<unsigned>(rng() % max_terms);
  for (unsigned i = 0; i < terms; ++i) {
    unsigned dx = static_cast<unsigned>(rng() % (degree_bound + 1));
    unsigned dy = static_cast<unsigned>(rng() % (degree_bound + 1 - dx));
    p.add_term(dx, dy, random_ring_element(ring, rng, coeff_bound));
  }
  return p;
}

bool cross_check_membership(const RadicalWitnesses& w, std::size_t samples,
                            unsigned degree_bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& ring = w.c.ring();
  static const char* kTags[] = {"f1", "f2", "f3r", "f4r"};
  for (std::size_t i = 0; i < samples; ++i) {
    BiPoly h = random_bipoly(ring, rng, degree_bound);
    std::uint64_t mode = rng() % 3;
    if (mode == 1) {
      // plant a member: generator times a random low-degree polynomial
      int rr = static_cast<int>(rng() % 2);
      BiPoly gen = radical_divisor(kTags[rng() % 4], rr, w);
      h = gen * random_bipoly(ring, rng, degree_bound >= 2 ? degree_bound - 2 : 0);
    } else if (mode == 2) {
      // near-member: planted member plus one
      int rr = static_cast<int>(rng() % 2);
      BiPoly gen = radical_divisor(kTags[rng() % 4], rr, w);
      h = gen * random_bipoly(ring, rng, degree_bound >= 2 ? degree_bound - 2 : 0);
      h.add_term(0, 0, RingElement::from_int(ring, 1));
    }
    for (int r = 0; r < 2; ++r)
      if (membership_via_normal_form(h, r, w) != membership_via_psi(h, r, w))
        return false;
  }
  return true;
}

}  // namespace splitforge
