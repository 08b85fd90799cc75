#include "splitforge/quotient.hpp"

namespace splitforge {

namespace {

RingElement sign_pow(const RingDescriptor& ring, int r) {
  return RingElement::from_int(ring, r % 2 == 0 ? 1 : -1);
}

}  // namespace

TElement t_zero(const TPresentation& pres) {
  RingElement z(pres.f1.ring());
  return TElement{{z, z, z, z}, pres};
}

TElement t_one(const TPresentation& pres) {
  TElement t = t_zero(pres);
  t.coords[0] = RingElement::from_int(pres.f1.ring(), 1);
  return t;
}

TElement t_from_coords(const TPresentation& pres,
                       std::array<RingElement, 4> coords) {
  return TElement{std::move(coords), pres};
}

TElement t_add(const TElement& s, const TElement& t) {
  TElement r = s;
  for (int i = 0; i < 4; ++i) r.coords[i] += t.coords[i];
  return r;
}

TElement t_scale(const RingElement& r, const TElement& t) {
  TElement out = t;
  for (auto& c : out.coords) c *= r;
  return out;
}

TElement t_mul(const TElement& s, const TElement& t) {
  if (!(s.pres == t.pres))
    fail(Errc::mixed_presentations,
         "t_mul: operands from different presentations of T");
  const auto& al = s.pres.f1.a;
  const auto& be = s.pres.f1.b;
  const auto& ga = s.pres.f2.a;
  const auto& de = s.pres.f2.b;
  const auto& a = s.coords;
  const auto& b = t.coords;

  TElement r = t_zero(s.pres);
  auto& o = r.coords;
  // plain basis products
  o[0] += a[0] * b[0];
  o[1] += a[0] * b[1] + a[1] * b[0];
  o[2] += a[0] * b[2] + a[2] * b[0];
  o[3] += a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  // xbar^2 = al*xbar - be
  RingElement m = a[1] * b[1];
  o[1] += al * m;
  o[0] -= be * m;
  // ybar^2 = ga*ybar - de
  m = a[2] * b[2];
  o[2] += ga * m;
  o[0] -= de * m;
  // xbar^2*ybar = al*xbar*ybar - be*ybar
  m = a[1] * b[3] + a[3] * b[1];
  o[3] += al * m;
  o[2] -= be * m;
  // xbar*ybar^2 = ga*xbar*ybar - de*xbar
  m = a[2] * b[3] + a[3] * b[2];
  o[3] += ga * m;
  o[1] -= de * m;
  // (xbar*ybar)^2 = (al*xbar - be)(ga*ybar - de)
  m = a[3] * b[3];
  o[3] += al * ga * m;
  o[1] -= al * de * m;
  o[2] -= be * ga * m;
  o[0] += be * de * m;
  return r;
}

TElement t_reduce(const BiPoly& h, const TPresentation& pres) {
  BiPoly nf = reduce_mod_presentation(h, pres.f1, pres.f2);
  TElement t = t_zero(pres);
  t.coords[0] = nf.coeff(0, 0);
  t.coords[1] = nf.coeff(1, 0);
  t.coords[2] = nf.coeff(0, 1);
  t.coords[3] = nf.coeff(1, 1);
  return t;
}

BiPoly t_to_bipoly(const TElement& t) {
  BiPoly p(t.ring());
  p.add_term(0, 0, t.coords[0]);
  p.add_term(1, 0, t.coords[1]);
  p.add_term(0, 1, t.coords[2]);
  p.add_term(1, 1, t.coords[3]);
  return p;
}

QuadModElement qm_zero(const MonicQuadratic& mod) {
  RingElement z(mod.ring());
  return QuadModElement{z, z, mod};
}

QuadModElement qm_const(const MonicQuadratic& mod, const RingElement& r) {
  return QuadModElement{r, RingElement(mod.ring()), mod};
}

QuadModElement qm_add(const QuadModElement& p, const QuadModElement& q) {
  if (!(p.mod == q.mod))
    fail(Errc::mixed_presentations, "qm_add: different moduli");
  return QuadModElement{p.c0 + q.c0, p.c1 + q.c1, p.mod};
}

QuadModElement qm_mul(const QuadModElement& p, const QuadModElement& q) {
  if (!(p.mod == q.mod))
    fail(Errc::mixed_presentations, "qm_mul: different moduli");
  RingElement cross = p.c1 * q.c1;
  return QuadModElement{p.c0 * q.c0 - p.mod.b * cross,
                        p.c0 * q.c1 + p.c1 * q.c0 + p.mod.a * cross, p.mod};
}

RingElement qm_pi1(const QuadModElement& p) { return p.c0; }

QuadModElement eval_bipoly(const BiPoly& h, const QuadModElement& X,
                           const QuadModElement& Y) {
  if (!(X.mod == Y.mod))
    fail(Errc::mixed_presentations, "eval_bipoly: different moduli");
  int dx = h.degree(Var::X), dy = h.degree(Var::Y);
  std::vector<QuadModElement> xp, yp;
  QuadModElement one = qm_const(X.mod, RingElement::from_int(X.mod.ring(), 1));
  xp.push_back(one);
  for (int i = 1; i <= dx; ++i) xp.push_back(qm_mul(xp.back(), X));
  yp.push_back(one);
  for (int j = 1; j <= dy; ++j) yp.push_back(qm_mul(yp.back(), Y));

  QuadModElement acc = qm_zero(X.mod);
  for (const auto& [m, c] : h.terms()) {
    QuadModElement term = qm_mul(xp[m.dx], yp[m.dy]);
    term.c0 *= c;
    term.c1 *= c;
    acc = qm_add(acc, term);
  }
  return acc;
}

TPresentation radical_presentation(const RadicalWitnesses& w) {
  RingElement zero(w.c.ring());
  return TPresentation{MonicQuadratic(zero, -(w.d * w.d * w.u), 'x'),
                       MonicQuadratic(zero, -(w.c * w.c * w.u), 'y')};
}

void require_radical_presentation(const TPresentation& pres,
                                  const RadicalWitnesses& w) {
  if (!(pres == radical_presentation(w)))
    fail(Errc::non_radical_presentation,
         "presentation is not the radical one generated by (c, d, u)");
}

QuadModElement psi_eval(const BiPoly& h, int r, const RadicalWitnesses& w) {
  const auto& ring = w.c.ring();
  MonicQuadratic mod(RingElement(ring), -w.u, 'z');  // z^2 - u
  QuadModElement X{RingElement(ring), w.d, mod};
  QuadModElement Y{RingElement(ring), -sign_pow(ring, r) * w.c, mod};
  return eval_bipoly(h, X, Y);
}

QuadModElement psi_eval(const TPresentation& pres, const BiPoly& h, int r,
                        const RadicalWitnesses& w) {
  require_radical_presentation(pres, w);
  return psi_eval(h, r, w);
}

BiPoly radical_divisor(const std::string& tag, int r,
                       const RadicalWitnesses& w) {
  const auto& ring = w.c.ring();
  RingElement sr = sign_pow(ring, r);
  BiPoly p(ring);
  if (tag == "f1") {
    p.add_term(2, 0, RingElement::from_int(ring, 1));
    p.add_term(0, 0, -(w.d * w.d * w.u));
  } else if (tag == "f2") {
    p.add_term(0, 2, RingElement::from_int(ring, 1));
    p.add_term(0, 0, -(w.c * w.c * w.u));
  } else if (tag == "f3r") {
    p.add_term(0, 1, w.d);
    p.add_term(1, 0, sr * w.c);
  } else if (tag == "f4r") {
    p.add_term(1, 1, RingElement::from_int(ring, 1));
    p.add_term(0, 0, sr * w.c * w.d * w.u);
  } else {
    fail(Errc::malformed_certificate, "unknown radical divisor tag: " + tag);
  }
  return p;
}

LinearNormalForm reduce_to_linear(const BiPoly& h, int r,
                                  const RadicalWitnesses& w) {
  const auto& ring = w.c.ring();
  RingElement sr = sign_pow(ring, r);
  BiPoly f1 = radical_divisor("f1", r, w);
  BiPoly f2 = radical_divisor("f2", r, w);

  // h = f1*q + q1(y)*x + q0(y)
  auto step1 = monic_divide(h, f1, Var::X);
  auto rem_coeffs = step1.remainder.coeffs_in(Var::X);
  BiPoly q0 = rem_coeffs.empty() ? BiPoly(ring) : rem_coeffs[0];
  BiPoly q1 = rem_coeffs.size() > 1 ? rem_coeffs[1] : BiPoly(ring);

  // q0 = f2*q2 + a1*y + a2
  auto step2 = monic_divide(q0, f2, Var::Y);
  RingElement a1 = step2.remainder.coeff(0, 1);
  RingElement a2 = step2.remainder.coeff(0, 0);

  // q1(y)*x = f4r*q3 + q4 + b1*x, with q3 = (q1 - q1(0))/y and
  // q4 = -(-1)^r * c*d*u * q3 (each y^k*x with k >= 1 rewrites through f4r)
  BiPoly q3(ring);
  for (const auto& [m, c] : q1.terms())
    if (m.dy >= 1) q3.add_term(0, m.dy - 1, c);
  RingElement b1 = q1.coeff(0, 0);
  BiPoly q4 = q3;
  q4.scale(-(sr * w.c * w.d * w.u));

  // q4 = f2*q5 + e1*y + e2
  auto step4 = monic_divide(q4, f2, Var::Y);
  RingElement e1 = step4.remainder.coeff(0, 1);
  RingElement e2 = step4.remainder.coeff(0, 0);

  LinearNormalForm nf;
  nf.v1 = a1 + e1;
  nf.b1 = b1;
  nf.v2 = a2 + e2;
  nf.steps = {TranscriptStep{"f1", step1.quotient},
              TranscriptStep{"f2", step2.quotient},
              TranscriptStep{"f4r", q3},
              TranscriptStep{"f2", step4.quotient}};
  return nf;
}

bool membership_via_normal_form(const BiPoly& h, int r,
                                const RadicalWitnesses& w) {
  const auto& ring = w.c.ring();
  RingElement sr = sign_pow(ring, r);
  auto nf = reduce_to_linear(h, r, w);
  if (!nf.v2.is_zero()) return false;
  if (!(-sr * nf.v1 * w.c + nf.b1 * w.d).is_zero()) return false;
  // regular-sequence sharpening: b1 = wc*c and v1 = (-1)^r * wc * d
  auto cofactor = try_exact_div(nf.b1, w.c);
  if (!cofactor) return false;
  return nf.v1 == sr * *cofactor * w.d;
}

bool membership_via_psi(const BiPoly& h, int r, const RadicalWitnesses& w) {
  return psi_eval(h, r, w).is_zero();
}

bool membership_in_Pr(const BiPoly& h, int r, const RadicalWitnesses& w) {
  bool via_nf = membership_via_normal_form(h, r, w);
  bool via_psi = membership_via_psi(h, r, w);
  if (via_nf != via_psi)
    fail(Errc::internal_identity_failure,
         "membership routes disagree: the normal-form and psi evaluations "
         "must coincide");
  return via_nf;
}

std::pair<TElement, TElement> zero_divisor_pair(const RadicalWitnesses& w) {
  if (w.c.is_zero() || w.d.is_zero() || w.u.is_zero())
    fail(Errc::not_applicable, "zero_divisor_pair: witnesses must be nonzero");
  TPresentation pres = radical_presentation(w);
  TElement left = t_zero(pres);
  left.coords[1] = -w.c;
  left.coords[2] = w.d;
  TElement right = t_zero(pres);
  right.coords[1] = w.c;
  right.coords[2] = w.d;
  return {left, right};
}

}  // namespace splitforge
