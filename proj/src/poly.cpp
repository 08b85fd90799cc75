#include "splitforge/poly.hpp"

namespace splitforge {

RingElement discriminant(const MonicQuadratic& q) {
  return q.a * q.a - RingElement::from_int(q.ring(), 4) * q.b;
}

DivisionResult monic_divide(const BiPoly& h, const BiPoly& m, Var v) {
  int dm = m.degree(v);
  if (dm < 0) fail(Errc::division_by_zero, "monic_divide: zero divisor");
  auto mc = m.coeffs_in(v);
  if (!(mc.back().total_degree() == 0 &&
        mc.back().coeff(0, 0).is_one()))
    fail(Errc::non_monic_divisor,
         "monic_divide: divisor is not monic in the division variable");

  BiPoly q(h.ring());
  BiPoly r = h;
  while (true) {
    int dr = r.degree(v);
    if (dr < dm) break;
    // peel every term of top degree in v at once
    BiPoly lead(h.ring());
    for (const auto& [mono, c] : r.terms()) {
      int dv = static_cast<int>(v == Var::X ? mono.dx : mono.dy);
      if (dv == dr)
        lead.add_term(v == Var::X ? mono.dx - dm : mono.dx,
                      v == Var::X ? mono.dy : mono.dy - dm, c);
    }
    q += lead;
    r -= lead * m;
  }
  return {q, r};
}

BiPoly shift_vars(const BiPoly& h, const RingElement& sx,
                  const RingElement& sy) {
  const auto& ring = h.ring();
  BiPoly x_shift = BiPoly::variable(ring, Var::X);
  x_shift.add_term(0, 0, sx);
  BiPoly y_shift = BiPoly::variable(ring, Var::Y);
  y_shift.add_term(0, 0, sy);

  BiPoly out(ring);
  for (const auto& [mono, c] : h.terms()) {
    BiPoly term = BiPoly::constant(c);
    for (unsigned i = 0; i < mono.dx; ++i) term *= x_shift;
    for (unsigned i = 0; i < mono.dy; ++i) term *= y_shift;
    out += term;
  }
  return out;
}

BiPoly reduce_mod_presentation(const BiPoly& h, const MonicQuadratic& f1,
                               const MonicQuadratic& f2) {
  BiPoly r = monic_divide(h, f1.as_bipoly(Var::X), Var::X).remainder;
  return monic_divide(r, f2.as_bipoly(Var::Y), Var::Y).remainder;
}

}  // namespace splitforge
