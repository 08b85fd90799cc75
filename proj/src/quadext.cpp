#include "splitforge/quadext.hpp"

namespace splitforge {

QuadExtContext QuadExtContext::from_quadratic(const MonicQuadratic& f) {
  return {FractionElement(f.a), FractionElement(f.b)};
}

QuadExtElement quadext_add(const QuadExtElement& p, const QuadExtElement& q) {
  return {p.base + q.base, p.radical + q.radical};
}

QuadExtElement quadext_sub(const QuadExtElement& p, const QuadExtElement& q) {
  return {p.base - q.base, p.radical - q.radical};
}

QuadExtElement quadext_mul(const QuadExtContext& ctx, const QuadExtElement& p,
                           const QuadExtElement& q) {
  FractionElement cross = p.radical * q.radical;
  return {p.base * q.base - ctx.b * cross,
          p.base * q.radical + p.radical * q.base + ctx.a * cross};
}

QuadExtElement quadext_conjugate(const QuadExtContext& ctx,
                                 const QuadExtElement& p) {
  return {p.base + ctx.a * p.radical, -p.radical};
}

std::optional<QuadExtElement> square_root_in_ext(const FractionElement& v,
                                                 const FractionElement& u) {
  if (u.is_zero() || is_square(u))
    fail(Errc::reducible_modulus,
         "square_root_in_ext: u must be a non-square in L");
  auto zero = FractionElement::zero(v.ring());
  if (auto s = is_square(v)) return QuadExtElement{*s, zero};
  if (auto s = is_square(v / u)) return QuadExtElement{zero, *s};
  return std::nullopt;
}

std::optional<QuadExtElement> quadratic_root_in_ext(const FractionElement& c,
                                                    const FractionElement& d,
                                                    const QuadExtContext& f) {
  const auto& ring = c.ring();
  auto half = [&](const FractionElement& x) {
    return x / FractionElement::from_int(ring, 2);
  };
  FractionElement u = f.disc();
  if (u.is_zero() || is_square(u))
    fail(Errc::reducible_modulus,
         "quadratic_root_in_ext: the extension modulus is reducible over L");

  FractionElement disc_g =
      c * c - FractionElement::from_int(ring, 4) * d;
  if (auto root = is_square(disc_g)) {
    // the root already lies in L; canonicalize the added square root
    FractionElement s = *root;
    if (!s.is_zero() && !leading_sign_normalized(s)) s = -s;
    return QuadExtElement{half(c + s), FractionElement::zero(ring)};
  }
  auto s = square_root_in_ext(disc_g, u);
  if (!s) return std::nullopt;
  // translate sqrt(u) = 2*xbar - a: e1 + e2*sqrt(u) = (e1 - e2*a) + 2*e2*xbar
  QuadExtElement in_xbar{s->base - s->radical * f.a, s->radical + s->radical};
  QuadExtElement gamma{half(c + in_xbar.base), half(in_xbar.radical)};
  if (!gamma.radical.is_zero() && !leading_sign_normalized(gamma.radical))
    gamma = {half(c - in_xbar.base), -half(in_xbar.radical)};
  return gamma;
}

}  // namespace splitforge
