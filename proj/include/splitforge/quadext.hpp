#ifndef SPLITFORGE_QUADEXT_HPP
#define SPLITFORGE_QUADEXT_HPP

#include <optional>

#include "splitforge/poly.hpp"
#include "splitforge/ring.hpp"

namespace splitforge {

// The quadratic field E = L[x]/(f) with f = x^2 - a*x + b irreducible over
// the fraction field L. Elements are base + radical * xbar.
struct QuadExtContext {
  FractionElement a, b;

  const RingDescriptor& ring() const { return a.ring(); }
  FractionElement disc() const {
    return a * a - FractionElement::from_int(ring(), 4) * b;
  }
  static QuadExtContext from_quadratic(const MonicQuadratic& f);
};

struct QuadExtElement {
  FractionElement base, radical;

  bool is_zero() const { return base.is_zero() && radical.is_zero(); }
  bool operator==(const QuadExtElement&) const = default;
};

QuadExtElement quadext_add(const QuadExtElement& p, const QuadExtElement& q);
QuadExtElement quadext_sub(const QuadExtElement& p, const QuadExtElement& q);
// Product reduced by xbar^2 = a*xbar - b.
QuadExtElement quadext_mul(const QuadExtContext& ctx, const QuadExtElement& p,
                           const QuadExtElement& q);
// Image under the nontrivial automorphism xbar -> a - xbar.
QuadExtElement quadext_conjugate(const QuadExtContext& ctx,
                                 const QuadExtElement& p);

// Square root of v in the radical extension L(sqrt u), u a non-square in L.
// Because e1*e2 = 0 is forced in characteristic != 2, the root lies in L or
// in L*sqrt(u); returns base/radical coordinates with respect to sqrt(u).
std::optional<QuadExtElement> square_root_in_ext(const FractionElement& v,
                                                 const FractionElement& u);

// Root of y^2 - c*y + d in E = L[x]/(f). The choice of root is canonical:
// the coefficient of xbar is sign-normalized (for roots inside L, the added
// square root of the discriminant is sign-normalized instead).
// ReducibleModulus if f splits over L.
std::optional<QuadExtElement> quadratic_root_in_ext(const FractionElement& c,
                                                    const FractionElement& d,
                                                    const QuadExtContext& f);

}  // namespace splitforge

#endif
