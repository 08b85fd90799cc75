#ifndef SPLITFORGE_QUOTIENT_HPP
#define SPLITFORGE_QUOTIENT_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "splitforge/poly.hpp"
#include "splitforge/ring.hpp"

namespace splitforge {

// The presentation T = R[x,y]/(f1(x), f2(y)), a free R-module with basis
// {1, xbar, ybar, xbar*ybar}.
struct TPresentation {
  MonicQuadratic f1;  // in x
  MonicQuadratic f2;  // in y
  bool operator==(const TPresentation&) const = default;
};

// Element of T in basis coordinates (r0, r1, r2, r3) meaning
// r0 + r1*xbar + r2*ybar + r3*xbar*ybar. Equality is coordinate-wise.
struct TElement {
  std::array<RingElement, 4> coords;
  TPresentation pres;

  const RingDescriptor& ring() const { return pres.f1.ring(); }
  bool is_zero() const {
    for (const auto& c : coords)
      if (!c.is_zero()) return false;
    return true;
  }
  bool operator==(const TElement&) const = default;
};

TElement t_zero(const TPresentation& pres);
TElement t_one(const TPresentation& pres);
TElement t_from_coords(const TPresentation& pres,
                       std::array<RingElement, 4> coords);
TElement t_add(const TElement& s, const TElement& t);
TElement t_scale(const RingElement& r, const TElement& t);
// Product in T, reduced by xbar^2 = a1*xbar - b1 and ybar^2 = a2*ybar - b2.
// MixedPresentations if the presentations differ.
TElement t_mul(const TElement& s, const TElement& t);
// Normal form of a bivariate polynomial modulo (f1, f2).
TElement t_reduce(const BiPoly& h, const TPresentation& pres);
BiPoly t_to_bipoly(const TElement& t);

// Element p0 + p1*zbar of the rank-two free module R[z]/(m(z)) for a monic
// quadratic m; multiplication rewrites zbar^2 = a*zbar - b. The radical
// instances use m = z^2 - u.
struct QuadModElement {
  RingElement c0, c1;
  MonicQuadratic mod;  // in z

  bool is_zero() const { return c0.is_zero() && c1.is_zero(); }
  bool operator==(const QuadModElement&) const = default;
};

QuadModElement qm_zero(const MonicQuadratic& mod);
QuadModElement qm_const(const MonicQuadratic& mod, const RingElement& r);
QuadModElement qm_add(const QuadModElement& p, const QuadModElement& q);
QuadModElement qm_mul(const QuadModElement& p, const QuadModElement& q);
// Projection onto the first basis coordinate.
RingElement qm_pi1(const QuadModElement& p);

// Evaluate h at x = X, y = Y inside a common rank-two module.
QuadModElement eval_bipoly(const BiPoly& h, const QuadModElement& X,
                           const QuadModElement& Y);

// Witnesses (c, d, u) of the radical non-domain case: a1 = d^2*u, a2 = c^2*u
// with gcd(c, d) = 1.
struct RadicalWitnesses {
  RingElement c, d, u;
  bool operator==(const RadicalWitnesses&) const = default;
};

TPresentation radical_presentation(const RadicalWitnesses& w);
// Throws NonRadicalPresentation unless pres is exactly the radical
// presentation generated by w.
void require_radical_presentation(const TPresentation& pres,
                                  const RadicalWitnesses& w);

// The homomorphism psi_r: T -> R[z]/(z^2 - u) with x -> d*zbar and
// y -> (-1)^(r+1)*c*zbar; its kernel is the minimal prime P_r.
QuadModElement psi_eval(const BiPoly& h, int r, const RadicalWitnesses& w);
QuadModElement psi_eval(const TPresentation& pres, const BiPoly& h, int r,
                        const RadicalWitnesses& w);

struct TranscriptStep {
  std::string divisor_tag;  // "f1", "f2", "f4r", ...
  BiPoly quotient;
  bool operator==(const TranscriptStep&) const = default;
};

// Result of the four-step monic-division chain: h decomposes as
//   h = f1*q + f4r*q3 + f2*(q2 + q5) + (v1*y + b1*x + v2)
// and replaying the recorded steps reconstructs h exactly.
struct LinearNormalForm {
  RingElement v1, b1, v2;
  std::vector<TranscriptStep> steps;
};

LinearNormalForm reduce_to_linear(const BiPoly& h, int r,
                                  const RadicalWitnesses& w);

// Divisor polynomial named by a transcript tag for the radical chain.
BiPoly radical_divisor(const std::string& tag, int r,
                       const RadicalWitnesses& w);

// Membership of h in P_r by the linear-normal-form route: the two conditions
// (-1)^(r+1)*v1*c + b1*d = 0 and v2 = 0, sharpened by the cofactor relations
// b1 = w*c and v1 = (-1)^r*w*d for a single w in R.
bool membership_via_normal_form(const BiPoly& h, int r,
                                const RadicalWitnesses& w);
// Membership by direct evaluation: psi_r(h) = 0.
bool membership_via_psi(const BiPoly& h, int r, const RadicalWitnesses& w);
// Both routes; they must agree (InternalIdentityFailure otherwise).
bool membership_in_Pr(const BiPoly& h, int r, const RadicalWitnesses& w);

// The pair (d*ybar - c*xbar, d*ybar + c*xbar): both nonzero with product zero
// in T, witnessing that the radical presentation is not a domain.
std::pair<TElement, TElement> zero_divisor_pair(const RadicalWitnesses& w);

}  // namespace splitforge

#endif
