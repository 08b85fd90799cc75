#ifndef SPLITFORGE_TEST_HELPERS_HPP
#define SPLITFORGE_TEST_HELPERS_HPP

#include <random>
#include <string>

#include "splitforge/textio.hpp"

namespace sft {

using namespace splitforge;

inline RingDescriptor Z() { return integers(); }
inline RingDescriptor Qt() { return rational_polys('t'); }
inline RingDescriptor F5t() { return prime_polys(5, 't'); }

inline RingElement zi(long v) { return RingElement::integer(v); }

inline RingElement el(const RingDescriptor& ring, const std::string& s) {
  return parse_ring_element(ring, s);
}

inline BiPoly bp(const RingDescriptor& ring, const std::string& s) {
  return parse_bipoly(ring, s);
}

inline FractionElement fr(const RingDescriptor& ring, const std::string& num,
                          const std::string& den = "1") {
  return FractionElement(el(ring, num), el(ring, den));
}

// f = v^2 - a*v + b given as the polynomial itself, e.g. "x^2 - 18"
inline MonicQuadratic quad_x(const RingDescriptor& ring, const std::string& s) {
  BiPoly p = bp(ring, s);
  return MonicQuadratic(-p.coeff(1, 0), p.coeff(0, 0), 'x');
}
inline MonicQuadratic quad_y(const RingDescriptor& ring, const std::string& s) {
  BiPoly p = bp(ring, s);
  return MonicQuadratic(-p.coeff(0, 1), p.coeff(0, 0), 'y');
}

}  // namespace sft

#endif
