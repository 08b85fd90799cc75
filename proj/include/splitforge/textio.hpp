#ifndef SPLITFORGE_TEXTIO_HPP
#define SPLITFORGE_TEXTIO_HPP

#include <string>
#include <utility>
#include <vector>

#include "splitforge/certificate.hpp"

namespace splitforge {

// Canonical text forms. Polynomials print in descending graded-lex order
// (x before y), with explicit '*' and '^'; all integers are decimal. The
// printer and parser are inverse to each other on canonical forms, and
// print(parse(print(v))) is byte-identical to print(v).
std::string to_string(const RingElement& a);
std::string to_string(const FractionElement& a);
std::string to_string(const BiPoly& p);
std::string to_string(const MonicQuadratic& q);
// coeffs[i] is the coefficient of var^i
std::string univar_to_string(char var, const std::vector<RingElement>& coeffs);

RingElement parse_ring_element(const RingDescriptor& ring,
                               const std::string& text);
BiPoly parse_bipoly(const RingDescriptor& ring, const std::string& text);
// Degree <= 1 polynomial in z: returns (constant, coefficient of z).
std::pair<RingElement, RingElement> parse_linear_z(const RingDescriptor& ring,
                                                   const std::string& text);
// Monic quadratic in z, e.g. "z^2 - 2" or "z^2 - t*z + 1".
MonicQuadratic parse_monic_quadratic_z(const RingDescriptor& ring,
                                       const std::string& text);

// Line-oriented problem files:
//   ring: Z | Q[t] | F<p>[t]
//   f1: <monic quadratic in x>
//   f2: <monic quadratic in y>
//   J: <expr>, <expr>    (optional)
ExtensionProblem parse_problem(const std::string& text);
std::string print_problem(const ExtensionProblem& p);

}  // namespace splitforge

#endif
