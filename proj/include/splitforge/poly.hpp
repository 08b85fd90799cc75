#ifndef SPLITFORGE_POLY_HPP
#define SPLITFORGE_POLY_HPP

#include <map>
#include <utility>
#include <vector>

#include "splitforge/ring.hpp"

namespace splitforge {

enum class Var { X, Y };

struct Monomial {
  unsigned dx = 0, dy = 0;
  unsigned total() const { return dx + dy; }
  bool operator==(const Monomial&) const = default;
};

// Graded-lexicographic order with x > y, descending, so map iteration yields
// the leading term first and serialization is canonical.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.dx > b.dx;
  }
};

// Sparse bivariate polynomial over coefficients C (RingElement over R, or
// FractionElement over L). No zero coefficients are stored.
template <class C>
class BasicBiPoly {
 public:
  using TermMap = std::map<Monomial, C, GradedLexDesc>;

  BasicBiPoly() : ring_(integers()) {}
  explicit BasicBiPoly(RingDescriptor ring) : ring_(std::move(ring)) {}

  static BasicBiPoly constant(C value) {
    BasicBiPoly p(value.ring());
    p.add_term(0, 0, value);
    return p;
  }
  static BasicBiPoly variable(const RingDescriptor& ring, Var v) {
    BasicBiPoly p(ring);
    p.add_term(v == Var::X ? 1 : 0, v == Var::X ? 0 : 1, one_coeff(ring));
    return p;
  }

  const RingDescriptor& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(unsigned dx, unsigned dy, const C& c) {
    if (c.is_zero()) return;
    Monomial m{dx, dy};
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  C coeff(unsigned dx, unsigned dy) const {
    auto it = terms_.find(Monomial{dx, dy});
    return it == terms_.end() ? zero_coeff(ring_) : it->second;
  }

  int degree(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      int dv = static_cast<int>(v == Var::X ? m.dx : m.dy);
      if (dv > d) d = dv;
    }
    return d;
  }
  int total_degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total());
  }

  BasicBiPoly operator-() const {
    BasicBiPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  BasicBiPoly& operator+=(const BasicBiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.dx, m.dy, c);
    return *this;
  }
  BasicBiPoly& operator-=(const BasicBiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.dx, m.dy, -c);
    return *this;
  }
  BasicBiPoly& operator*=(const BasicBiPoly& o) {
    BasicBiPoly r(ring_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_)
        r.add_term(m1.dx + m2.dx, m1.dy + m2.dy, c1 * c2);
    terms_ = std::move(r.terms_);
    return *this;
  }
  BasicBiPoly& scale(const C& c) {
    BasicBiPoly r(ring_);
    for (const auto& [m, v] : terms_) r.add_term(m.dx, m.dy, v * c);
    terms_ = std::move(r.terms_);
    return *this;
  }

  bool operator==(const BasicBiPoly& o) const {
    return ring_ == o.ring_ && terms_ == o.terms_;
  }

  // Coefficients of this polynomial viewed in the variable v; index = degree
  // in v, entries are polynomials in the other variable.
  std::vector<BasicBiPoly> coeffs_in(Var v) const {
    std::vector<BasicBiPoly> out(static_cast<std::size_t>(degree(v) + 1),
                                 BasicBiPoly(ring_));
    for (const auto& [m, c] : terms_) {
      unsigned dv = v == Var::X ? m.dx : m.dy;
      unsigned dother = v == Var::X ? m.dy : m.dx;
      out[dv].add_term(v == Var::X ? 0 : dother, v == Var::X ? dother : 0, c);
    }
    return out;
  }

 private:
  static C zero_coeff(const RingDescriptor& ring);
  static C one_coeff(const RingDescriptor& ring);
  RingDescriptor ring_;
  TermMap terms_;
};

template <>
inline RingElement BasicBiPoly<RingElement>::zero_coeff(
    const RingDescriptor& ring) {
  return RingElement(ring);
}
template <>
inline RingElement BasicBiPoly<RingElement>::one_coeff(
    const RingDescriptor& ring) {
  return RingElement::from_int(ring, 1);
}
template <>
inline FractionElement BasicBiPoly<FractionElement>::zero_coeff(
    const RingDescriptor& ring) {
  return FractionElement::zero(ring);
}
template <>
inline FractionElement BasicBiPoly<FractionElement>::one_coeff(
    const RingDescriptor& ring) {
  return FractionElement::one(ring);
}

template <class C>
BasicBiPoly<C> operator+(BasicBiPoly<C> a, const BasicBiPoly<C>& b) {
  return a += b;
}
template <class C>
BasicBiPoly<C> operator-(BasicBiPoly<C> a, const BasicBiPoly<C>& b) {
  return a -= b;
}
template <class C>
BasicBiPoly<C> operator*(BasicBiPoly<C> a, const BasicBiPoly<C>& b) {
  return a *= b;
}

using BiPoly = BasicBiPoly<RingElement>;
using FracBiPoly = BasicBiPoly<FractionElement>;

// Monic quadratic v^2 - a*v + b over R. The sign convention on a matches the
// usual trace/norm form, so the two roots sum to a and multiply to b.
struct MonicQuadratic {
  RingElement a, b;
  char variable = 'x';

  MonicQuadratic() = default;
  MonicQuadratic(RingElement a_, RingElement b_, char variable_ = 'x')
      : a(std::move(a_)), b(std::move(b_)), variable(variable_) {}

  const RingDescriptor& ring() const { return a.ring(); }
  bool is_radical() const { return a.is_zero(); }
  bool operator==(const MonicQuadratic&) const = default;

  BiPoly as_bipoly(Var v) const {
    BiPoly p(a.ring());
    p.add_term(v == Var::X ? 2 : 0, v == Var::X ? 0 : 2,
               RingElement::from_int(a.ring(), 1));
    p.add_term(v == Var::X ? 1 : 0, v == Var::X ? 0 : 1, -a);
    p.add_term(0, 0, b);
    return p;
  }
};

// a^2 - 4b, the quantity that decides reducibility over the fraction field.
RingElement discriminant(const MonicQuadratic& q);

// Division of h by a divisor monic in v: h = m*q + r with deg_v(r) < deg_v(m).
// Exact in any coefficient ring because only the monic leading term is
// inverted. NonMonicDivisor if the leading coefficient in v is not 1.
struct DivisionResult {
  BiPoly quotient, remainder;
};
DivisionResult monic_divide(const BiPoly& h, const BiPoly& m, Var v);

// Substitute x -> x + sx, y -> y + sy.
BiPoly shift_vars(const BiPoly& h, const RingElement& sx,
                  const RingElement& sy);

// Remainder of h modulo the ideal (f1(x), f2(y)); the result has degree < 2
// in both variables (the free-module normal form).
BiPoly reduce_mod_presentation(const BiPoly& h, const MonicQuadratic& f1,
                               const MonicQuadratic& f2);

}  // namespace splitforge

#endif
