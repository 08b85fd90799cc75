#ifndef SPLITFORGE_RING_HPP
#define SPLITFORGE_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "splitforge/error.hpp"

namespace splitforge {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Supported base rings. All three are UFDs whose fraction field has
// characteristic different from two: Z, Q[t], and F_p[t] with p an odd prime.
enum class RingKind { Integers, RationalPolys, PrimePolys };

struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  std::uint64_t characteristic = 0;  // p, PrimePolys only
  char variable = 't';               // polynomial rings only

  bool operator==(const RingDescriptor&) const = default;
  bool is_poly() const { return kind != RingKind::Integers; }
  std::string name() const;
};

RingDescriptor integers();
RingDescriptor rational_polys(char variable = 't');
// Checks p is an odd prime (p = 2 would make the fraction field
// characteristic two, which the whole construction excludes).
RingDescriptor prime_polys(std::uint64_t p, char variable = 't');

// An element of one of the base rings in canonical form. Integers carry a
// sign and magnitude; polynomials are dense coefficient vectors with the
// leading coefficient nonzero (zero is the empty vector). Canonical form is
// unique per element, so equality is representation equality.
class RingElement {
 public:
  using QCoeffs = std::vector<Rational>;       // Q[t], index = degree
  using PCoeffs = std::vector<std::uint64_t>;  // F_p[t], residues in [0, p)

  RingElement() : ring_(), value_(Int(0)) {}
  explicit RingElement(RingDescriptor ring);

  static RingElement integer(Int n);
  static RingElement from_int(const RingDescriptor& ring, const Int& n);
  static RingElement rational_poly(QCoeffs coeffs, char variable = 't');
  static RingElement prime_poly(std::uint64_t p, PCoeffs coeffs,
                                char variable = 't');
  // The generator t of a polynomial ring.
  static RingElement generator(const RingDescriptor& ring);

  const RingDescriptor& ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  // Polynomial degree; -1 for the zero polynomial. Integers: 0 (nonzero), -1.
  int degree() const;

  const Int& as_integer() const;
  const QCoeffs& qcoeffs() const;
  const PCoeffs& pcoeffs() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);
  bool operator==(const RingElement& o) const;

 private:
  friend class FractionElement;
  RingDescriptor ring_;
  std::variant<Int, QCoeffs, PCoeffs> value_;
  void normalize();
  void require_same_ring(const RingElement& o) const;
};

RingElement operator+(RingElement a, const RingElement& b);
RingElement operator-(RingElement a, const RingElement& b);
RingElement operator*(RingElement a, const RingElement& b);
RingElement pow_el(const RingElement& a, unsigned e);

// Deterministic total order (degree, then coefficients from the top).
int compare_elements(const RingElement& a, const RingElement& b);

// Exact division in R: returns q with b*q == a.
RingElement exact_div(const RingElement& a, const RingElement& b);
std::optional<RingElement> try_exact_div(const RingElement& a,
                                         const RingElement& b);
bool divides(const RingElement& b, const RingElement& a);

// Normalized gcd: positive over Z, monic over the polynomial rings.
RingElement gcd_normalized(const RingElement& a, const RingElement& b);

// a == unit * value with value the canonical associate (positive / monic).
struct UnitDecomposition {
  RingElement unit;
  RingElement value;
};
UnitDecomposition canonical_associate(const RingElement& a);

// Sign convention used to pick one of two opposite roots: positive over Z,
// positive leading coefficient over Q[t], leading residue in [1, (p-1)/2]
// over F_p[t]. Zero is not sign-normalized.
bool leading_sign_normalized(const RingElement& a);

// Formal derivative with respect to t (polynomial rings only).
RingElement formal_derivative(const RingElement& a);

struct PrimeFactorization {
  RingElement unit;
  std::vector<std::pair<RingElement, unsigned>> factors;
  RingElement reconstruct() const;
};

// Effort limit for integer factorization, counted in Pollard-rho iterations
// after trial division up to 10^6. effort == 0 means the built-in default
// (overridable through SPLITFORGE_FACTOR_BUDGET).
struct FactorBudget {
  std::uint64_t effort = 0;
  std::uint64_t resolve() const;
};

PrimeFactorization factor(const RingElement& a, FactorBudget budget = {});
bool is_square_free(const RingElement& a, FactorBudget budget = {});
std::optional<RingElement> is_square(const RingElement& a);

bool miller_rabin_probable_prime(const Int& n);
Int isqrt_floor(const Int& n);

// An element of the fraction field L of R, kept in lowest terms with the
// denominator canonical (positive / monic). Zero is 0/1.
class FractionElement {
 public:
  FractionElement() : num_(), den_(RingElement::integer(1)) {}
  explicit FractionElement(RingElement numerator);
  FractionElement(RingElement numerator, RingElement denominator);

  static FractionElement zero(const RingDescriptor& ring);
  static FractionElement one(const RingDescriptor& ring);
  static FractionElement from_int(const RingDescriptor& ring, const Int& n);

  const RingElement& numerator() const { return num_; }
  const RingElement& denominator() const { return den_; }
  const RingDescriptor& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_ring_element() const { return den_.is_one(); }
  RingElement as_ring_element() const;

  FractionElement operator-() const;
  FractionElement inverse() const;
  FractionElement& operator+=(const FractionElement& o);
  FractionElement& operator-=(const FractionElement& o);
  FractionElement& operator*=(const FractionElement& o);
  FractionElement& operator/=(const FractionElement& o);
  bool operator==(const FractionElement& o) const;

 private:
  RingElement num_, den_;
  void reduce();
};

FractionElement operator+(FractionElement a, const FractionElement& b);
FractionElement operator-(FractionElement a, const FractionElement& b);
FractionElement operator*(FractionElement a, const FractionElement& b);
FractionElement operator/(FractionElement a, const FractionElement& b);

std::optional<FractionElement> is_square(const FractionElement& a);
bool leading_sign_normalized(const FractionElement& a);

}  // namespace splitforge

#endif
