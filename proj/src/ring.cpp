#include "splitforge/ring.hpp"

#include <algorithm>
#include <cstdlib>

namespace splitforge {

namespace {

bool small_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- coefficient ops for the two polynomial rings -------------------------

struct QOps {
  using C = Rational;
  bool is_zero(const C& a) const { return a == 0; }
  C zero() const { return C(0); }
  C one() const { return C(1); }
  C add(const C& a, const C& b) const { return a + b; }
  C sub(const C& a, const C& b) const { return a - b; }
  C neg(const C& a) const { return -a; }
  C mul(const C& a, const C& b) const { return a * b; }
  C div(const C& a, const C& b) const { return a / b; }
};

struct POps {
  std::uint64_t p;
  using C = std::uint64_t;
  bool is_zero(C a) const { return a == 0; }
  C zero() const { return 0; }
  C one() const { return 1; }
  C add(C a, C b) const { return (a + b) % p; }
  C sub(C a, C b) const { return (a + p - b) % p; }
  C neg(C a) const { return a == 0 ? 0 : p - a; }
  C mul(C a, C b) const {
    return static_cast<C>(static_cast<unsigned __int128>(a) * b % p);
  }
  C powmod(C a, std::uint64_t e) const {
    C r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  C inv(C a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of 0 mod p");
    return powmod(a, p - 2);
  }
  C div(C a, C b) const { return mul(a, inv(b)); }
};

template <class Ops>
using Coeffs = std::vector<typename Ops::C>;

template <class Ops>
void pv_trim(Coeffs<Ops>& v, const Ops& ops) {
  while (!v.empty() && ops.is_zero(v.back())) v.pop_back();
}

template <class Ops>
Coeffs<Ops> pv_add(const Coeffs<Ops>& a, const Coeffs<Ops>& b, const Ops& ops) {
  Coeffs<Ops> r(std::max(a.size(), b.size()), ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops.add(r[i], b[i]);
  pv_trim(r, ops);
  return r;
}

template <class Ops>
Coeffs<Ops> pv_sub(const Coeffs<Ops>& a, const Coeffs<Ops>& b, const Ops& ops) {
  Coeffs<Ops> r(std::max(a.size(), b.size()), ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ops.sub(r[i], b[i]);
  pv_trim(r, ops);
  return r;
}

template <class Ops>
Coeffs<Ops> pv_neg(const Coeffs<Ops>& a, const Ops& ops) {
  Coeffs<Ops> r = a;
  for (auto& c : r) c = ops.neg(c);
  return r;
}

template <class Ops>
Coeffs<Ops> pv_mul(const Coeffs<Ops>& a, const Coeffs<Ops>& b, const Ops& ops) {
  if (a.empty() || b.empty()) return {};
  Coeffs<Ops> r(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
  pv_trim(r, ops);
  return r;
}

// Long division over the coefficient field; b must be nonzero.
template <class Ops>
std::pair<Coeffs<Ops>, Coeffs<Ops>> pv_divmod(const Coeffs<Ops>& a,
                                              const Coeffs<Ops>& b,
                                              const Ops& ops) {
  if (b.empty()) fail(Errc::division_by_zero, "polynomial division by zero");
  Coeffs<Ops> r = a;
  if (a.size() < b.size()) return {{}, std::move(r)};
  Coeffs<Ops> q(a.size() - b.size() + 1, ops.zero());
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size(); i-- > 0;) {
    if (i < db) break;
    if (ops.is_zero(r[i])) continue;
    auto f = ops.div(r[i], b.back());
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j)
      r[i - db + j] = ops.sub(r[i - db + j], ops.mul(f, b[j]));
  }
  pv_trim(q, ops);
  pv_trim(r, ops);
  return {q, r};
}

template <class Ops>
Coeffs<Ops> pv_make_monic(const Coeffs<Ops>& a, const Ops& ops) {
  if (a.empty()) return a;
  Coeffs<Ops> r = a;
  auto inv_lead = ops.div(ops.one(), a.back());
  for (auto& c : r) c = ops.mul(c, inv_lead);
  return r;
}

template <class Ops>
Coeffs<Ops> pv_gcd_monic(Coeffs<Ops> a, Coeffs<Ops> b, const Ops& ops) {
  while (!b.empty()) {
    auto [q, r] = pv_divmod(a, b, ops);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return pv_make_monic(a, ops);
}

template <class Ops>
Coeffs<Ops> pv_derivative(const Coeffs<Ops>& a, const Ops& ops,
                          std::uint64_t char_p) {
  if (a.size() <= 1) return {};
  Coeffs<Ops> r(a.size() - 1, ops.zero());
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (char_p)
      r[i - 1] = ops.mul(a[i], static_cast<typename Ops::C>(i % char_p));
    else
      r[i - 1] = ops.mul(a[i], typename Ops::C(static_cast<long>(i)));
  }
  pv_trim(r, ops);
  return r;
}

// Square root of a monic polynomial by matching coefficients from the top
// (needs 2 invertible in the coefficient field). Returns the monic root.
template <class Ops>
std::optional<Coeffs<Ops>> pv_sqrt_monic(const Coeffs<Ops>& f, const Ops& ops) {
  if (f.empty()) return Coeffs<Ops>{};
  std::size_t n = f.size() - 1;
  if (n % 2 != 0) return std::nullopt;
  std::size_t m = n / 2;
  Coeffs<Ops> s(m + 1, ops.zero());
  s[m] = ops.one();
  auto two = ops.add(ops.one(), ops.one());
  for (std::size_t i = m; i-- > 0;) {
    // coefficient of t^(m+i) in s^2 is 2*s_i plus the middle convolution
    auto middle = ops.zero();
    for (std::size_t j = i + 1; j < m; ++j)
      middle = ops.add(middle, ops.mul(s[j], s[m + i - j]));
    s[i] = ops.div(ops.sub(f[m + i], middle), two);
  }
  if (pv_mul(s, s, ops) == f) return s;
  return std::nullopt;
}

std::uint64_t tonelli_shanks(std::uint64_t n, std::uint64_t p) {
  POps ops{p};
  n %= p;
  if (n == 0) return 0;
  if (p % 4 == 3) return ops.powmod(n, (p + 1) / 4);
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (ops.powmod(z, (p - 1) / 2) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = ops.powmod(z, q);
  std::uint64_t t = ops.powmod(n, q);
  std::uint64_t r = ops.powmod(n, (q + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = ops.mul(tt, tt);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = ops.mul(b, b);
    m = i;
    c = ops.mul(b, b);
    t = ops.mul(t, c);
    r = ops.mul(r, b);
  }
  return r;
}

}  // namespace

// ---- descriptors -----------------------------------------------------------

std::string RingDescriptor::name() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::RationalPolys:
      return std::string("Q[") + variable + "]";
    case RingKind::PrimePolys:
      return "F" + std::to_string(characteristic) + "[" + variable + "]";
  }
  return "?";
}

RingDescriptor integers() { return RingDescriptor{RingKind::Integers, 0, 't'}; }

RingDescriptor rational_polys(char variable) {
  return RingDescriptor{RingKind::RationalPolys, 0, variable};
}

RingDescriptor prime_polys(std::uint64_t p, char variable) {
  if (p == 2) fail(Errc::even_prime, "F2[t] is not supported: 2 must be invertible");
  if (p >= (1ull << 31) || !small_is_prime(p))
    fail(Errc::unknown_ring, "F" + std::to_string(p) + "[t]: characteristic must be an odd prime < 2^31");
  return RingDescriptor{RingKind::PrimePolys, p, variable};
}

// ---- RingElement -----------------------------------------------------------

RingElement::RingElement(RingDescriptor ring) : ring_(ring) {
  switch (ring_.kind) {
    case RingKind::Integers:
      value_ = Int(0);
      break;
    case RingKind::RationalPolys:
      value_ = QCoeffs{};
      break;
    case RingKind::PrimePolys:
      value_ = PCoeffs{};
      break;
  }
}

RingElement RingElement::integer(Int n) {
  RingElement e(integers());
  e.value_ = std::move(n);
  return e;
}

RingElement RingElement::from_int(const RingDescriptor& ring, const Int& n) {
  switch (ring.kind) {
    case RingKind::Integers:
      return integer(n);
    case RingKind::RationalPolys: {
      RingElement e(ring);
      if (n != 0) e.value_ = QCoeffs{Rational(n)};
      return e;
    }
    case RingKind::PrimePolys: {
      RingElement e(ring);
      Int m = n % Int(ring.characteristic);
      if (m < 0) m += Int(ring.characteristic);
      auto r = static_cast<std::uint64_t>(m);
      if (r != 0) e.value_ = PCoeffs{r};
      return e;
    }
  }
  fail(Errc::unknown_ring, "bad ring descriptor");
}

RingElement RingElement::rational_poly(QCoeffs coeffs, char variable) {
  RingElement e(rational_polys(variable));
  e.value_ = std::move(coeffs);
  e.normalize();
  return e;
}

RingElement RingElement::prime_poly(std::uint64_t p, PCoeffs coeffs,
                                    char variable) {
  // no primality re-validation here; prime_polys() guards user input once
  RingElement e(RingDescriptor{RingKind::PrimePolys, p, variable});
  for (auto& c : coeffs) c %= p;
  e.value_ = std::move(coeffs);
  e.normalize();
  return e;
}

RingElement RingElement::generator(const RingDescriptor& ring) {
  if (!ring.is_poly())
    fail(Errc::mixed_contexts, "Z has no polynomial generator");
  RingElement e(ring);
  if (ring.kind == RingKind::RationalPolys)
    e.value_ = QCoeffs{Rational(0), Rational(1)};
  else
    e.value_ = PCoeffs{0, 1};
  return e;
}

void RingElement::normalize() {
  if (auto* q = std::get_if<QCoeffs>(&value_)) {
    while (!q->empty() && q->back() == 0) q->pop_back();
  } else if (auto* f = std::get_if<PCoeffs>(&value_)) {
    while (!f->empty() && f->back() == 0) f->pop_back();
  }
}

void RingElement::require_same_ring(const RingElement& o) const {
  if (!(ring_ == o.ring_))
    fail(Errc::mixed_contexts, "operands live in different rings (" +
                                   ring_.name() + " vs " + o.ring_.name() + ")");
}

bool RingElement::is_zero() const {
  switch (ring_.kind) {
    case RingKind::Integers:
      return std::get<Int>(value_) == 0;
    case RingKind::RationalPolys:
      return std::get<QCoeffs>(value_).empty();
    case RingKind::PrimePolys:
      return std::get<PCoeffs>(value_).empty();
  }
  return true;
}

bool RingElement::is_one() const {
  switch (ring_.kind) {
    case RingKind::Integers:
      return std::get<Int>(value_) == 1;
    case RingKind::RationalPolys: {
      const auto& q = std::get<QCoeffs>(value_);
      return q.size() == 1 && q[0] == 1;
    }
    case RingKind::PrimePolys: {
      const auto& f = std::get<PCoeffs>(value_);
      return f.size() == 1 && f[0] == 1;
    }
  }
  return false;
}

bool RingElement::is_unit() const {
  switch (ring_.kind) {
    case RingKind::Integers: {
      const auto& n = std::get<Int>(value_);
      return n == 1 || n == -1;
    }
    case RingKind::RationalPolys:
      return std::get<QCoeffs>(value_).size() == 1;
    case RingKind::PrimePolys:
      return std::get<PCoeffs>(value_).size() == 1;
  }
  return false;
}

int RingElement::degree() const {
  switch (ring_.kind) {
    case RingKind::Integers:
      return std::get<Int>(value_) == 0 ? -1 : 0;
    case RingKind::RationalPolys:
      return static_cast<int>(std::get<QCoeffs>(value_).size()) - 1;
    case RingKind::PrimePolys:
      return static_cast<int>(std::get<PCoeffs>(value_).size()) - 1;
  }
  return -1;
}

const Int& RingElement::as_integer() const { return std::get<Int>(value_); }
const RingElement::QCoeffs& RingElement::qcoeffs() const {
  return std::get<QCoeffs>(value_);
}
const RingElement::PCoeffs& RingElement::pcoeffs() const {
  return std::get<PCoeffs>(value_);
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  switch (ring_.kind) {
    case RingKind::Integers:
      r.value_ = -std::get<Int>(value_);
      break;
    case RingKind::RationalPolys:
      r.value_ = pv_neg(std::get<QCoeffs>(value_), QOps{});
      break;
    case RingKind::PrimePolys:
      r.value_ = pv_neg(std::get<PCoeffs>(value_), POps{ring_.characteristic});
      break;
  }
  return r;
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same_ring(o);
  switch (ring_.kind) {
    case RingKind::Integers:
      value_ = std::get<Int>(value_) + std::get<Int>(o.value_);
      break;
    case RingKind::RationalPolys:
      value_ = pv_add(std::get<QCoeffs>(value_), std::get<QCoeffs>(o.value_),
                      QOps{});
      break;
    case RingKind::PrimePolys:
      value_ = pv_add(std::get<PCoeffs>(value_), std::get<PCoeffs>(o.value_),
                      POps{ring_.characteristic});
      break;
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same_ring(o);
  switch (ring_.kind) {
    case RingKind::Integers:
      value_ = std::get<Int>(value_) - std::get<Int>(o.value_);
      break;
    case RingKind::RationalPolys:
      value_ = pv_sub(std::get<QCoeffs>(value_), std::get<QCoeffs>(o.value_),
                      QOps{});
      break;
    case RingKind::PrimePolys:
      value_ = pv_sub(std::get<PCoeffs>(value_), std::get<PCoeffs>(o.value_),
                      POps{ring_.characteristic});
      break;
  }
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  require_same_ring(o);
  switch (ring_.kind) {
    case RingKind::Integers:
      value_ = std::get<Int>(value_) * std::get<Int>(o.value_);
      break;
    case RingKind::RationalPolys:
      value_ = pv_mul(std::get<QCoeffs>(value_), std::get<QCoeffs>(o.value_),
                      QOps{});
      break;
    case RingKind::PrimePolys:
      value_ = pv_mul(std::get<PCoeffs>(value_), std::get<PCoeffs>(o.value_),
                      POps{ring_.characteristic});
      break;
  }
  return *this;
}

bool RingElement::operator==(const RingElement& o) const {
  return ring_ == o.ring_ && value_ == o.value_;
}

RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }

RingElement pow_el(const RingElement& a, unsigned e) {
  RingElement r = RingElement::from_int(a.ring(), 1);
  RingElement base = a;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

int compare_elements(const RingElement& a, const RingElement& b) {
  if (a.ring().kind == RingKind::Integers) {
    const Int &x = a.as_integer(), &y = b.as_integer();
    return x < y ? -1 : (x == y ? 0 : 1);
  }
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  if (a.ring().kind == RingKind::RationalPolys) {
    const auto &x = a.qcoeffs(), &y = b.qcoeffs();
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    return 0;
  }
  const auto &x = a.pcoeffs(), &y = b.pcoeffs();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  }
  return 0;
}

// ---- division, gcd, units --------------------------------------------------

std::optional<RingElement> try_exact_div(const RingElement& a,
                                         const RingElement& b) {
  if (b.is_zero()) fail(Errc::division_by_zero, "exact_div: divisor is zero");
  if (a.is_zero()) return RingElement(a.ring());
  switch (a.ring().kind) {
    case RingKind::Integers: {
      if (a.ring() != b.ring()) fail(Errc::mixed_contexts, "exact_div: mixed rings");
      Int q = a.as_integer() / b.as_integer();
      if (q * b.as_integer() != a.as_integer()) return std::nullopt;
      return RingElement::integer(q);
    }
    case RingKind::RationalPolys: {
      if (a.ring() != b.ring()) fail(Errc::mixed_contexts, "exact_div: mixed rings");
      auto [q, r] = pv_divmod(a.qcoeffs(), b.qcoeffs(), QOps{});
      if (!r.empty()) return std::nullopt;
      return RingElement::rational_poly(std::move(q), a.ring().variable);
    }
    case RingKind::PrimePolys: {
      if (a.ring() != b.ring()) fail(Errc::mixed_contexts, "exact_div: mixed rings");
      auto [q, r] =
          pv_divmod(a.pcoeffs(), b.pcoeffs(), POps{a.ring().characteristic});
      if (!r.empty()) return std::nullopt;
      return RingElement::prime_poly(a.ring().characteristic, std::move(q),
                                     a.ring().variable);
    }
  }
  return std::nullopt;
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
  auto q = try_exact_div(a, b);
  if (!q) fail(Errc::not_divisible, "exact_div: divisor does not divide");
  return *q;
}

bool divides(const RingElement& b, const RingElement& a) {
  return try_exact_div(a, b).has_value();
}

RingElement gcd_normalized(const RingElement& a, const RingElement& b) {
  if (a.is_zero() && b.is_zero())
    fail(Errc::both_zero, "gcd of (0, 0) is undefined");
  switch (a.ring().kind) {
    case RingKind::Integers: {
      Int g = boost::multiprecision::gcd(a.as_integer(), b.as_integer());
      if (g < 0) g = -g;
      return RingElement::integer(g);
    }
    case RingKind::RationalPolys:
      return RingElement::rational_poly(
          pv_gcd_monic(a.qcoeffs(), b.qcoeffs(), QOps{}), a.ring().variable);
    case RingKind::PrimePolys:
      return RingElement::prime_poly(
          a.ring().characteristic,
          pv_gcd_monic(a.pcoeffs(), b.pcoeffs(), POps{a.ring().characteristic}),
          a.ring().variable);
  }
  fail(Errc::unknown_ring, "bad ring descriptor");
}

UnitDecomposition canonical_associate(const RingElement& a) {
  if (a.is_zero())
    return {RingElement::from_int(a.ring(), 1), a};
  switch (a.ring().kind) {
    case RingKind::Integers: {
      bool neg = a.as_integer() < 0;
      return {RingElement::integer(neg ? -1 : 1),
              RingElement::integer(neg ? -a.as_integer() : a.as_integer())};
    }
    case RingKind::RationalPolys: {
      Rational lc = a.qcoeffs().back();
      return {RingElement::rational_poly({lc}, a.ring().variable),
              RingElement::rational_poly(pv_make_monic(a.qcoeffs(), QOps{}),
                                         a.ring().variable)};
    }
    case RingKind::PrimePolys: {
      std::uint64_t lc = a.pcoeffs().back();
      return {RingElement::prime_poly(a.ring().characteristic, {lc},
                                      a.ring().variable),
              RingElement::prime_poly(
                  a.ring().characteristic,
                  pv_make_monic(a.pcoeffs(), POps{a.ring().characteristic}),
                  a.ring().variable)};
    }
  }
  fail(Errc::unknown_ring, "bad ring descriptor");
}

bool leading_sign_normalized(const RingElement& a) {
  if (a.is_zero()) return false;
  switch (a.ring().kind) {
    case RingKind::Integers:
      return a.as_integer() > 0;
    case RingKind::RationalPolys:
      return a.qcoeffs().back() > 0;
    case RingKind::PrimePolys:
      return a.pcoeffs().back() <= (a.ring().characteristic - 1) / 2;
  }
  return false;
}

RingElement formal_derivative(const RingElement& a) {
  switch (a.ring().kind) {
    case RingKind::Integers:
      fail(Errc::not_applicable, "formal derivative over Z");
    case RingKind::RationalPolys:
      return RingElement::rational_poly(pv_derivative(a.qcoeffs(), QOps{}, 0),
                                        a.ring().variable);
    case RingKind::PrimePolys:
      return RingElement::prime_poly(
          a.ring().characteristic,
          pv_derivative(a.pcoeffs(), POps{a.ring().characteristic},
                        a.ring().characteristic),
          a.ring().variable);
  }
  fail(Errc::unknown_ring, "bad ring descriptor");
}

// ---- squares ---------------------------------------------------------------

Int isqrt_floor(const Int& n) {
  if (n < 0) fail(Errc::not_applicable, "isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

namespace {

std::optional<Int> int_sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  Int s = isqrt_floor(n);
  if (s * s == n) return s;
  return std::nullopt;
}

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto n = int_sqrt_exact(boost::multiprecision::numerator(q));
  if (!n) return std::nullopt;
  auto d = int_sqrt_exact(boost::multiprecision::denominator(q));
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

}  // namespace

std::optional<RingElement> is_square(const RingElement& a) {
  if (a.is_zero()) return RingElement(a.ring());
  switch (a.ring().kind) {
    case RingKind::Integers: {
      auto s = int_sqrt_exact(a.as_integer());
      if (!s) return std::nullopt;
      return RingElement::integer(*s);
    }
    case RingKind::RationalPolys: {
      auto lc = rational_sqrt_exact(a.qcoeffs().back());
      if (!lc) return std::nullopt;
      auto monic = pv_make_monic(a.qcoeffs(), QOps{});
      auto root = pv_sqrt_monic(monic, QOps{});
      if (!root) return std::nullopt;
      for (auto& c : *root) c *= *lc;
      return RingElement::rational_poly(std::move(*root), a.ring().variable);
    }
    case RingKind::PrimePolys: {
      POps ops{a.ring().characteristic};
      std::uint64_t lc = a.pcoeffs().back();
      if (ops.powmod(lc, (ops.p - 1) / 2) != 1) return std::nullopt;
      std::uint64_t s = tonelli_shanks(lc, ops.p);
      if (s > (ops.p - 1) / 2) s = ops.p - s;  // canonical half
      auto monic = pv_make_monic(a.pcoeffs(), ops);
      auto root = pv_sqrt_monic(monic, ops);
      if (!root) return std::nullopt;
      for (auto& c : *root) c = ops.mul(c, s);
      return RingElement::prime_poly(ops.p, std::move(*root),
                                     a.ring().variable);
    }
  }
  return std::nullopt;
}

// ---- FractionElement -------------------------------------------------------

FractionElement::FractionElement(RingElement numerator)
    : num_(std::move(numerator)),
      den_(RingElement::from_int(num_.ring(), 1)) {}

FractionElement::FractionElement(RingElement numerator,
                                 RingElement denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero())
    fail(Errc::division_by_zero, "fraction with zero denominator");
  num_.require_same_ring(den_);
  reduce();
}

void FractionElement::reduce() {
  if (num_.is_zero()) {
    den_ = RingElement::from_int(num_.ring(), 1);
    return;
  }
  RingElement g = gcd_normalized(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  auto [unit, value] = canonical_associate(den_);
  if (!unit.is_one()) {
    den_ = value;
    // divide the numerator by the same unit
    num_ = exact_div(num_, unit);
  }
}

FractionElement FractionElement::zero(const RingDescriptor& ring) {
  return FractionElement(RingElement(ring));
}

FractionElement FractionElement::one(const RingDescriptor& ring) {
  return FractionElement(RingElement::from_int(ring, 1));
}

FractionElement FractionElement::from_int(const RingDescriptor& ring,
                                          const Int& n) {
  return FractionElement(RingElement::from_int(ring, n));
}

RingElement FractionElement::as_ring_element() const {
  if (!den_.is_one())
    fail(Errc::not_divisible, "fraction is not a ring element");
  return num_;
}

FractionElement FractionElement::operator-() const {
  FractionElement r = *this;
  r.num_ = -r.num_;
  return r;
}

FractionElement FractionElement::inverse() const {
  if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
  return FractionElement(den_, num_);
}

FractionElement& FractionElement::operator+=(const FractionElement& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

FractionElement& FractionElement::operator-=(const FractionElement& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

FractionElement& FractionElement::operator*=(const FractionElement& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

FractionElement& FractionElement::operator/=(const FractionElement& o) {
  if (o.is_zero()) fail(Errc::division_by_zero, "division by zero fraction");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

bool FractionElement::operator==(const FractionElement& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

FractionElement operator+(FractionElement a, const FractionElement& b) {
  return a += b;
}
FractionElement operator-(FractionElement a, const FractionElement& b) {
  return a -= b;
}
FractionElement operator*(FractionElement a, const FractionElement& b) {
  return a *= b;
}
FractionElement operator/(FractionElement a, const FractionElement& b) {
  return a /= b;
}

std::optional<FractionElement> is_square(const FractionElement& a) {
  auto n = is_square(a.numerator());
  if (!n) return std::nullopt;
  auto d = is_square(a.denominator());
  if (!d) return std::nullopt;
  return FractionElement(std::move(*n), std::move(*d));
}

bool leading_sign_normalized(const FractionElement& a) {
  return leading_sign_normalized(a.numerator());
}

}  // namespace splitforge
