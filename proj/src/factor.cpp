#include <algorithm>
#include <cstdlib>
#include <map>

#include "splitforge/ring.hpp"

namespace splitforge {

namespace {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;
constexpr std::uint64_t kDefaultRhoBudget = 4'000'000;

// Deterministic for n < 3.3e24 with this base set.
const int kMillerRabinBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

struct Effort {
  std::uint64_t used = 0;
  std::uint64_t limit = 0;
  void spend(std::uint64_t amount) {
    used += amount;
    if (used > limit)
      fail(Errc::factorization_timeout,
           "factorization effort budget exhausted (" + std::to_string(limit) +
               " iterations)");
  }
};

Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

Int mulmod(const Int& a, const Int& b, const Int& n) { return a * b % n; }

bool miller_rabin(const Int& n) {
  if (n < 2) return false;
  for (int p : kMillerRabinBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (int a : kMillerRabinBases) {
    Int x = boost::multiprecision::powm(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor.
Int pollard_brent(const Int& n, Effort& effort) {
  if (n % 2 == 0) return 2;
  for (Int c = 1;; ++c) {
    Int y = 2, g = 1, q = 1, x = 0, ys = 0;
    std::uint64_t r = 1;
    const std::uint64_t batch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      effort.spend(r);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        std::uint64_t steps = std::min(batch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, abs_int(x - y), n);
        }
        effort.spend(steps);
        g = boost::multiprecision::gcd(q, n);
        k += batch;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = boost::multiprecision::gcd(abs_int(x - ys), n);
        effort.spend(1);
      }
    }
    if (g != n) return g;
    // cycle degenerated for this polynomial; retry with the next constant
  }
}

void factor_integer_rec(const Int& n, Effort& effort,
                        std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n, effort);
  factor_integer_rec(d, effort, out);
  factor_integer_rec(n / d, effort, out);
}

std::map<Int, unsigned> factor_integer(Int n, Effort& effort) {
  std::map<Int, unsigned> out;
  for (std::uint64_t d = 2; d <= kTrialDivisionBound && Int(d) * d <= n; d == 2 ? d = 3 : d += 2) {
    while (n % d == 0) {
      ++out[Int(d)];
      n /= d;
    }
  }
  if (n > 1) {
    if (n <= Int(kTrialDivisionBound) * kTrialDivisionBound || miller_rabin(n))
      ++out[n];  // leftover below the trial bound squared is prime
    else
      factor_integer_rec(n, effort, out);
  }
  return out;
}

// Splits a square-free polynomial into primes when every step stays within
// degree two; higher degrees are outside this artifact's scope.
void split_squarefree_poly(const RingElement& f,
                           std::vector<RingElement>& out) {
  int deg = f.degree();
  if (deg <= 0) return;
  if (deg == 1) {
    out.push_back(f);
    return;
  }
  if (deg == 2) {
    // monic x^2 + px + q splits iff p^2 - 4q is a square
    RingElement two = RingElement::from_int(f.ring(), 2);
    RingElement four = RingElement::from_int(f.ring(), 4);
    RingElement p(f.ring()), q(f.ring());
    if (f.ring().kind == RingKind::RationalPolys) {
      p = RingElement::rational_poly({f.qcoeffs()[1]}, f.ring().variable);
      q = RingElement::rational_poly({f.qcoeffs()[0]}, f.ring().variable);
    } else {
      p = RingElement::prime_poly(f.ring().characteristic, {f.pcoeffs()[1]},
                                  f.ring().variable);
      q = RingElement::prime_poly(f.ring().characteristic, {f.pcoeffs()[0]},
                                  f.ring().variable);
    }
    auto disc = p * p - four * q;
    auto s = is_square(disc);
    if (!s) {
      out.push_back(f);
      return;
    }
    // roots (-p ± s)/2
    RingElement t = RingElement::generator(f.ring());
    RingElement r1 = exact_div(-p + *s, two);
    RingElement r2 = exact_div(-p - *s, two);
    out.push_back(t - r1);
    out.push_back(t - r2);
    return;
  }
  fail(Errc::factorization_timeout,
       "polynomial factorization beyond degree two is outside the effort "
       "budget (square-free factor of degree " +
           std::to_string(deg) + ")");
}

// f must have zero derivative over F_p: then f(t) = g(t)^p with g read off
// the coefficients at multiples of p (Frobenius fixes the prime field).
RingElement pth_root_poly(const RingElement& f) {
  std::uint64_t p = f.ring().characteristic;
  RingElement::PCoeffs g((f.pcoeffs().size() - 1) / p + 1, 0);
  for (std::size_t i = 0; i < f.pcoeffs().size(); ++i) {
    if (f.pcoeffs()[i] == 0) continue;
    g[i / p] = f.pcoeffs()[i];
  }
  return RingElement::prime_poly(p, std::move(g), f.ring().variable);
}

void merge_factor(const RingElement& prime, unsigned mult,
                  std::vector<std::pair<RingElement, unsigned>>& out) {
  for (auto& [p, e] : out) {
    if (p == prime) {
      e += mult;
      return;
    }
  }
  out.emplace_back(prime, mult);
}

void factor_poly_monic(const RingElement& f, unsigned multiplicity,
                       std::vector<std::pair<RingElement, unsigned>>& out) {
  if (f.degree() <= 0) return;
  RingElement fp = formal_derivative(f);
  if (fp.is_zero()) {
    // only possible over F_p: f is a p-th power
    factor_poly_monic(pth_root_poly(f),
                      multiplicity * static_cast<unsigned>(
                                         f.ring().characteristic),
                      out);
    return;
  }
  RingElement c = gcd_normalized(f, fp);
  RingElement sqfree = exact_div(f, c);
  std::vector<RingElement> primes;
  split_squarefree_poly(sqfree, primes);
  for (const auto& p : primes) {
    // total multiplicity of p in f
    unsigned e = 0;
    RingElement rest = f;
    while (true) {
      auto q = try_exact_div(rest, p);
      if (!q) break;
      rest = *q;
      ++e;
    }
    merge_factor(p, e * multiplicity, out);
  }
  // factors hiding entirely inside c (multiplicity with p | e over F_p)
  RingElement leftover = f;
  for (const auto& [p, e] : out) {
    (void)e;
    while (true) {
      auto q = try_exact_div(leftover, p);
      if (!q) break;
      leftover = *q;
    }
  }
  if (leftover.degree() > 0) factor_poly_monic(leftover, multiplicity, out);
}

}  // namespace

bool miller_rabin_probable_prime(const Int& n) { return miller_rabin(n); }

std::uint64_t FactorBudget::resolve() const {
  if (effort != 0) return effort;
  if (const char* env = std::getenv("SPLITFORGE_FACTOR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultRhoBudget;
}

RingElement PrimeFactorization::reconstruct() const {
  RingElement r = unit;
  for (const auto& [p, e] : factors) r *= pow_el(p, e);
  return r;
}

PrimeFactorization factor(const RingElement& a, FactorBudget budget) {
  if (a.is_zero()) fail(Errc::zero_input, "factor(0) is undefined");
  PrimeFactorization result;
  switch (a.ring().kind) {
    case RingKind::Integers: {
      Effort effort{0, budget.resolve()};
      bool neg = a.as_integer() < 0;
      result.unit = RingElement::integer(neg ? -1 : 1);
      auto fs = factor_integer(abs_int(a.as_integer()), effort);
      for (const auto& [p, e] : fs)
        result.factors.emplace_back(RingElement::integer(p), e);
      return result;
    }
    case RingKind::RationalPolys:
    case RingKind::PrimePolys: {
      auto [unit, monic] = canonical_associate(a);
      result.unit = unit;
      factor_poly_monic(monic, 1, result.factors);
      std::sort(result.factors.begin(), result.factors.end(),
                [](const auto& x, const auto& y) {
                  return compare_elements(x.first, y.first) < 0;
                });
      return result;
    }
  }
  fail(Errc::unknown_ring, "bad ring descriptor");
}

bool is_square_free(const RingElement& a, FactorBudget budget) {
  if (a.is_zero()) fail(Errc::zero_input, "is_square_free(0) is undefined");
  switch (a.ring().kind) {
    case RingKind::Integers: {
      Int n = abs_int(a.as_integer());
      if (n == 1) return true;
      auto fs = factor(a, budget);
      for (const auto& [p, e] : fs.factors)
        if (e > 1) return false;
      return true;
    }
    case RingKind::RationalPolys:
    case RingKind::PrimePolys: {
      if (a.degree() == 0) return true;
      RingElement d = formal_derivative(a);
      if (d.is_zero())
        fail(Errc::inseparable_input,
             "zero derivative: the gcd square-free test does not apply");
      return gcd_normalized(a, d).is_unit();
    }
  }
  fail(Errc::unknown_ring, "bad ring descriptor");
}

}  // namespace splitforge
