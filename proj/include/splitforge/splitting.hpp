#ifndef SPLITFORGE_SPLITTING_HPP
#define SPLITFORGE_SPLITTING_HPP

#include <utility>
#include <vector>

#include "splitforge/certificate.hpp"
#include "splitforge/quadext.hpp"

namespace splitforge {

struct DomainVerdict {
  enum class Kind { Domain, NonDomain, ReducibleF1 };
  Kind kind = Kind::Domain;
  std::optional<QuadExtElement> f2_root;  // NonDomain: root of f2 in E
  std::optional<RingElement> f1_root;     // ReducibleF1: root of f1 in R
};

// T is a domain iff disc(f1) is a non-square in L and f2 has no root in
// E = L[x]/(f1). A NonDomain verdict carries the root, a ReducibleF1 verdict
// carries a root of f1 (which lies in R since f1 is monic over a UFD).
DomainVerdict domain_test(const MonicQuadratic& f1, const MonicQuadratic& f2,
                          const RingDescriptor& ring);

// Given the radical presentation f1 = x^2 - a1, f2 = y^2 - a2 with f1
// irreducible over L and T not a domain, produces (c, d, u) with a1 = d^2*u,
// a2 = c^2*u and gcd(c, d) = 1, d canonical and c carrying the sign of the
// canonical root. NotApplicable in the domain / reducible cases.
RadicalWitnesses radical_decompose(const RingElement& a1,
                                   const RingElement& a2);

// The two minimal primes P_r = (f1, f2, f3_r, f4_r) with their elimination
// maps x -> d*zbar, y -> (-1)^(r+1)*c*zbar into R[z]/(z^2 - u).
std::array<MinimalPrimeCert, 2> minimal_primes_radical(
    const RadicalWitnesses& w);

struct SquareCompletion {
  RingElement a1_prime, a2_prime;  // disc(f1)/4 and disc(f2)/4
  RingElement shift_x, shift_y;    // a/2 and c/2
};

// Completing the squares; requires 2 to be a unit in R (TwoNotUnit over Z).
SquareCompletion complete_square(const MonicQuadratic& f,
                                 const MonicQuadratic& g);

// The witness e with c^2 - 4d = e^2*(a^2 - 4b) plus the two halves
// (c -+ a*e)/2. Preconditions (checked, reported via HypothesesNotMet as
// which one failed): ring = Z, gcd(2, c) = 1, disc(f) nonzero square-free,
// then exact divisibility and squareness of the quotient.
NonradicalWitnesses nonradical_witness(const MonicQuadratic& f,
                                       const MonicQuadratic& g,
                                       FactorBudget budget = {});

// P_1 = (h1), P_2 = (h2) with h1 = y - e*x - (c-ae)/2 and the sign-corrected
// h2 = y + e*x - (c+ae)/2; verifies h1*h2 = g - e^2*f before returning.
std::array<MinimalPrimeCert, 2> minimal_primes_nonradical(
    const MonicQuadratic& f, const MonicQuadratic& g,
    const NonradicalWitnesses& w);

// Zero-divisor pair for any non-domain verdict (the denominators of the root
// cleared); both components nonzero in T with t_mul product zero.
std::pair<TElement, TElement> nondomain_zero_divisors(
    const MonicQuadratic& f1, const MonicQuadratic& f2,
    const QuadExtElement& f2_root);

struct BuildOptions {
  bool all_primes = false;  // with J = (0), also emit per-prime certificates
  FactorBudget budget;
  std::uint64_t probe_seed = 20160901;
};

// Case analysis and certificate construction. Returns one certificate, or
// several when J = (0) and all_primes is set (the canonical free-module
// projection always comes first).
std::vector<SplitCertificate> build_retraction(const ExtensionProblem& problem,
                                               const BuildOptions& options = {});

}  // namespace splitforge

#endif
