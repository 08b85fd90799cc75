#ifndef SPLITFORGE_VERIFY_HPP
#define SPLITFORGE_VERIFY_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "splitforge/certificate.hpp"

namespace splitforge {

// Independent certificate checker. Nothing is taken from the construction
// path: witnesses, primes, transcripts and the retraction are all re-checked
// by direct arithmetic, and every check runs even after a failure so a bad
// certificate reports its complete failure profile. Malformed structure is
// reported as a failing check, never thrown.
VerificationReport verify_certificate(const ExtensionProblem& problem,
                                      const SplitCertificate& cert,
                                      std::optional<std::uint64_t> seed = {});

// Case-specific identity suite, recomputed from the certificate witnesses:
// the radical zero-divisor factorization, the nonradical h1*h2 identities
// (exact and modulo the presentation), and the square-completion relations.
std::vector<std::pair<std::string, bool>> check_identities(
    const SplitCertificate& cert);

// Dual-route membership agreement on seeded random bivariate polynomials
// (a mix of unstructured samples and planted P_r multiples), for both r.
bool cross_check_membership(const RadicalWitnesses& w, std::size_t samples,
                            unsigned degree_bound, std::uint64_t seed);

// Seeded sample generators shared by the verifier probes and the test
// suites. Engine output is consumed directly so results are reproducible
// across platforms.
RingElement random_ring_element(const RingDescriptor& ring,
                                std::mt19937_64& rng, long bound = 999);
BiPoly random_bipoly(const RingDescriptor& ring, std::mt19937_64& rng,
                     unsigned degree_bound, unsigned max_terms = 6,
                     long coeff_bound = 99);

}  // namespace splitforge

#endif
