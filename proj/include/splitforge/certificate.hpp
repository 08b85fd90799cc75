#ifndef SPLITFORGE_CERTIFICATE_HPP
#define SPLITFORGE_CERTIFICATE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "splitforge/poly.hpp"
#include "splitforge/quotient.hpp"
#include "splitforge/ring.hpp"

namespace splitforge {

// S presented as T/J with T = R[x,y]/(f1, f2); an empty generator list (or
// generators that all reduce to zero mod the presentation) means J = (0).
struct ExtensionProblem {
  RingDescriptor ring;
  MonicQuadratic f1;  // in x
  MonicQuadratic f2;  // in y
  std::vector<BiPoly> j_generators;

  TPresentation presentation() const { return TPresentation{f1, f2}; }
  bool operator==(const ExtensionProblem&) const = default;
};

enum class CaseTag { Free, Reducible, Radical, CompletedSquare, Nonradical };

std::string case_tag_name(CaseTag tag);
std::optional<CaseTag> case_tag_from_name(const std::string& name);

// Witnesses of the nonradical construction: c^2 - 4d = e^2*(a^2 - 4b) and
// half_minus = (c - a*e)/2, half_plus = (c + a*e)/2, both in R.
struct NonradicalWitnesses {
  RingElement e, half_minus, half_plus;
  bool operator==(const NonradicalWitnesses&) const = default;
};

// Roots substituted in the reducible dispatch; root_y engages only when f2
// splits as well and the target collapses to R itself.
struct ReducibleWitnesses {
  std::optional<RingElement> root_x;
  std::optional<RingElement> root_y;
  bool operator==(const ReducibleWitnesses&) const = default;
};

// Completing the square: x = u + shift_x, y = v + shift_y turns (f1, f2)
// into the radical presentation with a1' = d^2*u etc. from inner.
struct CompletedSquareWitnesses {
  RingElement shift_x, shift_y;
  RadicalWitnesses inner;
  int inner_r = 0;
  bool operator==(const CompletedSquareWitnesses&) const = default;
};

using CaseWitnesses =
    std::variant<std::monostate, RadicalWitnesses, NonradicalWitnesses,
                 CompletedSquareWitnesses, ReducibleWitnesses>;

// Ring homomorphism chi: T -> R[z]/(modulus) given by the images of xbar and
// ybar; the retraction is pi1 composed with chi.
struct EliminationMap {
  MonicQuadratic modulus;  // in z
  QuadModElement img_x, img_y;
  bool operator==(const EliminationMap&) const = default;
};

struct MinimalPrimeCert {
  std::string name;  // "P0", "P1", "P2", ...
  CaseTag tag = CaseTag::Free;
  int index = 0;  // r (radical / completed square), j (nonradical)
  std::vector<BiPoly> generators;
  CaseWitnesses witnesses;
  std::optional<EliminationMap> elimination;  // absent for the free case
  bool operator==(const MinimalPrimeCert&) const = default;
};

// Proof that one J generator lies in the selected prime: replaying
//   sum_i divisor(tag_i) * quotient_i + remainder == generator
// must reconstruct the generator exactly, and the remainder must satisfy the
// case condition (zero, or the radical linear form with its cofactor).
struct MembershipTranscript {
  BiPoly generator;  // shifted form for the completed-square case
  std::vector<TranscriptStep> steps;
  BiPoly remainder;
  std::optional<RingElement> cofactor;
  bool operator==(const MembershipTranscript&) const = default;
};

struct IdentityRecord {
  enum class Kind { ExactZero, ZeroModPresentation };
  std::string name;
  Kind kind = Kind::ExactZero;
  BiPoly difference;
  bool operator==(const IdentityRecord&) const = default;
};

struct SplitCertificate {
  ExtensionProblem problem;
  CaseTag tag = CaseTag::Free;
  std::vector<MinimalPrimeCert> minimal_primes;
  std::string selected;  // name of the selected prime; "-" for the free case
  std::array<RingElement, 4> retraction;  // rho(1), rho(x), rho(y), rho(xy)
  std::vector<MembershipTranscript> transcripts;
  std::vector<IdentityRecord> identities;
  std::uint64_t probe_seed = 0;

  const MinimalPrimeCert* selected_prime() const {
    for (const auto& p : minimal_primes)
      if (p.name == selected) return &p;
    return nullptr;
  }
  bool operator==(const SplitCertificate&) const = default;
};

struct VerificationCheck {
  std::string name;
  bool ok = false;
  std::string detail;  // counterexample or witness
};

// Exhaustive: every check always runs, so a failing certificate reports its
// full failure profile.
struct VerificationReport {
  bool pass = false;
  std::uint64_t seed = 0;
  std::vector<VerificationCheck> checks;
};

}  // namespace splitforge

#endif
