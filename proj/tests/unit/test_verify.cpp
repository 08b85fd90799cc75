#include <doctest.h>

#include "helpers.hpp"
#include "splitforge/certio.hpp"
#include "splitforge/splitting.hpp"
#include "splitforge/verify.hpp"

using namespace sft;

namespace {

SplitCertificate build_one(const std::string& text) {
  auto certs = build_retraction(parse_problem(text));
  REQUIRE(certs.size() == 1);
  return certs.front();
}

bool check_failed(const VerificationReport& report, const std::string& name) {
  for (const auto& c : report.checks)
    if (c.name == name) return !c.ok;
  return false;
}

const std::string kRadical =
    "ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\nJ: 3*y - 2*x\n";
const std::string kNonradical =
    "ring: Z\nf1: x^2 - x - 1\nf2: y^2 - y - 1\nJ: y - x\n";

}  // namespace

TEST_CASE("built certificates verify for every case") {
  for (const std::string text : {
           kRadical,
           kNonradical,
           std::string("ring: Z\nf1: x^2 - x - 1\nf2: y^2 - y - 1\nJ: y + x - 1\n"),
           std::string("ring: Z\nf1: x^2 - 2\nf2: y^2 - 3\n"),
           std::string("ring: Z\nf1: x^2 - 9\nf2: y^2 - 3\nJ: x - 3\n"),
           std::string("ring: Q[t]\nf1: x^2 - 2*t*x + (t^2 - t)\n"
                       "f2: y^2 - 2*y + (1 - 4*t)\nJ: 2*x + y - (1 + 2*t)\n"),
           std::string("ring: F5[t]\nf1: x^2 - t\nf2: y^2 - 4*t\nJ: y - 2*x\n"),
       }) {
    ExtensionProblem problem = parse_problem(text);
    SplitCertificate cert = build_one(text);
    VerificationReport report = verify_certificate(problem, cert);
    if (!report.pass) {
      for (const auto& c : report.checks)
        if (!c.ok) MESSAGE(text, " -> ", c.name, ": ", c.detail);
    }
    CHECK(report.pass);
  }
}

TEST_CASE("a tampered retraction coordinate is caught") {
  ExtensionProblem problem = parse_problem(kRadical);
  SplitCertificate cert = build_one(kRadical);
  cert.retraction[3] = zi(11);
  auto report = verify_certificate(problem, cert);
  CHECK(!report.pass);
  CHECK(check_failed(report, "retraction-matches-elimination"));
  CHECK(check_failed(report, "ideal-kill-probes"));
}

TEST_CASE("a transcript for the wrong prime is caught") {
  // y^3*(3y - 2x) lies in P1; its q5 quotient flips sign with r, so the P0
  // chain cannot replay against the P1 divisors
  const std::string text =
      "ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\nJ: 3*y^4 - 2*x*y^3\n";
  ExtensionProblem problem = parse_problem(text);
  SplitCertificate cert = build_one(text);
  REQUIRE(cert.selected == "P1");
  RadicalWitnesses w{zi(2), zi(3), zi(2)};
  auto nf = reduce_to_linear(problem.j_generators[0], 0, w);
  SplitCertificate tampered = cert;
  tampered.transcripts[0].steps = nf.steps;
  auto report = verify_certificate(problem, tampered);
  CHECK(!report.pass);
  CHECK(check_failed(report, "j-membership-transcripts"));

  // so does a single tampered quotient coefficient
  SplitCertificate tampered2 = cert;
  tampered2.transcripts[0].steps[0].quotient +=
      BiPoly::constant(RingElement::integer(1));
  auto report2 = verify_certificate(problem, tampered2);
  CHECK(!report2.pass);
  CHECK(check_failed(report2, "j-membership-transcripts"));
}

TEST_CASE("a foreign problem echo is caught") {
  ExtensionProblem problem = parse_problem(kRadical);
  SplitCertificate cert = build_one(kRadical);
  cert.problem.f1.b = zi(-17);
  auto report = verify_certificate(problem, cert);
  CHECK(!report.pass);
  CHECK(check_failed(report, "problem-echo"));
}

TEST_CASE("witness tampering is caught") {
  ExtensionProblem problem = parse_problem(kRadical);
  SplitCertificate cert = build_one(kRadical);
  for (auto& prime : cert.minimal_primes)
    prime.witnesses = RadicalWitnesses{zi(2), zi(3), zi(3)};
  auto report = verify_certificate(problem, cert);
  CHECK(!report.pass);
  CHECK(check_failed(report, "witness-equations"));
}

TEST_CASE("identity records are recomputed, not trusted") {
  ExtensionProblem problem = parse_problem(kNonradical);
  SplitCertificate cert = build_one(kNonradical);
  REQUIRE(cert.identities.size() == 2);
  cert.identities[1].difference = BiPoly(Z());
  auto report = verify_certificate(problem, cert);
  CHECK(!report.pass);
  CHECK(check_failed(report, "identities"));
}

TEST_CASE("check_identities evaluates the case suite") {
  SplitCertificate cert = build_one(kRadical);
  auto ids = check_identities(cert);
  REQUIRE(ids.size() == 1);
  CHECK(ids[0].first == "zero-divisor-factorization");
  CHECK(ids[0].second);

  SplitCertificate cert2 = build_one(kNonradical);
  auto ids2 = check_identities(cert2);
  REQUIRE(ids2.size() == 2);
  CHECK(ids2[0].second);
  CHECK(ids2[1].second);
}

TEST_CASE("verification reports are seeded and reproducible") {
  ExtensionProblem problem = parse_problem(kRadical);
  SplitCertificate cert = build_one(kRadical);
  auto r1 = verify_certificate(problem, cert, 123);
  auto r2 = verify_certificate(problem, cert, 123);
  CHECK(r1.seed == 123);
  CHECK(r1.pass == r2.pass);
  CHECK(r1.checks.size() == r2.checks.size());
}

TEST_CASE("json round trip is byte identical") {
  for (const std::string text :
       {kRadical, kNonradical,
        std::string("ring: Q[t]\nf1: x^2 - 2*t*x + (t^2 - t)\n"
                    "f2: y^2 - 2*y + (1 - 4*t)\nJ: 2*x + y - (1 + 2*t)\n"),
        std::string("ring: Z\nf1: x^2 - 9\nf2: y^2 - 3\nJ: x - 3\n"),
        std::string("ring: Z\nf1: x^2 - 2\nf2: y^2 - 3\n")}) {
    SplitCertificate cert = build_one(text);
    std::string once = certificate_to_json(cert);
    SplitCertificate parsed = certificate_from_json(once);
    CHECK(parsed == cert);
    CHECK(certificate_to_json(parsed) == once);
  }
}

TEST_CASE("malformed certificates are rejected while parsing") {
  CHECK_THROWS_AS(certificate_from_json("{}"), SplitError);
  CHECK_THROWS_AS(certificate_from_json("not json at all"), SplitError);
  SplitCertificate cert = build_one(kRadical);
  std::string text = certificate_to_json(cert);
  // retraction entry replaced by something unparseable
  auto pos = text.find("\"12\"");
  REQUIRE(pos != std::string::npos);
  std::string broken = text;
  broken.replace(pos, 4, "\"1x\"");
  CHECK_THROWS_AS(certificate_from_json(broken), SplitError);
}
