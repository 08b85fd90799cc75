#include "splitforge/certio.hpp"

#include <json.hpp>

#include "splitforge/textio.hpp"

namespace splitforge {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string linear_z_string(const QuadModElement& e) {
  return univar_to_string('z', {e.c0, e.c1});
}

ordered_json witnesses_to_json(const MinimalPrimeCert& prime) {
  ordered_json w = ordered_json::object();
  if (const auto* rad = std::get_if<RadicalWitnesses>(&prime.witnesses)) {
    w["c"] = to_string(rad->c);
    w["d"] = to_string(rad->d);
    w["u"] = to_string(rad->u);
  } else if (const auto* cs =
                 std::get_if<CompletedSquareWitnesses>(&prime.witnesses)) {
    w["shift_x"] = to_string(cs->shift_x);
    w["shift_y"] = to_string(cs->shift_y);
    w["c"] = to_string(cs->inner.c);
    w["d"] = to_string(cs->inner.d);
    w["u"] = to_string(cs->inner.u);
  } else if (const auto* nr =
                 std::get_if<NonradicalWitnesses>(&prime.witnesses)) {
    w["e"] = to_string(nr->e);
    w["half_minus"] = to_string(nr->half_minus);
    w["half_plus"] = to_string(nr->half_plus);
  } else if (const auto* red =
                 std::get_if<ReducibleWitnesses>(&prime.witnesses)) {
    if (red->root_x) w["root_x"] = to_string(*red->root_x);
    if (red->root_y) w["root_y"] = to_string(*red->root_y);
  }
  return w;
}

ordered_json problem_to_json(const ExtensionProblem& p) {
  ordered_json j = ordered_json::object();
  j["ring"] = p.ring.name();
  j["f1"] = to_string(p.f1.as_bipoly(Var::X));
  j["f2"] = to_string(p.f2.as_bipoly(Var::Y));
  ordered_json gens = ordered_json::array();
  for (const auto& g : p.j_generators) gens.push_back(to_string(g));
  j["j"] = gens;
  return j;
}

RingDescriptor ring_from_name(const std::string& name) {
  if (name == "Z") return integers();
  if (name == "Q[t]") return rational_polys('t');
  if (name.size() > 4 && name[0] == 'F' &&
      name.substr(name.size() - 3) == "[t]") {
    std::string digits = name.substr(1, name.size() - 4);
    if (!digits.empty() && digits.size() <= 9 &&
        digits.find_first_not_of("0123456789") == std::string::npos)
      return prime_polys(std::stoull(digits), 't');
  }
  fail(Errc::unknown_ring, "unknown ring '" + name + "'");
}

ExtensionProblem problem_from_json(const ordered_json& j) {
  ExtensionProblem p;
  p.ring = ring_from_name(j.at("ring").get<std::string>());
  BiPoly f1 = parse_bipoly(p.ring, j.at("f1").get<std::string>());
  BiPoly f2 = parse_bipoly(p.ring, j.at("f2").get<std::string>());
  if (f1.degree(Var::X) != 2 || f1.degree(Var::Y) > 0 ||
      !f1.coeff(2, 0).is_one())
    fail(Errc::malformed_certificate, "problem f1 is not a monic quadratic");
  if (f2.degree(Var::Y) != 2 || f2.degree(Var::X) > 0 ||
      !f2.coeff(0, 2).is_one())
    fail(Errc::malformed_certificate, "problem f2 is not a monic quadratic");
  p.f1 = MonicQuadratic(-f1.coeff(1, 0), f1.coeff(0, 0), 'x');
  p.f2 = MonicQuadratic(-f2.coeff(0, 1), f2.coeff(0, 0), 'y');
  for (const auto& g : j.at("j"))
    p.j_generators.push_back(parse_bipoly(p.ring, g.get<std::string>()));
  return p;
}

CaseWitnesses witnesses_from_json(CaseTag tag, const ordered_json& w,
                                  const RingDescriptor& ring, int index) {
  auto el = [&](const char* key) {
    return parse_ring_element(ring, w.at(key).get<std::string>());
  };
  switch (tag) {
    case CaseTag::Free:
      return std::monostate{};
    case CaseTag::Radical:
      return RadicalWitnesses{el("c"), el("d"), el("u")};
    case CaseTag::CompletedSquare:
      return CompletedSquareWitnesses{
          el("shift_x"), el("shift_y"),
          RadicalWitnesses{el("c"), el("d"), el("u")}, index};
    case CaseTag::Nonradical:
      return NonradicalWitnesses{el("e"), el("half_minus"), el("half_plus")};
    case CaseTag::Reducible: {
      ReducibleWitnesses red;
      if (w.contains("root_x")) red.root_x = el("root_x");
      if (w.contains("root_y")) red.root_y = el("root_y");
      return red;
    }
  }
  fail(Errc::malformed_certificate, "unknown case tag");
}

}  // namespace

std::string certificate_to_json(const SplitCertificate& cert) {
  ordered_json j;
  j["schema_version"] = "1";
  j["problem"] = problem_to_json(cert.problem);
  j["case"] = case_tag_name(cert.tag);
  const MinimalPrimeCert* sel = cert.selected_prime();
  j["witnesses"] = sel ? witnesses_to_json(*sel) : ordered_json::object();

  ordered_json primes = ordered_json::array();
  for (const auto& prime : cert.minimal_primes) {
    ordered_json pj = ordered_json::object();
    pj["name"] = prime.name;
    pj["index"] = std::to_string(prime.index);
    if (std::holds_alternative<ReducibleWitnesses>(prime.witnesses))
      pj["witnesses"] = witnesses_to_json(prime);
    ordered_json gens = ordered_json::array();
    for (const auto& g : prime.generators) gens.push_back(to_string(g));
    pj["generators"] = gens;
    if (prime.elimination) {
      ordered_json ej = ordered_json::object();
      ej["modulus"] = to_string(prime.elimination->modulus);
      ej["x"] = linear_z_string(prime.elimination->img_x);
      ej["y"] = linear_z_string(prime.elimination->img_y);
      pj["elimination"] = ej;
    }
    primes.push_back(pj);
  }
  j["minimal_primes"] = primes;
  j["selected_prime"] = cert.selected;

  ordered_json rho = ordered_json::array();
  for (const auto& r : cert.retraction) rho.push_back(to_string(r));
  j["retraction"] = rho;

  ordered_json trs = ordered_json::array();
  for (const auto& tr : cert.transcripts) {
    ordered_json tj = ordered_json::object();
    tj["generator"] = to_string(tr.generator);
    ordered_json steps = ordered_json::array();
    for (const auto& st : tr.steps) {
      ordered_json sj = ordered_json::object();
      sj["divisor"] = st.divisor_tag;
      sj["quotient"] = to_string(st.quotient);
      steps.push_back(sj);
    }
    tj["steps"] = steps;
    tj["remainder"] = to_string(tr.remainder);
    if (tr.cofactor) tj["cofactor"] = to_string(*tr.cofactor);
    trs.push_back(tj);
  }
  j["transcripts"] = trs;

  ordered_json ids = ordered_json::array();
  for (const auto& id : cert.identities) {
    ordered_json ij = ordered_json::object();
    ij["name"] = id.name;
    ij["kind"] = id.kind == IdentityRecord::Kind::ExactZero
                     ? "exact-zero"
                     : "zero-mod-presentation";
    ij["difference"] = to_string(id.difference);
    ids.push_back(ij);
  }
  j["identities"] = ids;
  j["probe_seed"] = std::to_string(cert.probe_seed);
  return j.dump(2) + "\n";
}

SplitCertificate certificate_from_json(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    SplitCertificate cert;
    if (j.at("schema_version").get<std::string>() != "1")
      fail(Errc::malformed_certificate, "unsupported schema version");
    cert.problem = problem_from_json(j.at("problem"));
    auto tag = case_tag_from_name(j.at("case").get<std::string>());
    if (!tag)
      fail(Errc::malformed_certificate,
           "unknown case '" + j.at("case").get<std::string>() + "'");
    cert.tag = *tag;
    const RingDescriptor& ring = cert.problem.ring;

    cert.selected = j.at("selected_prime").get<std::string>();
    for (const auto& pj : j.at("minimal_primes")) {
      MinimalPrimeCert prime;
      prime.name = pj.at("name").get<std::string>();
      prime.index = std::stoi(pj.at("index").get<std::string>());
      prime.tag = cert.tag;
      const ordered_json& wj =
          pj.contains("witnesses") ? pj.at("witnesses") : j.at("witnesses");
      prime.witnesses = witnesses_from_json(cert.tag, wj, ring, prime.index);
      for (const auto& g : pj.at("generators"))
        prime.generators.push_back(parse_bipoly(ring, g.get<std::string>()));
      if (pj.contains("elimination")) {
        const auto& ej = pj.at("elimination");
        MonicQuadratic mod = parse_monic_quadratic_z(
            ring, ej.at("modulus").get<std::string>());
        auto [x0, x1] = parse_linear_z(ring, ej.at("x").get<std::string>());
        auto [y0, y1] = parse_linear_z(ring, ej.at("y").get<std::string>());
        prime.elimination = EliminationMap{mod, QuadModElement{x0, x1, mod},
                                           QuadModElement{y0, y1, mod}};
      }
      cert.minimal_primes.push_back(std::move(prime));
    }
    // the top-level witnesses must be the selected prime's payload
    if (const MinimalPrimeCert* sel = cert.selected_prime()) {
      if (!(witnesses_to_json(*sel) == j.at("witnesses")))
        fail(Errc::malformed_certificate,
             "top-level witnesses differ from the selected prime's");
    }

    const auto& rho = j.at("retraction");
    if (rho.size() != 4)
      fail(Errc::malformed_certificate, "retraction must have 4 entries");
    for (std::size_t i = 0; i < 4; ++i)
      cert.retraction[i] =
          parse_ring_element(ring, rho.at(i).get<std::string>());

    for (const auto& tj : j.at("transcripts")) {
      MembershipTranscript tr;
      tr.generator = parse_bipoly(ring, tj.at("generator").get<std::string>());
      for (const auto& sj : tj.at("steps"))
        tr.steps.push_back(TranscriptStep{
            sj.at("divisor").get<std::string>(),
            parse_bipoly(ring, sj.at("quotient").get<std::string>())});
      tr.remainder = parse_bipoly(ring, tj.at("remainder").get<std::string>());
      if (tj.contains("cofactor"))
        tr.cofactor =
            parse_ring_element(ring, tj.at("cofactor").get<std::string>());
      cert.transcripts.push_back(std::move(tr));
    }

    for (const auto& ij : j.at("identities")) {
      IdentityRecord id;
      id.name = ij.at("name").get<std::string>();
      std::string kind = ij.at("kind").get<std::string>();
      if (kind == "exact-zero")
        id.kind = IdentityRecord::Kind::ExactZero;
      else if (kind == "zero-mod-presentation")
        id.kind = IdentityRecord::Kind::ZeroModPresentation;
      else
        fail(Errc::malformed_certificate, "unknown identity kind '" + kind + "'");
      id.difference = parse_bipoly(ring, ij.at("difference").get<std::string>());
      cert.identities.push_back(std::move(id));
    }
    cert.probe_seed = std::stoull(j.at("probe_seed").get<std::string>());
    return cert;
  } catch (const SplitError& e) {
    if (e.code() == Errc::malformed_certificate) throw;
    fail(Errc::malformed_certificate, e.what());
  } catch (const std::exception& e) {
    fail(Errc::malformed_certificate, e.what());
  }
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["pass"] = report.pass;
  j["probe_seed"] = std::to_string(report.seed);
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj = ordered_json::object();
    cj["name"] = c.name;
    cj["ok"] = c.ok;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

}  // namespace splitforge
