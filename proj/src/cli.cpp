#include "splitforge/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "splitforge/certio.hpp"
#include "splitforge/splitting.hpp"
#include "splitforge/textio.hpp"
#include "splitforge/verify.hpp"

namespace splitforge {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(Errc::syntax_error, "cannot open '" + path + "' for reading");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(Errc::syntax_error, "cannot open '" + path + "' for writing");
  out << text;
}

std::string witness_summary(const SplitCertificate& cert) {
  const MinimalPrimeCert* sel = cert.selected_prime();
  if (!sel) return "-";
  if (const auto* w = std::get_if<RadicalWitnesses>(&sel->witnesses))
    return "c = " + to_string(w->c) + ", d = " + to_string(w->d) +
           ", u = " + to_string(w->u);
  if (const auto* w = std::get_if<CompletedSquareWitnesses>(&sel->witnesses))
    return "shift = (" + to_string(w->shift_x) + ", " + to_string(w->shift_y) +
           "), c = " + to_string(w->inner.c) + ", d = " + to_string(w->inner.d) +
           ", u = " + to_string(w->inner.u);
  if (const auto* w = std::get_if<NonradicalWitnesses>(&sel->witnesses))
    return "e = " + to_string(w->e) + ", (c-ae)/2 = " +
           to_string(w->half_minus) + ", (c+ae)/2 = " + to_string(w->half_plus);
  if (const auto* w = std::get_if<ReducibleWitnesses>(&sel->witnesses)) {
    std::string s;
    if (w->root_x) s += "x = " + to_string(*w->root_x);
    if (w->root_y) s += (s.empty() ? "" : ", ") + ("y = " + to_string(*w->root_y));
    return s.empty() ? "-" : s;
  }
  return "-";
}

std::string retraction_summary(const SplitCertificate& cert) {
  return "(" + to_string(cert.retraction[0]) + ", " +
         to_string(cert.retraction[1]) + ", " + to_string(cert.retraction[2]) +
         ", " + to_string(cert.retraction[3]) + ")";
}

void print_certificate_human(const SplitCertificate& cert, std::ostream& os) {
  os << "case: " << case_tag_name(cert.tag) << "\n";
  os << "selected prime: " << cert.selected << "\n";
  os << "witnesses: " << witness_summary(cert) << "\n";
  for (const auto& prime : cert.minimal_primes) {
    if (prime.tag == CaseTag::Free) continue;
    os << prime.name << " = (";
    for (std::size_t i = 0; i < prime.generators.size(); ++i) {
      if (i) os << ", ";
      os << to_string(prime.generators[i]);
    }
    os << ")\n";
  }
  os << "retraction (1, x, y, x*y) -> " << retraction_summary(cert) << "\n";
}

int cmd_analyze(const std::string& file, bool json, bool all_primes,
                std::uint64_t budget, std::uint64_t seed) {
  ExtensionProblem problem = parse_problem(read_file(file));
  BuildOptions options;
  options.all_primes = all_primes;
  options.budget = FactorBudget{budget};
  options.probe_seed = seed;
  auto certs = build_retraction(problem, options);
  if (json) {
    ordered_json out;
    out["case"] = case_tag_name(certs.front().tag);
    ordered_json arr = ordered_json::array();
    for (const auto& c : certs)
      arr.push_back(ordered_json::parse(certificate_to_json(c)));
    out["certificates"] = arr;
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < certs.size(); ++i) {
      if (certs.size() > 1)
        std::cout << "--- certificate " << i + 1 << " of " << certs.size()
                  << " ---\n";
      print_certificate_human(certs[i], std::cout);
    }
  }
  return 0;
}

int cmd_split(const std::string& file, const std::string& out,
              std::uint64_t budget, std::uint64_t seed) {
  ExtensionProblem problem = parse_problem(read_file(file));
  BuildOptions options;
  options.budget = FactorBudget{budget};
  options.probe_seed = seed;
  auto certs = build_retraction(problem, options);
  std::string text = certificate_to_json(certs.front());
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return 0;
}

int cmd_verify(const std::string& problem_file, const std::string& cert_file,
               bool json, std::optional<std::uint64_t> seed) {
  ExtensionProblem problem = parse_problem(read_file(problem_file));
  std::string cert_text = read_file(cert_file);
  VerificationReport report;
  try {
    SplitCertificate cert = certificate_from_json(cert_text);
    report = verify_certificate(problem, cert, seed);
  } catch (const SplitError& e) {
    if (e.code() != Errc::malformed_certificate) throw;
    report.pass = false;
    report.checks.push_back(
        VerificationCheck{"structure", false, e.what()});
  }
  if (json) {
    std::cout << report_to_json(report);
  } else {
    for (const auto& c : report.checks)
      std::cout << (c.ok ? "  ok   " : "  FAIL ") << c.name
                << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    std::cout << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? 0 : 3;
}

int cmd_demo(bool json) {
  struct Row {
    std::string name;
    std::string text;
    bool expect_error;
  };
  const std::vector<Row> corpus = {
      {"radical",
       "ring: Z\nf1: x^2 - 18\nf2: y^2 - 8\nJ: 3*y - 2*x\n", false},
      {"nonradical-golden",
       "ring: Z\nf1: x^2 - x - 1\nf2: y^2 - y - 1\nJ: y - x\n", false},
      {"nonradical-conjugate",
       "ring: Z\nf1: x^2 - x - 1\nf2: y^2 - y - 1\nJ: y + x - 1\n", false},
      {"complete-square-Qt",
       "ring: Q[t]\nf1: x^2 - 2*t*x + (t^2 - t)\nf2: y^2 - 2*y + (1 - 4*t)\n"
       "J: 2*x + y - (1 + 2*t)\n",
       false},
      {"radical-F5t", "ring: F5[t]\nf1: x^2 - t\nf2: y^2 - 4*t\nJ: y - 2*x\n",
       false},
      {"domain-free", "ring: Z\nf1: x^2 - 2\nf2: y^2 - 3\n", false},
      {"reducible", "ring: Z\nf1: x^2 - 9\nf2: y^2 - 3\nJ: x - 3\n", false},
      {"outside-hypotheses",
       "ring: Z\nf1: x^2 - x - 11\nf2: y^2 - 7*y + 1\nJ: y - x - 3\n", true},
  };

  ordered_json rows = ordered_json::array();
  bool all_good = true;
  for (const auto& row : corpus) {
    std::string cas, retraction = "-", verified = "-";
    try {
      ExtensionProblem problem = parse_problem(row.text);
      auto certs = build_retraction(problem, BuildOptions{});
      const auto& cert = certs.front();
      cas = case_tag_name(cert.tag);
      retraction = retraction_summary(cert);
      VerificationReport rep = verify_certificate(problem, cert);
      verified = rep.pass ? "pass" : "FAIL";
      if (!rep.pass || row.expect_error) all_good = false;
    } catch (const SplitError& e) {
      cas = "error: " + std::string(e.what());
      if (!row.expect_error) all_good = false;
    }
    if (json) {
      ordered_json r;
      r["name"] = row.name;
      r["case"] = cas;
      r["retraction"] = retraction;
      r["verify"] = verified;
      rows.push_back(r);
    } else {
      std::cout << row.name << "\n  case: " << cas
                << "\n  retraction: " << retraction
                << "\n  verify: " << verified << "\n";
    }
  }
  if (json) std::cout << rows.dump(2) << "\n";
  return all_good ? 0 : 2;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"splitforge: splitting certificates for bigenerated quadratic "
               "extensions over UFDs"};
  app.require_subcommand(1);

  std::string file, cert_file, out_file;
  bool json = false, all_primes = false;
  std::uint64_t budget = 0;  // 0 = default / SPLITFORGE_FACTOR_BUDGET
  std::uint64_t build_seed = BuildOptions{}.probe_seed;
  std::optional<std::uint64_t> seed_override;

  auto* analyze = app.add_subcommand("analyze", "print case verdict and certificate(s)");
  analyze->add_option("file", file, "problem file")->required();
  analyze->add_flag("--json", json, "machine-readable output");
  analyze->add_flag("--all-primes", all_primes,
                    "with J = (0), emit one certificate per minimal prime");
  analyze->add_option("--factor-budget", budget, "integer factorization effort");
  analyze->add_option("--seed", build_seed, "verification probe seed to record");

  auto* split = app.add_subcommand("split", "build a certificate");
  split->add_option("file", file, "problem file")->required();
  split->add_option("-o,--output", out_file, "certificate output path");
  split->add_option("--factor-budget", budget, "integer factorization effort");
  split->add_option("--seed", build_seed, "verification probe seed to record");

  auto* verify = app.add_subcommand("verify", "check a certificate (exit 0 pass, 3 fail)");
  verify->add_option("file", file, "problem file")->required();
  verify->add_option("certificate", cert_file, "certificate file")->required();
  verify->add_flag("--json", json, "machine-readable report");
  std::uint64_t seed_value = 0;
  auto* seed_opt = verify->add_option("--seed", seed_value, "override the probe seed");

  auto* demo = app.add_subcommand("demo", "run the built-in worked examples");
  demo->add_flag("--json", json, "machine-readable table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*analyze) return cmd_analyze(file, json, all_primes, budget, build_seed);
    if (*split) return cmd_split(file, out_file, budget, build_seed);
    if (*verify) {
      if (*seed_opt) seed_override = seed_value;
      return cmd_verify(file, cert_file, json, seed_override);
    }
    if (*demo) return cmd_demo(json);
  } catch (const SplitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace splitforge
