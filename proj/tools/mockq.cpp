// mockq: expand I-functions, verify the mock theta catalog, run self-checks.
//
// Exit codes: 0 success, 2 usage or parse error, 3 mathematical failure
// (pole, non-convergence, identity mismatch).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mockq/catalog.hpp"
#include "mockq/errors.hpp"
#include "mockq/iseries.hpp"
#include "mockq/json_io.hpp"
#include "mockq/selfcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

constexpr std::uint64_t kDefaultSeed = 20240229;
constexpr mockq::Exponent kFamilyTrunc = 20;
constexpr int kFamilyTrials = 5;

struct RunConfig {
  long trunc = -1;  // -1: command default
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string model_path;
  std::string spec_path;
  std::string target;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mockq::UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool json_out(const RunConfig& cfg) { return cfg.format == "json"; }

int cmd_expand(const RunConfig& cfg) {
  const auto model_file = mockq::model_from_json(mockq::parse_json_text(read_file(cfg.model_path), cfg.model_path));
  const auto spec = mockq::specialization_from_json(mockq::parse_json_text(read_file(cfg.spec_path), cfg.spec_path),
                                                    model_file.model);
  const mockq::Exponent trunc = cfg.trunc >= 0 ? cfg.trunc : 30;
  const auto series = mockq::i_function(model_file.model, model_file.convention, spec, trunc);
  if (json_out(cfg)) {
    std::cout << mockq::series_to_json(series).dump() << "\n";
  } else {
    std::cout << series.to_string() << "\n";
  }
  return kExitOk;
}

void print_report(const mockq::VerifyReport& r) {
  std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " trunc=" << r.trunc;
  if (r.first_mismatch) {
    std::cout << " first mismatch at q^" << r.first_mismatch->exp << ": lhs " << r.first_mismatch->lhs << ", rhs "
              << r.first_mismatch->rhs;
  }
  std::cout << " (" << static_cast<long>(r.elapsed_ms) << " ms)\n";
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<mockq::VerifyReport> reports;
  if (cfg.target == "all") {
    for (const auto& id : mockq::identities()) {
      reports.push_back(mockq::verify_identity(id, cfg.trunc >= 0 ? cfg.trunc : id.default_trunc));
    }
    for (auto& r : mockq::verify_hypergeometric_family(cfg.seed, kFamilyTrials, cfg.trunc >= 0 ? cfg.trunc : kFamilyTrunc)) {
      reports.push_back(std::move(r));
    }
  } else if (cfg.target == mockq::kHypergeometricFamily) {
    reports = mockq::verify_hypergeometric_family(cfg.seed, kFamilyTrials, cfg.trunc >= 0 ? cfg.trunc : kFamilyTrunc);
  } else {
    auto id = mockq::find_identity(cfg.target);
    if (!id) throw mockq::UsageError("unknown identity: " + cfg.target);
    reports.push_back(mockq::verify_identity(*id, cfg.trunc >= 0 ? cfg.trunc : id->default_trunc));
  }

  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.pass;
  if (json_out(cfg)) {
    mockq::Json out = mockq::Json::array();
    for (const auto& r : reports) out.push_back(mockq::report_to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) print_report(r);
    long passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    std::cout << passed << "/" << reports.size() << " passed\n";
  }
  return all_pass ? kExitOk : kExitMath;
}

int cmd_catalog(const RunConfig& cfg) {
  const auto listing = mockq::list_identities();
  if (json_out(cfg)) {
    std::cout << mockq::listing_to_json(listing).dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& item : listing) {
    std::cout << item.name << "  [" << item.group << "]  " << item.description << "\n";
  }
  return kExitOk;
}

int cmd_mock(const RunConfig& cfg) {
  const auto series = mockq::mock_theta(cfg.target, cfg.trunc >= 0 ? cfg.trunc : 30);
  if (json_out(cfg)) {
    std::cout << mockq::series_to_json(series).dump() << "\n";
  } else {
    std::cout << series.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_selfcheck(const RunConfig& cfg) {
  const auto suites = mockq::run_selfcheck(cfg.seed, mockq::SuiteSizes::quick());
  bool clean = true;
  for (const auto& s : suites) clean = clean && s.ok();
  if (json_out(cfg)) {
    std::cout << mockq::Json{{"seed", cfg.seed}, {"suites", mockq::suites_to_json(suites)}}.dump(2) << "\n";
  } else {
    std::cout << "seed " << cfg.seed << "\n";
    for (const auto& s : suites) {
      std::cout << (s.ok() ? "ok   " : "FAIL ") << s.name << "  " << s.cases << " cases";
      if (!s.ok()) std::cout << ", " << s.failures << " failures; first: " << s.first_failure;
      std::cout << "\n";
    }
  }
  return clean ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series engine for I-functions and mock theta identities"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--trunc", cfg.trunc, "q-order to compute to")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.fallthrough();

  auto* expand = app.add_subcommand("expand", "expand a model under a specialization");
  expand->add_option("model", cfg.model_path, "model JSON file")->required();
  expand->add_option("spec", cfg.spec_path, "specialization JSON file")->required();
  auto* verify = app.add_subcommand("verify", "verify a cataloged identity, or all of them");
  verify->add_option("name", cfg.target, "identity name or 'all'")->required();
  app.add_subcommand("catalog", "list the cataloged identities");
  auto* mock = app.add_subcommand("mock", "print a right-hand-side series");
  mock->add_option("oracle", cfg.target, "oracle id (see catalog)")->required();
  app.add_subcommand("selfcheck", "run the property suites at small sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "expand") return cmd_expand(cfg);
    if (cmd == "verify") return cmd_verify(cfg);
    if (cmd == "catalog") return cmd_catalog(cfg);
    if (cmd == "mock") return cmd_mock(cfg);
    return cmd_selfcheck(cfg);
  } catch (const mockq::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mockq::PoleError& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return kExitMath;
  } catch (const mockq::DivisionByZero& e) {
    std::cerr << "division by zero: " << e.what() << "\n";
    return kExitMath;
  } catch (const mockq::ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return kExitMath;
  }
}
