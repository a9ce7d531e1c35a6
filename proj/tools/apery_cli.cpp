// Command-line front end: verify single claims, sweep the suite over prime
// ranges, print eta-quotient expansions, and emit deterministic reports.
//
// Exit codes: 0 all pass, 1 proven-claim failure, 2 conjectural finding only,
// 64 usage error, 65 precondition violation, 74 output I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apery/claims.hpp"
#include "apery/eta.hpp"
#include "apery/suite.hpp"
#include "apery/version.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitPrecondition = 65;
constexpr int kExitIo = 74;

int workers_from_env() {
  const char* env = std::getenv("APERY_WORKERS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 256) return 1;
  return static_cast<int>(v);
}

/// Writes to the path when given (I/O failures exit 74), else to stdout.
int deliver(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(*path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write to '" << *path << "'\n";
    return kExitIo;
  }
  return 0;
}

int exit_code_for_result(const apery::ClaimResult& result) {
  if (result.passed) return 0;
  return apery::result_is_conjectural(result.claim_id, result.parameters) ? 2 : 1;
}

void print_result(const apery::ClaimResult& result) {
  std::cout << result.claim_id;
  for (const auto& [k, v] : result.parameters) std::cout << ' ' << k << '=' << v;
  std::cout << ": " << (result.passed ? "PASS" : "FAIL") << '\n';
  int i = 0;
  for (const auto& v : result.verdicts) {
    std::cout << "  verdict " << ++i << ": " << (v.holds ? "holds" : "FAILS") << "  lhs = "
              << v.lhs.str() << "  rhs = " << v.rhs.str() << "  p = " << v.prime
              << "  m = " << v.exponent.str() << "  v_p(lhs-rhs) = " << v.diff_valuation.str()
              << '\n';
  }
}

int run_suite_and_deliver(const apery::SuiteConfig& config) {
  apery::VerificationReport report = apery::run_suite(config);
  int io = deliver(apery::render(report, config.output_format), config.output_path);
  if (io != 0) return io;
  std::cerr << "elapsed " << report.elapsed_seconds << "s (workers=" << config.workers << ")\n";
  return apery::exit_code_for(report);
}

int cli_main(int argc, char** argv) {
  CLI::App app{"exact verification of Apery-like supercongruences"};
  app.set_version_flag("--version", APERY_VERSION);
  app.require_subcommand(1);

  // verify <claim_id> [--p ...] --------------------------------------------
  auto* verify = app.add_subcommand("verify", "run one claim instance");
  std::string claim_id;
  verify->add_option("claim_id", claim_id, "registry id (see list-claims)")->required();
  std::map<std::string, std::int64_t> given;
  for (const char* name : {"p", "n", "j", "k", "m", "r", "order", "expect"}) {
    verify->add_option_function<std::int64_t>(
        std::string("--") + name,
        [&given, name](const std::int64_t& v) { given[name] = v; },
        std::string("claim parameter ") + name);
  }

  // sweep --pmin A --pmax B [--claims ...] ----------------------------------
  auto* sweep = app.add_subcommand("sweep", "run claims over a prime range");
  apery::SuiteConfig sweep_config;
  sweep_config.workers = workers_from_env();
  sweep->add_option("--pmin", sweep_config.prime_min, "smallest prime (>= 3)")->required();
  sweep->add_option("--pmax", sweep_config.prime_max, "largest prime")->required();
  sweep->add_option("--claims", sweep_config.claims, "claim ids (default: all non-selftest)");
  sweep->add_option("--workers", sweep_config.workers, "worker threads");
  sweep->add_option("--eta-order", sweep_config.eta_order, "eta-param expansion order");
  std::string sweep_format = "text";
  sweep->add_option("--format", sweep_format, "json|csv|text");
  std::string sweep_out;
  sweep->add_option("--out", sweep_out, "output path (default stdout)");

  // eta --order N ------------------------------------------------------------
  auto* eta = app.add_subcommand("eta", "print the eta-quotient parametrization");
  std::int64_t eta_order = 0;
  eta->add_option("--order", eta_order, "q-expansion order (>= 1)")->required();

  // list-claims ---------------------------------------------------------------
  auto* list = app.add_subcommand("list-claims", "print the claim registry");

  // report --format F [--out PATH] --------------------------------------------
  auto* report_cmd = app.add_subcommand("report", "run the default suite and emit a report");
  apery::SuiteConfig report_config;
  report_config.workers = workers_from_env();
  std::string report_format = "text";
  report_cmd->add_option("--format", report_format, "json|csv|text")->required();
  std::string report_out;
  report_cmd->add_option("--out", report_out, "output path (default stdout)");
  report_cmd->add_option("--workers", report_config.workers, "worker threads");
  report_cmd->add_option("--pmin", report_config.prime_min, "smallest prime (>= 3)");
  report_cmd->add_option("--pmax", report_config.prime_max, "largest prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      apery::ClaimResult result = apery::run_claim(claim_id, given);
      print_result(result);
      return exit_code_for_result(result);
    }
    if (*sweep) {
      sweep_config.output_format = apery::parse_format(sweep_format);
      if (!sweep_out.empty()) sweep_config.output_path = sweep_out;
      return run_suite_and_deliver(sweep_config);
    }
    if (*eta) {
      apery::ClaimResult result = apery::verify_eta_param(eta_order);
      apery::PSeries t = apery::t_series(eta_order);
      apery::PSeries lhs = apery::parametrization_lhs(eta_order);
      std::cout << "q^i, t coefficient, eta-quotient coefficient\n";
      for (long i = 0; i <= eta_order; ++i)
        std::cout << i << ", " << t.coeff(i).str() << ", " << lhs.coeff(i).str() << '\n';
      std::cout << "parametrization matches sum J(n) t^n through q^" << eta_order << ": "
                << (result.passed ? "yes" : "NO") << '\n';
      return result.passed ? 0 : 1;
    }
    if (*list) {
      for (const auto& info : apery::claim_registry()) {
        std::cout << info.id << " (";
        for (std::size_t i = 0; i < info.parameters.size(); ++i)
          std::cout << (i ? ", " : "") << info.parameters[i];
        std::cout << ")" << (info.conjectural ? " [conjectural]" : "") << "\n    "
                  << info.summary << '\n';
      }
      return 0;
    }
    if (*report_cmd) {
      report_config.output_format = apery::parse_format(report_format);
      if (!report_out.empty()) report_config.output_path = report_out;
      return run_suite_and_deliver(report_config);
    }
  } catch (const apery::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const apery::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return cli_main(argc, argv); }
