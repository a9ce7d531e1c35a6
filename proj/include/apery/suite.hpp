#ifndef APERY_SUITE_HPP
#define APERY_SUITE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apery/claims.hpp"

namespace apery {

enum class OutputFormat { json, csv, text };

std::string format_name(OutputFormat f);
/// Throws UsageError for anything but "json", "csv", "text".
OutputFormat parse_format(const std::string& name);

struct SuiteConfig {
  /// Claim ids to run; empty means the whole registry minus the selftest
  /// fixtures. Unknown ids are a usage error.
  std::vector<std::string> claims;
  std::int64_t prime_min = 3;
  std::int64_t prime_max = 31;
  /// (p, r) instances for gen-p3r.
  std::vector<std::pair<std::int64_t, std::int64_t>> generalization_pairs = {
      {3, 2}, {3, 3}, {5, 2}, {7, 2}};
  std::int64_t eta_order = 30;
  /// Worker threads; affects wall time only, never report content.
  int workers = 1;
  OutputFormat output_format = OutputFormat::text;
  std::optional<std::string> output_path;
};

struct SuiteSummary {
  std::int64_t pass = 0;
  std::int64_t fail = 0;     // failed proven claims
  std::int64_t finding = 0;  // failed conjectural claims

  friend bool operator==(const SuiteSummary& a, const SuiteSummary& b) {
    return a.pass == b.pass && a.fail == b.fail && a.finding == b.finding;
  }
};

struct VerificationReport {
  std::string tool_version;
  SuiteConfig config;  // claims resolved to the effective list
  std::vector<ClaimResult> results;
  SuiteSummary summary;
  double elapsed_seconds = 0.0;

  /// Content equality: the serialized fields only. Worker count, output
  /// routing and elapsed time are delivery details, not content.
  friend bool operator==(const VerificationReport& a, const VerificationReport& b);
};

/// Deterministic order on results: claim_id, then parameters with "p" first
/// and the rest alphabetical, values ascending.
bool result_order(const ClaimResult& a, const ClaimResult& b);

/// Validates the config (UsageError on nonsense), expands every selected
/// claim over its parameter ranges, evaluates each instance exactly once
/// (possibly concurrently), and returns the sorted report. Byte-identical
/// output for equal configs regardless of worker count.
VerificationReport run_suite(const SuiteConfig& config);

/// 0 all pass; 1 any proven claim failed; 2 findings only.
int exit_code_for(const VerificationReport& report);

std::string to_json(const VerificationReport& report);
/// Inverse of to_json for the serialized fields; throws UsageError on
/// malformed input.
VerificationReport from_json(const std::string& text);
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);
std::string render(const VerificationReport& report, OutputFormat format);

}  // namespace apery

#endif
