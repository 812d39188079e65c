#ifndef PASYM_HARNESS_HPP
#define PASYM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pasym/partition_table.hpp"
#include "pasym/precision.hpp"

namespace pasym {

enum class Suite {
  main_theorem,
  shift_theorem,
  inverse_theorem,
  lehmer,
  omega_envelopes,
  g_envelopes,
  sj_envelopes,
  appendix_identities,
  coefficient_oracle,
  log_concavity,
};

const char* suite_name(Suite s);
std::optional<Suite> suite_from_name(std::string_view name);
std::vector<Suite> all_suites();

/// Sweep parameters; 0 means "suite default" (documented per suite in the
/// README).  Sampling uses std::mt19937_64 seeded with
/// seed + 1000003*k + 1009*N per (k, N) cell; each sample is
/// cutoff + 1 + (engine() % span).  The boundary n = cutoff is always
/// included ahead of the samples.
struct SuiteParams {
  unsigned k_max = 0;
  unsigned N_max = 0;
  unsigned samples = 0;
  unsigned t_max = 0;
  std::uint64_t seed = 271828;
  long span = 10000;
  long lehmer_span = 2000;
};

/// Fully-resolved parameters (defaults applied for a given suite).
SuiteParams resolve_params(Suite s, SuiteParams p);

/// One verified case: ordered parameter list (uniform keys within a suite),
/// the two compared sides, the ambiguity margin at the deciding precision,
/// and the certified status.
struct CaseRecord {
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  std::string margin;
  CheckStatus status;
  bool has_ratio = false;
  double ratio = 0.0;  // lhs/rhs for the tightness profile
};

struct VerificationReport {
  std::string suite;
  unsigned bits = 0;
  std::vector<CaseRecord> cases;
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  std::size_t ambiguous_count = 0;
  std::string max_tightness;  // min over passing cases of (rhs - lhs)/rhs

  bool all_passed() const { return fail_count == 0 && ambiguous_count == 0; }
};

/// Oracle size needed by a suite; 0 when no table is used.
std::size_t required_table_size(Suite s, const SuiteParams& params,
                                const PrecisionContext& ctx);

/// Runs one suite.  `table` may be null for suites that need no oracle;
/// throws SizingError when a table is required but too small.
VerificationReport run_suite(Suite s, const SuiteParams& params,
                             const PartitionTable* table, const PrecisionContext& ctx);

nlohmann::ordered_json report_to_json(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

struct TightnessRow {
  std::vector<std::pair<std::string, std::string>> params;
  std::string ratio;  // actual_error / bound
  bool flagged;       // ratio > 1 (implies a suite failure)
};

struct TightnessTable {
  std::string suite;
  std::vector<TightnessRow> rows;
};

TightnessTable tightness_profile(Suite s, const SuiteParams& params,
                                 const PartitionTable* table, const PrecisionContext& ctx);

nlohmann::ordered_json tightness_to_json(const TightnessTable& table);
std::string tightness_to_csv(const TightnessTable& table);
std::string tightness_to_text(const TightnessTable& table);

}  // namespace pasym

#endif  // PASYM_HARNESS_HPP
