#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mstar/corpus.hpp"
#include "mstar/search.hpp"

namespace mstar {

struct SuiteOptions {
  std::size_t max_objects = 4;
  std::size_t max_morphisms = 16;
  std::size_t word_length = 6;
  std::uint64_t bound = SearchBudget::kDefaultLimit;
  std::uint64_t seed = 0;
};

enum class CheckStatus { pass, fail, skipped, bound_exceeded };
std::string_view to_string(CheckStatus s);

/// One verified statement. Names are "<kind>:<subject>" so reports can be
/// filtered by kind.
struct Check {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::pass;
  nlohmann::json witness;
};

struct SuiteReport {
  std::vector<Check> checks;

  std::size_t count(CheckStatus s) const;
  /// Checks of one suite whose name starts with `kind + ":"`.
  std::vector<const Check*> of_kind(const std::string& suite, const std::string& kind) const;
  /// 1 on any failure, else 3 when a bound was hit, else 0.
  int exit_code() const;
  nlohmann::json to_json(const SuiteOptions& options) const;
  /// Fixed-width table, one row per check, then the totals.
  std::string table() const;
  std::string to_dot() const;
};

/// representability, equivalence, exponential-law, factorization, model,
/// fixed-points, orbits, controlled, pi.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Errors: InvalidArgument for an
/// unknown name. Per-check errors are recorded in the report instead of thrown.
SuiteReport run_suite(const std::string& name, const Corpus& corpus, const SuiteOptions& options);

/// Structural validation of a report document (statuses, summary totals).
Verdict validate_report(const nlohmann::json& j);

}  // namespace mstar
