#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ueq/generators.hpp"
#include "ueq/serialize.hpp"

namespace ueq {

enum class TrialOutcome { Pass, Fail, Vacuous };

struct CheckResult {
  std::string id;
  int passes = 0;
  int failures = 0;
  int vacuous = 0;
  std::optional<Json> counterexample;  // first failing instance, replayable

  int trials() const { return passes + failures + vacuous; }
  bool fully_vacuous() const { return trials() > 0 && vacuous == trials(); }
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int trials = 0;
  Caps caps;
  std::vector<CheckResult> results;
  double wall_seconds = 0.0;

  /// No failures and no check with every trial vacuous.
  bool ok() const;
};

/// Registered check ids, in report order.
std::vector<std::string> all_check_ids();

/// One-line description of a check id; throws UnknownCheckId.
std::string check_title(const std::string& id);

/// Runs one trial of one check. Trial index i uses the sub-seed
/// derive(seed, id, i), so outcomes are independent of execution order.
TrialOutcome run_single_trial(const std::string& id, std::uint64_t seed, std::uint64_t index,
                              const Caps& caps, Json* counterexample);

/// Runs the listed checks for the given trial count; deterministic in
/// (ids, seed, trials, caps).
VerificationReport run_checks(const std::vector<std::string>& ids, std::uint64_t seed, int trials,
                              const Caps& caps);

/// Machine-readable report; deliberately excludes wall time so identical
/// inputs give byte-identical output.
Json report_to_json(const VerificationReport& report);

/// Human-readable report, including wall time.
std::string report_to_text(const VerificationReport& report);

}  // namespace ueq
