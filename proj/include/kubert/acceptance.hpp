#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kubert/serialize.hpp"

namespace kubert {

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  int primes = kDefaultPrimeBudget;
  int tuples_per_level = 50;
  bool as_printed = false;  // row 1 of l=5 uses the printed c = (z^2-3)/4
};

/// One check inside a criterion. A failing check may carry the id of a known
/// blocker (see known_blockers()); untagged failures are unexplained.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  std::optional<std::string> blocker;
};

struct CriterionResult {
  std::string id;  // "AC-1" .. "AC-12"
  std::string title;
  std::vector<Check> checks;
  double seconds = 0;

  bool pass() const;
  /// Failing, and every failing check is tagged with a known blocker.
  bool fails_only_on_blockers() const;
  std::vector<std::string> blockers() const;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  double seconds = 0;

  bool all_pass() const;
  bool only_known_failures() const;
};

/// Blocker id -> one-line explanation.
const std::map<std::string, std::string>& known_blockers();

AcceptanceReport run_acceptance(const AcceptanceOptions& opts, std::ostream* progress = nullptr);

/// One line per criterion: "AC-n PASS|FAIL  title: summary [blockers]".
void print_report(std::ostream& out, const AcceptanceReport& rep, bool verbose = false);
json report_to_json(const AcceptanceReport& rep);

}  // namespace kubert
