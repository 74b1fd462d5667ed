#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ccsim/rational.hpp"

namespace ccsim {
namespace verifier {

enum class Profile { Quick, Full };

Profile parse_profile(const std::string& name);

struct CheckReport {
  std::string name;
  std::string grid;
  long long instances = 0;
  std::vector<std::string> failures;
  double seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

// Collects instance counts and failure witnesses while a check runs.
class CheckContext {
 public:
  void set_grid(std::string description) { grid_ = std::move(description); }
  void count() { ++instances_; }
  void fail(std::string witness) { failures_.push_back(std::move(witness)); }

  /// Counts one instance and records a witness unless `ok`.
  void expect(bool ok, const std::function<std::string()>& witness) {
    count();
    if (!ok) fail(witness());
  }

  const std::string& grid() const { return grid_; }
  long long instances() const { return instances_; }
  std::vector<std::string>& failures() { return failures_; }

 private:
  std::string grid_;
  long long instances_ = 0;
  std::vector<std::string> failures_;
};

struct CheckDef {
  std::string name;
  std::vector<std::string> claims;  // claim ids this check is responsible for
  std::function<void(Profile, CheckContext&)> run;
};

/// All registered checks, in fixed report order.
const std::vector<CheckDef>& check_registry();

/// Claim id -> check name; every verified claim appears exactly once.
const std::vector<std::pair<std::string, std::string>>& claim_coverage();

/// Runs one registered check; throws on unknown names.
CheckReport run_check(const std::string& name, Profile profile);

/// Runs every registered check in registry order.
std::vector<CheckReport> run_all(Profile profile);

/// `CHECK <name> PASS|FAIL instances=<n> failures=<m>` plus one indented
/// witness line per failure. Excludes timing so ledgers are bit-stable.
std::string format_report(const CheckReport& report);

/// The load-match check body with injectable formulas, so tests can verify
/// that a perturbed formula is actually caught.
void run_load_match_with(
    Profile profile, CheckContext& ctx,
    const std::function<Rat(int K, int N, const Rat& M, int l, int I)>& fixed_formula,
    const std::function<Rat(int K, int I, const std::vector<Rat>& beta)>& weighted_formula);

}  // namespace verifier
}  // namespace ccsim
