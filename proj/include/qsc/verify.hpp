#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsc {

// Exhaustive checks of the library's structural properties up to a degree.
enum class Suite { Inverse, Descents, TripleAgreement, Symmetry, Positivity, Dominance };

std::string to_string(Suite s);  // "inverse", "descents", "triple-agreement", ...
Suite parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct VerifyCase {
  std::string label;
  bool passed = true;
  std::size_t checks = 0;
  std::string detail;  // first counterexample, empty when passed
};

struct VerifyReport {
  Suite suite = Suite::Inverse;
  int max_n = 0;
  std::vector<VerifyCase> cases;
  // Suite-specific tallies worth reporting (e.g. rapture outputs of infinity).
  std::vector<std::pair<std::string, std::size_t>> notes;

  bool passed() const;
  std::size_t total_checks() const;
  std::optional<VerifyCase> first_failure() const;
};

// Cases are emitted per composition (or per pair for positivity) in
// GrevlexLess order. Requires max_n >= 1.
VerifyReport run_suite(Suite s, int max_n);

}  // namespace qsc
