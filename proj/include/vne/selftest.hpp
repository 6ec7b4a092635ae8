#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vne {

struct SuiteOptions {
  // Random-sweep sizes (the full sizes back the acceptance run).
  int star_vn_count = 500;
  int star_pn_count = 500;
  int line_tree_count = 500;
  int oversub_count = 300;
  int matching_samples = 250;
  // Enumeration ceilings for the round-trip sweeps.
  int ham_max_n = 6;
  std::int64_t item_sum_limit = 8;
  std::uint64_t seed = 20250808;
  std::string fixtures_dir = "fixtures";
};

SuiteOptions small_suite_options();

struct SuiteResult {
  std::string name;
  int checked = 0;
  int failed = 0;
  int skipped = 0;                      // e.g. artifacts beyond oracle budget
  std::vector<std::string> failures;    // first few messages
  bool ok() const { return failed == 0; }
};

// Every verification suite, in a fixed order:
//   star-vn / star-pn / line-tree / oversub-tree oracle equivalence,
//   round trips per reduction (+ the zero-cost transform),
//   figure fixtures, dispatch matrix, hamiltonian enumeration.
std::vector<SuiteResult> run_suites(const SuiteOptions& options, std::ostream* progress);

}  // namespace vne
