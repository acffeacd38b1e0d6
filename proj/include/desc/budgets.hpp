#pragma once

namespace desc {

/// Search and size budgets. Enumeration operations fail loudly with
/// SearchBudgetExceeded / OrderTooLarge instead of sampling or truncating.
struct Budgets {
  /// symmetric_group degree cap (packed one-line keys impose a hard cap of 16).
  int symmetric_degree_cap = 8;
  /// all_subgroups refuses groups larger than this.
  int subgroup_enum_order_cap = 384;
  /// Brute-force map searches enumerate at most this many candidate maps.
  long long map_search_cap = 10'000'000;
  /// Complement search aborts after visiting this many subgroups.
  long long complement_search_cap = 1'000'000;
  /// Exhaustive pair verifications (cocycle preconditions) are skipped when
  /// the pair count exceeds this; enumeration-facing checks still run.
  long long pair_check_cap = 100'000'000;
  /// Worker threads for embarrassingly parallel map searches.
  int threads = 1;
};

}  // namespace desc
