#pragma once

// Exhaustive sweeps over boundary tuples (w1, w2, w3, w4) in S_r^4 for a fixed
// lambda. Each sweep checks one family of identities on every tuple and merges
// per-tuple results in tuple order, so reports do not depend on the job count.

#include <map>
#include <string>
#include <vector>

#include "bicolor/lattice.hpp"

namespace bicolor {

struct SweepReport {
  std::string kind;
  long long checked = 0;
  /// Named tallies (categories, clauses); every failing clause has its own key.
  std::map<std::string, long long> counts;
  long long failures = 0;
  /// The first few failures, in tuple order.
  std::vector<std::string> examples;

  bool passed() const { return failures == 0; }
};

/// Every tuple in S_r^4, in lexicographic order of (w1, w2, w3, w4) with each
/// factor in all_perms order.
std::vector<SystemSpec> all_systems(int r, int N, const std::vector<int>& lambda);

/// "w=((123),(),(12),(13)) lambda=(2,2,0) N=3"
std::string spec_label(const SystemSpec& spec);

/// NoStates => 0 states and Monostatic => 1 state always fail the sweep. With
/// `converse`, also 0 states => NoStates, 1 state => Monostatic and General =>
/// at least one state.
SweepReport sweep_trichotomy(const std::vector<SystemSpec>& systems, bool converse, int jobs = 1);

/// recurrence_residual = 0 and the Demazure identity at every i < r.
SweepReport sweep_recurrence(const std::vector<SystemSpec>& systems, int jobs = 1);

/// verify_train at every i < r.
SweepReport sweep_train(const std::vector<SystemSpec>& systems, int jobs = 1);

/// solve_partition = partition_function on every tuple with w_d <= w_c; a
/// failed exact division counts as a failure.
SweepReport sweep_solver(const std::vector<SystemSpec>& systems, int jobs = 1);

/// Every state maps to a pattern passing the axioms, and back to itself;
/// distinct states give distinct patterns.
SweepReport sweep_gt_round_trip(const std::vector<SystemSpec>& systems, int jobs = 1);

/// |enumerate_patterns| = number of states.
SweepReport sweep_gt_cardinality(const std::vector<SystemSpec>& systems, int jobs = 1);

}  // namespace bicolor
