#pragma once

// Two-colored Gelfand-Tsetlin patterns: the axiom checker, the conversions to
// and from lattice states, and an independent pattern generator.

#include <string>
#include <vector>

#include "bicolor/lattice.hpp"

namespace bicolor {

struct GTEntry {
  int value = 0;
  int color = 1;
  int dolor = 1;

  friend auto operator<=>(const GTEntry&, const GTEntry&) = default;
  friend bool operator==(const GTEntry&, const GTEntry&) = default;
};

/// rows[0] is the top row lambda^(r) with r entries; rows[k] has r - k entries.
struct TwoColoredGT {
  std::vector<std::vector<GTEntry>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  /// lambda^(k), for k = r down to 1.
  const std::vector<GTEntry>& row(int k) const { return rows[rows.size() - static_cast<std::size_t>(k)]; }
  /// Values only, top row first.
  std::vector<std::vector<int>> values() const;

  friend auto operator<=>(const TwoColoredGT&, const TwoColoredGT&) = default;
  friend bool operator==(const TwoColoredGT&, const TwoColoredGT&) = default;
};

struct GTViolation {
  int axiom = 0;  // 0 is the plain Gelfand-Tsetlin condition
  std::string where;
};

/// Every violated axiom; empty iff g is a valid pattern with colors 1..s and
/// dolors 1..r. Throws InvariantError when g is not triangular.
std::vector<GTViolation> check_axioms(const TwoColoredGT& g, int s, int r);

/// Row r-i+1 lists the bosons above lattice row i by decreasing column, ties by
/// increasing monochrome rank. Throws AdmissibilityError for an inadmissible state.
TwoColoredGT state_to_pattern(const State& st, const SystemSpec& spec);

/// The unique state with the vertical contents of g. Throws InvalidPatternError
/// when g disagrees with the top boundary or has zero or several completions.
State pattern_to_state(const TwoColoredGT& g, const SystemSpec& spec);

/// All valid patterns whose top row is the top boundary of spec and whose
/// exiting colors and dolors match its right and left boundaries. Built by
/// row-by-row generation with axiom pruning, without the lattice engine.
std::vector<TwoColoredGT> enumerate_patterns(const SystemSpec& spec);

}  // namespace bicolor
