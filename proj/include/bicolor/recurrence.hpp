#pragma once

// The four-term recurrence on partition functions, a solver that uses it to
// compute Z from the no-state and monostatic cases, and the divided-difference
// form of the recurrence.

#include <cstddef>

#include "bicolor/classify.hpp"

namespace bicolor {

/// One side of the recurrence: a*Z_first + b*Z_second.
struct RecurrenceSide {
  bool descent = false;  // s_i w < w for the permutation the side branches on
  LaurentPoly a, first;
  LaurentPoly b, second;

  LaurentPoly value() const { return a * first + b * second; }
};

struct RecurrenceInstance {
  int i = 1;
  RecurrenceSide lhs;  // branches on w2; Z(w1, w2; z), Z(w1, s_i w2; z)
  RecurrenceSide rhs;  // branches on w1; Z(w1, w2; s_i z), Z(s_i w1, w2; s_i z)
};

/// Builds both sides with every Z from lattice::partition_function.
RecurrenceInstance recurrence_instance(const SystemSpec& spec, int i);

/// lhs - rhs; zero when the recurrence holds.
LaurentPoly recurrence_residual(const SystemSpec& spec, int i);

enum class DescentPolicy { Smallest, Largest };

struct SolveStats {
  std::size_t divisions = 0;
  std::size_t zero_cases = 0;
  std::size_t monostatic_cases = 0;
  std::size_t memo_hits = 0;
  int max_depth = 0;
};

/// Z(spec) from the recurrence alone: 0 when w_d is not below w_c, the closed
/// form when w_d = w_c, otherwise recursion on a right descent of w_c followed
/// by an exact division. Never enumerates states.
LaurentPoly solve_partition(const SystemSpec& spec, DescentPolicy policy = DescentPolicy::Smallest,
                            SolveStats* stats = nullptr);

/// (1 - t) D^(k)_i Z(w1, w2; z) equals the combination of the corollary, with
/// k fixed by the descents of w1 and w2 at i.
struct DemazureCheck {
  int k = 1;
  LaurentPoly lhs, rhs;
  bool passed() const { return lhs == rhs; }
};

DemazureCheck verify_demazure(const SystemSpec& spec, int i);

}  // namespace bicolor
