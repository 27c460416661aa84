#pragma once

// Exhaustive Yang-Baxter checks for the unfused and fused vertices, and the
// train identity for an R-vertex attached to two rows of a system.

#include <string>
#include <vector>

#include "bicolor/lattice.hpp"
#include "bicolor/weights.hpp"

namespace bicolor {

struct YbeFailure {
  std::string boundary;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

struct YbeReport {
  std::string mode;
  int colors = 0;
  int dolors = 0;
  int nmax = 0;
  /// Boundary tuples on which at least one side is nonzero.
  long long total_boundaries = 0;
  std::vector<YbeFailure> failures;

  bool passed() const { return failures.empty(); }
};

struct YbeOptions {
  int jobs = 1;
  bool fail_fast = false;
  /// Replacement weight tables; empty means the built-in ones.
  UnfusedWeightFn unfused;
  FusedRWeightFn fused_r;
  UnfusedRWeightFn unfused_r;
};

/// Unfused equation for every boson pair (c,d)_k, every top count n <= nmax and
/// every horizontal boundary. The right-hand R carries (c,d)_{k+1}.
YbeReport verify_unfused_ybe(int s, int r, int nmax, const YbeOptions& opts = {});

/// Fused equation for every top content with per-boson counts <= nmax.
YbeReport verify_fused_ybe(int s, int r, int nmax, const YbeOptions& opts = {});

/// Quadruples (with s, r <= the given bounds) where the fused R-table and the
/// unfused table at (c1, d_r) disagree; empty when they coincide.
std::vector<RConfig> fused_unfused_r_mismatches(int s, int r);

struct TrainReport {
  bool passed = false;
  LaurentPoly left;   // R attached on the dolor side
  LaurentPoly right;  // R attached on the color side
};

/// Sum over the R-vertex on the left boundary of rows i, i+1 equals the sum
/// over the R-vertex on the right boundary, with every Z enumerated.
TrainReport verify_train(const SystemSpec& spec, int i);

}  // namespace bicolor
