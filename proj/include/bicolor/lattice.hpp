#pragma once

// Systems of the fused model on an r x N grid: boundary data, state
// enumeration, state weights, partition functions and renderings.

#include <string>
#include <vector>

#include "bicolor/perm.hpp"
#include "bicolor/ring.hpp"
#include "bicolor/weights.hpp"

namespace bicolor {

/// Boundary data of a system with r colors, r dolors and r rows.
struct SystemSpec {
  int r = 1;
  int N = 1;
  std::vector<int> lambda{0};
  Perm w1, w2, w3, w4;

  /// Throws InvariantError / DimensionError when the data is inconsistent.
  void validate() const;

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

/// Boundary of an arbitrary grid: rows x N, `colors` colors and `dolors`
/// dolors. Columns are labelled N-1 .. 0 from left to right; `top[j]` is the
/// content entering column j from above.
struct Boundary {
  int rows = 1;
  int N = 1;
  int colors = 1;
  int dolors = 1;
  std::vector<Spin> right;  // per row, top to bottom
  std::vector<Spin> left;
  std::vector<EdgeContent> top;

  void validate() const;
};

/// Layer-0 contents: boson (c_{w3^{-1}(i)}, d_{w4^{-1} w0(i)}) in column lambda_i.
std::vector<EdgeContent> top_boundary(const SystemSpec& spec);
Boundary system_boundary(const SystemSpec& spec);

/// A full assignment of spins. vcontent[k][j] is the content of the vertical
/// edge in column j above row k+1 (layer 0 is the top boundary, layer rows the
/// bottom). hspin[i-1][j] is the spin on the horizontal edge of row i to the
/// right of column j, so hspin[i-1][0] is the right boundary and
/// hspin[i-1][N] the left boundary.
struct State {
  std::vector<std::vector<EdgeContent>> vcontent;
  std::vector<std::vector<Spin>> hspin;

  friend auto operator<=>(const State&, const State&) = default;
  friend bool operator==(const State&, const State&) = default;
};

/// Fused vertex at (row i, column j) of a state.
FusedConfig vertex_at(const State& st, int i, int j);

/// Throws AdmissibilityError unless st is an admissible state of b.
void check_state(const State& st, const Boundary& b);

/// All admissible states, in depth-first order (rows top to bottom, columns
/// right to left, completions by bottom content).
std::vector<State> enumerate_states(const Boundary& b, int jobs = 1);
std::vector<State> enumerate_states(const SystemSpec& spec, int jobs = 1);

/// Number of states, computed by a row-transfer recursion (no listing).
Coeff count_states(const Boundary& b);
Coeff count_states(const SystemSpec& spec);

/// Product of the fused vertex weights; ring has b.rows z-variables.
LaurentPoly state_weight(const State& st, const Boundary& b);
LaurentPoly state_weight(const State& st, const SystemSpec& spec);

/// Partition function by a memoized row-transfer recursion on layer contents.
LaurentPoly partition_function(const Boundary& b);
LaurentPoly partition_function(const SystemSpec& spec);

/// Sum of state_weight over enumerate_states.
LaurentPoly partition_function_by_enumeration(const Boundary& b);

/// All states of b with the given vertical contents (horizontal spins free).
std::vector<State> complete_horizontal(const Boundary& b,
                                       const std::vector<std::vector<EdgeContent>>& vcontent);

/// True when some vertex of st contains a monochrome merge (a color from the
/// left joining a dolor from the right).
bool has_merge_vertex(const State& st, const Boundary& b);

std::string render_text(const State& st, const Boundary& b);
std::string render_svg(const State& st, const Boundary& b);

}  // namespace bicolor
