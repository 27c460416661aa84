#pragma once

// Spins, boson types, vertical edge contents and the Boltzmann weights of
// unfused vertices, fused vertices and R-vertices.

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bicolor/ring.hpp"

namespace bicolor {

/// A horizontal-edge occupant: exactly one color or one dolor.
struct Spin {
  enum class Kind : unsigned char { Color, Dolor };

  Kind kind = Kind::Color;
  int index = 1;

  static Spin color(int i) { return {Kind::Color, i}; }
  static Spin dolor(int j) { return {Kind::Dolor, j}; }

  bool is_color() const { return kind == Kind::Color; }
  bool is_dolor() const { return kind == Kind::Dolor; }

  /// "c3" or "d2".
  std::string to_string() const;
  static Spin parse(std::string_view text);

  /// Colors before dolors, then by index. Only a storage order.
  friend auto operator<=>(const Spin&, const Spin&) = default;
  friend bool operator==(const Spin&, const Spin&) = default;
};

/// All spins with colors 1..s and dolors 1..r, in storage order.
std::vector<Spin> all_spins(int s, int r);

/// A (color, dolor) pair.
struct BosonType {
  int color = 1;
  int dolor = 1;

  friend bool operator==(const BosonType&, const BosonType&) = default;
};

/// Position of b in the monochrome order, 1-based: rank 1 is (c1, d_r),
/// colors increase inside a dolor block and dolor blocks decrease.
int boson_rank(BosonType b, int s, int r);
BosonType boson_from_rank(int rank, int s, int r);
/// Successor in the monochrome order, wrapping the maximum back to (c1, d_r).
BosonType boson_succ(BosonType b, int s, int r);
/// (c, d) < (c', d') in the monochrome order.
bool boson_less(BosonType a, BosonType b);

/// Multiset of bosons on a vertical edge, stored densely by rank.
class EdgeContent {
 public:
  EdgeContent() = default;
  EdgeContent(int s, int r);

  int colors() const { return s_; }
  int dolors() const { return r_; }

  int count(BosonType b) const;
  void set(BosonType b, int n);
  void add(BosonType b, int n = 1);
  /// Count by monochrome rank (1-based).
  int count_at_rank(int rank) const { return counts_[static_cast<std::size_t>(rank - 1)]; }
  void set_at_rank(int rank, int n) { counts_[static_cast<std::size_t>(rank - 1)] = n; }

  int total() const;
  bool empty() const { return total() == 0; }
  int color_total(int c) const;
  int dolor_total(int d) const;

  const std::vector<int>& counts() const { return counts_; }

  /// Nonzero entries as ("cI.dJ", count), in rank order.
  std::vector<std::pair<std::string, int>> entries() const;
  /// Compact text, e.g. "{c1.d2:1,c2.d1:3}"; "{}" when empty.
  std::string to_string() const;

  friend auto operator<=>(const EdgeContent&, const EdgeContent&) = default;
  friend bool operator==(const EdgeContent&, const EdgeContent&) = default;

 private:
  int s_ = 0;
  int r_ = 0;
  std::vector<int> counts_;
};

/// Every content with each boson count in 0..nmax, in lexicographic order of counts.
std::vector<EdgeContent> all_contents(int s, int r, int nmax);

/// One monochrome vertex. `top`/`bottom` count the vertex's own boson type;
/// `row` is the index of the spectral parameter z_row.
struct UnfusedConfig {
  BosonType boson;
  int row = 1;
  Spin left, right;
  int top = 0;
  int bottom = 0;
};

/// A fused vertex: the chain of all s*r monochrome vertices of one lattice site.
struct FusedConfig {
  int row = 1;
  Spin left, right;
  EdgeContent top, bottom;
};

/// Any weight table for monochrome vertices; used to inject altered tables.
using UnfusedWeightFn = std::function<LaurentPoly(const UnfusedConfig&, int num_z)>;

/// Monochrome vertex weight (0 when inadmissible).
LaurentPoly unfused_weight(const UnfusedConfig& cfg, int num_z);

struct FusedCompletion {
  Spin left;
  EdgeContent bottom;
  LaurentPoly weight;
};

/// All admissible fused vertices with the given top content and right spin,
/// sorted by bottom content. `unfused` overrides the monochrome table.
std::vector<FusedCompletion> fused_completions(const EdgeContent& top, Spin right, int row,
                                               int num_z, const UnfusedWeightFn& unfused = {});

/// Weight of the unique monochrome chain realizing cfg, or 0.
LaurentPoly fused_weight(const FusedConfig& cfg, int num_z, const UnfusedWeightFn& unfused = {});

/// The four horizontal corners of an R-vertex and its two spectral parameters.
struct RConfig {
  Spin nw, sw, ne, se;
  int zi = 1;
  int zj = 2;
};

/// Weight of the R-vertex of the fused model.
LaurentPoly fused_R_weight(const RConfig& cfg, int num_z);

/// Weight of the unfused R-vertex attached to boson (c, d).
LaurentPoly unfused_R_weight(const RConfig& cfg, BosonType cd, int num_z);

using FusedRWeightFn = std::function<LaurentPoly(const RConfig&, int num_z)>;
using UnfusedRWeightFn = std::function<LaurentPoly(const RConfig&, BosonType, int num_z)>;

/// Replaces z_1 by z_row in a polynomial from the one-variable ring.
LaurentPoly embed_row(const LaurentPoly& p, int row, int num_z);

}  // namespace bicolor
