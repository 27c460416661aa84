#pragma once

// Boundary permutations w_c, w_d, the no-state / one-state / many-state
// trichotomy, the dominance test and the closed-form monostatic partition
// function.

#include <string>
#include <utility>
#include <vector>

#include "bicolor/lattice.hpp"

namespace bicolor {

enum class Category { NoStates, Monostatic, General };
enum class BruhatRelation { Equal, Less, GreaterOrIncomparable };

std::string to_string(Category c);
std::string to_string(BruhatRelation r);

struct ClassificationResult {
  Perm wc;
  Perm wd;
  Category category = Category::General;
  /// Relation of wd to wc.
  BruhatRelation relation = BruhatRelation::Equal;
};

/// (w_c, w_d) = (w3 w1^-1, w0 w4 w2^-1).
std::pair<Perm, Perm> boundary_perms(const SystemSpec& spec);

ClassificationResult classify_system(const SystemSpec& spec);

/// lambda_i - lambda_{i+1} >= gap for every i < r.
bool sufficiently_dominant(const std::vector<int>& lambda, int gap);

/// How the t-exponent counts crossings in row i, with j = w_c(i) and top
/// position k still occupied (w_c^-1(k) > i).
///   Statement: k > j with w3(k) > w1(i); k < j with w4^-1 w0(k) < w2^-1(i).
///   Proof:     k > j with w3^-1(k) > w1^-1(i); dolor part as Statement.
///   Crossing:  colors as Proof, dolors with w4^-1 w0(k) > w2^-1(i), and
///              "right of j" meaning a smaller column, or the same column and
///              a larger boson rank.
enum class TExponentRule { Statement, Proof, Crossing };

/// The only rule that agrees with enumeration on every monostatic system of
/// S_3^4 (distinct and repeated parts alike).
inline constexpr TExponentRule kMonostaticRule = TExponentRule::Crossing;

/// s_c + s_d summed over the rows.
int monostatic_t_exponent(const SystemSpec& spec, TExponentRule rule = kMonostaticRule);

/// t^{s_c + s_d} prod_i z_i^{N(r-1) + lambda_{w_c(i)}}. Throws
/// ClassificationError unless w_c = w_d.
LaurentPoly monostatic_partition(const SystemSpec& spec, TExponentRule rule = kMonostaticRule);

}  // namespace bicolor
