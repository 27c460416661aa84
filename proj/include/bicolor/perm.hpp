#pragma once

// Permutations of {1..r} in one-line notation.

#include <string>
#include <string_view>
#include <vector>

#include "bicolor/errors.hpp"

namespace bicolor {

class Perm {
 public:
  /// Identity of degree r.
  explicit Perm(int r = 1);
  /// Throws InvariantError if `one_line` is not a bijection of 1..n.
  explicit Perm(std::vector<int> one_line);

  static Perm identity(int r) { return Perm(r); }
  static Perm longest(int r);
  /// The simple transposition (i i+1), 1 <= i <= r-1.
  static Perm simple(int i, int r);

  int degree() const { return static_cast<int>(w_.size()); }
  /// w(k) for 1 <= k <= r.
  int operator()(int k) const { return w_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& one_line() const { return w_; }

  Perm inverse() const;
  /// Number of inversions.
  int length() const;
  bool is_identity() const;

  /// True when l(s_i w) < l(w), i.e. w^{-1}(i) > w^{-1}(i+1).
  bool left_descent(int i) const;
  /// True when l(w s_i) < l(w), i.e. w(i) > w(i+1).
  bool right_descent(int i) const;

  /// "[2,3,1]".
  std::string to_one_line_string() const;
  /// Product of disjoint nontrivial cycles, "()" for the identity.
  std::string to_cycle_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> w_;
};

/// (a b)(k) = a(b(k)).
Perm compose(const Perm& a, const Perm& b);
inline Perm operator*(const Perm& a, const Perm& b) { return compose(a, b); }

/// Bruhat order by the rank-matrix criterion.
bool bruhat_leq(const Perm& a, const Perm& b);

/// Parses cycle notation such as "(123)", "(12)(34)", "(1 2 3)", "(10,11)" or "()".
/// Each entry maps to its successor in the cycle.
Perm parse_cycles(std::string_view text, int r);

/// Accepts either one-line "[2,3,1]" or cycle notation.
Perm parse_perm(std::string_view text, int r);

/// All permutations of degree r in lexicographic order of one-line form.
std::vector<Perm> all_perms(int r);

}  // namespace bicolor
