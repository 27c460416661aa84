#pragma once

// Color merging: projections that forget dolors (and colors), the local and
// stepwise weight identities they satisfy on fused vertices, and the global
// identities between bicolored, one-dolor and one-color one-dolor systems.

#include <map>
#include <string>
#include <vector>

#include "bicolor/lattice.hpp"

namespace bicolor {

enum class MergeScope { Local, Step, GlobalColored, GlobalUncolored, Lift, Composition };

std::string to_string(MergeScope scope);

struct MergeReport {
  MergeScope scope = MergeScope::Local;
  long long checked = 0;
  std::vector<std::string> failures;
  /// Checks per case label (step scope: right spin and image of the left spin).
  std::map<std::string, long long> cases;

  bool passed() const { return failures.empty(); }
  /// Appends counts and failures of another report of the same scope.
  void absorb(const MergeReport& other);
};

/// p_h: every dolor becomes d1 of the one-dolor model, colors are fixed.
Spin project_spin(Spin x);
/// p_v: per color, the total over dolors, as a content with one dolor.
EdgeContent project_content(const EdgeContent& v);

/// p_i'': d_i becomes d_{i+1}; other spins are fixed.
Spin step_spin(Spin x, int i);
/// p_i'': n(c, d_{i+1}) += n(c, d_i) and n(c, d_i) = 0.
EdgeContent step_content(const EdgeContent& v, int i);

/// p': every dolor becomes d_r, the largest dolor of the same model.
Spin collapse_spin(Spin x, int r);
EdgeContent collapse_content(const EdgeContent& v);

/// Applies p_1'' first, then p_2'', ..., then p_{r-1}''.
Spin collapse_by_steps(Spin x, int r);
EdgeContent collapse_by_steps(const EdgeContent& v);

/// For every top content b (counts <= nmax) and right spin c: the one-dolor
/// weight of each (A, p_v(b), p_h(c), D) equals z^{1-r} times the sum of the
/// bicolored weights of (a, b, c, d) with p_h(a) = A and p_v(d) = D.
MergeReport verify_local_merge(int s, int r, int nmax, int jobs = 1);

/// Same check for p_i'' inside the r-dolor model, with no z factor.
MergeReport verify_step_merge(int s, int r, int i, int nmax, int jobs = 1);

/// Weight of the fiber of p_i'' over the vertex (image_left, image_top,
/// image_right, image_bottom) seen from the lift (top, right).
LaurentPoly step_fiber_weight(const EdgeContent& top, Spin right, Spin image_left, const EdgeContent& image_bottom,
                              int i);

/// One-dolor system: right c_{w1^{-1}(i)}, left d1, top (c_{w3^{-1}(i)}, d1) in column lambda_i.
Boundary colored_boundary(int r, int N, const std::vector<int>& lambda, const Perm& w1, const Perm& w3);
/// One-color one-dolor system: every boson is (c1, d1).
Boundary uncolored_boundary(int r, int N, const std::vector<int>& lambda);

/// (z_1 ... z_r)^{N(1-r)} Z, the scaled partition function.
LaurentPoly scaled_partition_function(const SystemSpec& spec);

/// Z(one-dolor system) = sum over w2 of the scaled bicolored Z.
MergeReport verify_global_colored(int r, int N, const std::vector<int>& lambda, const Perm& w1, const Perm& w3,
                                  const Perm& w4);
/// Z(one-color one-dolor system) = sum over w1, w2 of the scaled bicolored Z.
MergeReport verify_global_uncolored(int r, int N, const std::vector<int>& lambda, const Perm& w3, const Perm& w4);

/// Both global identities for every w1, w3, w4 in S_r.
MergeReport verify_global_colored_all(int r, int N, const std::vector<int>& lambda, int jobs = 1);
MergeReport verify_global_uncolored_all(int r, int N, const std::vector<int>& lambda, int jobs = 1);

/// Image of a bicolored state under p_h, p_v.
State project_state(const State& st);

/// All bicolored states with right and top boundary from spec (w2 ignored)
/// that project to s0, built row by row and right to left through the fibers
/// of each vertex.
std::vector<State> lift_state(const State& s0, const SystemSpec& spec);

/// For every state s0 of the one-dolor system: lift_state(s0) equals the
/// states of all bicolored systems (any w2) that project to s0, and the
/// scaled weights of the lifts sum to the weight of s0.
MergeReport verify_lifts(int r, int N, const std::vector<int>& lambda, const Perm& w1, const Perm& w3,
                         const Perm& w4);

/// p' = p_1'' then ... then p_{r-1}'' on all spins and on all contents with counts <= nmax.
MergeReport verify_collapse_factorization(int s, int r, int nmax);

}  // namespace bicolor
