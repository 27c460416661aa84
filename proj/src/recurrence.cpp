#include "bicolor/recurrence.hpp"

#include <map>
#include <utility>

namespace bicolor {

namespace {

void check_index(const SystemSpec& spec, int i) {
  spec.validate();
  if (i < 1 || i >= spec.r) {
    throw IndexError("reflection index " + std::to_string(i) + " outside 1.." + std::to_string(spec.r - 1));
  }
}

bool left_descent(const Perm& w, int i) { return (Perm::simple(i, w.degree()) * w).length() < w.length(); }

SystemSpec with_perms(const SystemSpec& spec, const Perm& w1, const Perm& w2) {
  SystemSpec s = spec;
  s.w1 = w1;
  s.w2 = w2;
  return s;
}

struct Coefficients {
  LaurentPoly one_minus_t_zi, one_minus_t_zj, diff, t_diff;
};

Coefficients coefficients(int nz, int i) {
  const LaurentPoly one = LaurentPoly::one(nz);
  const LaurentPoly t = LaurentPoly::var_t(nz);
  const LaurentPoly zi = LaurentPoly::var_z(nz, i);
  const LaurentPoly zj = LaurentPoly::var_z(nz, i + 1);
  const LaurentPoly diff = zi - zj;
  return {(one - t) * zi, (one - t) * zj, diff, t * diff};
}

// Side of the recurrence for a permutation w with Z(w) and Z(s_i w) given.
RecurrenceSide side(const Coefficients& c, bool descent, LaurentPoly first, LaurentPoly second) {
  if (descent) return {true, c.one_minus_t_zi, std::move(first), c.diff, std::move(second)};
  return {false, c.one_minus_t_zj, std::move(first), c.t_diff, std::move(second)};
}

class Solver {
 public:
  Solver(const SystemSpec& spec, DescentPolicy policy, SolveStats* stats)
      : spec_(spec), policy_(policy), stats_(stats), coeffs_() {
    coeffs_.reserve(static_cast<std::size_t>(spec.r));
    for (int i = 1; i < spec.r; ++i) coeffs_.push_back(coefficients(spec.r, i));
  }

  LaurentPoly solve(const Perm& w1, const Perm& w2, int depth) {
    if (depth > kMaxDepth) throw InvariantError("recursion depth guard exceeded");
    if (stats_ && depth > stats_->max_depth) stats_->max_depth = depth;
    const auto key = std::make_pair(w1, w2);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (stats_) ++stats_->memo_hits;
      return it->second;
    }
    const SystemSpec s = with_perms(spec_, w1, w2);
    const auto [wc, wd] = boundary_perms(s);
    LaurentPoly z(spec_.r);
    if (wd == wc) {
      if (stats_) ++stats_->monostatic_cases;
      z = monostatic_partition(s);
    } else if (!bruhat_leq(wd, wc)) {
      if (stats_) ++stats_->zero_cases;
    } else {
      z = reduce(w1, w2, wc, depth);
    }
    memo_.emplace(key, z);
    return z;
  }

 private:
  static constexpr int kMaxDepth = 256;

  int pick_descent(const Perm& wc) const {
    int chosen = 0;
    for (int i = 1; i < spec_.r; ++i) {
      if ((wc * Perm::simple(i, spec_.r)).length() < wc.length()) {
        chosen = i;
        if (policy_ == DescentPolicy::Smallest) break;
      }
    }
    if (chosen == 0) throw InvariantError("w_c has no right descent although w_d < w_c");
    return chosen;
  }

  // Recurrence at the helper system (s_i w1, w2), whose w_c is w_c s_i; the
  // unknown Z(w1, w2; s_i z) is its fourth term.
  LaurentPoly reduce(const Perm& w1, const Perm& w2, const Perm& wc, int depth) {
    const int i = pick_descent(wc);
    const Coefficients& c = coeffs_[static_cast<std::size_t>(i - 1)];
    const Perm si = Perm::simple(i, spec_.r);
    const Perm h1 = si * w1;
    const Perm si_w2 = si * w2;

    const RecurrenceSide lhs = side(c, left_descent(w2, i), solve(h1, w2, depth + 1), solve(h1, si_w2, depth + 1));
    const bool rhs_descent = left_descent(h1, i);
    const LaurentPoly known = swap_z(solve(h1, w2, depth + 1), i);
    const LaurentPoly& a = rhs_descent ? c.one_minus_t_zi : c.one_minus_t_zj;
    const LaurentPoly& b = rhs_descent ? c.diff : c.t_diff;
    if (stats_) ++stats_->divisions;
    const LaurentPoly swapped = exact_div(lhs.value() - a * known, b);
    return swap_z(swapped, i);
  }

  const SystemSpec& spec_;
  DescentPolicy policy_;
  SolveStats* stats_;
  std::vector<Coefficients> coeffs_;
  std::map<std::pair<Perm, Perm>, LaurentPoly> memo_;
};

}  // namespace

RecurrenceInstance recurrence_instance(const SystemSpec& spec, int i) {
  check_index(spec, i);
  const Coefficients c = coefficients(spec.r, i);
  const Perm si = Perm::simple(i, spec.r);
  RecurrenceInstance inst;
  inst.i = i;
  inst.lhs = side(c, left_descent(spec.w2, i), partition_function(spec),
                  partition_function(with_perms(spec, spec.w1, si * spec.w2)));
  inst.rhs = side(c, left_descent(spec.w1, i), swap_z(partition_function(spec), i),
                  swap_z(partition_function(with_perms(spec, si * spec.w1, spec.w2)), i));
  return inst;
}

LaurentPoly recurrence_residual(const SystemSpec& spec, int i) {
  const RecurrenceInstance inst = recurrence_instance(spec, i);
  return inst.lhs.value() - inst.rhs.value();
}

LaurentPoly solve_partition(const SystemSpec& spec, DescentPolicy policy, SolveStats* stats) {
  spec.validate();
  Solver solver(spec, policy, stats);
  return solver.solve(spec.w1, spec.w2, 0);
}

DemazureCheck verify_demazure(const SystemSpec& spec, int i) {
  check_index(spec, i);
  const int nz = spec.r;
  const Perm si = Perm::simple(i, spec.r);
  const bool d1 = left_descent(spec.w1, i);
  const bool d2 = left_descent(spec.w2, i);
  DemazureCheck out;
  out.k = d2 ? (d1 ? 1 : 2) : (d1 ? 3 : 4);

  const LaurentPoly one = LaurentPoly::one(nz);
  const LaurentPoly t = LaurentPoly::var_t(nz);
  const LaurentPoly z = partition_function(spec);
  const LaurentPoly moved_w1 = swap_z(partition_function(with_perms(spec, si * spec.w1, spec.w2)), i);
  const LaurentPoly moved_w2 = partition_function(with_perms(spec, spec.w1, si * spec.w2));

  out.lhs = (one - t) * divided_diff(out.k, i, z);
  const LaurentPoly& a = d1 ? one : t;
  const LaurentPoly& b = d2 ? one : t;
  out.rhs = a * moved_w1 - b * moved_w2;
  return out;
}

}  // namespace bicolor
