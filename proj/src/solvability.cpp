#include "bicolor/solvability.hpp"

#include <atomic>
#include <map>
#include <tuple>

#include "bicolor/parallel.hpp"

namespace bicolor {

namespace {

constexpr int kRingZ = 2;  // z = z_1 on the top row of the left side, w = z_2

template <typename C>
struct Completion {
  Spin left;
  C bottom;
  LaurentPoly weight;
};

std::string describe(const EdgeContent& c) { return c.to_string(); }
std::string describe(int n) { return std::to_string(n); }

struct TopResult {
  long long nontrivial = 0;
  std::vector<YbeFailure> failures;
};

// Both sides of the equation for one top content gamma. On the left the
// R-vertex (nw=beta, sw=alpha, ne=X, se=Y) feeds the upper vertex (spectral
// parameter z, left X, right delta) and the lower vertex (parameter w, left Y,
// right rho). On the right the upper vertex has parameter w (left beta, right
// P), the lower one z (left alpha, right Q), and R is (nw=P, sw=Q, ne=delta,
// se=rho).
template <typename C, typename CompFn, typename LeftR, typename RightR>
TopResult check_top(const C& gamma, const std::vector<Spin>& spins, CompFn&& comp, LeftR&& left_r,
                    RightR&& right_r, const std::string& prefix, bool fail_fast) {
  using Key = std::tuple<Spin, Spin, Spin, Spin, C>;  // alpha, beta, delta, rho, theta
  std::map<Key, LaurentPoly> lhs, rhs;
  auto add = [](std::map<Key, LaurentPoly>& m, Key k, const LaurentPoly& v) {
    auto it = m.find(k);
    if (it == m.end()) {
      m.emplace(std::move(k), v);
    } else {
      it->second += v;
    }
  };

  for (Spin delta : spins) {
    for (const auto& up : comp(gamma, delta, 1)) {
      for (Spin rho : spins) {
        for (const auto& low : comp(up.bottom, rho, 2)) {
          const LaurentPoly vw = up.weight * low.weight;
          for (Spin alpha : spins) {
            for (Spin beta : spins) {
              LaurentPoly R = left_r(RConfig{beta, alpha, up.left, low.left, 1, 2});
              if (R.is_zero()) continue;
              add(lhs, Key{alpha, beta, delta, rho, low.bottom}, R * vw);
            }
          }
        }
      }
    }
  }
  for (Spin P : spins) {
    for (const auto& up : comp(gamma, P, 2)) {
      for (Spin Q : spins) {
        for (const auto& low : comp(up.bottom, Q, 1)) {
          const LaurentPoly vw = up.weight * low.weight;
          for (Spin delta : spins) {
            for (Spin rho : spins) {
              LaurentPoly R = right_r(RConfig{P, Q, delta, rho, 1, 2});
              if (R.is_zero()) continue;
              add(rhs, Key{low.left, up.left, delta, rho, low.bottom}, R * vw);
            }
          }
        }
      }
    }
  }

  TopResult res;
  auto report = [&](const Key& k, const LaurentPoly& l, const LaurentPoly& r) {
    const auto& [alpha, beta, delta, rho, theta] = k;
    res.failures.push_back({prefix + "gamma=" + describe(gamma) + " alpha=" + alpha.to_string() +
                                " beta=" + beta.to_string() + " delta=" + delta.to_string() +
                                " rho=" + rho.to_string() + " theta=" + describe(theta),
                            l, r});
  };
  const LaurentPoly zero(kRingZ);
  auto li = lhs.begin();
  auto ri = rhs.begin();
  while (li != lhs.end() || ri != rhs.end()) {
    if (fail_fast && !res.failures.empty()) break;
    if (ri == rhs.end() || (li != lhs.end() && li->first < ri->first)) {
      if (!li->second.is_zero()) {
        ++res.nontrivial;
        report(li->first, li->second, zero);
      }
      ++li;
    } else if (li == lhs.end() || ri->first < li->first) {
      if (!ri->second.is_zero()) {
        ++res.nontrivial;
        report(ri->first, zero, ri->second);
      }
      ++ri;
    } else {
      if (!li->second.is_zero() || !ri->second.is_zero()) ++res.nontrivial;
      if (li->second != ri->second) report(li->first, li->second, ri->second);
      ++li;
      ++ri;
    }
  }
  return res;
}

void check_range(int s, int r, int nmax) {
  if (s < 1 || r < 1) throw IndexError("need at least one color and one dolor");
  if (nmax < 0) throw IndexError("nmax must be >= 0");
}

YbeReport merge_results(YbeReport rep, std::vector<TopResult>& parts, bool fail_fast) {
  for (auto& p : parts) {
    rep.total_boundaries += p.nontrivial;
    for (auto& f : p.failures) {
      rep.failures.push_back(std::move(f));
      if (fail_fast) return rep;
    }
  }
  return rep;
}

}  // namespace

YbeReport verify_unfused_ybe(int s, int r, int nmax, const YbeOptions& opts) {
  check_range(s, r, nmax);
  const std::vector<Spin> spins = all_spins(s, r);
  const int bosons = s * r;
  const std::size_t jobs_total = static_cast<std::size_t>(bosons) * static_cast<std::size_t>(nmax + 1);
  std::vector<TopResult> parts(jobs_total);
  std::atomic<bool> failed{false};

  parallel_for(jobs_total, opts.jobs, [&](std::size_t idx) {
    if (opts.fail_fast && failed.load()) return;
    const int rank = static_cast<int>(idx) / (nmax + 1) + 1;
    const int n = static_cast<int>(idx) % (nmax + 1);
    const BosonType here = boson_from_rank(rank, s, r);
    const BosonType next = boson_succ(here, s, r);
    auto comp = [&](int top, Spin right, int row) {
      std::vector<Completion<int>> out;
      for (Spin left : spins) {
        for (int m = top - 1; m <= top + 1; ++m) {
          if (m < 0) continue;
          UnfusedConfig cfg{here, row, left, right, top, m};
          LaurentPoly w = opts.unfused ? opts.unfused(cfg, kRingZ) : unfused_weight(cfg, kRingZ);
          if (!w.is_zero()) out.push_back({left, m, std::move(w)});
        }
      }
      return out;
    };
    auto rweight = [&](BosonType cd) {
      return [&opts, cd](const RConfig& cfg) {
        return opts.unfused_r ? opts.unfused_r(cfg, cd, kRingZ) : unfused_R_weight(cfg, cd, kRingZ);
      };
    };
    std::string prefix = "boson=(c" + std::to_string(here.color) + ",d" + std::to_string(here.dolor) + ") ";
    parts[idx] = check_top(n, spins, comp, rweight(here), rweight(next), prefix, opts.fail_fast);
    if (!parts[idx].failures.empty()) failed.store(true);
  });

  YbeReport rep;
  rep.mode = "unfused";
  rep.colors = s;
  rep.dolors = r;
  rep.nmax = nmax;
  return merge_results(std::move(rep), parts, opts.fail_fast);
}

YbeReport verify_fused_ybe(int s, int r, int nmax, const YbeOptions& opts) {
  check_range(s, r, nmax);
  const std::vector<Spin> spins = all_spins(s, r);
  const std::vector<EdgeContent> tops = all_contents(s, r, nmax);
  std::vector<TopResult> parts(tops.size());
  std::atomic<bool> failed{false};

  parallel_for(tops.size(), opts.jobs, [&](std::size_t idx) {
    if (opts.fail_fast && failed.load()) return;
    auto comp = [&](const EdgeContent& top, Spin right, int row) {
      std::vector<Completion<EdgeContent>> out;
      for (auto& c : fused_completions(top, right, row, kRingZ, opts.unfused)) {
        out.push_back({c.left, std::move(c.bottom), std::move(c.weight)});
      }
      return out;
    };
    auto rweight = [&](const RConfig& cfg) {
      return opts.fused_r ? opts.fused_r(cfg, kRingZ) : fused_R_weight(cfg, kRingZ);
    };
    parts[idx] = check_top(tops[idx], spins, comp, rweight, rweight, "", opts.fail_fast);
    if (!parts[idx].failures.empty()) failed.store(true);
  });

  YbeReport rep;
  rep.mode = "fused";
  rep.colors = s;
  rep.dolors = r;
  rep.nmax = nmax;
  return merge_results(std::move(rep), parts, opts.fail_fast);
}

std::vector<RConfig> fused_unfused_r_mismatches(int s, int r) {
  std::vector<RConfig> out;
  const std::vector<Spin> spins = all_spins(s, r);
  const BosonType first{1, r};
  for (Spin nw : spins) {
    for (Spin sw : spins) {
      for (Spin ne : spins) {
        for (Spin se : spins) {
          RConfig cfg{nw, sw, ne, se, 1, 2};
          if (fused_R_weight(cfg, kRingZ) != unfused_R_weight(cfg, first, kRingZ)) out.push_back(cfg);
        }
      }
    }
  }
  return out;
}

namespace {

Boundary with_rows_swapped(Boundary b, int i, bool left_side) {
  auto& side = left_side ? b.left : b.right;
  std::swap(side[static_cast<std::size_t>(i - 1)], side[static_cast<std::size_t>(i)]);
  return b;
}

}  // namespace

TrainReport verify_train(const SystemSpec& spec, int i) {
  spec.validate();
  if (i < 1 || i >= spec.r) {
    throw IndexError("train index " + std::to_string(i) + " outside 1.." + std::to_string(spec.r - 1));
  }
  const int nz = spec.r;
  const Boundary b = system_boundary(spec);
  const Spin di = b.left[static_cast<std::size_t>(i - 1)];
  const Spin dj = b.left[static_cast<std::size_t>(i)];
  const Spin ci = b.right[static_cast<std::size_t>(i - 1)];
  const Spin cj = b.right[static_cast<std::size_t>(i)];

  TrainReport rep;
  // R on the left boundary: the lattice sees (ne, se) as its left spins.
  const LaurentPoly z_plain = partition_function(b);
  const LaurentPoly z_left_swapped = partition_function(with_rows_swapped(b, i, true));
  rep.left = fused_R_weight({di, dj, di, dj, i, i + 1}, nz) * z_plain +
             fused_R_weight({di, dj, dj, di, i, i + 1}, nz) * z_left_swapped;
  // R on the right boundary: rows i, i+1 exchange spectral parameters and the
  // lattice sees (nw, sw) as its right spins.
  const LaurentPoly y_plain = swap_z(z_plain, i);
  const LaurentPoly y_right_swapped = swap_z(partition_function(with_rows_swapped(b, i, false)), i);
  rep.right = fused_R_weight({ci, cj, ci, cj, i, i + 1}, nz) * y_plain +
              fused_R_weight({cj, ci, ci, cj, i, i + 1}, nz) * y_right_swapped;
  rep.passed = rep.left == rep.right;
  return rep;
}

}  // namespace bicolor
