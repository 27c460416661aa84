#include "bicolor/merge.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

#include "bicolor/errors.hpp"
#include "bicolor/parallel.hpp"

namespace bicolor {

namespace {

using FiberKey = std::pair<Spin, EdgeContent>;
using FiberMap = std::map<FiberKey, LaurentPoly>;

void check_sizes(int s, int r, int nmax) {
  if (s < 1 || r < 1) throw IndexError("need at least one color and one dolor");
  if (nmax < 0) throw IndexError("nmax must be nonnegative");
}

void check_lambda(int r, int N, const std::vector<int>& lambda) {
  SystemSpec probe;
  probe.r = r;
  probe.N = N;
  probe.lambda = lambda;
  probe.w1 = probe.w2 = probe.w3 = probe.w4 = Perm(r);
  probe.validate();
}

std::string key_string(const FiberKey& k) { return "left " + k.first.to_string() + " bottom " + k.second.to_string(); }

// Completions of (top, right) grouped by the images of (left, bottom).
template <typename SpinMap, typename ContentMap>
FiberMap fibers(const EdgeContent& top, Spin right, SpinMap&& on_spin, ContentMap&& on_content) {
  FiberMap out;
  for (auto& comp : fused_completions(top, right, 1, 1)) {
    auto [it, fresh] = out.try_emplace({on_spin(comp.left), on_content(comp.bottom)}, LaurentPoly(1));
    it->second += comp.weight;
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

FiberMap targets(const EdgeContent& top, Spin right, const LaurentPoly& factor) {
  FiberMap out;
  for (auto& comp : fused_completions(top, right, 1, 1)) {
    if (!comp.weight.is_zero()) out[{comp.left, comp.bottom}] += factor * comp.weight;
  }
  return out;
}

void compare(const FiberMap& expected, const FiberMap& got, const std::string& where, std::vector<std::string>& out) {
  std::set<FiberKey> keys;
  for (auto& [k, v] : expected) keys.insert(k);
  for (auto& [k, v] : got) keys.insert(k);
  for (auto& k : keys) {
    auto e = expected.find(k);
    auto g = got.find(k);
    LaurentPoly ev = e == expected.end() ? LaurentPoly(1) : e->second;
    LaurentPoly gv = g == got.end() ? LaurentPoly(1) : g->second;
    if (ev != gv) {
      out.push_back(where + ", " + key_string(k) + ": target " + ev.to_string() + ", fiber sum " + gv.to_string());
    }
  }
}

std::string dolor_class(Spin x, int i) {
  if (x.is_color()) return "c";
  if (x.index < i) return "d<i";
  if (x.index == i) return "d_i";
  if (x.index == i + 1) return "d_i+1";
  return "d>i+1";
}

struct Slot {
  MergeReport report;
};

MergeReport merge_slots(MergeScope scope, std::vector<Slot>& slots) {
  MergeReport out;
  out.scope = scope;
  for (auto& s : slots) out.absorb(s.report);
  return out;
}

LaurentPoly row_product_power(int r, int e) {
  std::vector<int> z(static_cast<std::size_t>(r), e);
  return monomial(r, 1, 0, z);
}

SystemSpec make_spec(int r, int N, const std::vector<int>& lambda, const Perm& w1, const Perm& w2, const Perm& w3,
                     const Perm& w4) {
  SystemSpec s;
  s.r = r;
  s.N = N;
  s.lambda = lambda;
  s.w1 = w1;
  s.w2 = w2;
  s.w3 = w3;
  s.w4 = w4;
  return s;
}

}  // namespace

std::string to_string(MergeScope scope) {
  switch (scope) {
    case MergeScope::Local:
      return "local";
    case MergeScope::Step:
      return "step";
    case MergeScope::GlobalColored:
      return "global-colored";
    case MergeScope::GlobalUncolored:
      return "global-uncolored";
    case MergeScope::Lift:
      return "lift";
    case MergeScope::Composition:
      break;
  }
  return "composition";
}

void MergeReport::absorb(const MergeReport& other) {
  checked += other.checked;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (auto& [k, v] : other.cases) cases[k] += v;
}

Spin project_spin(Spin x) { return x.is_color() ? x : Spin::dolor(1); }

EdgeContent project_content(const EdgeContent& v) {
  EdgeContent out(v.colors(), 1);
  for (int c = 1; c <= v.colors(); ++c) out.set({c, 1}, v.color_total(c));
  return out;
}

Spin step_spin(Spin x, int i) { return x.is_dolor() && x.index == i ? Spin::dolor(i + 1) : x; }

EdgeContent step_content(const EdgeContent& v, int i) {
  if (i < 1 || i >= v.dolors()) throw IndexError("step index " + std::to_string(i) + " outside 1.." +
                                                  std::to_string(v.dolors() - 1));
  EdgeContent out = v;
  for (int c = 1; c <= v.colors(); ++c) {
    out.set({c, i + 1}, v.count({c, i}) + v.count({c, i + 1}));
    out.set({c, i}, 0);
  }
  return out;
}

Spin collapse_spin(Spin x, int r) { return x.is_color() ? x : Spin::dolor(r); }

EdgeContent collapse_content(const EdgeContent& v) {
  EdgeContent out(v.colors(), v.dolors());
  for (int c = 1; c <= v.colors(); ++c) out.set({c, v.dolors()}, v.color_total(c));
  return out;
}

Spin collapse_by_steps(Spin x, int r) {
  for (int i = 1; i < r; ++i) x = step_spin(x, i);
  return x;
}

EdgeContent collapse_by_steps(const EdgeContent& v) {
  EdgeContent out = v;
  for (int i = 1; i < v.dolors(); ++i) out = step_content(out, i);
  return out;
}

MergeReport verify_local_merge(int s, int r, int nmax, int jobs) {
  check_sizes(s, r, nmax);
  const auto tops = all_contents(s, r, nmax);
  const auto spins = all_spins(s, r);
  const LaurentPoly factor = LaurentPoly::term(1, 1, 0, 1, 1 - r);
  std::vector<Slot> slots(tops.size());
  parallel_for(tops.size(), jobs, [&](std::size_t k) {
    MergeReport& rep = slots[k].report;
    for (Spin c : spins) {
      const FiberMap got = fibers(tops[k], c, project_spin, project_content);
      FiberMap scaled;
      for (auto& [key, w] : got) scaled.emplace(key, factor * w);
      const FiberMap expected = targets(project_content(tops[k]), project_spin(c), LaurentPoly::one(1));
      compare(expected, scaled, "top " + tops[k].to_string() + " right " + c.to_string(), rep.failures);
      ++rep.checked;
      ++rep.cases[c.is_color() ? "right color" : "right dolor"];
    }
  });
  return merge_slots(MergeScope::Local, slots);
}

MergeReport verify_step_merge(int s, int r, int i, int nmax, int jobs) {
  check_sizes(s, r, nmax);
  if (r == 1) {
    MergeReport vacuous;
    vacuous.scope = MergeScope::Step;
    return vacuous;
  }
  if (i < 1 || i >= r) throw IndexError("step index " + std::to_string(i) + " outside 1.." + std::to_string(r - 1));
  const auto tops = all_contents(s, r, nmax);
  const auto spins = all_spins(s, r);
  std::vector<Slot> slots(tops.size());
  parallel_for(tops.size(), jobs, [&](std::size_t k) {
    MergeReport& rep = slots[k].report;
    auto on_spin = [i](Spin x) { return step_spin(x, i); };
    auto on_content = [i](const EdgeContent& v) { return step_content(v, i); };
    for (Spin c : spins) {
      const FiberMap got = fibers(tops[k], c, on_spin, on_content);
      const FiberMap expected = targets(step_content(tops[k], i), step_spin(c, i), LaurentPoly::one(1));
      compare(expected, got, "top " + tops[k].to_string() + " right " + c.to_string(), rep.failures);
      ++rep.checked;
      std::set<std::string> labels;
      for (auto& [key, w] : expected) labels.insert(dolor_class(c, i) + " -> " + dolor_class(key.first, i));
      for (auto& l : labels) ++rep.cases[l];
    }
  });
  return merge_slots(MergeScope::Step, slots);
}

LaurentPoly step_fiber_weight(const EdgeContent& top, Spin right, Spin image_left, const EdgeContent& image_bottom,
                              int i) {
  LaurentPoly sum(1);
  for (auto& comp : fused_completions(top, right, 1, 1)) {
    if (step_spin(comp.left, i) == image_left && step_content(comp.bottom, i) == image_bottom) sum += comp.weight;
  }
  return sum;
}

Boundary colored_boundary(int r, int N, const std::vector<int>& lambda, const Perm& w1, const Perm& w3) {
  check_lambda(r, N, lambda);
  Boundary b;
  b.rows = r;
  b.N = N;
  b.colors = r;
  b.dolors = 1;
  const Perm w1_inv = w1.inverse();
  const Perm w3_inv = w3.inverse();
  b.top.assign(static_cast<std::size_t>(N), EdgeContent(r, 1));
  for (int i = 1; i <= r; ++i) {
    b.right.push_back(Spin::color(w1_inv(i)));
    b.left.push_back(Spin::dolor(1));
    b.top[static_cast<std::size_t>(lambda[static_cast<std::size_t>(i - 1)])].add({w3_inv(i), 1});
  }
  b.validate();
  return b;
}

Boundary uncolored_boundary(int r, int N, const std::vector<int>& lambda) {
  check_lambda(r, N, lambda);
  Boundary b;
  b.rows = r;
  b.N = N;
  b.colors = 1;
  b.dolors = 1;
  b.top.assign(static_cast<std::size_t>(N), EdgeContent(1, 1));
  for (int i = 1; i <= r; ++i) {
    b.right.push_back(Spin::color(1));
    b.left.push_back(Spin::dolor(1));
    b.top[static_cast<std::size_t>(lambda[static_cast<std::size_t>(i - 1)])].add({1, 1});
  }
  b.validate();
  return b;
}

LaurentPoly scaled_partition_function(const SystemSpec& spec) {
  return row_product_power(spec.r, spec.N * (1 - spec.r)) * partition_function(spec);
}

MergeReport verify_global_colored(int r, int N, const std::vector<int>& lambda, const Perm& w1, const Perm& w3,
                                  const Perm& w4) {
  MergeReport rep;
  rep.scope = MergeScope::GlobalColored;
  const LaurentPoly target = partition_function(colored_boundary(r, N, lambda, w1, w3));
  LaurentPoly sum(r);
  for (const Perm& w2 : all_perms(r)) sum += scaled_partition_function(make_spec(r, N, lambda, w1, w2, w3, w4));
  ++rep.checked;
  ++rep.cases[target.is_zero() ? "zero" : "nonzero"];
  if (sum != target) {
    rep.failures.push_back("w1 " + w1.to_cycle_string() + " w3 " + w3.to_cycle_string() + " w4 " +
                           w4.to_cycle_string() + ": colored " + target.to_string() + ", sum " + sum.to_string());
  }
  return rep;
}

MergeReport verify_global_uncolored(int r, int N, const std::vector<int>& lambda, const Perm& w3, const Perm& w4) {
  MergeReport rep;
  rep.scope = MergeScope::GlobalUncolored;
  const LaurentPoly target = partition_function(uncolored_boundary(r, N, lambda));
  LaurentPoly sum(r);
  for (const Perm& w1 : all_perms(r))
    for (const Perm& w2 : all_perms(r)) sum += scaled_partition_function(make_spec(r, N, lambda, w1, w2, w3, w4));
  ++rep.checked;
  ++rep.cases[target.is_zero() ? "zero" : "nonzero"];
  if (sum != target) {
    rep.failures.push_back("w3 " + w3.to_cycle_string() + " w4 " + w4.to_cycle_string() + ": uncolored " +
                           target.to_string() + ", sum " + sum.to_string());
  }
  return rep;
}

MergeReport verify_global_colored_all(int r, int N, const std::vector<int>& lambda, int jobs) {
  const auto perms = all_perms(r);
  const std::size_t n = perms.size();
  std::vector<Slot> slots(n * n * n);
  parallel_for(slots.size(), jobs, [&](std::size_t k) {
    slots[k].report = verify_global_colored(r, N, lambda, perms[k / (n * n)], perms[(k / n) % n], perms[k % n]);
  });
  return merge_slots(MergeScope::GlobalColored, slots);
}

MergeReport verify_global_uncolored_all(int r, int N, const std::vector<int>& lambda, int jobs) {
  const auto perms = all_perms(r);
  const std::size_t n = perms.size();
  std::vector<Slot> slots(n * n);
  parallel_for(slots.size(), jobs, [&](std::size_t k) {
    slots[k].report = verify_global_uncolored(r, N, lambda, perms[k / n], perms[k % n]);
  });
  return merge_slots(MergeScope::GlobalUncolored, slots);
}

State project_state(const State& st) {
  State out;
  for (auto& layer : st.vcontent) {
    auto& row = out.vcontent.emplace_back();
    for (auto& v : layer) row.push_back(project_content(v));
  }
  for (auto& spins : st.hspin) {
    auto& row = out.hspin.emplace_back();
    for (Spin x : spins) row.push_back(project_spin(x));
  }
  return out;
}

std::vector<State> lift_state(const State& s0, const SystemSpec& spec) {
  spec.validate();
  const int r = spec.r;
  const int N = spec.N;
  State cur;
  cur.vcontent.assign(static_cast<std::size_t>(r + 1), std::vector<EdgeContent>(static_cast<std::size_t>(N)));
  cur.hspin.assign(static_cast<std::size_t>(r), std::vector<Spin>(static_cast<std::size_t>(N + 1)));
  cur.vcontent[0] = top_boundary(spec);
  const Perm w1_inv = spec.w1.inverse();
  for (int i = 1; i <= r; ++i) cur.hspin[static_cast<std::size_t>(i - 1)][0] = Spin::color(w1_inv(i));
  for (int j = 0; j < N; ++j) {
    const std::size_t jj = static_cast<std::size_t>(j);
    if (project_content(cur.vcontent[0][jj]) != s0.vcontent[0][jj]) return {};
  }

  std::vector<State> out;
  // Vertex k is row k / N + 1, column k % N; columns are visited right to left.
  std::function<void(int)> visit = [&](int k) {
    if (k == r * N) {
      out.push_back(cur);
      return;
    }
    const std::size_t i = static_cast<std::size_t>(k / N);
    const std::size_t j = static_cast<std::size_t>(k % N);
    for (auto& comp : fused_completions(cur.vcontent[i][j], cur.hspin[i][j], static_cast<int>(i) + 1, r)) {
      if (comp.weight.is_zero()) continue;
      if (project_spin(comp.left) != s0.hspin[i][j + 1]) continue;
      if (project_content(comp.bottom) != s0.vcontent[i + 1][j]) continue;
      cur.hspin[i][j + 1] = comp.left;
      cur.vcontent[i + 1][j] = comp.bottom;
      visit(k + 1);
    }
  };
  visit(0);
  std::sort(out.begin(), out.end());
  return out;
}

MergeReport verify_lifts(int r, int N, const std::vector<int>& lambda, const Perm& w1, const Perm& w3,
                         const Perm& w4) {
  MergeReport rep;
  rep.scope = MergeScope::Lift;
  const Boundary colored = colored_boundary(r, N, lambda, w1, w3);
  const SystemSpec base = make_spec(r, N, lambda, w1, Perm(r), w3, w4);

  std::map<State, std::vector<std::pair<State, LaurentPoly>>> fibers_by_image;
  for (const Perm& w2 : all_perms(r)) {
    SystemSpec s = base;
    s.w2 = w2;
    for (auto& st : enumerate_states(s)) fibers_by_image[project_state(st)].emplace_back(st, state_weight(st, s));
  }
  const LaurentPoly scale = row_product_power(r, N * (1 - r));
  const auto colored_states = enumerate_states(colored);
  std::size_t covered = 0;
  for (auto& s0 : colored_states) {
    ++rep.checked;
    std::vector<State> filtered;
    LaurentPoly sum(r);
    if (auto it = fibers_by_image.find(s0); it != fibers_by_image.end()) {
      for (auto& [st, w] : it->second) {
        filtered.push_back(st);
        sum += w;
      }
      covered += it->second.size();
    }
    std::sort(filtered.begin(), filtered.end());
    const auto lifted = lift_state(s0, base);
    ++rep.cases[lifted.empty() ? "no lift" : "lifted"];
    const std::string where = "state " + std::to_string(rep.checked);
    if (lifted != filtered) {
      rep.failures.push_back(where + ": " + std::to_string(lifted.size()) + " lifts, " +
                             std::to_string(filtered.size()) + " states in the fiber");
    }
    const LaurentPoly w0 = state_weight(s0, colored);
    if (scale * sum != w0) {
      rep.failures.push_back(where + ": weight " + w0.to_string() + ", scaled lift sum " + (scale * sum).to_string());
    }
  }
  std::size_t total = 0;
  for (auto& [img, v] : fibers_by_image) total += v.size();
  if (covered != total) {
    rep.failures.push_back(std::to_string(total - covered) + " bicolored states project outside the one-dolor system");
  }
  return rep;
}

MergeReport verify_collapse_factorization(int s, int r, int nmax) {
  check_sizes(s, r, nmax);
  MergeReport rep;
  rep.scope = MergeScope::Composition;
  for (Spin x : all_spins(s, r)) {
    ++rep.checked;
    if (collapse_by_steps(x, r) != collapse_spin(x, r)) {
      rep.failures.push_back("spin " + x.to_string());
    }
  }
  for (auto& v : all_contents(s, r, nmax)) {
    ++rep.checked;
    if (collapse_by_steps(v) != collapse_content(v)) rep.failures.push_back("content " + v.to_string());
  }
  return rep;
}

}  // namespace bicolor
