#include "bicolor/sweeps.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "bicolor/classify.hpp"
#include "bicolor/errors.hpp"
#include "bicolor/gt.hpp"
#include "bicolor/parallel.hpp"
#include "bicolor/recurrence.hpp"
#include "bicolor/solvability.hpp"

namespace bicolor {

namespace {

constexpr std::size_t kMaxExamples = 5;

struct Outcome {
  std::vector<std::string> tallies;
  std::vector<std::string> failures;  // "clause: detail"
};

std::string clause_of(const std::string& failure) { return failure.substr(0, failure.find(':')); }

SweepReport run(const std::string& kind, const std::vector<SystemSpec>& systems, int jobs,
                const std::function<void(const SystemSpec&, Outcome&)>& fn) {
  std::vector<Outcome> slots(systems.size());
  parallel_for(systems.size(), jobs, [&](std::size_t k) {
    try {
      fn(systems[k], slots[k]);
    } catch (const Error& e) {
      slots[k].failures.push_back(std::string("exception: ") + e.what());
    }
  });
  SweepReport rep;
  rep.kind = kind;
  for (std::size_t k = 0; k < systems.size(); ++k) {
    ++rep.checked;
    for (auto& t : slots[k].tallies) ++rep.counts[t];
    for (auto& f : slots[k].failures) {
      ++rep.failures;
      ++rep.counts[clause_of(f)];
      if (rep.examples.size() < kMaxExamples) rep.examples.push_back(spec_label(systems[k]) + ": " + f);
    }
  }
  return rep;
}

}  // namespace

std::vector<SystemSpec> all_systems(int r, int N, const std::vector<int>& lambda) {
  const auto perms = all_perms(r);
  std::vector<SystemSpec> out;
  out.reserve(perms.size() * perms.size() * perms.size() * perms.size());
  for (auto& a : perms)
    for (auto& b : perms)
      for (auto& c : perms)
        for (auto& d : perms) {
          SystemSpec s;
          s.r = r;
          s.N = N;
          s.lambda = lambda;
          s.w1 = a;
          s.w2 = b;
          s.w3 = c;
          s.w4 = d;
          s.validate();
          out.push_back(std::move(s));
        }
  return out;
}

std::string spec_label(const SystemSpec& spec) {
  std::ostringstream os;
  os << "w=(" << spec.w1.to_cycle_string() << "," << spec.w2.to_cycle_string() << "," << spec.w3.to_cycle_string()
     << "," << spec.w4.to_cycle_string() << ") lambda=(";
  for (std::size_t k = 0; k < spec.lambda.size(); ++k) os << (k ? "," : "") << spec.lambda[k];
  os << ") N=" << spec.N;
  return os.str();
}

SweepReport sweep_trichotomy(const std::vector<SystemSpec>& systems, bool converse, int jobs) {
  return run("trichotomy", systems, jobs, [converse](const SystemSpec& s, Outcome& out) {
    const auto cat = classify_system(s).category;
    const Coeff n = count_states(s);
    out.tallies.push_back("category " + to_string(cat));
    const std::string states = "states=" + n.str();
    if (cat == Category::NoStates && n != 0) out.failures.push_back("NoStates with states: " + states);
    if (cat == Category::Monostatic && n != 1) out.failures.push_back("Monostatic without exactly one state: " + states);
    if (converse) {
      if (cat == Category::General && n == 0) out.failures.push_back("General without states: " + states);
      if (cat == Category::General && n == 1) out.failures.push_back("one state but not Monostatic: " + states);
    }
  });
}

SweepReport sweep_recurrence(const std::vector<SystemSpec>& systems, int jobs) {
  return run("recurrence", systems, jobs, [](const SystemSpec& s, Outcome& out) {
    for (int i = 1; i < s.r; ++i) {
      const std::string at = " i=" + std::to_string(i);
      out.tallies.push_back("residual checks");
      const LaurentPoly res = recurrence_residual(s, i);
      if (!res.is_zero()) out.failures.push_back("nonzero residual:" + at + " residual=" + res.to_string());
      const DemazureCheck d = verify_demazure(s, i);
      out.tallies.push_back("demazure k=" + std::to_string(d.k));
      if (!d.passed()) out.failures.push_back("Demazure identity fails:" + at);
    }
  });
}

SweepReport sweep_train(const std::vector<SystemSpec>& systems, int jobs) {
  return run("train", systems, jobs, [](const SystemSpec& s, Outcome& out) {
    for (int i = 1; i < s.r; ++i) {
      out.tallies.push_back("train checks");
      const TrainReport t = verify_train(s, i);
      if (!t.passed) out.failures.push_back("train fails: i=" + std::to_string(i));
    }
  });
}

SweepReport sweep_solver(const std::vector<SystemSpec>& systems, int jobs) {
  return run("solver", systems, jobs, [](const SystemSpec& s, Outcome& out) {
    const auto rel = classify_system(s).relation;
    if (rel == BruhatRelation::GreaterOrIncomparable) {
      out.tallies.push_back("skipped (w_d not below w_c)");
      return;
    }
    out.tallies.push_back("solved");
    SolveStats stats;
    const LaurentPoly z = solve_partition(s, DescentPolicy::Smallest, &stats);
    if (z != partition_function(system_boundary(s))) out.failures.push_back("solver disagrees with enumeration: Z=" + z.to_string());
  });
}

SweepReport sweep_gt_round_trip(const std::vector<SystemSpec>& systems, int jobs) {
  return run("gt-round-trip", systems, jobs, [](const SystemSpec& s, Outcome& out) {
    std::set<TwoColoredGT> seen;
    for (const State& st : enumerate_states(s)) {
      out.tallies.push_back("states");
      const TwoColoredGT g = state_to_pattern(st, s);
      if (!check_axioms(g, s.r, s.r).empty()) out.failures.push_back("pattern violates the axioms");
      if (pattern_to_state(g, s) != st) out.failures.push_back("round trip changes the state");
      if (!seen.insert(g).second) out.failures.push_back("two states share a pattern");
    }
  });
}

SweepReport sweep_gt_cardinality(const std::vector<SystemSpec>& systems, int jobs) {
  return run("gt-cardinality", systems, jobs, [](const SystemSpec& s, Outcome& out) {
    const Coeff n = count_states(s);
    const std::size_t p = enumerate_patterns(s).size();
    out.tallies.push_back("specs");
    if (n != p) out.failures.push_back("pattern count differs: states=" + n.str() + " patterns=" + std::to_string(p));
  });
}

}  // namespace bicolor
