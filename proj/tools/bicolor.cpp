// Command-line front end. Exit status: 0 success, 1 verification failure,
// 2 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bicolor/classify.hpp"
#include "bicolor/errors.hpp"
#include "bicolor/gt.hpp"
#include "bicolor/io.hpp"
#include "bicolor/merge.hpp"
#include "bicolor/recurrence.hpp"
#include "bicolor/solvability.hpp"
#include "bicolor/sweeps.hpp"

namespace fs = std::filesystem;
using namespace bicolor;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int verdict(bool passed) { return passed ? kOk : kFailed; }

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string() + ": cannot write");
  out << text;
}

// Either one system from --system, or all of S_r^4 for --rank/--N/--lambda.
struct SweepTarget {
  std::string system;
  int rank = 0;
  int N = 0;
  std::vector<int> lambda;

  void add_options(CLI::App* app) {
    app->add_option("--system", system, "system JSON file");
    app->add_option("--rank", rank, "sweep all of S_r^4 with this r");
    app->add_option("--N", N, "grid width for the sweep");
    app->add_option("--lambda", lambda, "partition for the sweep, e.g. 6,3,0")->delimiter(',');
  }

  std::vector<SystemSpec> systems() const {
    if (!system.empty()) return {system_from_json(read_json_file(system))};
    if (rank < 1 || N < 1 || lambda.empty()) throw ParseError("give --system, or --rank, --N and --lambda");
    return all_systems(rank, N, lambda);
  }
};

State state_from_file(const std::string& path, const SystemSpec& spec) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("state")) j = j["state"];
  State st = state_from_json(j, spec.r, spec.r);
  check_state(st, system_boundary(spec));
  return st;
}

std::string render(const State& st, const SystemSpec& spec, const std::string& format) {
  return format == "svg" ? render_svg(st, system_boundary(spec)) : render_text(st, system_boundary(spec));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicolored bosonic lattice models: states, partition functions and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads for sweeps (0 = all cores)")->check(CLI::NonNegativeNumber);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list the states of a system");
  std::string system;
  std::string render_format;
  std::string out_dir;
  enumerate->add_option("--system", system, "system JSON file")->required();
  enumerate->add_option("--render", render_format, "also write each state")->check(CLI::IsMember({"text", "svg"}));
  enumerate->add_option("--out", out_dir, "directory for rendered states");

  // partition, classify
  auto* partition = app.add_subcommand("partition", "print the partition function");
  partition->add_option("--system", system, "system JSON file")->required();
  auto* classify = app.add_subcommand("classify", "classify a system by its boundary permutations");
  classify->add_option("--system", system, "system JSON file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "partition function from the recurrence");
  bool check = false;
  bool show_stats = false;
  std::string policy = "smallest";
  solve->add_option("--system", system, "system JSON file")->required();
  solve->add_flag("--check", check, "compare with enumeration");
  solve->add_flag("--stats", show_stats, "print solver statistics");
  solve->add_option("--policy", policy, "descent choice")->check(CLI::IsMember({"smallest", "largest"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity sweep");
  verify->require_subcommand(1);

  auto* ybe = verify->add_subcommand("ybe", "Yang-Baxter equations");
  std::string mode = "fused";
  int colors = 1, dolors = 1, nmax = 1;
  bool fail_fast = false;
  ybe->add_option("--mode", mode)->check(CLI::IsMember({"fused", "unfused", "r-table"}));
  ybe->add_option("--colors", colors)->required()->check(CLI::PositiveNumber);
  ybe->add_option("--dolors", dolors)->required()->check(CLI::PositiveNumber);
  ybe->add_option("--nmax", nmax, "boson count bound")->check(CLI::NonNegativeNumber);
  ybe->add_flag("--fail-fast", fail_fast);

  auto* merge = verify->add_subcommand("merge", "color-merging identities");
  std::string scope = "local";
  int step = 0;
  SweepTarget merge_target;
  merge->add_option("--scope", scope)->check(
      CLI::IsMember({"local", "step", "global-colored", "global-uncolored", "lift", "composition"}));
  merge->add_option("--colors", colors)->check(CLI::PositiveNumber);
  merge->add_option("--dolors", dolors)->check(CLI::PositiveNumber);
  merge->add_option("--nmax", nmax)->check(CLI::NonNegativeNumber);
  merge->add_option("--step", step, "step map index (default: every i < r)");
  merge_target.add_options(merge);

  auto* recurrence = verify->add_subcommand("recurrence", "four-term recurrence and Demazure identities");
  auto* train = verify->add_subcommand("train", "R-vertex train argument");
  auto* gt = verify->add_subcommand("gt", "pattern bijection");
  auto* trichotomy = verify->add_subcommand("trichotomy", "state counts against the classification");
  auto* solver = verify->add_subcommand("solver", "solver against enumeration");
  SweepTarget rec_t, train_t, gt_t, tri_t, solver_t;
  rec_t.add_options(recurrence);
  train_t.add_options(train);
  gt_t.add_options(gt);
  tri_t.add_options(trichotomy);
  solver_t.add_options(solver);
  std::string gt_check = "all";
  gt->add_option("--check", gt_check)->check(CLI::IsMember({"round-trip", "cardinality", "all"}));
  bool converse = false;
  trichotomy->add_flag("--converse", converse, "also require the converse arms (dominant lambda)");

  // gt conversions
  auto* gtc = app.add_subcommand("gt", "pattern conversions");
  gtc->require_subcommand(1);
  std::string state_file, pattern_file;
  auto* to_pattern = gtc->add_subcommand("to-pattern", "state JSON to pattern JSON (all states when --state is absent)");
  to_pattern->add_option("--system", system)->required();
  to_pattern->add_option("--state", state_file);
  auto* from_pattern = gtc->add_subcommand("from-pattern", "pattern JSON to state JSON");
  from_pattern->add_option("--system", system)->required();
  from_pattern->add_option("--pattern", pattern_file)->required();
  auto* gt_axioms = gtc->add_subcommand("check", "list axiom violations of a pattern");
  gt_axioms->add_option("--pattern", pattern_file)->required();
  gt_axioms->add_option("--colors", colors)->required()->check(CLI::PositiveNumber);
  gt_axioms->add_option("--dolors", dolors)->required()->check(CLI::PositiveNumber);

  // render
  auto* rendercmd = app.add_subcommand("render", "draw one state");
  int index = -1;
  std::string format = "text";
  std::string out_file;
  rendercmd->add_option("--system", system)->required();
  rendercmd->add_option("--state", state_file, "state JSON file");
  rendercmd->add_option("--index", index, "state number in enumeration order");
  rendercmd->add_option("--format", format)->check(CLI::IsMember({"text", "svg"}));
  rendercmd->add_option("--out", out_file);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*enumerate) {
      const SystemSpec spec = system_from_json(read_json_file(system));
      const auto states = enumerate_states(spec, jobs);
      Json list = Json::array();
      for (auto& st : states) list.push_back(to_json(st));
      if (!render_format.empty()) {
        if (out_dir.empty()) throw ParseError("--render needs --out");
        fs::create_directories(out_dir);
        for (std::size_t k = 0; k < states.size(); ++k) {
          std::ostringstream name;
          name << "state_" << std::setw(4) << std::setfill('0') << k << (render_format == "svg" ? ".svg" : ".txt");
          write_file(fs::path(out_dir) / name.str(), render(states[k], spec, render_format));
        }
      }
      print(Json{{"system", to_json(spec)}, {"count", states.size()}, {"states", std::move(list)}});
      return kOk;
    }
    if (*partition) {
      std::cout << partition_function(system_from_json(read_json_file(system))).to_string() << "\n";
      return kOk;
    }
    if (*classify) {
      print(to_json(classify_system(system_from_json(read_json_file(system)))));
      return kOk;
    }
    if (*solve) {
      const SystemSpec spec = system_from_json(read_json_file(system));
      SolveStats stats;
      const LaurentPoly z =
          solve_partition(spec, policy == "largest" ? DescentPolicy::Largest : DescentPolicy::Smallest, &stats);
      std::cout << z.to_string() << "\n";
      if (show_stats) std::cout << to_json(stats).dump() << "\n";
      if (!check) return kOk;
      const LaurentPoly expected = partition_function(spec);
      if (z == expected) {
        std::cout << "check: OK\n";
        return kOk;
      }
      std::cout << "check: MISMATCH\nenumeration: " << expected.to_string() << "\n";
      return kFailed;
    }
    if (*verify) {
      if (*ybe) {
        if (mode == "r-table") {
          const auto bad = fused_unfused_r_mismatches(colors, dolors);
          print(Json{{"mode", mode}, {"colors", colors}, {"dolors", dolors}, {"mismatches", bad.size()}, {"passed", bad.empty()}});
          return verdict(bad.empty());
        }
        YbeOptions opts;
        opts.jobs = jobs;
        opts.fail_fast = fail_fast;
        const YbeReport rep = mode == "unfused" ? verify_unfused_ybe(colors, dolors, nmax, opts)
                                                : verify_fused_ybe(colors, dolors, nmax, opts);
        print(to_json(rep));
        return verdict(rep.passed());
      }
      if (*merge) {
        MergeReport rep;
        if (scope == "local") {
          rep = verify_local_merge(colors, dolors, nmax, jobs);
        } else if (scope == "step") {
          rep.scope = MergeScope::Step;
          if (step != 0) {
            rep = verify_step_merge(colors, dolors, step, nmax, jobs);
          } else {
            for (int i = 1; i < dolors; ++i) rep.absorb(verify_step_merge(colors, dolors, i, nmax, jobs));
          }
        } else if (scope == "composition") {
          rep = verify_collapse_factorization(colors, dolors, nmax);
        } else if (!merge_target.system.empty()) {
          const SystemSpec s = system_from_json(read_json_file(merge_target.system));
          if (scope == "global-colored") rep = verify_global_colored(s.r, s.N, s.lambda, s.w1, s.w3, s.w4);
          else if (scope == "global-uncolored") rep = verify_global_uncolored(s.r, s.N, s.lambda, s.w3, s.w4);
          else rep = verify_lifts(s.r, s.N, s.lambda, s.w1, s.w3, s.w4);
        } else {
          const int r = merge_target.rank;
          if (r < 1 || merge_target.N < 1 || merge_target.lambda.empty()) {
            throw ParseError("--scope " + scope + " needs --system, or --rank, --N and --lambda");
          }
          if (scope == "global-colored") {
            rep = verify_global_colored_all(r, merge_target.N, merge_target.lambda, jobs);
          } else if (scope == "global-uncolored") {
            rep = verify_global_uncolored_all(r, merge_target.N, merge_target.lambda, jobs);
          } else {
            rep.scope = MergeScope::Lift;
            const auto perms = all_perms(r);
            for (auto& a : perms)
              for (auto& b : perms)
                for (auto& c : perms) rep.absorb(verify_lifts(r, merge_target.N, merge_target.lambda, a, b, c));
          }
        }
        print(to_json(rep));
        return verdict(rep.passed());
      }
      SweepReport rep;
      if (*recurrence) rep = sweep_recurrence(rec_t.systems(), jobs);
      else if (*train) rep = sweep_train(train_t.systems(), jobs);
      else if (*trichotomy) rep = sweep_trichotomy(tri_t.systems(), converse, jobs);
      else if (*solver) rep = sweep_solver(solver_t.systems(), jobs);
      else if (*gt) {
        const auto sys = gt_t.systems();
        if (gt_check == "cardinality") {
          rep = sweep_gt_cardinality(sys, jobs);
        } else if (gt_check == "round-trip") {
          rep = sweep_gt_round_trip(sys, jobs);
        } else {
          const SweepReport a = sweep_gt_round_trip(sys, jobs);
          const SweepReport b = sweep_gt_cardinality(sys, jobs);
          print(Json{{"round_trip", to_json(a)}, {"cardinality", to_json(b)}, {"passed", a.passed() && b.passed()}});
          return verdict(a.passed() && b.passed());
        }
      }
      print(to_json(rep));
      return verdict(rep.passed());
    }
    if (*gtc) {
      if (*gt_axioms) {
        const auto violations = check_axioms(pattern_from_json(read_json_file(pattern_file)), colors, dolors);
        Json list = Json::array();
        for (auto& v : violations) list.push_back(Json{{"axiom", v.axiom}, {"where", v.where}});
        print(Json{{"violations", std::move(list)}, {"valid", violations.empty()}});
        return verdict(violations.empty());
      }
      const SystemSpec spec = system_from_json(read_json_file(system));
      if (*to_pattern) {
        if (!state_file.empty()) {
          print(to_json(state_to_pattern(state_from_file(state_file, spec), spec)));
        } else {
          Json list = Json::array();
          for (auto& st : enumerate_states(spec, jobs)) list.push_back(to_json(state_to_pattern(st, spec)));
          print(Json{{"patterns", std::move(list)}});
        }
        return kOk;
      }
      print(to_json(pattern_to_state(pattern_from_json(read_json_file(pattern_file)), spec)));
      return kOk;
    }
    if (*rendercmd) {
      const SystemSpec spec = system_from_json(read_json_file(system));
      State st;
      if (!state_file.empty()) {
        st = state_from_file(state_file, spec);
      } else {
        const auto states = enumerate_states(spec, jobs);
        if (index < 0 || index >= static_cast<int>(states.size())) {
          throw IndexError("--index " + std::to_string(index) + " outside 0.." + std::to_string(states.size()) + " (exclusive)");
        }
        st = states[static_cast<std::size_t>(index)];
      }
      const std::string doc = render(st, spec, format);
      if (out_file.empty()) std::cout << doc;
      else write_file(out_file, doc);
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
