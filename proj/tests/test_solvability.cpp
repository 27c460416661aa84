#include <doctest.h>

#include "bicolor/solvability.hpp"

using namespace bicolor;

namespace {

SystemSpec spec3(int N, std::vector<int> lam, const char* w1, const char* w2, const char* w3, const char* w4) {
  SystemSpec s;
  s.r = 3;
  s.N = N;
  s.lambda = std::move(lam);
  s.w1 = parse_perm(w1, 3);
  s.w2 = parse_perm(w2, 3);
  s.w3 = parse_perm(w3, 3);
  s.w4 = parse_perm(w4, 3);
  return s;
}

}  // namespace

TEST_CASE("single boson, hand-wired boundary") {
  // alpha = beta = delta = rho = c1 with no bosons: every vertex is the color
  // pass a = c (weight z_row) and both R-vertices are (c1,c1,c1,c1).
  const int nz = 2;
  const Spin c1 = Spin::color(1);
  const LaurentPoly R = fused_R_weight({c1, c1, c1, c1, 1, 2}, nz);
  const LaurentPoly v1 = unfused_weight({{1, 1}, 1, c1, c1, 0, 0}, nz);
  const LaurentPoly v2 = unfused_weight({{1, 1}, 2, c1, c1, 0, 0}, nz);
  CHECK(R * v1 * v2 == LaurentPoly::parse("z1^2*z2 + -1*t*z1*z2^2", nz));

  const YbeReport rep = verify_unfused_ybe(1, 1, 2);
  CHECK(rep.passed());
  CHECK(rep.total_boundaries > 0);
  CHECK(verify_fused_ybe(1, 1, 2).passed());
}

TEST_CASE("unfused YBE, small sizes") {
  for (int s = 1; s <= 2; ++s) {
    for (int r = 1; r <= 2; ++r) {
      const YbeReport rep = verify_unfused_ybe(s, r, 2, {.jobs = 2});
      CHECK_MESSAGE(rep.passed(), "s=" << s << " r=" << r);
    }
  }
  CHECK(verify_unfused_ybe(2, 2, 2, {.jobs = 1}).total_boundaries == verify_unfused_ybe(2, 2, 2, {.jobs = 4}).total_boundaries);
}

TEST_CASE("fused YBE, small sizes") {
  CHECK(verify_fused_ybe(2, 1, 1, {.jobs = 2}).passed());
  CHECK(verify_fused_ybe(1, 2, 1, {.jobs = 2}).passed());
}

TEST_CASE("a perturbed unfused entry breaks the equation") {
  YbeOptions opts;
  opts.fail_fast = true;
  opts.unfused = [](const UnfusedConfig& cfg, int nz) {
    LaurentPoly w = unfused_weight(cfg, nz);
    if (cfg.left.is_color() && cfg.left == cfg.right && cfg.left.index == cfg.boson.color && cfg.top == 1) {
      w += LaurentPoly::one(nz);
    }
    return w;
  };
  const YbeReport rep = verify_unfused_ybe(1, 1, 2, opts);
  REQUIRE_FALSE(rep.passed());
  CHECK(rep.failures.size() == 1);
  CHECK(rep.failures[0].lhs != rep.failures[0].rhs);
}

TEST_CASE("a perturbed R entry breaks both equations") {
  const Spin c1 = Spin::color(1), d1 = Spin::dolor(1);
  const RConfig target{d1, c1, c1, d1, 1, 2};
  auto same = [&](const RConfig& cfg) {
    return cfg.nw == target.nw && cfg.sw == target.sw && cfg.ne == target.ne && cfg.se == target.se;
  };
  YbeOptions u;
  u.unfused_r = [&](const RConfig& cfg, BosonType cd, int nz) {
    LaurentPoly w = unfused_R_weight(cfg, cd, nz);
    if (same(cfg)) w += LaurentPoly::one(nz);
    return w;
  };
  CHECK_FALSE(verify_unfused_ybe(1, 1, 1, u).passed());
  YbeOptions f;
  f.fused_r = [&](const RConfig& cfg, int nz) {
    LaurentPoly w = fused_R_weight(cfg, nz);
    if (same(cfg)) w += LaurentPoly::one(nz);
    return w;
  };
  CHECK_FALSE(verify_fused_ybe(1, 1, 1, f).passed());
}

TEST_CASE("fused and unfused R tables agree") {
  for (int s = 1; s <= 3; ++s)
    for (int r = 1; r <= 3; ++r) CHECK(fused_unfused_r_mismatches(s, r).empty());
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS(verify_unfused_ybe(0, 1, 1), IndexError);
  CHECK_THROWS_AS(verify_fused_ybe(1, 1, -1), IndexError);
}

TEST_CASE("train identity") {
  const auto fig = spec3(3, {2, 2, 0}, "(123)", "()", "(12)", "(13)");
  for (int i = 1; i <= 2; ++i) {
    const TrainReport rep = verify_train(fig, i);
    CHECK(rep.passed);
    CHECK(!rep.left.is_zero());
  }
  const auto none = spec3(3, {0, 0, 0}, "()", "()", "()", "()");
  const TrainReport empty = verify_train(none, 1);
  CHECK(empty.passed);

  SystemSpec one;
  one.r = 1;
  one.N = 1;
  one.lambda = {0};
  one.w1 = one.w2 = one.w3 = one.w4 = Perm(1);
  CHECK_THROWS_AS(verify_train(one, 1), IndexError);

  const auto perms = all_perms(3);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    SystemSpec s = spec3(4, {3, 1, 0}, "()", "()", "()", "()");
    s.w1 = perms[a];
    s.w2 = perms[(a + 2) % 6];
    s.w3 = perms[(a + 3) % 6];
    s.w4 = perms[5 - a];
    for (int i = 1; i <= 2; ++i) CHECK(verify_train(s, i).passed);
  }
}
