#include <doctest.h>

#include <functional>

#include "bicolor/weights.hpp"

using namespace bicolor;

namespace {

LaurentPoly P(const char* s, int nz = 1) { return LaurentPoly::parse(s, nz); }

// Fused weight by brute force over every sequence of intermediate horizontal
// spins and bottom counts, multiplying unfused weights in rank order from the
// right. Independent of the branch rules inside fused_completions.
LaurentPoly chain_oracle(const FusedConfig& cfg, int s, int r, int nz) {
  const int n = s * r;
  const auto spins = all_spins(s, r);
  LaurentPoly total(nz);
  std::function<void(int, Spin, LaurentPoly)> go = [&](int rank, Spin carried, LaurentPoly acc) {
    if (rank == 0) {
      if (carried == cfg.left) total += acc;
      return;
    }
    const BosonType b = boson_from_rank(rank, s, r);
    const int top = cfg.top.count_at_rank(rank);
    const int bottom = cfg.bottom.count_at_rank(rank);
    for (Spin left : spins) {
      LaurentPoly w = unfused_weight({b, cfg.row, left, carried, top, bottom}, nz);
      if (!w.is_zero()) go(rank - 1, left, acc * w);
    }
  };
  go(n, cfg.right, LaurentPoly::one(nz));
  return total;
}

bool conserves(const FusedConfig& cfg, int s, int r) {
  for (int c = 1; c <= s; ++c) {
    const Spin x = Spin::color(c);
    if (cfg.top.color_total(c) + (cfg.left == x) != cfg.bottom.color_total(c) + (cfg.right == x)) return false;
  }
  for (int d = 1; d <= r; ++d) {
    const Spin y = Spin::dolor(d);
    if (cfg.top.dolor_total(d) + (cfg.right == y) != cfg.bottom.dolor_total(d) + (cfg.left == y)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("spin text") {
  CHECK(Spin::color(3).to_string() == "c3");
  CHECK(Spin::parse("d2") == Spin::dolor(2));
  CHECK_THROWS_AS(Spin::parse("x1"), ParseError);
  CHECK_THROWS_AS(Spin::parse("c0"), ParseError);
  CHECK(all_spins(2, 3).size() == 5);
}

TEST_CASE("monochrome order") {
  CHECK(boson_rank({1, 2}, 2, 2) == 1);
  CHECK(boson_succ({2, 2}, 2, 2) == BosonType{1, 1});
  CHECK(boson_succ({2, 1}, 2, 2) == BosonType{1, 2});
  CHECK(boson_succ({1, 2}, 2, 2) == BosonType{2, 2});
  for (int s = 1; s <= 3; ++s) {
    for (int r = 1; r <= 3; ++r) {
      for (int k = 1; k <= s * r; ++k) {
        const BosonType b = boson_from_rank(k, s, r);
        CHECK(boson_rank(b, s, r) == k);
        if (k < s * r) CHECK(boson_less(b, boson_from_rank(k + 1, s, r)));
        CHECK(boson_rank(boson_succ(b, s, r), s, r) == k % (s * r) + 1);
      }
    }
  }
}

TEST_CASE("edge content") {
  EdgeContent e(2, 2);
  e.add({1, 1});
  e.add({1, 2}, 2);
  CHECK(e.total() == 3);
  CHECK(e.color_total(1) == 3);
  CHECK(e.dolor_total(2) == 2);
  CHECK(e.to_string() == "{c1.d2:2,c1.d1:1}");
  CHECK(EdgeContent(1, 1).to_string() == "{}");
  CHECK(all_contents(2, 1, 2).size() == 9);
}

TEST_CASE("unfused table") {
  const BosonType c1d2{1, 2};
  const BosonType c2d2{2, 2};
  // split at n = 0 and n = 2
  CHECK(unfused_weight({c1d2, 1, Spin::dolor(2), Spin::color(1), 1, 0}, 1) == P("1"));
  CHECK(unfused_weight({c1d2, 1, Spin::dolor(2), Spin::color(1), 3, 2}, 1) == t_geometric(1, 2));
  // merge
  CHECK(unfused_weight({c1d2, 1, Spin::color(1), Spin::dolor(2), 0, 1}, 1) == P("1*z1 + -1*t*z1"));
  CHECK(unfused_weight({c1d2, 2, Spin::color(1), Spin::dolor(2), 4, 5}, 2) == P("1*z2 + -1*t*z2", 2));
  // dolor passes
  CHECK(unfused_weight({c1d2, 1, Spin::dolor(1), Spin::dolor(1), 2, 2}, 1) == P("t^2*z1"));
  CHECK(unfused_weight({{1, 1}, 1, Spin::dolor(2), Spin::dolor(2), 2, 2}, 1) == P("z1"));
  CHECK(unfused_weight({c2d2, 1, Spin::dolor(1), Spin::dolor(1), 2, 2}, 1) == P("t^2"));
  CHECK(unfused_weight({{2, 1}, 1, Spin::dolor(2), Spin::dolor(2), 2, 2}, 1) == P("1"));
  CHECK(unfused_weight({c2d2, 1, Spin::dolor(2), Spin::dolor(2), 2, 2}, 1) == P("1"));
  // color passes
  CHECK(unfused_weight({c1d2, 1, Spin::color(2), Spin::color(2), 3, 3}, 1) == P("1"));
  CHECK(unfused_weight({c2d2, 1, Spin::color(2), Spin::color(2), 3, 3}, 1) == P("z1"));
  CHECK(unfused_weight({c2d2, 1, Spin::color(1), Spin::color(1), 3, 3}, 1) == P("t^3"));
  // inadmissible
  CHECK(unfused_weight({c1d2, 1, Spin::color(1), Spin::color(2), 0, 0}, 1).is_zero());
  CHECK(unfused_weight({c1d2, 1, Spin::dolor(2), Spin::color(1), 0, 0}, 1).is_zero());
  CHECK(unfused_weight({c1d2, 1, Spin::dolor(1), Spin::color(1), 1, 0}, 1).is_zero());
  CHECK(unfused_weight({c1d2, 1, Spin::color(1), Spin::color(1), 1, 2}, 1).is_zero());
}

TEST_CASE("fused completions, small cases") {
  EdgeContent top(1, 1);
  top.add({1, 1});
  // the split, and the color pass a = c with weight z
  auto out = fused_completions(top, Spin::color(1), 1, 1);
  REQUIRE(out.size() == 2);
  CHECK(out[0].left == Spin::dolor(1));
  CHECK(out[0].bottom.empty());
  CHECK(out[0].weight == P("1"));
  CHECK(out[1].left == Spin::color(1));
  CHECK(out[1].bottom == top);
  CHECK(out[1].weight == P("z1"));

  EdgeContent top2(2, 1);
  top2.add({1, 1});
  bool found = false;
  for (const auto& c : fused_completions(top2, Spin::color(1), 1, 1)) {
    if (c.left == Spin::dolor(1) && c.bottom.empty()) {
      found = true;
      CHECK(c.weight == P("1"));
    }
  }
  CHECK(found);

  // empty top: only passes, plus the merge when a dolor enters
  auto p = fused_completions(EdgeContent(1, 1), Spin::color(1), 1, 1);
  REQUIRE(p.size() == 1);
  CHECK(p[0].left == Spin::color(1));
  CHECK(p[0].weight == P("z1"));
  auto m = fused_completions(EdgeContent(1, 1), Spin::dolor(1), 1, 1);
  REQUIRE(m.size() == 2);
  CHECK(m[0].left == Spin::dolor(1));
  CHECK(m[0].weight == P("1"));
  CHECK(m[1].left == Spin::color(1));
  CHECK(m[1].bottom.count({1, 1}) == 1);
  CHECK(m[1].weight == P("z1 + -1*t*z1"));
}

TEST_CASE("fused weight matches the monochrome chain oracle") {
  for (int s = 1; s <= 2; ++s) {
    for (int r = 1; r <= 2; ++r) {
      const auto spins = all_spins(s, r);
      const auto contents = all_contents(s, r, 1);
      int checked = 0;
      for (const auto& top : contents) {
        for (Spin right : spins) {
          auto comps = fused_completions(top, right, 1, 1);
          for (std::size_t k = 1; k < comps.size(); ++k) CHECK(comps[k - 1].bottom <= comps[k].bottom);
          for (Spin left : spins) {
            for (const auto& bottom : contents) {
              FusedConfig cfg{1, left, right, top, bottom};
              const LaurentPoly w = fused_weight(cfg, 1);
              CHECK(w == chain_oracle(cfg, s, r, 1));
              if (!w.is_zero()) {
                CHECK(conserves(cfg, s, r));
                CHECK(w.is_t_polynomial());
                bool listed = false;
                for (const auto& c : comps) listed |= c.left == left && c.bottom == bottom && c.weight == w;
                CHECK(listed);
                ++checked;
              }
            }
          }
        }
      }
      CHECK(checked > 0);
    }
  }
}

TEST_CASE("single boson: fused equals unfused") {
  const auto spins = all_spins(1, 1);
  for (int n = 0; n <= 3; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (Spin l : spins) {
        for (Spin rt : spins) {
          EdgeContent top(1, 1), bottom(1, 1);
          top.set({1, 1}, n);
          bottom.set({1, 1}, m);
          CHECK(fused_weight({1, l, rt, top, bottom}, 1) == unfused_weight({{1, 1}, 1, l, rt, n, m}, 1));
        }
      }
    }
  }
}

TEST_CASE("fused R table") {
  const int nz = 2;
  const Spin c1 = Spin::color(1), c2 = Spin::color(2), d1 = Spin::dolor(1), d2 = Spin::dolor(2);
  auto R = [&](Spin nw, Spin sw, Spin ne, Spin se) { return fused_R_weight({nw, sw, ne, se, 1, 2}, nz); };
  CHECK(R(c1, c1, c1, c1) == P("z1 + -1*t*z2", nz));
  CHECK(R(d2, d2, d2, d2) == P("z1 + -1*t*z2", nz));
  // cross: sw = ne = a, nw = se = b
  CHECK(R(c2, c1, c1, c2) == P("t*z1 + -1*t*z2", nz));
  CHECK(R(c1, c2, c2, c1) == P("z1 + -1*z2", nz));
  CHECK(R(d1, d2, d2, d1) == P("t*z1 + -1*t*z2", nz));
  CHECK(R(d2, d1, d1, d2) == P("z1 + -1*z2", nz));
  CHECK(R(c1, d1, d1, c1) == P("t*z1 + -1*t*z2", nz));
  CHECK(R(d1, c1, c1, d1) == P("z1 + -1*z2", nz));
  // pass: nw = ne = b, sw = se = a
  CHECK(R(d1, c1, d1, c1) == P("z1 + -1*t*z1", nz));
  CHECK(R(c1, d1, c1, d1) == P("z2 + -1*t*z2", nz));
  CHECK(R(c2, c1, c2, c1) == P("z1 + -1*t*z1", nz));
  CHECK(R(c1, c2, c1, c2) == P("z2 + -1*t*z2", nz));
  // color count not conserved
  CHECK(R(c1, c1, c2, c1).is_zero());
  CHECK(R(c1, c2, c2, c2).is_zero());
}

TEST_CASE("unfused R table") {
  const int nz = 2;
  auto R = [&](Spin nw, Spin sw, Spin ne, Spin se, BosonType cd) {
    return unfused_R_weight({nw, sw, ne, se, 1, 2}, cd, nz);
  };
  const Spin c1 = Spin::color(1), c2 = Spin::color(2), c3 = Spin::color(3), d1 = Spin::dolor(1);
  CHECK(R(c2, c2, c2, c2, {2, 1}) == P("z1 + -1*t*z2", nz));
  // horizontal color pass with c <= a < b
  CHECK(R(c3, c2, c3, c2, {2, 1}) == P("z1 + -1*t*z1", nz));
  // dolors on top, colors below, a >= c > c1, x != d
  CHECK(R(d1, c3, d1, c3, {2, 2}) == P("z1^2*z2^-1 + -1*t*z1^2*z2^-1", nz));
  CHECK(R(c1, c1, c2, c1, {1, 1}).is_zero());
}

TEST_CASE("fused and unfused R agree at the minimal boson") {
  for (int s = 1; s <= 3; ++s) {
    for (int r = 1; r <= 3; ++r) {
      const auto spins = all_spins(s, r);
      for (Spin a : spins)
        for (Spin b : spins)
          for (Spin c : spins)
            for (Spin d : spins) {
              RConfig cfg{a, b, c, d, 1, 2};
              CHECK(fused_R_weight(cfg, 2) == unfused_R_weight(cfg, {1, r}, 2));
            }
    }
  }
}

TEST_CASE("embed_row") {
  CHECK(embed_row(P("t*z1^2 + 3"), 3, 3) == P("t*z3^2 + 3", 3));
  CHECK(embed_row(P("z1"), 1, 2) == P("z1", 2));
}
