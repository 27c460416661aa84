#include <map>
#include <set>

#include "bicolor/perm.hpp"
#include "doctest.h"

using namespace bicolor;

namespace {

// Bruhat order from its definition: the transitive closure of u < u t for
// transpositions t with l(u t) > l(u).
std::map<Perm, std::set<Perm>> bruhat_closure(int r) {
  auto perms = all_perms(r);
  std::map<Perm, std::set<Perm>> up;
  for (const auto& u : perms) {
    up[u].insert(u);
    for (int a = 1; a <= r; ++a) {
      for (int b = a + 1; b <= r; ++b) {
        std::vector<int> w = u.one_line();
        std::swap(w[static_cast<std::size_t>(a - 1)], w[static_cast<std::size_t>(b - 1)]);
        Perm v(w);
        if (v.length() > u.length()) up[u].insert(v);
      }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [u, s] : up) {
      std::set<Perm> add;
      for (const auto& v : s) {
        for (const auto& x : up[v]) {
          if (!s.count(x)) add.insert(x);
        }
      }
      if (!add.empty()) {
        s.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }
  return up;
}

}  // namespace

TEST_CASE("group operations") {
  for (const auto& a : all_perms(4)) {
    CHECK(compose(a, a.inverse()).is_identity());
    CHECK(compose(a.inverse(), a).is_identity());
  }
  CHECK(Perm::longest(3).length() == 3);
  CHECK(Perm::longest(3).one_line() == std::vector<int>{3, 2, 1});
  CHECK(Perm::simple(1, 3).length() == 1);
  CHECK_THROWS_AS(Perm::simple(3, 3), IndexError);
  CHECK_THROWS_AS(compose(Perm(3), Perm(4)), DimensionError);
  CHECK_THROWS_AS(Perm(std::vector<int>{1, 1, 2}), InvariantError);
  Perm a({2, 3, 1}), b({1, 3, 2});
  CHECK(compose(a, b).one_line() == std::vector<int>{2, 1, 3});
}

TEST_CASE("descents") {
  for (const auto& w : all_perms(4)) {
    for (int i = 1; i < 4; ++i) {
      Perm s = Perm::simple(i, 4);
      CHECK(w.left_descent(i) == ((s * w).length() < w.length()));
      CHECK(w.right_descent(i) == ((w * s).length() < w.length()));
    }
  }
}

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("()", 3).one_line() == std::vector<int>{1, 2, 3});
  CHECK(parse_cycles("(123)", 3).one_line() == std::vector<int>{2, 3, 1});
  CHECK(parse_cycles("(23)", 3).one_line() == std::vector<int>{1, 3, 2});
  CHECK(parse_cycles("(12)(34)", 4).one_line() == std::vector<int>{2, 1, 4, 3});
  CHECK(parse_cycles("(1 3)", 3).one_line() == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(parse_cycles("(121)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(14)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(12", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("12", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1a)", 3), ParseError);
  CHECK(parse_perm("[2,3,1]", 3) == parse_cycles("(123)", 3));
  CHECK_THROWS_AS(parse_perm("[2,3]", 3), ParseError);
  CHECK_THROWS_AS(parse_perm("[2,2,1]", 3), ParseError);
  for (int r = 1; r <= 4; ++r) {
    for (const auto& w : all_perms(r)) {
      CHECK(parse_cycles(w.to_cycle_string(), r) == w);
      CHECK(parse_perm(w.to_one_line_string(), r) == w);
    }
  }
}

TEST_CASE("bruhat order examples") {
  for (const auto& w : all_perms(3)) CHECK(bruhat_leq(Perm(3), w));
  CHECK(bruhat_leq(parse_cycles("(132)", 3), parse_cycles("(13)", 3)));
  CHECK_FALSE(bruhat_leq(Perm({2, 1, 3}), Perm({1, 3, 2})));
  CHECK_THROWS_AS(bruhat_leq(Perm(3), Perm(4)), DimensionError);
}

TEST_CASE("rank criterion matches the defining closure") {
  for (int r = 1; r <= 4; ++r) {
    auto up = bruhat_closure(r);
    for (const auto& a : all_perms(r)) {
      for (const auto& b : all_perms(r)) {
        bool expected = up[a].count(b) > 0;
        CHECK(bruhat_leq(a, b) == expected);
      }
    }
  }
}

TEST_CASE("bruhat order properties") {
  auto perms = all_perms(4);
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
      if (bruhat_leq(a, b)) CHECK(a.length() <= b.length());
    }
    for (int x = 1; x <= 4; ++x) {
      for (int y = x + 1; y <= 4; ++y) {
        std::vector<int> w = a.one_line();
        std::swap(w[static_cast<std::size_t>(x - 1)], w[static_cast<std::size_t>(y - 1)]);
        CHECK((Perm(w).length() - a.length()) % 2 != 0);
      }
    }
  }
}
