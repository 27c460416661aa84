#include <doctest.h>

#include <set>

#include "bicolor/errors.hpp"
#include "bicolor/gt.hpp"

using namespace bicolor;

namespace {

Perm p3(const char* s) { return parse_perm(s, 3); }

SystemSpec spec3(int N, std::vector<int> lam, Perm w1, Perm w2, Perm w3, Perm w4) {
  SystemSpec s;
  s.r = 3;
  s.N = N;
  s.lambda = std::move(lam);
  s.w1 = w1;
  s.w2 = w2;
  s.w3 = w3;
  s.w4 = w4;
  return s;
}

// Boundary read off the bijection figure: right c2, c1, c3; left d1, d3, d2;
// top (c2,d1) in column 4, (c3,d3) in column 3, (c1,d2) in column 0.
SystemSpec bijection_figure() { return spec3(5, {4, 3, 0}, p3("(12)"), p3("(23)"), p3("(132)"), p3("(132)")); }

TwoColoredGT bijection_pattern() {
  TwoColoredGT g;
  g.rows = {{{4, 2, 1}, {3, 3, 3}, {0, 1, 2}}, {{3, 3, 3}, {0, 1, 2}}, {{2, 3, 2}}};
  return g;
}

bool has_axiom(const std::vector<GTViolation>& v, int axiom) {
  for (auto& x : v)
    if (x.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_CASE("bijection figure") {
  const SystemSpec s = bijection_figure();
  const TwoColoredGT g = bijection_pattern();
  CHECK(check_axioms(g, 3, 3).empty());
  const State st = pattern_to_state(g, s);
  CHECK_NOTHROW(check_state(st, system_boundary(s)));
  CHECK(state_to_pattern(st, s) == g);
  CHECK(g.values() == std::vector<std::vector<int>>{{4, 3, 0}, {3, 0}, {2}});
  // c3 enters row 3 from the right, turns up at column 2, then runs to column 3 in row 2
  CHECK(st.hspin[2][0] == Spin::color(3));
  CHECK(st.hspin[2][1] == Spin::color(3));
  CHECK(st.hspin[2][2] == Spin::color(3));
  CHECK(st.hspin[2][3] == Spin::dolor(2));
  CHECK(st.hspin[1][3] == Spin::color(3));
  CHECK(st.hspin[0][4] == Spin::color(2));
  const auto states = enumerate_states(s);
  CHECK(std::find(states.begin(), states.end(), st) != states.end());
}

TEST_CASE("axiom checker") {
  TwoColoredGT g = bijection_pattern();

  TwoColoredGT bad = g;
  bad.rows[1][0].value = 5;  // above 4
  CHECK(has_axiom(check_axioms(bad, 3, 3), 0));

  bad = g;
  bad.rows[0][0].value = 3;  // equal values 3, 3 with (c2,d1) after (c3,d3)
  CHECK(has_axiom(check_axioms(bad, 3, 3), 4));

  bad = g;
  bad.rows[2][0].color = 1;  // c1 sits at column 0, right of column 2
  CHECK(has_axiom(check_axioms(bad, 3, 3), 1));

  bad = g;
  bad.rows[1][1].dolor = 1;  // d1 sits at column 4, left of its column 0 and exits in row 1
  CHECK(has_axiom(check_axioms(bad, 3, 3), 2));
  CHECK(has_axiom(check_axioms(bad, 3, 3), 3));

  TwoColoredGT shape = g;
  shape.rows[2].push_back({0, 1, 1});
  CHECK_THROWS_AS(check_axioms(shape, 3, 3), InvariantError);

  TwoColoredGT range = g;
  range.rows[0][2].dolor = 4;
  CHECK(has_axiom(check_axioms(range, 3, 3), 0));
}

TEST_CASE("axioms 5 and 6 on two rows") {
  // one color c1 and two dolors: rank(c1,d2) = 1 < rank(c1,d1) = 2
  TwoColoredGT g;
  g.rows = {{{1, 1, 1}, {0, 1, 2}}, {{1, 1, 1}}};
  CHECK(check_axioms(g, 1, 2).empty());
  TwoColoredGT five;
  five.rows = {{{1, 1, 1}, {0, 1, 2}}, {{1, 1, 2}}};
  CHECK(has_axiom(check_axioms(five, 1, 2), 5));

  // exiting dolor d2 at position 2, exiting color c1 at position 1
  TwoColoredGT six;
  six.rows = {{{1, 1, 1}, {0, 2, 2}}, {{0, 2, 1}}};
  CHECK(has_axiom(check_axioms(six, 2, 2), 6));
}

TEST_CASE("trivial and stateless systems") {
  SystemSpec one;
  one.r = 1;
  one.N = 3;
  one.lambda = {2};
  one.w1 = one.w2 = one.w3 = one.w4 = Perm(1);
  const auto states = enumerate_states(one);
  REQUIRE(states.size() == 1);
  CHECK(state_to_pattern(states[0], one).values() == std::vector<std::vector<int>>{{2}});
  CHECK(enumerate_patterns(one).size() == 1);

  const auto none = spec3(4, {3, 1, 0}, p3("()"), p3("()"), p3("()"), p3("()"));
  CHECK(enumerate_patterns(none).empty());
}

TEST_CASE("pattern_to_state rejects bad patterns") {
  TwoColoredGT g = bijection_pattern();
  g.rows[0][0].value = 3;
  CHECK_THROWS_AS(pattern_to_state(g, bijection_figure()), InvalidPatternError);
  TwoColoredGT short_rows = bijection_pattern();
  short_rows.rows.pop_back();
  CHECK_THROWS_AS(pattern_to_state(short_rows, bijection_figure()), InvalidPatternError);
}

TEST_CASE("three-row figure systems") {
  // caption tuple: one state; boundary read from the drawing: two states
  const auto caption = spec3(3, {2, 2, 0}, p3("(123)"), p3("()"), p3("(12)"), p3("(123)"));
  const auto drawn = spec3(3, {2, 2, 0}, p3("(123)"), p3("()"), p3("(12)"), p3("(13)"));
  CHECK(enumerate_patterns(caption).size() == 1);
  CHECK(count_states(drawn) == 2);
  // one extra pattern re-pairs the bosons of column 2
  CHECK(enumerate_patterns(drawn).size() == 3);
  for (const auto& st : enumerate_states(drawn)) CHECK(check_axioms(state_to_pattern(st, drawn), 3, 3).empty());
}

TEST_CASE("round trip, soundness and over-generation") {
  const auto perms = all_perms(3);
  for (auto [N, lam] : std::vector<std::pair<int, std::vector<int>>>{{5, {4, 2, 0}}, {3, {2, 2, 0}}}) {
    int extra = 0;
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b)
        for (std::size_t c = 0; c < perms.size(); ++c) {
          const auto s = spec3(N, lam, perms[a], perms[b], perms[c], perms[(a + b + c) % 6]);
          std::set<TwoColoredGT> seen;
          for (const auto& st : enumerate_states(s)) {
            const TwoColoredGT g = state_to_pattern(st, s);
            CHECK(check_axioms(g, 3, 3).empty());
            CHECK(pattern_to_state(g, s) == st);
            CHECK(seen.insert(g).second);
          }
          const auto patterns = enumerate_patterns(s);
          for (const auto& g : seen) CHECK(std::binary_search(patterns.begin(), patterns.end(), g));
          extra += static_cast<int>(patterns.size() - seen.size());
        }
    CHECK(extra >= 0);
  }
  // The printed axioms admit a re-pairing that no fused vertex performs.
  const auto s = spec3(3, {2, 1, 0}, p3("()"), p3("(23)"), p3("(13)"), p3("(13)"));
  CHECK(count_states(s) == 0);
  const auto patterns = enumerate_patterns(s);
  REQUIRE(patterns.size() == 1);
  CHECK(patterns[0].rows[1] == std::vector<GTEntry>{{1, 2, 3}, {1, 3, 2}});
}
