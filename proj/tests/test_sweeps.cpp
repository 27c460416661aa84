#include <doctest.h>

#include "bicolor/sweeps.hpp"

using namespace bicolor;

TEST_CASE("all_systems order and size") {
  const auto sys = all_systems(2, 4, {3, 0});
  REQUIRE(sys.size() == 16);
  CHECK(sys[0].w1.is_identity());
  CHECK(sys[0].w4.is_identity());
  CHECK(!sys[1].w4.is_identity());
  CHECK(!sys[8].w1.is_identity());
  CHECK(spec_label(sys[1]) == "w=((),(),(),(12)) lambda=(3,0) N=4");
}

TEST_CASE("r = 2 sweeps pass for a dominant lambda") {
  const auto sys = all_systems(2, 4, {3, 0});
  const auto tri = sweep_trichotomy(sys, true, 2);
  CHECK(tri.passed());
  CHECK(tri.checked == 16);
  CHECK(tri.counts.at("category NoStates") + tri.counts.at("category Monostatic") +
            tri.counts.at("category General") ==
        16);
  CHECK(sweep_recurrence(sys, 2).passed());
  CHECK(sweep_train(sys, 2).passed());
  CHECK(sweep_solver(sys, 2).passed());
  CHECK(sweep_gt_round_trip(sys, 2).passed());
}

TEST_CASE("reports do not depend on the job count") {
  const auto sys = all_systems(2, 2, {0, 0});
  const auto a = sweep_trichotomy(sys, false, 1);
  const auto b = sweep_trichotomy(sys, false, 4);
  CHECK(a.counts == b.counts);
  CHECK(a.examples == b.examples);
  // repeated parts: some NoStates systems have states
  CHECK(!a.passed());
  CHECK(a.counts.at("NoStates with states") == a.failures);
}
