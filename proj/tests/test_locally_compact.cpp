#include "doctest.h"
#include "lclab/instances.hpp"
#include "lclab/locally_compact.hpp"

using namespace lclab;

TEST_CASE("sigma sequence invariants on non-compact instances") {
  for (const char* key : {"discrete-z", "reals"}) {
    const Space& sp = space_registry(key);
    StrongSigmaSequence ssq = sigma_sequence(sp);
    for (int n = 0; n <= 8; ++n) {
      CHECK(ssq.margin(n) <= pow2(-n));
      CHECK(ssq.margin(n + 1) <= ssq.margin(n) / 2);
      // every ball of K_n, fattened by c_n, inside the union of K_{n+1}
      for (const Ball& b : ssq.level(n))
        CHECK(sp.ball_in_union(b, ssq.margin(n), ssq.level(n + 1)));
    }
  }
}

TEST_CASE("derived sigma sequence agrees with invariants on discrete z") {
  const Space& z = discrete_z_space();
  StrongSigmaSequence der = derive_sigma(z, 6);
  for (int n = 0; n < 6; ++n) {
    CHECK(der.margin(n) <= pow2(-n));
    for (const Ball& b : der.level(n))
      CHECK(z.ball_in_union(b, der.margin(n), der.level(n + 1)));
  }
  // the canonical levels are exhausted by the derived ones at matching depth
  StrongSigmaSequence canon = sigma_sequence(z);
  for (const Ball& b : canon.level(3)) CHECK(z.ball_in_union(b, 0, der.level(5)));
}

TEST_CASE("locate examples") {
  const Space& z = discrete_z_space();
  StrongSigmaSequence ssq = sigma_sequence(z);
  auto a = locate_special(0, ssq);
  REQUIRE(a);
  CHECK(a->level == 0);
  CHECK(a->ball_index == 0);
  auto b = locate_special(discrete_index(-1), ssq);
  REQUIRE(b);
  CHECK(b->level == 2);
  CHECK(b->ball_index == 2);
  // certification: strictly inside the named presentation ball
  const Ball& bb = ssq.level(b->level)[size_t(b->ball_index)];
  CHECK(z.dist(discrete_index(-1), bb.center) < bb.radius);
}

TEST_CASE("closed ball neighborhoods") {
  const Space& z = discrete_z_space();
  auto nb = closed_ball_neighborhood(CauchyName::of_special(discrete_index(5)), z);
  CHECK(nb.radius == Rational(1, 4));
  CHECK(nb.closure.cover_at(4).size() == 1);
  CHECK(nb.closure.cover_at(4)[0].center == discrete_index(5));
}

TEST_CASE("proper remetrization on discrete z") {
  ProperMetric pm = proper_remetrize(discrete_z_space());
  for (int k = 0; k <= 30; ++k) CHECK(pm.f_special(k) == k);
  CHECK(pm.delta_special(1, 3) == 3);
  CHECK(pm.delta_special(4, 4) == 0);
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) {
      CHECK(pm.delta_special(i, j) >= discrete_z_space().dist(i, j));
      CHECK(pm.delta_special(i, j) == pm.delta_special(j, i));
    }
}

TEST_CASE("delta ball finiteness") {
  ProperMetric pm = proper_remetrize(discrete_z_space());
  auto rep = delta_ball_finiteness_check(pm, 0, Rational(5, 2), 4096);
  CHECK(rep.status == SemiResult::Confirmed);
  CHECK(rep.specials == std::vector<int>{0, 1});
  auto small = delta_ball_finiteness_check(pm, 0, Rational(1, 2), 4096);
  CHECK(small.specials == std::vector<int>{0});
}

TEST_CASE("identity map name round trip under delta") {
  const Space& r = reals_space();
  ProperMetric pm = proper_remetrize(r);
  CauchyName x = CauchyName::of_special(reals_index(r, Rational(1, 3)));
  CauchyName back = pm.from_delta_name(pm.to_delta_name(x));
  CHECK(metric_between_names(x, back, 8, r) <= pow2(-8));
}

TEST_CASE("boundedness test") {
  auto z2 = bounded_test(proper_remetrize(z2_space()), 4096);
  CHECK(z2.bounded);
  CHECK(z2.witness == 0);
  CHECK(z2.radius == 1);
  auto dz = bounded_test(proper_remetrize(discrete_z_space()), 4096);
  CHECK(!dz.bounded);
}
