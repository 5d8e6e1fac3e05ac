#include <algorithm>

#include "doctest.h"
#include "lclab/hyperspace.hpp"
#include "lclab/instances.hpp"

using namespace lclab;

namespace {

HFinite hf(std::vector<int> ids, bool with_inf) {
  std::vector<StarPoint> pts;
  for (int id : ids) pts.push_back(StarPoint::of(id));
  if (with_inf) pts.push_back(StarPoint::infinity());
  return HFinite::of(std::move(pts));
}

}  // namespace

TEST_CASE("hausdorff distance examples") {
  OnePointSpace zs(discrete_z_space());
  CHECK(hausdorff_distance(hf({0}, true), hf({}, true), zs) == Rational(1, 4));
  CHECK(hausdorff_distance(hf({0, discrete_index(1)}, false), hf({0}, false), zs) ==
        Rational(3, 8));
  CHECK(hausdorff_distance(hf({0}, false), hf({0}, false), zs) == 0);
}

TEST_CASE("hausdorff distance agrees with the brute-force max-min") {
  OnePointSpace zs(discrete_z_space());
  std::vector<StarPoint> pool = {StarPoint::infinity(), StarPoint::of(0),
                                 StarPoint::of(discrete_index(1)),
                                 StarPoint::of(discrete_index(-1)),
                                 StarPoint::of(discrete_index(2)),
                                 StarPoint::of(discrete_index(-2))};
  auto subset = [&](unsigned mask) {
    std::vector<StarPoint> pts;
    for (size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) pts.push_back(pool[i]);
    return HFinite::of(std::move(pts));
  };
  auto brute = [&](const HFinite& a, const HFinite& b) {
    Rational m = 0;
    for (const StarPoint& p : a.pts) {
      Rational best = zs.star_dist(p, b.pts[0]);
      for (const StarPoint& q : b.pts) best = rat_min(best, zs.star_dist(p, q));
      m = rat_max(m, best);
    }
    for (const StarPoint& q : b.pts) {
      Rational best = zs.star_dist(q, a.pts[0]);
      for (const StarPoint& p : a.pts) best = rat_min(best, zs.star_dist(q, p));
      m = rat_max(m, best);
    }
    return m;
  };
  for (unsigned ma = 1; ma < 64; ma += 7)
    for (unsigned mb = 1; mb < 64; mb += 5) {
      HFinite a = subset(ma), b = subset(mb);
      CHECK(hausdorff_distance(a, b, zs) == brute(a, b));
    }
}

TEST_CASE("hausdorff metric axioms on sampled finite sets") {
  OnePointSpace zs(discrete_z_space());
  std::vector<HFinite> sets = {hf({0}, false), hf({0}, true), hf({1, 2}, false),
                               hf({0, 3}, true), hf({}, true)};
  for (const HFinite& a : sets)
    for (const HFinite& b : sets) {
      CHECK(hausdorff_distance(a, b, zs) == hausdorff_distance(b, a, zs));
      CHECK((hausdorff_distance(a, b, zs) == 0) == (a.pts == b.pts));
      for (const HFinite& c : sets)
        CHECK(hausdorff_distance(a, b, zs) <=
              hausdorff_distance(a, c, zs) + hausdorff_distance(c, b, zs));
    }
}

TEST_CASE("hyper cover counts and coverage") {
  OnePointSpace zs(discrete_z_space());
  HyperCover hc(zs, 1);
  size_t m = hc.centers().size();
  CHECK(hc.count() == (BigInt(1) << m) - 1);
  CHECK(hc.count() == 31);
  CHECK(hc.radius() == Rational(1, 2));
  HyperCover hc2(zs, 2);
  CHECK(hc2.count() == (BigInt(1) << hc2.centers().size()) - 1);
  // probe sets are within the cover radius of some listed centre
  CHECK(hc2.covers(hf({}, true)));
  CHECK(hc2.covers(hf({0}, true)));
  CHECK(hc2.covers(hf({0, discrete_index(1), discrete_index(-1)}, true)));
  auto c1 = hc2.center_at(1);
  REQUIRE(c1);
  CHECK(c1->pts.size() == 1);
}

TEST_CASE("hyperspace points of compact sets") {
  OnePointSpace zs(discrete_z_space());
  StarCompactName just_inf{[](int n) {
    return std::vector<StarBall>{StarBall{StarPoint::infinity(), pow2(-n)}};
  }};
  HyperName p = to_hyper_point(just_inf, zs);
  for (int n = 2; n <= 8; ++n) {
    HFinite a = p.at(n);
    CHECK(hausdorff_distance(a, hf({}, true), zs) < pow2(-n));
  }

  StarCompactName zero_inf{[](int n) {
    return std::vector<StarBall>{StarBall{StarPoint::of(0), pow2(-n)},
                                 StarBall{StarPoint::infinity(), pow2(-n)}};
  }};
  HyperName q = to_hyper_point(zero_inf, zs);
  for (int n = 2; n <= 8; ++n)
    CHECK(hausdorff_distance(q.at(n), hf({0}, true), zs) < pow2(-n));

  // the even integers together with infinity
  StarCompactName evens{[](int n) {
    std::vector<StarBall> out{StarBall{StarPoint::infinity(), pow2(-n)}};
    for (int k = -(n + 2); k <= n + 2; ++k)
      if ((k % 2) == 0) out.push_back(StarBall{StarPoint::of(discrete_index(k)), pow2(-n)});
    return out;
  }};
  HyperName e = to_hyper_point(evens, zs);
  for (int n = 2; n <= 6; ++n) {
    HFinite a = e.at(n);
    // every approximant point is close to a true member
    std::vector<int> members{0};
    for (int k = 1; k <= n + 4; ++k) {
      members.push_back(discrete_index(2 * k));
      members.push_back(discrete_index(-2 * k));
    }
    HFinite truth = hf(members, true);
    CHECK(hausdorff_distance(a, truth, zs) < pow2(-n));
  }
}

TEST_CASE("closed-set sides recovered from a hyperspace point") {
  OnePointSpace zs(discrete_z_space());
  HFinite target = hf({0}, true);
  HyperName p{[&](int) { return target; }};
  StarClosedName cn = from_hyper_point(p, zs);

  bool pos_zero = false;
  for (std::int64_t s = 0; s < 20000 && !pos_zero; ++s) {
    auto b = cn.positive(s);
    if (b && !b->center.is_inf && b->center.id == 0 && b->radius <= Rational(1, 4))
      pos_zero = true;
  }
  CHECK(pos_zero);

  // B(x_1, 1/16) avoids {x_0, inf}: d*(x_1, 0) = 3/8, d*(x_1, inf) = 1/8
  bool neg_hit = false;
  for (std::int64_t s = 0; s < 200000 && !neg_hit; ++s) {
    auto b = cn.negative(s);
    if (b && !b->center.is_inf && b->center.id == discrete_index(1) &&
        b->radius >= Rational(1, 16))
      neg_hit = true;
  }
  CHECK(neg_hit);

  // soundness audit of both streams against the exact set
  for (std::int64_t s = 0; s < 4000; ++s) {
    if (auto b = cn.positive(s))
      CHECK(star_dist_to_set(b->center, target, zs) < b->radius);
    if (auto b = cn.negative(s))
      CHECK(star_dist_to_set(b->center, target, zs) >= b->radius);
  }
}

TEST_CASE("classify_ball semi-decision") {
  OnePointSpace zs(discrete_z_space());
  HFinite target = hf({0}, true);
  HyperName p{[&](int) { return target; }};
  CHECK(classify_ball(p, StarBall{StarPoint::of(0), Rational(1, 8)}, zs, 24) ==
        BallClass::Meets);
  CHECK(classify_ball(p, StarBall{StarPoint::of(discrete_index(1)), Rational(1, 16)}, zs,
                      24) == BallClass::Misses);
  // boundary radius stays undecided
  CHECK(classify_ball(p, StarBall{StarPoint::of(discrete_index(1)), Rational(1, 8)}, zs,
                      12) == BallClass::Undecided);
}

TEST_CASE("clopen split search") {
  const Space& z = discrete_z_space();
  CompactName two_points{[](int n) {
    return std::vector<Ball>{Ball{0, pow2(-n)}, Ball{discrete_index(1), pow2(-n)}};
  }};
  SplitReport sr = clopen_split_search(two_points, z, 100000);
  CHECK(sr.found);
  CHECK(!sr.u.empty());
  CHECK(!sr.v.empty());

  const Space& r = reals_space();
  CompactName interval{[&r](int n) {
    std::vector<Ball> out;
    int m = 1 << n;
    for (int i = 0; i <= m; ++i)
      out.push_back(Ball{reals_index(r, Rational(i, m)), pow2(-n)});
    return out;
  }};
  SplitReport none = clopen_split_search(interval, r, 2000);
  CHECK(!none.found);
}
