#include "lclab/chabauty.hpp"

#include <map>

#include "lclab/instances.hpp"

namespace lclab {

namespace {

bool pure(const StarBall& b, const OnePointSpace& ops) {
  return !b.center.is_inf && b.radius < ops.h_special(b.center.id);
}

std::uint64_t choose(std::uint64_t n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - std::uint64_t(k - i)) / std::uint64_t(i);
  return r;
}

// Tuples of k naturals ordered by total sum, lexicographic within a sum.
std::vector<std::uint64_t> unrank_sum_tuple(std::uint64_t s, int k) {
  std::uint64_t n = 0;
  while (choose(n + std::uint64_t(k), k) <= s) ++n;
  std::uint64_t r = s - (n == 0 ? 0 : choose(n - 1 + std::uint64_t(k), k));
  std::vector<std::uint64_t> out(size_t(k), 0);
  std::uint64_t rest = n;
  for (int i = 0; i < k - 1; ++i) {
    int rem = k - i - 1;
    for (std::uint64_t v = 0;; ++v) {
      std::uint64_t cnt = choose(rest - v + std::uint64_t(rem) - 1, rem - 1);
      if (r < cnt) {
        out[size_t(i)] = v;
        rest -= v;
        break;
      }
      r -= cnt;
    }
  }
  out[size_t(k - 1)] = rest;
  return out;
}

int exponent_of(const Rational& r) {
  for (int e = 0; e <= 64; ++e)
    if (pow2(-e) == r) return e;
  return 64;
}

// Certificate: the slack-fattened exact image ball sits strictly inside v.
std::optional<CounterwitnessTriple> certify(const Group& g, const OnePointSpace& ops,
                                            const StarBall& b, const StarBall& d,
                                            const StarBall& v) {
  if (!pure(b, ops) || !pure(d, ops) || !pure(v, ops)) return std::nullopt;
  Ball gb = g.ball_product(Ball{b.center.id, b.radius},
                           g.ball_inverse(Ball{d.center.id, d.radius}));
  Rational slack = v.radius / 4;
  if (!ops.base().ball_in_union(gb, slack, {Ball{v.center.id, v.radius - slack}}))
    return std::nullopt;
  return CounterwitnessTriple{b, d, v, gb, slack};
}

}  // namespace

CounterwitnessStream enumerate_counterwitnesses(const Group& g, const OnePointSpace& ops) {
  const Group* gp = &g;
  const OnePointSpace* o = &ops;
  return [gp, o](std::int64_t s) -> std::optional<CounterwitnessTriple> {
    // total-size schedule over (center, radius exponent) per ball; pure
    // balls always have radius below 2^-2, so exponents start at 3
    auto t = unrank_sum_tuple(std::uint64_t(s), 6);
    StarBall b{StarPoint::of(int(t[0])), pow2(-int(t[1]) - 3)};
    StarBall d{StarPoint::of(int(t[2])), pow2(-int(t[3]) - 3)};
    StarBall v{StarPoint::of(int(t[4])), pow2(-int(t[5]) - 3)};
    return certify(*gp, *o, b, d, v);
  };
}

RefuteResult refute_subgroup(const HyperName& k, const Group& g, const OnePointSpace& ops,
                             long budget, bool keep_trace) {
  CounterwitnessStream triples = enumerate_counterwitnesses(g, ops);
  std::map<int, HFinite> at_cache;
  auto kat = [&](int m) -> const HFinite& {
    auto it = at_cache.find(m);
    if (it == at_cache.end()) it = at_cache.emplace(m, k.at(m)).first;
    return it->second;
  };
  StarPoint identity = StarPoint::of(g.identity_special());
  RefuteResult res;
  for (long t = 0; t < budget; ++t) {
    res.steps_used = t + 1;
    int ch = int(t % 3);
    std::uint64_t sub = std::uint64_t(t / 3);
    if (ch == 0) {
      std::uint64_t ts = sub / 3;
      int msel = int(sub % 3);
      auto trip = triples(std::int64_t(ts));
      if (!trip) continue;
      int emax = std::max({exponent_of(trip->b.radius), exponent_of(trip->d.radius),
                           exponent_of(trip->v.radius)});
      int m = msel == 0 ? std::min(emax + 2, 24) : msel == 1 ? std::min(emax + 8, 24) : 24;
      const HFinite& p = kat(m);
      Rational err = pow2(-m);
      auto meets = [&](const StarBall& ball) {
        for (const StarPoint& q : p.pts)
          if (ops.star_dist(ball.center, q) + err < ball.radius) return true;
        return false;
      };
      bool separated = true;
      for (const StarPoint& q : p.pts)
        if (!(ops.star_dist(trip->v.center, q) - err > trip->v.radius)) {
          separated = false;
          break;
        }
      bool hit = meets(trip->b) && meets(trip->d) && separated;
      if (keep_trace)
        res.trace.push_back({t, 0, m,
                             "triple slot " + std::to_string(ts) +
                                 (hit ? " refutes" : " fails conditions")});
      if (hit) {
        res.refuted = true;
        res.reason = RefuteReason::Triple;
        res.triple = trip;
        return res;
      }
    } else {
      int m = int(sub % 24) + 1;
      const HFinite& p = kat(m);
      StarPoint probe = ch == 1 ? StarPoint::infinity() : identity;
      Rational mind = ops.star_dist(probe, p.pts[0]);
      for (size_t i = 1; i < p.pts.size(); ++i)
        mind = rat_min(mind, ops.star_dist(probe, p.pts[i]));
      bool hit = mind - pow2(-m) > 0;
      if (keep_trace)
        res.trace.push_back({t, ch, m, hit ? "separation certified" : "no separation"});
      if (hit) {
        res.refuted = true;
        res.reason = ch == 1 ? RefuteReason::MissingInfinity : RefuteReason::MissingIdentity;
        return res;
      }
    }
  }
  return res;
}

namespace {

// Decides special membership from the two sides of a closed name; the
// positive side must list singleton-scale balls centred on members.
std::optional<bool> decide_member(const ClosedName& c, int id, const Space& sp,
                                  int budget) {
  bool pos_hit = false, neg_hit = false;
  for (int s = 0; s < budget; ++s) {
    if (c.positive && !pos_hit) {
      auto b = (*c.positive)(s);
      if (b && b->center == id && b->radius < 1) pos_hit = true;
    }
    if (c.negative && !neg_hit) {
      auto b = c.negative->enumerate(s);
      if (b && sp.dist(id, b->center) < b->radius) neg_hit = true;
    }
    if (pos_hit && neg_hit)
      throw PromiseViolation("closed name puts special " + std::to_string(id) +
                             " on both sides");
  }
  if (pos_hit) return true;
  if (neg_hit) return false;
  return std::nullopt;
}

}  // namespace

HyperName embed_closed_subgroup(const ClosedName& c, const Group& g,
                                const OnePointSpace& ops) {
  const Space* sp = &g.space();
  (void)ops;
  return HyperName{[c, sp](int n) {
    auto ids = sp->sigma_level_specials(n + 2);
    if (!ids)
      throw std::invalid_argument("embed_closed_subgroup needs finite sigma levels");
    std::vector<StarPoint> pts;
    for (int id : *ids) {
      auto m = decide_member(c, id, *sp, 4096);
      if (m && *m) pts.push_back(StarPoint::of(id));
    }
    pts.push_back(StarPoint::infinity());
    return HFinite::of(std::move(pts));
  }};
}

ChabautyComplementName complement_name(const Group& g, const OnePointSpace& ops) {
  const Group* gp = &g;
  const OnePointSpace* o = &ops;
  StarPoint identity = StarPoint::of(g.identity_special());
  return ChabautyComplementName{[gp, o, identity](
                                    std::int64_t s) -> std::optional<HyperBall> {
    int kind = int(s % 3);
    auto t = unrank_sum_tuple(std::uint64_t(s) / 3, 5);
    std::uint64_t mask = t[3] + 1;
    int q = int(t[4]) + 1;
    if (mask >= 4096 || q > 24) return std::nullopt;
    std::vector<StarPoint> pts;
    for (int i = 0; i < 12; ++i)
      if ((mask >> i) & 1) pts.push_back(o->star_special(std::uint64_t(i)));
    HFinite f = HFinite::of(std::move(pts));
    Rational err = pow2(-q);
    if (kind == 0) {
      // canonical pure balls at the decoded centres: half the escape radius
      auto ball_at = [o](std::uint64_t c) {
        int id = int(c);
        return StarBall{StarPoint::of(id), o->h_special(id) / 2};
      };
      auto trip = certify(*gp, *o, ball_at(t[0]), ball_at(t[1]), ball_at(t[2]));
      if (!trip) return std::nullopt;
      auto meets = [&](const StarBall& ball) {
        for (const StarPoint& p : f.pts)
          if (o->star_dist(ball.center, p) + err < ball.radius) return true;
        return false;
      };
      if (!meets(trip->b) || !meets(trip->d)) return std::nullopt;
      for (const StarPoint& p : f.pts)
        if (!(o->star_dist(trip->v.center, p) - err > trip->v.radius))
          return std::nullopt;
      return HyperBall{f, err};
    }
    StarPoint probe = kind == 1 ? StarPoint::infinity() : identity;
    Rational mind = o->star_dist(probe, f.pts[0]);
    for (size_t i = 1; i < f.pts.size(); ++i)
      mind = rat_min(mind, o->star_dist(probe, f.pts[i]));
    if (!(mind - err > 0)) return std::nullopt;
    return HyperBall{f, err};
  }};
}

ClosedName discrete_subgroup_closed_name(const BigInt& k) {
  BallStream positive = [k](std::int64_t s) -> std::optional<Ball> {
    auto t = unrank_sum_tuple(std::uint64_t(s), 2);
    BigInt value = k * discrete_value(int(t[0] % (1u << 20)));
    int id;
    try {
      id = discrete_index(value);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    return Ball{id, pow2(-int(t[1] % 30) - 1)};
  };
  OpenName negative{[k](std::int64_t s) -> std::optional<Ball> {
    if (k == 1) return std::nullopt;  // the whole group has empty complement
    int id = int(s % (1 << 20));
    BigInt value = discrete_value(id);
    bool member = k == 0 ? value == 0 : value % k == 0;
    if (member) return std::nullopt;
    return Ball{id, Rational(1, 2)};
  }};
  return ClosedName{positive, negative};
}

}  // namespace lclab
