// Acceptance suite: one verdict line per criterion, exit 0 only when every
// requested criterion passes. An optional argument runs a single criterion.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lclab/chabauty.hpp"
#include "lclab/hyperspace.hpp"
#include "lclab/instances.hpp"
#include "lclab/locally_compact.hpp"
#include "lclab/meetgroupoid.hpp"
#include "lclab/simplegroup.hpp"

using namespace lclab;

namespace {

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("LCLAB_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
    }
  }
  return 20251234ULL;
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// 1. Star-metric axioms on 200 seeded triples at precision 10.
Verdict criterion1() {
  Verdict v;
  std::mt19937_64 rng(seed_from_env());
  for (const char* key : {"discrete-z", "reals"}) {
    OnePointSpace ops(space_registry(key));
    bool exact = std::string(key) == "discrete-z";
    auto name_of = [&](std::uint64_t k) {
      StarPoint p = ops.star_special(k);
      return p.is_inf ? ops.infinity_name() : ops.embed(CauchyName::of_special(p.id));
    };
    for (int t = 0; t < 200; ++t) {
      StarName a = name_of(rng() % 20), b = name_of(rng() % 20), c = name_of(rng() % 20);
      Rational ab = ops.star_metric(a, b, 10), ba = ops.star_metric(b, a, 10);
      if (exact ? (ab != ba) : (rat_abs(ab - ba) > pow2(-8)))
        v.fail(std::string(key) + ": symmetry defect at triple " + std::to_string(t));
      Rational ac = ops.star_metric(a, c, 10), cb = ops.star_metric(c, b, 10);
      if (ab > ac + cb + pow2(-8))
        v.fail(std::string(key) + ": triangle defect at triple " + std::to_string(t));
    }
  }
  if (v.pass) v.detail = "200 triples per instance, prec 10, triangle slack 2^-8";
  return v;
}

// 2. Sigma-sequence contract and locate certificates.
Verdict criterion2() {
  Verdict v;
  for (const char* key : {"discrete-z", "reals"}) {
    const Space& sp = space_registry(key);
    StrongSigmaSequence ssq = sigma_sequence(sp);
    for (int n = 0; n <= 8; ++n) {
      if (ssq.margin(n) > pow2(-n))
        v.fail(std::string(key) + ": margin bound fails at level " + std::to_string(n));
      for (const Ball& b : ssq.level(n))
        if (!sp.ball_in_union(b, ssq.margin(n), ssq.level(n + 1)))
          v.fail(std::string(key) + ": fattened inclusion fails at level " +
                 std::to_string(n));
    }
    for (int id = 0; id < 20; ++id) {
      auto loc = locate_special(id, ssq);
      if (!loc) {
        v.fail(std::string(key) + ": locate fails for special " + std::to_string(id));
        continue;
      }
      const Ball& b = ssq.level(loc->level)[size_t(loc->ball_index)];
      if (sp.dist(id, b.center) >= b.radius)
        v.fail(std::string(key) + ": locate certificate not strict for special " +
               std::to_string(id));
    }
  }
  if (v.pass) v.detail = "levels 0..8 included with margin, 20 probes located";
  return v;
}

// 3. Escape bound h(x) <= c_{n+1} < c_n outside K_{n+1} on discrete z.
Verdict criterion3() {
  Verdict v;
  const Space& z = discrete_z_space();
  OnePointSpace ops(z);
  for (int id = 0; id < 50; ++id)
    for (int n = 0; n <= 6; ++n) {
      if (z.special_in_sigma(id, n + 1)) continue;
      Rational h = ops.star_dist(StarPoint::of(id), StarPoint::infinity());
      if (h > z.sigma_margin(n + 1))
        v.fail("escape bound fails for special " + std::to_string(id) + " at level " +
               std::to_string(n));
      if (z.sigma_margin(n + 1) >= z.sigma_margin(n))
        v.fail("margins not strictly decreasing at level " + std::to_string(n));
    }
  if (v.pass) v.detail = "exhaustive over 50 specials and levels 0..6";
  return v;
}

// 4. star_cover(n) covers 20 probes including infinity, slack 2^-(n+2).
Verdict criterion4() {
  Verdict v;
  for (const char* key : {"discrete-z", "reals"}) {
    OnePointSpace ops(space_registry(key));
    for (int n = 0; n <= 8; ++n) {
      auto cov = ops.star_cover(n);
      for (std::uint64_t k = 0; k < 20; ++k) {
        StarPoint p = ops.star_special(k);
        bool in = false;
        for (const StarBall& b : cov)
          if (ops.star_dist(p, b.center) < b.radius + pow2(-n - 2)) {
            in = true;
            break;
          }
        if (!in)
          v.fail(std::string(key) + ": star special " + std::to_string(k) +
                 " uncovered at level " + std::to_string(n));
      }
    }
  }
  if (v.pass) v.detail = "20 star probes covered for n <= 8 on both instances";
  return v;
}

// 5. Hausdorff distance equals the brute-force max-min on 3969 pairs.
Verdict criterion5() {
  Verdict v;
  OnePointSpace ops(discrete_z_space());
  std::vector<StarPoint> pool = {StarPoint::infinity(),
                                 StarPoint::of(discrete_index(0)),
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
  int checked = 0;
  for (unsigned ma = 1; ma < 64; ++ma)
    for (unsigned mb = 1; mb < 64; ++mb) {
      HFinite a = subset(ma), b = subset(mb);
      Rational brute = 0;
      for (const StarPoint& p : a.pts) {
        Rational best = ops.star_dist(p, b.pts[0]);
        for (const StarPoint& q : b.pts) best = rat_min(best, ops.star_dist(p, q));
        brute = rat_max(brute, best);
      }
      for (const StarPoint& q : b.pts) {
        Rational best = ops.star_dist(q, a.pts[0]);
        for (const StarPoint& p : a.pts) best = rat_min(best, ops.star_dist(q, p));
        brute = rat_max(brute, best);
      }
      if (hausdorff_distance(a, b, ops) != brute)
        v.fail("mismatch at masks " + std::to_string(ma) + "," + std::to_string(mb));
      ++checked;
    }
  if (v.pass) v.detail = std::to_string(checked) + " subset pairs, exact agreement";
  return v;
}

// 6. Embedded subgroup points classify the 50 smallest star balls exactly.
Verdict criterion6() {
  Verdict v;
  const Group& g = group_registry("discrete-z");
  OnePointSpace ops(g.space());
  for (int k : {0, 2, 1}) {
    HyperName raw = embed_closed_subgroup(discrete_subgroup_closed_name(k), g, ops);
    auto cache = std::make_shared<std::map<int, HFinite>>();
    HyperName h{[raw, cache](int n) {
      auto it = cache->find(n);
      if (it == cache->end()) it = cache->emplace(n, raw.at(n)).first;
      return it->second;
    }};
    auto member = [&](const StarPoint& p) {
      if (p.is_inf) return true;
      BigInt val = discrete_value(p.id);
      return k == 0 ? val == 0 : val % k == 0;
    };
    auto exact_dist = [&](const StarPoint& p) {
      // truncated scan is exact: members beyond the window are at star
      // distance >= min(base distance, h(p) + h(member)) >= d*(p, inf)
      Rational best = ops.star_dist(p, StarPoint::infinity());
      for (int id = 0; id < 60; ++id)
        if (member(StarPoint::of(id)))
          best = rat_min(best, ops.star_dist(p, StarPoint::of(id)));
      return best;
    };
    for (std::uint64_t m = 0; m < 50; ++m) {
      StarBall b = ops.star_ball(m);
      Rational d = exact_dist(b.center);
      BallClass got = classify_ball(h, b, ops, 24);
      BallClass want = d < b.radius ? BallClass::Meets
                       : d > b.radius ? BallClass::Misses
                                      : BallClass::Undecided;
      if (want == BallClass::Undecided) {
        if (got == (d < b.radius ? BallClass::Misses : BallClass::Meets))
          v.fail("kZ k=" + std::to_string(k) + ": unsound class at ball " +
                 std::to_string(m));
      } else if (got != want) {
        v.fail("kZ k=" + std::to_string(k) + ": class mismatch at ball " +
               std::to_string(m));
      }
    }
  }
  if (v.pass) v.detail = "{0}, 2Z, Z: 50 smallest star balls classified exactly";
  return v;
}

// 7. Refuter soundness on seeded non-subgroups and silence on subgroups.
Verdict criterion7() {
  Verdict v;
  const Group& g = group_registry("discrete-z");
  OnePointSpace ops(g.space());
  std::mt19937_64 rng(seed_from_env() ^ 0x9e3779b97f4a7c15ULL);
  auto point_set = [&](std::vector<BigInt> vals, bool with_inf) {
    std::vector<StarPoint> pts;
    for (const BigInt& val : vals) pts.push_back(StarPoint::of(discrete_index(val)));
    if (with_inf) pts.push_back(StarPoint::infinity());
    HFinite s = HFinite::of(std::move(pts));
    return HyperName{[s](int) { return s; }};
  };
  std::vector<std::pair<HyperName, std::string>> bad;
  bad.emplace_back(point_set({0, 1}, true), "{0,1,inf}");
  bad.emplace_back(point_set({0, -1}, true), "{0,-1,inf}");
  for (int t = 0; t < 4; ++t) {
    BigInt k = 1 + int(rng() % 8);
    bad.emplace_back(point_set({k, -k}, true), "{k,-k,inf} k=" + k.str());
  }
  for (int t = 0; t < 4; ++t) {
    BigInt k = 1 + int(rng() % 10);
    bad.emplace_back(point_set({0, k}, false), "{0,k} k=" + k.str());
  }
  for (auto& [h, label] : bad) {
    RefuteResult r = refute_subgroup(h, g, ops, 100000);
    if (!r.refuted) v.fail(label + " not refuted within 10^5 steps");
  }
  for (int k : {0, 2, 3, 1}) {
    HyperName h = embed_closed_subgroup(discrete_subgroup_closed_name(k), g, ops);
    RefuteResult r = refute_subgroup(h, g, ops, 1000000);
    if (r.refuted) v.fail("kZ k=" + std::to_string(k) + " wrongly refuted");
  }
  if (v.pass) v.detail = "10 seeded non-subgroups refuted, 4 subgroups silent at 10^6";
  return v;
}

// 8. Finite-injury construction invariants over 200 stages.
Verdict criterion8() {
  Verdict v;
  std::vector<OracleDouble> oracles;
  for (const std::string& n : oracle_names()) oracles.push_back(make_oracle(n));
  RunResult run = run_construction(oracles, 200);
  if (!run.error.empty()) v.fail("construction error: " + run.error);
  for (size_t e = 0; e < run.requirements.size() && v.pass; ++e) {
    const Requirement& req = run.requirements[e];
    if (oracles[e].expects_satisfied) {
      if (req.state != ReqState::Satisfied)
        v.fail(oracles[e].name + " not SATISFIED");
      else if (!diagonalization_witness(req).satisfied)
        v.fail(oracles[e].name + " witness fails verification");
    }
    if (req.init_count > int(e))
      v.fail(oracles[e].name + " injured " + std::to_string(req.init_count) +
             " times, bound " + std::to_string(e));
  }
  for (int s = 0; s + 1 < 200; ++s)
    if (!check_embedding(run, s)) v.fail("embedding fails at stage " + std::to_string(s));
  if (!relations_acyclic(run.st)) v.fail("relation set is cyclic");
  if (!rank_preserved(run.st)) v.fail("rank preservation fails");
  if (v.pass)
    v.detail = "200 stages, 4 oracle doubles, witnesses verified, 199 embeddings";
  return v;
}

// 9. Meet groupoid axioms, with the injected corruption caught.
Verdict criterion9() {
  Verdict v;
  for (int p : {2, 3}) {
    GroupoidReport rep = check_axioms(MeetGroupoid::padic(p), 4);
    if (!rep.pass) v.fail("W(Z_" + std::to_string(p) + ") fails axiom " +
                          std::string(1, rep.axiom));
  }
  auto w = MeetGroupoid::padic(2);
  ProductFn bad = corrupt_product(w, Coset::of(2, 1), Coset::of(2, 1), Coset::of(2, 1));
  GroupoidReport full = check_axioms(w, 4, bad);
  if (full.pass || full.witness.empty()) v.fail("corruption not caught with a witness");
  GroupoidReport gonly = check_axioms(w, 4, bad, 'g');
  if (gonly.pass || gonly.axiom != 'g' || gonly.witness.size() != 4)
    v.fail("meet-compatibility witness quadruple missing");
  if (v.pass)
    v.detail = "W(Z_2), W(Z_3) pass at depth 4; corruption fails axiom '" +
               std::string(1, full.axiom) + "' with witness";
  return v;
}

// 10. Ideal / closed-subgroup correspondence on W(Z_2).
Verdict criterion10() {
  Verdict v;
  auto w = MeetGroupoid::padic(2);
  for (int k = 0; k <= 5; ++k) {
    BigInt mod = BigInt(1) << k;
    IdealSpec j = parse_ideal(w, "avoid-subgroup:" + mod.str());
    IdealReport rep = ideal_kind(w, j, 6);
    if (rep.kind != IdealKind::ClosedSubgroupIdeal && rep.kind != IdealKind::Both)
      v.fail("avoid-subgroup:" + mod.str() + " classified " + ideal_kind_str(rep.kind));
    // the exact subtree of 2^k Z_2: digits clear up to min(level, k)
    std::vector<std::string> want;
    std::vector<std::string> frontier{""};
    for (int lev = 0; lev <= 6; ++lev) {
      std::vector<std::string> next;
      for (const std::string& nd : frontier) {
        if (int(nd.size()) != lev) continue;
        want.push_back(nd);
        next.push_back(nd + "0");
        if (lev >= k) next.push_back(nd + "1");
      }
      frontier = next;
    }
    std::sort(want.begin(), want.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (gamma(w, j, 6) != want)
      v.fail("gamma mismatch for avoid-subgroup:" + mod.str());
  }
  IdealSpec pt = parse_ideal(w, "avoid-point:1");
  IdealReport rep = ideal_kind(w, pt, 4);
  if (rep.kind != IdealKind::Ideal || rep.inversion_closed)
    v.fail("avoid-point:1 not rejected as a subgroup ideal");
  // the decisive triple: two cosets meeting the closed set multiply into
  // a coset that lies entirely in the ideal
  Coset u = Coset::of(4, 1);
  auto prod = w.product(u, u);
  if (pt.member(u) || !prod || *prod != Coset::of(4, 2) || !pt.member(*prod))
    v.fail("witness triple (1 mod 4)(1 mod 4) -> (2 mod 4) fails verification");
  if (v.pass) v.detail = "k <= 5 subtrees exact at depth 6; avoid-point rejected";
  return v;
}

// 11. Proper remetrization contract.
Verdict criterion11() {
  Verdict v;
  std::mt19937_64 rng(seed_from_env() ^ 0x1234abcdULL);
  const Space& z = discrete_z_space();
  ProperMetric pm = proper_remetrize(z);
  for (int t = 0; t < 100; ++t) {
    int i = int(rng() % 40), j = int(rng() % 40);
    if (pm.delta_special(i, j) < z.dist(i, j))
      v.fail("delta below d at pair " + std::to_string(i) + "," + std::to_string(j));
  }
  for (int k = 0; k <= 30; ++k)
    if (pm.f_special(k) != k) v.fail("f defect at special " + std::to_string(k));
  auto ball = delta_ball_finiteness_check(pm, 0, Rational(5, 2), 4096);
  if (ball.specials != std::vector<int>{0, 1})
    v.fail("delta ball of radius 5/2 is not {0, 1}");
  const Space& r = reals_space();
  ProperMetric pr = proper_remetrize(r);
  CauchyName x = CauchyName::of_special(reals_index(r, Rational(1, 3)));
  if (metric_between_names(x, pr.from_delta_name(pr.to_delta_name(x)), 8, r) > pow2(-8))
    v.fail("identity-map round trip exceeds 2^-8");
  if (v.pass) v.detail = "100 seeded pairs, f exact to k=30, ball {0,1}, round trip";
  return v;
}

// 12. Clopen split detector.
Verdict criterion12() {
  Verdict v;
  const Space& z = discrete_z_space();
  CompactName two{[](int n) {
    return std::vector<Ball>{Ball{0, pow2(-n)}, Ball{discrete_index(1), pow2(-n)}};
  }};
  if (!clopen_split_search(two, z, 100000).found) v.fail("2-point space: no split");
  const Space& z2 = z2_space();
  CompactName cantor{[](int n) {
    std::vector<Ball> out;
    int m = 1 << std::min(n + 1, 12);
    for (int id = 0; id < m; ++id) out.push_back(Ball{id, pow2(-n)});
    return out;
  }};
  if (!clopen_split_search(cantor, z2, 100000).found) v.fail("Z_2: no split");
  const Space& r = reals_space();
  CompactName interval{[&r](int n) {
    std::vector<Ball> out;
    int m = 1 << n;
    for (int i = 0; i <= m; ++i)
      out.push_back(Ball{reals_index(r, Rational(i, m)), pow2(-n)});
    return out;
  }};
  if (clopen_split_search(interval, r, 10000).found)
    v.fail("[0,1] presentation: spurious split");
  if (v.pass) v.detail = "SPLIT on 2-point and Z_2, NONE_FOUND on [0,1] at 10^4";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  std::map<int, Verdict (*)()> criteria = {
      {1, criterion1}, {2, criterion2},   {3, criterion3},   {4, criterion4},
      {5, criterion5}, {6, criterion6},   {7, criterion7},   {8, criterion8},
      {9, criterion9}, {10, criterion10}, {11, criterion11}, {12, criterion12}};
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (!criteria.count(only)) {
      std::cerr << "usage: acceptance [1..12]\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& [n, fn] : criteria) {
    if (only && n != only) continue;
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << v.detail
              << "\n";
  }
  return all ? 0 : 1;
}
