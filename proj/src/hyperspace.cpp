#include "lclab/hyperspace.hpp"

#include <algorithm>
#include <stdexcept>

#include "lclab/dovetail.hpp"

namespace lclab {

HFinite HFinite::of(std::vector<StarPoint> pts) {
  if (pts.empty()) throw std::invalid_argument("HFinite: empty set");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return HFinite{std::move(pts)};
}

Rational hausdorff_metric(size_t na, size_t nb,
                          const std::function<Rational(size_t, size_t)>& dab) {
  Rational best(0);
  for (size_t i = 0; i < na; ++i) {
    Rational m = dab(i, 0);
    for (size_t j = 1; j < nb; ++j) m = rat_min(m, dab(i, j));
    best = rat_max(best, m);
  }
  for (size_t j = 0; j < nb; ++j) {
    Rational m = dab(0, j);
    for (size_t i = 1; i < na; ++i) m = rat_min(m, dab(i, j));
    best = rat_max(best, m);
  }
  return best;
}

Rational hausdorff_distance(const HFinite& a, const HFinite& b, const OnePointSpace& ops) {
  auto d = [&](size_t i, size_t j) { return ops.star_dist(a.pts[i], b.pts[j]); };
  return hausdorff_metric(a.pts.size(), b.pts.size(), d);
}

Rational star_dist_to_set(const StarPoint& p, const HFinite& s, const OnePointSpace& ops) {
  Rational m = ops.star_dist(p, s.pts[0]);
  for (size_t i = 1; i < s.pts.size(); ++i) m = rat_min(m, ops.star_dist(p, s.pts[i]));
  return m;
}

HyperCover::HyperCover(const OnePointSpace& ops, int n) : ops_(&ops), radius_(pow2(-n)) {
  for (const StarBall& b : ops.star_cover(n + 1)) {
    bool seen = false;
    for (const StarPoint& c : centers_)
      if (c == b.center) {
        seen = true;
        break;
      }
    if (!seen) centers_.push_back(b.center);
  }
}

BigInt HyperCover::count() const {
  return (BigInt(1) << centers_.size()) - 1;
}

bool HyperCover::covers(const HFinite& probe) const {
  // greedy: if any subset works, the nearest-centre subset works
  std::vector<size_t> chosen;
  for (const StarPoint& p : probe.pts) {
    size_t best = 0;
    Rational bd = ops_->star_dist(p, centers_[0]);
    for (size_t i = 1; i < centers_.size(); ++i) {
      Rational d = ops_->star_dist(p, centers_[i]);
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    if (bd > radius_) return false;
    chosen.push_back(best);
  }
  HFinite s = HFinite::of([&] {
    std::vector<StarPoint> pts;
    for (size_t i : chosen) pts.push_back(centers_[i]);
    return pts;
  }());
  return hausdorff_distance(s, probe, *ops_) <= radius_;
}

std::optional<HFinite> HyperCover::center_at(std::uint64_t mask) const {
  if (centers_.size() > 20 || mask == 0 || mask >= (std::uint64_t(1) << centers_.size()))
    return std::nullopt;
  std::vector<StarPoint> pts;
  for (size_t i = 0; i < centers_.size(); ++i)
    if ((mask >> i) & 1) pts.push_back(centers_[i]);
  return HFinite::of(std::move(pts));
}

namespace {

std::vector<StarPoint> dedup_centers(const std::vector<StarBall>& cover) {
  std::vector<StarPoint> out;
  for (const StarBall& b : cover) {
    bool seen = false;
    for (const StarPoint& c : out)
      if (c == b.center) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(b.center);
  }
  return out;
}

// Upper bound on the Hausdorff distance between the finite set d and the
// compact set presented by cover.
Rational hausdorff_upper(const std::vector<StarPoint>& d,
                         const std::vector<StarBall>& cover, const OnePointSpace& ops) {
  Rational best(0);
  for (const StarPoint& p : d) {
    Rational m = ops.star_dist(p, cover[0].center) + cover[0].radius;
    for (size_t j = 1; j < cover.size(); ++j)
      m = rat_min(m, ops.star_dist(p, cover[j].center) + cover[j].radius);
    best = rat_max(best, m);
  }
  for (const StarBall& b : cover) {
    Rational m = ops.star_dist(b.center, d[0]);
    for (size_t i = 1; i < d.size(); ++i) m = rat_min(m, ops.star_dist(b.center, d[i]));
    best = rat_max(best, m + b.radius);
  }
  return best;
}

}  // namespace

HyperName to_hyper_point(const StarCompactName& c, const OnePointSpace& ops) {
  const OnePointSpace* o = &ops;
  auto cov = c.cover_at;
  return HyperName{[o, cov](int n) {
    std::vector<StarBall> cover = cov(n + 2);
    if (cover.empty()) throw std::runtime_error("to_hyper_point: empty cover");
    std::vector<StarPoint> pool = dedup_centers(cover);
    Rational threshold = pow2(-n) - pow2(-n - 2);
    if (pool.size() <= 12) {
      // subsets in increasing size, then lexicographic on pool indices
      std::uint64_t full = (std::uint64_t(1) << pool.size()) - 1;
      for (size_t size = 1; size <= pool.size(); ++size) {
        for (std::uint64_t mask = 1; mask <= full; ++mask) {
          if (size_t(__builtin_popcountll(mask)) != size) continue;
          std::vector<StarPoint> pts;
          for (size_t i = 0; i < pool.size(); ++i)
            if ((mask >> i) & 1) pts.push_back(pool[i]);
          if (hausdorff_upper(pts, cover, *o) <= threshold)
            return HFinite::of(std::move(pts));
        }
      }
    }
    // the full centre set always certifies: both max-min bounds stay
    // within the cover radius 2^-(n+2)
    return HFinite::of(pool);
  }};
}

BallClass classify_ball(const HyperName& p, const StarBall& b, const OnePointSpace& ops,
                        int budget) {
  for (int m = 1; m <= budget; ++m) {
    HFinite d = p.at(m);
    Rational dist = star_dist_to_set(b.center, d, ops);
    Rational slack = pow2(-m);
    if (dist + slack < b.radius) return BallClass::Meets;
    if (dist - slack > b.radius) return BallClass::Misses;
  }
  return BallClass::Undecided;
}

StarClosedName from_hyper_point(const HyperName& p, const OnePointSpace& ops) {
  const OnePointSpace* o = &ops;
  auto probe = [o, p](std::int64_t slot, bool positive) -> std::optional<StarBall> {
    auto [ball_idx, stage] = unpair_code(std::uint64_t(slot));
    int m = int(stage % 24) + 1;
    StarBall b = o->star_ball(ball_idx);
    HFinite d = p.at(m);
    Rational dist = star_dist_to_set(b.center, d, *o);
    if (positive && dist + pow2(-m) < b.radius) return b;
    if (!positive && dist - pow2(-m) > b.radius) return b;
    return std::nullopt;
  };
  StarClosedName out;
  out.positive = [probe](std::int64_t s) { return probe(s, true); };
  out.negative = [probe](std::int64_t s) { return probe(s, false); };
  return out;
}

SplitReport clopen_split_search(const CompactName& k, const Space& sp, long budget) {
  long spent = 0;
  for (int level = 0;; ++level) {
    std::vector<Ball> cover = k.cover_at(level);
    size_t n = cover.size();
    // union-find over balls; join unless certifiably separated
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<size_t(size_t)> find = [&](size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) {
        ++spent;
        Rational d = sp.dist(cover[i].center, cover[j].center);
        if (!(d > cover[i].radius + cover[j].radius)) parent[find(i)] = find(j);
      }
    size_t root0 = find(0);
    bool split = false;
    SplitReport rep;
    for (size_t i = 0; i < n; ++i) {
      if (find(i) == root0)
        rep.u.push_back(cover[i]);
      else {
        rep.v.push_back(cover[i]);
        split = true;
      }
    }
    if (split) {
      rep.found = true;
      rep.level = level;
      return rep;
    }
    if (spent >= budget) return SplitReport{};
  }
}

}  // namespace lclab
