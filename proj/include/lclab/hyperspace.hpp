#pragma once

#include "lclab/onepoint.hpp"

namespace lclab {

/// Non-empty finite set of star specials, canonicalized: sorted with
/// duplicates removed and infinity last.
struct HFinite {
  std::vector<StarPoint> pts;
  static HFinite of(std::vector<StarPoint> pts);
};

/// Fast Cauchy name in the hyperspace: Hausdorff distance to the named
/// closed set is below 2^-n at stage n.
struct HyperName {
  std::function<HFinite(int)> at;
};

/// Exact max-min Hausdorff distance for finite index sets under a given
/// exact metric.
Rational hausdorff_metric(size_t na, size_t nb,
                          const std::function<Rational(size_t, size_t)>& dab);

/// Exact Hausdorff distance between finite star sets.
Rational hausdorff_distance(const HFinite& a, const HFinite& b, const OnePointSpace& ops);

/// Exact distance from a star special to a finite star set.
Rational star_dist_to_set(const StarPoint& p, const HFinite& s, const OnePointSpace& ops);

/// The 2^m - 1 hyperspace balls of radius 2^-n centred at the non-empty
/// subsets of the star_cover(n+1) centres, held lazily.
class HyperCover {
 public:
  HyperCover(const OnePointSpace& ops, int n);
  const std::vector<StarPoint>& centers() const { return centers_; }
  Rational radius() const { return radius_; }
  BigInt count() const;  // 2^m - 1
  /// Is some listed centre within the cover radius of the probe?
  bool covers(const HFinite& probe) const;
  /// Materialize centre #mask (1-based bitmask order), for small pools.
  std::optional<HFinite> center_at(std::uint64_t mask) const;

 private:
  const OnePointSpace* ops_;
  std::vector<StarPoint> centers_;
  Rational radius_;
};

/// Compact set in M* via star-ball covers.
struct StarCompactName {
  std::function<std::vector<StarBall>(int)> cover_at;
};

using StarBallStream = std::function<std::optional<StarBall>(std::int64_t)>;

/// Closed subset of M* with c.e. (balls meeting the set) and co-c.e.
/// (balls inside the complement) sides.
struct StarClosedName {
  StarBallStream positive;
  StarBallStream negative;
};

/// Hyperspace point of a compact set: finite approximants found by a
/// smallest-first subset search over cover centres, with a certified
/// fallback to the full centre set.
HyperName to_hyper_point(const StarCompactName& c, const OnePointSpace& ops);

/// Both sides of the named closed set, dovetailed from the Hausdorff
/// approximations over the pinned star-ball enumeration.
StarClosedName from_hyper_point(const HyperName& p, const OnePointSpace& ops);

enum class BallClass { Meets, Misses, Undecided };

/// Semi-decides how a star ball relates to the set named by p.
BallClass classify_ball(const HyperName& p, const StarBall& b, const OnePointSpace& ops,
                        int budget);

struct SplitReport {
  bool found = false;
  int level = -1;
  std::vector<Ball> u, v;
};

/// Searches cover levels for a non-trivial clopen split with certified
/// positive separation between the two parts.
SplitReport clopen_split_search(const CompactName& k, const Space& sp, long budget);

}  // namespace lclab
