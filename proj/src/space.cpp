#include "lclab/space.hpp"

#include <stdexcept>

namespace lclab {

Rational Space::dist_to_union(int x, const std::vector<Ball>& uni) const {
  if (uni.empty()) throw std::invalid_argument("dist_to_union: empty union");
  Rational best = dist_to_closed_ball(x, uni[0]);
  for (size_t i = 1; i < uni.size(); ++i)
    best = rat_min(best, dist_to_closed_ball(x, uni[i]));
  return best;
}

Inclusion formal_inclusion(const Ball& inner, const Ball& outer, const Space& sp) {
  Rational lhs = sp.dist(inner.center, outer.center) + inner.radius;
  return lhs < outer.radius ? Inclusion::Included : Inclusion::NotIncluded;
}

SemiResult ball_member(const CauchyName& x, const Ball& b, const Space& sp, int budget) {
  for (int n = 1; n <= budget; ++n) {
    Rational d = sp.dist(b.center, x.at(n));
    Rational slack = pow2(-n);
    if (d + slack < b.radius) return SemiResult::Confirmed;
    if (d - slack > b.radius) return SemiResult::Refuted;
  }
  return SemiResult::BudgetExhausted;
}

Rational metric_between_names(const CauchyName& x, const CauchyName& y, int prec,
                              const Space& sp) {
  // each name is 2^-(prec+2) close, so the total error is 2^-(prec+1)
  return sp.dist(x.at(prec + 2), y.at(prec + 2));
}

ValidationReport validate_compact_name(const CompactName& k, int n_max,
                                       const std::vector<CauchyName>& probes,
                                       const Space& sp) {
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Ball> cover = k.cover_at(n);
    if (cover.empty())
      return {false, n, "empty cover"};
    for (const Ball& b : cover) {
      if (b.radius <= 0 || b.radius > pow2(-n))
        return {false, n, "radius bound violated at center " + sp.label(b.center)};
    }
    for (size_t p = 0; p < probes.size(); ++p) {
      bool covered = false;
      for (const Ball& b : cover) {
        if (ball_member(probes[p], b, sp, 64) == SemiResult::Confirmed) {
          covered = true;
          break;
        }
      }
      if (!covered)
        return {false, n, "probe " + std::to_string(p) + " not covered"};
    }
  }
  return {true, -1, "PASS"};
}

}  // namespace lclab
