#include "lclab/onepoint.hpp"

#include <stdexcept>

#include "lclab/dovetail.hpp"

namespace lclab {

OnePointSpace::OnePointSpace(const Space& sp) : sp_(&sp), ssq_(sigma_sequence(sp)) {
  if (sp.is_compact())
    throw std::invalid_argument("1-point compactification refused: instance " +
                                sp.key() + " is already compact");
}

Rational OnePointSpace::h_special(int id) const {
  auto it = h_cache_.find(id);
  if (it != h_cache_.end()) return it->second;
  auto loc = locate_special(id, ssq_);
  if (!loc) throw std::runtime_error("h: locate failed for special " + std::to_string(id));
  // terms beyond the locate level are at most c_i <= c_N, attained at N
  Rational best = ssq_.margin(loc->level);
  for (int i = 0; i < loc->level; ++i) {
    Rational term = ssq_.margin(i) - sp_->dist_to_union(id, ssq_.level(i));
    best = rat_max(best, term);
  }
  h_cache_.emplace(id, best);
  return best;
}

Rational OnePointSpace::h_name(const CauchyName& x, int prec) const {
  // h is 1-Lipschitz for the base metric
  return h_special(x.at(prec + 1));
}

Rational OnePointSpace::star_dist(const StarPoint& p, const StarPoint& q) const {
  if (p.is_inf && q.is_inf) return Rational(0);
  if (p.is_inf) return h_special(q.id);
  if (q.is_inf) return h_special(p.id);
  return rat_min(sp_->dist(p.id, q.id), h_special(p.id) + h_special(q.id));
}

Rational OnePointSpace::star_metric(const StarName& p, const StarName& q, int prec) const {
  return star_dist(p.at(prec + 2), q.at(prec + 2));
}

std::vector<StarBall> OnePointSpace::star_cover(int n) const {
  std::vector<StarBall> out;
  out.push_back({StarPoint::infinity(), ssq_.margin(n)});
  auto push_unique = [&out](const StarBall& b) {
    for (const StarBall& u : out)
      if (u.center == b.center && u.radius == b.radius) return;
    out.push_back(b);
  };
  for (int i = 0; i <= n + 1; ++i)
    for (const Ball& b : sp_->cover_of_union(ssq_.level(i), pow2(-n)))
      push_unique({StarPoint::of(b.center), b.radius});
  return out;
}

StarName OnePointSpace::embed(const CauchyName& x) const {
  return StarName{[x](int n) { return StarPoint::of(x.at(n)); }, false};
}

StarName OnePointSpace::infinity_name() const {
  return StarName{[](int) { return StarPoint::infinity(); }, true};
}

OnePointSpace::UnembedResult OnePointSpace::unembed(const StarName& p, int budget) const {
  if (p.canonical_infinity) return {UnembedStatus::IsInfinity, {}};
  for (int k = 1; k <= budget; ++k) {
    StarPoint a = p.at(k);
    if (a.is_inf) continue;
    Rational hl = h_special(a.id) - pow2(-k);
    if (hl <= 0) continue;
    // separation d*(p, inf) >= hl > 0 certified; inside that margin the
    // star metric agrees with the base metric
    StarName q = p;
    CauchyName out;
    out.at = [this, q, hl](int m) {
      int t = m;
      while (pow2(-t) > hl) ++t;
      StarPoint s = q.at(t);
      if (s.is_inf) throw std::runtime_error("unembed: name escaped to infinity");
      return s.id;
    };
    return {UnembedStatus::Ok, out};
  }
  return {UnembedStatus::BudgetExhausted, {}};
}

StarPoint OnePointSpace::star_special(std::uint64_t k) const {
  if (k == 0) return StarPoint::infinity();
  return StarPoint::of(int(k - 1));
}

StarBall OnePointSpace::star_ball(std::uint64_t m) const {
  auto [c, j] = unpair_code(m);
  return StarBall{star_special(c), pow2(-int(j))};
}

std::string OnePointSpace::label(const StarPoint& p) const {
  return p.is_inf ? "inf" : sp_->label(p.id);
}

std::optional<StarPoint> OnePointSpace::parse(const std::string& s) const {
  if (s == "inf" || s == "infinity") return StarPoint::infinity();
  auto id = sp_->parse_point(s);
  if (!id) return std::nullopt;
  return StarPoint::of(*id);
}

}  // namespace lclab
