#include "lclab/locally_compact.hpp"

#include <set>
#include <stdexcept>

namespace lclab {

const std::vector<Ball>& StrongSigmaSequence::level(int n) const {
  if (n < 0) throw std::invalid_argument("sigma level must be nonnegative");
  if (fixed_ && size_t(n) >= levels_.size())
    throw std::out_of_range("derived sigma sequence has no such level");
  while (size_t(n) >= levels_.size()) {
    int k = int(levels_.size());
    levels_.push_back(sp_->sigma_level(k));
    margins_.push_back(sp_->sigma_margin(k));
  }
  return levels_[size_t(n)];
}

Rational StrongSigmaSequence::margin(int n) const {
  level(n);
  return margins_[size_t(n)];
}

StrongSigmaSequence sigma_sequence(const Space& sp) { return StrongSigmaSequence(sp); }

std::optional<LocateResult> locate_special(int id, const StrongSigmaSequence& ssq,
                                           int max_level) {
  const Space& sp = ssq.space();
  for (int n = 0; n <= max_level; ++n) {
    const std::vector<Ball>& balls = ssq.level(n);
    for (size_t i = 0; i < balls.size(); ++i)
      if (sp.dist(id, balls[i].center) < balls[i].radius)
        return LocateResult{n, int(i)};
  }
  return std::nullopt;
}

std::optional<LocateResult> locate(const CauchyName& x, const StrongSigmaSequence& ssq,
                                   int max_level) {
  const Space& sp = ssq.space();
  for (int p : {6, 12, 24}) {
    for (int n = 0; n <= max_level; ++n) {
      const std::vector<Ball>& balls = ssq.level(n);
      int a = x.at(p);
      for (size_t i = 0; i < balls.size(); ++i)
        if (sp.dist(a, balls[i].center) + pow2(-p) < balls[i].radius)
          return LocateResult{n, int(i)};
    }
  }
  return std::nullopt;
}

StrongSigmaSequence derive_sigma(const Space& sp, int max_level) {
  std::vector<std::vector<Ball>> levels;
  std::vector<Rational> margins;
  std::vector<Ball> nbhd_closures;

  auto push_unique = [](std::vector<Ball>& v, const Ball& b) {
    for (const Ball& u : v)
      if (u.center == b.center && u.radius == b.radius) return;
    v.push_back(b);
  };

  for (int n = 0; n <= max_level; ++n) {
    auto [b, k] = sp.neighborhood(CauchyName::of_special(n));
    (void)k;
    nbhd_closures.push_back(b);
    if (n == 0) {
      levels.push_back({b});
      margins.push_back(pow2(-2));
      continue;
    }
    std::vector<Ball> cover = sp.cover_of_union(levels[size_t(n - 1)], pow2(-n - 2));
    std::vector<Ball> next;
    for (const Ball& d : nbhd_closures) push_unique(next, d);
    for (const Ball& l : cover) push_unique(next, l);
    levels.push_back(next);

    // refinement slack: the largest dyadic pad each cover ball tolerates
    Rational lmin(1);
    for (const Ball& l : cover) {
      Rational pad = pow2(-n - 10);
      for (int t = n; t <= n + 10; ++t) {
        if (sp.ball_in_union(l, pow2(-t), next)) {
          pad = pow2(-t);
          break;
        }
      }
      lmin = rat_min(lmin, pad);
    }
    Rational c = rat_min(rat_min(lmin, margins.back() / 2), pow2(-n)) / 2;
    margins.push_back(c);
  }
  return StrongSigmaSequence(sp, std::move(levels), std::move(margins));
}

ClosedBallNbhd closed_ball_neighborhood(const CauchyName& x, const Space& sp) {
  auto [b, k] = sp.neighborhood(x);
  return ClosedBallNbhd{CauchyName::of_special(b.center), b.radius, k};
}

Rational ProperMetric::lipschitz_bound(int levels) const {
  Rational sum(0);
  for (int n = 0; n < levels; ++n) sum += Rational(1) / ssq_.margin(n);
  return sum;
}

Rational ProperMetric::f_special(int id) const {
  auto it = f_cache_.find(id);
  if (it != f_cache_.end()) return it->second;
  auto loc = locate_special(id, ssq_);
  if (!loc) throw std::runtime_error("f: locate failed for special " + std::to_string(id));
  const Space& sp = ssq_.space();
  Rational sum(0);
  for (int n = 0; n < loc->level; ++n) {
    Rational rho = sp.dist_to_union(id, ssq_.level(n));
    sum += rat_min(rho / ssq_.margin(n), Rational(1));
  }
  f_cache_.emplace(id, sum);
  return sum;
}

Rational ProperMetric::f_name(const CauchyName& x, int prec) const {
  auto loc = locate(x, ssq_);
  if (!loc) throw std::runtime_error("f: locate failed for name");
  if (loc->level == 0) return Rational(0);
  const Space& sp = ssq_.space();
  const Ball& b = ssq_.level(loc->level)[size_t(loc->ball_index)];
  Rational lip = lipschitz_bound(loc->level);
  for (int p = prec + 2;; ++p) {
    if (lip * pow2(-p) > pow2(-prec)) continue;
    int a = x.at(p);
    if (sp.dist(a, b.center) + pow2(-p) < b.radius) return f_special(a);
    if (p > prec + 80) throw std::runtime_error("f: certification did not stabilize");
  }
}

Rational ProperMetric::delta_special(int i, int j) const {
  return ssq_.space().dist(i, j) + rat_abs(f_special(i) - f_special(j));
}

Rational ProperMetric::delta_name(const CauchyName& x, const CauchyName& y,
                                  int prec) const {
  Rational d = metric_between_names(x, y, prec + 2, ssq_.space());
  Rational fx = f_name(x, prec + 2), fy = f_name(y, prec + 2);
  return d + rat_abs(fx - fy);
}

CauchyName ProperMetric::to_delta_name(const CauchyName& x) const {
  auto loc = locate(x, ssq_);
  if (!loc) throw std::runtime_error("to_delta_name: locate failed");
  Rational lip = lipschitz_bound(loc->level) + 1;
  CauchyName out;
  out.at = [x, lip](int n) {
    int p = n + 1;
    while (lip * pow2(-p) >= pow2(-n)) ++p;
    return x.at(p);
  };
  return out;
}

ProperMetric proper_remetrize(const Space& sp) { return ProperMetric(sigma_sequence(sp)); }

DeltaBallReport delta_ball_finiteness_check(const ProperMetric& pm, int center,
                                            const Rational& r, int budget) {
  const Space& sp = pm.space();
  Rational bound = pm.f_special(center) + r;
  int m = int(rat_floor(bound)) + 1;
  DeltaBallReport rep;
  rep.containment_level = m;
  auto finite = sp.sigma_level_specials(m);
  if (finite) {
    for (int id : *finite)
      if (pm.delta_special(center, id) <= r) rep.specials.push_back(id);
    rep.status = SemiResult::Confirmed;
    return rep;
  }
  for (int id = 0; id <= budget; ++id)
    if (pm.delta_special(center, id) <= r) rep.specials.push_back(id);
  rep.status = SemiResult::BudgetExhausted;
  return rep;
}

BoundedReport bounded_test(const ProperMetric& pm, int budget) {
  auto cert = pm.space().bounded_certificate();
  if (!cert) return BoundedReport{};
  for (int id = 0; id <= budget; ++id)
    if (pm.delta_special(cert->first, id) > cert->second) return BoundedReport{};
  return BoundedReport{true, cert->first, cert->second};
}

}  // namespace lclab
