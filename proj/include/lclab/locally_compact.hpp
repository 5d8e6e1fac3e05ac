#pragma once

#include <map>
#include <memory>
#include <tuple>

#include "lclab/space.hpp"

namespace lclab {

/// The (K_n, c_n) data of a strongly sigma-compact structure: K_n is a
/// finite union of closed balls, c_n the uniform fattening margin with
/// K_n fattened by c_n still inside K_{n+1}.
class StrongSigmaSequence {
 public:
  explicit StrongSigmaSequence(const Space& sp) : sp_(&sp) {}
  StrongSigmaSequence(const Space& sp, std::vector<std::vector<Ball>> levels,
                      std::vector<Rational> margins)
      : sp_(&sp), levels_(std::move(levels)), margins_(std::move(margins)),
        fixed_(true) {}

  const Space& space() const { return *sp_; }
  const std::vector<Ball>& level(int n) const;
  Rational margin(int n) const;

 private:
  const Space* sp_;
  mutable std::vector<std::vector<Ball>> levels_;  // memoized
  mutable std::vector<Rational> margins_;
  bool fixed_ = false;  // derived sequences carry a fixed level range
};

/// The canonical closed-form sequence shipped with the instance.
StrongSigmaSequence sigma_sequence(const Space& sp);

/// The generic construction path: build levels from the neighborhood
/// functional and covers, deriving margins from refinement slacks.
StrongSigmaSequence derive_sigma(const Space& sp, int max_level);

struct LocateResult {
  int level = 0;
  int ball_index = 0;
};

/// Least-level search certifying x strictly inside an open presentation
/// ball of some K_n.
std::optional<LocateResult> locate(const CauchyName& x, const StrongSigmaSequence& ssq,
                                   int max_level = 64);
std::optional<LocateResult> locate_special(int id, const StrongSigmaSequence& ssq,
                                           int max_level = 64);

struct ClosedBallNbhd {
  CauchyName center;
  Rational radius;
  CompactName closure;
};

/// Prop. 2.9 style neighborhood: a ball around x whose closed content is
/// compact, with a compact name for it.
ClosedBallNbhd closed_ball_neighborhood(const CauchyName& x, const Space& sp);

/// The proper remetrization delta(x,y) = d(x,y) + |f(x) - f(y)| with
/// f = sum_n min(d(x, K_n)/c_n, 1).
class ProperMetric {
 public:
  explicit ProperMetric(StrongSigmaSequence ssq) : ssq_(std::move(ssq)) {}

  const Space& space() const { return ssq_.space(); }
  const StrongSigmaSequence& sigma() const { return ssq_; }

  Rational f_special(int id) const;                   // exact
  Rational f_name(const CauchyName& x, int prec) const;
  Rational delta_special(int i, int j) const;         // exact
  Rational delta_name(const CauchyName& x, const CauchyName& y, int prec) const;

  /// Identity map between (base, d) and (base, delta) name disciplines.
  CauchyName to_delta_name(const CauchyName& x) const;
  CauchyName from_delta_name(const CauchyName& x_delta) const { return x_delta; }

 private:
  Rational lipschitz_bound(int levels) const;  // sum of 1/c_n below the level
  StrongSigmaSequence ssq_;
  mutable std::map<int, Rational> f_cache_;
};

ProperMetric proper_remetrize(const Space& sp);

struct DeltaBallReport {
  SemiResult status = SemiResult::BudgetExhausted;
  std::vector<int> specials;  // ids within closed delta-distance r
  int containment_level = -1; // K_N certified to contain the delta-ball
};

/// All specials within closed delta-distance r of a special center, exact
/// when the instance has finite special slices of its K_n.
DeltaBallReport delta_ball_finiteness_check(const ProperMetric& pm, int center,
                                            const Rational& r, int budget);

struct BoundedReport {
  bool bounded = false;
  int witness = -1;
  Rational radius;
};

/// Sigma-2 boundedness test for the properly remetrized space: BOUNDED
/// only when an instance certificate exists and survives a budgeted scan.
BoundedReport bounded_test(const ProperMetric& pm, int budget);

}  // namespace lclab
