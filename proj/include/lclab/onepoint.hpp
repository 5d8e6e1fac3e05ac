#pragma once

#include <cstdint>
#include <map>

#include "lclab/locally_compact.hpp"
#include "lclab/space.hpp"

namespace lclab {

/// Point of the 1-point compactification: a base special or infinity.
struct StarPoint {
  bool is_inf = false;
  int id = 0;

  static StarPoint infinity() { return StarPoint{true, 0}; }
  static StarPoint of(int id) { return StarPoint{false, id}; }

  friend bool operator==(const StarPoint& a, const StarPoint& b) {
    return a.is_inf == b.is_inf && (a.is_inf || a.id == b.id);
  }
  friend bool operator<(const StarPoint& a, const StarPoint& b) {
    if (a.is_inf != b.is_inf) return !a.is_inf;  // infinity sorts last
    return !a.is_inf && a.id < b.id;
  }
};

struct StarBall {
  StarPoint center;
  Rational radius;
};

/// Fast Cauchy name in the star metric.
struct StarName {
  std::function<StarPoint(int)> at;
  bool canonical_infinity = false;
};

enum class UnembedStatus { Ok, IsInfinity, BudgetExhausted };

/// The computably compact 1-point compactification M* of a non-compact
/// instance, with h(x) = sup_i (c_i - d(x, K_i)) and the star metric
/// d*(x,y) = min(d(x,y), h(x)+h(y)), d*(x,inf) = h(x).
class OnePointSpace {
 public:
  explicit OnePointSpace(const Space& sp);  // refuses compact instances

  const Space& base() const { return *sp_; }
  const StrongSigmaSequence& sigma() const { return ssq_; }

  Rational h_special(int id) const;  // exact, memoized
  Rational h_name(const CauchyName& x, int prec) const;

  Rational star_dist(const StarPoint& p, const StarPoint& q) const;  // exact
  Rational star_metric(const StarName& p, const StarName& q, int prec) const;

  /// Finite 2^-n cover of M*: B(inf, c_n) plus covers of K_0..K_{n+1}.
  std::vector<StarBall> star_cover(int n) const;

  StarName embed(const CauchyName& x) const;
  StarName infinity_name() const;

  struct UnembedResult {
    UnembedStatus status = UnembedStatus::BudgetExhausted;
    CauchyName name;
  };
  UnembedResult unembed(const StarName& p, int budget) const;

  /// Pinned enumerations: star special 0 is infinity, k+1 is base special
  /// k; basic star balls pair (center index, radius exponent).
  StarPoint star_special(std::uint64_t k) const;
  StarBall star_ball(std::uint64_t m) const;

  std::string label(const StarPoint& p) const;
  std::optional<StarPoint> parse(const std::string& s) const;

 private:
  const Space* sp_;
  StrongSigmaSequence ssq_;
  mutable std::map<int, Rational> h_cache_;
};

}  // namespace lclab
