#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lclab/rational.hpp"

namespace lclab {

/// Basic open ball centred at a special point.
struct Ball {
  int center = 0;
  Rational radius;
};

/// Fast Cauchy name: d(at(n), x) < 2^-n for the named point x.
struct CauchyName {
  std::function<int(int)> at;

  static CauchyName of_special(int id) {
    return CauchyName{[id](int) { return id; }};
  }
};

/// Slot-indexed c.e. stream of balls; nullopt slots are padding.
using BallStream = std::function<std::optional<Ball>(std::int64_t)>;

/// Open set as the union of an enumerated sequence of balls.
struct OpenName {
  BallStream enumerate;
};

/// Compact set via finite 2^-n covers; every listed ball meets the set.
struct CompactName {
  std::function<std::vector<Ball>(int)> cover_at;
};

/// Closed set with a c.e. side (balls meeting the set) and a co-c.e. side
/// (an open name of the complement); either side may be absent.
struct ClosedName {
  std::optional<BallStream> positive;
  std::optional<OpenName> negative;
};

/// Levelled ball system with decidable finite intersections.
struct CoverSystem {
  std::function<std::vector<Ball>(int)> levels;
  std::function<bool(const std::vector<Ball>&)> intersect_decide;
};

enum class SemiResult { Confirmed, Refuted, BudgetExhausted };

/// A computable Polish space with a fixed special-point enumeration and an
/// exact rational metric on special pairs. Shipped instances also carry
/// their canonical sigma-compact structure (the K_n / c_n data) so that
/// downstream constructions have deterministic values.
class Space {
 public:
  virtual ~Space() = default;

  virtual std::string key() const = 0;
  virtual bool is_compact() const = 0;

  /// Exact distance between special points i and j.
  virtual Rational dist(int i, int j) const = 0;

  /// Approximation interface; exact on all shipped instances.
  Rational metric_oracle(int i, int j, int /*prec*/) const { return dist(i, j); }

  virtual std::string label(int i) const = 0;
  virtual std::optional<int> parse_point(const std::string& s) const = 0;

  /// Presentation of K_n as a finite union of closed balls.
  virtual std::vector<Ball> sigma_level(int n) const = 0;
  /// The fattening margin c_n.
  virtual Rational sigma_margin(int n) const = 0;
  /// All specials inside K_n, when that set is finite.
  virtual std::optional<std::vector<int>> sigma_level_specials(int /*n*/) const {
    return std::nullopt;
  }
  /// Decides whether special id lies in K_n.
  virtual bool special_in_sigma(int id, int n) const = 0;

  /// Exact distance from special x to the closed content of b.
  virtual Rational dist_to_closed_ball(int x, const Ball& b) const = 0;

  /// Is the closed content of b, fattened by pad, inside the union of the
  /// closed contents of uni? Decided by instance ball arithmetic.
  virtual bool ball_in_union(const Ball& b, const Rational& pad,
                             const std::vector<Ball>& uni) const = 0;

  /// Finite cover of the closed contents of uni by balls of radius <= eps,
  /// each centred at a special point of the covered set.
  virtual std::vector<Ball> cover_of_union(const std::vector<Ball>& uni,
                                           const Rational& eps) const = 0;

  /// Witness (special, radius) bounding the whole space, when one exists.
  virtual std::optional<std::pair<int, Rational>> bounded_certificate() const {
    return std::nullopt;
  }

  /// Local compactness: a ball around x together with a compact superset.
  virtual std::pair<Ball, CompactName> neighborhood(const CauchyName& x) const = 0;

  /// Exact distance from special x to a finite union of closed balls.
  Rational dist_to_union(int x, const std::vector<Ball>& uni) const;
};

enum class Inclusion { Included, NotIncluded, UndecidedAtMargin };

/// Formal inclusion d(a,b) + r < q: the closed content of inner is inside
/// the open content of outer.
Inclusion formal_inclusion(const Ball& inner, const Ball& outer, const Space& sp);

/// Semi-decides x in b with positive slack, within a step budget.
SemiResult ball_member(const CauchyName& x, const Ball& b, const Space& sp, int budget);

/// d(x, y) within 2^-prec.
Rational metric_between_names(const CauchyName& x, const CauchyName& y, int prec,
                              const Space& sp);

struct ValidationReport {
  bool pass = true;
  int level = -1;
  std::string detail;
};

/// Checks radius bounds and probe coverage for every level <= n_max.
ValidationReport validate_compact_name(const CompactName& k, int n_max,
                                       const std::vector<CauchyName>& probes,
                                       const Space& sp);

/// Registry of shipped instances: "discrete-z", "reals", "z2".
const Space& space_registry(const std::string& key);
std::vector<std::string> space_keys();

}  // namespace lclab
