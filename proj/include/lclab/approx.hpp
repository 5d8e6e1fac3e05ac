#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "lclab/rational.hpp"

namespace lclab {

/// A real given by rational approximations: |approx(prec) - value| <= 2^-prec.
struct ApproxReal {
  std::function<Rational(int prec)> approx;

  static ApproxReal constant(Rational q) {
    return ApproxReal{[q = std::move(q)](int) { return q; }};
  }
};

enum class Cmp { Less, Greater, WithinMargin };

/// Total comparison with slack. Less implies a < b, Greater implies a > b,
/// WithinMargin implies |a - b| < 2*margin. Requires margin > 0.
Cmp approx_compare(const ApproxReal& a, const ApproxReal& b, const Rational& margin);

/// Arithmetic expressions over approximable reals with +, -, *, min, max,
/// abs and finite sup. Evaluated by interval refinement; no division.
class Expr {
 public:
  static Expr constant(Rational q);
  static Expr leaf(ApproxReal r);
  static Expr min(Expr a, Expr b);
  static Expr max(Expr a, Expr b);
  static Expr abs(Expr a);
  static Expr sup(std::vector<Expr> items);  // items non-empty

  friend Expr operator+(Expr a, Expr b);
  friend Expr operator-(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b);

  /// Interval enclosure with all leaves evaluated at the given precision.
  std::pair<Rational, Rational> bounds(int leaf_prec) const;

  /// Value within 2^-prec of the exact result.
  Rational eval(int prec) const;

  /// The expression packaged back up as an approximable real.
  ApproxReal as_real() const;

 private:
  struct Node;
  static Expr make(int kind, std::vector<Expr> args);
  std::shared_ptr<const Node> node_;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
};

/// Spec-level entry point: evaluate an expression to within 2^-prec.
inline Rational interval_eval(const Expr& e, int prec) { return e.eval(prec); }

}  // namespace lclab
