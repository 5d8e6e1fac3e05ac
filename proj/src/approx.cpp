#include "lclab/approx.hpp"

#include <stdexcept>
#include <utility>

namespace lclab {

Cmp approx_compare(const ApproxReal& a, const ApproxReal& b, const Rational& margin) {
  if (margin <= 0) throw std::invalid_argument("approx_compare: margin must be positive");
  for (int p = 1;; ++p) {
    Rational av = a.approx(p), bv = b.approx(p);
    Rational err = pow2(-p) * 2;  // combined approximation error
    if (av - bv > err) return Cmp::Greater;
    if (bv - av > err) return Cmp::Less;
    if (rat_abs(av - bv) + err < margin * 2) return Cmp::WithinMargin;
  }
}

struct Expr::Node {
  enum Kind { Const, Leaf, Add, Sub, Mul, Min, Max, Abs, Sup } kind;
  Rational value;          // Const
  ApproxReal real;         // Leaf
  std::vector<Expr> args;  // everything else
};

Expr Expr::constant(Rational q) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Const;
  n->value = std::move(q);
  return Expr(n);
}

Expr Expr::leaf(ApproxReal r) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Leaf;
  n->real = std::move(r);
  return Expr(n);
}

Expr Expr::make(int kind, std::vector<Expr> args) {
  auto n = std::make_shared<Node>();
  n->kind = static_cast<Node::Kind>(kind);
  n->args = std::move(args);
  return Expr(std::move(n));
}

Expr Expr::min(Expr a, Expr b) { return make(Node::Min, {std::move(a), std::move(b)}); }
Expr Expr::max(Expr a, Expr b) { return make(Node::Max, {std::move(a), std::move(b)}); }
Expr Expr::abs(Expr a) { return make(Node::Abs, {std::move(a)}); }

Expr Expr::sup(std::vector<Expr> items) {
  if (items.empty()) throw std::invalid_argument("Expr::sup: empty index set");
  return make(Node::Sup, std::move(items));
}

Expr operator+(Expr a, Expr b) { return Expr::make(Expr::Node::Add, {std::move(a), std::move(b)}); }
Expr operator-(Expr a, Expr b) { return Expr::make(Expr::Node::Sub, {std::move(a), std::move(b)}); }
Expr operator*(Expr a, Expr b) { return Expr::make(Expr::Node::Mul, {std::move(a), std::move(b)}); }

std::pair<Rational, Rational> Expr::bounds(int leaf_prec) const {
  using P = std::pair<Rational, Rational>;
  const Node& n = *node_;
  switch (n.kind) {
    case Node::Const:
      return {n.value, n.value};
    case Node::Leaf: {
      Rational v = n.real.approx(leaf_prec), e = pow2(-leaf_prec);
      return {v - e, v + e};
    }
    case Node::Add: {
      P a = n.args[0].bounds(leaf_prec), b = n.args[1].bounds(leaf_prec);
      return {a.first + b.first, a.second + b.second};
    }
    case Node::Sub: {
      P a = n.args[0].bounds(leaf_prec), b = n.args[1].bounds(leaf_prec);
      return {a.first - b.second, a.second - b.first};
    }
    case Node::Mul: {
      P a = n.args[0].bounds(leaf_prec), b = n.args[1].bounds(leaf_prec);
      Rational c1 = a.first * b.first, c2 = a.first * b.second;
      Rational c3 = a.second * b.first, c4 = a.second * b.second;
      return {rat_min(rat_min(c1, c2), rat_min(c3, c4)),
              rat_max(rat_max(c1, c2), rat_max(c3, c4))};
    }
    case Node::Min: {
      P a = n.args[0].bounds(leaf_prec), b = n.args[1].bounds(leaf_prec);
      return {rat_min(a.first, b.first), rat_min(a.second, b.second)};
    }
    case Node::Max: {
      P a = n.args[0].bounds(leaf_prec), b = n.args[1].bounds(leaf_prec);
      return {rat_max(a.first, b.first), rat_max(a.second, b.second)};
    }
    case Node::Abs: {
      P a = n.args[0].bounds(leaf_prec);
      if (a.first >= 0) return a;
      if (a.second <= 0) return {-a.second, -a.first};
      return {Rational(0), rat_max(-a.first, a.second)};
    }
    case Node::Sup: {
      P acc = n.args[0].bounds(leaf_prec);
      for (size_t i = 1; i < n.args.size(); ++i) {
        P b = n.args[i].bounds(leaf_prec);
        acc = {rat_max(acc.first, b.first), rat_max(acc.second, b.second)};
      }
      return acc;
    }
  }
  throw std::logic_error("Expr::bounds: bad node");
}

Rational Expr::eval(int prec) const {
  Rational target = pow2(-prec);
  for (int p = prec + 1;; p += 2) {
    auto [lo, hi] = bounds(p);
    if (hi - lo <= target) return (lo + hi) / 2;
  }
}

ApproxReal Expr::as_real() const {
  Expr self = *this;
  return ApproxReal{[self](int prec) { return self.eval(prec); }};
}

}  // namespace lclab
