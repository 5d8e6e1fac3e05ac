#pragma once

#include <array>

#include "lclab/instances.hpp"
#include "lclab/space.hpp"

namespace lclab {

/// Computable Polish group over one of the shipped spaces. Multiplication
/// and inversion act exactly on special points; name-level operations use
/// the translation-invariance of all shipped metrics (mul is 1-Lipschitz
/// in each argument, inv is an isometry).
class Group {
 public:
  virtual ~Group() = default;

  virtual std::string key() const = 0;
  virtual const Space& space() const = 0;

  virtual int mul_special(int i, int j) const = 0;
  /// Absent when the inverse of a special is not itself special (z2).
  virtual std::optional<int> inv_special(int i) const = 0;
  virtual int identity_special() const { return 0; }

  virtual CauchyName mul_names(const CauchyName& x, const CauchyName& y) const;
  virtual CauchyName inv_names(const CauchyName& x) const;
  CauchyName identity_name() const { return CauchyName::of_special(identity_special()); }

  /// Exact ball arithmetic: the product set of the open contents of a and
  /// b equals the open content of ball_product(a, b), and likewise for
  /// inversion. Holds on all shipped instances.
  virtual Ball ball_product(const Ball& a, const Ball& b) const = 0;
  virtual Ball ball_inverse(const Ball& b) const = 0;
};

/// Open image of multiplication: dovetails ball pairs from the two input
/// streams and emits their exact product balls.
OpenName open_mul(const Group& g, const OpenName& u, const OpenName& v);
OpenName open_inv(const Group& g, const OpenName& u);

struct AxiomReport {
  bool pass = true;
  std::string law;               // first failing law, empty on pass
  std::array<int, 3> triple{};   // first failing sample
  Rational defect;
  int checked = 0;
};

/// Verifies associativity, identity, and inverse laws on the sampled
/// special triples, each to within 2^-prec at the name level.
AxiomReport check_group_axioms(const Group& g,
                               const std::vector<std::array<int, 3>>& samples, int prec);

/// Negative-test decorator: shifts every product by the group element of
/// special 1, so mul is off by one everywhere.
class CorruptedGroup : public Group {
 public:
  explicit CorruptedGroup(const Group& base) : base_(&base) {}
  std::string key() const override { return base_->key() + "-corrupted"; }
  const Space& space() const override { return base_->space(); }
  int mul_special(int i, int j) const override {
    return base_->mul_special(base_->mul_special(i, j), 1);
  }
  std::optional<int> inv_special(int i) const override { return base_->inv_special(i); }
  CauchyName inv_names(const CauchyName& x) const override { return base_->inv_names(x); }
  Ball ball_product(const Ball& a, const Ball& b) const override {
    return base_->ball_product(a, b);
  }
  Ball ball_inverse(const Ball& b) const override { return base_->ball_inverse(b); }

 private:
  const Group* base_;
};

/// Additive group of the finite-injury construction output, under the
/// discrete metric on its code enumeration.
const Group& free_abelian_simple_group();

/// Registry: "discrete-z", "reals", "z2", "free-abelian-simple".
const Group& group_registry(const std::string& key);
std::vector<std::string> group_keys();

}  // namespace lclab
