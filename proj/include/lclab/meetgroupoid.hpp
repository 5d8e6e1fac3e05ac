#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lclab/rational.hpp"

namespace lclab {

/// Compact open coset (a mod m), or the empty set. In W(Z_p) the moduli
/// are the powers p^level; in the finite cyclic instance they are the
/// divisors of n.
struct Coset {
  bool empty = true;
  BigInt modulus = 0;
  BigInt residue = 0;

  static Coset none() { return Coset{}; }
  static Coset of(const BigInt& m, const BigInt& r);

  friend bool operator==(const Coset& a, const Coset& b) {
    return a.empty == b.empty &&
           (a.empty || (a.modulus == b.modulus && a.residue == b.residue));
  }
  friend bool operator<(const Coset& a, const Coset& b) {
    if (a.empty != b.empty) return a.empty;
    if (a.empty) return false;
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.residue < b.residue;
  }
};

std::string coset_str(const Coset& a);

/// Meet groupoid of compact open cosets: partial product (defined on
/// matching subgroups and on the empty pair), total inverse and meet.
class MeetGroupoid {
 public:
  static MeetGroupoid padic(int p);        // W(Z_p), moduli p^level
  static MeetGroupoid finite_cyclic(int n);  // subsets of Z/n from its subgroups
  static MeetGroupoid trivial();           // carrier {empty}

  std::string key() const { return key_; }
  bool is_padic() const { return p_ != 0; }
  int prime() const { return p_; }

  /// All cosets of level (or divisor chain position) at most depth, with
  /// the empty element first.
  std::vector<Coset> elements(int depth) const;

  bool valid(const Coset& a) const;
  int level_of(const Coset& a) const;
  BigInt finest_modulus(int depth) const;

  std::optional<Coset> product(const Coset& a, const Coset& b) const;
  Coset inverse(const Coset& a) const;
  Coset meet(const Coset& a, const Coset& b) const;
  bool subset(const Coset& a, const Coset& b) const;  // a subseteq b

  /// |U : U meet V| for subgroups U, V; throws on non-idempotents.
  BigInt index_fn(const Coset& u, const Coset& v) const;

 private:
  MeetGroupoid() = default;
  int p_ = 0;
  int n_ = 0;
  std::string key_;
};

using ProductFn = std::function<std::optional<Coset>(const Coset&, const Coset&)>;

/// Negative-test decorator: the groupoid product with one defined entry
/// replaced (definedness is untouched).
ProductFn corrupt_product(const MeetGroupoid& w, const Coset& a, const Coset& b,
                          const Coset& wrong);

struct GroupoidReport {
  bool pass = true;
  char axiom = 0;  // first violated axiom, 'a'..'g'
  std::vector<Coset> witness;
  int depth = 0;
};

/// Exhaustively verifies the groupoid and meet-groupoid axioms on the
/// level-bounded fragment; `only` restricts the check to one axiom.
GroupoidReport check_axioms(const MeetGroupoid& w, int depth,
                            const ProductFn& prod = nullptr, char only = 0);

/// Is A covered by the union of the listed cosets, judged on the
/// level-depth refinement grid?
bool covers_decide(const MeetGroupoid& w, const Coset& a, const std::vector<Coset>& bs,
                   int depth);

/// Membership procedure of a candidate ideal.
struct IdealSpec {
  std::function<bool(const Coset&)> member;
  std::string description;
};

/// Parses "avoid-subgroup:k", "avoid-point:r", "empty-only", "all".
IdealSpec parse_ideal(const MeetGroupoid& w, const std::string& text);

enum class IdealKind { NotIdeal, Ideal, OpenSubgroupIdeal, ClosedSubgroupIdeal, Both };

std::string ideal_kind_str(IdealKind k);

struct IdealReport {
  IdealKind kind = IdealKind::NotIdeal;
  bool inversion_closed = false;
  std::vector<Coset> witness;  // decisive failure, when one exists
  std::string detail;
  int depth = 0;
};

/// Classifies the candidate on the depth fragment: ideal condition via
/// covers_decide, then inversion closure and the open/closed subgroup
/// conditions. The open classification additionally requires a non-empty
/// member, so that the induced open set is a genuine subgroup.
IdealReport ideal_kind(const MeetGroupoid& w, const IdealSpec& j, int depth);

/// Tree nodes as LSB-first digit strings; the root is "".
std::string node_of(const MeetGroupoid& w, const Coset& a);
Coset coset_of(const MeetGroupoid& w, const std::string& node);

/// Depth approximation of the closed set S_J = G minus the union of J:
/// prefix-closed set of nodes whose cosets are not in J and not covered
/// by J at the depth.
std::vector<std::string> gamma(const MeetGroupoid& w, const IdealSpec& j, int depth);

/// {node : its cylinder is inside the union of J at the depth}.
std::vector<std::string> ideal_to_open(const MeetGroupoid& w, const IdealSpec& j,
                                       int depth);

/// Ideal induced by a union of cylinders; degenerate total ideals are
/// flagged in the description.
IdealSpec open_to_ideal(const MeetGroupoid& w, const std::vector<std::string>& nodes,
                        int depth);

/// Tree presentation with computable branching; nullopt marks the
/// omega-branching root case (not used by the shipped compact instances).
struct TreePresentation {
  std::function<std::optional<int>(const std::string&)> branching;
};

TreePresentation padic_tree(int p);

}  // namespace lclab
