#include "lclab/meetgroupoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lclab {

namespace {

BigInt mod_pos(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

// g = gcd(a, b) = a*u + b*v for nonnegative a, b.
void egcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& u, BigInt& v) {
  if (b == 0) {
    g = a;
    u = 1;
    v = 0;
    return;
  }
  BigInt g1, u1, v1;
  egcd(b, a % b, g1, u1, v1);
  g = g1;
  u = v1;
  v = u1 - (a / b) * v1;
}

}  // namespace

Coset Coset::of(const BigInt& m, const BigInt& r) {
  if (m < 1) throw std::invalid_argument("coset modulus must be positive");
  Coset c;
  c.empty = false;
  c.modulus = m;
  c.residue = mod_pos(r, m);
  return c;
}

std::string coset_str(const Coset& a) {
  if (a.empty) return "{}";
  return "(" + a.residue.str() + " mod " + a.modulus.str() + ")";
}

MeetGroupoid MeetGroupoid::padic(int p) {
  if (p < 2) throw std::invalid_argument("padic carrier needs a prime p >= 2");
  MeetGroupoid w;
  w.p_ = p;
  w.key_ = "padic:" + std::to_string(p);
  return w;
}

MeetGroupoid MeetGroupoid::finite_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic carrier needs n >= 1");
  MeetGroupoid w;
  w.n_ = n;
  w.key_ = "cyclic:" + std::to_string(n);
  return w;
}

MeetGroupoid MeetGroupoid::trivial() {
  MeetGroupoid w;
  w.key_ = "trivial";
  return w;
}

std::vector<Coset> MeetGroupoid::elements(int depth) const {
  std::vector<Coset> out;
  out.push_back(Coset::none());
  if (p_ != 0) {
    BigInt m = 1;
    for (int l = 0; l <= depth; ++l) {
      for (BigInt r = 0; r < m; ++r) out.push_back(Coset::of(m, r));
      m *= p_;
    }
  } else if (n_ != 0) {
    for (int d = 1; d <= n_; ++d) {
      if (n_ % d != 0) continue;
      for (BigInt r = 0; r < d; ++r) out.push_back(Coset::of(d, r));
    }
  }
  return out;
}

bool MeetGroupoid::valid(const Coset& a) const {
  if (a.empty) return true;
  if (a.modulus < 1 || a.residue < 0 || a.residue >= a.modulus) return false;
  if (p_ != 0) {
    BigInt m = a.modulus;
    while (m % p_ == 0) m /= p_;
    return m == 1;
  }
  if (n_ != 0) return BigInt(n_) % a.modulus == 0;
  return false;
}

int MeetGroupoid::level_of(const Coset& a) const {
  if (a.empty) return 0;
  if (p_ != 0) {
    int l = 0;
    BigInt m = a.modulus;
    while (m > 1) {
      m /= p_;
      ++l;
    }
    return l;
  }
  int l = 0;
  for (int d = 1; d < a.modulus; ++d)
    if (n_ % d == 0) ++l;
  return l;
}

BigInt MeetGroupoid::finest_modulus(int depth) const {
  if (p_ != 0) {
    BigInt m = 1;
    for (int l = 0; l < depth; ++l) m *= p_;
    return m;
  }
  if (n_ != 0) return n_;
  return 1;
}

std::optional<Coset> MeetGroupoid::product(const Coset& a, const Coset& b) const {
  if (a.empty && b.empty) return Coset::none();
  if (a.empty || b.empty) return std::nullopt;
  if (a.modulus != b.modulus) return std::nullopt;
  return Coset::of(a.modulus, a.residue + b.residue);
}

Coset MeetGroupoid::inverse(const Coset& a) const {
  if (a.empty) return Coset::none();
  return Coset::of(a.modulus, -a.residue);
}

Coset MeetGroupoid::meet(const Coset& a, const Coset& b) const {
  if (a.empty || b.empty) return Coset::none();
  BigInt g, u, v;
  egcd(a.modulus, b.modulus, g, u, v);
  if (mod_pos(a.residue - b.residue, g) != 0) return Coset::none();
  BigInt l = a.modulus / g * b.modulus;
  // CRT: x = a.residue + a.modulus * t with t chosen mod b.modulus/g
  BigInt t = mod_pos((b.residue - a.residue) / g * u, b.modulus / g);
  return Coset::of(l, a.residue + a.modulus * t);
}

bool MeetGroupoid::subset(const Coset& a, const Coset& b) const {
  return meet(a, b) == a;
}

BigInt MeetGroupoid::index_fn(const Coset& u, const Coset& v) const {
  if (u.empty || v.empty || u.residue != 0 || v.residue != 0)
    throw std::invalid_argument("NOT_IDEMPOTENT");
  BigInt g, x, y;
  egcd(u.modulus, v.modulus, g, x, y);
  return u.modulus / g * v.modulus / u.modulus;
}

ProductFn corrupt_product(const MeetGroupoid& w, const Coset& a, const Coset& b,
                          const Coset& wrong) {
  return [w, a, b, wrong](const Coset& x, const Coset& y) -> std::optional<Coset> {
    auto base = w.product(x, y);
    if (base && x == a && y == b) return wrong;
    return base;
  };
}

GroupoidReport check_axioms(const MeetGroupoid& w, int depth, const ProductFn& prod,
                            char only) {
  GroupoidReport rep;
  rep.depth = depth;
  auto P = [&](const Coset& x, const Coset& y) {
    return prod ? prod(x, y) : w.product(x, y);
  };
  auto want = [&](char c) { return only == 0 || only == c; };
  auto fail = [&](char axiom, std::vector<Coset> witness) {
    rep.pass = false;
    rep.axiom = axiom;
    rep.witness = std::move(witness);
    return rep;
  };
  std::vector<Coset> es = w.elements(depth);
  // definedness is structural: matching moduli or a pair of empties
  auto defined_shape = [](const Coset& x, const Coset& y) {
    if (x.empty || y.empty) return x.empty && y.empty;
    return x.modulus == y.modulus;
  };

  if (want('a')) {
    for (const Coset& a : es)
      for (const Coset& b : es) {
        auto ab = P(a, b);
        for (const Coset& c : es) {
          // skip triples where both sides are structurally undefined; with
          // a corrupted product table definedness is untouched but values
          // may leave the modulus class, so check everything
          if (!prod && !defined_shape(a, b) && !defined_shape(b, c)) continue;
          auto bc = P(b, c);
          std::optional<Coset> lhs = ab ? P(*ab, c) : std::nullopt;
          std::optional<Coset> rhs = bc ? P(a, *bc) : std::nullopt;
          if (lhs.has_value() != rhs.has_value() || (lhs && !(*lhs == *rhs)))
            return fail('a', {a, b, c});
        }
      }
  }
  if (want('b')) {
    for (const Coset& a : es) {
      Coset ia = w.inverse(a);
      if (!P(a, ia) || !P(ia, a)) return fail('b', {a});
    }
  }
  if (want('c')) {
    for (const Coset& a : es)
      for (const Coset& b : es) {
        auto ab = P(a, b);
        if (!ab) continue;
        auto left = P(*ab, w.inverse(b));
        if (!left || !(*left == a)) return fail('c', {a, b});
        auto mid = P(w.inverse(a), a);
        auto right = mid ? P(*mid, b) : std::nullopt;
        if (!right || !(*right == b)) return fail('c', {a, b});
      }
  }
  if (want('d')) {
    Coset e = Coset::none();
    if (!(w.inverse(e) == e)) return fail('d', {e});
    auto ee = P(e, e);
    if (!ee || !(*ee == e)) return fail('d', {e});
    for (const Coset& a : es) {
      if (a.empty) continue;
      if (P(e, a) || P(a, e)) return fail('d', {a});
    }
  }
  if (want('e')) {
    for (const Coset& u : es) {
      if (u.empty || u.residue != 0) continue;
      for (const Coset& v : es) {
        if (v.empty || v.residue != 0) continue;
        if (w.meet(u, v).empty) return fail('e', {u, v});
      }
    }
  }
  if (want('f')) {
    for (const Coset& a : es)
      for (const Coset& b : es)
        if (w.subset(a, b) != w.subset(w.inverse(a), w.inverse(b)))
          return fail('f', {a, b});
  }
  if (want('g')) {
    // group by modulus so only structurally defined products are visited
    std::map<BigInt, std::vector<Coset>> bucket;
    std::vector<Coset> empties;
    for (const Coset& e : es)
      (e.empty ? empties : bucket[e.modulus]).push_back(e);
    auto partners = [&](const Coset& a) -> const std::vector<Coset>& {
      return a.empty ? empties : bucket[a.modulus];
    };
    for (const Coset& a0 : es)
      for (const Coset& a1 : es) {
        Coset ma = w.meet(a0, a1);
        if (ma.empty) continue;
        for (const Coset& b0 : partners(a0))
          for (const Coset& b1 : partners(a1)) {
            Coset mb = w.meet(b0, b1);
            if (mb.empty) continue;
            auto ab0 = P(a0, b0);
            auto ab1 = P(a1, b1);
            if (!ab0 || !ab1) return fail('g', {a0, b0, a1, b1});
            auto lhs = P(ma, mb);
            Coset rhs = w.meet(*ab0, *ab1);
            if (!lhs || !(*lhs == rhs)) return fail('g', {a0, b0, a1, b1});
          }
      }
  }
  return rep;
}

bool covers_decide(const MeetGroupoid& w, const Coset& a, const std::vector<Coset>& bs,
                   int depth) {
  if (a.empty) return true;
  BigInt fine = w.finest_modulus(depth);
  if (fine % a.modulus != 0)
    throw std::invalid_argument("coset is finer than the decision depth");
  for (BigInt r = a.residue; r < fine; r += a.modulus) {
    Coset cell = Coset::of(fine, r);
    bool covered = false;
    for (const Coset& b : bs)
      if (w.subset(cell, b)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

IdealSpec parse_ideal(const MeetGroupoid& w, const std::string& text) {
  auto colon = text.find(':');
  std::string head = colon == std::string::npos ? text : text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (head == "empty-only")
    return IdealSpec{[](const Coset& a) { return a.empty; }, text};
  if (head == "all") return IdealSpec{[](const Coset&) { return true; }, text};
  if (head == "avoid-subgroup") {
    BigInt k(arg);
    if (k < 1) throw std::invalid_argument("avoid-subgroup needs a positive modulus");
    Coset sub = Coset::of(k, 0);
    return IdealSpec{[w, sub](const Coset& a) { return w.meet(a, sub).empty; }, text};
  }
  if (head == "avoid-point") {
    BigInt r(arg);
    return IdealSpec{[r](const Coset& a) {
                       return a.empty || mod_pos(r, a.modulus) != a.residue;
                     },
                     text};
  }
  throw std::invalid_argument("unknown ideal spec: " + text);
}

std::string ideal_kind_str(IdealKind k) {
  switch (k) {
    case IdealKind::NotIdeal: return "NOT_IDEAL";
    case IdealKind::Ideal: return "IDEAL";
    case IdealKind::OpenSubgroupIdeal: return "OPEN_SUBGROUP_IDEAL";
    case IdealKind::ClosedSubgroupIdeal: return "CLOSED_SUBGROUP_IDEAL";
    case IdealKind::Both: return "BOTH";
  }
  return "?";
}

IdealReport ideal_kind(const MeetGroupoid& w, const IdealSpec& j, int depth) {
  IdealReport rep;
  rep.depth = depth;
  std::vector<Coset> es = w.elements(depth);
  std::vector<Coset> members;
  for (const Coset& a : es)
    if (j.member(a)) members.push_back(a);

  if (!j.member(Coset::none())) {
    rep.kind = IdealKind::NotIdeal;
    rep.witness = {Coset::none()};
    rep.detail = "empty set is not a member";
    return rep;
  }
  for (const Coset& a : es)
    if (!j.member(a) && covers_decide(w, a, members, depth)) {
      rep.kind = IdealKind::NotIdeal;
      rep.witness = {a};
      rep.detail = coset_str(a) + " is covered by members but is not a member";
      return rep;
    }

  rep.inversion_closed = true;
  std::vector<Coset> inv_witness;
  for (const Coset& a : members)
    if (!j.member(w.inverse(a))) {
      rep.inversion_closed = false;
      inv_witness = {a, w.inverse(a)};
      break;
    }

  bool has_nonempty = false;
  for (const Coset& a : members)
    if (!a.empty) has_nonempty = true;

  bool open_ok = has_nonempty;
  std::vector<Coset> open_witness;
  for (const Coset& a : members) {
    for (const Coset& b : members) {
      auto ab = w.product(a, b);
      if (ab && !j.member(*ab)) {
        open_ok = false;
        open_witness = {a, b, *ab};
        break;
      }
    }
    if (!open_witness.empty()) break;
  }

  bool closed_ok = true;
  std::vector<Coset> closed_witness;
  for (const Coset& a : es) {
    for (const Coset& b : es) {
      auto ab = w.product(a, b);
      if (ab && j.member(*ab) && !j.member(a) && !j.member(b)) {
        closed_ok = false;
        closed_witness = {a, b, *ab};
        break;
      }
    }
    if (!closed_ok) break;
  }

  if (!rep.inversion_closed) {
    rep.kind = IdealKind::Ideal;
    rep.witness = closed_ok ? inv_witness : closed_witness;
    rep.detail = closed_ok
                     ? "not closed under inversion: " + coset_str(inv_witness[0])
                     : "not closed under inversion; closed-subgroup condition also "
                       "fails: " +
                           coset_str(closed_witness[0]) + " * " +
                           coset_str(closed_witness[1]) + " = " +
                           coset_str(closed_witness[2]) + " is a member";
    return rep;
  }
  if (open_ok && closed_ok)
    rep.kind = IdealKind::Both;
  else if (open_ok)
    rep.kind = IdealKind::OpenSubgroupIdeal;
  else if (closed_ok)
    rep.kind = IdealKind::ClosedSubgroupIdeal;
  else
    rep.kind = IdealKind::Ideal;
  if (!open_ok && !open_witness.empty()) {
    rep.witness = open_witness;
    rep.detail = "product of members leaves the ideal: " + coset_str(open_witness[0]) +
                 " * " + coset_str(open_witness[1]) + " = " + coset_str(open_witness[2]);
  } else if (!closed_ok) {
    rep.witness = closed_witness;
    rep.detail = "member product with non-member factors: " +
                 coset_str(closed_witness[0]) + " * " + coset_str(closed_witness[1]) +
                 " = " + coset_str(closed_witness[2]);
  }
  return rep;
}

std::string node_of(const MeetGroupoid& w, const Coset& a) {
  if (!w.is_padic()) throw std::invalid_argument("tree nodes need a padic carrier");
  if (a.empty) throw std::invalid_argument("the empty coset has no tree node");
  std::string out;
  BigInt m = a.modulus, r = a.residue;
  while (m > 1) {
    out += char('0' + int(r % w.prime()));
    r /= w.prime();
    m /= w.prime();
  }
  return out;
}

Coset coset_of(const MeetGroupoid& w, const std::string& node) {
  if (!w.is_padic()) throw std::invalid_argument("tree nodes need a padic carrier");
  BigInt m = 1, r = 0;
  for (size_t i = node.size(); i > 0; --i) {
    int digit = node[i - 1] - '0';
    if (digit < 0 || digit >= w.prime())
      throw std::invalid_argument("bad digit in node " + node);
    r = r * w.prime() + digit;
    m *= w.prime();
  }
  return Coset::of(m, r);
}

std::vector<std::string> gamma(const MeetGroupoid& w, const IdealSpec& j, int depth) {
  std::vector<Coset> es = w.elements(depth);
  std::vector<Coset> members;
  for (const Coset& a : es)
    if (j.member(a)) members.push_back(a);
  std::vector<std::string> out;
  for (const Coset& a : es) {
    if (a.empty) continue;
    if (!j.member(a) && !covers_decide(w, a, members, depth))
      out.push_back(node_of(w, a));
  }
  std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::vector<std::string> ideal_to_open(const MeetGroupoid& w, const IdealSpec& j,
                                       int depth) {
  std::vector<Coset> es = w.elements(depth);
  std::vector<Coset> members;
  for (const Coset& a : es)
    if (j.member(a)) members.push_back(a);
  std::vector<std::string> out;
  for (const Coset& a : es) {
    if (a.empty) continue;
    if (covers_decide(w, a, members, depth)) out.push_back(node_of(w, a));
  }
  std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

IdealSpec open_to_ideal(const MeetGroupoid& w, const std::vector<std::string>& nodes,
                        int depth) {
  auto member = [w, nodes, depth](const Coset& a) {
    if (a.empty) return true;
    BigInt fine = w.finest_modulus(depth);
    if (fine % a.modulus != 0) return false;
    for (BigInt r = a.residue; r < fine; r += a.modulus) {
      std::string cell = node_of(w, Coset::of(fine, r));
      bool inside = false;
      for (const std::string& nd : nodes)
        if (cell.compare(0, nd.size(), nd) == 0) {
          inside = true;
          break;
        }
      if (!inside) return false;
    }
    return true;
  };
  std::string desc = "union of " + std::to_string(nodes.size()) + " cylinders";
  if (member(Coset::of(1, 0)))
    desc += " (degenerate: the induced closed set is empty)";
  return IdealSpec{member, desc};
}

TreePresentation padic_tree(int p) {
  return TreePresentation{
      [p](const std::string&) -> std::optional<int> { return p; }};
}

}  // namespace lclab
