#include "lclab/groups.hpp"

#include <stdexcept>

#include "lclab/dovetail.hpp"

namespace lclab {

CauchyName Group::mul_names(const CauchyName& x, const CauchyName& y) const {
  const Group* g = this;
  return CauchyName{[g, x, y](int n) { return g->mul_special(x.at(n + 2), y.at(n + 2)); }};
}

CauchyName Group::inv_names(const CauchyName& x) const {
  const Group* g = this;
  return CauchyName{[g, x](int n) {
    auto inv = g->inv_special(x.at(n));
    if (!inv) throw std::runtime_error("inv: special has no special inverse");
    return *inv;
  }};
}

namespace {

class DiscreteZGroup : public Group {
 public:
  std::string key() const override { return "discrete-z"; }
  const Space& space() const override { return discrete_z_space(); }
  int mul_special(int i, int j) const override {
    return discrete_index(discrete_value(i) + discrete_value(j));
  }
  std::optional<int> inv_special(int i) const override {
    return discrete_index(-discrete_value(i));
  }
  Ball ball_product(const Ball& a, const Ball& b) const override {
    // radius <= 1 means a singleton, above 1 means everything
    Rational r = (a.radius > 1 || b.radius > 1) ? rat_max(a.radius, b.radius)
                                                : rat_min(a.radius, b.radius);
    return Ball{mul_special(a.center, b.center), r};
  }
  Ball ball_inverse(const Ball& b) const override {
    return Ball{*inv_special(b.center), b.radius};
  }
};

class RealsGroup : public Group {
 public:
  std::string key() const override { return "reals"; }
  const Space& space() const override { return reals_space(); }
  int mul_special(int i, int j) const override {
    const Space& sp = reals_space();
    return reals_index(sp, reals_value(sp, i) + reals_value(sp, j));
  }
  std::optional<int> inv_special(int i) const override {
    const Space& sp = reals_space();
    return reals_index(sp, -reals_value(sp, i));
  }
  Ball ball_product(const Ball& a, const Ball& b) const override {
    return Ball{mul_special(a.center, b.center), a.radius + b.radius};
  }
  Ball ball_inverse(const Ball& b) const override {
    return Ball{*inv_special(b.center), b.radius};
  }
};

// least k >= 0 with 2^-k < r
int z2_open_depth(const Rational& r) {
  int k = 0;
  while (!(pow2(-k) < r)) ++k;
  return k;
}

class Z2Group : public Group {
 public:
  std::string key() const override { return "z2"; }
  const Space& space() const override { return z2_space(); }
  int mul_special(int i, int j) const override {
    long long s = (long long)i + (long long)j;
    if (s > 0x3fffffffLL) throw std::overflow_error("z2 mul: special id too large");
    return int(s);
  }
  std::optional<int> inv_special(int i) const override {
    if (i == 0) return 0;  // only 0 has an eventually-zero negative
    return std::nullopt;
  }
  CauchyName inv_names(const CauchyName& x) const override {
    return CauchyName{[x](int n) {
      int k = n + 2;
      if (k > 29) throw std::overflow_error("z2 inv: precision too deep for int ids");
      long long m = 1LL << k;
      long long r = ((long long)x.at(k)) % m;
      return int((m - r) % m);
    }};
  }
  Ball ball_product(const Ball& a, const Ball& b) const override {
    // the sumset of two cylinders is the coarser cylinder
    return Ball{mul_special(a.center, b.center), rat_max(a.radius, b.radius)};
  }
  Ball ball_inverse(const Ball& b) const override {
    int k = z2_open_depth(b.radius);
    if (k > 29) throw std::overflow_error("z2 ball inverse: cylinder too deep");
    long long m = 1LL << k;
    long long r = ((long long)b.center) % m;
    return Ball{int((m - r) % m), b.radius};
  }
};

}  // namespace

OpenName open_mul(const Group& g, const OpenName& u, const OpenName& v) {
  const Group* gp = &g;
  auto ue = u.enumerate, ve = v.enumerate;
  return OpenName{[gp, ue, ve](std::int64_t s) -> std::optional<Ball> {
    auto [i, j] = unpair_code(std::uint64_t(s));
    auto a = ue(std::int64_t(i));
    auto b = ve(std::int64_t(j));
    if (!a || !b) return std::nullopt;
    return gp->ball_product(*a, *b);
  }};
}

OpenName open_inv(const Group& g, const OpenName& u) {
  const Group* gp = &g;
  auto ue = u.enumerate;
  return OpenName{[gp, ue](std::int64_t s) -> std::optional<Ball> {
    auto a = ue(s);
    if (!a) return std::nullopt;
    return gp->ball_inverse(*a);
  }};
}

AxiomReport check_group_axioms(const Group& g,
                               const std::vector<std::array<int, 3>>& samples, int prec) {
  const Space& sp = g.space();
  Rational tol = pow2(-prec);
  AxiomReport rep;
  auto fail = [&](const std::string& law, const std::array<int, 3>& t, Rational d) {
    rep.pass = false;
    rep.law = law;
    rep.triple = t;
    rep.defect = d;
  };
  for (const auto& t : samples) {
    CauchyName x = CauchyName::of_special(t[0]);
    CauchyName y = CauchyName::of_special(t[1]);
    CauchyName z = CauchyName::of_special(t[2]);
    CauchyName e = g.identity_name();
    Rational d = metric_between_names(g.mul_names(g.mul_names(x, y), z),
                                      g.mul_names(x, g.mul_names(y, z)), prec + 2, sp);
    if (d > tol) {
      fail("associativity", t, d);
      return rep;
    }
    d = metric_between_names(g.mul_names(x, e), x, prec + 2, sp);
    if (d > tol) {
      fail("identity", t, d);
      return rep;
    }
    d = metric_between_names(g.mul_names(x, g.inv_names(x)), e, prec + 2, sp);
    if (d > tol) {
      fail("inverse", t, d);
      return rep;
    }
    ++rep.checked;
  }
  return rep;
}

const Group& group_registry(const std::string& key) {
  static const DiscreteZGroup dz;
  static const RealsGroup re;
  static const Z2Group z2;
  if (key == "discrete-z") return dz;
  if (key == "reals") return re;
  if (key == "z2") return z2;
  if (key == "free-abelian-simple") return free_abelian_simple_group();
  throw std::invalid_argument("unknown group instance: " + key);
}

std::vector<std::string> group_keys() {
  return {"discrete-z", "reals", "z2", "free-abelian-simple"};
}

}  // namespace lclab
