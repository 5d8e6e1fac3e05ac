#include "lclab/instances.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lclab {
namespace {

// ---------------------------------------------------------------- discrete-z

class DiscreteZ final : public Space {
 public:
  std::string key() const override { return "discrete-z"; }
  bool is_compact() const override { return false; }

  Rational dist(int i, int j) const override { return i == j ? Rational(0) : Rational(1); }

  std::string label(int i) const override { return discrete_value(i).str(); }

  std::optional<int> parse_point(const std::string& s) const override {
    try {
      return discrete_index(BigInt(s));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  std::vector<Ball> sigma_level(int n) const override {
    std::vector<Ball> out;
    for (int i = 0; i <= n; ++i) out.push_back({i, Rational(1, 4)});
    return out;
  }

  Rational sigma_margin(int n) const override { return pow2(-n - 2); }

  std::optional<std::vector<int>> sigma_level_specials(int n) const override {
    std::vector<int> ids(n + 1);
    for (int i = 0; i <= n; ++i) ids[i] = i;
    return ids;
  }

  bool special_in_sigma(int id, int n) const override { return id <= n; }

  Rational dist_to_closed_ball(int x, const Ball& b) const override {
    if (b.radius >= 1) return Rational(0);
    return x == b.center ? Rational(0) : Rational(1);
  }

  bool ball_in_union(const Ball& b, const Rational& pad,
                     const std::vector<Ball>& uni) const override {
    bool whole = b.radius >= 1 || pad >= 1;
    if (whole) {
      for (const Ball& u : uni)
        if (u.radius >= 1) return true;
      return false;
    }
    for (const Ball& u : uni)
      if (u.radius >= 1 || u.center == b.center) return true;
    return false;
  }

  std::vector<Ball> cover_of_union(const std::vector<Ball>& uni,
                                   const Rational& eps) const override {
    std::vector<Ball> out;
    std::vector<int> seen;
    for (const Ball& u : uni) {
      if (u.radius >= 1)
        throw std::invalid_argument("discrete-z: cannot cover an unbounded ball");
      if (std::find(seen.begin(), seen.end(), u.center) == seen.end()) {
        seen.push_back(u.center);
        out.push_back({u.center, eps});
      }
    }
    return out;
  }

  std::pair<Ball, CompactName> neighborhood(const CauchyName& x) const override {
    int c = x.at(2);
    CompactName k{[c](int n) { return std::vector<Ball>{{c, pow2(-n)}}; }};
    return {Ball{c, Rational(1, 4)}, k};
  }
};

// -------------------------------------------------------------------- reals

Rational cw_positive(std::uint64_t n) {
  int top = 63;
  while (top > 0 && !((n >> top) & 1)) --top;
  BigInt a = 1, b = 1;
  for (int i = top - 1; i >= 0; --i) {
    if ((n >> i) & 1)
      a += b;  // right child (a+b)/b
    else
      b += a;  // left child a/(a+b)
  }
  return Rational(a, b);
}

// Heap position of p/q in the Calkin-Wilf tree, or nullopt when the path
// needs more than 30 bits.
std::optional<std::uint64_t> cw_position(BigInt p, BigInt q) {
  std::vector<bool> bits;  // leaf to root
  while (p != q) {
    if ((int)bits.size() > 30) return std::nullopt;
    if (p < q) {
      BigInt t = (q - 1) / p;  // consecutive left steps, batched
      for (BigInt i = 0; i < t && (int)bits.size() <= 30; ++i) bits.push_back(false);
      q -= t * p;
    } else {
      BigInt t = (p - 1) / q;
      for (BigInt i = 0; i < t && (int)bits.size() <= 30; ++i) bits.push_back(true);
      p -= t * q;
    }
  }
  if ((int)bits.size() > 30) return std::nullopt;
  std::uint64_t n = 1;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) n = (n << 1) | (*it ? 1 : 0);
  return n;
}

class RealsSpace final : public Space {
 public:
  static constexpr int kExtBase = 1 << 30;

  Rational value(int id) const {
    if (id >= kExtBase) {
      size_t k = size_t(id - kExtBase);
      if (k >= ext_.size()) throw std::out_of_range("reals: bad surrogate id");
      return ext_[k];
    }
    if (id == 0) return Rational(0);
    Rational v = cw_positive(std::uint64_t((id + 1) / 2));
    return id % 2 == 1 ? v : Rational(-v);
  }

  int index(const Rational& q) const {
    if (q == 0) return 0;
    auto pos = cw_position(numerator(rat_abs(q)), denominator(rat_abs(q)));
    if (pos && *pos < std::uint64_t(kExtBase) / 2)
      return q > 0 ? int(2 * *pos - 1) : int(2 * *pos);
    auto it = ext_idx_.find(q);
    if (it != ext_idx_.end()) return it->second;
    int id = kExtBase + int(ext_.size());
    ext_.push_back(q);
    ext_idx_.emplace(q, id);
    return id;
  }

  std::string key() const override { return "reals"; }
  bool is_compact() const override { return false; }

  Rational dist(int i, int j) const override { return rat_abs(value(i) - value(j)); }

  std::string label(int i) const override { return rat_str(value(i)); }

  std::optional<int> parse_point(const std::string& s) const override {
    auto q = parse_rational(s);
    if (!q) return std::nullopt;
    return index(*q);
  }

  std::vector<Ball> sigma_level(int n) const override {
    std::vector<Ball> out;
    for (int i = -n; i <= n; ++i) out.push_back({index(Rational(i)), Rational(1)});
    return out;
  }

  Rational sigma_margin(int n) const override { return pow2(-n - 2); }

  bool special_in_sigma(int id, int n) const override {
    return rat_abs(value(id)) <= n + 1;
  }

  Rational dist_to_closed_ball(int x, const Ball& b) const override {
    Rational d = dist(x, b.center);
    return d <= b.radius ? Rational(0) : Rational(d - b.radius);
  }

  // closed intervals of the union, merged and sorted
  std::vector<std::pair<Rational, Rational>> intervals(const std::vector<Ball>& uni) const {
    std::vector<std::pair<Rational, Rational>> iv;
    for (const Ball& u : uni) {
      Rational c = value(u.center);
      iv.emplace_back(c - u.radius, c + u.radius);
    }
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& p : iv) {
      if (!merged.empty() && p.first <= merged.back().second)
        merged.back().second = rat_max(merged.back().second, p.second);
      else
        merged.push_back(p);
    }
    return merged;
  }

  bool ball_in_union(const Ball& b, const Rational& pad,
                     const std::vector<Ball>& uni) const override {
    Rational c = value(b.center);
    Rational lo = c - b.radius - pad, hi = c + b.radius + pad;
    for (auto& iv : intervals(uni))
      if (iv.first <= lo && hi <= iv.second) return true;
    return false;
  }

  std::vector<Ball> cover_of_union(const std::vector<Ball>& uni,
                                   const Rational& eps) const override {
    std::vector<Ball> out;
    Rational step = eps / 2;
    for (auto& iv : intervals(uni)) {
      Rational c = iv.first;
      while (true) {
        out.push_back({index(c), eps});
        if (c >= iv.second) break;
        c += step;
      }
    }
    return out;
  }

  std::pair<Ball, CompactName> neighborhood(const CauchyName& x) const override {
    int c = x.at(3);
    const RealsSpace* self = this;
    CompactName k{[self, c](int n) {
      return self->cover_of_union({Ball{c, Rational(1, 2)}}, pow2(-n));
    }};
    return {Ball{c, Rational(1, 2)}, k};
  }

 private:
  mutable std::vector<Rational> ext_;
  mutable std::map<Rational, int> ext_idx_;
};

// ----------------------------------------------------------------------- z2

int lowbit(unsigned v) {
  int k = 0;
  while (!(v & 1)) {
    v >>= 1;
    ++k;
  }
  return k;
}

class Z2Space final : public Space {
 public:
  std::string key() const override { return "z2"; }
  bool is_compact() const override { return true; }

  Rational dist(int i, int j) const override {
    if (i == j) return Rational(0);
    return pow2(-lowbit(unsigned(i) ^ unsigned(j)));
  }

  std::string label(int i) const override {
    if (i == 0) return "0";
    std::string s;
    for (unsigned v = unsigned(i); v; v >>= 1) s.push_back(char('0' + (v & 1)));
    return s;  // LSB first
  }

  std::optional<int> parse_point(const std::string& s) const override {
    if (s.empty()) return std::nullopt;
    long v = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') return std::nullopt;
      if (s[i] == '1') v |= 1L << i;
    }
    if (v > (1L << 30)) return std::nullopt;
    return int(v);
  }

  std::vector<Ball> sigma_level(int) const override {
    // the whole space; radius above the diameter so the open content is
    // also everything
    return {Ball{0, Rational(3, 2)}};
  }

  Rational sigma_margin(int n) const override { return pow2(-n - 2); }

  bool special_in_sigma(int, int) const override { return true; }

  // least k with 2^-k <= r (depth of the closed r-ball cylinder)
  static int closed_depth(const Rational& r) {
    if (r >= 1) return 0;
    int k = 1;
    while (pow2(-k) > r) {
      if (++k > 62) throw std::invalid_argument("z2: radius too small");
    }
    return k;
  }

  // least k with 2^-k < r (depth of the open r-ball cylinder)
  static int open_depth(const Rational& r) {
    int k = 0;
    while (pow2(-k) >= r) {
      if (++k > 62) throw std::invalid_argument("z2: radius too small");
    }
    return k;
  }

  Rational dist_to_closed_ball(int x, const Ball& b) const override {
    Rational d = dist(x, b.center);
    return d <= b.radius ? Rational(0) : d;
  }

  bool ball_in_union(const Ball& b, const Rational& pad,
                     const std::vector<Ball>& uni) const override {
    int a = closed_depth(b.radius);
    if (pad > 0) a = std::min(a, closed_depth(pad));
    int dmax = a;
    for (const Ball& u : uni) dmax = std::max(dmax, closed_depth(u.radius));
    long base = long(b.center) & ((1L << a) - 1);
    for (long t = 0; t < (1L << (dmax - a)); ++t) {
      long res = base | (t << a);
      bool hit = false;
      for (const Ball& u : uni) {
        int du = closed_depth(u.radius);
        if ((res & ((1L << du) - 1)) == (long(u.center) & ((1L << du) - 1))) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  }

  std::vector<Ball> cover_of_union(const std::vector<Ball>& uni,
                                   const Rational& eps) const override {
    int de = open_depth(eps);
    std::vector<Ball> out;
    for (long res = 0; res < (1L << de); ++res) {
      bool meets = false;
      for (const Ball& u : uni) {
        int du = closed_depth(u.radius);
        int a = std::min(de, du);
        if ((res & ((1L << a) - 1)) == (long(u.center) & ((1L << a) - 1))) {
          meets = true;
          break;
        }
      }
      if (meets) out.push_back({int(res), eps});
    }
    return out;
  }

  std::optional<std::pair<int, Rational>> bounded_certificate() const override {
    return std::make_pair(0, Rational(1));
  }

  std::pair<Ball, CompactName> neighborhood(const CauchyName& x) const override {
    int c = x.at(1) & 1;
    const Z2Space* self = this;
    CompactName k{[self, c](int n) {
      return self->cover_of_union({Ball{c, Rational(3, 4)}}, pow2(-n));
    }};
    return {Ball{c, Rational(3, 4)}, k};
  }
};

}  // namespace

BigInt discrete_value(int id) {
  if (id == 0) return 0;
  if (id % 2 == 1) return (id + 1) / 2;
  return -(id / 2);
}

int discrete_index(const BigInt& v) {
  if (v == 0) return 0;
  BigInt idx = v > 0 ? BigInt(2 * v - 1) : BigInt(-2 * v);
  if (idx > (1 << 30)) throw std::out_of_range("discrete-z: value too large");
  return int(idx);
}

const Space& discrete_z_space() {
  static DiscreteZ sp;
  return sp;
}

const Space& reals_space() {
  static RealsSpace sp;
  return sp;
}

const Space& z2_space() {
  static Z2Space sp;
  return sp;
}

Rational reals_value(const Space& sp, int id) {
  return dynamic_cast<const RealsSpace&>(sp).value(id);
}

int reals_index(const Space& sp, const Rational& q) {
  return dynamic_cast<const RealsSpace&>(sp).index(q);
}

const Space& space_registry(const std::string& key) {
  if (key == "discrete-z") return discrete_z_space();
  if (key == "reals") return reals_space();
  if (key == "z2") return z2_space();
  throw std::invalid_argument("unknown space instance: " + key);
}

std::vector<std::string> space_keys() { return {"discrete-z", "reals", "z2"}; }

}  // namespace lclab
