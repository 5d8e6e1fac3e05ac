#include "lclab/simplegroup.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <tuple>

namespace lclab {

// ----------------------------------------------------------- element algebra

Element el_add(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [g, c] : b) {
    BigInt v = out.count(g) ? out[g] + c : c;
    if (v == 0)
      out.erase(g);
    else
      out[g] = v;
  }
  return out;
}

Element el_neg(const Element& a) {
  Element out;
  for (const auto& [g, c] : a) out[g] = -c;
  return out;
}

Element el_scale(const BigInt& n, const Element& a) {
  Element out;
  if (n == 0) return out;
  for (const auto& [g, c] : a) out[g] = n * c;
  return out;
}

bool el_zero(const Element& a) { return a.empty(); }

std::string el_str(const Element& a) {
  if (a.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : a) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? "-" : "+";
    }
    if (mag != 1) s += mag.str() + "*";
    s += "b" + std::to_string(g);
  }
  return s;
}

std::optional<Element> el_parse(const std::string& s) {
  if (s == "0") return Element{};
  Element out;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) return std::nullopt;
    BigInt coeff = 1;
    size_t star = term.find('*');
    std::string gen = term;
    if (star != std::string::npos) {
      try {
        coeff = BigInt(term.substr(0, star));
      } catch (const std::exception&) {
        return std::nullopt;
      }
      gen = term.substr(star + 1);
    }
    if (gen.size() < 2 || gen[0] != 'b') return std::nullopt;
    int g;
    try {
      g = std::stoi(gen.substr(1));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    BigInt v = sign * coeff + (out.count(g) ? out[g] : BigInt(0));
    if (v == 0)
      out.erase(g);
    else
      out[g] = v;
    i = j;
  }
  return out;
}

// ------------------------------------------------------------- stage algebra

StageStructure initial_stage() {
  StageStructure st;
  st.codes.push_back(Element{});
  st.nf_index.emplace("0", 0);
  st.shell = 1;
  st.odometer = {-1};
  return st;
}

Element normal_form_at(const StageStructure& st, Element e, int max_stage) {
  for (int guard = 0;; ++guard) {
    if (guard > 1000) throw std::runtime_error("normal form did not stabilize");
    bool changed = false;
    for (const Relation& r : st.relations) {
      if (r.stage > max_stage) continue;
      auto it = e.find(r.target);
      if (it == e.end()) continue;
      BigInt c = it->second;
      e.erase(it);
      e = el_add(e, el_scale(c, r.expr));
      changed = true;
    }
    if (!changed) return e;
  }
}

Element normal_form(const StageStructure& st, Element e) {
  return normal_form_at(st, std::move(e), st.stage + 1);
}

int code_of(StageStructure& st, const Element& e) {
  std::string key = el_str(normal_form(st, e));
  auto it = st.nf_index.find(key);
  if (it != st.nf_index.end()) return it->second;
  int id = int(st.codes.size());
  st.codes.push_back(e);
  st.nf_index.emplace(key, id);
  return id;
}

int extend_enumeration(StageStructure& st, int want, int step_cap) {
  int added = 0;
  for (int step = 0; added < want && step < step_cap; ++step) {
    Element e;
    for (size_t i = 0; i < st.odometer.size(); ++i)
      if (st.odometer[i] != 0) e[int(i)] = st.odometer[i];
    int before = int(st.codes.size());
    code_of(st, e);
    if (int(st.codes.size()) > before) ++added;
    // advance the mixed-radix counter, growing the shell on wrap
    size_t i = 0;
    while (i < st.odometer.size()) {
      if (++st.odometer[i] <= st.shell) break;
      st.odometer[i] = -st.shell;
      ++i;
    }
    if (i == st.odometer.size()) {
      ++st.shell;
      st.odometer.assign(size_t(st.shell), -st.shell);
    }
  }
  if (st.largest_constant < st.shell) st.largest_constant = st.shell;
  return added;
}

namespace {

bool target_is_fresh(const StageStructure& st, int t, const Element& xn) {
  if (xn.count(t)) return false;
  for (const Relation& r : st.relations) {
    if (r.target == t) return false;
    if (r.expr.count(t)) return false;
  }
  return true;
}

BigInt big_max(const BigInt& a, const BigInt& b) { return a < b ? b : a; }

}  // namespace

StageStructure introduce_relation(const StageStructure& st, int target, const Element& x,
                                  const RelationMode& mode, bool force) {
  Element xn = normal_form(st, x);
  if (!force) {
    if (el_zero(xn)) throw std::invalid_argument("relation source is zero");
    if (!(mode.n > st.largest_constant))
      throw std::invalid_argument("multiplier must exceed every constant used so far");
    if (!target_is_fresh(st, target, xn))
      throw std::invalid_argument("relation target is not fresh");
    if (mode.second) {
      if (!mode.m) throw std::invalid_argument("pair mode needs a second multiplier");
      if (!(*mode.m > st.largest_constant))
        throw std::invalid_argument("second multiplier must exceed every constant");
      if (gcd(mode.n, *mode.m) != 1)
        throw std::invalid_argument("pair multipliers must be coprime");
      if (*mode.second == target || !target_is_fresh(st, *mode.second, xn))
        throw std::invalid_argument("second target is not fresh");
    }
  }
  StageStructure out = st;
  out.relations.push_back({target, el_scale(mode.n, xn), st.stage});
  out.largest_constant = big_max(out.largest_constant, mode.n);
  out.next_fresh_gen = std::max(out.next_fresh_gen, target + 1);
  if (mode.second) {
    out.relations.push_back({*mode.second, el_scale(*mode.m, xn), st.stage});
    out.largest_constant = big_max(out.largest_constant, *mode.m);
    out.next_fresh_gen = std::max(out.next_fresh_gen, *mode.second + 1);
  }
  for (const auto& [g, c] : xn)
    out.largest_constant = big_max(out.largest_constant, c < 0 ? BigInt(-c) : c);
  out.nf_index.clear();
  for (size_t c = 0; c < out.codes.size(); ++c)
    out.nf_index.emplace(el_str(normal_form(out, out.codes[c])), int(c));
  return out;
}

std::optional<std::pair<int, int>> preservation_check(const StageStructure& st) {
  std::map<std::string, int> seen;
  for (size_t c = 0; c < st.codes.size(); ++c) {
    std::string key = el_str(normal_form(st, st.codes[c]));
    auto [it, fresh] = seen.emplace(key, int(c));
    if (!fresh) return std::make_pair(it->second, int(c));
  }
  return std::nullopt;
}

// -------------------------------------------------------------- oracle doubles

namespace {

// shared per-code cache so that convergent answers never change
using AnswerCache = std::shared_ptr<std::map<int, int>>;

OracleDouble nf_based_oracle(std::string name, bool expects,
                             std::function<int(const Element&)> classify) {
  AnswerCache cache = std::make_shared<std::map<int, int>>();
  OracleDouble o;
  o.name = std::move(name);
  o.expects_satisfied = expects;
  o.answer = [cache, classify](int code, int stage,
                               const StageStructure& st) -> std::optional<int> {
    if (stage < 3) return std::nullopt;  // defer a little before converging
    auto it = cache->find(code);
    if (it != cache->end()) return it->second;
    int a = classify(normal_form(st, st.codes.at(size_t(code))));
    cache->emplace(code, a);
    return a;
  };
  return o;
}

}  // namespace

OracleDouble make_oracle(const std::string& name) {
  if (name == "constant-1") {
    OracleDouble o;
    o.name = name;
    o.answer = [](int, int, const StageStructure&) { return std::optional<int>(1); };
    return o;
  }
  if (name == "all-diverge") {
    OracleDouble o;
    o.name = name;
    o.answer = [](int, int, const StageStructure&) { return std::optional<int>(); };
    return o;
  }
  if (name == "parity-of-coefficient-sum")
    return nf_based_oracle(name, true, [](const Element& e) {
      BigInt sum = 0;
      for (const auto& [g, c] : e) sum += c;
      return sum % 2 == 0 ? 1 : 0;
    });
  if (name == "even-first-coefficient")
    return nf_based_oracle(name, true, [](const Element& e) {
      auto it = e.find(0);
      BigInt c = it == e.end() ? BigInt(0) : it->second;
      return c % 2 == 0 ? 1 : 0;
    });
  throw std::invalid_argument("unknown oracle double: " + name);
}

std::vector<std::string> oracle_names() {
  return {"constant-1", "all-diverge", "parity-of-coefficient-sum",
          "even-first-coefficient"};
}

// ---------------------------------------------------------------- the runner

namespace {

// extended gcd: returns (g, a, b) with a*x + b*y = g
std::tuple<BigInt, BigInt, BigInt> egcd(BigInt x, BigInt y) {
  BigInt a0 = 1, b0 = 0, a1 = 0, b1 = 1;
  while (y != 0) {
    BigInt q = x / y;
    BigInt r = x - q * y;
    x = y;
    y = r;
    BigInt a2 = a0 - q * a1, b2 = b0 - q * b1;
    a0 = a1;
    b0 = b1;
    a1 = a2;
    b1 = b2;
  }
  return {x, a0, b0};
}

bool is_prime(const BigInt& p) {
  if (p < 2) return false;
  for (BigInt d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigInt next_prime_above(BigInt n) {
  BigInt p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

}  // namespace

RunResult run_construction(const std::vector<OracleDouble>& oracles, int stages) {
  RunResult run;
  run.st = initial_stage();
  run.codes_at_stage.push_back(int(run.st.codes.size()));
  for (size_t e = 0; e < oracles.size(); ++e) {
    Requirement r;
    r.index = int(e);
    run.requirements.push_back(r);
  }

  auto query = [&run](Requirement& r, const OracleDouble& o, int code) -> std::optional<int> {
    auto ans = o.answer(code, run.st.stage, run.st);
    if (!ans) {
      auto it = r.answers.find(code);
      if (it != r.answers.end()) return it->second;
      return std::nullopt;
    }
    auto it = r.answers.find(code);
    if (it != r.answers.end() && it->second != *ans) {
      run.error = "ORACLE_INSTABILITY";
      run.events.push_back({run.st.stage, r.index, "instability",
                            "code " + std::to_string(code) + " answered " +
                                std::to_string(it->second) + " then " +
                                std::to_string(*ans)});
      return std::nullopt;
    }
    r.answers.emplace(code, *ans);
    return ans;
  };

  for (int s = 1; s <= stages && run.error.empty(); ++s) {
    run.st.stage = s;
    int added = extend_enumeration(run.st, 50, 4000);
    run.events.push_back({s, -1, "codes", std::to_string(added) + " new codes"});

    bool acted = false;
    for (size_t e = 0; e < oracles.size() && !acted && run.error.empty(); ++e) {
      Requirement& r = run.requirements[e];
      if (r.state == ReqState::Satisfied) continue;
      int queries = 0;

      if (r.state == ReqState::WaitingXY) {
        while ((!r.x_code || !r.y_code) && r.scan_cursor < int(run.st.codes.size()) &&
               queries < 25 && run.error.empty()) {
          int c = r.scan_cursor;
          auto ans = query(r, oracles[e], c);
          ++queries;
          if (!ans) break;  // deferred; retry this code next stage
          if (*ans == 1 && !r.x_code &&
              !el_zero(normal_form(run.st, run.st.codes[size_t(c)]))) {
            r.x_code = c;
            run.events.push_back({s, r.index, "found-x", "code " + std::to_string(c)});
          }
          if (*ans == 0 && !r.y_code) {
            r.y_code = c;
            run.events.push_back({s, r.index, "found-y", "code " + std::to_string(c)});
          }
          ++r.scan_cursor;
        }
        if (r.x_code && r.y_code) {
          int base = std::max({3 * r.index + 1, run.st.next_fresh_gen, s + 1,
                               run.st.shell + 1});
          if (run.st.largest_constant < 1000000)
            base = std::max(base, int(run.st.largest_constant) + 1);
          r.j = base;
          r.k = base + 1;
          run.st.next_fresh_gen = base + 2;
          r.bj_code = code_of(run.st, Element{{*r.j, 1}});
          r.bk_code = code_of(run.st, Element{{*r.k, 1}});
          r.state = ReqState::Picked;
          run.events.push_back({s, r.index, "picked",
                                "b" + std::to_string(*r.j) + ", b" + std::to_string(*r.k)});
        }
      }

      if (r.state == ReqState::Picked && run.error.empty()) {
        auto aj = query(r, oracles[e], *r.bj_code);
        auto ak = query(r, oracles[e], *r.bk_code);
        if (aj && ak) {
          BigInt n = 2 * (run.st.largest_constant + s + 2);
          Witness w;
          w.x_code = *r.x_code;
          w.y_code = *r.y_code;
          w.j = *r.j;
          w.k = *r.k;
          w.bj_code = *r.bj_code;
          w.bk_code = *r.bk_code;
          w.n = n;
          if (*aj == 0 || *ak == 0) {
            // Case 1: a fresh generator outside H_e becomes n * x
            int tgt = *aj == 0 ? *r.j : *r.k;
            w.case_no = 1;
            w.bj_code = *aj == 0 ? *r.bj_code : *r.bk_code;
            w.j = tgt;
            run.st = introduce_relation(run.st, tgt, run.st.codes[size_t(*r.x_code)],
                                        RelationMode{n, std::nullopt, std::nullopt});
            run.events.push_back({s, r.index, "acted",
                                  "case 1: b" + std::to_string(tgt) + " = " + n.str() +
                                      " * code " + std::to_string(*r.x_code)});
          } else {
            // Case 2: both fresh generators are in H_e; tie them to y
            BigInt m = next_prime_above(2 * n);
            w.case_no = 2;
            w.m = m;
            auto [g, a, b] = egcd(n, m);
            (void)g;
            w.bez_a = a;
            w.bez_b = b;
            run.st = introduce_relation(run.st, *r.j, run.st.codes[size_t(*r.y_code)],
                                        RelationMode{n, m, *r.k});
            run.events.push_back({s, r.index, "acted",
                                  "case 2: b" + std::to_string(*r.j) + " = " + n.str() +
                                      " * y, b" + std::to_string(*r.k) + " = " + m.str() +
                                      " * y, y = code " + std::to_string(*r.y_code)});
          }
          r.witness = w;
          r.state = ReqState::Satisfied;
          acted = true;
          if (auto bad = preservation_check(run.st)) {
            run.error = "PRESERVATION_VIOLATION";
            run.events.push_back({s, r.index, "preservation",
                                  "codes " + std::to_string(bad->first) + ", " +
                                      std::to_string(bad->second)});
          }
          for (size_t w2 = e + 1; w2 < oracles.size(); ++w2) {
            Requirement& r2 = run.requirements[w2];
            if (r2.state == ReqState::Satisfied) continue;
            r2.state = ReqState::WaitingXY;
            r2.x_code.reset();
            r2.y_code.reset();
            r2.j.reset();
            r2.k.reset();
            r2.bj_code.reset();
            r2.bk_code.reset();
            r2.scan_cursor = 0;
            ++r2.init_count;
            run.events.push_back({s, int(w2), "initialized", ""});
          }
        }
      }
    }
    run.codes_at_stage.push_back(int(run.st.codes.size()));
  }

  for (Requirement& r : run.requirements)
    if (r.state == ReqState::Picked) r.state = ReqState::Stuck;
  return run;
}

bool check_embedding(const StageStructure& st, int codes_limit, int s) {
  // equality classes of the coded elements must agree between the relation
  // sets of stages s and s+1: equal stays equal by substitution, so it is
  // enough that distinct classes stay distinct
  std::map<std::string, std::string> forward;
  std::map<std::string, std::string> backward;
  for (int c = 0; c < codes_limit && c < int(st.codes.size()); ++c) {
    std::string ks = el_str(normal_form_at(st, st.codes[size_t(c)], s));
    std::string ks1 = el_str(normal_form_at(st, st.codes[size_t(c)], s + 1));
    auto [itf, ff] = forward.emplace(ks, ks1);
    if (!ff && itf->second != ks1) return false;
    auto [itb, fb] = backward.emplace(ks1, ks);
    if (!fb && itb->second != ks) return false;
  }
  return true;
}

bool check_embedding(const RunResult& run, int s) {
  if (s < 0 || s + 1 >= int(run.codes_at_stage.size())) return false;
  return check_embedding(run.st, run.codes_at_stage[size_t(s)], s);
}

WitnessReport diagonalization_witness(const Requirement& req) {
  if (req.state != ReqState::Satisfied || !req.witness) return WitnessReport{};
  return WitnessReport{true, *req.witness};
}

bool relations_acyclic(const StageStructure& st) {
  std::map<int, const Element*> rel;
  for (const Relation& r : st.relations) {
    if (rel.count(r.target)) return false;  // one relation per target
    rel[r.target] = &r.expr;
  }
  // follow substitutions from each target; a revisit is a cycle
  std::function<bool(int, std::set<int>&)> visit = [&](int t, std::set<int>& path) {
    if (path.count(t)) return false;
    auto it = rel.find(t);
    if (it == rel.end()) return true;
    path.insert(t);
    for (const auto& [g, c] : *it->second)
      if (!visit(g, path)) return false;
    path.erase(t);
    return true;
  };
  for (const auto& [t, expr] : rel) {
    std::set<int> path;
    if (!visit(t, path)) return false;
  }
  return true;
}

bool rank_preserved(const StageStructure& st) {
  std::set<int> bound;
  for (const Relation& r : st.relations) bound.insert(r.target);
  for (int e = 0; 3 * e <= st.stage; ++e) {
    int free_count = 0;
    for (int i = 0; i <= 3 * e; ++i)
      if (!bound.count(i)) ++free_count;
    if (free_count < e) return false;
  }
  return true;
}

// -------------------------------------- the construction output as a group

namespace {

class FreeAbelianSpace final : public Space {
 public:
  FreeAbelianSpace()
      : st_(run_construction({make_oracle("parity-of-coefficient-sum"),
                              make_oracle("even-first-coefficient")},
                             120)
                .st) {}

  int code(const Element& e) const { return code_of(st_, e); }
  Element nf(int id) const { return normal_form(st_, st_.codes.at(size_t(id))); }

  std::string key() const override { return "free-abelian-simple"; }
  bool is_compact() const override { return false; }

  Rational dist(int i, int j) const override { return i == j ? Rational(0) : Rational(1); }

  std::string label(int i) const override { return el_str(nf(i)); }

  std::optional<int> parse_point(const std::string& s) const override {
    auto e = el_parse(s);
    if (!e) return std::nullopt;
    return code(*e);
  }

  std::vector<Ball> sigma_level(int n) const override {
    std::vector<Ball> out;
    for (int i = 0; i <= n; ++i) out.push_back({i, Rational(1, 4)});
    return out;
  }

  Rational sigma_margin(int n) const override { return pow2(-n - 2); }

  std::optional<std::vector<int>> sigma_level_specials(int n) const override {
    std::vector<int> ids(size_t(n) + 1);
    for (int i = 0; i <= n; ++i) ids[size_t(i)] = i;
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
    for (const Ball& u : uni)
      if (u.radius >= 1 || (!whole && u.center == b.center)) return true;
    return false;
  }

  std::vector<Ball> cover_of_union(const std::vector<Ball>& uni,
                                   const Rational& eps) const override {
    std::vector<Ball> out;
    std::vector<int> seen;
    for (const Ball& u : uni) {
      if (u.radius >= 1)
        throw std::invalid_argument("free-abelian-simple: cannot cover an unbounded ball");
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

 private:
  mutable StageStructure st_;
};

const FreeAbelianSpace& fa_space() {
  static FreeAbelianSpace sp;
  return sp;
}

class FreeAbelianGroup final : public Group {
 public:
  std::string key() const override { return "free-abelian-simple"; }
  const Space& space() const override { return fa_space(); }
  int mul_special(int i, int j) const override {
    return fa_space().code(el_add(fa_space().nf(i), fa_space().nf(j)));
  }
  std::optional<int> inv_special(int i) const override {
    return fa_space().code(el_neg(fa_space().nf(i)));
  }
  Ball ball_product(const Ball& a, const Ball& b) const override {
    Rational r = (a.radius > 1 || b.radius > 1) ? rat_max(a.radius, b.radius)
                                                : rat_min(a.radius, b.radius);
    return Ball{mul_special(a.center, b.center), r};
  }
  Ball ball_inverse(const Ball& b) const override {
    return Ball{*inv_special(b.center), b.radius};
  }
};

}  // namespace

const Group& free_abelian_simple_group() {
  static FreeAbelianGroup g;
  return g;
}

}  // namespace lclab
