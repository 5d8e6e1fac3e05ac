#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lclab/chabauty.hpp"
#include "lclab/groups.hpp"
#include "lclab/hyperspace.hpp"
#include "lclab/instances.hpp"
#include "lclab/locally_compact.hpp"
#include "lclab/meetgroupoid.hpp"
#include "lclab/onepoint.hpp"
#include "lclab/simplegroup.hpp"
#include "lclab/space.hpp"
#include "lclab/vectors.hpp"

using json = nlohmann::json;
using namespace lclab;

namespace {

constexpr std::uint64_t kDefaultSeed = 20251234;
constexpr int kSchemaVersion = 1;

std::uint64_t current_seed() {
  if (const char* env = std::getenv("LCLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("LCLAB_SEED", "must be a non-negative integer");
    }
  }
  return kDefaultSeed;
}

json trace_header(const std::string& command, std::uint64_t seed) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}, {"seed", seed}};
}

const Space& get_space(const std::string& key) { return space_registry(key); }

OnePointSpace make_onepoint(const std::string& key) {
  return OnePointSpace(get_space(key));  // throws on compact instances
}

StarPoint parse_star(const OnePointSpace& ops, const std::string& text) {
  auto p = ops.parse(text);
  if (!p) throw CLI::ValidationError("point", "cannot parse '" + text + "'");
  return *p;
}

HFinite parse_star_set(const OnePointSpace& ops, const std::string& text) {
  std::vector<StarPoint> pts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) pts.push_back(parse_star(ops, item));
  }
  if (pts.empty()) throw CLI::ValidationError("set", "empty set literal");
  return HFinite::of(std::move(pts));
}

MeetGroupoid groupoid_instance(const std::string& key) {
  if (key == "z2") return MeetGroupoid::padic(2);
  if (key == "z3") return MeetGroupoid::padic(3);
  if (key == "trivial") return MeetGroupoid::trivial();
  if (key.rfind("cyclic:", 0) == 0) return MeetGroupoid::finite_cyclic(std::stoi(key.substr(7)));
  throw CLI::ValidationError("instance", "unknown groupoid instance '" + key + "'");
}

json ball_json(const Space& sp, const Ball& b) {
  return json{{"center", sp.label(b.center)}, {"radius", rat_str(b.radius)}};
}

void write_json(const std::string& path, const json& doc) {
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
}

int cmd_remetrize_delta(const std::string& inst, const std::string& p,
                        const std::string& q, int prec) {
  const Space& sp = get_space(inst);
  auto pi = sp.parse_point(p), qi = sp.parse_point(q);
  if (!pi || !qi) throw CLI::ValidationError("point", "cannot parse point literal");
  ProperMetric pm = proper_remetrize(sp);
  (void)prec;  // exact on specials for all shipped instances
  std::cout << rat_str(pm.delta_special(*pi, *qi)) << "\n";
  return 0;
}

int cmd_sigma_info(const std::string& inst, int levels) {
  const Space& sp = get_space(inst);
  StrongSigmaSequence ssq = sigma_sequence(sp);
  json doc = trace_header("sigma info", current_seed());
  doc["instance"] = inst;
  json lv = json::array();
  for (int n = 0; n <= levels; ++n) {
    json balls = json::array();
    for (const Ball& b : ssq.level(n)) balls.push_back(ball_json(sp, b));
    lv.push_back({{"n", n}, {"c_n", rat_str(ssq.margin(n))}, {"balls", balls}});
  }
  doc["levels"] = lv;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_compactify_dist(const std::string& inst, const std::string& p,
                        const std::string& q, int prec) {
  OnePointSpace ops = make_onepoint(inst);
  (void)prec;  // star distances between specials are exact
  std::cout << rat_str(ops.star_dist(parse_star(ops, p), parse_star(ops, q))) << "\n";
  return 0;
}

int cmd_compactify_cover(const std::string& inst, int level, bool as_json) {
  OnePointSpace ops = make_onepoint(inst);
  auto cov = ops.star_cover(level);
  if (as_json) {
    json doc = trace_header("compactify cover", current_seed());
    doc["instance"] = inst;
    doc["level"] = level;
    json balls = json::array();
    for (const StarBall& b : cov)
      balls.push_back({{"center", ops.label(b.center)}, {"radius", rat_str(b.radius)}});
    doc["balls"] = balls;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const StarBall& b : cov)
      std::cout << "B(" << ops.label(b.center) << ", " << rat_str(b.radius) << ")\n";
  }
  return 0;
}

int cmd_hyper_dh(const std::string& inst, const std::string& a, const std::string& b,
                 int prec) {
  OnePointSpace ops = make_onepoint(inst);
  (void)prec;  // exact on finite special sets
  std::cout << rat_str(
                   hausdorff_distance(parse_star_set(ops, a), parse_star_set(ops, b), ops))
            << "\n";
  return 0;
}

int cmd_hyper_split(const std::string& preset, long budget) {
  const Space* sp = nullptr;
  CompactName k;
  if (preset == "two-point") {
    sp = &discrete_z_space();
    k = CompactName{[](int n) {
      return std::vector<Ball>{Ball{0, pow2(-n)}, Ball{discrete_index(1), pow2(-n)}};
    }};
  } else if (preset == "z2") {
    sp = &z2_space();
    k = CompactName{[](int n) {
      std::vector<Ball> out;
      for (int id = 0; id < (1 << std::min(n, 12)); ++id) out.push_back(Ball{id, pow2(-n)});
      return out;
    }};
  } else if (preset == "interval") {
    sp = &reals_space();
    const Space* rp = &reals_space();
    k = CompactName{[rp](int n) {
      std::vector<Ball> out;
      int m = 1 << std::min(n, 12);
      for (int i = 0; i <= m; ++i)
        out.push_back(Ball{reals_index(*rp, Rational(i, m)), pow2(-n)});
      return out;
    }};
  } else {
    throw CLI::ValidationError("preset", "expected two-point, z2, or interval");
  }
  SplitReport rep = clopen_split_search(k, *sp, budget);
  if (rep.found) {
    std::cout << "SPLIT level " << rep.level << "\n";
    for (const Ball& b : rep.u) std::cout << "U B(" << sp->label(b.center) << ", " << rat_str(b.radius) << ")\n";
    for (const Ball& b : rep.v) std::cout << "V B(" << sp->label(b.center) << ", " << rat_str(b.radius) << ")\n";
  } else {
    std::cout << "NONE_FOUND\n";
  }
  return 0;
}

int cmd_group_check(const std::string& inst, int samples, int prec) {
  const Group& g = group_registry(inst);
  std::uint64_t seed = current_seed();
  std::mt19937_64 rng(seed);
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < samples; ++i)
    triples.push_back({int(rng() % 16), int(rng() % 16), int(rng() % 16)});
  AxiomReport rep = check_group_axioms(g, triples, prec);
  json doc = trace_header("group check", seed);
  doc["instance"] = inst;
  doc["samples"] = samples;
  doc["prec"] = prec;
  doc["verdict"] = rep.pass ? "PASS" : "FAIL";
  if (!rep.pass) {
    doc["law"] = rep.law;
    doc["triple"] = {rep.triple[0], rep.triple[1], rep.triple[2]};
    doc["defect"] = rat_str(rep.defect);
  }
  std::cout << doc.dump(2) << "\n";
  return rep.pass ? 0 : 1;
}

int cmd_chabauty_refute(const std::string& inst, const std::string& set_text, long budget,
                        const std::string& trace_path) {
  const Group& g = group_registry(inst);
  OnePointSpace ops(g.space());
  HFinite set = parse_star_set(ops, set_text);
  HyperName k{[set](int) { return set; }};
  RefuteResult res = refute_subgroup(k, g, ops, budget, !trace_path.empty());
  json doc = trace_header("chabauty refute", current_seed());
  doc["instance"] = inst;
  doc["set"] = set_text;
  doc["budget"] = budget;
  doc["steps_used"] = res.steps_used;
  if (res.refuted) {
    doc["verdict"] = "REFUTED";
    doc["reason"] = res.reason == RefuteReason::Triple            ? "TRIPLE"
                    : res.reason == RefuteReason::MissingInfinity ? "MISSING_INFINITY"
                                                                  : "MISSING_IDENTITY";
    if (res.triple) {
      auto sb = [&](const StarBall& b) {
        return json{{"center", ops.label(b.center)}, {"radius", rat_str(b.radius)}};
      };
      doc["triple"] = {{"B", sb(res.triple->b)},
                       {"D", sb(res.triple->d)},
                       {"V", sb(res.triple->v)},
                       {"slack", rat_str(res.triple->slack)}};
    }
  } else {
    doc["verdict"] = "NOT_REFUTED";
  }
  if (!trace_path.empty()) {
    json steps = json::array();
    for (const RefuteRecord& r : res.trace)
      steps.push_back({{"step", r.step},
                       {"channel", r.channel},
                       {"margin", r.margin},
                       {"detail", r.detail}});
    doc["steps"] = steps;
    write_json(trace_path, doc);
  }
  std::cout << doc["verdict"].get<std::string>() << "\n";
  return 0;
}

int cmd_simple_group_run(const std::string& oracle_path, int stages,
                         const std::string& trace_path) {
  std::vector<OracleDouble> oracles;
  std::string echo = oracle_path;
  if (!oracle_path.empty()) {
    std::ifstream in(oracle_path);
    if (!in) throw CLI::ValidationError("oracles", "cannot open " + oracle_path);
    json spec = json::parse(in);
    const json& arr = spec.is_array() ? spec : spec.at("oracles");
    for (const auto& item : arr)
      oracles.push_back(make_oracle(item.get<std::string>()));
  }
  RunResult run = run_construction(oracles, stages);
  json doc = trace_header("simple-group run", current_seed());
  doc["stages"] = stages;
  doc["oracles_file"] = echo;
  doc["codes"] = run.st.codes.size();
  doc["relations"] = run.st.relations.size();
  doc["error"] = run.error;
  json reqs = json::array();
  for (const Requirement& r : run.requirements) {
    json jr = {{"index", r.index},
               {"state", r.state == ReqState::WaitingXY   ? "WAITING_XY"
                         : r.state == ReqState::Picked    ? "PICKED"
                         : r.state == ReqState::Satisfied ? "SATISFIED"
                                                          : "STUCK"},
               {"initialized", r.init_count}};
    if (r.witness) {
      jr["witness"] = {{"case", r.witness->case_no}, {"x", r.witness->x_code},
                       {"y", r.witness->y_code},     {"j", r.witness->j},
                       {"k", r.witness->k},          {"n", r.witness->n.str()},
                       {"m", r.witness->m.str()}};
    }
    reqs.push_back(jr);
  }
  doc["requirements"] = reqs;
  if (!trace_path.empty()) {
    json events = json::array();
    for (const StageEvent& e : run.events)
      events.push_back({{"stage", e.stage},
                        {"requirement", e.requirement},
                        {"kind", e.kind},
                        {"detail", e.detail}});
    doc["events"] = events;
    write_json(trace_path, doc);
  }
  std::cout << (run.error.empty() ? "OK" : run.error) << "\n";
  return run.error.empty() ? 0 : 1;
}

int cmd_groupoid_axioms(const std::string& inst, int depth, bool corrupt) {
  MeetGroupoid w = groupoid_instance(inst);
  ProductFn prod = nullptr;
  if (corrupt) {
    if (!w.is_padic())
      throw CLI::ValidationError("corrupt", "corruption preset needs a padic instance");
    int p = w.prime();
    prod = corrupt_product(w, Coset::of(p, 1), Coset::of(p, 1), Coset::of(p, 1));
  }
  GroupoidReport rep = check_axioms(w, depth, prod);
  if (rep.pass) {
    std::cout << "PASS depth " << depth << "\n";
    return 0;
  }
  std::cout << "FAIL(" << rep.axiom << ") witness";
  for (const Coset& c : rep.witness) std::cout << " " << coset_str(c);
  std::cout << "\n";
  return 1;
}

int cmd_groupoid_ideal(const std::string& inst, const std::string& ideal, int depth,
                       bool as_json) {
  MeetGroupoid w = groupoid_instance(inst);
  IdealSpec j = parse_ideal(w, ideal);
  IdealReport rep = ideal_kind(w, j, depth);
  if (as_json) {
    json doc = trace_header("groupoid ideal", current_seed());
    doc["instance"] = inst;
    doc["ideal"] = ideal;
    doc["depth"] = depth;
    doc["kind"] = ideal_kind_str(rep.kind);
    doc["inversion_closed"] = rep.inversion_closed;
    doc["detail"] = rep.detail;
    json wit = json::array();
    for (const Coset& c : rep.witness) wit.push_back(coset_str(c));
    doc["witness"] = wit;
    if (w.is_padic() && rep.kind != IdealKind::NotIdeal) doc["gamma"] = gamma(w, j, depth);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << ideal_kind_str(rep.kind) << "\n";
    if (!rep.detail.empty()) std::cout << rep.detail << "\n";
  }
  return rep.kind == IdealKind::NotIdeal ? 1 : 0;
}

int cmd_vectors(const std::string& module, bool as_json) {
  std::vector<std::string> modules =
      module == "all" ? vector_modules() : std::vector<std::string>{module};
  bool ok = true;
  json docs = json::array();
  for (const std::string& m : modules) {
    VectorDoc d = emit_test_vectors(m);
    ok = ok && d.all_match;
    if (as_json) {
      json entries = json::array();
      for (const VectorEntry& e : d.entries)
        entries.push_back({{"name", e.name},
                           {"oracle", e.oracle},
                           {"library", e.library},
                           {"match", e.match}});
      docs.push_back({{"module", d.module}, {"all_match", d.all_match}, {"entries", entries}});
    } else {
      std::cout << "module " << d.module << ": "
                << (d.all_match ? "ALL MATCH" : "MISMATCH") << "\n";
      for (const VectorEntry& e : d.entries)
        if (!e.match)
          std::cout << "  MISMATCH " << e.name << ": oracle=" << e.oracle
                    << " library=" << e.library << "\n";
    }
  }
  if (as_json) std::cout << docs.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for computable Polish spaces and groups"};
  app.require_subcommand(1);

  std::string inst, p, q, set_text, trace_path, ideal_text, module, preset, oracle_path;
  int prec = 10, levels = 4, level = 2, samples = 100, depth = 4, stages = 50;
  long budget = 100000;
  bool as_json = false, corrupt = false;

  auto* remetrize = app.add_subcommand("remetrize", "proper remetrization");
  auto* rdelta = remetrize->add_subcommand("delta", "delta distance between specials");
  rdelta->add_option("instance", inst)->required();
  rdelta->add_option("p", p)->required();
  rdelta->add_option("q", q)->required();
  rdelta->add_option("--prec", prec);

  auto* sigma = app.add_subcommand("sigma", "sigma-compact structure");
  auto* sinfo = sigma->add_subcommand("info", "print K_n presentations and c_n");
  sinfo->add_option("instance", inst)->required();
  sinfo->add_option("--levels", levels);

  auto* compactify = app.add_subcommand("compactify", "1-point compactification");
  auto* cdist = compactify->add_subcommand("dist", "star distance");
  cdist->add_option("instance", inst)->required();
  cdist->add_option("p", p)->required();
  cdist->add_option("q", q)->required();
  cdist->add_option("--prec", prec);
  auto* ccover = compactify->add_subcommand("cover", "finite star cover");
  ccover->add_option("instance", inst)->required();
  ccover->add_option("--level", level);
  ccover->add_flag("--json", as_json);

  auto* hyper = app.add_subcommand("hyper", "hyperspace operations");
  auto* hdh = hyper->add_subcommand("dh", "Hausdorff distance between finite sets");
  hdh->add_option("instance", inst)->required();
  hdh->add_option("setA", p)->required();
  hdh->add_option("setB", q)->required();
  hdh->add_option("--prec", prec);
  auto* hsplit = hyper->add_subcommand("split", "clopen split search");
  hsplit->add_option("preset", preset)->required();
  hsplit->add_option("--budget", budget);

  auto* group = app.add_subcommand("group", "computable group operations");
  auto* gcheck = group->add_subcommand("check", "verify group axioms on samples");
  gcheck->add_option("instance", inst)->required();
  gcheck->add_option("--samples", samples);
  gcheck->add_option("--prec", prec);

  auto* chab = app.add_subcommand("chabauty", "Chabauty-space refuter");
  auto* crefute = chab->add_subcommand("refute", "semi-decide non-subgroup");
  crefute->add_option("instance", inst)->required();
  crefute->add_option("--set", set_text)->required();
  crefute->add_option("--budget", budget);
  crefute->add_option("--trace", trace_path);

  auto* sg = app.add_subcommand("simple-group", "finite-injury construction");
  auto* sgrun = sg->add_subcommand("run", "run the priority construction");
  sgrun->add_option("--oracles", oracle_path);
  sgrun->add_option("--stages", stages);
  sgrun->add_option("--trace", trace_path);

  auto* groupoid = app.add_subcommand("groupoid", "meet groupoid calculus");
  auto* gax = groupoid->add_subcommand("check-axioms", "exhaustive axiom check");
  gax->add_option("--instance", inst)->required();
  gax->add_option("--depth", depth);
  gax->add_flag("--corrupt", corrupt);
  auto* gideal = groupoid->add_subcommand("ideal", "classify an ideal");
  gideal->add_option("--instance", inst)->required();
  gideal->add_option("--ideal", ideal_text)->required();
  gideal->add_option("--depth", depth);
  gideal->add_flag("--json", as_json);

  auto* vec = app.add_subcommand("vectors", "recompute derived example values");
  vec->add_option("module", module)->required();
  vec->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rdelta->parsed()) return cmd_remetrize_delta(inst, p, q, prec);
    if (sinfo->parsed()) return cmd_sigma_info(inst, levels);
    if (cdist->parsed()) return cmd_compactify_dist(inst, p, q, prec);
    if (ccover->parsed()) return cmd_compactify_cover(inst, level, as_json);
    if (hdh->parsed()) return cmd_hyper_dh(inst, p, q, prec);
    if (hsplit->parsed()) return cmd_hyper_split(preset, budget);
    if (gcheck->parsed()) return cmd_group_check(inst, samples, prec);
    if (crefute->parsed()) return cmd_chabauty_refute(inst, set_text, budget, trace_path);
    if (sgrun->parsed()) return cmd_simple_group_run(oracle_path, stages, trace_path);
    if (gax->parsed()) return cmd_groupoid_axioms(inst, depth, corrupt);
    if (gideal->parsed()) return cmd_groupoid_ideal(inst, ideal_text, depth, as_json);
    if (vec->parsed()) return cmd_vectors(module, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PromiseViolation& e) {
    std::cerr << "PROMISE_VIOLATION: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "usage error: missing subcommand\n";
  return 2;
}
