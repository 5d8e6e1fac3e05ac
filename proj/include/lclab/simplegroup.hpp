#pragma once

#include <map>
#include <stdexcept>

#include "lclab/groups.hpp"

namespace lclab {

/// Free abelian group element: finite integer combination of generators
/// b_i, stored as gen index -> nonzero coefficient.
using Element = std::map<int, BigInt>;

Element el_add(const Element& a, const Element& b);
Element el_neg(const Element& a);
Element el_scale(const BigInt& n, const Element& a);
bool el_zero(const Element& a);
std::string el_str(const Element& a);
std::optional<Element> el_parse(const std::string& s);

/// Substitution b_target -> expr, introduced at a stage.
struct Relation {
  int target = 0;
  Element expr;
  int stage = 0;
};

/// Finite stage of the construction: coded elements, relations so far, and
/// the odometer that streams new normal forms shell by shell.
struct StageStructure {
  int stage = 0;
  std::vector<Element> codes;           // code -> defining expression
  std::map<std::string, int> nf_index;  // current normal form -> least code
  std::vector<Relation> relations;
  BigInt largest_constant = 0;
  int next_fresh_gen = 1;
  // shell t enumerates coefficient vectors over b_0..b_{t-1} with |m| <= t
  int shell = 1;
  std::vector<int> odometer;
};

StageStructure initial_stage();  // code 0 names the zero element

/// Fixed point of relation substitution; optionally restricted to the
/// relations introduced by stage max_stage.
Element normal_form(const StageStructure& st, Element e);
Element normal_form_at(const StageStructure& st, Element e, int max_stage);

/// Code of e's element, assigning the next code when the normal form is new.
int code_of(StageStructure& st, const Element& e);

/// Advances the odometer until `want` new codes were assigned or the step
/// cap is hit; returns how many codes were added.
int extend_enumeration(StageStructure& st, int want, int step_cap);

struct RelationMode {
  BigInt n;                     // b_target = n * x
  std::optional<BigInt> m;      // pair mode: b_second = m * x
  std::optional<int> second;
};

class PreservationViolation : public std::runtime_error {
 public:
  PreservationViolation(int a, int b)
      : std::runtime_error("distinct codes " + std::to_string(a) + " and " +
                           std::to_string(b) + " merged"),
        code_a(a),
        code_b(b) {}
  int code_a, code_b;
};

/// Introduces b_target = n*x (and b_second = m*x in pair mode). Unless
/// force is set, rejects relations whose multipliers do not exceed every
/// constant used so far, whose targets are not fresh, or whose x is zero.
StageStructure introduce_relation(const StageStructure& st, int target, const Element& x,
                                  const RelationMode& mode, bool force = false);

/// First pair of distinct codes whose current normal forms coincide.
std::optional<std::pair<int, int>> preservation_check(const StageStructure& st);

/// Candidate characteristic function of a subgroup, answered per code with
/// explicit per-stage divergence; convergent answers must be stable.
struct OracleDouble {
  std::string name;
  bool expects_satisfied = false;
  std::function<std::optional<int>(int code, int stage, const StageStructure& st)> answer;
};

/// Built-ins: "constant-1", "all-diverge", "parity-of-coefficient-sum",
/// "even-first-coefficient".
OracleDouble make_oracle(const std::string& name);
std::vector<std::string> oracle_names();

enum class ReqState { WaitingXY, Picked, Satisfied, Stuck };

struct Witness {
  int case_no = 0;
  int x_code = -1, y_code = -1;
  int j = -1, k = -1;
  int bj_code = -1, bk_code = -1;
  BigInt n, m, bez_a, bez_b;
};

struct Requirement {
  int index = 0;
  ReqState state = ReqState::WaitingXY;
  std::optional<int> x_code, y_code;
  int scan_cursor = 0;
  std::optional<int> j, k, bj_code, bk_code;
  std::optional<Witness> witness;
  int init_count = 0;
  std::map<int, int> answers;  // stability cache: code -> converged answer
};

struct StageEvent {
  int stage = 0;
  int requirement = -1;
  std::string kind;  // "codes", "found-x", "found-y", "picked", "acted", "initialized"
  std::string detail;
};

struct RunResult {
  StageStructure st;
  std::vector<Requirement> requirements;
  std::vector<StageEvent> events;
  std::vector<int> codes_at_stage;  // [s] = codes assigned by the end of stage s
  std::string error;                // "", "ORACLE_INSTABILITY", "PRESERVATION_VIOLATION"
};

/// Priority construction: per stage the enumeration grows, every live
/// requirement advances its scan, and the highest-priority requirement
/// ready to introduce relations acts, initializing all weaker ones.
RunResult run_construction(const std::vector<OracleDouble>& oracles, int stages);

/// Do the equality classes of the first codes_limit codes agree between
/// the relation sets of stages s and s+1?
bool check_embedding(const StageStructure& st, int codes_limit, int s);
bool check_embedding(const RunResult& run, int s);

struct WitnessReport {
  bool satisfied = false;
  Witness w;
};
WitnessReport diagonalization_witness(const Requirement& req);

/// The relation set is a substitution forest: no target is reachable from
/// its own expression.
bool relations_acyclic(const StageStructure& st);

/// At least e of b_0..b_{3e} are relation-free, for every e with 3e <= stage.
bool rank_preserved(const StageStructure& st);

}  // namespace lclab
