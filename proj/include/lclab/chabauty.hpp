#pragma once

#include "lclab/groups.hpp"
#include "lclab/hyperspace.hpp"

namespace lclab {

/// Certified triple: g(x, y) = x * y^-1 maps the closed contents of b and
/// d into v. All three balls are pure: radius below h(center), so the star
/// metric agrees with the base metric on them and they exclude infinity.
struct CounterwitnessTriple {
  StarBall b, d, v;
  Ball g_ball;     // exact base-space ball bounding g(b x d)
  Rational slack;  // certified margin inside v
};

using CounterwitnessStream = std::function<std::optional<CounterwitnessTriple>(std::int64_t)>;

/// Dovetails over star-ball index triples; a slot yields a triple only
/// when the exact ball arithmetic certifies the inclusion with slack.
CounterwitnessStream enumerate_counterwitnesses(const Group& g, const OnePointSpace& ops);

enum class RefuteReason { Triple, MissingInfinity, MissingIdentity };

struct RefuteRecord {
  long step = 0;
  int channel = 0;
  int margin = 0;
  std::string detail;
};

struct RefuteResult {
  bool refuted = false;
  std::optional<RefuteReason> reason;
  std::optional<CounterwitnessTriple> triple;
  long steps_used = 0;
  std::vector<RefuteRecord> trace;
};

/// Semi-decides that the named compact set is not a subgroup-with-infinity
/// point: three round-robin channels search for a counterwitness triple
/// meeting the set in b and d but separated from v, or a certified
/// positive distance to infinity or to the identity. NOT_REFUTED at
/// budget certifies nothing.
RefuteResult refute_subgroup(const HyperName& k, const Group& g, const OnePointSpace& ops,
                             long budget, bool keep_trace = false);

class PromiseViolation : public std::runtime_error {
 public:
  explicit PromiseViolation(const std::string& what) : std::runtime_error(what) {}
};

/// The point H union {infinity} of the hyperspace, from a two-sided closed
/// name of the subgroup H: level n lists the decided members among the
/// specials of K_{n+2} and appends infinity (the escape bound covers the
/// tail). Throws PromiseViolation when the two sides contradict.
HyperName embed_closed_subgroup(const ClosedName& c, const Group& g,
                                const OnePointSpace& ops);

struct HyperBall {
  HFinite center;
  Rational radius;
};

/// C.e. name of the complement of the subgroup space inside the hyperspace:
/// hyperballs certified inside a counterwitness region or inside the
/// missing-infinity / missing-identity region.
struct ChabautyComplementName {
  std::function<std::optional<HyperBall>(std::int64_t)> enumerate;
};

ChabautyComplementName complement_name(const Group& g, const OnePointSpace& ops);

/// Two-sided closed name of k*Z inside discrete Z; k = 0 gives {0}, k = 1
/// gives the whole group.
ClosedName discrete_subgroup_closed_name(const BigInt& k);

}  // namespace lclab
