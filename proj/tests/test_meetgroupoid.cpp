#include <algorithm>

#include "doctest.h"
#include "lclab/meetgroupoid.hpp"

using namespace lclab;

TEST_CASE("coset product table") {
  auto w = MeetGroupoid::padic(2);
  CHECK(*w.product(Coset::of(2, 1), Coset::of(2, 1)) == Coset::of(2, 0));
  CHECK(!w.product(Coset::of(2, 1), Coset::of(4, 0)).has_value());
  CHECK(*w.product(Coset::none(), Coset::none()) == Coset::none());
  CHECK(!w.product(Coset::none(), Coset::of(2, 0)).has_value());
  CHECK(*w.product(Coset::of(4, 3), Coset::of(4, 2)) == Coset::of(4, 1));
  CHECK(w.inverse(Coset::of(4, 3)) == Coset::of(4, 1));
  CHECK(w.inverse(Coset::none()) == Coset::none());
}

TEST_CASE("meets, subsets and indices") {
  auto w = MeetGroupoid::padic(2);
  CHECK(w.meet(Coset::of(2, 0), Coset::of(4, 2)) == Coset::of(4, 2));
  CHECK(w.meet(Coset::of(2, 1), Coset::of(4, 0)) == Coset::none());
  CHECK(w.meet(Coset::of(1, 0), Coset::of(8, 5)) == Coset::of(8, 5));
  CHECK(w.subset(Coset::of(4, 2), Coset::of(2, 0)));
  CHECK(!w.subset(Coset::of(2, 0), Coset::of(4, 2)));
  CHECK(w.index_fn(Coset::of(2, 0), Coset::of(8, 0)) == 4);
  CHECK(w.index_fn(Coset::of(1, 0), Coset::of(2, 0)) == 2);
  CHECK_THROWS_AS((void)w.index_fn(Coset::of(2, 1), Coset::of(4, 0)),
                  std::invalid_argument);
  // index is multiplicative along chains of subgroups
  for (int i = 0; i <= 3; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = j; k <= 5; ++k) {
        Coset u = Coset::of(BigInt(1) << i, 0), v = Coset::of(BigInt(1) << j, 0),
              t = Coset::of(BigInt(1) << k, 0);
        CHECK(w.index_fn(u, t) == w.index_fn(u, v) * w.index_fn(v, t));
      }
}

TEST_CASE("axiom checks pass on the shipped instances") {
  CHECK(check_axioms(MeetGroupoid::padic(2), 4).pass);
  CHECK(check_axioms(MeetGroupoid::padic(3), 4).pass);
  CHECK(check_axioms(MeetGroupoid::finite_cyclic(12), 4).pass);
  CHECK(check_axioms(MeetGroupoid::trivial(), 4).pass);
}

TEST_CASE("a corrupted product entry is caught with a witness") {
  auto w = MeetGroupoid::padic(2);
  ProductFn bad = corrupt_product(w, Coset::of(2, 1), Coset::of(2, 1), Coset::of(2, 1));
  GroupoidReport full = check_axioms(w, 4, bad);
  CHECK(!full.pass);
  GroupoidReport g = check_axioms(w, 4, bad, 'g');
  CHECK(!g.pass);
  CHECK(g.axiom == 'g');
  REQUIRE(g.witness.size() == 4);
  CHECK(g.witness[0] == Coset::of(2, 1));
  CHECK(g.witness[1] == Coset::of(2, 1));
  CHECK(g.witness[2] == Coset::of(4, 1));
  CHECK(g.witness[3] == Coset::of(4, 1));
}

TEST_CASE("cover decisions on the refinement grid") {
  auto w = MeetGroupoid::padic(2);
  CHECK(covers_decide(w, Coset::of(2, 0), {Coset::of(4, 0), Coset::of(4, 2)}, 4));
  CHECK(!covers_decide(w, Coset::of(2, 0), {Coset::of(4, 0)}, 4));
  CHECK(covers_decide(w, Coset::none(), {}, 4));
  CHECK(covers_decide(w, Coset::of(1, 0), {Coset::of(2, 0), Coset::of(2, 1)}, 4));
}

TEST_CASE("ideal classification") {
  auto w = MeetGroupoid::padic(2);
  auto closed = ideal_kind(w, parse_ideal(w, "avoid-subgroup:4"), 6);
  CHECK(closed.kind == IdealKind::ClosedSubgroupIdeal);
  CHECK(closed.inversion_closed);

  auto point = ideal_kind(w, parse_ideal(w, "avoid-point:1"), 4);
  CHECK(point.kind == IdealKind::Ideal);
  CHECK(!point.inversion_closed);
  REQUIRE(point.witness.size() >= 2);

  auto empty_only = ideal_kind(w, parse_ideal(w, "empty-only"), 4);
  CHECK(empty_only.kind == IdealKind::ClosedSubgroupIdeal);

  auto all = ideal_kind(w, parse_ideal(w, "all"), 4);
  CHECK(all.kind == IdealKind::Both);
}

TEST_CASE("tree nodes and gamma") {
  auto w = MeetGroupoid::padic(2);
  CHECK(node_of(w, Coset::of(1, 0)) == "");
  CHECK(node_of(w, Coset::of(8, 5)) == "101");
  CHECK(coset_of(w, "101") == Coset::of(8, 5));
  CHECK(coset_of(w, "") == Coset::of(1, 0));

  auto nodes = gamma(w, parse_ideal(w, "avoid-subgroup:4"), 3);
  CHECK(nodes == std::vector<std::string>{"", "0", "00", "000", "001"});
  auto zeros = gamma(w, parse_ideal(w, "avoid-point:0"), 3);
  CHECK(zeros == std::vector<std::string>{"", "0", "00", "000"});
  // prefix closure
  for (const std::string& nd : nodes)
    if (!nd.empty())
      CHECK(std::find(nodes.begin(), nodes.end(), nd.substr(0, nd.size() - 1)) !=
            nodes.end());
}

TEST_CASE("open sets and ideals translate back and forth") {
  auto w = MeetGroupoid::padic(2);
  IdealSpec j = parse_ideal(w, "avoid-subgroup:4");
  auto open_nodes = ideal_to_open(w, j, 5);
  IdealSpec back = open_to_ideal(w, open_nodes, 5);
  for (const Coset& a : w.elements(5)) CHECK(j.member(a) == back.member(a));
  // a union of cylinders round-trips through its induced ideal
  std::vector<std::string> u{"1", "01"};
  auto again = ideal_to_open(w, open_to_ideal(w, u, 5), 5);
  auto covered_by = [&](const std::string& nd, const std::vector<std::string>& set) {
    for (const std::string& s : set)
      if (nd.size() >= s.size() && nd.compare(0, s.size(), s) == 0) return true;
    return false;
  };
  for (const std::string& nd : again) CHECK(covered_by(nd, u));
  for (const std::string& s : u)
    CHECK(std::find(again.begin(), again.end(), s) != again.end());
}

TEST_CASE("tree presentation branching") {
  TreePresentation t = padic_tree(2);
  CHECK(t.branching("") == 2);
  CHECK(t.branching("0110") == 2);
  TreePresentation t3 = padic_tree(3);
  CHECK(t3.branching("21") == 3);
}
