#include "doctest.h"
#include "lclab/simplegroup.hpp"

using namespace lclab;

TEST_CASE("element algebra and parsing") {
  Element a{{0, 2}, {1, -1}};
  Element b{{1, 1}, {3, 5}};
  CHECK(el_add(a, b) == Element{{0, 2}, {3, 5}});
  CHECK(el_zero(el_add(a, el_neg(a))));
  CHECK(el_scale(3, a) == Element{{0, 6}, {1, -3}});
  CHECK(el_str(Element{}) == "0");
  auto p = el_parse(el_str(a));
  REQUIRE(p);
  CHECK(*p == a);
}

TEST_CASE("normal forms under introduced relations") {
  StageStructure st = initial_stage();
  CHECK(normal_form(st, Element{{0, 2}, {1, 1}}) == Element{{0, 2}, {1, 1}});

  st.stage = 3;
  st.largest_constant = 3;
  StageStructure st2 = introduce_relation(st, 1, Element{{0, 1}}, RelationMode{7, {}, {}});
  CHECK(el_zero(normal_form(st2, el_add(Element{{1, 1}}, el_scale(-7, Element{{0, 1}})))));
  CHECK(normal_form(st2, Element{{1, 1}}) == Element{{0, 7}});

  StageStructure st3 = initial_stage();
  st3.stage = 6;
  st3.largest_constant = 6;
  st3 = introduce_relation(st3, 4, Element{{2, 1}}, RelationMode{11, BigInt(13), 5});
  Element probe = el_add(el_scale(6, Element{{4, 1}}), el_scale(-5, Element{{5, 1}}));
  CHECK(normal_form(st3, probe) == Element{{2, 1}});
  CHECK(relations_acyclic(st3));
}

TEST_CASE("relation preconditions") {
  StageStructure st = initial_stage();
  st.stage = 3;
  st.largest_constant = 9;
  // multiplier does not exceed the largest constant so far
  CHECK_THROWS(introduce_relation(st, 1, Element{{0, 1}}, RelationMode{5, {}, {}}));
  // zero x
  CHECK_THROWS(introduce_relation(st, 1, Element{}, RelationMode{11, {}, {}}));
  // target occurring in its own expression
  CHECK_THROWS(introduce_relation(st, 1, Element{{1, 1}}, RelationMode{11, {}, {}}));
}

TEST_CASE("forced unit relation merges codes") {
  StageStructure st = initial_stage();
  extend_enumeration(st, 30, 4000);
  REQUIRE(preservation_check(st) == std::nullopt);
  // b_1 = 1 * b_0 identifies previously distinct codes
  StageStructure bad = introduce_relation(st, 1, Element{{0, 1}}, RelationMode{1, {}, {}},
                                          true);
  auto merged = preservation_check(bad);
  REQUIRE(merged);
  CHECK(normal_form(bad, bad.codes[size_t(merged->first)]) ==
        normal_form(bad, bad.codes[size_t(merged->second)]));
}

TEST_CASE("enumeration grows and stays injective") {
  StageStructure st = initial_stage();
  int added = extend_enumeration(st, 50, 20000);
  CHECK(added == 50);
  CHECK(st.codes.size() == 51);
  CHECK(preservation_check(st) == std::nullopt);
  CHECK(el_zero(st.codes[0]));
  // code_of is stable on already-coded elements
  CHECK(code_of(st, st.codes[7]) == 7);
}

TEST_CASE("runs with each built-in oracle") {
  auto empty = run_construction({}, 60);
  CHECK(empty.error.empty());
  CHECK(empty.requirements.empty());
  CHECK(relations_acyclic(empty.st));

  auto parity = run_construction({make_oracle("parity-of-coefficient-sum")}, 120);
  REQUIRE(parity.error.empty());
  REQUIRE(parity.requirements.size() == 1);
  CHECK(parity.requirements[0].state == ReqState::Satisfied);
  REQUIRE(parity.requirements[0].witness);
  CHECK(parity.requirements[0].witness->case_no == 1);
  WitnessReport wr = diagonalization_witness(parity.requirements[0]);
  CHECK(wr.satisfied);

  auto c1 = run_construction({make_oracle("constant-1")}, 120);
  REQUIRE(c1.error.empty());
  CHECK(c1.requirements[0].state == ReqState::WaitingXY);

  auto diverge = run_construction({make_oracle("all-diverge")}, 120);
  REQUIRE(diverge.error.empty());
  CHECK(diverge.requirements[0].state == ReqState::WaitingXY);

  auto evenf = run_construction({make_oracle("even-first-coefficient")}, 200);
  REQUIRE(evenf.error.empty());
  CHECK(evenf.requirements[0].state == ReqState::Satisfied);
}

TEST_CASE("embedding, injury bound, and rank on a multi-oracle run") {
  std::vector<OracleDouble> oracles;
  for (const std::string& n : oracle_names()) oracles.push_back(make_oracle(n));
  auto run = run_construction(oracles, 200);
  REQUIRE(run.error.empty());
  for (int s = 0; s + 1 < 200; ++s) CHECK(check_embedding(run, s));
  for (size_t e = 0; e < run.requirements.size(); ++e)
    CHECK(run.requirements[e].init_count <= int(e));
  CHECK(relations_acyclic(run.st));
  CHECK(rank_preserved(run.st));
  for (const OracleDouble& od : oracles) {
    size_t i = &od - &oracles[0];
    if (od.expects_satisfied) {
      CHECK(run.requirements[i].state == ReqState::Satisfied);
      CHECK(diagonalization_witness(run.requirements[i]).satisfied);
    }
  }
}
