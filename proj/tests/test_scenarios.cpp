#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include <mcg/scenario.hpp>

using namespace mcg;

namespace {

bool has_step(const DerivationReport& rep, const std::string& id) {
  return std::any_of(rep.steps.begin(), rep.steps.end(),
                     [&](const ScenarioStep& s) { return s.id == id; });
}

const ScenarioStep* find_step(const DerivationReport& rep,
                              const std::string& id) {
  for (const ScenarioStep& s : rep.steps)
    if (s.id == id) return &s;
  return nullptr;
}

}  // namespace

TEST_CASE("scenario names round-trip") {
  for (ScenarioId id : {ScenarioId::Lemma51, ScenarioId::Thm13G6M4,
                        ScenarioId::Sec7Odd, ScenarioId::Sec7Even,
                        ScenarioId::Lemma83})
    CHECK(scenario_from_name(scenario_name(id)) == id);
  CHECK(scenario_name(ScenarioId::Thm13G6M4) == "thm13_g6m4");
  CHECK_THROWS_AS(scenario_from_name("lemma84"), std::invalid_argument);
}

TEST_CASE("low genus slide derivation") {
  DerivationReport rep = run_scenario(ScenarioId::Lemma51);
  CHECK(rep.scenario == "lemma51");
  CHECK(rep.passed());
  for (const char* id :
       {"nilpotent-x", "nilpotent-L1-eq-L3", "nilpotent-contradiction",
        "diag-commutant", "diag-involution", "diag-minus-rejected",
        "case3-pinned", "case3-braid", "terminal-squares"})
    CHECK(has_step(rep, id));
  CHECK(rep.find_matrix("case3-L1") != nullptr);
  CHECK(rep.find_matrix("no-such-name") == nullptr);
}

TEST_CASE("dimension 4 classification at genus 6") {
  DerivationReport rep = run_scenario(ScenarioId::Thm13G6M4);
  CHECK(rep.passed());
  for (const char* id :
       {"split-cases", "single-eig-commutes", "case-i", "ii-diagonal",
        "ii-conclude", "iiia", "iiib", "iiic-first-braid",
        "iiic-second-braid", "iiic-conclude", "iiic-close"})
    CHECK(has_step(rep, id));
}

TEST_CASE("odd genus slide image derivation") {
  DerivationReport rep = run_scenario(ScenarioId::Sec7Odd);
  CHECK(rep.scenario == "sec7_odd(3)");
  CHECK(rep.passed());
  for (const char* id : {"commutant", "lambda", "r12", "commutator",
                         "x-branches", "branch-x=1", "branch-x=-1",
                         "final-table"})
    CHECK(has_step(rep, id));
  CHECK(rep.find_matrix("U_{2r}") != nullptr);
  CHECK(rep.find_matrix("U-x=1") != nullptr);
  CHECK(rep.find_matrix("U-x=-1") != nullptr);

  // the same derivation goes through one genus higher
  ScenarioOptions opt;
  opt.r = 4;
  DerivationReport rep4 = run_scenario(ScenarioId::Sec7Odd, opt);
  CHECK(rep4.scenario == "sec7_odd(4)");
  CHECK(rep4.passed());
}

TEST_CASE("even genus twist image derivation") {
  DerivationReport rep = run_scenario(ScenarioId::Sec7Even);
  CHECK(rep.scenario == "sec7_even(4)");
  CHECK(rep.passed());
  for (const char* id :
       {"hypothesis", "D1-shape", "D1-diagonal", "D1-braid", "Dr-shape",
        "Dr-nondegenerate", "cross", "case1-entry", "case2-entry",
        "slide-shape", "case1-final", "case2-final", "two-cases"})
    CHECK(has_step(rep, id));
  CHECK(rep.find_matrix("D_r") != nullptr);
  CHECK(rep.find_matrix("D_i-case1") != nullptr);
  CHECK(rep.find_matrix("D_i-case2") != nullptr);

  ScenarioOptions opt;
  opt.r = 3;
  DerivationReport rep3 = run_scenario(ScenarioId::Sec7Even, opt);
  CHECK(rep3.scenario == "sec7_even(3)");
  CHECK(rep3.passed());
}

TEST_CASE("dimension 3 classification at genus 7") {
  DerivationReport rep = run_scenario(ScenarioId::Lemma83);
  CHECK(rep.passed());
  for (const char* id :
       {"relations", "irreducible", "eigenlines", "M-shape", "M-chain",
        "M-eigenvalues", "M-branches", "M-reject", "M-accept", "U7-shape",
        "U7-determinant", "U7-accept", "conclusion"})
    CHECK(has_step(rep, id));

  const ScenarioStep* conclusion = find_step(rep, "conclusion");
  REQUIRE(conclusion != nullptr);
  CHECK(conclusion->description == "M = U_7 = L_7");
}

TEST_CASE("scenario matrices by display name") {
  ExactMatrix c = scenario_matrix(ScenarioId::Lemma83, "C");
  REQUIRE(std::holds_alternative<Matrix<Poly>>(c));
  const Matrix<Poly>& cm = std::get<Matrix<Poly>>(c);
  CHECK(cm.rows() == 3);
  CHECK(cm.at(0, 0) == Poly::constant(-1));
  CHECK(cm.at(1, 0) == Poly::constant(-1));
  CHECK(cm.at(1, 1) == Poly::constant(1));
  CHECK(cm.at(1, 2) == Poly::constant(-1));
  CHECK(cm.at(2, 2) == Poly::constant(-1));
  CHECK(cm.at(0, 1).is_zero());

  CHECK_NOTHROW(scenario_matrix(ScenarioId::Sec7Odd, "U_{2r}"));
  CHECK_NOTHROW(scenario_matrix(ScenarioId::Sec7Even, "D_r"));
  CHECK_THROWS_AS(scenario_matrix(ScenarioId::Lemma83, "Z"),
                  std::invalid_argument);
}

TEST_CASE("starved branch limit reports honestly") {
  ScenarioOptions opt;
  opt.branch_limit = 1;
  DerivationReport rep = run_scenario(ScenarioId::Sec7Odd, opt);
  CHECK_FALSE(rep.passed());
  bool some_failed = false;
  for (const ScenarioStep& s : rep.steps)
    if (!s.passed) some_failed = true;
  CHECK(some_failed);

  // conversion keeps the failures visible
  Report r = rep.to_report();
  CHECK_FALSE(r.all_passed());
}
