#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <mcg/constraint.hpp>
#include <mcg/matrix.hpp>
#include <mcg/poly.hpp>

using namespace mcg;

namespace {

Poly P(const std::string& s) { return Poly::parse(s); }

bool has_log_containing(const SolveBranch& b, const std::string& needle) {
  return std::any_of(b.log.begin(), b.log.end(), [&](const std::string& l) {
    return l.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("unit bookkeeping") {
  UnitSpec units{{"l", "m"}};
  CHECK(UnitSpec::inv_name("l") == "l_inv");
  CHECK(units.is_unit("l"));
  CHECK_FALSE(units.is_unit("l_inv"));
  CHECK(units.is_unit_like("l_inv"));
  CHECK(units.is_unit_like("m"));
  CHECK_FALSE(units.is_unit_like("x"));
  CHECK(units.companion("l") == std::string("l_inv"));
  CHECK(units.companion("m_inv") == std::string("m"));
  CHECK_FALSE(units.companion("x").has_value());
}

TEST_CASE("unit cancellation") {
  UnitSpec units{{"l"}};
  Poly l = Poly::variable("l");
  Poly linv = Poly::variable("l_inv");
  Poly x = Poly::variable("x");

  CHECK(cancel_units(l * linv, units) == Poly::constant(1));
  CHECK(cancel_units(l * l * linv * x, units) == l * x);
  CHECK(cancel_units(x, units) == x);

  Matrix<Poly> m(1, 2);
  m.at(0, 0) = l * linv - Poly::constant(1);
  m.at(0, 1) = linv * linv * l;
  Matrix<Poly> c = cancel_units(m, units);
  CHECK(c.at(0, 0).is_zero());
  CHECK(c.at(0, 1) == linv);
}

TEST_CASE("canonical constraint form") {
  CHECK(canonical_constraint(P("-2*x + 4*y")).str() == "x - 2*y");
  CHECK(canonical_constraint(P("6*x^2 - 9")).str() == "2*x^2 - 3");
  CHECK(canonical_constraint(Poly()).is_zero());
  CHECK(canonical_constraint(P("-7")).str() == "1");

  // unit monomial content is stripped entirely
  UnitSpec units{{"l"}};
  Poly l = Poly::variable("l");
  Poly x = Poly::variable("x");
  CHECK(canonical_constraint(l * x - l, units).str() == "x - 1");
}

TEST_CASE("constraint systems") {
  ConstraintSystem sys = ConstraintSystem::of(
      {P("2*x - 2"), P("x - 1"), Poly(), P("y^2")});
  CHECK(sys.size() == 2);
  CHECK_FALSE(sys.contains_false());
  CHECK(sys.variables() == std::set<std::string>{"x", "y"});

  CHECK(ConstraintSystem::of({}).empty());
  CHECK(ConstraintSystem::of({P("3")}).contains_false());

  Matrix<Poly> id2 = Matrix<Poly>::identity(2);
  CHECK(extract(id2, id2).empty());

  Matrix<Poly> other = id2;
  other.at(0, 1) = P("x - y");
  ConstraintSystem diff = extract(id2, other);
  CHECK(diff.size() == 1);
  CHECK(diff.polys[0].str() == "x - y");
}

TEST_CASE("assignment verification") {
  ConstraintSystem sys = ConstraintSystem::of({P("x^2 - 1"), P("x*y - y")});
  Assignment good{{"x", Poly::constant(1)}, {"y", Poly::variable("y")}};
  CHECK(verify_assignment(sys, good));
  Assignment bad{{"x", Poly::constant(-1)}, {"y", Poly::constant(1)}};
  CHECK_FALSE(verify_assignment(sys, bad));

  // a unit must not be sent to zero
  UnitSpec units{{"x"}};
  ConstraintSystem xsys = ConstraintSystem::of({P("x*y")}, units);
  Assignment zero_unit{{"x", Poly()}, {"y", Poly()}};
  CHECK_FALSE(verify_assignment(xsys, zero_unit, units));
}

TEST_CASE("solver on trivial systems") {
  SolveResult empty = greedy_solve(ConstraintSystem::of({}));
  CHECK(empty.status == SolveStatus::FullySolved);
  REQUIRE(empty.branches.size() == 1);
  CHECK(empty.branches[0].subst.empty());
  CHECK(empty.branches[0].residual.empty());

  SolveResult absurd = greedy_solve(ConstraintSystem::of({P("1")}));
  CHECK(absurd.status == SolveStatus::Inconsistent);
  CHECK(absurd.branches.empty());
  REQUIRE_FALSE(absurd.rejected.empty());
  CHECK(has_log_containing(absurd.rejected[0], "contradiction"));
}

TEST_CASE("solver eliminates linear variables") {
  ConstraintSystem sys = ConstraintSystem::of({P("x - 2*y"), P("y - 3")});
  SolveResult res = greedy_solve(sys);
  CHECK(res.status == SolveStatus::FullySolved);
  REQUIRE(res.branches.size() == 1);
  const SolveBranch& b = res.branches[0];
  CHECK(b.residual.empty());
  CHECK(b.subst.at("y") == Poly::constant(3));
  CHECK(b.subst.at("x") == Poly::constant(6));
  CHECK(has_log_containing(b, "eliminate"));
  CHECK(verify_assignment(sys, b.subst));
}

TEST_CASE("solver branches on split univariates") {
  SolveResult res = greedy_solve(ConstraintSystem::of({P("x^2 - 1")}));
  CHECK(res.status == SolveStatus::FullySolved);
  REQUIRE(res.branches.size() == 2);
  std::set<std::string> roots;
  for (const SolveBranch& b : res.branches) {
    CHECK(b.residual.empty());
    CHECK(has_log_containing(b, "branch"));
    roots.insert(b.subst.at("x").str());
  }
  CHECK(roots == std::set<std::string>{"-1", "1"});
}

TEST_CASE("solver leaves irrational roots alone") {
  SolveResult res = greedy_solve(ConstraintSystem::of({P("x^2 - 2")}));
  CHECK(res.status == SolveStatus::PartiallySolved);
  REQUIRE(res.branches.size() == 1);
  CHECK(res.branches[0].residual.size() == 1);
  CHECK(res.branches[0].residual.polys[0].str() == "x^2 - 2");
}

TEST_CASE("solver respects units") {
  // braid-style forcing: l is a unit, so l*(x + 1) = 0 pins x = -1
  UnitSpec units{{"l"}};
  ConstraintSystem sys =
      ConstraintSystem::of({P("l*x + l")}, units);
  SolveResult res = greedy_solve(sys, units);
  CHECK(res.status == SolveStatus::FullySolved);
  REQUIRE(res.branches.size() == 1);
  CHECK(res.branches[0].subst.at("x") == Poly::constant(-1));
}

TEST_CASE("solver prunes contradictory branches") {
  // x = 1 or x = -1, but x = 1 is excluded by the second member
  ConstraintSystem sys =
      ConstraintSystem::of({P("x^2 - 1"), P("x - 1")});
  SolveResult res = greedy_solve(sys);
  CHECK(res.status == SolveStatus::FullySolved);
  REQUIRE(res.branches.size() == 1);
  CHECK(res.branches[0].subst.at("x") == Poly::constant(1));
}

TEST_CASE("branch limit is honored") {
  // four independent quadratics would need 16 leaves
  ConstraintSystem sys = ConstraintSystem::of(
      {P("a^2 - 1"), P("b^2 - 1"), P("c^2 - 1"), P("d^2 - 1")});
  SolveResult res = greedy_solve(sys, {}, 2);
  CHECK(res.status == SolveStatus::PartiallySolved);
  CHECK(res.branches.size() <= 2);
  bool marked = false;
  for (const SolveBranch& b : res.branches) {
    if (has_log_containing(b, "branch limit")) marked = true;
    if (!b.residual.empty()) {
      for (const Poly& p : b.residual.polys) CHECK_FALSE(p.is_constant());
    }
  }
  CHECK(marked);
}

TEST_CASE("solver is deterministic") {
  ConstraintSystem sys = ConstraintSystem::of(
      {P("x^2 - 4"), P("y - x"), P("z + y - 1")});
  SolveResult a = greedy_solve(sys);
  SolveResult b = greedy_solve(sys);
  REQUIRE(a.branches.size() == b.branches.size());
  for (size_t i = 0; i < a.branches.size(); ++i) {
    CHECK(a.branches[i].subst == b.branches[i].subst);
    CHECK(a.branches[i].log == b.branches[i].log);
  }
}

TEST_CASE("random consistent linear systems are solved") {
  std::mt19937 rng(6021u);
  std::uniform_int_distribution<int> val(-5, 5);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 25; ++trial) {
    // plant a solution, then build constraints vanishing on it
    std::map<std::string, Poly> planted;
    for (const auto& v : vars) planted[v] = Poly::constant(val(rng));
    std::vector<Poly> members;
    for (int k = 0; k < 4; ++k) {
      Poly p;
      for (const auto& v : vars) {
        int c = val(rng);
        p = p + Poly::constant(c) * Poly::variable(v);
        p = p - Poly::constant(c) * planted[v];
      }
      members.push_back(p);
    }
    ConstraintSystem sys = ConstraintSystem::of(members);
    SolveResult res = greedy_solve(sys);
    CAPTURE(trial);
    CHECK(res.status == SolveStatus::FullySolved);
    REQUIRE(res.branches.size() == 1);
    const SolveBranch& b = res.branches[0];
    CHECK(b.residual.empty());

    // close the branch substitution with the planted values
    Assignment full;
    for (const auto& [v, p] : b.subst) full[v] = p.substitute(planted);
    for (const auto& v : vars)
      if (!full.count(v)) full[v] = planted.at(v);
    CHECK(verify_assignment(sys, full));
  }
}
