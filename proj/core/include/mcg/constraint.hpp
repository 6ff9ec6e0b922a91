#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <mcg/matrix.hpp>
#include <mcg/poly.hpp>

namespace mcg {

using Assignment = std::map<std::string, Poly>;

// Variables declared invertible. Each unit v gets a formal companion v_inv
// with the defining identity v * v_inv = 1, applied by cancel_units inside
// every monomial.
struct UnitSpec {
  std::set<std::string> names;

  static std::string inv_name(const std::string& v) { return v + "_inv"; }
  bool is_unit(const std::string& var) const { return names.count(var) > 0; }
  // Unit or companion-of-unit.
  bool is_unit_like(const std::string& var) const;
  // v -> v_inv and v_inv -> v; nullopt for non-unit variables.
  std::optional<std::string> companion(const std::string& var) const;
};

Poly cancel_units(const Poly& p, const UnitSpec& units);
Matrix<Poly> cancel_units(const Matrix<Poly>& m, const UnitSpec& units);

// Canonical form of "p = 0": units cancelled, unit-monomial content and
// rational content stripped, leading coefficient positive.
Poly canonical_constraint(Poly p, const UnitSpec& units = {});

struct ConstraintSystem {
  std::vector<Poly> polys;  // canonical, sorted, deduplicated

  static ConstraintSystem of(std::vector<Poly> ps, const UnitSpec& units = {});

  bool empty() const { return polys.empty(); }
  size_t size() const { return polys.size(); }
  bool contains_false() const;  // some member is a nonzero constant
  std::set<std::string> variables() const;
  std::vector<std::string> strs() const;

  friend bool operator==(const ConstraintSystem&, const ConstraintSystem&) =
      default;
};

// Nonzero entries of lhs - rhs as a canonical system.
ConstraintSystem extract(const Matrix<Poly>& lhs, const Matrix<Poly>& rhs,
                         const UnitSpec& units = {});

// True when every member vanishes identically under the assignment
// (after unit cancellation) and no unit is assigned zero.
bool verify_assignment(const ConstraintSystem& sys, const Assignment& a,
                       const UnitSpec& units = {});

enum class SolveStatus { FullySolved, PartiallySolved, Inconsistent };

struct SolveBranch {
  Assignment subst;           // composed substitution for this branch
  ConstraintSystem residual;  // what is left unsolved (empty if none)
  std::vector<std::string> log;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Inconsistent;
  std::vector<SolveBranch> branches;  // consistent branches, in branch order
  std::vector<SolveBranch> rejected;  // branches that hit a contradiction
};

// Elimination-plus-branching solver. Eliminates variables whose linear
// coefficient is a nonzero rational times a unit monomial; branches on
// univariate members that factor completely into rational linear factors.
// Anything else stays in the residual. branch_limit caps the total number
// of leaves.
SolveResult greedy_solve(const ConstraintSystem& sys,
                         const UnitSpec& units = {}, int branch_limit = 64);

}  // namespace mcg
