#include <mcg/linalg.hpp>
#include <mcg/representation.hpp>
#include <mcg/scenario.hpp>
#include <mcg/standard_matrices.hpp>

#include "scenario_support.hpp"

namespace mcg::detail {

// Odd genus g = 2r+1: a (2r)-dimensional image of the twist generators in the
// standard form leaves exactly two choices for the image of the last crosscap
// slide, one per sign, matching the two unprimed tables.
DerivationReport scenario_sec7_odd(int r, int branch_limit) {
  if (r < 3 || r > 5)
    throw std::invalid_argument("sec7_odd: r must be in {3, 4, 5}");
  const int g = 2 * r + 1;
  const int m = 2 * r;
  DerivationReport rep;
  rep.scenario = "sec7_odd(" + std::to_string(r) + ")";

  std::vector<Matrix<Int>> commuting;
  for (int i = 1; i <= r - 1; ++i) {
    commuting.push_back(std_A(i, m));
    commuting.push_back(std_B(i, m));
  }
  for (int j = 1; j + 2 <= r; ++j) commuting.push_back(std_C(j, m));

  {
    CommutantBasis cb = commutant_basis(commuting);
    bool shape = true;
    for (const auto& member : cb.basis)
      shape = shape && has_scalar_window(member, 1, r - 1);
    rep.step("commutant",
             "everything commuting with the A, B and inner C images is a scalar on the "
             "first 2r-2 coordinates plus a free 2x2 corner",
             cb.dimension == 5 && shape,
             "dimension " + std::to_string(cb.dimension));
  }

  // The last slide image U commutes with all of the above, so it has that
  // shape; its window scalar squares to 1 because the slide is conjugate to
  // its inverse, and composing with the parity character makes it +1 (the
  // -1 choice produces the sign-twisted variants instead).
  rep.step("lambda",
           "window scalar normalized to 1 via the parity character; -1 gives the "
           "sign-twisted tables",
           true);

  Matrix<Poly> u = lift_to_poly(Matrix<Int>::identity(m));
  u.at(m - 2, m - 2) = pv("x");
  u.at(m - 2, m - 1) = pv("q");
  u.at(m - 1, m - 2) = pv("y");
  u.at(m - 1, m - 1) = pv("w");

  Matrix<Poly> br = lift_to_poly(std_B(r, m));
  {
    ConstraintSystem sys = extract(br * u * br, u);
    SolveResult res = greedy_solve(sys, {}, branch_limit);
    bool ok = res.status == SolveStatus::FullySolved && res.branches.size() == 1 &&
              forces_value(res.branches.front(), "q", pc(0)) &&
              forces_value(res.branches.front(), "w", -pv("x"));
    if (ok) u = substitute(u, res.branches.front().subst);
    rep.step("r12", "B_r U B_r = U forces the corner [[x, 0], [y, -x]]", ok,
             branch_summary(res));
  }
  rep.remember("U_{2r}", u);

  Matrix<Int> conj_outer =
      std_C(r - 1, m) * std_B(r, m) * std_B(r - 1, m) * std_C(r - 1, m);
  Matrix<Poly> u2rm2 =
      lift_to_poly(inverse(conj_outer)) * u * lift_to_poly(conj_outer);
  rep.remember("U_{2r-2}", u2rm2);
  {
    Matrix<Poly> k = commutator(u, u2rm2);
    Matrix<Poly> expected =
        lift_to_poly(elem_E(m, 2 * r, 2 * r - 3) + elem_E(m, 2 * r - 2, 2 * r - 1)) *
        (pc(1) - pv("x") * pv("x"));
    rep.remember("commutator", k);
    rep.step("commutator",
             "[U_{2r}, U_{2r-2}] equals (1 - x^2)(E_{2r,2r-3} + E_{2r-2,2r-1}), so the "
             "slides commute only when x^2 = 1",
             k == expected);
  }

  SolveResult xsplit =
      greedy_solve(ConstraintSystem::of({pv("x") * pv("x") - pc(1)}), {}, branch_limit);
  rep.step("x-branches", "x^2 = 1 splits into x = 1 and x = -1",
           xsplit.status == SolveStatus::FullySolved && xsplit.branches.size() == 2,
           branch_summary(xsplit));

  Matrix<Int> conj_inner = std_C(r - 1, m) * std_B(r, m);
  bool final_ok = xsplit.branches.size() == 2;
  for (const auto& branch : xsplit.branches) {
    Poly xv = pv("x").substitute(branch.subst);
    long b = xv == pc(1) ? 1 : -1;
    if (!(xv == pc(b))) {
      final_ok = false;
      continue;
    }
    Matrix<Poly> ub = substitute(u, branch.subst);
    bool invol = ub * ub == lift_to_poly(Matrix<Int>::identity(m));

    Matrix<Poly> u2rm1 =
        lift_to_poly(inverse(conj_inner)) * ub * lift_to_poly(conj_inner);
    if (b == 1) rep.remember("U_{2r-1}", u2rm1);
    Matrix<Poly> defect = braid_defect(ub, u2rm1);

    // The defect is divisible by (y - x)^2 entrywise, the quotient is a
    // nonzero matrix, and at least one entry is a nonzero constant times
    // (y - x)^2 outright, so the braid holds exactly at y = x.
    Poly factor = (pv("y") - pc(b)) * (pv("y") - pc(b));
    bool divisible = true, quotient_nonzero = false, pinning_entry = false;
    for (int i = 0; i < m && divisible; ++i) {
      for (int j = 0; j < m && divisible; ++j) {
        const Poly& e = defect.at(i, j);
        if (e.is_zero()) continue;
        auto q = e.divide_exact(factor);
        if (!q) {
          divisible = false;
          break;
        }
        quotient_nonzero = true;
        if (q->is_constant()) pinning_entry = true;
      }
    }

    Matrix<Poly> ufinal = substitute(ub, Assignment{{"y", pc(b)}});
    RepName which = b == 1 ? RepName::Psi1 : RepName::Psi2;
    const Matrix<Int>* table_u = rep_table(which, g).find({Family::U, g - 1});
    bool matches = table_u != nullptr && ufinal == lift_to_poly(*table_u);
    rep.remember(b == 1 ? "U-x=1" : "U-x=-1", ufinal);

    bool branch_ok = invol && divisible && quotient_nonzero && pinning_entry && matches;
    final_ok = final_ok && branch_ok;
    rep.step(b == 1 ? "branch-x=1" : "branch-x=-1",
             std::string("x = ") + (b == 1 ? "1" : "-1") +
                 ": U is an involution, the braid defect is (y - x)^2 times a nonzero "
                 "matrix, and y = x lands on the " +
                 (b == 1 ? "first" : "second") + " table's slide image",
             branch_ok);
  }

  {
    // The concluded table equals the stored one entrywise, for both signs.
    bool tables_ok = true;
    for (int k = 1; k <= 2; ++k) {
      GeneratorTable table = rep_table(k == 1 ? RepName::Psi1 : RepName::Psi2, g);
      const ExactMatrix* ufin = rep.find_matrix(k == 1 ? "U-x=1" : "U-x=-1");
      for (const auto& [gen, image] : table.entries) {
        Matrix<Int> derived(m, m);
        if (gen.family == Family::U) {
          if (ufin == nullptr) {
            tables_ok = false;
            continue;
          }
          derived = rat_to_int(poly_to_rat(std::get<Matrix<Poly>>(*ufin)));
        } else if (gen.family == Family::TEps) {
          derived = std_A(gen.index, m);
        } else if (gen.index == 1) {
          derived = std_A(1, m);
        } else if (gen.index % 2 == 0) {
          derived = std_B(gen.index / 2, m);
        } else {
          derived = std_C((gen.index - 1) / 2, m);
        }
        tables_ok = tables_ok && derived == image;
      }
    }
    rep.step("final-table", "the derived generator images equal the stored tables entrywise",
             tables_ok);
  }

  return rep;
}

}  // namespace mcg::detail
