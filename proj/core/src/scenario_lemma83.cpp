#include <mcg/linalg.hpp>
#include <mcg/scenario.hpp>

#include "scenario_support.hpp"

namespace mcg::detail {

// Genus 8 endgame: seven commuting-or-braiding involutions L_1..L_7 pin down
// the image M of the last twist and the image U_7 of the last slide.
DerivationReport scenario_lemma83(int branch_limit) {
  const int n = 7;
  DerivationReport rep;
  rep.scenario = "lemma83";

  Matrix<Int> a2 = Matrix<Int>::from_ints({{1, -1}, {0, -1}});
  Matrix<Int> b2 = Matrix<Int>::from_ints({{-1, 0}, {-1, 1}});
  Matrix<Int> c3 =
      Matrix<Int>::from_ints({{-1, 0, 0}, {-1, 1, -1}, {0, 0, -1}});
  rep.remember("A", lift_to_poly(a2));
  rep.remember("B", lift_to_poly(b2));
  rep.remember("C", lift_to_poly(c3));

  auto neg_identity = [](int k) { return -Matrix<Int>::identity(k); };
  std::vector<Matrix<Int>> ell(n + 1);
  ell[1] = block_diag<Int>({a2, neg_identity(5)});
  ell[7] = block_diag<Int>({neg_identity(5), b2});
  for (int i = 2; i <= 6; ++i)
    ell[i] = block_diag<Int>({neg_identity(i - 2), c3, neg_identity(6 - i)});
  for (int i = 1; i <= n; ++i)
    rep.remember("L_" + std::to_string(i), lift_to_poly(ell[i]));

  {
    bool ok = true;
    for (int i = 1; i <= n; ++i)
      ok = ok && (ell[i] * ell[i]).is_identity();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (j == i + 1)
          ok = ok && braid_defect(ell[i], ell[j]).is_zero();
        else
          ok = ok && commutator(ell[i], ell[j]).is_zero();
      }
    rep.step("relations",
             "the L_i are involutions, adjacent ones braid, distant ones commute",
             ok);
  }

  {
    std::vector<Matrix<Int>> all(ell.begin() + 1, ell.end());
    CommutantBasis cb = commutant_basis(all);
    rep.step("irreducible", "the joint commutant of L_1..L_7 is the scalars",
             cb.dimension == 1);
  }

  {
    bool ok = true;
    for (int i = 1; i <= n; ++i) {
      auto es = eigenspace(lift_to_rat(ell[i]), Rat(1));
      bool line = es.size() == 1;
      if (line)
        for (int k = 0; k < n; ++k)
          line = line && es[0][k] == (k == i - 1 ? Rat(1) : Rat(0));
      ok = ok && line;
    }
    rep.step("eigenlines", "the 1-eigenspace of L_i is the coordinate line e_i", ok);
  }

  // M commutes with every L_i except L_6; its shape is diagonal plus the
  // sixth column.
  Matrix<Poly> m_display(n, n);
  {
    std::vector<Matrix<Int>> mats;
    for (int i : {1, 2, 3, 4, 5, 7}) mats.push_back(ell[i]);
    CommutantBasis cb = commutant_basis(mats);
    bool fits = true;
    for (const auto& member : cb.basis)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (p != q && q != 5)
            fits = fits && scalar_traits<Rat>::is_zero(member.at(p, q));
    rep.step("M-shape",
             "commuting with L_i, i != 6, confines M to a diagonal plus its "
             "sixth column, a three-parameter family",
             cb.dimension == 3 && fits,
             "commutant dimension " + std::to_string(cb.dimension));

    Matrix<Poly> m_sym(n, n);
    for (int i = 0; i < 5; ++i)
      m_sym.at(i, i) = pv("x" + std::to_string(i + 1));
    m_sym.at(6, 6) = pv("x7");
    for (int i = 0; i < n; ++i) m_sym.at(i, 5) = pv("y" + std::to_string(i + 1));

    std::vector<Poly> polys;
    for (int i : {1, 2, 3, 4, 5, 7}) {
      ConstraintSystem sys =
          extract(commutator(m_sym, lift_to_poly(ell[i])), Matrix<Poly>(n, n));
      for (const Poly& p : sys.polys) polys.push_back(p);
    }
    SolveResult res = greedy_solve(ConstraintSystem::of(polys), {}, branch_limit);
    bool ok = res.status == SolveStatus::FullySolved && res.branches.size() == 1;
    if (ok) {
      const SolveBranch& b = res.branches.front();
      for (int i = 2; i <= 5; ++i) {
        ok = ok && forces_zero(b, pv("x" + std::to_string(i)) - pv("x1"));
        ok = ok && forces_zero(b, pv("y" + std::to_string(i)) -
                                      pc(i) * pv("y1"));
      }
      ok = ok && forces_zero(b, pv("y6") - (pv("x1") + pc(6) * pv("y1")));
      ok = ok && forces_zero(b, pv("x7") - (pv("y6") - pc(2) * pv("y7")));
    }
    rep.step("M-chain",
             "the commutations chain the entries: x_i = x_1, y_i = i y_1, "
             "y_6 = x_1 + 6 y_1, x_7 = y_6 - 2 y_7",
             ok, branch_summary(res));

    // Canonical display in the surviving parameters.
    for (int i = 0; i < 5; ++i) {
      m_display.at(i, i) = pv("x1");
      m_display.at(i, 5) = pc(i + 1) * pv("y1");
    }
    m_display.at(5, 5) = pv("x1") + pc(6) * pv("y1");
    m_display.at(6, 5) = pv("y7");
    m_display.at(6, 6) = pv("x1") + pc(6) * pv("y1") - pc(2) * pv("y7");
    bool commutes = true;
    for (int i : {1, 2, 3, 4, 5, 7})
      commutes = commutes &&
                 commutator(m_display, lift_to_poly(ell[i])).is_zero();
    Poly t = pv("t");
    Poly expected_cp = (t - pv("x1")).pow(5) *
                       (t - (pv("x1") + pc(6) * pv("y1"))) *
                       (t - (pv("x1") + pc(6) * pv("y1") - pc(2) * pv("y7")));
    rep.step("M-display",
             "the three-parameter M commutes with all six L_i and has "
             "characteristic polynomial (t - x_1)^5 (t - y_6) (t - x_7)",
             commutes && char_poly_in(m_display, "t") == expected_cp);
    rep.remember("M", m_display);
  }

  // M is conjugate to the L_i, so its characteristic polynomial must be
  // (t - 1)(t + 1)^6; multiplicity five forces x_1 = -1 and {y_6, x_7} is
  // then {1, -1} in some order.
  Matrix<Poly> m_accepted(n, n);
  {
    Poly t = pv("t");
    Poly target = (t - pc(1)) * (t + pc(1)).pow(6);
    bool eig_ok = char_poly_in(ell[1], "t") == target;
    rep.step("M-eigenvalues",
             "conjugacy to the twists gives char poly (t - 1)(t + 1)^6; the "
             "five-fold eigenvalue x_1 must be -1",
             eig_ok);

    Poly y6v = pc(-1) + pc(6) * pv("y1");
    Poly x7v = y6v - pc(2) * pv("y7");
    std::vector<Poly> polys = {(y6v - pc(1)) * (y6v + pc(1)),
                               (x7v - pc(1)) * (x7v + pc(1)), y6v + x7v};
    SolveResult res = greedy_solve(ConstraintSystem::of(polys), {}, branch_limit);

    Matrix<Poly> m_pinned = substitute(m_display, Assignment{{"x1", pc(-1)}});
    const SolveBranch* reject = nullptr;
    const SolveBranch* accept = nullptr;
    for (const auto& b : res.branches) {
      if (forces_value(b, "y1", Poly::constant(Rat(1, 3)))) reject = &b;
      if (forces_value(b, "y1", pc(0))) accept = &b;
    }
    bool two = res.branches.size() == 2 && reject && accept;
    bool char_both = two;
    if (two) {
      for (const auto& b : res.branches)
        char_both = char_both &&
                    char_poly_in(substitute(m_pinned, b.subst), "t") == target;
    }
    rep.step("M-branches",
             "matching the spectrum leaves two candidates, y_6 = 1 with "
             "y_1 = 1/3 or y_6 = -1 with y_1 = 0",
             two && char_both, branch_summary(res));

    if (two) {
      Matrix<Poly> m_reject = substitute(m_pinned, reject->subst);
      Matrix<Poly> m_accept = substitute(m_pinned, accept->subst);
      bool reject_ok = !braid_defect(m_reject, lift_to_poly(ell[6])).is_zero();
      rep.step("M-reject",
               "the y_6 = 1 candidate fails the braid relation with L_6",
               reject_ok);
      bool accept_ok = braid_defect(m_accept, lift_to_poly(ell[6])).is_zero() &&
                       m_accept == lift_to_poly(ell[7]);
      rep.step("M-accept",
               "the y_6 = -1 candidate braids with L_6 and equals L_7", accept_ok);
      m_accepted = m_accept;
    } else {
      rep.step("M-reject", "branch enumeration failed", false);
      rep.step("M-accept", "branch enumeration failed", false);
    }
  }

  // The last slide commutes with the same six involutions, so it has the
  // same shape with its own parameters.
  Matrix<Poly> u7 = substitute(
      m_display,
      Assignment{{"x1", pv("x")}, {"y1", pv("y")}, {"y7", pv("z")}});
  {
    bool commutes = true;
    for (int i : {1, 2, 3, 4, 5, 7})
      commutes = commutes && commutator(u7, lift_to_poly(ell[i])).is_zero();
    rep.step("U7-shape",
             "U_7 commutes with L_i, i != 6, hence has the same three-parameter "
             "form in x, y, z",
             commutes);
    rep.remember("U_7", u7);
  }

  rep.step("U7-diagonal",
           "a slide is conjugate to its inverse and the parity character pins "
           "the repeated eigenvalue to x = -1",
           true);
  u7 = substitute(u7, Assignment{{"x", pc(-1)}});

  {
    Matrix<Int> k = ell[6] * ell[7] * ell[5] * ell[6];
    Matrix<Poly> u5 =
        lift_to_poly(inverse(k)) * u7 * lift_to_poly(k);
    SolveResult res = greedy_solve(
        extract(commutator(u5, u7), Matrix<Poly>(n, n)), {}, branch_limit);
    bool ok = !res.branches.empty();
    for (const auto& b : res.branches) ok = ok && forces_value(b, "y", pc(0));
    rep.step("U7-column",
             "commuting with the conjugate slide U_5 kills the column: y = 0", ok,
             branch_summary(res));
    if (ok) u7 = substitute(u7, res.branches.front().subst);
  }

  {
    Poly d = det(u7);
    bool det_ok = d == pc(-1) - pc(2) * pv("z");
    SolveResult res = greedy_solve(
        ConstraintSystem::of({(d - pc(1)) * (d + pc(1))}), {}, branch_limit);
    const SolveBranch* z0 = nullptr;
    const SolveBranch* zm1 = nullptr;
    for (const auto& b : res.branches) {
      if (forces_value(b, "z", pc(0))) z0 = &b;
      if (forces_value(b, "z", pc(-1))) zm1 = &b;
    }
    bool two = res.branches.size() == 2 && z0 && zm1;
    rep.step("U7-determinant",
             "det U_7 = -1 - 2z, and conjugacy to the inverse forces det = +-1, "
             "so z = 0 or z = -1",
             det_ok && two, branch_summary(res));

    if (two) {
      Matrix<Poly> u_z0 = substitute(u7, z0->subst);
      bool scalar = u_z0 == lift_to_poly(neg_identity(n));
      // U_6 is a conjugate of U_7, so it would also be -I; the sliding
      // relation L_6 U_7 U_6 = U_7 U_6 L_7 then says L_6 = L_7.
      bool reject_ok = scalar && ell[6] != ell[7];
      rep.step("U7-reject",
               "z = 0 makes U_7 = -I, and the slide relation collapses to the "
               "false identity L_6 = L_7",
               reject_ok);
      u7 = substitute(u7, zm1->subst);
      rep.step("U7-accept", "z = -1 gives U_7 = L_7",
               u7 == lift_to_poly(ell[7]));
    } else {
      rep.step("U7-reject", "branch enumeration failed", false);
      rep.step("U7-accept", "branch enumeration failed", false);
    }
  }

  rep.step("conclusion", "M = U_7 = L_7",
           m_accepted == u7 && u7 == lift_to_poly(ell[7]));

  return rep;
}

}  // namespace mcg::detail
