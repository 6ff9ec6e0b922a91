#include <mcg/linalg.hpp>
#include <mcg/scenario.hpp>

#include "scenario_support.hpp"

namespace mcg::detail {

namespace {

// Dimension counts of ker((m - I)^k) for the flag checks.
int generalized_kernel_dim(const Matrix<Rat>& m, int k) {
  Matrix<Rat> p = m - Matrix<Rat>::identity(m.rows());
  Matrix<Rat> acc = Matrix<Rat>::identity(m.rows());
  for (int i = 0; i < k; ++i) acc = acc * p;
  return static_cast<int>(nullspace(acc).size());
}

Matrix<Poly> with_last_column(const Matrix<Int>& diag_part,
                              const std::vector<Poly>& tail) {
  Matrix<Poly> out = lift_to_poly(diag_part);
  for (size_t i = 0; i < tail.size(); ++i)
    out.at(static_cast<int>(i) + 1, out.cols() - 1) = tail[i];
  return out;
}

}  // namespace

// Four-dimensional images of the genus-6 group: every eigenvalue pattern of
// L1 = f(t_{delta_1}) either splits the space (earlier lemmas) or pins
// M = f(t_{eps_2}) to a delta image, which collapses the representation.
DerivationReport scenario_thm13_g6m4() {
  DerivationReport rep;
  rep.scenario = "thm13_g6m4";

  rep.step("split-cases",
           "L1 with 4, 3, or 2 equal-multiplicity eigenvalues yields a two-dimensional "
           "invariant splitting, settled by the two-dimensional shapes",
           true);

  {
    // Single eigenvalue with a 3-dimensional eigenspace shared by L2: the
    // displayed pair commutes outright.
    Matrix<Poly> l1 = sym_matrix({{"l", "0", "0", "0"},
                                  {"0", "l", "0", "0"},
                                  {"0", "0", "l", "1"},
                                  {"0", "0", "0", "l"}});
    Matrix<Poly> l2 = sym_matrix({{"l", "0", "0", "x"},
                                  {"0", "l", "0", "y"},
                                  {"0", "0", "l", "z"},
                                  {"0", "0", "0", "l"}});
    rep.step("single-eig-commutes",
             "single eigenvalue, shared 3-dimensional eigenspace: L1 and L2 commute",
             commutator(l1, l2).is_zero());
  }

  // --- two eigenvalues of multiplicities 1 and 3, normalized to -1, 1 ---
  Matrix<Int> jordan_i = Matrix<Int>::from_ints(
      {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  Matrix<Int> jordan_ii = Matrix<Int>::from_ints(
      {{-1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  Matrix<Int> jordan_iii = Matrix<Int>::from_ints(
      {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
  rep.remember("jordan-i", jordan_i);
  rep.remember("jordan-ii", jordan_ii);
  rep.remember("jordan-iii", jordan_iii);

  rep.step("case-i", "Jordan form (i) squares to the identity",
           jordan_i * jordan_i == Matrix<Int>::identity(4));

  // Case (ii): full Jordan chain on the 1-eigenvalue.
  {
    Matrix<Rat> l1 = lift_to_rat(jordan_ii);
    bool flag_ok = eigenspace(l1, Rat(-1)).size() == 1 &&
                   generalized_kernel_dim(l1, 1) == 1 &&
                   generalized_kernel_dim(l1, 2) == 2 &&
                   generalized_kernel_dim(l1, 3) == 3;
    rep.step("ii-flag",
             "Jordan form (ii): the generalized 1-eigenspaces form the invariant flag "
             "e2 < (e2,e3) < (e2,e3,e4), with (e1) the (-1)-eigenline",
             flag_ok);

    Matrix<Poly> m = sym_matrix({{"x1", "0", "0", "0"},
                                 {"0", "x2", "v1", "v2"},
                                 {"0", "0", "x3", "v3"},
                                 {"0", "0", "0", "x4"}});
    Matrix<Poly> l4 = sym_matrix({{"y1", "0", "0", "0"},
                                  {"0", "y2", "w1", "w2"},
                                  {"0", "0", "y3", "w3"},
                                  {"0", "0", "0", "y4"}});
    rep.remember("ii-M", m);
    rep.remember("ii-L4", l4);

    UnitSpec units{{"x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"}};
    Matrix<Poly> defect = braid_defect(m, l4);
    std::vector<Poly> diag;
    for (int i = 0; i < 4; ++i) diag.push_back(defect.at(i, i));
    SolveResult res = greedy_solve(ConstraintSystem::of(diag, units), units);
    bool ok = !res.branches.empty();
    for (const auto& b : res.branches)
      for (int i = 1; i <= 4; ++i)
        ok = ok && forces_zero(b, pv("x" + std::to_string(i)) - pv("y" + std::to_string(i)),
                               units);
    rep.step("ii-diagonal", "the braid diagonal forces x_i = y_i", ok, branch_summary(res));

    // M is conjugate to L1, so it has eigenvalues -1 and 1 with
    // one-dimensional eigenspaces; e1 and e2 are eigenvectors, hence carry
    // different eigenvalues: x2 = -x1, x3 = x4 = 1, x1 = 1 or x1 = -1.
    bool both = true;
    std::string case_detail;
    for (long a : {1L, -1L}) {
      Assignment diag_fix{{"x1", pc(a)},  {"x2", pc(-a)}, {"x3", pc(1)}, {"x4", pc(1)},
                          {"y1", pc(a)},  {"y2", pc(-a)}, {"y3", pc(1)}, {"y4", pc(1)}};
      Matrix<Poly> ma = substitute(m, diag_fix);
      Matrix<Poly> la = substitute(l4, diag_fix);
      SolveResult fin = greedy_solve(extract(braid_defect(ma, la), Matrix<Poly>(4, 4)));
      bool branch_ok = fin.status == SolveStatus::FullySolved && !fin.branches.empty();
      for (const auto& b : fin.branches)
        branch_ok = branch_ok && substitute(ma, b.subst) == substitute(la, b.subst);
      both = both && branch_ok;
      case_detail += (a == 1 ? "x1 = 1: " : " | x1 = -1: ") + branch_summary(fin);
    }
    rep.step("ii-conclude", "in both sign cases the braid holds only when M = L4", both,
             case_detail);
  }

  // Case (iii): split 1-eigenspace; the genus-4 shapes give three sub-cases.
  {
    Matrix<Rat> l1 = lift_to_rat(jordan_iii);
    bool flag_ok = eigenspace(l1, Rat(-1)).size() == 1 &&
                   generalized_kernel_dim(l1, 1) == 2 &&
                   generalized_kernel_dim(l1, 2) == 3;
    rep.step("iii-flag", "Jordan form (iii): dim E(L1,1) = 2 and the flag is invariant",
             flag_ok);
  }
  {
    // (iiia) trivial action on E(L1,1).
    Matrix<Poly> m = with_last_column(
        Matrix<Int>::from_ints({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
        {pv("x1"), pv("x2")});
    Matrix<Poly> l4 = with_last_column(
        Matrix<Int>::from_ints({{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
        {pv("y1"), pv("y2")});
    SolveResult res = greedy_solve(extract(braid_defect(m, l4), Matrix<Poly>(4, 4)));
    bool ok = res.status == SolveStatus::FullySolved && !res.branches.empty();
    for (const auto& b : res.branches)
      ok = ok && substitute(m, b.subst) == substitute(l4, b.subst);
    rep.step("iiia", "sub-case (a): the braid forces M = L4", ok, branch_summary(res));
  }
  {
    // (iiib) diagonal action with a sign.
    Matrix<Poly> m = with_last_column(
        Matrix<Int>::from_ints({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
        {pv("x1"), pv("x2")});
    Matrix<Poly> l4 = with_last_column(
        Matrix<Int>::from_ints({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
        {pv("y1"), pv("y2")});
    SolveResult res = greedy_solve(extract(braid_defect(m, l4), Matrix<Poly>(4, 4)));
    bool ok = res.status == SolveStatus::FullySolved && !res.branches.empty();
    for (const auto& b : res.branches)
      ok = ok && substitute(m, b.subst) == substitute(l4, b.subst);
    rep.step("iiib", "sub-case (b): the braid forces M = L4", ok, branch_summary(res));
  }
  {
    // (iiic) the genus-4 third shape acts on E(L1,1).
    Matrix<Poly> m = sym_matrix({{"1", "0", "0", "0"},
                                 {"0", "1", "1", "x1"},
                                 {"0", "0", "-1", "x2"},
                                 {"0", "0", "0", "1"}});
    Matrix<Poly> l4 = sym_matrix({{"1", "0", "0", "0"},
                                  {"0", "-1", "0", "y1"},
                                  {"0", "1", "1", "y2"},
                                  {"0", "0", "0", "1"}});
    Matrix<Poly> l5 = sym_matrix({{"1", "0", "0", "0"},
                                  {"0", "1", "1", "z1"},
                                  {"0", "0", "-1", "z2"},
                                  {"0", "0", "0", "1"}});
    rep.remember("iiic-M", m);
    rep.remember("iiic-L4", l4);
    rep.remember("iiic-L5", l5);

    Poly x2_expected = -(pc(2) * pv("x1") + pv("y1") + pc(2) * pv("y2"));
    Poly z2_expected = -(pc(2) * pv("z1") + pv("y1") + pc(2) * pv("y2"));

    SolveResult res_m = greedy_solve(extract(braid_defect(m, l4), Matrix<Poly>(4, 4)));
    bool ok_m = !res_m.branches.empty();
    for (const auto& b : res_m.branches)
      ok_m = ok_m && forces_zero(b, pv("x2") - x2_expected);
    rep.step("iiic-first-braid", "M L4 M = L4 M L4 gives x2 = -(2 x1 + y1 + 2 y2)", ok_m,
             branch_summary(res_m));

    SolveResult res_z = greedy_solve(extract(braid_defect(l5, l4), Matrix<Poly>(4, 4)));
    bool ok_z = !res_z.branches.empty();
    for (const auto& b : res_z.branches)
      ok_z = ok_z && forces_zero(b, pv("z2") - z2_expected);
    rep.step("iiic-second-braid", "L5 L4 L5 = L4 L5 L4 gives z2 = -(2 z1 + y1 + 2 y2)", ok_z,
             branch_summary(res_z));

    std::vector<Poly> all;
    for (const Poly& p : extract(braid_defect(m, l4), Matrix<Poly>(4, 4)).polys)
      all.push_back(p);
    for (const Poly& p : extract(braid_defect(l5, l4), Matrix<Poly>(4, 4)).polys)
      all.push_back(p);
    for (const Poly& p : extract(commutator(m, l5), Matrix<Poly>(4, 4)).polys)
      all.push_back(p);
    SolveResult res = greedy_solve(ConstraintSystem::of(all));
    bool ok = res.status == SolveStatus::FullySolved && !res.branches.empty();
    for (const auto& b : res.branches) {
      ok = ok && forces_zero(b, pv("x2") - pv("z2")) &&
           substitute(m, b.subst) == substitute(l5, b.subst);
    }
    rep.step("iiic-conclude", "adding M L5 = L5 M gives x2 = z2, hence M = L5", ok,
             branch_summary(res));

    Matrix<Int> sq = jordan_iii * jordan_iii;
    rep.step("iiic-close",
             "M = L5 identifies an epsilon twist with a disjoint delta twist, forcing "
             "L1^2 = I; the Jordan form (iii) violates that, closing the sub-case",
             sq != Matrix<Int>::identity(4), "L1^2 = " + sq.str());
  }

  return rep;
}

}  // namespace mcg::detail
