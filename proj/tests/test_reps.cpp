#include <doctest.h>

#include <vector>

#include <mcg/relations.hpp>
#include <mcg/representation.hpp>
#include <mcg/standard_matrices.hpp>
#include <mcg/word.hpp>

using namespace mcg;

namespace {

Matrix<Int> corner2(int dim, std::vector<std::vector<long>> rows) {
  Matrix<Int> m = Matrix<Int>::identity(dim);
  const int k = static_cast<int>(rows.size());
  m.set_block(dim - k, dim - k, Matrix<Int>::from_ints(rows));
  return m;
}

Matrix<Int> image(const GeneratorTable& t, const Letter& l) {
  const Matrix<Int>* found = t.find(l.gen);
  REQUIRE(found != nullptr);
  return *found;
}

}  // namespace

TEST_CASE("rep names round-trip") {
  for (RepName n : {RepName::Phi, RepName::Psi1, RepName::Psi2,
                    RepName::Psi1Signed, RepName::Psi2Signed})
    CHECK(rep_from_name(rep_name(n)) == n);
  CHECK(rep_name(RepName::Psi1Signed) == "psi1p");
  CHECK(rep_name(RepName::Psi2Signed) == "psi2p");
  CHECK_THROWS_AS(rep_from_name("psi3"), std::invalid_argument);
}

TEST_CASE("table shapes and coverage") {
  GeneratorTable psi1 = rep_table(RepName::Psi1, 5);
  CHECK(psi1.dim == 4);
  CHECK(psi1.domain == SurfaceKind::Nonorientable);
  CHECK_FALSE(psi1.sign_twisted);

  SurfaceContext n5{5, 0, SurfaceKind::Nonorientable};
  CHECK(psi1.covers(parse_word("d1 d2 d3 d4 e1 e2 u4", n5)));
  CHECK_FALSE(psi1.covers(parse_word("u1", n5)));
  CHECK(psi1.find(uu(1).gen) == nullptr);

  GeneratorTable phi = rep_table(RepName::Phi, 5);
  CHECK(phi.dim == 8);
  CHECK(phi.domain == SurfaceKind::DoubleCover);
  SurfaceContext s4{5, 0, SurfaceKind::DoubleCover};
  CHECK(phi.covers(parse_word("a1 b4 g3", s4)));

  CHECK_THROWS_AS(rep_table(RepName::Psi1, 4), std::invalid_argument);
}

TEST_CASE("displayed corner matrices") {
  // odd genus: the crosscap slide image
  CHECK(image(rep_table(RepName::Psi1, 5), uu(4)) ==
        corner2(4, {{1, 0}, {1, -1}}));
  CHECK(image(rep_table(RepName::Psi2, 5), uu(4)) ==
        corner2(4, {{-1, 0}, {-1, 1}}));

  // even genus: the last twist and the slide
  CHECK(image(rep_table(RepName::Psi2, 6), td(5)) ==
        corner2(5, {{1, 1, -2}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(image(rep_table(RepName::Psi1, 6), td(5)) ==
        corner2(5, {{1, 1, 0}, {0, 1, 0}, {0, -2, 1}}));

  // twist entries are the standard symplectic blocks
  GeneratorTable psi1 = rep_table(RepName::Psi1, 7);
  CHECK(image(psi1, td(1)) == std_A(1, 6));
  CHECK(image(psi1, te(3)) == std_A(3, 6));
  CHECK(image(psi1, td(4)) == std_B(2, 6));
  CHECK(image(psi1, td(3)) == std_C(1, 6));
}

TEST_CASE("sign twist of the primed variants") {
  SurfaceContext n7{7, 0, SurfaceKind::Nonorientable};
  GeneratorTable plain = rep_table(RepName::Psi1, 7);
  GeneratorTable primed = rep_table(RepName::Psi1Signed, 7);
  CHECK(primed.sign_twisted);

  // twists unchanged, slides negated
  CHECK(eval_word(primed, parse_word("d1", n7)) ==
        eval_word(plain, parse_word("d1", n7)));
  CHECK(eval_word(primed, parse_word("u6", n7)) ==
        -eval_word(plain, parse_word("u6", n7)));

  // even slide count cancels the sign
  CHECK(eval_word(primed, parse_word("u6^2", n7)) ==
        eval_word(plain, parse_word("u6^2", n7)));
  CHECK(eval_word(primed, parse_word("u6 d2 u6^-1", n7)) ==
        eval_word(plain, parse_word("u6 d2 u6^-1", n7)));
}

TEST_CASE("determinants of generator images") {
  for (int g : {5, 6, 7, 8}) {
    for (RepName name : {RepName::Psi1, RepName::Psi2}) {
      GeneratorTable t = rep_table(name, g);
      for (const auto& [gen, m] : t.entries) {
        Int d = det(m);
        if (gen.family == Family::U)
          CHECK(d == -1);
        else
          CHECK(d == 1);
      }
    }
  }
}

TEST_CASE("word evaluation") {
  GeneratorTable psi1 = rep_table(RepName::Psi1, 5);
  SurfaceContext n5{5, 0, SurfaceKind::Nonorientable};

  CHECK(eval_word(psi1, Word{n5, {}}) == Matrix<Int>::identity(4));

  // the braid-free slide relation: t_d4 u4 t_d4 = u4
  CHECK(eval_word(psi1, parse_word("d4 u4 d4", n5)) ==
        image(psi1, uu(4)));

  CHECK_THROWS_AS(eval_word(psi1, parse_word("u2", n5)),
                  std::invalid_argument);

  // the boundary-chain word has order dividing 2g (odd) / g (even)
  Matrix<Int> s5 = eval_word(psi1, special_word('s', 5));
  CHECK(pow(s5, Int(10)) == Matrix<Int>::identity(4));
  CHECK(pow(s5, Int(5)) != Matrix<Int>::identity(4));

  GeneratorTable psi1_6 = rep_table(RepName::Psi1, 6);
  Matrix<Int> s6 = eval_word(psi1_6, special_word('s', 6));
  CHECK(pow(s6, Int(6)) == Matrix<Int>::identity(5));
}

TEST_CASE("relation suite at genus 5") {
  SurfaceContext n5{5, 0, SurfaceKind::Nonorientable};
  for (RepName name : {RepName::Psi1, RepName::Psi2, RepName::Psi1Signed,
                       RepName::Psi2Signed}) {
    GeneratorTable t = rep_table(name, 5);
    int checked = 0;
    for (const Relation& rel : relations_for(5, 0)) {
      if (!t.covers(rel.lhs) || !t.covers(rel.rhs)) continue;
      CAPTURE(rel.id);
      CAPTURE(rep_name(name));
      CHECK(eval_word(t, rel.lhs) == eval_word(t, rel.rhs));
      ++checked;
    }
    CHECK(checked > 20);
  }
}

TEST_CASE("braid and disjointness suite for the symplectic blocks") {
  const int m = 8;
  auto A = [&](int i) { return std_A(i, m); };
  auto B = [&](int i) { return std_B(i, m); };
  auto C = [&](int j) { return std_C(j, m); };

  for (int i = 1; i <= 4; ++i) CHECK(A(i) * B(i) * A(i) == B(i) * A(i) * B(i));
  for (int j = 1; j <= 3; ++j) {
    CHECK(B(j) * C(j) * B(j) == C(j) * B(j) * C(j));
    CHECK(C(j) * A(j + 1) * C(j) == A(j + 1) * C(j) * A(j + 1));
  }

  // disjoint supports commute
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) CHECK(A(i) * B(j) == B(j) * A(i));
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j)
      if (j != i && j + 1 != i) CHECK(A(i) * C(j) == C(j) * A(i));
  CHECK(C(1) * C(3) == C(3) * C(1));
}

TEST_CASE("derived twist tables match the stored ones") {
  for (int g : {5, 6}) {
    for (int k : {1, 2}) {
      GeneratorTable derived = derive_psi(g, k);
      GeneratorTable stored =
          rep_table(k == 1 ? RepName::Psi1 : RepName::Psi2, g);
      CHECK(derived.dim == stored.dim);
      for (const auto& [gen, m] : derived.entries) {
        const Matrix<Int>* ref = stored.find(gen);
        REQUIRE(ref != nullptr);
        CAPTURE(generator_str(gen));
        CHECK(m == *ref);
      }
      // no slide entries are derivable
      CHECK(derived.find(uu(g - 1).gen) == nullptr);
    }
  }
  for (int g : {5, 6, 7, 8})
    CHECK(*derive_psi(g, 1).find(td(1).gen) == std_A(1, g - 1));
  CHECK_THROWS_AS(derive_psi(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(derive_psi(5, 3), std::invalid_argument);
}

TEST_CASE("the two representations are not conjugate") {
  ConjugacyReport odd = conjugacy_obstruction(5);
  CHECK(odd.twist_space_dim == 1);
  CHECK_FALSE(odd.conjugate);

  ConjugacyReport even = conjugacy_obstruction(6);
  CHECK(even.twist_space_dim == 2);
  CHECK_FALSE(even.conjugate);

  ConjugacyReport self = conjugacy_obstruction(5, RepName::Psi1, RepName::Psi1);
  CHECK(self.conjugate);
}

TEST_CASE("generator images stay distinct") {
  for (int g : {5, 6}) {
    for (RepName name : {RepName::Psi1, RepName::Psi2}) {
      GeneratorTable t = rep_table(name, g);
      const int r = (g - 1) / 2;
      for (int i = 1; i <= r; ++i)
        for (int j = 2 * i + 1; j <= g - 1; ++j)
          CHECK(image(t, te(i)) != image(t, td(j)));
      Matrix<Int> d1 = image(t, td(1));
      CHECK(d1 * d1 != Matrix<Int>::identity(g - 1));
    }
  }
}
