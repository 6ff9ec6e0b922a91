#include <doctest.h>

#include <random>
#include <vector>

#include <mcg/homology.hpp>
#include <mcg/standard_matrices.hpp>
#include <mcg/word.hpp>

using namespace mcg;

namespace {

std::vector<Int> apply(const Matrix<Int>& m, const std::vector<Int>& v) {
  std::vector<Int> out(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

std::vector<Int> sub(std::vector<Int> a, const std::vector<Int>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// random word in the twist generators of N_g (the ones theta lifts)
Word rand_twist_word(std::mt19937& rng, int g, int len) {
  SurfaceContext ctx{g, 0, SurfaceKind::Nonorientable};
  std::uniform_int_distribution<int> pick(0, 1);
  std::uniform_int_distribution<int> didx(1, g - 1);
  std::uniform_int_distribution<int> eidx(1, (g - 1) / 2);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::vector<Letter> letters;
  for (int k = 0; k < len; ++k) {
    int e = exp(rng);
    if (e == 0) e = 1;
    if (pick(rng) == 0)
      letters.push_back(td(didx(rng), e));
    else
      letters.push_back(te(eidx(rng), e));
  }
  return free_reduce(word_of(ctx, letters));
}

}  // namespace

TEST_CASE("intersection pairing in the (a,b)-basis") {
  const int g = 5;
  for (int i = 1; i <= g - 1; ++i) {
    for (int j = 1; j <= g - 1; ++j) {
      CHECK(ab_pairing(class_a(g, i), class_b(g, j)) == (i == j ? 1 : 0));
      CHECK(ab_pairing(class_a(g, i), class_a(g, j)) == 0);
      CHECK(ab_pairing(class_b(g, i), class_b(g, j)) == 0);
    }
  }

  std::mt19937 rng(188u);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Int> v(8), w(8);
    for (auto& x : v) x = coord(rng);
    for (auto& x : w) x = coord(rng);
    CHECK(ab_pairing(v, w) == -ab_pairing(w, v));
  }
}

TEST_CASE("transvections reproduce the standard matrices") {
  for (int g : {5, 6}) {
    const int m = 2 * (g - 1);
    for (int i = 1; i <= g - 1; ++i) {
      CHECK(transvection(class_a(g, i)) == std_A(i, m));
      CHECK(transvection(class_b(g, i)) == std_B(i, m));
    }
    for (int j = 1; j <= g - 2; ++j)
      CHECK(transvection(sub(class_a(g, j), class_a(g, j + 1))) ==
            std_C(j, m));
  }
  CHECK(transvection(std::vector<Int>(8, 0)) == Matrix<Int>::identity(8));
}

TEST_CASE("transvection action formula") {
  std::mt19937 rng(255u);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Int> v(8), h(8);
    for (auto& x : v) x = coord(rng);
    for (auto& x : h) x = coord(rng);
    std::vector<Int> image = apply(transvection(v), h);
    Int pairing = ab_pairing(v, h);
    for (size_t k = 0; k < h.size(); ++k)
      CHECK(image[k] == h[k] + pairing * v[k]);
  }
}

TEST_CASE("homology maps of the double cover") {
  HomologyMaps maps5 = homology_maps(5);
  CHECK(maps5.push.rows() == 5);
  CHECK(maps5.push.cols() == 8);
  REQUIRE(maps5.kernel_basis.size() == 4);
  REQUIRE(maps5.dual_basis.size() == 4);

  // the kernel basis dies in the reduced quotient
  for (const auto& e : maps5.kernel_basis) {
    std::vector<Int> image = apply(maps5.reduced, e);
    for (const Int& x : image) CHECK(x == 0);
  }

  // at even genus the middle b pushes to 2x_g
  HomologyMaps maps6 = homology_maps(6);
  std::vector<Int> pb3 = apply(maps6.push, class_b(6, 3));
  for (int k = 0; k < 6; ++k) CHECK(pb3[k] == (k == 5 ? 2 : 0));

  // basis_change inverts the column matrix of (e, f)
  for (int g : {5, 6}) {
    HomologyMaps maps = homology_maps(g);
    const int m = 2 * (g - 1);
    Matrix<Int> cols(m, m);
    for (int j = 0; j < g - 1; ++j)
      for (int i = 0; i < m; ++i) {
        cols.at(i, j) = maps.kernel_basis[j][i];
        cols.at(i, g - 1 + j) = maps.dual_basis[j][i];
      }
    CHECK(maps.basis_change * cols == Matrix<Int>::identity(m));
  }
}

TEST_CASE("kernel and dual bases are symplectic") {
  for (int g : {5, 6}) {
    HomologyMaps maps = homology_maps(g);
    for (int i = 0; i < g - 1; ++i) {
      for (int j = 0; j < g - 1; ++j) {
        CHECK(ab_pairing(maps.kernel_basis[i], maps.dual_basis[j]) ==
              (i == j ? 1 : 0));
        CHECK(ab_pairing(maps.kernel_basis[i], maps.kernel_basis[j]) == 0);
        CHECK(ab_pairing(maps.dual_basis[i], maps.dual_basis[j]) == 0);
      }
    }
  }
}

TEST_CASE("block decomposition along the kernel") {
  SurfaceContext n5{5, 0, SurfaceKind::Nonorientable};

  BlockDecomposition empty = block_decompose(Word{n5, {}});
  CHECK(empty.kernel_action == Matrix<Int>::identity(4));
  CHECK(empty.quotient_action == Matrix<Int>::identity(4));
  CHECK(empty.coupling.is_zero());

  BlockDecomposition d1 = block_decompose(parse_word("d1", n5));
  CHECK(d1.kernel_action.transpose() * d1.quotient_action ==
        Matrix<Int>::identity(4));
  CHECK(d1.kernel_action == std_A(1, 4));

  SurfaceContext n7{7, 0, SurfaceKind::Nonorientable};
  BlockDecomposition mixed = block_decompose(parse_word("e2 d3^-1", n7));
  CHECK(mixed.kernel_action.transpose() * mixed.quotient_action ==
        Matrix<Int>::identity(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(mixed.whole.at(6 + i, j) == 0);
}

TEST_CASE("block invariants hold on random twist words") {
  std::mt19937 rng(816u);
  for (int g : {5, 6}) {
    const int m = g - 1;
    for (int trial = 0; trial < 30; ++trial) {
      Word w = rand_twist_word(rng, g, 8);
      CAPTURE(word_str(w));
      BlockDecomposition b = block_decompose(w);
      CHECK(b.kernel_action.transpose() * b.quotient_action ==
            Matrix<Int>::identity(m));
      CHECK(b.whole.block(m, 0, m, m).is_zero());
    }
  }
}

TEST_CASE("covering involution") {
  for (int g : {5, 6}) {
    const int m = 2 * (g - 1);
    Matrix<Int> j_ab = covering_involution_ab(g);
    Matrix<Int> j = covering_involution(g);

    CHECK(j_ab * j_ab == Matrix<Int>::identity(m));
    CHECK(j * j == Matrix<Int>::identity(m));

    // the involution reverses the intersection form
    Matrix<Int> om = omega(m);
    CHECK(j.transpose() * om * j == -om);

    // (e,f)-shape (-I, T; 0, I)
    const int h = g - 1;
    CHECK(j.block(0, 0, h, h) == -Matrix<Int>::identity(h));
    CHECK(j.block(h, 0, h, h).is_zero());
    CHECK(j.block(h, h, h, h) == Matrix<Int>::identity(h));

    // both coordinate versions describe the same map
    HomologyMaps maps = homology_maps(g);
    CHECK(j * maps.basis_change == maps.basis_change * j_ab);

    // the deck action commutes with every lifted twist
    SurfaceContext ctx{g, 0, SurfaceKind::Nonorientable};
    for (int i = 1; i <= g - 1; ++i) {
      Matrix<Int> x = block_decompose(word_of(ctx, {td(i)})).whole;
      CHECK(x * j == j * x);
    }
    for (int i = 1; 2 * i <= g - 1; ++i) {
      Matrix<Int> x = block_decompose(word_of(ctx, {te(i)})).whole;
      CHECK(x * j == j * x);
    }
  }
}

TEST_CASE("basis ranks") {
  CHECK(basis_rank(HomologyBasis::DoubleCoverAB, 5) == 8);
  CHECK(basis_rank(HomologyBasis::CrosscapClasses, 5) == 5);
  CHECK(basis_rank(HomologyBasis::ReducedClasses, 5) == 4);
}
