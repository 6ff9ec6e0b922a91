#include <mcg/homology.hpp>

#include <stdexcept>

#include <mcg/translate.hpp>

namespace mcg {

int basis_rank(HomologyBasis basis, int g) {
  switch (basis) {
    case HomologyBasis::DoubleCoverAB: return 2 * (g - 1);
    case HomologyBasis::CrosscapClasses: return g;
    case HomologyBasis::ReducedClasses: return g - 1;
  }
  return 0;
}

Int ab_pairing(const std::vector<Int>& v, const std::vector<Int>& w) {
  if (v.size() != w.size() || v.size() % 2 != 0)
    throw std::invalid_argument("ab_pairing: dimension mismatch");
  Int acc = 0;
  for (size_t p = 0; p + 1 < v.size(); p += 2)
    acc += v[p] * w[p + 1] - v[p + 1] * w[p];
  return acc;
}

Matrix<Int> transvection(const std::vector<Int>& v) {
  const int n = static_cast<int>(v.size());
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("transvection: class must have even length");
  Matrix<Int> m = Matrix<Int>::identity(n);
  std::vector<Int> basis_col(static_cast<size_t>(n), Int(0));
  for (int j = 0; j < n; ++j) {
    basis_col.assign(static_cast<size_t>(n), Int(0));
    basis_col[static_cast<size_t>(j)] = 1;
    const Int c = ab_pairing(v, basis_col);
    if (c == 0) continue;
    for (int i = 0; i < n; ++i) m.at(i, j) += c * v[static_cast<size_t>(i)];
  }
  return m;
}

std::vector<Int> class_a(int g, int i) {
  if (i < 1 || i > g - 1) throw std::invalid_argument("class_a: index range");
  std::vector<Int> v(static_cast<size_t>(2 * (g - 1)), Int(0));
  v[static_cast<size_t>(2 * i - 2)] = 1;
  return v;
}

std::vector<Int> class_b(int g, int i) {
  if (i < 1 || i > g - 1) throw std::invalid_argument("class_b: index range");
  std::vector<Int> v(static_cast<size_t>(2 * (g - 1)), Int(0));
  v[static_cast<size_t>(2 * i - 1)] = 1;
  return v;
}

HomologyMaps homology_maps(int g) {
  if (g < 3) throw std::invalid_argument("homology_maps: genus must be >= 3");
  const int r = (g - 1) / 2;
  const int n = 2 * (g - 1);

  // P* column by column; columns alternate a_1, b_1, a_2, b_2, ...
  Matrix<Int> push(g, n);
  auto acol = [](int i) { return 2 * i - 2; };
  auto bcol = [](int i) { return 2 * i - 1; };
  for (int i = 1; i <= r; ++i) {
    for (int t = 1; t <= 2 * i; ++t) {
      push.at(t - 1, acol(i)) = 1;
      push.at(t - 1, acol(g - i)) = -1;
    }
    push.at(2 * i - 1, bcol(i)) = 1;
    push.at(2 * i, bcol(i)) = 1;
    push.at(2 * i - 1, bcol(g - i)) = 1;
    push.at(2 * i, bcol(g - i)) = 1;
  }
  if (g == 2 * r + 2) {
    for (int t = 1; t <= g; ++t) push.at(t - 1, acol(r + 1)) = 1;
    push.at(g - 1, bcol(r + 1)) = 2;
  }

  // R-coordinates of sum c_i x_i are (c_i - c_g) for i < g.
  Matrix<Int> reduced(g - 1, n);
  for (int i = 0; i < g - 1; ++i)
    for (int j = 0; j < n; ++j)
      reduced.at(i, j) = push.at(i, j) - push.at(g - 1, j);

  auto add_to = [](std::vector<Int>& acc, const std::vector<Int>& v, Int c) {
    for (size_t k = 0; k < acc.size(); ++k) acc[k] += c * v[k];
  };
  std::vector<std::vector<Int>> es(static_cast<size_t>(g - 1)),
      fs(static_cast<size_t>(g - 1));
  for (int i = 1; i <= r; ++i) {
    std::vector<Int> e(static_cast<size_t>(n), Int(0));
    add_to(e, class_a(g, i), 1);
    add_to(e, class_a(g, g - i), 1);
    es[static_cast<size_t>(i - 1)] = std::move(e);

    std::vector<Int> er(static_cast<size_t>(n), Int(0));
    add_to(er, class_b(g, i), 1);
    add_to(er, class_b(g, g - i), -1);
    es[static_cast<size_t>(r + i - 1)] = std::move(er);

    fs[static_cast<size_t>(i - 1)] = class_b(g, i);
    fs[static_cast<size_t>(r + i - 1)] = class_a(g, g - i);
  }
  if (g == 2 * r + 2) {
    es[static_cast<size_t>(2 * r)] = class_a(g, r + 1);
    fs[static_cast<size_t>(2 * r)] = class_b(g, r + 1);
  }

  Matrix<Int> cols(n, n);
  for (int j = 0; j < g - 1; ++j)
    for (int i = 0; i < n; ++i) {
      cols.at(i, j) = es[static_cast<size_t>(j)][static_cast<size_t>(i)];
      cols.at(i, j + g - 1) = fs[static_cast<size_t>(j)][static_cast<size_t>(i)];
    }
  const Matrix<Int> change = rat_to_int(inverse(lift_to_rat(cols)));

  return HomologyMaps{g, std::move(push), std::move(reduced), std::move(es),
                      std::move(fs), change};
}

namespace {

// Column matrix (e_1..e_{g-1}, f_1..f_{g-1}); inverse of basis_change.
Matrix<Int> basis_columns(const HomologyMaps& maps) {
  const int m = maps.genus - 1;
  Matrix<Int> cols(2 * m, 2 * m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < 2 * m; ++i) {
      cols.at(i, j) = maps.kernel_basis[static_cast<size_t>(j)]
                                       [static_cast<size_t>(i)];
      cols.at(i, j + m) = maps.dual_basis[static_cast<size_t>(j)]
                                         [static_cast<size_t>(i)];
    }
  return cols;
}

Matrix<Int> phi_theta(const Word& w) {
  const int g = w.ctx.genus;
  if (w.ctx.kind != SurfaceKind::Nonorientable)
    throw std::invalid_argument("block_decompose: word must live on N_g");
  Matrix<Int> acc = Matrix<Int>::identity(2 * (g - 1));
  for (const Letter& l : w.letters) {
    Matrix<Int> img = Matrix<Int>::identity(2 * (g - 1));
    for (const Letter& cover_letter : theta_word(l.gen, g).letters) {
      std::vector<Int> cls;
      if (cover_letter.gen.family == Family::TAlpha)
        cls = class_a(g, cover_letter.gen.index);
      else if (cover_letter.gen.family == Family::TBeta)
        cls = class_b(g, cover_letter.gen.index);
      else {
        // gamma_j has class a_j - a_{j+1}
        cls = class_a(g, cover_letter.gen.index);
        const auto a2 = class_a(g, cover_letter.gen.index + 1);
        for (size_t k = 0; k < cls.size(); ++k) cls[k] -= a2[k];
      }
      img = img * pow(transvection(cls), Int(cover_letter.exp));
    }
    acc = acc * pow(img, Int(l.exp));
  }
  return acc;
}

}  // namespace

BlockDecomposition block_decompose(const Word& w) {
  const int g = w.ctx.genus;
  const HomologyMaps maps = homology_maps(g);
  const Matrix<Int> x_ab = phi_theta(w);
  const Matrix<Int> x = maps.basis_change * x_ab * basis_columns(maps);
  const int m = g - 1;
  BlockDecomposition out{x, x.block(0, 0, m, m), x.block(m, m, m, m),
                         x.block(0, m, m, m)};
  if (!x.block(m, 0, m, m).is_zero())
    throw std::logic_error("block_decompose: kernel not invariant");
  if (!(out.kernel_action.transpose() * out.quotient_action ==
        Matrix<Int>::identity(m)))
    throw std::logic_error("block_decompose: X1^t X2 != I");
  return out;
}

Matrix<Int> covering_involution_ab(int g) {
  if (g < 3) throw std::invalid_argument("covering_involution: genus >= 3");
  const int n = 2 * (g - 1);
  Matrix<Int> j(n, n);
  for (int i = 1; i <= g - 1; ++i) {
    j.at(2 * (g - i) - 2, 2 * i - 2) = -1;  // a_i -> -a_{g-i}
    j.at(2 * (g - i) - 1, 2 * i - 1) = 1;   // b_i -> b_{g-i}
  }
  return j;
}

Matrix<Int> covering_involution(int g) {
  const HomologyMaps maps = homology_maps(g);
  return maps.basis_change * covering_involution_ab(g) * basis_columns(maps);
}

}  // namespace mcg
