#include <mcg/standard_matrices.hpp>

namespace mcg {

Matrix<Int> twist_V() { return Matrix<Int>::from_ints({{1, 1}, {0, 1}}); }

Matrix<Int> twist_Vhat() { return Matrix<Int>::from_ints({{1, 0}, {-1, 1}}); }

Matrix<Int> twist_W() {
  return Matrix<Int>::from_ints({{1, 1, 0, -1},
                                 {0, 1, 0, 0},
                                 {0, -1, 1, 1},
                                 {0, 0, 0, 1}});
}

namespace {

Matrix<Int> embed(const Matrix<Int>& block, int offset, int m, const char* what) {
  if (offset < 0 || offset + block.rows() > m)
    throw std::invalid_argument(std::string(what) + ": block does not fit in dimension " +
                                std::to_string(m));
  Matrix<Int> out = Matrix<Int>::identity(m);
  out.set_block(offset, offset, block);
  return out;
}

}  // namespace

Matrix<Int> std_A(int i, int m) {
  if (i < 1 || 2 * i > m)
    throw std::invalid_argument("std_A: need 2 <= 2i <= m");
  return embed(twist_V(), 2 * i - 2, m, "std_A");
}

Matrix<Int> std_B(int i, int m) {
  if (i < 1 || 2 * i > m)
    throw std::invalid_argument("std_B: need 2 <= 2i <= m");
  return embed(twist_Vhat(), 2 * i - 2, m, "std_B");
}

Matrix<Int> std_C(int j, int m) {
  if (j < 1 || 2 * j > m - 2)
    throw std::invalid_argument("std_C: need 2 <= 2j <= m-2");
  return embed(twist_W(), 2 * j - 2, m, "std_C");
}

Matrix<Int> omega(int m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("omega: dimension must be positive and even");
  int h = m / 2;
  Matrix<Int> out(m, m);
  for (int i = 0; i < h; ++i) {
    out.at(i, h + i) = 1;
    out.at(h + i, i) = -1;
  }
  return out;
}

Matrix<Int> elem_E(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::invalid_argument("elem_E: index out of range");
  Matrix<Int> out(n, n);
  out.at(i - 1, j - 1) = 1;
  return out;
}

}  // namespace mcg
