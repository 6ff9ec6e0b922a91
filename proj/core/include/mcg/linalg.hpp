#pragma once

#include <optional>
#include <vector>

#include <mcg/matrix.hpp>

namespace mcg {

// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<int> rref_in_place(Matrix<T>& m) {
  static_assert(scalar_traits<T>::is_field);
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!scalar_traits<T>::is_zero(m.at(i, col))) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(p, j));
    T piv = m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) / piv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      T f = m.at(i, col);
      if (scalar_traits<T>::is_zero(f)) continue;
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
int rank(Matrix<T> m) {
  return static_cast<int>(rref_in_place(m).size());
}

// Basis of {x : Mx = 0}, one vector per free column, canonical form.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  static_assert(scalar_traits<T>::is_field);
  int n = m.cols();
  std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(n, scalar_traits<T>::from_int(0));
    v[free] = scalar_traits<T>::from_int(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m.at(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Particular solution of Mx = b, if consistent.
template <class T>
std::optional<std::vector<T>> solve_linear(Matrix<T> m, std::vector<T> b) {
  static_assert(scalar_traits<T>::is_field);
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve_linear shape mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (int i = 0; i < m.rows(); ++i) aug.at(i, m.cols()) = b[i];
  std::vector<int> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), scalar_traits<T>::from_int(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
  return x;
}

// Basis of {M : M * rhs[i] = lhs[i] * M for all i}; matrices n x n.
std::vector<Matrix<Rat>> intertwiner_space(const std::vector<Matrix<Rat>>& lhs,
                                           const std::vector<Matrix<Rat>>& rhs);

struct CommutantBasis {
  int dimension;
  std::vector<Matrix<Rat>> basis;
};

// Basis of the joint commutant {M : MX = XM for every X in mats}.
CommutantBasis commutant_basis(const std::vector<Matrix<Rat>>& mats);
CommutantBasis commutant_basis(const std::vector<Matrix<Int>>& mats);

// Basis of the eigenspace ker(M - lambda I).
std::vector<std::vector<Rat>> eigenspace(const Matrix<Rat>& m, const Rat& lambda);

}  // namespace mcg
