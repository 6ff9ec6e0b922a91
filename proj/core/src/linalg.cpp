#include <mcg/linalg.hpp>

namespace mcg {

std::vector<Matrix<Rat>> intertwiner_space(const std::vector<Matrix<Rat>>& lhs,
                                           const std::vector<Matrix<Rat>>& rhs) {
  if (lhs.size() != rhs.size())
    throw std::invalid_argument("intertwiner_space needs matching matrix lists");
  if (lhs.empty()) throw std::invalid_argument("intertwiner_space needs at least one pair");
  int n = lhs[0].rows();
  for (const auto& m : lhs)
    if (!m.square() || m.rows() != n)
      throw std::invalid_argument("intertwiner_space matrices must be square of equal size");
  for (const auto& m : rhs)
    if (!m.square() || m.rows() != n)
      throw std::invalid_argument("intertwiner_space matrices must be square of equal size");

  // Unknown M flattened row-major; equations M*rhs[k] - lhs[k]*M = 0.
  int vars = n * n;
  Matrix<Rat> sys(static_cast<int>(lhs.size()) * vars, vars);
  int row = 0;
  for (size_t k = 0; k < lhs.size(); ++k) {
    const auto& P = lhs[k];
    const auto& Q = rhs[k];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        // (M Q - P M)_{ij} = sum_s M_{is} Q_{sj} - sum_s P_{is} M_{sj}
        for (int s = 0; s < n; ++s) {
          sys.at(row, i * n + s) += Q.at(s, j);
          sys.at(row, s * n + j) -= P.at(i, s);
        }
        ++row;
      }
    }
  }
  auto null = nullspace(std::move(sys));
  std::vector<Matrix<Rat>> basis;
  basis.reserve(null.size());
  for (const auto& v : null) {
    Matrix<Rat> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<size_t>(i) * n + j];
    basis.push_back(std::move(m));
  }
  return basis;
}

CommutantBasis commutant_basis(const std::vector<Matrix<Rat>>& mats) {
  auto basis = intertwiner_space(mats, mats);
  return CommutantBasis{static_cast<int>(basis.size()), std::move(basis)};
}

CommutantBasis commutant_basis(const std::vector<Matrix<Int>>& mats) {
  std::vector<Matrix<Rat>> lifted;
  lifted.reserve(mats.size());
  for (const auto& m : mats) lifted.push_back(lift_to_rat(m));
  return commutant_basis(lifted);
}

std::vector<std::vector<Rat>> eigenspace(const Matrix<Rat>& m, const Rat& lambda) {
  m.require_square("eigenspace");
  Matrix<Rat> shifted = m;
  for (int i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
  return nullspace(std::move(shifted));
}

}  // namespace mcg
