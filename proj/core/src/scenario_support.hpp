#pragma once

// Internal helpers shared by the derivation scenarios. Not installed.

#include <sstream>
#include <string>
#include <vector>

#include <mcg/constraint.hpp>
#include <mcg/matrix.hpp>
#include <mcg/scenario.hpp>

namespace mcg::detail {

inline Poly pv(const std::string& name) { return Poly::variable(name); }
inline Poly pc(long c) { return Poly(c); }

inline Matrix<Poly> sym_matrix(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::vector<Poly>> rows;
  for (const auto& r : cells) {
    std::vector<Poly> row;
    for (const auto& cell : r) row.push_back(Poly::parse(cell));
    rows.push_back(std::move(row));
  }
  return Matrix<Poly>::from_rows(rows);
}

template <class T>
Matrix<T> braid_defect(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b * a - b * a * b;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

inline Matrix<Poly> substitute(const Matrix<Poly>& m, const Assignment& a) {
  return m.map<Poly>([&](const Poly& p) { return p.substitute(a); });
}

inline std::string assignment_str(const Assignment& a) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [var, value] : a) {
    if (!first) out << ", ";
    first = false;
    out << var << " = " << value.str();
  }
  return out.str();
}

inline std::string branch_summary(const SolveResult& res) {
  std::ostringstream out;
  out << (res.status == SolveStatus::FullySolved      ? "fully solved"
          : res.status == SolveStatus::PartiallySolved ? "partially solved"
                                                       : "inconsistent");
  out << "; " << res.branches.size() << " surviving / " << res.rejected.size()
      << " rejected branch(es)";
  for (const auto& b : res.branches) {
    out << " | " << assignment_str(b.subst);
    if (!b.residual.empty()) {
      out << " with residual {";
      bool first = true;
      for (const auto& s : b.residual.strs()) {
        if (!first) out << ", ";
        first = false;
        out << s << " = 0";
      }
      out << "}";
    }
  }
  return out.str();
}

// The branch substitution must make the given polynomial vanish (units cancelled).
inline bool forces_zero(const SolveBranch& b, const Poly& p, const UnitSpec& units = {}) {
  return canonical_constraint(p.substitute(b.subst), units).is_zero();
}

inline bool forces_value(const SolveBranch& b, const std::string& var, const Poly& value,
                         const UnitSpec& units = {}) {
  return forces_zero(b, pv(var) - value, units);
}

}  // namespace mcg::detail
