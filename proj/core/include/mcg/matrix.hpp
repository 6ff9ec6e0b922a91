#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <mcg/poly.hpp>
#include <mcg/scalar.hpp>

namespace mcg {

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Int> {
  static constexpr bool is_field = false;
  static constexpr Ring ring = Ring::Z;
  static Int from_int(long v) { return Int(v); }
  static bool is_zero(const Int& x) { return x == 0; }
  static std::optional<Int> div_exact(const Int& a, const Int& b) {
    if (b == 0) return std::nullopt;
    Int q = a / b;
    if (q * b != a) return std::nullopt;
    return q;
  }
  static std::string str(const Int& x) { return int_str(x); }
};

template <>
struct scalar_traits<Rat> {
  static constexpr bool is_field = true;
  static constexpr Ring ring = Ring::Q;
  static Rat from_int(long v) { return Rat(v); }
  static bool is_zero(const Rat& x) { return x == 0; }
  static std::optional<Rat> div_exact(const Rat& a, const Rat& b) {
    if (b == 0) return std::nullopt;
    return a / b;
  }
  static std::string str(const Rat& x) { return rat_str(x); }
};

template <>
struct scalar_traits<GF2> {
  static constexpr bool is_field = true;
  static constexpr Ring ring = Ring::GF2;
  static GF2 from_int(long v) { return GF2(static_cast<int>(v & 1)); }
  static bool is_zero(GF2 x) { return x.v == 0; }
  static std::optional<GF2> div_exact(GF2 a, GF2 b) {
    if (b.v == 0) return std::nullopt;
    return a;
  }
  static std::string str(GF2 x) { return gf2_str(x); }
};

template <>
struct scalar_traits<Poly> {
  static constexpr bool is_field = false;
  static constexpr Ring ring = Ring::PolyQ;
  static Poly from_int(long v) { return Poly(v); }
  static bool is_zero(const Poly& x) { return x.is_zero(); }
  static std::optional<Poly> div_exact(const Poly& a, const Poly& b) {
    return a.divide_exact(b);
  }
  static std::string str(const Poly& x) { return x.str(); }
};

// Dense row-major matrix with exact scalar entries.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, scalar_traits<T>::from_int(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = scalar_traits<T>::from_int(1);
    return m;
  }

  static Matrix from_rows(std::vector<std::vector<T>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw std::invalid_argument("ragged rows in matrix literal");
      for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
  }

  static Matrix from_ints(const std::vector<std::vector<long>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c)
        throw std::invalid_argument("ragged rows in matrix literal");
      for (int j = 0; j < c; ++j)
        m.at(i, j) = scalar_traits<T>::from_int(rows[i][j]);
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& at(int i, int j) {
    check_index(i, j);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  const T& at(int i, int j) const {
    check_index(i, j);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o, "add");
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + o.data_[k];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    require_same_shape(o, "subtract");
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - o.data_[k];
    return out;
  }

  Matrix operator-() const {
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("matrix product shape mismatch: " +
                                  shape_str() + " * " + o.shape_str());
    Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const T& a = at(i, k);
        if (scalar_traits<T>::is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const T& b = o.at(k, j);
          if (scalar_traits<T>::is_zero(b)) continue;
          out.at(i, j) += a * b;
        }
      }
    }
    return out;
  }

  Matrix operator*(const T& c) const {
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * c;
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!scalar_traits<T>::is_zero(x)) return false;
    return true;
  }

  bool is_identity() const {
    if (!square()) return false;
    return *this == identity(rows_);
  }

  T trace() const {
    require_square("trace");
    T t = scalar_traits<T>::from_int(0);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  void set_block(int i0, int j0, const Matrix& b) {
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
  }

  Matrix block(int i0, int j0, int r, int c) const {
    Matrix out(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) out.at(i, j) = at(i0 + i, j0 + j);
    return out;
  }

  template <class U, class F>
  Matrix<U> map(F f) const {
    Matrix<U> out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out.at(i, j) = f(at(i, j));
    return out;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
      s += i ? ",\n [" : "[";
      for (int j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += scalar_traits<T>::str(at(i, j));
      }
      s += "]";
    }
    s += "]";
    return s;
  }

  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  void require_square(const char* op) const {
    if (!square())
      throw std::invalid_argument(std::string(op) + " requires a square matrix, got " + shape_str());
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;

  void check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("matrix index (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of " + shape_str());
  }

  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string(op) + " shape mismatch: " +
                                  shape_str() + " vs " + o.shape_str());
  }
};

template <class T>
Matrix<T> block_diag(const std::vector<Matrix<T>>& blocks) {
  int n = 0, m = 0;
  for (const auto& b : blocks) n += b.rows(), m += b.cols();
  Matrix<T> out(n, m);
  int i = 0, j = 0;
  for (const auto& b : blocks) {
    out.set_block(i, j, b);
    i += b.rows();
    j += b.cols();
  }
  return out;
}

// Determinant by fraction-free (Bareiss) elimination; exact over any of the
// four scalar domains since every division performed is exact.
template <class T>
T det(const Matrix<T>& m) {
  m.require_square("det");
  int n = m.rows();
  if (n == 0) return scalar_traits<T>::from_int(1);
  Matrix<T> a = m;
  T prev = scalar_traits<T>::from_int(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (scalar_traits<T>::is_zero(a.at(k, k))) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!scalar_traits<T>::is_zero(a.at(i, k))) { p = i; break; }
      if (p < 0) return scalar_traits<T>::from_int(0);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        auto q = scalar_traits<T>::div_exact(num, prev);
        if (!q) throw std::logic_error("non-exact division in fraction-free elimination");
        a.at(i, j) = *q;
      }
      a.at(i, k) = scalar_traits<T>::from_int(0);
    }
    prev = a.at(k, k);
  }
  T d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

template <class T>
std::optional<Matrix<T>> try_inverse_field(const Matrix<T>& m) {
  static_assert(scalar_traits<T>::is_field);
  m.require_square("inverse");
  int n = m.rows();
  Matrix<T> a = m, inv = Matrix<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (!scalar_traits<T>::is_zero(a.at(i, col))) { p = i; break; }
    if (p < 0) return std::nullopt;
    if (p != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(col, j), a.at(p, j));
        std::swap(inv.at(col, j), inv.at(p, j));
      }
    T piv = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) / piv;
      inv.at(col, j) = inv.at(col, j) / piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      T f = a.at(i, col);
      if (scalar_traits<T>::is_zero(f)) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Matrix<Rat> lift_to_rat(const Matrix<Int>& m);
Matrix<Poly> lift_to_poly(const Matrix<Int>& m);
Matrix<Poly> rat_to_poly(const Matrix<Rat>& m);
// Checked conversions; throw std::domain_error when an entry does not fit.
Matrix<Int> rat_to_int(const Matrix<Rat>& m);
Matrix<Rat> poly_to_rat(const Matrix<Poly>& m);

Matrix<Int> inverse(const Matrix<Int>& m);
Matrix<Rat> inverse(const Matrix<Rat>& m);
Matrix<GF2> inverse(const Matrix<GF2>& m);
// Polynomial matrices: requires the determinant to be a nonzero rational
// constant; computed as adjugate / det.
Matrix<Poly> inverse(const Matrix<Poly>& m);

template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  m.require_square("adjugate");
  int n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj.at(0, 0) = scalar_traits<T>::from_int(1);
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix<T> minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = m.at(r, c);
          ++cc;
        }
        ++rr;
      }
      T cof = det(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  return adj;
}

template <class T>
Matrix<T> pow(const Matrix<T>& m, const Int& k) {
  m.require_square("pow");
  Matrix<T> base = m;
  Int e = k;
  if (e < 0) {
    base = inverse(m);
    e = -e;
  }
  Matrix<T> result = Matrix<T>::identity(m.rows());
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

// Monic characteristic polynomial, coefficients ascending (c[0] + c[1] t +
// ... + c[n] t^n with c[n] = 1).
std::vector<Int> char_poly(const Matrix<Int>& m);
std::vector<Rat> char_poly(const Matrix<Rat>& m);
std::vector<GF2> char_poly(const Matrix<GF2>& m);
std::vector<Poly> char_poly(const Matrix<Poly>& m);

// The characteristic polynomial rendered in a named variable.
Poly char_poly_in(const Matrix<Int>& m, const std::string& var);
Poly char_poly_in(const Matrix<Rat>& m, const std::string& var);
Poly char_poly_in(const Matrix<Poly>& m, const std::string& var);

// True when rows/cols 2k-1 .. 2l (1-indexed) carry a scalar block that does
// not couple to the remaining coordinates; entries outside are unconstrained.
template <class T>
bool has_scalar_window(const Matrix<T>& m, int k, int l) {
  m.require_square("has_scalar_window");
  int n = m.rows();
  if (k < 1 || l < k || 2 * l > n) throw std::invalid_argument("bad window bounds");
  int lo = 2 * k - 2, hi = 2 * l;  // [lo, hi)
  const T& lambda = m.at(lo, lo);
  for (int i = lo; i < hi; ++i) {
    for (int j = 0; j < n; ++j) {
      bool j_in = (j >= lo && j < hi);
      if (j_in) {
        if (i == j) {
          if (!(m.at(i, j) == lambda)) return false;
        } else if (!scalar_traits<T>::is_zero(m.at(i, j))) {
          return false;
        }
      } else {
        if (!scalar_traits<T>::is_zero(m.at(i, j))) return false;
        if (!scalar_traits<T>::is_zero(m.at(j, i))) return false;
      }
    }
  }
  return true;
}

template <class T>
Matrix<Poly> to_poly_matrix(const Matrix<T>& m) {
  if constexpr (std::is_same_v<T, Poly>) {
    return m;
  } else if constexpr (std::is_same_v<T, Int>) {
    return lift_to_poly(m);
  } else if constexpr (std::is_same_v<T, Rat>) {
    return rat_to_poly(m);
  } else {
    static_assert(!std::is_same_v<T, GF2>, "no canonical GF2 -> PolyQ lift");
  }
}

}  // namespace mcg
