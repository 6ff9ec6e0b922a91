#include <mcg/matrix.hpp>

namespace mcg {

Matrix<Rat> lift_to_rat(const Matrix<Int>& m) {
  return m.map<Rat>([](const Int& x) { return Rat(x); });
}

Matrix<Poly> lift_to_poly(const Matrix<Int>& m) {
  return m.map<Poly>([](const Int& x) { return Poly(Rat(x)); });
}

Matrix<Poly> rat_to_poly(const Matrix<Rat>& m) {
  return m.map<Poly>([](const Rat& x) { return Poly(x); });
}

Matrix<Int> rat_to_int(const Matrix<Rat>& m) {
  return m.map<Int>([](const Rat& x) {
    if (!rat_is_integer(x))
      throw std::domain_error("matrix entry " + rat_str(x) + " is not an integer");
    return rat_num(x);
  });
}

Matrix<Rat> poly_to_rat(const Matrix<Poly>& m) {
  return m.map<Rat>([](const Poly& x) { return x.constant_value(); });
}

Matrix<Int> inverse(const Matrix<Int>& m) {
  auto inv = try_inverse_field(lift_to_rat(m));
  if (!inv) throw std::domain_error("matrix is singular");
  for (int i = 0; i < inv->rows(); ++i)
    for (int j = 0; j < inv->cols(); ++j)
      if (!rat_is_integer(inv->at(i, j)))
        throw std::domain_error("matrix is not invertible over the integers (det is not a unit)");
  return rat_to_int(*inv);
}

Matrix<Rat> inverse(const Matrix<Rat>& m) {
  auto inv = try_inverse_field(m);
  if (!inv) throw std::domain_error("matrix is singular");
  return *inv;
}

Matrix<GF2> inverse(const Matrix<GF2>& m) {
  auto inv = try_inverse_field(m);
  if (!inv) throw std::domain_error("matrix is singular");
  return *inv;
}

Matrix<Poly> inverse(const Matrix<Poly>& m) {
  Poly d = det(m);
  if (!d.is_constant() || d.is_zero())
    throw std::domain_error(
        "polynomial matrix inverse requires a nonzero constant determinant, got " + d.str());
  Rat dv = d.constant_value();
  Matrix<Poly> adj = adjugate(m);
  return adj.map<Poly>([&dv](const Poly& p) { return p / dv; });
}

namespace {

// Characteristic polynomial of a matrix over a field: reduce to upper
// Hessenberg form by a similarity, then expand by the standard recurrence.
template <class T>
std::vector<T> char_poly_field(const Matrix<T>& m) {
  static_assert(scalar_traits<T>::is_field);
  m.require_square("char_poly");
  int n = m.rows();
  auto zero = [] { return scalar_traits<T>::from_int(0); };
  auto one = [] { return scalar_traits<T>::from_int(1); };
  if (n == 0) return {one()};
  Matrix<T> h = m;
  for (int k = 0; k < n - 2; ++k) {
    int p = -1;
    for (int i = k + 1; i < n; ++i)
      if (!scalar_traits<T>::is_zero(h.at(i, k))) { p = i; break; }
    if (p < 0) continue;
    if (p != k + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(k + 1, j), h.at(p, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, k + 1), h.at(i, p));
    }
    for (int i = k + 2; i < n; ++i) {
      if (scalar_traits<T>::is_zero(h.at(i, k))) continue;
      T f = h.at(i, k) / h.at(k + 1, k);
      for (int j = 0; j < n; ++j) h.at(i, j) = h.at(i, j) - f * h.at(k + 1, j);
      for (int r = 0; r < n; ++r) h.at(r, k + 1) = h.at(r, k + 1) + f * h.at(r, i);
    }
  }
  // p_k = (t - h[k][k]) p_{k-1} - sum_m h[m][k] * beta_m..beta_{k-1} * p_{m-1}
  std::vector<std::vector<T>> p(n + 1);
  p[0] = {one()};
  for (int k = 1; k <= n; ++k) {
    const auto& prev = p[k - 1];
    std::vector<T> cur(k + 1, zero());
    for (size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] += prev[i];
      cur[i] -= h.at(k - 1, k - 1) * prev[i];
    }
    T betas = one();
    for (int mm = k - 1; mm >= 1; --mm) {
      betas = betas * h.at(mm, mm - 1);
      if (scalar_traits<T>::is_zero(betas)) break;
      T coeff = h.at(mm - 1, k - 1) * betas;
      if (scalar_traits<T>::is_zero(coeff)) continue;
      const auto& pm = p[mm - 1];
      for (size_t i = 0; i < pm.size(); ++i) cur[i] -= coeff * pm[i];
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

}  // namespace

std::vector<Rat> char_poly(const Matrix<Rat>& m) { return char_poly_field(m); }
std::vector<GF2> char_poly(const Matrix<GF2>& m) { return char_poly_field(m); }

std::vector<Int> char_poly(const Matrix<Int>& m) {
  auto cs = char_poly(lift_to_rat(m));
  std::vector<Int> out;
  out.reserve(cs.size());
  for (const auto& c : cs) {
    if (!rat_is_integer(c))
      throw std::logic_error("non-integer coefficient in integer characteristic polynomial");
    out.push_back(rat_num(c));
  }
  return out;
}

// Faddeev-LeVerrier; every division is by an integer, exact over PolyQ.
std::vector<Poly> char_poly(const Matrix<Poly>& m) {
  m.require_square("char_poly");
  int n = m.rows();
  std::vector<Poly> c(n + 1);
  c[n] = Poly(1L);
  if (n == 0) return c;
  Matrix<Poly> mk = m;
  for (int k = 1; k <= n; ++k) {
    Poly ck = -(mk.trace() / Rat(k));
    c[n - k] = ck;
    if (k < n) {
      Matrix<Poly> shifted = mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
      mk = m * shifted;
    }
  }
  return c;
}

namespace {

template <class C>
Poly render_char_poly(const std::vector<C>& cs, const std::string& var) {
  Poly t = Poly::variable(var);
  Poly acc;
  for (size_t k = 0; k < cs.size(); ++k) {
    if constexpr (std::is_same_v<C, Poly>) {
      for (const auto& v : cs[k].variables())
        if (v == var)
          throw std::invalid_argument("char_poly variable '" + var +
                                      "' collides with a matrix entry variable");
      acc += cs[k] * t.pow(static_cast<long>(k));
    } else {
      acc += Poly(Rat(cs[k])) * t.pow(static_cast<long>(k));
    }
  }
  return acc;
}

}  // namespace

Poly char_poly_in(const Matrix<Int>& m, const std::string& var) {
  return render_char_poly(char_poly(m), var);
}
Poly char_poly_in(const Matrix<Rat>& m, const std::string& var) {
  return render_char_poly(char_poly(m), var);
}
Poly char_poly_in(const Matrix<Poly>& m, const std::string& var) {
  return render_char_poly(char_poly(m), var);
}

}  // namespace mcg
