#include <mcg/mod2.hpp>

#include <set>
#include <stdexcept>

#include <mcg/linalg.hpp>

namespace mcg {

namespace {

int dim_of(int r) { return 2 * r + 2; }

std::vector<GF2> zero_vec(int n) {
  return std::vector<GF2>(static_cast<size_t>(n), GF2(0));
}

std::vector<GF2> act(const Matrix<GF2>& m, const std::vector<GF2>& v) {
  const int n = m.rows();
  std::vector<GF2> out = zero_vec(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.cols(); ++j)
      out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
  return out;
}

std::vector<GF2> add(std::vector<GF2> a, const std::vector<GF2>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// Columns (v_1, w_1, ..., v_r, w_r, c, d): a basis of V adapted to the
// splitting used throughout.
Matrix<GF2> adapted_columns(const SpecialVectors& sv) {
  const int n = dim_of(sv.r);
  Matrix<GF2> s(n, n);
  for (int i = 0; i < sv.r; ++i)
    for (int row = 0; row < n; ++row) {
      s.at(row, 2 * i) = sv.v[static_cast<size_t>(i)][static_cast<size_t>(row)];
      s.at(row, 2 * i + 1) =
          sv.w[static_cast<size_t>(i)][static_cast<size_t>(row)];
    }
  for (int row = 0; row < n; ++row) {
    s.at(row, n - 2) = sv.c[static_cast<size_t>(row)];
    s.at(row, n - 1) = sv.d[static_cast<size_t>(row)];
  }
  return s;
}

Matrix<GF2> adapted_inverse(int r) {
  const auto inv = try_inverse_field(adapted_columns(special_vectors(r)));
  if (!inv) throw std::logic_error("adapted basis is singular");
  return *inv;
}

}  // namespace

SpecialVectors special_vectors(int r) {
  if (r < 1) throw std::invalid_argument("special_vectors: r must be >= 1");
  const int n = dim_of(r);
  SpecialVectors sv;
  sv.r = r;
  for (int i = 1; i <= r; ++i) {
    auto vi = zero_vec(n);
    for (int t = 0; t < 2 * i; ++t) vi[static_cast<size_t>(t)] = GF2(1);
    sv.v.push_back(std::move(vi));
    auto wi = zero_vec(n);
    wi[static_cast<size_t>(2 * i - 1)] = GF2(1);
    wi[static_cast<size_t>(2 * i)] = GF2(1);
    sv.w.push_back(std::move(wi));
  }
  sv.c = zero_vec(n);
  sv.c[static_cast<size_t>(n - 1)] = GF2(1);
  sv.d = std::vector<GF2>(static_cast<size_t>(n), GF2(1));
  return sv;
}

GF2 dot2(const std::vector<GF2>& a, const std::vector<GF2>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot2: length mismatch");
  GF2 acc(0);
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Matrix<GF2> transvection_gf2(const std::vector<GF2>& v) {
  const int n = static_cast<int>(v.size());
  Matrix<GF2> m = Matrix<GF2>::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) += v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
  return m;
}

bool is_isometry(const Matrix<GF2>& l) {
  if (l.rows() != l.cols()) return false;
  return l.transpose() * l == Matrix<GF2>::identity(l.rows());
}

bool in_wsymp(int r, const std::vector<GF2>& z) {
  const SpecialVectors sv = special_vectors(r);
  if (z.size() != sv.d.size()) return false;
  return dot2(z, sv.d).v == 0 && dot2(z, sv.c).v == 0;
}

std::vector<GF2> wsymp_coords(int r, const std::vector<GF2>& z) {
  if (!in_wsymp(r, z))
    throw std::invalid_argument("wsymp_coords: vector outside W");
  const auto full = act(adapted_inverse(r), z);
  // c- and d-coordinates vanish for members of W.
  return std::vector<GF2>(full.begin(), full.begin() + 2 * r);
}

std::vector<GF2> wsymp_lift(int r, const std::vector<GF2>& z_coords) {
  if (static_cast<int>(z_coords.size()) != 2 * r)
    throw std::invalid_argument("wsymp_lift: need 2r coordinates");
  const SpecialVectors sv = special_vectors(r);
  auto out = zero_vec(dim_of(r));
  for (int i = 0; i < r; ++i) {
    if (z_coords[static_cast<size_t>(2 * i)].v)
      out = add(out, sv.v[static_cast<size_t>(i)]);
    if (z_coords[static_cast<size_t>(2 * i + 1)].v)
      out = add(out, sv.w[static_cast<size_t>(i)]);
  }
  return out;
}

Matrix<GF2> gram_W(int r) {
  const SpecialVectors sv = special_vectors(r);
  Matrix<GF2> g(2 * r, 2 * r);
  auto basis = [&](int k) -> const std::vector<GF2>& {
    return k % 2 == 0 ? sv.v[static_cast<size_t>(k / 2)]
                      : sv.w[static_cast<size_t>(k / 2)];
  };
  for (int i = 0; i < 2 * r; ++i)
    for (int j = 0; j < 2 * r; ++j) g.at(i, j) = dot2(basis(i), basis(j));
  return g;
}

bool is_symplectic_W(int r, const Matrix<GF2>& m) {
  if (m.rows() != 2 * r || m.cols() != 2 * r) return false;
  const Matrix<GF2> g = gram_W(r);
  return m.transpose() * g * m == g;
}

Matrix<GF2> sp_transvection(int r, const std::vector<GF2>& z_coords) {
  if (static_cast<int>(z_coords.size()) != 2 * r)
    throw std::invalid_argument("sp_transvection: need 2r coordinates");
  const Matrix<GF2> g = gram_W(r);
  Matrix<GF2> m = Matrix<GF2>::identity(2 * r);
  // h -> h + <z,h> z with <z,h> = z^t G h.
  std::vector<GF2> zg = zero_vec(2 * r);
  for (int j = 0; j < 2 * r; ++j)
    for (int i = 0; i < 2 * r; ++i)
      zg[static_cast<size_t>(j)] += z_coords[static_cast<size_t>(i)] * g.at(i, j);
  for (int i = 0; i < 2 * r; ++i)
    for (int j = 0; j < 2 * r; ++j)
      m.at(i, j) += z_coords[static_cast<size_t>(i)] * zg[static_cast<size_t>(j)];
  return m;
}

Matrix<GF2> make_B(int r, GF2 x, const std::vector<GF2>& z) {
  if (!in_wsymp(r, z)) throw std::invalid_argument("make_B: z outside W");
  const SpecialVectors sv = special_vectors(r);
  const int n = dim_of(r);
  // Build columns in the adapted basis, then change back to x-coordinates.
  Matrix<GF2> adapted = Matrix<GF2>::identity(n);
  const auto zc = wsymp_coords(r, z);
  auto basis_vec = [&](int k) -> const std::vector<GF2>& {
    return k % 2 == 0 ? sv.v[static_cast<size_t>(k / 2)]
                      : sv.w[static_cast<size_t>(k / 2)];
  };
  for (int k = 0; k < 2 * r; ++k)
    adapted.at(n - 1, k) = dot2(basis_vec(k), z);  // w -> w + <w,z> d
  for (int k = 0; k < 2 * r; ++k) adapted.at(k, n - 2) = zc[static_cast<size_t>(k)];
  adapted.at(n - 1, n - 2) = x;  // c -> c + x d + z
  const Matrix<GF2> s = adapted_columns(sv);
  return s * adapted * adapted_inverse(r);
}

Matrix<GF2> make_A(int r, const Matrix<GF2>& r_action) {
  if (!is_symplectic_W(r, r_action))
    throw std::invalid_argument("make_A: R is not symplectic on W");
  const int n = dim_of(r);
  Matrix<GF2> adapted = Matrix<GF2>::identity(n);
  adapted.set_block(0, 0, r_action);
  const Matrix<GF2> s = adapted_columns(special_vectors(r));
  return s * adapted * adapted_inverse(r);
}

IsoVDecomposition decompose_isov(int r, const Matrix<GF2>& l) {
  const int n = dim_of(r);
  if (l.rows() != n || l.cols() != n)
    throw std::invalid_argument("decompose_isov: wrong dimension");
  if (!is_isometry(l))
    throw std::invalid_argument("decompose_isov: not an isometry");
  const SpecialVectors sv = special_vectors(r);
  if (!(act(l, sv.d) == sv.d))
    throw std::invalid_argument("decompose_isov: d not fixed");

  // L(c) = c + x d + z with z in W; the d-component of L(c)+c vanishes for
  // every isometry, so x and z can be read off directly.
  const auto u = add(act(l, sv.c), sv.c);
  if (dot2(u, sv.d).v)
    throw std::logic_error("decompose_isov: <L(c)+c, d> must vanish");
  const GF2 x = dot2(u, sv.c);
  auto z = u;
  if (x.v) z = add(z, sv.d);
  if (!in_wsymp(r, z)) throw std::logic_error("decompose_isov: z outside W");

  // B_{x,z} is an involution, so B*L strips the normal part.
  const Matrix<GF2> k = make_B(r, x, z) * l;
  if (!(act(k, sv.c) == sv.c))
    throw std::logic_error("decompose_isov: symplectic part moves c");
  Matrix<GF2> symp(2 * r, 2 * r);
  for (int j = 0; j < 2 * r; ++j) {
    const auto img = wsymp_coords(
        r, act(k, wsymp_lift(r, [&] {
             auto e = zero_vec(2 * r);
             e[static_cast<size_t>(j)] = GF2(1);
             return e;
           }())));
    for (int i = 0; i < 2 * r; ++i) symp.at(i, j) = img[static_cast<size_t>(i)];
  }
  return IsoVDecomposition{x, std::move(z), std::move(symp)};
}

Matrix<GF2> rho(int g, Generator gen) {
  if (g < 4 || g % 2 != 0)
    throw std::invalid_argument("rho: genus must be even and >= 4");
  const int r = (g - 2) / 2;
  const int n = dim_of(r);
  const SurfaceContext ctx{g, 0, SurfaceKind::Nonorientable};
  validate_generator(gen, ctx);
  switch (gen.family) {
    case Family::TDelta: {
      auto cls = zero_vec(n);
      cls[static_cast<size_t>(gen.index - 1)] = GF2(1);
      cls[static_cast<size_t>(gen.index)] = GF2(1);
      return transvection_gf2(cls);
    }
    case Family::TEps: {
      const SpecialVectors sv = special_vectors(r);
      return transvection_gf2(gen.index <= r
                                  ? sv.v[static_cast<size_t>(gen.index - 1)]
                                  : sv.d);
    }
    case Family::U: {
      Matrix<GF2> m = Matrix<GF2>::identity(n);
      const int i = gen.index - 1;
      m.at(i, i) = GF2(0);
      m.at(i + 1, i + 1) = GF2(0);
      m.at(i, i + 1) = GF2(1);
      m.at(i + 1, i) = GF2(1);
      return m;
    }
    default:
      throw std::invalid_argument("rho: unsupported generator");
  }
}

Matrix<GF2> rho_word(const Word& w) {
  const int g = w.ctx.genus;
  if (w.ctx.kind != SurfaceKind::Nonorientable)
    throw std::invalid_argument("rho_word: word must live on N_g");
  Matrix<GF2> acc = Matrix<GF2>::identity(g);
  for (const Letter& l : w.letters) {
    // Generator images are involutions, so only exponent parity matters.
    if (l.exp & 1) acc = acc * rho(g, l.gen);
  }
  return acc;
}

Matrix<GF2> epsilon_word(const Word& w) {
  const int g = w.ctx.genus;
  if (g < 6 || g % 2 != 0)
    throw std::invalid_argument(
        "epsilon_word: genus must be even and >= 6 (r >= 2)");
  return decompose_isov((g - 2) / 2, rho_word(w)).symp;
}

BruteIsovResult brute_force_isov(int r) {
  if (r != 1)
    throw std::invalid_argument("brute_force_isov: only r = 1 is enumerable");
  const int n = 4;
  const SpecialVectors sv = special_vectors(1);

  std::set<unsigned> isometries;
  bool all_fix_d = true;
  for (unsigned bits = 0; bits < (1u << 16); ++bits) {
    Matrix<GF2> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = GF2((bits >> (4 * i + j)) & 1u);
    if (!is_isometry(m)) continue;
    isometries.insert(bits);
    if (!(act(m, sv.d) == sv.d)) all_fix_d = false;
  }

  std::set<unsigned> constructed;
  for (unsigned rbits = 0; rbits < 16; ++rbits) {
    Matrix<GF2> rm(2, 2);
    rm.at(0, 0) = GF2(rbits & 1u);
    rm.at(0, 1) = GF2((rbits >> 1) & 1u);
    rm.at(1, 0) = GF2((rbits >> 2) & 1u);
    rm.at(1, 1) = GF2((rbits >> 3) & 1u);
    if (!is_symplectic_W(1, rm)) continue;
    const Matrix<GF2> a = make_A(1, rm);
    for (unsigned x = 0; x < 2; ++x)
      for (unsigned zb = 0; zb < 4; ++zb) {
        const auto z = wsymp_lift(1, {GF2(zb & 1u), GF2((zb >> 1) & 1u)});
        const Matrix<GF2> prod = make_B(1, GF2(x), z) * a;
        unsigned bits = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (prod.at(i, j).v) bits |= 1u << (4 * i + j);
        constructed.insert(bits);
      }
  }

  BruteIsovResult res;
  res.order = static_cast<long long>(isometries.size());
  res.all_fix_d = all_fix_d;
  res.matches_constructive = isometries == constructed;
  return res;
}

}  // namespace mcg
