#include <mcg/representation.hpp>

#include <algorithm>
#include <stdexcept>

#include <mcg/homology.hpp>
#include <mcg/linalg.hpp>
#include <mcg/standard_matrices.hpp>

namespace mcg {

std::string rep_name(RepName name) {
  switch (name) {
    case RepName::Phi: return "phi";
    case RepName::Psi1: return "psi1";
    case RepName::Psi2: return "psi2";
    case RepName::Psi1Signed: return "psi1p";
    case RepName::Psi2Signed: return "psi2p";
  }
  return "?";
}

RepName rep_from_name(const std::string& s) {
  if (s == "phi") return RepName::Phi;
  if (s == "psi1") return RepName::Psi1;
  if (s == "psi2") return RepName::Psi2;
  if (s == "psi1p") return RepName::Psi1Signed;
  if (s == "psi2p") return RepName::Psi2Signed;
  throw std::invalid_argument("unknown representation '" + s + "'");
}

const Matrix<Int>* GeneratorTable::find(Generator gen) const {
  for (const auto& [g, m] : entries)
    if (g == gen) return &m;
  return nullptr;
}

bool GeneratorTable::covers(const Word& w) const {
  for (const Letter& l : w.letters)
    if (!find(l.gen)) return false;
  return true;
}

namespace {

void sort_entries(GeneratorTable& t) {
  std::sort(t.entries.begin(), t.entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

Matrix<Int> corner_embed(int dim, const std::vector<std::vector<long>>& block) {
  const int k = static_cast<int>(block.size());
  Matrix<Int> m = Matrix<Int>::identity(dim);
  m.set_block(dim - k, dim - k, Matrix<Int>::from_ints(block));
  return m;
}

GeneratorTable phi_table(int g) {
  if (g < 3) throw std::invalid_argument("rep_table: phi needs genus >= 3");
  GeneratorTable t;
  t.name = RepName::Phi;
  t.genus = g;
  t.dim = 2 * (g - 1);
  t.domain = SurfaceKind::DoubleCover;
  for (int i = 1; i <= g - 1; ++i) {
    t.entries.emplace_back(Generator{Family::TAlpha, i}, std_A(i, t.dim));
    t.entries.emplace_back(Generator{Family::TBeta, i}, std_B(i, t.dim));
  }
  for (int j = 1; j <= g - 2; ++j)
    t.entries.emplace_back(Generator{Family::TGamma, j}, std_C(j, t.dim));
  sort_entries(t);
  return t;
}

GeneratorTable psi_table(RepName name, int g) {
  if (g < 5) throw std::invalid_argument("rep_table: psi needs genus >= 5");
  const bool first = name == RepName::Psi1 || name == RepName::Psi1Signed;
  GeneratorTable t;
  t.name = name;
  t.genus = g;
  t.dim = g - 1;
  t.sign_twisted =
      name == RepName::Psi1Signed || name == RepName::Psi2Signed;
  t.domain = SurfaceKind::Nonorientable;
  const int r = (g - 1) / 2;

  t.entries.emplace_back(Generator{Family::TDelta, 1}, std_A(1, t.dim));
  for (int i = 1; i <= r; ++i) {
    t.entries.emplace_back(Generator{Family::TEps, i}, std_A(i, t.dim));
    t.entries.emplace_back(Generator{Family::TDelta, 2 * i}, std_B(i, t.dim));
  }
  for (int j = 1; j <= r - 1; ++j)
    t.entries.emplace_back(Generator{Family::TDelta, 2 * j + 1},
                           std_C(j, t.dim));

  if (g % 2 == 1) {
    t.entries.emplace_back(
        Generator{Family::U, g - 1},
        corner_embed(t.dim, first
                                ? std::vector<std::vector<long>>{{1, 0}, {1, -1}}
                                : std::vector<std::vector<long>>{{-1, 0},
                                                                 {-1, 1}}));
  } else {
    t.entries.emplace_back(
        Generator{Family::TDelta, g - 1},
        corner_embed(t.dim,
                     first ? std::vector<std::vector<long>>{{1, 1, 0},
                                                            {0, 1, 0},
                                                            {0, -2, 1}}
                           : std::vector<std::vector<long>>{{1, 1, -2},
                                                            {0, 1, 0},
                                                            {0, 0, 1}}));
    t.entries.emplace_back(
        Generator{Family::U, g - 1},
        corner_embed(t.dim,
                     first ? std::vector<std::vector<long>>{{1, -1, 1},
                                                            {0, 1, 0},
                                                            {0, 2, -1}}
                           : std::vector<std::vector<long>>{{1, 1, -2},
                                                            {0, 1, 0},
                                                            {0, 1, -1}}));
  }
  sort_entries(t);
  return t;
}

}  // namespace

GeneratorTable rep_table(RepName name, int g) {
  return name == RepName::Phi ? phi_table(g) : psi_table(name, g);
}

Matrix<Int> eval_word(const GeneratorTable& table, const Word& w) {
  Matrix<Int> acc = Matrix<Int>::identity(table.dim);
  long long u_exponent = 0;
  for (const Letter& l : w.letters) {
    const Matrix<Int>* img = table.find(l.gen);
    if (!img)
      throw std::invalid_argument("eval_word: " + generator_str(l.gen) +
                                  " is not in the " + rep_name(table.name) +
                                  " table");
    acc = acc * pow(*img, Int(l.exp));
    if (l.gen.family == Family::U) u_exponent += l.exp;
  }
  if (table.sign_twisted && (u_exponent & 1)) acc = -acc;
  return acc;
}

GeneratorTable derive_psi(int g, int k) {
  if (g < 5) throw std::invalid_argument("derive_psi: genus must be >= 5");
  if (k != 1 && k != 2) throw std::invalid_argument("derive_psi: k in {1,2}");
  const int m = g - 1;
  const int r = (g - 1) / 2;
  const SurfaceContext ctx{g, 0, SurfaceKind::Nonorientable};

  // Frozen K-basis order (e_1, e_{r+1}, e_2, e_{r+2}, ...[, e_{2r+1}]) as a
  // permutation into the sequential order e_1..e_{g-1}.
  std::vector<int> perm;
  for (int i = 0; i < r; ++i) {
    perm.push_back(i);
    perm.push_back(r + i);
  }
  if (m == 2 * r + 1) perm.push_back(2 * r);

  // Quotient basis (a_1+K, b_1+K, ...) expressed in the classes of the
  // f-vectors: a_i + K = -f_{r+i}, b_i + K = f_i, b_{r+1} + K = f_{2r+1}.
  Matrix<Int> t2(m, m);
  for (int i = 0; i < r; ++i) {
    t2.at(r + i, 2 * i) = -1;
    t2.at(i, 2 * i + 1) = 1;
  }
  if (m == 2 * r + 1) t2.at(2 * r, 2 * r) = 1;
  const Matrix<Int> t2_inv = rat_to_int(inverse(lift_to_rat(t2)));

  GeneratorTable out;
  out.name = k == 1 ? RepName::Psi1 : RepName::Psi2;
  out.genus = g;
  out.dim = m;
  out.domain = SurfaceKind::Nonorientable;

  std::vector<Generator> twists;
  twists.push_back(Generator{Family::TDelta, 1});
  for (int i = 2; i <= g - 1; ++i) twists.push_back(Generator{Family::TDelta, i});
  for (int i = 1; i <= r; ++i) twists.push_back(Generator{Family::TEps, i});

  for (Generator gen : twists) {
    const BlockDecomposition dec =
        block_decompose(word_of(ctx, {Letter{gen, 1}}));
    Matrix<Int> img(m, m);
    if (k == 1) {
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q)
          img.at(p, q) = dec.kernel_action.at(perm[static_cast<size_t>(p)],
                                              perm[static_cast<size_t>(q)]);
    } else {
      img = t2_inv * dec.quotient_action * t2;
    }
    out.entries.emplace_back(gen, std::move(img));
  }
  sort_entries(out);
  return out;
}

ConjugacyReport conjugacy_obstruction(int g, RepName lhs, RepName rhs) {
  if (g < 5)
    throw std::invalid_argument("conjugacy_obstruction: genus must be >= 5");
  const GeneratorTable ta = rep_table(lhs, g);
  const GeneratorTable tb = rep_table(rhs, g);
  if (ta.dim != tb.dim)
    throw std::invalid_argument("conjugacy_obstruction: dimension mismatch");

  // Linear stage: generators whose images coincide give plain commutation
  // conditions; the rest are checked on the generic member.
  std::vector<Matrix<Rat>> shared;
  std::vector<std::pair<Matrix<Rat>, Matrix<Rat>>> differing;
  for (const auto& [gen, img] : ta.entries) {
    const Matrix<Int>* other = tb.find(gen);
    if (!other) continue;
    if (gen.family != Family::U && img == *other)
      shared.push_back(lift_to_rat(img));
    else
      differing.emplace_back(lift_to_rat(img), lift_to_rat(*other));
  }

  ConjugacyReport rep;
  rep.genus = g;
  rep.twist_space = intertwiner_space(shared, shared);
  rep.twist_space_dim = static_cast<int>(rep.twist_space.size());

  std::vector<Matrix<Rat>> all_a = shared, all_b = shared;
  for (const auto& [p, q] : differing) {
    all_a.push_back(p);
    all_b.push_back(q);
  }
  const std::vector<Matrix<Rat>> full = intertwiner_space(all_a, all_b);
  rep.full_space_dim = static_cast<int>(full.size());

  if (full.empty()) {
    rep.det_poly = Poly();
    rep.conjugate = false;
    rep.detail = "no nonzero intertwiner exists";
    return rep;
  }
  Matrix<Poly> generic(ta.dim, ta.dim);
  for (size_t b = 0; b < full.size(); ++b) {
    const Poly lambda = Poly::variable("l" + std::to_string(b + 1));
    for (int i = 0; i < ta.dim; ++i)
      for (int j = 0; j < ta.dim; ++j)
        generic.at(i, j) += lambda * Poly(full[b].at(i, j));
  }
  rep.det_poly = det(generic);
  rep.conjugate = !rep.det_poly.is_zero();
  rep.detail = rep.conjugate
                   ? "an invertible intertwiner exists (det not identically 0)"
                   : "every joint intertwiner is singular (det == 0)";
  return rep;
}

}  // namespace mcg
