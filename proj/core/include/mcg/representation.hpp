#pragma once

#include <string>
#include <utility>
#include <vector>

#include <mcg/matrix.hpp>
#include <mcg/poly.hpp>
#include <mcg/word.hpp>

namespace mcg {

enum class RepName { Phi, Psi1, Psi2, Psi1Signed, Psi2Signed };

std::string rep_name(RepName name);           // "phi", "psi1", ..., "psi2p"
RepName rep_from_name(const std::string& s);  // throws on unknown name

struct GeneratorTable {
  RepName name = RepName::Phi;
  int genus = 0;
  int dim = 0;
  // When set, the evaluation of a u-letter picks up a factor (-1)^exp; this
  // is the character twist that defines the primed variants.
  bool sign_twisted = false;
  SurfaceKind domain = SurfaceKind::Nonorientable;
  std::vector<std::pair<Generator, Matrix<Int>>> entries;  // sorted

  const Matrix<Int>* find(Generator gen) const;
  bool covers(const Word& w) const;
};

// Phi(g): dimension 2(g-1) on the a/b/g chain of the double cover.
// Psi1/Psi2(g), g >= 5: dimension g-1 on d1..d_{g-1}, e1..e_r, u_{g-1}.
GeneratorTable rep_table(RepName name, int g);

// Ordered product of table images; throws std::invalid_argument when a
// letter is missing from the table.
Matrix<Int> eval_word(const GeneratorTable& table, const Word& w);

// Recomputes the twist images of Psi_k (k in {1,2}) from scratch through
// the double cover: transvections, the lift of each twist, and the frozen
// K / quotient bases. Contains no u-entries.
GeneratorTable derive_psi(int g, int k);

struct ConjugacyReport {
  int genus = 0;
  // Dimension of the intertwiner space over the twist generators whose
  // images agree in both tables (the linear stage).
  int twist_space_dim = 0;
  std::vector<Matrix<Rat>> twist_space;
  // Joint intertwiner space over every shared generator, and the symbolic
  // determinant of its generic member; conjugacy holds iff that determinant
  // is not the zero polynomial.
  int full_space_dim = 0;
  Poly det_poly;
  bool conjugate = false;
  std::string detail;
};

ConjugacyReport conjugacy_obstruction(int g, RepName lhs = RepName::Psi1,
                                      RepName rhs = RepName::Psi2);

}  // namespace mcg
