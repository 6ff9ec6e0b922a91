#pragma once

#include <string>
#include <vector>

#include <mcg/scalar.hpp>
#include <mcg/word.hpp>

namespace mcg {

// H_1 of the mapping class group, a GF(2)-module whose rank depends on the
// genus: 3 generators at g=4, 2 for g in {3,5,6}, 1 for g >= 7. Coordinates
// are listed in the order of abelian_basis_names, u-class last.
struct AbelianClass {
  int genus = 0;
  std::vector<GF2> coords;

  bool is_zero() const;
  std::string str() const;

  AbelianClass operator+(const AbelianClass& o) const;
  friend bool operator==(const AbelianClass&, const AbelianClass&) = default;
};

int abelian_rank(int g);
std::vector<std::string> abelian_basis_names(int g);

AbelianClass abelianize(const Word& w);

// Parity of the total u-exponent; the character that twists the primed
// representation variants.
GF2 u_parity(const Word& w);

}  // namespace mcg
