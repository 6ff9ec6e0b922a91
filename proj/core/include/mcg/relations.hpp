#pragma once

#include <string>
#include <vector>

#include <mcg/word.hpp>

namespace mcg {

struct Relation {
  std::string id;
  Word lhs;
  Word rhs;

  Word relator() const;  // lhs * rhs^-1, freely reduced
};

// The genus-4 presentation has one displayed relator family whose printed
// index is inconsistent with R10. Literal keeps the text as printed;
// Corrected replaces the stray index by the family index. Corrected is the
// default because the literal family fails the mod-2 homology action while
// the corrected one passes every verification suite.
enum class N4Reading { Corrected, Literal };

// Every instance of R1..R12 with indices in range on N_{g,n}; for g = 4 and
// n = 0 the closed-surface presentation's extra relations are appended.
std::vector<Relation> relations_for(int g, int n,
                                    N4Reading reading = N4Reading::Corrected);

}  // namespace mcg
