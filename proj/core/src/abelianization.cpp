#include <mcg/abelianization.hpp>

#include <stdexcept>

namespace mcg {

bool AbelianClass::is_zero() const {
  for (GF2 c : coords)
    if (c.v) return false;
  return true;
}

std::string AbelianClass::str() const {
  if (is_zero()) return "0";
  const auto names = abelian_basis_names(genus);
  std::string s;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].v) continue;
    if (!s.empty()) s += " + ";
    s += names[i];
  }
  return s;
}

AbelianClass AbelianClass::operator+(const AbelianClass& o) const {
  if (genus != o.genus || coords.size() != o.coords.size())
    throw std::invalid_argument("abelian classes from different groups");
  AbelianClass out = *this;
  for (size_t i = 0; i < coords.size(); ++i) out.coords[i] += o.coords[i];
  return out;
}

int abelian_rank(int g) {
  if (g < 3) throw std::invalid_argument("abelianization needs genus >= 3");
  if (g == 4) return 3;
  if (g <= 6) return 2;
  return 1;
}

std::vector<std::string> abelian_basis_names(int g) {
  switch (abelian_rank(g)) {
    case 3: return {"[t_d1]", "[t_e2]", "[u_1]"};
    case 2: return {"[t_d1]", "[u_1]"};
    default: return {"[u_1]"};
  }
}

AbelianClass abelianize(const Word& w) {
  const int g = w.ctx.genus;
  if (w.ctx.kind != SurfaceKind::Nonorientable)
    throw std::invalid_argument("abelianize: word must live on N_{g,n}");
  const int rank = abelian_rank(g);
  AbelianClass out{g, std::vector<GF2>(static_cast<size_t>(rank), GF2(0))};
  const size_t u_slot = static_cast<size_t>(rank - 1);
  for (const Letter& l : w.letters) {
    const GF2 par(l.exp & 1);
    switch (l.gen.family) {
      case Family::U:
        out.coords[u_slot] += par;
        break;
      case Family::TEps:
        if (g == 4 && l.gen.index == 2) {
          out.coords[1] += par;
          break;
        }
        [[fallthrough]];
      case Family::TDelta:
        // Twists all fall into the class of the first one; for g >= 7 that
        // class is trivial and rank drops to 1.
        if (g < 7) out.coords[0] += par;
        break;
      default:
        throw std::invalid_argument("abelianize: unexpected letter " +
                                    letter_str(l));
    }
  }
  return out;
}

GF2 u_parity(const Word& w) {
  GF2 p(0);
  for (const Letter& l : w.letters)
    if (l.gen.family == Family::U) p += GF2(l.exp & 1);
  return p;
}

}  // namespace mcg
