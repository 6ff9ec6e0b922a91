#include <mcg/dihedral.hpp>

#include <stdexcept>

namespace mcg {

DihedralElement DihedralElement::pow(long long k) const {
  DihedralElement base = k < 0 ? inverse() : *this;
  long long reps = k < 0 ? -k : k;
  DihedralElement acc;  // identity
  while (reps > 0) {
    if (reps & 1) acc = acc * base;
    base = base * base;
    reps >>= 1;
  }
  return acc;
}

std::optional<int> DihedralElement::order() const {
  if (is_identity()) return 1;
  if (reflection) return 2;  // ((t,1))^2 = (t - t, 0)
  return std::nullopt;       // nonzero translation
}

std::string DihedralElement::str() const {
  if (is_identity()) return "1";
  std::string s;
  if (translation != 0) {
    s = "(xy)";
    if (translation != 1) s += "^" + std::to_string(translation);
  }
  if (reflection) {
    if (!s.empty()) s += " ";
    s += "x";
  }
  return s;
}

DihedralElement dihedral_eval(const Word& w) {
  if (w.ctx.genus != 4 || w.ctx.kind != SurfaceKind::Nonorientable)
    throw std::invalid_argument("dihedral_eval: word must live on N_4");
  const DihedralElement one;
  const DihedralElement xy{1, false};
  DihedralElement acc;
  for (const Letter& l : w.letters) {
    DihedralElement img = one;
    switch (l.gen.family) {
      case Family::TEps:
        img = l.gen.index == 2 ? xy : one;
        break;
      case Family::TDelta:
        img = one;
        break;
      case Family::U:
        img = DihedralElement::y();
        break;
      default:
        throw std::invalid_argument("dihedral_eval: unexpected letter " +
                                    letter_str(l));
    }
    acc = acc * img.pow(l.exp);
  }
  return acc;
}

}  // namespace mcg
