#include <mcg/translate.hpp>

#include <stdexcept>

namespace mcg {

Word iota_translate(const Word& w) {
  if (w.ctx.kind != SurfaceKind::HalfSurface)
    throw std::invalid_argument("iota_translate: word must live on S'");
  const SurfaceContext target{w.ctx.genus, w.ctx.boundary,
                              SurfaceKind::Nonorientable};
  Word out;
  out.ctx = target;
  out.letters.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    Generator img{};
    switch (l.gen.family) {
      case Family::TAlpha: img = {Family::TEps, l.gen.index}; break;
      case Family::TBeta: img = {Family::TDelta, 2 * l.gen.index}; break;
      case Family::TGamma: img = {Family::TDelta, 2 * l.gen.index + 1}; break;
      default:
        throw std::invalid_argument("iota_translate: unexpected letter " +
                                    letter_str(l));
    }
    validate_generator(img, target);
    out.letters.push_back(Letter{img, l.exp});
  }
  return out;
}

Word theta_word(Generator gen, int g) {
  if (g < 3) throw std::invalid_argument("theta_word: genus must be >= 3");
  const SurfaceContext cover{g, 0, SurfaceKind::DoubleCover};
  const int r = (g - 1) / 2;
  if (gen.family == Family::TDelta && gen.index == 1)
    gen = Generator{Family::TEps, 1};
  if (gen.family == Family::TEps) {
    const int i = gen.index;
    if (i < 1 || i > r)
      throw std::invalid_argument("theta_word: " + generator_str(gen) +
                                  " has no printed lift");
    return word_of(cover, {ta(i), ta(g - i, -1)});
  }
  if (gen.family == Family::TDelta) {
    const int k = gen.index;
    if (k < 2 || k > g - 1)
      throw std::invalid_argument("theta_word: index out of range");
    if (k % 2 == 0) {
      const int i = k / 2;
      return word_of(cover, {tb(i), tb(g - i, -1)});
    }
    const int j = (k - 1) / 2;
    return word_of(cover, {tg(j), tg(g - 1 - j, -1)});
  }
  throw std::invalid_argument("theta_word: no lift for " + generator_str(gen));
}

Word special_word(char name, int g) {
  if (name != 's') throw std::invalid_argument("special_word: unknown name");
  if (g < 3) throw std::invalid_argument("special_word: genus must be >= 3");
  const SurfaceContext ctx{g, 0, SurfaceKind::Nonorientable};
  std::vector<Letter> letters;
  letters.reserve(static_cast<size_t>(g - 1));
  for (int i = 1; i <= g - 1; ++i) letters.push_back(td(i));
  return word_of(ctx, std::move(letters));
}

}  // namespace mcg
