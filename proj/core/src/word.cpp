#include <mcg/word.hpp>

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace mcg {

char family_atom(Family f) {
  switch (f) {
    case Family::TDelta: return 'd';
    case Family::TEps: return 'e';
    case Family::U: return 'u';
    case Family::TAlpha: return 'a';
    case Family::TBeta: return 'b';
    case Family::TGamma: return 'g';
  }
  return '?';
}

std::string generator_str(Generator gen) {
  return std::string(1, family_atom(gen.family)) + std::to_string(gen.index);
}

namespace {

bool family_on_kind(Family f, SurfaceKind kind) {
  const bool n_side =
      f == Family::TDelta || f == Family::TEps || f == Family::U;
  return kind == SurfaceKind::Nonorientable ? n_side : !n_side;
}

int index_limit(Family f, const SurfaceContext& ctx) {
  const int g = ctx.genus;
  const int r = (g - 1) / 2;
  switch (ctx.kind) {
    case SurfaceKind::Nonorientable:
      switch (f) {
        case Family::TDelta: return g - 1;
        case Family::TEps: return g / 2;
        case Family::U: return g - 1;
        default: return 0;
      }
    case SurfaceKind::DoubleCover:
      // The orientable double cover of N_g is closed of genus g-1.
      switch (f) {
        case Family::TAlpha: return g - 1;
        case Family::TBeta: return g - 1;
        case Family::TGamma: return g - 2;
        default: return 0;
      }
    case SurfaceKind::HalfSurface:
      // S' = S_{r,s} with g = 2r+s, s in {1,2}; its chain is a_1..a_{g/2},
      // b_1..b_r, g_1..g_{r-1}.
      switch (f) {
        case Family::TAlpha: return g / 2;
        case Family::TBeta: return r;
        case Family::TGamma: return r - 1;
        default: return 0;
      }
  }
  return 0;
}

}  // namespace

void validate_generator(Generator gen, const SurfaceContext& ctx) {
  if (ctx.genus < 1)
    throw std::invalid_argument("surface context: genus must be positive");
  if (ctx.boundary < 0 || ctx.boundary > 1)
    throw std::invalid_argument("surface context: boundary must be 0 or 1");
  if (!family_on_kind(gen.family, ctx.kind))
    throw std::invalid_argument("generator " + generator_str(gen) +
                                " does not live on this surface");
  const int limit = index_limit(gen.family, ctx);
  if (gen.index < 1 || gen.index > limit)
    throw std::invalid_argument("generator " + generator_str(gen) +
                                " out of range (max index " +
                                std::to_string(limit) + ")");
}

namespace {

Family family_from_atom(char c, size_t pos) {
  switch (c) {
    case 'd': return Family::TDelta;
    case 'e': return Family::TEps;
    case 'u': return Family::U;
    case 'a': return Family::TAlpha;
    case 'b': return Family::TBeta;
    case 'g': return Family::TGamma;
    default:
      throw WordParseError(std::string("unknown atom '") + c + "'", pos);
  }
}

}  // namespace

Word parse_word(const std::string& text, const SurfaceContext& ctx) {
  Word w;
  w.ctx = ctx;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const size_t start = i;
    const Family fam = family_from_atom(text[i], i);
    ++i;
    if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw WordParseError("expected index after atom", i);
    long idx = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      if (idx > 1000000) throw WordParseError("index too large", start);
      ++i;
    }
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < n && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw WordParseError("expected exponent after '^'", i);
      long long mag = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = mag * 10 + (text[i] - '0');
        if (mag > 1000000000LL) throw WordParseError("exponent too large", start);
        ++i;
      }
      exp = neg ? -mag : mag;
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw WordParseError("letters must be separated by whitespace", i);
    Generator gen{fam, static_cast<int>(idx)};
    try {
      validate_generator(gen, ctx);
    } catch (const std::invalid_argument& e) {
      throw WordParseError(e.what(), start);
    }
    if (exp != 0) w.letters.push_back(Letter{gen, exp});
  }
  return free_reduce(w);
}

std::string letter_str(const Letter& l) {
  std::string s = generator_str(l.gen);
  if (l.exp != 1) s += "^" + std::to_string(l.exp);
  return s;
}

std::string word_str(const Word& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += letter_str(w.letters[i]);
  }
  return s;
}

Word word_inverse(const Word& w) {
  Word out;
  out.ctx = w.ctx;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(Letter{it->gen, -it->exp});
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  if (!(a.ctx == b.ctx))
    throw std::invalid_argument("cannot concatenate words on different surfaces");
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Word word_pow(const Word& w, long long k) {
  Word base = k < 0 ? word_inverse(w) : w;
  const long long reps = k < 0 ? -k : k;
  Word out;
  out.ctx = w.ctx;
  for (long long i = 0; i < reps; ++i)
    out.letters.insert(out.letters.end(), base.letters.begin(),
                       base.letters.end());
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.ctx = w.ctx;
  for (const Letter& l : w.letters) {
    if (l.exp == 0) continue;
    if (!out.letters.empty() && out.letters.back().gen == l.gen) {
      out.letters.back().exp += l.exp;
      if (out.letters.back().exp == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Word word_of(const SurfaceContext& ctx, std::vector<Letter> letters) {
  Word w;
  w.ctx = ctx;
  w.letters = std::move(letters);
  for (const Letter& l : w.letters) validate_generator(l.gen, ctx);
  return w;
}

Letter td(int i, long long e) { return Letter{{Family::TDelta, i}, e}; }
Letter te(int j, long long e) { return Letter{{Family::TEps, j}, e}; }
Letter uu(int i, long long e) { return Letter{{Family::U, i}, e}; }
Letter ta(int i, long long e) { return Letter{{Family::TAlpha, i}, e}; }
Letter tb(int i, long long e) { return Letter{{Family::TBeta, i}, e}; }
Letter tg(int j, long long e) { return Letter{{Family::TGamma, j}, e}; }

}  // namespace mcg
