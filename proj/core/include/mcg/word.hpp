#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

// Generator families. The d/e/u letters live on the nonorientable surface
// N_{g,n}; the a/b/g letters live on orientable covers and subsurfaces.
enum class Family : std::uint8_t { TDelta, TEps, U, TAlpha, TBeta, TGamma };

char family_atom(Family f);  // 'd', 'e', 'u', 'a', 'b', 'g'

struct Generator {
  Family family;
  int index;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

std::string generator_str(Generator gen);

// Which surface a word lives on. The genus stored in SurfaceContext is always
// the genus g of the nonorientable surface; the double cover is the closed
// orientable surface of genus g-1 and the half surface is the subsurface
// whose twists generate the centralizer of the deck transformation.
enum class SurfaceKind : std::uint8_t { Nonorientable, DoubleCover, HalfSurface };

struct SurfaceContext {
  int genus = 0;
  int boundary = 0;
  SurfaceKind kind = SurfaceKind::Nonorientable;

  friend bool operator==(const SurfaceContext&, const SurfaceContext&) = default;
};

// Throws std::invalid_argument when the generator does not exist on the
// surface (wrong family for the kind, or index out of range).
void validate_generator(Generator gen, const SurfaceContext& ctx);

struct Letter {
  Generator gen;
  long long exp = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

struct Word {
  SurfaceContext ctx;
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

// Grammar: whitespace-separated letters, each "<atom><index>[^<signed exp>]",
// e.g. "d1 e2^-1 u3". Atom characters are d, e, u, a, b, g.
struct WordParseError : std::runtime_error {
  size_t position;
  WordParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

Word parse_word(const std::string& text, const SurfaceContext& ctx);
std::string letter_str(const Letter& l);
std::string word_str(const Word& w);  // empty word prints as "1"

Word word_inverse(const Word& w);
Word word_concat(const Word& a, const Word& b);  // contexts must match
Word word_pow(const Word& w, long long k);

// Merges adjacent letters with equal generator and drops zero exponents,
// cascading until stable. This is free reduction in the free group on the
// generator set.
Word free_reduce(const Word& w);

// Convenience builders used throughout the relation tables.
Word word_of(const SurfaceContext& ctx, std::vector<Letter> letters);
Letter td(int i, long long e = 1);
Letter te(int j, long long e = 1);
Letter uu(int i, long long e = 1);
Letter ta(int i, long long e = 1);
Letter tb(int i, long long e = 1);
Letter tg(int j, long long e = 1);

}  // namespace mcg
