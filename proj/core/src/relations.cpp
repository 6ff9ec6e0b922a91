#include <mcg/relations.hpp>

#include <cstdlib>

namespace mcg {

Word Relation::relator() const {
  return free_reduce(word_concat(lhs, word_inverse(rhs)));
}

std::vector<Relation> relations_for(int g, int n, N4Reading reading) {
  if (g < 3) throw std::invalid_argument("relations_for: genus must be >= 3");
  if (n < 0 || n > 1)
    throw std::invalid_argument("relations_for: boundary must be 0 or 1");

  const SurfaceContext ctx{g, n, SurfaceKind::Nonorientable};
  std::vector<Relation> out;
  auto add = [&](std::string id, std::vector<Letter> lhs,
                 std::vector<Letter> rhs) {
    out.push_back(Relation{std::move(id), word_of(ctx, std::move(lhs)),
                           word_of(ctx, std::move(rhs))});
  };
  auto tag = [](const char* base, int i, int j = 0) {
    std::string s(base);
    s += "[" + std::to_string(i);
    if (j) s += "," + std::to_string(j);
    return s + "]";
  };

  const int dmax = g - 1;  // delta and u indices
  const int emax = g / 2;  // eps indices

  for (int i = 1; i <= dmax; ++i)
    for (int j = i + 2; j <= dmax; ++j)
      add(tag("R1", i, j), {td(i), td(j)}, {td(j), td(i)});

  for (int i = 1; i <= emax; ++i)
    for (int j = i + 1; j <= emax; ++j)
      add(tag("R2", i, j), {te(i), te(j)}, {te(j), te(i)});

  for (int i = 1; i <= emax; ++i)
    for (int j = 1; j <= dmax; ++j)
      if (j != 2 * i) add(tag("R3", i, j), {te(i), td(j)}, {td(j), te(i)});

  for (int i = 1; i <= g - 2; ++i)
    add(tag("R4", i), {td(i), td(i + 1), td(i)}, {td(i + 1), td(i), td(i + 1)});

  for (int i = 1; 2 * i < g; ++i)
    add(tag("R5", i), {te(i), td(2 * i), te(i)}, {td(2 * i), te(i), td(2 * i)});

  for (int i = 1; i <= dmax; ++i)
    for (int j = 1; j <= dmax; ++j)
      if (std::abs(i - j) > 1)
        add(tag("R6", i, j), {td(i), uu(j)}, {uu(j), td(i)});

  for (int i = 1; i <= dmax; ++i)
    for (int j = i + 2; j <= dmax; ++j)
      add(tag("R7", i, j), {uu(i), uu(j)}, {uu(j), uu(i)});

  for (int i = 1; i <= emax; ++i)
    for (int j = 2 * i + 1; j <= dmax; ++j)
      add(tag("R8", i, j), {te(i), uu(j)}, {uu(j), te(i)});

  for (int i = 1; i <= g - 2; ++i)
    add(tag("R9", i), {uu(i), uu(i + 1), uu(i)}, {uu(i + 1), uu(i), uu(i + 1)});

  for (int i = 1; i <= g - 2; ++i)
    add(tag("R10", i), {td(i), uu(i + 1), uu(i)}, {uu(i + 1), uu(i), td(i + 1)});

  for (int i = 1; i <= g - 2; ++i)
    add(tag("R11", i), {uu(i + 1), td(i), td(i + 1), uu(i)}, {td(i), td(i + 1)});

  for (int i = 1; i <= dmax; ++i)
    add(tag("R12", i), {td(i), uu(i), td(i)}, {uu(i)});

  if (g == 4 && n == 0) {
    for (int i = 1; i <= 2; ++i) {
      const int low = reading == N4Reading::Literal ? 1 : i;
      add("N4-extra-" + std::to_string(i),
          {td(i + 1), uu(low), uu(i + 1)}, {uu(i), uu(i + 1), td(i)});
    }
    add("N4-extra-3", {te(2), uu(3), te(2), uu(3)}, {});
    add("N4-extra-4", {td(1), td(2), td(3), uu(3), uu(2), td(1)},
        {td(2), td(3), uu(3), uu(2)});
  }

  return out;
}

}  // namespace mcg
