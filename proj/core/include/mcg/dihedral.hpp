#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <mcg/word.hpp>

namespace mcg {

// The infinite dihedral group on two involutions x, y. An element is either
// (xy)^t or (xy)^t x, stored as (translation t, reflection bit).
struct DihedralElement {
  std::int64_t translation = 0;
  bool reflection = false;

  static DihedralElement x() { return {0, true}; }
  static DihedralElement y() { return {-1, true}; }

  DihedralElement operator*(const DihedralElement& o) const {
    return {translation + (reflection ? -o.translation : o.translation),
            reflection != o.reflection};
  }
  DihedralElement inverse() const {
    return reflection ? *this : DihedralElement{-translation, false};
  }
  DihedralElement pow(long long k) const;

  bool is_identity() const { return translation == 0 && !reflection; }
  // Finite order (1 or 2) when it exists; nullopt marks infinite order.
  std::optional<int> order() const;
  std::string str() const;  // normal form, e.g. "1", "x", "(xy)^-2 x"

  friend bool operator==(const DihedralElement&, const DihedralElement&) =
      default;
};

// The quotient map of the genus-4 mapping class group onto the infinite
// dihedral group: e2 -> xy, every d -> 1, e1 -> 1, every u -> y.
DihedralElement dihedral_eval(const Word& w);

}  // namespace mcg
