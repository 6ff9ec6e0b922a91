#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace mcg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class Ring { Z, Q, GF2, PolyQ };

const char* ring_name(Ring r);
Ring ring_from_name(const std::string& name);

// The two-element field. operator+ is xor, operator* is and.
struct GF2 {
  unsigned char v = 0;

  constexpr GF2() = default;
  constexpr GF2(int x) : v(static_cast<unsigned char>(x & 1)) {}

  friend constexpr GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
  friend constexpr GF2 operator-(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
  constexpr GF2 operator-() const { return *this; }
  friend constexpr GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
  friend GF2 operator/(GF2 a, GF2 b) {
    if (b.v == 0) throw std::domain_error("GF2: division by zero");
    return a;
  }
  GF2& operator+=(GF2 b) { v ^= b.v; return *this; }
  GF2& operator-=(GF2 b) { v ^= b.v; return *this; }
  GF2& operator*=(GF2 b) { v &= b.v; return *this; }
  friend constexpr bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
  friend constexpr bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }
};

Int rat_num(const Rat& r);
Int rat_den(const Rat& r);
bool rat_is_integer(const Rat& r);

std::string int_str(const Int& x);
std::string rat_str(const Rat& r);
std::string gf2_str(GF2 x);

Int parse_int(const std::string& text);
Rat parse_rat(const std::string& text);
GF2 parse_gf2(const std::string& text);

// Exact square root of a nonnegative perfect-square rational.
std::optional<Rat> rat_sqrt(const Rat& r);

}  // namespace mcg
