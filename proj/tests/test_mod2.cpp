#include <doctest.h>

#include <random>
#include <vector>

#include <mcg/linalg.hpp>
#include <mcg/mod2.hpp>
#include <mcg/relations.hpp>
#include <mcg/word.hpp>

using namespace mcg;

namespace {

std::vector<GF2> bits(int dim, unsigned mask) {
  std::vector<GF2> v(dim);
  for (int i = 0; i < dim; ++i) v[i] = GF2((mask >> i) & 1u);
  return v;
}

std::vector<GF2> add(std::vector<GF2> a, const std::vector<GF2>& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
  return a;
}

std::vector<GF2> apply(const Matrix<GF2>& m, const std::vector<GF2>& v) {
  std::vector<GF2> out(m.rows(), GF2(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] = out[i] + m.at(i, j) * v[j];
  return out;
}

// random element of W in V coordinates
std::vector<GF2> rand_w(std::mt19937& rng, int r) {
  std::uniform_int_distribution<unsigned> mask(0, (1u << (2 * r)) - 1);
  std::vector<GF2> coords = bits(2 * r, mask(rng));
  return wsymp_lift(r, coords);
}

Matrix<GF2> rand_symp(std::mt19937& rng, int r) {
  std::uniform_int_distribution<unsigned> mask(1, (1u << (2 * r)) - 1);
  Matrix<GF2> m = Matrix<GF2>::identity(2 * r);
  for (int k = 0; k < 6; ++k)
    m = m * sp_transvection(r, bits(2 * r, mask(rng)));
  return m;
}

}  // namespace

TEST_CASE("special vectors at r = 3") {
  SpecialVectors sv = special_vectors(3);
  CHECK(sv.v[0] == bits(8, 0b00000011));
  CHECK(sv.v[1] == bits(8, 0b00001111));
  CHECK(sv.v[2] == bits(8, 0b00111111));
  CHECK(sv.w[0] == bits(8, 0b00000110));
  CHECK(sv.w[2] == bits(8, 0b01100000));
  CHECK(sv.c == bits(8, 0b10000000));
  CHECK(sv.d == bits(8, 0b11111111));

  CHECK(dot2(sv.c, sv.d) == GF2(1));
  CHECK(dot2(sv.d, sv.d) == GF2(0));
  CHECK(dot2(sv.c, sv.c) == GF2(1));
  for (int i = 0; i < 3; ++i) {
    CHECK(dot2(sv.v[i], sv.d) == GF2(0));
    CHECK(dot2(sv.w[i], sv.c) == GF2(0));
    for (int j = 0; j < 3; ++j) {
      CHECK(dot2(sv.v[i], sv.w[j]) == GF2(i == j ? 1 : 0));
      CHECK(dot2(sv.v[i], sv.v[j]) == GF2(0));
      CHECK(dot2(sv.w[i], sv.w[j]) == GF2(0));
    }
  }

  Matrix<GF2> gram = gram_W(3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(gram.at(i, j) == GF2((i / 2 == j / 2 && i != j) ? 1 : 0));

  CHECK_THROWS_AS(special_vectors(0), std::invalid_argument);
}

TEST_CASE("d is the unique characteristic vector") {
  for (int r : {1, 2, 3}) {
    SpecialVectors sv = special_vectors(r);
    const int dim = 2 * r + 2;
    int found = 0;
    for (unsigned m = 1; m < (1u << dim); ++m) {
      std::vector<GF2> y = bits(dim, m);
      bool characteristic = true;
      for (int i = 0; i < dim && characteristic; ++i) {
        std::vector<GF2> x = bits(dim, 1u << i);
        characteristic = dot2(y, x) == dot2(x, x);
      }
      if (characteristic) {
        ++found;
        CHECK(y == sv.d);
      }
    }
    CHECK(found == 1);
  }
}

TEST_CASE("transvections on V") {
  std::mt19937 rng(7120u);
  std::uniform_int_distribution<unsigned> mask(0, 255);
  int even_seen = 0, odd_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<GF2> v = bits(8, mask(rng));
    Matrix<GF2> t = transvection_gf2(v);
    std::vector<GF2> h = bits(8, mask(rng));
    CHECK(apply(t, h) == (dot2(v, h) == GF2(1) ? add(h, v) : h));
    if (dot2(v, v) == GF2(0)) {
      ++even_seen;
      CHECK(t * t == Matrix<GF2>::identity(8));
      CHECK(is_isometry(t));
    } else {
      ++odd_seen;
      // odd-weight classes do not give isometries mod 2
      CHECK_FALSE(is_isometry(t));
    }
  }
  CHECK(even_seen > 10);
  CHECK(odd_seen > 10);
}

TEST_CASE("W membership and coordinates") {
  const int r = 2;
  SpecialVectors sv = special_vectors(r);
  int members = 0;
  for (unsigned m = 0; m < (1u << 6); ++m) {
    std::vector<GF2> z = bits(6, m);
    bool expected = dot2(z, sv.c) == GF2(0) && dot2(z, sv.d) == GF2(0);
    CHECK(in_wsymp(r, z) == expected);
    if (expected) {
      ++members;
      CHECK(wsymp_lift(r, wsymp_coords(r, z)) == z);
    }
  }
  CHECK(members == 16);

  for (unsigned m = 0; m < (1u << 4); ++m) {
    std::vector<GF2> coords = bits(4, m);
    CHECK(wsymp_coords(r, wsymp_lift(r, coords)) == coords);
  }

  CHECK_THROWS_AS(wsymp_coords(r, bits(6, 0b100000)), std::invalid_argument);
}

TEST_CASE("symplectic transvections on W") {
  const int r = 2;
  for (unsigned m = 0; m < (1u << 4); ++m) {
    Matrix<GF2> t = sp_transvection(r, bits(4, m));
    CHECK(is_symplectic_W(r, t));
    CHECK(t * t == Matrix<GF2>::identity(4));
  }
}

TEST_CASE("B factor group law") {
  for (int r : {1, 2}) {
    CHECK(make_B(r, GF2(0), std::vector<GF2>(2 * r + 2, GF2(0))) ==
          Matrix<GF2>::identity(2 * r + 2));
    std::vector<std::vector<GF2>> w_elems;
    for (unsigned m = 0; m < (1u << (2 * r)); ++m)
      w_elems.push_back(wsymp_lift(r, bits(2 * r, m)));
    for (const auto& z1 : w_elems) {
      for (const auto& z2 : w_elems) {
        for (int x1 = 0; x1 < 2; ++x1) {
          for (int x2 = 0; x2 < 2; ++x2) {
            Matrix<GF2> lhs = make_B(r, GF2(x2), z2) * make_B(r, GF2(x1), z1);
            Matrix<GF2> rhs = make_B(
                r, GF2(x1) + GF2(x2) + dot2(z1, z2), add(z1, z2));
            CHECK(lhs == rhs);
          }
        }
      }
    }
    // every B squares to the identity
    for (const auto& z : w_elems)
      CHECK(make_B(r, GF2(1), z) * make_B(r, GF2(1), z) ==
            Matrix<GF2>::identity(2 * r + 2));
  }
}

TEST_CASE("A section conjugates B by the W action") {
  std::mt19937 rng(4545u);
  const int r = 3;
  for (int trial = 0; trial < 30; ++trial) {
    Matrix<GF2> rm = rand_symp(rng, r);
    std::vector<GF2> z = rand_w(rng, r);
    GF2 x((unsigned)(trial & 1));
    auto rinv = try_inverse_field(rm);
    REQUIRE(rinv);
    std::vector<GF2> rz = wsymp_lift(r, apply(rm, wsymp_coords(r, z)));
    CHECK(make_A(r, rm) * make_B(r, x, z) * make_A(r, *rinv) ==
          make_B(r, x, rz));
  }
}

TEST_CASE("decomposition of isometries round-trips") {
  std::mt19937 rng(9981u);
  const int r = 3;
  for (int trial = 0; trial < 100; ++trial) {
    GF2 x((unsigned)(trial % 2));
    std::vector<GF2> z = rand_w(rng, r);
    Matrix<GF2> rm = rand_symp(rng, r);
    Matrix<GF2> l = make_B(r, x, z) * make_A(r, rm);
    IsoVDecomposition dec = decompose_isov(r, l);
    CHECK(dec.x == x);
    CHECK(dec.z == z);
    CHECK(dec.symp == rm);
    CHECK(make_B(r, dec.x, dec.z) * make_A(r, dec.symp) == l);
  }
  CHECK_THROWS_AS(decompose_isov(r, Matrix<GF2>(8, 8)),
                  std::invalid_argument);
}

TEST_CASE("brute force enumeration at r = 1") {
  BruteIsovResult res = brute_force_isov(1);
  CHECK(res.order == 48);
  CHECK(res.all_fix_d);
  CHECK(res.matches_constructive);
  CHECK_THROWS_AS(brute_force_isov(2), std::invalid_argument);
}

TEST_CASE("mod 2 action of the generators") {
  const int g = 8;
  SpecialVectors sv = special_vectors(3);

  // crosscap transvections and slides act by the same swap
  Matrix<GF2> swap78 = Matrix<GF2>::identity(8);
  swap78.at(6, 6) = GF2(0);
  swap78.at(7, 7) = GF2(0);
  swap78.at(6, 7) = GF2(1);
  swap78.at(7, 6) = GF2(1);
  CHECK(rho(g, td(7).gen) == swap78);
  CHECK(rho(g, uu(7).gen) == swap78);
  CHECK(rho(g, te(3).gen) == transvection_gf2(sv.v[2]));

  for (int i = 1; i <= 7; ++i) {
    CHECK(is_isometry(rho(g, td(i).gen)));
    CHECK(is_isometry(rho(g, uu(i).gen)));
    CHECK(apply(rho(g, td(i).gen), sv.d) == sv.d);
  }
  for (int i = 1; i <= 4; ++i) CHECK(is_isometry(rho(g, te(i).gen)));

  CHECK_THROWS_AS(rho(5, td(1).gen), std::invalid_argument);
}

TEST_CASE("rho kills the relations") {
  SurfaceContext n8{8, 0, SurfaceKind::Nonorientable};
  for (const Relation& rel : relations_for(8, 0)) {
    CAPTURE(rel.id);
    CHECK(rho_word(rel.relator()) == Matrix<GF2>::identity(8));
  }
}

TEST_CASE("rho separates the genus 4 readings") {
  int corrected_failures = 0;
  for (const Relation& rel : relations_for(4, 0, N4Reading::Corrected))
    if (rho_word(rel.relator()) != Matrix<GF2>::identity(4))
      ++corrected_failures;
  CHECK(corrected_failures == 0);

  int literal_failures = 0;
  for (const Relation& rel : relations_for(4, 0, N4Reading::Literal))
    if (rho_word(rel.relator()) != Matrix<GF2>::identity(4))
      ++literal_failures;
  CHECK(literal_failures > 0);
}

TEST_CASE("symplectic quotient of rho") {
  SurfaceContext n8{8, 0, SurfaceKind::Nonorientable};
  SpecialVectors sv = special_vectors(3);

  CHECK(epsilon_word(Word{n8, {}}) == Matrix<GF2>::identity(6));
  CHECK(epsilon_word(parse_word("d7 u7", n8)) == Matrix<GF2>::identity(6));
  CHECK(epsilon_word(parse_word("d7 e3^-1", n8)) ==
        Matrix<GF2>::identity(6));

  std::vector<GF2> v1_coords = wsymp_coords(3, sv.v[0]);
  CHECK(epsilon_word(parse_word("d1", n8)) == sp_transvection(3, v1_coords));

  // the slide part: t_d7 differs from t_e3 by B_{1,v_3}
  CHECK(rho(8, td(7).gen) == make_B(3, GF2(1), sv.v[2]) * rho(8, te(3).gen));

  for (const Relation& rel : relations_for(8, 0)) {
    CAPTURE(rel.id);
    CHECK(epsilon_word(rel.relator()) == Matrix<GF2>::identity(6));
  }

  SurfaceContext n6{6, 0, SurfaceKind::Nonorientable};
  CHECK_THROWS_AS(epsilon_word(parse_word("d1", SurfaceContext{
                      4, 0, SurfaceKind::Nonorientable})),
                  std::invalid_argument);
  CHECK(epsilon_word(parse_word("d1", n6)) ==
        sp_transvection(2, wsymp_coords(2, special_vectors(2).v[0])));
}
