#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include <mcg/interchange.hpp>
#include <mcg/linalg.hpp>
#include <mcg/matrix.hpp>
#include <mcg/poly.hpp>
#include <mcg/scalar.hpp>
#include <mcg/standard_matrices.hpp>

using namespace mcg;

namespace {

Poly rand_poly(std::mt19937& rng, int max_terms) {
  static const char* vars[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> coeff(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> deg(0, 3);
  Poly p;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    Poly term(Rat(coeff(rng), den(rng)));
    for (const char* v : vars) {
      int d = deg(rng);
      if (d > 0) term *= Poly::variable(v).pow(d);
    }
    p += term;
  }
  return p;
}

Matrix<Rat> rand_rat_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> entry(-9, 9);
  Matrix<Rat> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = Rat(entry(rng));
  return m;
}

}  // namespace

TEST_CASE("GF2 is a two element field") {
  for (int a = 0; a <= 1; ++a) {
    for (int b = 0; b <= 1; ++b) {
      CHECK(GF2(a) + GF2(b) == GF2((a + b) % 2));
      CHECK(GF2(a) * GF2(b) == GF2(a & b));
      CHECK(GF2(a) - GF2(b) == GF2(a) + GF2(b));
    }
  }
  CHECK(GF2(1) / GF2(1) == GF2(1));
  CHECK_THROWS_AS(GF2(1) / GF2(0), std::domain_error);
}

TEST_CASE("rational helpers") {
  CHECK(rat_str(Rat(-5)) == "-5");
  CHECK(rat_str(Rat(7, 3)) == "7/3");
  CHECK(rat_is_integer(Rat(4, 2)));
  CHECK(!rat_is_integer(Rat(1, 2)));

  auto s = rat_sqrt(Rat(4, 9));
  REQUIRE(s.has_value());
  CHECK(*s == Rat(2, 3));
  CHECK(!rat_sqrt(Rat(2)).has_value());
  CHECK(*rat_sqrt(Rat(0)) == 0);
}

TEST_CASE("monomial order is graded lex") {
  Monomial one{};
  Monomial x{{"x", 1}};
  Monomial y2{{"y", 2}};
  Monomial xy{{"x", 1}, {"y", 1}};
  CHECK(mono_cmp(one, x) < 0);      // degree first
  CHECK(mono_cmp(y2, x) > 0);       // degree 2 beats degree 1
  CHECK(mono_cmp(xy, y2) > 0);      // same degree, x before y wins
  CHECK(mono_cmp(xy, xy) == 0);
  CHECK(mono_div(xy, x).has_value());
  CHECK(!mono_div(x, xy).has_value());
}

TEST_CASE("polynomial canonical form and printing") {
  Poly p = Poly::variable("x") + Poly::variable("y").pow(2);
  CHECK(p.str() == "y^2 + x");

  Poly q = Poly::parse("x^2 - 1/2*y");
  CHECK(q.str() == "x^2 - 1/2*y");
  CHECK(Poly::parse(q.str()) == q);
  CHECK(Poly().str() == "0");
  CHECK(Poly::parse("0").is_zero());
  CHECK_THROWS_AS(Poly::parse("x +"), ParseError);
}

TEST_CASE("polynomial ring identities on random inputs") {
  std::mt19937 rng(411u);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = rand_poly(rng, 4);
    Poly q = rand_poly(rng, 4);
    Poly r = rand_poly(rng, 3);
    CHECK((p + (-p)).is_zero());
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) * r == p * r + q * r);
    CHECK((p * q) * r == p * (q * r));
  }
}

TEST_CASE("polynomial structure queries") {
  Poly p = Poly::parse("2*a*x + b - 3");

  SUBCASE("split_linear") {
    auto s = p.split_linear("x");
    REQUIRE(s.has_value());
    CHECK(s->first == Poly::parse("2*a"));
    CHECK(s->second == Poly::parse("b - 3"));
    CHECK(!Poly::parse("x^2 + x").split_linear("x").has_value());
  }

  SUBCASE("coeff_of and degrees") {
    CHECK(p.coeff_of("x", 1) == Poly::parse("2*a"));
    CHECK(p.coeff_of("x", 0) == Poly::parse("b - 3"));
    CHECK(p.degree_in("x") == 1);
    CHECK(p.total_degree() == 2);
    CHECK(Poly().total_degree() == -1);
  }

  SUBCASE("sole_variable") {
    CHECK(!p.sole_variable().has_value());
    CHECK(*Poly::parse("x^2 - 1").sole_variable() == "x");
    CHECK(!Poly(Rat(3)).sole_variable().has_value());
  }

  SUBCASE("substitute") {
    Poly out = p.substitute({{"x", Poly(Rat(2))}, {"a", Poly::variable("b")}});
    CHECK(out == Poly::parse("5*b - 3"));
  }
}

TEST_CASE("exact division") {
  Poly diff = Poly::parse("x^2 - y^2");
  auto q = diff.divide_exact(Poly::parse("x - y"));
  REQUIRE(q.has_value());
  CHECK(*q == Poly::parse("x + y"));
  CHECK(!diff.divide_exact(Poly::parse("x + 1")).has_value());
  CHECK(!diff.divide_exact(Poly()).has_value());
}

TEST_CASE("twist blocks and their displayed inverses") {
  Matrix<Int> v = twist_V();
  CHECK(v == Matrix<Int>::from_ints({{1, 1}, {0, 1}}));
  CHECK(inverse(v) == Matrix<Int>::from_ints({{1, -1}, {0, 1}}));
  CHECK(v * inverse(v) == Matrix<Int>::identity(2));

  Matrix<Int> vh = twist_Vhat();
  // braid identity between the two local blocks
  CHECK(v * vh * v == vh * v * vh);

  // char poly of Vhat is (t-1)^2, coefficients ascending
  std::vector<Int> cp = char_poly(vh);
  REQUIRE(cp.size() == 3);
  CHECK(cp[0] == 1);
  CHECK(cp[1] == -2);
  CHECK(cp[2] == 1);
  CHECK(char_poly_in(vh, "t") == Poly::parse("t^2 - 2*t + 1"));
}

TEST_CASE("standard embedded matrices") {
  CHECK(std_A(1, 4) == block_diag<Int>({twist_V(), Matrix<Int>::identity(2)}));
  CHECK(std_C(1, 4) == twist_W());
  CHECK(twist_W() == Matrix<Int>::from_ints({{1, 1, 0, -1},
                                             {0, 1, 0, 0},
                                             {0, -1, 1, 1},
                                             {0, 0, 0, 1}}));
  CHECK_THROWS_AS(std_A(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(std_C(2, 4), std::invalid_argument);

  for (int m : {4, 6, 8}) {
    for (int i = 1; 2 * i <= m; ++i) {
      CHECK(det(std_A(i, m)) == 1);
      CHECK(det(std_B(i, m)) == 1);
    }
    for (int j = 1; 2 * j <= m - 2; ++j) CHECK(det(std_C(j, m)) == 1);
  }

  Matrix<Int> om = omega(6);
  CHECK(om.transpose() == -om);
  CHECK(om * om == -Matrix<Int>::identity(6));
  CHECK(om.at(0, 3) == 1);
  CHECK(om.at(3, 0) == -1);
  CHECK_THROWS_AS(omega(5), std::invalid_argument);

  CHECK(elem_E(3, 1, 3).at(0, 2) == 1);
  CHECK(elem_E(3, 1, 3).at(2, 0) == 0);
}

TEST_CASE("Cayley-Hamilton for the standard matrices") {
  for (const Matrix<Int>& m : {std_A(2, 6), std_B(3, 6), std_C(2, 6)}) {
    std::vector<Int> cp = char_poly(m);
    Matrix<Int> acc(m.rows(), m.rows());
    Matrix<Int> power = Matrix<Int>::identity(m.rows());
    for (size_t k = 0; k < cp.size(); ++k) {
      acc = acc + power * cp[k];
      power = power * m;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("determinant, adjugate and powers") {
  std::mt19937 rng(902u);
  for (int trial = 0; trial < 25; ++trial) {
    Matrix<Rat> m = rand_rat_matrix(rng, 4);
    Rat d = det(m);
    CHECK(m * adjugate(m) == Matrix<Rat>::identity(4) * d);
  }

  CHECK(pow(Matrix<Int>::identity(5), Int(100)) == Matrix<Int>::identity(5));
  CHECK(pow(twist_V(), Int(-1)) == inverse(twist_V()));
  CHECK(pow(twist_V(), Int(3)).at(0, 1) == 3);
}

TEST_CASE("polynomial matrix inverse needs a unit determinant") {
  Matrix<Poly> u(2, 2);
  u.at(0, 0) = Poly(1L);
  u.at(0, 1) = Poly::variable("x");
  u.at(1, 1) = Poly(1L);
  Matrix<Poly> inv = inverse(u);
  CHECK(inv.at(0, 1) == -Poly::variable("x"));
  CHECK(u * inv == lift_to_poly(Matrix<Int>::identity(2)));

  Matrix<Poly> bad(2, 2);
  bad.at(0, 0) = Poly::variable("x");
  bad.at(1, 1) = Poly(1L);
  CHECK_THROWS_AS(inverse(bad), std::runtime_error);
}

TEST_CASE("scalar window shape check") {
  Matrix<Int> good = Matrix<Int>::from_ints(
      {{5, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 7, 0}, {0, 0, 0, 9}});
  CHECK(has_scalar_window(good, 1, 1));
  CHECK(!has_scalar_window(good, 1, 2));

  Matrix<Int> coupled = Matrix<Int>::identity(4) + elem_E(4, 1, 3);
  CHECK(!has_scalar_window(coupled, 1, 1));
  CHECK_THROWS_AS(has_scalar_window(good, 2, 3), std::invalid_argument);
}

TEST_CASE("row reduction and nullspaces") {
  Matrix<Rat> m = Matrix<Rat>::from_ints({{1, 2}, {2, 4}});
  CHECK(rank(m) == 1);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] == Rat(-2));
  CHECK(ns[0][1] == Rat(1));

  auto sol = solve_linear(Matrix<Rat>::from_ints({{1, 1}, {1, -1}}),
                          {Rat(3), Rat(1)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(2));
  CHECK((*sol)[1] == Rat(1));
  CHECK(!solve_linear(m, {Rat(1), Rat(3)}).has_value());
}

TEST_CASE("commutant bases") {
  // no constraint beyond the identity: all of M_2
  auto full = commutant_basis({lift_to_rat(Matrix<Int>::identity(2))});
  CHECK(full.dimension == 4);

  // the irreducible chain in dim 4 leaves only scalars
  std::vector<Matrix<Int>> chain = {std_A(1, 4), std_B(1, 4), std_A(2, 4),
                                    std_B(2, 4), std_C(1, 4)};
  auto scal = commutant_basis(chain);
  REQUIRE(scal.dimension == 1);
  Matrix<Rat> span = scal.basis[0];
  CHECK(span == Matrix<Rat>::identity(4) * span.at(0, 0));

  // a pair acting only on the middle coordinates pins a scalar window there
  auto mid = commutant_basis(std::vector<Matrix<Int>>{std_A(2, 6), std_B(2, 6)});
  for (const Matrix<Rat>& b : mid.basis) {
    CHECK(has_scalar_window(b, 2, 2));
    for (const Matrix<Int>& x : {std_A(2, 6), std_B(2, 6)}) {
      Matrix<Rat> lx = lift_to_rat(x);
      CHECK(b * lx == lx * b);
    }
  }
  CHECK_THROWS_AS(commutant_basis(std::vector<Matrix<Rat>>{}),
                  std::invalid_argument);
}

TEST_CASE("eigenspaces") {
  Matrix<Rat> v = lift_to_rat(twist_V());
  auto fixed = eigenspace(v, Rat(1));
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0][1] == 0);
  CHECK(eigenspace(v, Rat(2)).empty());
}

TEST_CASE("interchange round trips") {
  std::mt19937 rng(77u);
  ExactMatrix samples[] = {
      ExactMatrix{twist_W()},
      ExactMatrix{rand_rat_matrix(rng, 3)},
      ExactMatrix{Matrix<GF2>::from_ints({{1, 0}, {1, 1}})},
      ExactMatrix{Matrix<Poly>::from_rows(
          {{Poly::parse("x^2 - 1/2*y"), Poly()},
           {Poly(Rat(7, 3)), Poly::variable("x")}})},
  };
  for (const ExactMatrix& m : samples) {
    std::string doc = to_interchange(m);
    ExactMatrix back = from_interchange(doc);
    CHECK(ring_of(back) == ring_of(m));
    CHECK(to_interchange(back) == doc);  // byte identical
  }

  // plain JSON integers are accepted on input
  ExactMatrix z = from_interchange(
      R"({"ring":"Z","rows":2,"cols":2,"entries":[[1,2],[3,4]]})");
  CHECK(std::get<Matrix<Int>>(z).at(1, 0) == 3);
  CHECK_THROWS(from_interchange("{\"ring\":\"Z\"}"));
}
