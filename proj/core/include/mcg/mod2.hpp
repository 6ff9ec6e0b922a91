#pragma once

#include <vector>

#include <mcg/matrix.hpp>
#include <mcg/word.hpp>

namespace mcg {

// Mod-2 homology of N_{2r+2}: V = H_1(N; Z_2) with orthonormal basis
// x_1..x_{2r+2} under the mod-2 intersection pairing. The distinguished
// vectors below span the hyperbolic subspace W on which the symplectic
// quotient of Iso(V) acts.
struct SpecialVectors {
  int r = 0;
  std::vector<std::vector<GF2>> v;  // v_i = x_1 + ... + x_{2i}, i = 1..r
  std::vector<std::vector<GF2>> w;  // w_i = x_{2i} + x_{2i+1}, i = 1..r
  std::vector<GF2> c;               // x_{2r+2}
  std::vector<GF2> d;               // x_1 + ... + x_{2r+2}
};

SpecialVectors special_vectors(int r);

GF2 dot2(const std::vector<GF2>& a, const std::vector<GF2>& b);

// h -> h + <v,h> v on V.
Matrix<GF2> transvection_gf2(const std::vector<GF2>& v);

bool is_isometry(const Matrix<GF2>& l);

// Membership and coordinates of W = {x : <x,d> = <x,c> = 0} in the ordered
// basis (v_1, w_1, ..., v_r, w_r).
bool in_wsymp(int r, const std::vector<GF2>& z);
std::vector<GF2> wsymp_coords(int r, const std::vector<GF2>& z);
std::vector<GF2> wsymp_lift(int r, const std::vector<GF2>& z_coords);

// Gram matrix of the (v_1, w_1, ..., v_r, w_r) basis; block diagonal
// [[0,1],[1,0]] per pair.
Matrix<GF2> gram_W(int r);
bool is_symplectic_W(int r, const Matrix<GF2>& m);

// Symplectic transvection on W in basis coordinates: h -> h + <z,h> z.
Matrix<GF2> sp_transvection(int r, const std::vector<GF2>& z_coords);

// The normal factor: B fixes d, sends c to c + x d + z and w to w + <w,z> d.
// z is given in V coordinates and must lie in W.
Matrix<GF2> make_B(int r, GF2 x, const std::vector<GF2>& z);
// The section: A fixes c and d and acts as R on W (R in basis coordinates).
Matrix<GF2> make_A(int r, const Matrix<GF2>& r_action);

struct IsoVDecomposition {
  GF2 x;
  std::vector<GF2> z;   // V coordinates, lies in W
  Matrix<GF2> symp;     // 2r x 2r action on W
};

// Unique factorization L = B_{x,z} A_R of an isometry of V.
IsoVDecomposition decompose_isov(int r, const Matrix<GF2>& l);

// Action of a mapping class generator on V: twists act by the transvection
// of their mod-2 class, u_i by the swap of x_i and x_{i+1}.
Matrix<GF2> rho(int g, Generator gen);
Matrix<GF2> rho_word(const Word& w);

// Symplectic part of rho(w); defined for g = 2r+2 with r >= 2.
Matrix<GF2> epsilon_word(const Word& w);

struct BruteIsovResult {
  long long order = 0;
  bool all_fix_d = false;
  bool matches_constructive = false;
};

// Exhaustive check over GL(4,2) that the isometry group at r=1 has exactly
// the 48 elements B_{x,z} A_R.
BruteIsovResult brute_force_isov(int r);

}  // namespace mcg
