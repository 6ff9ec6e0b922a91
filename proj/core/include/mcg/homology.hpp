#pragma once

#include <vector>

#include <mcg/matrix.hpp>
#include <mcg/word.hpp>

namespace mcg {

// Which coordinate system a homology vector is written in.
enum class HomologyBasis {
  DoubleCoverAB,    // H_1(S_{g-1}), basis a_1, b_1, ..., a_{g-1}, b_{g-1}
  CrosscapClasses,  // H_1(N_g), generators x_1..x_g with 2(x_1+...+x_g) = 0
  ReducedClasses,   // R = H_1(N_g)/<k>, free on the images of x_1..x_{g-1}
};

struct HomologyVector {
  HomologyBasis basis = HomologyBasis::DoubleCoverAB;
  int genus = 0;
  std::vector<Int> coords;
};

int basis_rank(HomologyBasis basis, int g);

// Intersection pairing on H_1(S_{g-1}) in (a,b)-coordinates.
Int ab_pairing(const std::vector<Int>& v, const std::vector<Int>& w);

// h -> h + <v, h> v, as a 2(g-1) square matrix in the (a,b)-basis.
Matrix<Int> transvection(const std::vector<Int>& v);

std::vector<Int> class_a(int g, int i);  // a_i as coordinates
std::vector<Int> class_b(int g, int i);

struct HomologyMaps {
  int genus;
  Matrix<Int> push;     // P*: (a,b)-coords -> x_1..x_g coefficients
  Matrix<Int> reduced;  // q: (a,b)-coords -> R-coords
  std::vector<std::vector<Int>> kernel_basis;  // e_1..e_{g-1} in (a,b)-coords
  std::vector<std::vector<Int>> dual_basis;    // f_1..f_{g-1} in (a,b)-coords
  // Maps (a,b)-coordinates to (e_1..e_{g-1}, f_1..f_{g-1})-coordinates; the
  // inverse of the column matrix of the kernel and dual bases.
  Matrix<Int> basis_change;
};

HomologyMaps homology_maps(int g);

struct BlockDecomposition {
  Matrix<Int> whole;            // Phi(theta(w)) in the (e,f)-basis
  Matrix<Int> kernel_action;    // X1
  Matrix<Int> quotient_action;  // X2
  Matrix<Int> coupling;         // Y
};

// Evaluates Phi(theta(w)) for a word in twist generators of N_g and splits
// it along K. Throws std::logic_error if the lower-left block fails to
// vanish or X1^t X2 != I; both are structural guarantees.
BlockDecomposition block_decompose(const Word& w);

// The action induced by the deck transformation of S_{g-1} -> N_g, defined
// on classes by a_i -> -a_{g-i}, b_i -> b_{g-i}.
Matrix<Int> covering_involution_ab(int g);
Matrix<Int> covering_involution(int g);  // same map in the (e,f)-basis

}  // namespace mcg
