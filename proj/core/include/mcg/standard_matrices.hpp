#pragma once

#include <mcg/matrix.hpp>

namespace mcg {

// The three local transvection blocks.
Matrix<Int> twist_V();     // [[1,1],[0,1]]
Matrix<Int> twist_Vhat();  // [[1,0],[-1,1]]
Matrix<Int> twist_W();     // 4x4 block of a transvection along a difference class

// Embedded copies inside GL(m, Z), indices 1-based:
//   std_A(i,m) = diag(I_{2i-2}, V,    I_{m-2i}),     2 <= 2i <= m
//   std_B(i,m) = diag(I_{2i-2}, Vhat, I_{m-2i}),     2 <= 2i <= m
//   std_C(j,m) = diag(I_{2j-2}, W,    I_{m-2-2j}),   2 <= 2j <= m-2
Matrix<Int> std_A(int i, int m);
Matrix<Int> std_B(int i, int m);
Matrix<Int> std_C(int j, int m);

// The standard symplectic form [[0, I],[-I, 0]] on m coordinates, m even.
Matrix<Int> omega(int m);

// Elementary matrix with a single 1 in row i, column j (1-based).
Matrix<Int> elem_E(int n, int i, int j);

}  // namespace mcg
