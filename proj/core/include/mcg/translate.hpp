#pragma once

#include <mcg/word.hpp>

namespace mcg {

// Letter-wise inclusion of the half-surface chain into N_{g,n}:
// a_i -> e_i, b_i -> d_{2i}, g_j -> d_{2j+1}. The input word must live on
// the HalfSurface context; the result lives on the Nonorientable one with
// the same genus and boundary.
Word iota_translate(const Word& w);

// Lift of a twist generator of N_g through the orientable double cover:
// e_i -> a_i a_{g-i}^-1, d_{2i} -> b_i b_{g-i}^-1, d_{2j+1} -> g_j g_{g-1-j}^-1
// (d_1 is handled as e_1). Crosscap slides have no printed lift; they throw.
Word theta_word(Generator gen, int g);

// s = d_1 d_2 ... d_{g-1}, the finite-order product of Section 6.
Word special_word(char name, int g);

}  // namespace mcg
