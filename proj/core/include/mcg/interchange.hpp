#pragma once

#include <string>
#include <variant>

#include <mcg/matrix.hpp>

namespace mcg {

// Universal carrier for matrices crossing the tool boundary.
using ExactMatrix =
    std::variant<Matrix<Int>, Matrix<Rat>, Matrix<GF2>, Matrix<Poly>>;

Ring ring_of(const ExactMatrix& m);
int rows_of(const ExactMatrix& m);
int cols_of(const ExactMatrix& m);
std::string plain_str(const ExactMatrix& m);

// Canonical JSON document {ring, rows, cols, entries}; entries are canonical
// strings ("-5", "7/3", "0", "x^2 - 1/2*y"). Round-trips byte-identically.
std::string to_interchange(const ExactMatrix& m);
ExactMatrix from_interchange(const std::string& text);

}  // namespace mcg
