#pragma once

#include <optional>
#include <vector>

#include "abx/rational.hpp"

namespace abx {

using Matrix = std::vector<Point>; // row-major
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

struct Rref {
    Matrix rows;             // nonzero rows only, pivots normalized to 1
    std::vector<int> pivots; // pivot column of each row
};

Rref rref(Matrix m, std::size_t cols);
int rank(const Matrix& m);
// Basis of {x : m x = 0}, each vector primitive integral; one vector per free column.
std::vector<Point> nullspace(const Matrix& m, std::size_t cols);
// The unique solution of a x = b, or nothing when singular or inconsistent.
std::optional<Point> solve(const Matrix& a, const Point& b);
Rational determinant(Matrix m);
// Fraction-free Bareiss elimination; the input is consumed.
Integer determinant(IntMatrix m);
Matrix transpose(const Matrix& m);

} // namespace abx
