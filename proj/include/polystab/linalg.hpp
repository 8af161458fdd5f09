#pragma once

#include <optional>

#include "polystab/ints.hpp"

namespace polystab {

// Exact integer/rational linear algebra on small dense matrices (ambient
// dimensions are capped around 10-12, entries are arbitrary precision).

// Fraction-free determinant of a square matrix.
Int det(IntMat a);

// Rank over Q.
int rank(IntMat a);

// Row-style Hermite normal form of the lattice spanned by the rows:
// echelon with strictly increasing pivot columns, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows are dropped, so the
// result is a canonical basis of the row lattice.
IntMat hnf_row_basis(IntMat rows);

// Basis of { x in Z^dim : A x = 0 }, returned in HNF. dim is passed
// explicitly so a row-less A still has a well-defined ambient dimension.
IntMat integer_kernel(const IntMat& a, std::size_t dim);

// Solves y * B = target over Z for B in row HNF. Returns the coefficient
// vector, or nullopt when target is outside the row lattice.
std::optional<IntVec> solve_in_row_lattice(const IntMat& hnf_basis, const IntVec& target);

// Solves A x = b exactly over Q for square nonsingular A (throws otherwise).
std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace polystab
