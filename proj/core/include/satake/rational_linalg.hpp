#pragma once

#include "satake/rational.hpp"

#include <cstddef>

namespace satake {

// Exact dense linear algebra over the rationals, plus the integer column
// Hermite normal form used to canonicalize lattice bases.  Sizes here are
// bounded by the rank of a root system, so O(n^3) Gaussian elimination with
// full pivoting on exact rationals is entirely adequate.

RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_vec(const RatMat& a, const RatVec& v);
RatMat transpose(const RatMat& a);
RatMat identity_matrix(std::size_t n);

// Solves a x = b for square nonsingular a; throws std::domain_error otherwise.
RatVec solve_linear(const RatMat& a, const RatVec& b);

// Inverse of a square nonsingular matrix; throws std::domain_error otherwise.
RatMat invert(const RatMat& a);

// Basis of the kernel of a (not necessarily square), one vector per column
// of the result's rows; returns an empty vector for trivial kernel.
std::vector<RatVec> kernel_basis(const RatMat& a);

// Least common multiple of all denominators appearing in v.
Int lcm_of_denominators(const RatVec& v);
Int lcm_of_denominators(const RatMat& a);

// Column-style Hermite normal form of the lattice spanned by the columns of
// an integer matrix.  The columns must span a full-rank sublattice of Z^n
// (throws std::domain_error otherwise); the result is the unique n×n lower
// triangular basis with h[i][i] > 0 and 0 <= h[i][j] < h[i][i] for j < i,
// so equal lattices yield equal matrices.
IntMat column_hnf(const IntMat& a);

}  // namespace satake
