#pragma once

// Exact integer linear algebra over lattices: Smith and Hermite normal forms,
// integral kernels, primitive vectors and denominators.

#include "horocox/numeric.hpp"

#include <vector>

namespace horocox {

// U * input * V = S with U, V unimodular and S diagonal, diagonal entries
// nonnegative and forming a divisibility chain.
struct SNFResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

// U * input = H with U unimodular, H in row echelon form with positive pivots
// and entries above each pivot reduced into [0, pivot).
struct HNFResult {
  IntMatrix U;
  IntMatrix H;
  int rank = 0;
};

SNFResult smith_normal_form(const IntMatrix& m);

HNFResult row_hermite_normal_form(const IntMatrix& m);

// Basis of {v in Z^cols : m v = 0}, canonicalized through a second Hermite
// pass so the output is independent of elimination order.
std::vector<LatticeVector> integer_kernel_basis(const IntMatrix& m);

// gcd of the entries, always nonnegative; zero only for the zero vector.
Integer content(const LatticeVector& v);

// Smallest d > 0 such that d*v is a lattice vector.
Integer mu(const RationalVector& v);

// The unique lattice vector with coprime coordinates on the ray spanned by v.
LatticeVector primitive_generator(const RationalVector& v);
LatticeVector primitive_generator(const LatticeVector& v);

// Exact determinant (Bareiss); the matrix must be square.
Integer determinant(const IntMatrix& m);

}  // namespace horocox
