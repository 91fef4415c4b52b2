#pragma once

#include "qres/matrix.hpp"

namespace qres {

struct SmithResult {
    IntMatrix d;  // diagonal, d(0,0) | d(1,1) | ... >= 0
    IntMatrix u;  // unimodular row transform
    IntMatrix v;  // unimodular column transform; u * m * v == d
};

SmithResult smith_normal_form(const IntMatrix& m);

// Row-span Hermite form of a full-column-rank lattice: unique upper-triangular
// n x n basis with positive pivots and entries above a pivot reduced into
// [0, pivot). Input rows must span a rank-n sublattice of Z^n.
IntMatrix hermite_basis(const IntMatrix& rows);

// Fraction-free determinant (Bareiss).
Int bareiss_det(const IntMatrix& m);

// Inverse of a unimodular integer matrix (det = +-1).
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace qres
