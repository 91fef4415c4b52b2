#pragma once

#include <optional>
#include <vector>

#include "qres/matrix.hpp"
#include "qres/poly.hpp"

namespace qres {

long rat_rank(const RatMatrix& m);

struct KernelRank {
    long rank = 0;
    std::vector<std::vector<Rat>> kernel;  // basis vectors of the right kernel
};

// rank + kernel dimension == cols; m * v == 0 for every basis vector v
KernelRank rat_kernel_rank(const RatMatrix& m);

// one solution of m * x = b, if any
std::optional<std::vector<Rat>> rat_solve(const RatMatrix& m, const std::vector<Rat>& b);

// solve m * x = b for every column of b at once; throws if any is inconsistent
RatMatrix rat_solve_columns(const RatMatrix& m, const RatMatrix& b);

RatMatrix rat_inverse(const RatMatrix& m);

// Columns of k span a subspace with m * span(k) <= span(k); returns the matrix
// of the restricted map in the basis k.
RatMatrix restricted_action(const RatMatrix& m, const RatMatrix& k);

struct QuotientActionResult {
    RatMatrix action;                 // induced map on V / colspan(w)
    std::vector<long> complement;     // indices of standard basis vectors completing colspan(w)
};

// Induced action of m on V / colspan(w); m must preserve colspan(w).
QuotientActionResult quotient_action(const RatMatrix& m, const RatMatrix& w);

// Exact characteristic polynomial det(t I - m) via Hessenberg reduction.
Poly charpoly_exact(const RatMatrix& m);

}  // namespace qres
