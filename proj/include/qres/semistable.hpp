#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qres/strata.hpp"

namespace qres {

// Cells of the dual complex come in deck orbit families: "copies" cells over
// one base stratum (or one point of it), cyclically permuted by the deck
// generator. Copy s of a cell attaches to copy (s mod copies) of each face.
struct CellFamily {
    int dim = 0;
    std::vector<long> components;  // base component id set, sorted
    std::string label;
    long long copies = 1;
    bool compact = true;
    bool in_dplus = true;          // no strict component involved
    std::optional<Int> genus;      // curve vertices
    struct Face {
        long family;
        int sign;
    };
    std::vector<Face> faces;       // for dim >= 1
};

struct SemistableComplex {
    int n = 1;
    Int e = 1;  // covering exponent; deck^e = identity
    std::vector<CellFamily> families;

    std::vector<long> families_of_dim(int d) const;
    long long cell_count(int d, bool dplus_only) const;
};

// lcm of all component multiplicities
Int exponent(const StratifiedDivisor& sd);

// number of connected components of the cover of E_i: gcd of m(S) over the closure
Int component_count(const StratifiedDivisor& sd, long id);

struct ComponentEuler {
    Int components;            // c_i
    Int chi;                   // Euler characteristic of one connected component
    std::optional<Int> genus;  // curve case, compact components
};

ComponentEuler component_euler(const StratifiedDivisor& sd, long id);

struct RiemannHurwitzCheck {
    bool ok = false;
    Int cover_chi;     // N * chi(base) - sum (N - fiber)
    Int stratum_chi;   // c_i times the per-component Euler characteristic
    std::string detail;
};

// curve case: compare the branched-covering Euler characteristic with the
// stratum-sum formula
RiemannHurwitzCheck riemann_hurwitz_check(const StratifiedDivisor& sd, long id);

SemistableComplex build_dual_complex(const StratifiedDivisor& sd);

std::string complex_to_dot(const SemistableComplex& k);

// level-B input: the complex given directly, bypassing the divisor model
SemistableComplex complex_from_json(const std::string& text);
SemistableComplex load_complex(const std::string& path);

// dual complex of the semistable reduction of prod_i (x^{p_i} + y^{q_i}):
// a chain of branch divisors with gcd(p_1+..+p_i, q_{i+1}+..+q_k) parallel
// edges at junction i
SemistableComplex gen_chain_complex(const std::vector<std::pair<long, long>>& pq);

}  // namespace qres
