#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qres/monodromy.hpp"

namespace qres {

struct E1Entry {
    int k_layer = 0;      // which summand the term lives in
    long weight = 0;      // first index p; pure Hodge structure of this weight
    long q = 0;           // second index
    std::string space;    // label such as "H^1(D+[0])"
    long dim = -1;        // -1 when not determined by the input
    std::optional<CycloProduct> delta;
};

struct E1Arrow {
    std::string kind;  // "gysin" or "mayer-vietoris"
    size_t from = 0, to = 0;
};

struct E1Page {
    int n = 1;
    std::vector<E1Entry> entries;
    std::vector<E1Arrow> arrows;

    const E1Entry* find(const std::string& space) const;
    std::string str() const;
};

// Betti / characteristic polynomial data for a vertex surface of the dual
// complex (n = 2); the deck polynomial on H^1 may be symbolic.
struct SurfaceData {
    long b1 = 0;
    long b2 = -1;  // -1 = not supplied
    SymbolicCyclo delta_h1;
};

using SurfaceBetti = std::map<long, SurfaceData>;  // component id -> data

struct WeightPiece {
    bool known_dim = true;
    long dim = 0;
    SymbolicCyclo delta;
};

struct MHSReport {
    int n = 1;
    CycloProduct total;  // characteristic polynomial on H^n(F)
    std::map<long, WeightPiece> weights;
    std::optional<Int> hodge01;  // curve case: h^{0,1} = h^{1,0}
    std::map<long, SymbolicCyclo> block_polys;  // Jordan blocks of each size
    JordanSpectrum spectrum;
    std::vector<std::string> notes;

    std::string str() const;
    std::string to_json() const;
};

E1Page e1_curve(const SemistableComplex& k);

MHSReport mhs_curve(const StratifiedDivisor& sd);

// exact sequence 0 -> v_0 -> v_1 -> ... -> v_k -> 0 with exactly one unknown
Int column_exact_solver(const std::vector<std::optional<Int>>& dims);

E1Page e1_surface(const SemistableComplex& k, const SurfaceBetti& betti);

// derives the curve-cell rows from the covering data of the double curves
E1Page e1_surface(const StratifiedDivisor& sd, const SurfaceBetti& betti);

// covering data of one double-curve of the reduced divisor
struct EdgeCover {
    std::vector<long> pair;
    Int sheets;
    std::vector<Int> fibers;
    Int components;
    long long base_chi = 2;
    CoverData cover;
};

// require_sphere rejects double curves whose closure is not a 2-sphere; with
// it off the closure Euler characteristic is used as the base
std::vector<EdgeCover> edge_covers(const StratifiedDivisor& sd, bool dplus_only,
                                   bool require_sphere = true);

struct SurfaceAux {
    std::map<long, SymbolicCyclo> h1;  // deck polynomial on H^1 of each vertex surface cover
};

// weights 0, 1 and 4 of the mixed Hodge structure on H^2, with the Jordan
// block summaries they control
MHSReport mhs_surface_partial(const StratifiedDivisor& sd, const SurfaceAux& aux);

}  // namespace qres
