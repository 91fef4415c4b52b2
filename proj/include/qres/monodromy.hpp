#pragma once

#include <map>
#include <vector>

#include "qres/cyclo.hpp"
#include "qres/linalg.hpp"
#include "qres/semistable.hpp"

namespace qres {

// Characteristic polynomial of the monodromy assembled from the strata
// supported on a single exceptional component:
//   (t-1)^{(-1)^{n+1}} * prod_S (t^{m(S)} - 1)^{(-1)^n chi(S)}
CycloProduct acampo_charpoly(const StratifiedDivisor& sd);

// prod over orbits (t^{|orbit|} - 1) for a permutation given by images
CycloProduct perm_charpoly(const std::vector<long>& perm);

enum class ComplexPart { DPlus, D };
enum class CohomologyMode { Exact, Vanishing };

struct CohomologyAction {
    std::vector<long> dims;           // H^0 .. H^n
    std::vector<CycloProduct> delta;  // deck characteristic polynomial on each
};

// Deck action on the cohomology of the dual complex. Exact mode restricts the
// permutation action to kernels modulo images; vanishing mode (n = 2 only)
// uses H^1 = 0 and the alternating product over the cochain level.
CohomologyAction complex_cohomology_action(const SemistableComplex& k, ComplexPart part,
                                           CohomologyMode mode = CohomologyMode::Exact);

struct CoverData {
    Int chi;            // total Euler characteristic of the cover
    Int genus;          // genus of one connected component
    CycloProduct h1;    // deck characteristic polynomial on H^1 of the cover
};

// Cyclic branched cover of a curve: sheets, fiber counts over the branch
// points, Euler characteristic of the base, number of cover components.
// H^1 data comes from Lefschetz numbers of the deck powers.
CoverData cyclic_cover_curve(const Int& sheets, const std::vector<Int>& branch_fibers,
                             long base_chi, const Int& components = Int(1));

struct WeightFiltration {
    std::map<long, long> graded;  // level -> dim gr_l
    std::map<long, long> w_dims;  // level -> dim W_l
    std::map<long, long> jordan;  // block size -> count
};

// Weight filtration of a nilpotent endomorphism with central index k:
// J_l = rank N^{l-1} - 2 rank N^l + rank N^{l+1}.
WeightFiltration weight_filtration(const RatMatrix& nilpotent, long central_index);

struct JordanSpectrum {
    // (eigenvalue order d, block size l) -> count
    std::map<std::pair<long long, long>, long long> blocks;
    long long total_dim() const;
    std::string str() const;
};

struct GradedCharData {
    std::map<long, CycloProduct> delta_l;  // level l -> Delta_l
};

// Split weight-graded characteristic polynomials into the eigenvalue-1 part
// (central index n+1) and the rest (central index n) and lay them out by level.
GradedCharData graded_from_weights(int n, const std::map<long, CycloProduct>& delta_by_weight);

struct JordanBlocks {
    std::map<long, CycloProduct> size_poly;  // l -> Delta_{l-1} / Delta_{l+1}
    JordanSpectrum spectrum;
};

JordanBlocks jordan_from_graded(const GradedCharData& g);

// Jordan spectrum of a matrix of finite order via ranks of powers of Phi_d(M).
JordanSpectrum jordan_blocks_matrix(const RatMatrix& m, long long e);

}  // namespace qres
