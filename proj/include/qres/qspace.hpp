#pragma once

#include <array>
#include <string>
#include <vector>

#include "qres/matrix.hpp"
#include "qres/snf.hpp"

namespace qres {

// Cyclic quotient space X(d; A): the subgroup of (Q/Z)^{n+1} generated by the
// rows a_i / d_i acts diagonally on C^{n+1}.
struct QuotientType {
    std::vector<Int> d;  // one order per row
    IntMatrix a;         // (r+1) x (n+1) weight matrix

    QuotientType() {}
    QuotientType(std::vector<Int> orders, IntMatrix weights);

    long nrows() const { return static_cast<long>(d.size()); }
    long ncoords() const { return a.cols(); }

    static QuotientType trivial(long ncoords);
    static QuotientType cyclic(const Int& order, const std::vector<Int>& weights);

    std::string str() const;
};

QuotientType parse_type(const std::string& s);

struct MonomialGerm {
    std::vector<Int> exponents;  // one per coordinate, at least one positive
};

// The image group in (Q/Z)^n, presentation independent. Internally the lattice
// spanned by the scaled generator rows together with N Z^n, N = lcm of orders.
class QuotientGroup {
public:
    explicit QuotientGroup(const QuotientType& t);

    long ncoords() const { return n_; }
    const Int& modulus() const { return mod_; }
    const IntMatrix& basis() const { return basis_; }

    Int order() const;
    // membership of x / modulus()
    bool contains(const std::vector<Int>& x) const;
    bool same_group(const QuotientGroup& other) const;

    // order of the subgroup of elements supported on coordinate j only
    Int reflection_order(long j) const;
    QuotientGroup scale_coordinate(long j, const Int& k) const;

    // all elements as integer vectors scaled by modulus(); throws above cap
    std::vector<std::vector<Int>> elements(size_t cap = 100000) const;

    // canonical presentation: invariant-factor generators
    QuotientType present() const;

private:
    QuotientGroup(long n, Int mod, IntMatrix basis);

    long n_;
    Int mod_;
    IntMatrix basis_;  // Hermite basis of the lattice
};

bool types_equal(const QuotientType& s, const QuotientType& t);
Int group_order(const QuotientType& t);

struct NormalizeResult {
    QuotientType type;
    std::vector<Int> rescale;  // coordinate powers x_j -> x_j^{k_j}
    Int removed_order;         // product of the removed reflection subgroup orders
};

NormalizeResult normalize(const QuotientType& t);
bool is_normalized(const QuotientType& t);

// d_i | sum_j a_ij m_j for every row i
bool is_invariant(const QuotientType& t, const MonomialGerm& m);

// gcd(m_0..m_k, |sum_j a_0j m_j| / d_0, ..., |sum_j a_rj m_j| / d_r);
// for a one-variable germ the lcm form is computed too and asserted equal
Int multiplicity(const QuotientType& t, const MonomialGerm& m);

struct Chart {
    QuotientType raw;         // as given by the chart formula
    QuotientType rewritten;   // after the Bezout row reduction (3d quotient case)
    QuotientType normalized;
    std::vector<Int> rescale;
    // old_i = prod_j new_j^{S(i,j)} where the exceptional coordinate is the
    // e-th root of the chart coordinate (e = exceptional_root)
    IntMatrix substitution;
    long exceptional_coordinate = 0;
    Int exceptional_root = 1;
    std::vector<Int> omega;
};

// total-transform exponents of a germ on a blow-up chart; the exceptional
// exponent is divided by the chart root (exact for invariant germs on
// normalized types)
MonomialGerm pullback_germ(const Chart& chart, const MonomialGerm& germ);

struct AxisLine {
    long axis = 0;             // coordinate that vanishes on the line
    Int isotropy;              // cyclic order of the transverse type
    std::vector<Int> weights;  // transverse weights (axis coordinate, exceptional)
};

struct ExceptionalDescriptor {
    std::string kind;          // "P1w", "P2w", "P2w_quotient"
    std::vector<Int> omega;
    QuotientType quotient_base;              // for "P2w_quotient"
    std::vector<QuotientType> covering;      // chart origin types (normalized)
    std::vector<AxisLine> axes;              // 3d only
};

struct Blowup2Result {
    Chart chart1, chart2;
    ExceptionalDescriptor exceptional;
};

struct Blowup3Result {
    std::array<Chart, 3> charts;
    ExceptionalDescriptor exceptional;
};

Blowup2Result blowup_2d(const QuotientType& t, const Int& p, const Int& q);
Blowup3Result blowup_3d_smooth(const Int& p, const Int& q, const Int& r);
Blowup3Result blowup_3d_quotient(const QuotientType& t, const Int& p, const Int& q, const Int& r);

struct SimplifyWp2Result {
    std::array<Int, 3> weights;
    std::array<Int, 3> powers;
};

SimplifyWp2Result simplify_wp2(const Int& p, const Int& q, const Int& r);

}  // namespace qres
