#pragma once

#include <map>
#include <string>
#include <vector>

#include "qres/poly.hpp"

namespace qres {

// Formal product  prod_m (t^m - 1)^{e_m}  with integer exponents, sparse.
// Canonical form: exponent of the d-th cyclotomic polynomial is
// c_d = sum over m divisible by d of e_m.
class CycloProduct {
public:
    CycloProduct() {}
    // (t^m - 1)^e
    static CycloProduct tm1(long long m, long long e = 1);
    static CycloProduct one() { return CycloProduct(); }
    // from a map of cyclotomic exponents d -> c_d (Moebius inversion)
    static CycloProduct from_phi_exponents(const std::map<long long, long long>& c);

    CycloProduct operator*(const CycloProduct& rhs) const;
    CycloProduct operator/(const CycloProduct& rhs) const;
    CycloProduct pow(long long k) const;
    // substitute t -> t^k
    CycloProduct inflate(long long k) const;

    const std::map<long long, long long>& factors() const { return f_; }
    long long degree() const;
    bool is_one() const { return f_.empty(); }

    std::map<long long, long long> canonical() const;
    bool is_polynomial() const;
    // multiplicity of the eigenvalue 1, i.e. the canonical exponent of Phi_1
    long long order_at_one() const;

    bool operator==(const CycloProduct& rhs) const { return canonical() == rhs.canonical(); }
    bool operator!=(const CycloProduct& rhs) const { return !(*this == rhs); }

    // expand to a dense polynomial; requires an honest polynomial
    Poly expand() const;

    // "(t^6-1)(t-1) / (t^2-1)(t^3-1)" style
    std::string str() const;
    // "Phi_6" / "Phi_1^2 Phi_4" style from the canonical form
    std::string str_canonical() const;

private:
    void add(long long m, long long e);
    std::map<long long, long long> f_;
};

// Trial division of p by Phi_d over all d | e; throws std::domain_error if a
// non-cyclotomic factor remains.
CycloProduct cyclo_factor(const Poly& p, long long e);

// Monic polynomial of degree dim whose power sums match the given traces
// (Newton's identities). Needs traces.size() >= dim. With assert_integral the
// elementary symmetric functions must be integers.
Poly charpoly_from_traces(const std::vector<Rat>& traces, long dim, bool assert_integral = false);

// A cyclotomic product times an integer power of one opaque unit (used for
// factors that are known only symbolically).
struct SymbolicCyclo {
    CycloProduct known;
    long long sym_power = 0;
    std::string sym_name = "U";

    bool operator==(const SymbolicCyclo& rhs) const {
        return sym_power == rhs.sym_power && known == rhs.known;
    }
    std::string str() const;
};

}  // namespace qres
