#pragma once

#include <string>
#include <vector>

#include "qres/numeric.hpp"

namespace qres {

// Dense univariate polynomial over Q, coefficient c_[i] of t^i.
class Poly {
public:
    Poly() {}
    explicit Poly(const Rat& c) { set(0, c); }
    explicit Poly(const std::vector<Rat>& coeffs) : c_(coeffs) { trim(); }

    static Poly t_power(long k, const Rat& c = Rat(1)) {
        Poly p;
        p.set(k, c);
        return p;
    }
    // t^m - 1
    static Poly tm1(long m) {
        Poly p = t_power(m);
        p.set(0, Rat(-1));
        return p;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(long k) const {
        return (k >= 0 && k < static_cast<long>(c_.size())) ? c_[static_cast<size_t>(k)] : Rat(0);
    }
    void set(long k, const Rat& v) {
        if (k < 0) throw std::invalid_argument("Poly: negative exponent");
        if (k >= static_cast<long>(c_.size())) c_.resize(static_cast<size_t>(k) + 1, Rat(0));
        c_[static_cast<size_t>(k)] = v;
        trim();
    }

    Poly operator+(const Poly& q) const;
    Poly operator-(const Poly& q) const;
    Poly operator*(const Poly& q) const;
    bool operator==(const Poly& q) const { return c_ == q.c_; }
    bool operator!=(const Poly& q) const { return !(*this == q); }

    // quotient and remainder; divisor must be nonzero
    std::pair<Poly, Poly> divmod(const Poly& q) const;
    // exact division, throws if remainder is nonzero
    Poly divexact(const Poly& q) const;

    Rat eval(const Rat& x) const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool integral() const;

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// d-th cyclotomic polynomial (memoized)
const Poly& cyclotomic_poly(long long d);

}  // namespace qres
