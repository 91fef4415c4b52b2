#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qres {

using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = a*x + b*y
inline Int exgcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// representative of a mod m in [0, m)
inline Int pos_mod(const Int& a, const Int& m) {
    if (m == 0) return a;
    Int r;
    Int mm = abs(m);
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
    return r;
}

// smallest non-negative b with a*b == 1 (mod m); throws if gcd(a,m) != 1
inline Int mod_inverse(const Int& a, const Int& m) {
    if (m == 1) return 0;
    Int x, y;
    Int g = exgcd(pos_mod(a, m), m, x, y);
    if (g != 1) throw std::domain_error("mod_inverse: not invertible");
    return pos_mod(x, m);
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int divexact(const Int& a, const Int& d) {
    if (!divides(d, a)) throw std::domain_error("divexact: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("to_long: out of range");
    return a.get_si();
}

// mpz_class has no long long constructor
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

inline long long gcdll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline long long lcmll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcdll(a, b) * b;
}

inline std::vector<long long> divisors(long long n) {
    if (n <= 0) throw std::domain_error("divisors: need n > 0");
    std::vector<long long> lo, hi;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            lo.push_back(d);
            if (d != n / d) hi.push_back(n / d);
        }
    }
    for (auto it = hi.rbegin(); it != hi.rend(); ++it) lo.push_back(*it);
    return lo;
}

inline int mobius(long long n) {
    if (n <= 0) throw std::domain_error("mobius: need n > 0");
    int primes = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

inline long long euler_phi(long long n) {
    if (n <= 0) throw std::domain_error("euler_phi: need n > 0");
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace qres
