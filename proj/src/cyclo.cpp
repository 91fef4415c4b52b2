#include "qres/cyclo.hpp"

#include <set>

namespace qres {

void CycloProduct::add(long long m, long long e) {
    if (m <= 0) throw std::domain_error("CycloProduct: factor index must be positive");
    if (e == 0) return;
    auto it = f_.find(m);
    if (it == f_.end()) {
        f_.emplace(m, e);
    } else {
        it->second += e;
        if (it->second == 0) f_.erase(it);
    }
}

CycloProduct CycloProduct::tm1(long long m, long long e) {
    CycloProduct p;
    p.add(m, e);
    return p;
}

CycloProduct CycloProduct::from_phi_exponents(const std::map<long long, long long>& c) {
    // e_m = sum over multiples d of m present in c of mu(d/m) * c_d
    std::set<long long> support;
    for (const auto& [d, cd] : c)
        if (cd != 0)
            for (long long m : divisors(d)) support.insert(m);
    CycloProduct out;
    for (long long m : support) {
        long long e = 0;
        for (const auto& [d, cd] : c)
            if (cd != 0 && d % m == 0) e += mobius(d / m) * cd;
        out.add(m, e);
    }
    return out;
}

CycloProduct CycloProduct::operator*(const CycloProduct& rhs) const {
    CycloProduct out = *this;
    for (const auto& [m, e] : rhs.f_) out.add(m, e);
    return out;
}

CycloProduct CycloProduct::operator/(const CycloProduct& rhs) const {
    CycloProduct out = *this;
    for (const auto& [m, e] : rhs.f_) out.add(m, -e);
    return out;
}

CycloProduct CycloProduct::pow(long long k) const {
    CycloProduct out;
    if (k == 0) return out;
    for (const auto& [m, e] : f_) out.add(m, e * k);
    return out;
}

CycloProduct CycloProduct::inflate(long long k) const {
    if (k <= 0) throw std::domain_error("CycloProduct::inflate: need k > 0");
    CycloProduct out;
    for (const auto& [m, e] : f_) out.add(m * k, e);
    return out;
}

long long CycloProduct::degree() const {
    long long deg = 0;
    for (const auto& [m, e] : f_) deg += m * e;
    return deg;
}

std::map<long long, long long> CycloProduct::canonical() const {
    std::set<long long> ds;
    for (const auto& [m, e] : f_)
        for (long long d : divisors(m)) ds.insert(d);
    std::map<long long, long long> c;
    for (long long d : ds) {
        long long cd = 0;
        for (const auto& [m, e] : f_)
            if (m % d == 0) cd += e;
        if (cd != 0) c.emplace(d, cd);
    }
    return c;
}

bool CycloProduct::is_polynomial() const {
    for (const auto& [d, cd] : canonical())
        if (cd < 0) return false;
    return true;
}

long long CycloProduct::order_at_one() const {
    long long c1 = 0;
    for (const auto& [m, e] : f_) c1 += e;
    return c1;
}

Poly CycloProduct::expand() const {
    auto c = canonical();
    Poly num(Rat(1));
    Poly den(Rat(1));
    for (const auto& [d, cd] : c) {
        const Poly& phi = cyclotomic_poly(d);
        for (long long i = 0; i < (cd > 0 ? cd : -cd); ++i) {
            if (cd > 0)
                num = num * phi;
            else
                den = den * phi;
        }
    }
    return num.divexact(den);
}

std::string CycloProduct::str() const {
    if (f_.empty()) return "1";
    std::string num, den;
    for (const auto& [m, e] : f_) {
        std::string base = (m == 1) ? "(t-1)" : "(t^" + std::to_string(m) + "-1)";
        long long a = e > 0 ? e : -e;
        std::string piece = base;
        if (a != 1) piece += "^" + std::to_string(a);
        (e > 0 ? num : den) += piece;
    }
    if (num.empty()) num = "1";
    return den.empty() ? num : num + " / " + den;
}

std::string CycloProduct::str_canonical() const {
    auto c = canonical();
    if (c.empty()) return "1";
    std::string s;
    for (const auto& [d, cd] : c) {
        if (!s.empty()) s += " ";
        s += "Phi_" + std::to_string(d);
        if (cd != 1) s += "^" + std::to_string(cd);
    }
    return s;
}

std::string SymbolicCyclo::str() const {
    std::string s;
    if (sym_power != 0) {
        s = sym_name;
        if (sym_power != 1) s += "^" + std::to_string(sym_power);
        s += " * ";
    }
    return s + known.str();
}

CycloProduct cyclo_factor(const Poly& p, long long e) {
    if (p.is_zero()) throw std::domain_error("cyclo_factor: zero polynomial");
    if (e <= 0) throw std::domain_error("cyclo_factor: need e > 0");
    Poly rem = p;
    std::map<long long, long long> c;
    for (long long d : divisors(e)) {
        if (euler_phi(d) > rem.degree()) continue;  // before building Phi_d
        const Poly& phi = cyclotomic_poly(d);
        while (rem.degree() >= phi.degree()) {
            auto [quot, r] = rem.divmod(phi);
            if (!r.is_zero()) break;
            rem = quot;
            ++c[d];
        }
    }
    if (rem.degree() != 0)
        throw std::domain_error("cyclo_factor: residual non-cyclotomic factor " + rem.str());
    return CycloProduct::from_phi_exponents(c);
}

Poly charpoly_from_traces(const std::vector<Rat>& traces, long dim, bool assert_integral) {
    if (dim < 0 || static_cast<long>(traces.size()) < dim)
        throw std::invalid_argument("charpoly_from_traces: need at least dim traces");
    std::vector<Rat> e(static_cast<size_t>(dim) + 1, Rat(0));
    e[0] = 1;
    for (long k = 1; k <= dim; ++k) {
        Rat acc(0);
        for (long i = 1; i <= k; ++i) {
            Rat term = e[static_cast<size_t>(k - i)] * traces[static_cast<size_t>(i - 1)];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        e[static_cast<size_t>(k)] = acc / k;
        if (assert_integral && e[static_cast<size_t>(k)].get_den() != 1)
            throw std::domain_error("charpoly_from_traces: non-integral symmetric function at k=" +
                                    std::to_string(k));
    }
    Poly out;
    for (long k = 0; k <= dim; ++k) {
        Rat ck = e[static_cast<size_t>(k)];
        if (k % 2) ck = -ck;
        if (ck != 0) out.set(dim - k, ck);
    }
    return out;
}

}  // namespace qres
