#include "qres/poly.hpp"

#include <map>
#include <mutex>

namespace qres {

Poly Poly::operator+(const Poly& q) const {
    Poly out;
    out.c_.resize(std::max(c_.size(), q.c_.size()), Rat(0));
    for (size_t i = 0; i < out.c_.size(); ++i) {
        if (i < c_.size()) out.c_[i] += c_[i];
        if (i < q.c_.size()) out.c_[i] += q.c_[i];
    }
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& q) const {
    Poly out;
    out.c_.resize(std::max(c_.size(), q.c_.size()), Rat(0));
    for (size_t i = 0; i < out.c_.size(); ++i) {
        if (i < c_.size()) out.c_[i] += c_[i];
        if (i < q.c_.size()) out.c_[i] -= q.c_[i];
    }
    out.trim();
    return out;
}

Poly Poly::operator*(const Poly& q) const {
    if (is_zero() || q.is_zero()) return Poly();
    Poly out;
    out.c_.assign(c_.size() + q.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < q.c_.size(); ++j) out.c_[i + j] += c_[i] * q.c_[j];
    }
    out.trim();
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& q) const {
    if (q.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
    Poly rem = *this, quot;
    const long dq = q.degree();
    const Rat lead = q.c_.back();
    while (!rem.is_zero() && rem.degree() >= dq) {
        long k = rem.degree() - dq;
        Rat f = rem.c_.back() / lead;
        quot.set(k, quot.coeff(k) + f);
        for (long i = 0; i <= dq; ++i)
            rem.c_[static_cast<size_t>(k + i)] -= f * q.c_[static_cast<size_t>(i)];
        rem.trim();
    }
    return {quot, rem};
}

Poly Poly::divexact(const Poly& q) const {
    auto [quot, rem] = divmod(q);
    if (!rem.is_zero()) throw std::domain_error("Poly::divexact: nonzero remainder");
    return quot;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool Poly::integral() const {
    for (const auto& c : c_)
        if (c.get_den() != 1) return false;
    return true;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (long k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rat a = abs(c);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = a == 1 && k > 0;
        if (!unit) s += a.get_str();
        if (k > 0) {
            if (!unit) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

namespace {

const Poly& cyclotomic_rec(long long d, std::map<long long, Poly>& cache) {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    Poly f = Poly::tm1(d);
    for (long long m : divisors(d))
        if (m != d) f = f.divexact(cyclotomic_rec(m, cache));
    return cache.emplace(d, std::move(f)).first->second;
}

}  // namespace

const Poly& cyclotomic_poly(long long d) {
    if (d <= 0) throw std::domain_error("cyclotomic_poly: need d > 0");
    static std::map<long long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_rec(d, cache);
}

}  // namespace qres
