#include "qres/qspace.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "qres/linalg.hpp"

namespace qres {

QuotientType::QuotientType(std::vector<Int> orders, IntMatrix weights)
    : d(std::move(orders)), a(std::move(weights)) {
    if (static_cast<long>(d.size()) != a.rows())
        throw std::invalid_argument("QuotientType: one order per weight row required");
    for (const Int& di : d)
        if (di < 1) throw std::invalid_argument("QuotientType: orders must be positive");
}

QuotientType QuotientType::trivial(long ncoords) {
    return QuotientType({Int(1)}, IntMatrix(1, ncoords));
}

QuotientType QuotientType::cyclic(const Int& order, const std::vector<Int>& weights) {
    IntMatrix a(1, static_cast<long>(weights.size()));
    for (size_t j = 0; j < weights.size(); ++j) a(0, static_cast<long>(j)) = weights[j];
    return QuotientType({order}, a);
}

std::string QuotientType::str() const {
    std::string s = "(";
    for (long i = 0; i < nrows(); ++i) {
        if (i) s += ",";
        s += d[static_cast<size_t>(i)].get_str();
    }
    for (long i = 0; i < nrows(); ++i) {
        s += "; ";
        for (long j = 0; j < ncoords(); ++j) {
            if (j) s += ",";
            s += a(i, j).get_str();
        }
    }
    return s + ")";
}

QuotientType parse_type(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::vector<std::string> groups;
    std::string cur;
    for (char c : body) {
        if (c == ';') {
            groups.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    groups.push_back(cur);
    if (groups.size() < 2) throw std::invalid_argument("parse_type: expected \"(d,...; a,...; ...)\"");
    auto parse_list = [](const std::string& g) {
        std::vector<Int> out;
        std::string item;
        std::stringstream ss(g);
        while (std::getline(ss, item, ',')) {
            item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }),
                       item.end());
            if (item.empty()) continue;
            out.emplace_back(item);
        }
        return out;
    };
    std::vector<Int> d = parse_list(groups[0]);
    if (d.size() != groups.size() - 1)
        throw std::invalid_argument("parse_type: one weight row per order required");
    std::vector<std::vector<Int>> rows;
    size_t ncoords = 0;
    for (size_t i = 1; i < groups.size(); ++i) {
        rows.push_back(parse_list(groups[i]));
        if (i == 1) ncoords = rows.back().size();
        if (rows.back().size() != ncoords) throw std::invalid_argument("parse_type: ragged rows");
    }
    IntMatrix a(static_cast<long>(rows.size()), static_cast<long>(ncoords));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < ncoords; ++j) a(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
    return QuotientType(std::move(d), std::move(a));
}

// ---------------------------------------------------------------------------

QuotientGroup::QuotientGroup(long n, Int mod, IntMatrix basis)
    : n_(n), mod_(std::move(mod)), basis_(std::move(basis)) {}

QuotientGroup::QuotientGroup(const QuotientType& t) : n_(t.ncoords()) {
    mod_ = 1;
    for (const Int& di : t.d) mod_ = lcm(mod_, di);
    IntMatrix rows(t.nrows() + n_, n_);
    for (long i = 0; i < t.nrows(); ++i) {
        Int scale = divexact(mod_, t.d[static_cast<size_t>(i)]);
        for (long j = 0; j < n_; ++j) rows(i, j) = pos_mod(t.a(i, j) * scale, mod_);
    }
    for (long j = 0; j < n_; ++j) rows(t.nrows() + j, j) = mod_;
    basis_ = hermite_basis(rows);
}

Int QuotientGroup::order() const {
    Int idx(1);
    for (long i = 0; i < n_; ++i) idx *= basis_(i, i);
    Int nn(1);
    for (long i = 0; i < n_; ++i) nn *= mod_;
    return divexact(nn, idx);
}

bool QuotientGroup::contains(const std::vector<Int>& x) const {
    if (static_cast<long>(x.size()) != n_) throw std::invalid_argument("contains: wrong length");
    std::vector<Int> r = x;
    // back-substitution against the upper-triangular basis, column by column
    std::vector<Int> y(static_cast<size_t>(n_));
    for (long j = 0; j < n_; ++j) {
        Int rem = r[static_cast<size_t>(j)];
        if (!divides(basis_(j, j), rem)) return false;
        Int q = divexact(rem, basis_(j, j));
        y[static_cast<size_t>(j)] = q;
        for (long k = j; k < n_; ++k) r[static_cast<size_t>(k)] -= q * basis_(j, k);
    }
    for (long j = 0; j < n_; ++j)
        if (r[static_cast<size_t>(j)] != 0) return false;
    return true;
}

bool QuotientGroup::same_group(const QuotientGroup& other) const {
    if (n_ != other.n_) return false;
    Int common = lcm(mod_, other.mod_);
    Int s1 = divexact(common, mod_), s2 = divexact(common, other.mod_);
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j)
            if (basis_(i, j) * s1 != other.basis_(i, j) * s2) return false;
    return true;
}

Int QuotientGroup::reflection_order(long j) const {
    if (j < 0 || j >= n_) throw std::out_of_range("reflection_order: bad coordinate");
    if (n_ == 1) return order();
    IntMatrix rows(n_ + (n_ - 1), n_ - 1);
    for (long i = 0; i < n_; ++i) {
        long cc = 0;
        for (long c = 0; c < n_; ++c) {
            if (c == j) continue;
            rows(i, cc++) = basis_(i, c);
        }
    }
    for (long i = 0; i < n_ - 1; ++i) rows(n_ + i, i) = mod_;
    IntMatrix h = hermite_basis(rows);
    Int idx(1);
    for (long i = 0; i < n_ - 1; ++i) idx *= h(i, i);
    Int nn(1);
    for (long i = 0; i < n_ - 1; ++i) nn *= mod_;
    Int image_order = divexact(nn, idx);
    return divexact(order(), image_order);
}

QuotientGroup QuotientGroup::scale_coordinate(long j, const Int& k) const {
    IntMatrix rows(2 * n_, n_);
    for (long i = 0; i < n_; ++i)
        for (long c = 0; c < n_; ++c) rows(i, c) = (c == j) ? basis_(i, c) * k : basis_(i, c);
    for (long i = 0; i < n_; ++i) rows(n_ + i, i) = mod_;
    return QuotientGroup(n_, mod_, hermite_basis(rows));
}

std::vector<std::vector<Int>> QuotientGroup::elements(size_t cap) const {
    std::set<std::vector<Int>> seen;
    std::deque<std::vector<Int>> queue;
    std::vector<Int> zero(static_cast<size_t>(n_), Int(0));
    seen.insert(zero);
    queue.push_back(zero);
    std::vector<std::vector<Int>> gens;
    for (long i = 0; i < n_; ++i) {
        std::vector<Int> g(static_cast<size_t>(n_));
        for (long j = 0; j < n_; ++j) g[static_cast<size_t>(j)] = pos_mod(basis_(i, j), mod_);
        gens.push_back(std::move(g));
    }
    while (!queue.empty()) {
        std::vector<Int> cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<Int> nxt(static_cast<size_t>(n_));
            for (long j = 0; j < n_; ++j)
                nxt[static_cast<size_t>(j)] = pos_mod(cur[static_cast<size_t>(j)] + g[static_cast<size_t>(j)], mod_);
            if (seen.insert(nxt).second) {
                if (seen.size() > cap) throw std::length_error("QuotientGroup::elements: cap exceeded");
                queue.push_back(std::move(nxt));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

QuotientType QuotientGroup::present() const {
    if (order() == 1) return QuotientType::trivial(n_);
    RatMatrix binv = rat_inverse(to_rational(basis_));
    IntMatrix c(n_, n_);
    for (long i = 0; i < n_; ++i)
        for (long j = 0; j < n_; ++j) {
            Rat v = Rat(mod_) * binv(i, j);
            if (v.get_den() != 1) throw std::logic_error("present: relation matrix not integral");
            c(i, j) = v.get_num();
        }
    SmithResult snf = smith_normal_form(c);
    IntMatrix vinv = unimodular_inverse(snf.v);
    std::vector<Int> orders;
    std::vector<std::vector<Int>> rows;
    for (long i = 0; i < n_; ++i) {
        const Int& di = snf.d(i, i);
        if (di <= 1) continue;
        // generator: coefficient vector e_i V^{-1} against the lattice basis
        std::vector<Int> x(static_cast<size_t>(n_), Int(0));
        for (long j = 0; j < n_; ++j) {
            Int acc(0);
            for (long k = 0; k < n_; ++k) acc += vinv(i, k) * basis_(k, j);
            x[static_cast<size_t>(j)] = acc;
        }
        std::vector<Int> row(static_cast<size_t>(n_));
        for (long j = 0; j < n_; ++j) {
            Int num = x[static_cast<size_t>(j)] * di;
            if (!divides(mod_, num)) throw std::logic_error("present: generator order mismatch");
            row[static_cast<size_t>(j)] = pos_mod(divexact(num, mod_), di);
        }
        orders.push_back(di);
        rows.push_back(std::move(row));
    }
    IntMatrix a(static_cast<long>(rows.size()), n_);
    for (size_t i = 0; i < rows.size(); ++i)
        for (long j = 0; j < n_; ++j) a(static_cast<long>(i), j) = rows[i][static_cast<size_t>(j)];
    return QuotientType(std::move(orders), std::move(a));
}

bool types_equal(const QuotientType& s, const QuotientType& t) {
    return QuotientGroup(s).same_group(QuotientGroup(t));
}

Int group_order(const QuotientType& t) { return QuotientGroup(t).order(); }

NormalizeResult normalize(const QuotientType& t) {
    QuotientGroup g(t);
    const long n = t.ncoords();
    std::vector<Int> rescale(static_cast<size_t>(n), Int(1));
    Int removed(1);
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 4096) throw std::logic_error("normalize: no fixed point");
        changed = false;
        for (long j = 0; j < n; ++j) {
            Int k = g.reflection_order(j);
            if (k > 1) {
                g = g.scale_coordinate(j, k);
                rescale[static_cast<size_t>(j)] *= k;
                removed *= k;
                changed = true;
            }
        }
    }
    return NormalizeResult{g.present(), std::move(rescale), std::move(removed)};
}

bool is_normalized(const QuotientType& t) {
    QuotientGroup g(t);
    Int presented(1);
    for (const Int& di : t.d) presented *= di;
    if (g.order() != presented) return false;  // action not free on the torus
    for (long j = 0; j < t.ncoords(); ++j)
        if (g.reflection_order(j) > 1) return false;
    return true;
}

bool is_invariant(const QuotientType& t, const MonomialGerm& m) {
    if (static_cast<long>(m.exponents.size()) != t.ncoords())
        throw std::invalid_argument("is_invariant: wrong exponent count");
    for (long i = 0; i < t.nrows(); ++i) {
        Int sum(0);
        for (long j = 0; j < t.ncoords(); ++j) sum += t.a(i, j) * m.exponents[static_cast<size_t>(j)];
        if (!divides(t.d[static_cast<size_t>(i)], sum)) return false;
    }
    return true;
}

Int multiplicity(const QuotientType& t, const MonomialGerm& m) {
    if (!is_invariant(t, m)) throw std::domain_error("multiplicity: germ not invariant");
    Int g(0);
    long positive = 0, last_nonzero = -1;
    for (long j = 0; j < t.ncoords(); ++j) {
        const Int& e = m.exponents[static_cast<size_t>(j)];
        if (e < 0) throw std::domain_error("multiplicity: negative exponent");
        if (e > 0) {
            ++positive;
            last_nonzero = j;
        }
        g = gcd(g, e);
    }
    if (positive == 0) throw std::domain_error("multiplicity: zero germ");
    for (long i = 0; i < t.nrows(); ++i) {
        Int sum(0);
        for (long j = 0; j < t.ncoords(); ++j) sum += t.a(i, j) * m.exponents[static_cast<size_t>(j)];
        g = gcd(g, abs(divexact(sum, t.d[static_cast<size_t>(i)])));
    }
    if (positive == 1) {
        // one-variable germ x^m: cross-check m / lcm_i(d_i / gcd(d_i, a_i))
        Int l(1);
        for (long i = 0; i < t.nrows(); ++i) {
            const Int& di = t.d[static_cast<size_t>(i)];
            l = lcm(l, divexact(di, gcd(di, t.a(i, last_nonzero))));
        }
        Int alt = divexact(m.exponents[static_cast<size_t>(last_nonzero)], l);
        if (alt != g) throw std::logic_error("multiplicity: gcd and lcm forms disagree");
    }
    return g;
}

// ---------------------------------------------------------------------------

MonomialGerm pullback_germ(const Chart& chart, const MonomialGerm& germ) {
    const long n = chart.substitution.cols();
    if (static_cast<long>(germ.exponents.size()) != chart.substitution.rows())
        throw std::invalid_argument("pullback_germ: wrong exponent count");
    MonomialGerm out;
    out.exponents.assign(static_cast<size_t>(n), Int(0));
    for (long j = 0; j < n; ++j)
        for (long i = 0; i < chart.substitution.rows(); ++i)
            out.exponents[static_cast<size_t>(j)] +=
                chart.substitution(i, j) * germ.exponents[static_cast<size_t>(i)];
    Int& exc = out.exponents[static_cast<size_t>(chart.exceptional_coordinate)];
    if (!divides(chart.exceptional_root, exc))
        throw std::domain_error("pullback_germ: exceptional exponent not divisible by the chart root");
    exc = divexact(exc, chart.exceptional_root);
    return out;
}

namespace {

Chart make_chart(QuotientType raw, QuotientType rewritten, IntMatrix subst, long exc, Int root,
                 std::vector<Int> omega) {
    NormalizeResult nr = normalize(rewritten);
    Chart c;
    c.raw = std::move(raw);
    c.rewritten = std::move(rewritten);
    c.normalized = nr.type;
    c.rescale = nr.rescale;
    c.substitution = std::move(subst);
    c.exceptional_coordinate = exc;
    c.exceptional_root = std::move(root);
    c.omega = std::move(omega);
    return c;
}

// single-row form of a normalized 2d type
void cyclic_form_2d(const QuotientType& t, Int& d, Int& a, Int& b) {
    QuotientType p = QuotientGroup(t).present();
    if (p.nrows() > 1) throw std::invalid_argument("blowup_2d: type is not cyclic");
    if (p.nrows() == 0 || p.d[0] == 1) {
        d = 1;
        a = 0;
        b = 0;
        return;
    }
    d = p.d[0];
    a = p.a(0, 0);
    b = p.a(0, 1);
}

}  // namespace

Blowup2Result blowup_2d(const QuotientType& t, const Int& p, const Int& q) {
    if (t.ncoords() != 2) throw std::invalid_argument("blowup_2d: two coordinates required");
    if (!is_normalized(t)) throw std::invalid_argument("blowup_2d: type must be normalized");
    if (p < 1 || q < 1 || gcd(p, q) != 1)
        throw std::invalid_argument("blowup_2d: weights must be positive and coprime");

    Int d, a, b;
    cyclic_form_2d(t, d, a, b);
    Int e = gcd(d, p * b - q * a);
    Int beta = (d == 1) ? Int(0) : mod_inverse(a, d);
    Int mu = (d == 1) ? Int(0) : mod_inverse(b, d);

    QuotientType raw1 = QuotientType::cyclic(divexact(p * d, e), {Int(1), divexact(-q + beta * p * b, e)});
    QuotientType raw2 = QuotientType::cyclic(divexact(q * d, e), {divexact(-p + mu * q * a, e), Int(1)});

    Blowup2Result out;
    out.chart1 = make_chart(raw1, raw1, IntMatrix{{p, Int(0)}, {q, Int(1)}}, 0, e, {p, q});
    out.chart2 = make_chart(raw2, raw2, IntMatrix{{Int(1), p}, {Int(0), q}}, 1, e, {p, q});
    out.exceptional.kind = "P1w";
    out.exceptional.omega = {p, q};
    out.exceptional.covering = {out.chart1.normalized, out.chart2.normalized};
    return out;
}

Blowup3Result blowup_3d_smooth(const Int& p, const Int& q, const Int& r) {
    if (p < 1 || q < 1 || r < 1 || gcd(gcd(p, q), r) != 1)
        throw std::invalid_argument("blowup_3d_smooth: weights must be positive with gcd 1");
    QuotientType u1 = QuotientType::cyclic(p, {Int(-1), q, r});
    QuotientType u2 = QuotientType::cyclic(q, {p, Int(-1), r});
    QuotientType u3 = QuotientType::cyclic(r, {p, q, Int(-1)});

    Blowup3Result out;
    out.charts[0] = make_chart(u1, u1,
                               IntMatrix{{p, Int(0), Int(0)}, {q, Int(1), Int(0)}, {r, Int(0), Int(1)}},
                               0, Int(1), {p, q, r});
    out.charts[1] = make_chart(u2, u2,
                               IntMatrix{{Int(1), p, Int(0)}, {Int(0), q, Int(0)}, {Int(0), r, Int(1)}},
                               1, Int(1), {p, q, r});
    out.charts[2] = make_chart(u3, u3,
                               IntMatrix{{Int(1), Int(0), p}, {Int(0), Int(1), q}, {Int(0), Int(0), r}},
                               2, Int(1), {p, q, r});
    out.exceptional.kind = "P2w";
    out.exceptional.omega = {p, q, r};
    out.exceptional.covering = {QuotientType::cyclic(p, {q, r}), QuotientType::cyclic(q, {p, r}),
                                QuotientType::cyclic(r, {p, q})};
    out.exceptional.axes = {AxisLine{0, gcd(q, r), {p, Int(-1)}}, AxisLine{1, gcd(p, r), {q, Int(-1)}},
                            AxisLine{2, gcd(p, q), {r, Int(-1)}}};
    return out;
}

Blowup3Result blowup_3d_quotient(const QuotientType& t, const Int& p, const Int& q, const Int& r) {
    if (t.ncoords() != 3) throw std::invalid_argument("blowup_3d_quotient: three coordinates required");
    if (!is_normalized(t)) throw std::invalid_argument("blowup_3d_quotient: type must be normalized");
    if (p < 1 || q < 1 || r < 1 || gcd(gcd(p, q), r) != 1)
        throw std::invalid_argument("blowup_3d_quotient: weights must be positive with gcd 1");

    QuotientType pres = QuotientGroup(t).present();
    if (pres.nrows() > 1) throw std::invalid_argument("blowup_3d_quotient: type is not cyclic");
    Int d(1), a(0), b(0), c(0);
    if (pres.nrows() == 1 && pres.d[0] > 1) {
        d = pres.d[0];
        a = pres.a(0, 0);
        b = pres.a(0, 1);
        c = pres.a(0, 2);
    }

    auto raw_chart = [&](int which) {
        switch (which) {
            case 0:
                return QuotientType({p, p * d}, IntMatrix{{Int(-1), q, r}, {a, p * b - q * a, p * c - r * a}});
            case 1:
                return QuotientType({q, q * d}, IntMatrix{{p, Int(-1), r}, {q * a - p * b, b, q * c - r * b}});
            default:
                return QuotientType({r, r * d}, IntMatrix{{p, q, Int(-1)}, {r * a - p * c, r * b - q * c, c}});
        }
    };
    // Bezout row reduction of the two-row chart types: with alpha d + beta w = (d, w)
    // the pair collapses to one row of order (weight)*d plus a residual (d, w) row.
    auto rewritten_chart = [&](int which) {
        Int w = (which == 0) ? a : (which == 1) ? b : c;
        Int wt = (which == 0) ? p : (which == 1) ? q : r;
        Int g = gcd(d, w);
        Int alpha, beta;
        exgcd(d, w, alpha, beta);
        Int o1 = wt * d;
        if (which == 0)
            return QuotientType({o1, g}, IntMatrix{{g, -q * g + beta * p * b, -r * g + beta * p * c},
                                                   {Int(0), b, c}});
        if (which == 1)
            return QuotientType({o1, g}, IntMatrix{{-p * g + beta * q * a, g, -r * g + beta * q * c},
                                                   {a, Int(0), c}});
        return QuotientType({o1, g}, IntMatrix{{-p * g + beta * r * a, -q * g + beta * r * b, g},
                                               {a, b, Int(0)}});
    };

    std::array<IntMatrix, 3> subst = {
        IntMatrix{{p, Int(0), Int(0)}, {q, Int(1), Int(0)}, {r, Int(0), Int(1)}},
        IntMatrix{{Int(1), p, Int(0)}, {Int(0), q, Int(0)}, {Int(0), r, Int(1)}},
        IntMatrix{{Int(1), Int(0), p}, {Int(0), Int(1), q}, {Int(0), Int(0), r}}};

    Blowup3Result out;
    for (int i = 0; i < 3; ++i) {
        QuotientType raw = raw_chart(i);
        QuotientType rew = rewritten_chart(i);
        if (!types_equal(raw, rew))
            throw std::logic_error("blowup_3d_quotient: Bezout rewrite changed the group");
        std::vector<Int> omega = {p, q, r};
        out.charts[static_cast<size_t>(i)] =
            make_chart(raw, rew, subst[static_cast<size_t>(i)], i, Int(1), omega);
    }
    out.exceptional.kind = (d == 1) ? "P2w" : "P2w_quotient";
    out.exceptional.omega = {p, q, r};
    out.exceptional.quotient_base = pres;
    for (int i = 0; i < 3; ++i)
        out.exceptional.covering.push_back(out.charts[static_cast<size_t>(i)].normalized);
    return out;
}

SimplifyWp2Result simplify_wp2(const Int& p, const Int& q, const Int& r) {
    if (gcd(gcd(p, q), r) != 1) throw std::invalid_argument("simplify_wp2: gcd(p,q,r) must be 1");
    SimplifyWp2Result out;
    out.weights = {divexact(p, gcd(p, r) * gcd(p, q)), divexact(q, gcd(q, p) * gcd(q, r)),
                   divexact(r, gcd(r, p) * gcd(r, q))};
    out.powers = {gcd(q, r), gcd(p, r), gcd(p, q)};
    return out;
}

}  // namespace qres
