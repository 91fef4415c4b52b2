#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qres/qspace.hpp"

using namespace qres;

namespace {

// reference implementation: walk all group elements and look for elements
// supported on a single coordinate
Int reflection_order_by_enumeration(const QuotientGroup& g, long j) {
    Int count(0);
    for (const auto& el : g.elements()) {
        bool axis_only = true;
        for (long c = 0; c < g.ncoords(); ++c)
            if (c != j && el[static_cast<size_t>(c)] != 0) axis_only = false;
        if (axis_only) count += 1;
    }
    return count;
}

QuotientType random_type(std::mt19937_64& rng, long ncoords, long max_order) {
    std::uniform_int_distribution<long> rows_dist(1, 2);
    long rows = rows_dist(rng);
    std::uniform_int_distribution<long> d_dist(1, max_order);
    std::vector<Int> d;
    IntMatrix a(rows, ncoords);
    for (long i = 0; i < rows; ++i) {
        d.emplace_back(d_dist(rng));
        for (long j = 0; j < ncoords; ++j)
            a(i, j) = std::uniform_int_distribution<long>(-max_order, max_order)(rng);
    }
    return QuotientType(std::move(d), std::move(a));
}

}  // namespace

TEST_CASE("group order and membership via the lattice") {
    QuotientType t = parse_type("(4;2,1)");
    QuotientGroup g(t);
    CHECK(g.order() == 4);
    CHECK(g.contains({Int(2), Int(1)}));   // the generator itself, scaled by 4
    CHECK(g.contains({Int(0), Int(2)}));   // its square
    CHECK(!g.contains({Int(1), Int(0)}));
    CHECK(g.elements().size() == 4);
}

TEST_CASE("is_invariant on the spec instances") {
    CHECK(is_invariant(parse_type("(2;1,1)"), {{Int(1), Int(1)}}));
    CHECK(!is_invariant(parse_type("(2;1,1)"), {{Int(1), Int(0)}}));
    // two-row instance with germ x^8 y^6
    QuotientType t = parse_type("(10,10; 1,-3; -4,2)");
    CHECK(is_invariant(t, {{Int(8), Int(6)}}));
    CHECK(!is_invariant(t, {{Int(8), Int(5)}}));
}

TEST_CASE("normalize on the spec instances") {
    SUBCASE("X(2;1,1) is already normalized") {
        NormalizeResult r = normalize(parse_type("(2;1,1)"));
        CHECK(types_equal(r.type, parse_type("(2;1,1)")));
        CHECK(r.rescale == std::vector<Int>{Int(1), Int(1)});
        CHECK(r.removed_order == 1);
        CHECK(is_normalized(parse_type("(2;1,1)")));
    }
    SUBCASE("X(2;1,0) collapses to the smooth space") {
        NormalizeResult r = normalize(parse_type("(2;1,0)"));
        CHECK(group_order(r.type) == 1);
        CHECK(r.rescale == std::vector<Int>{Int(2), Int(1)});
        CHECK(r.removed_order == 2);
    }
    SUBCASE("X(4;2,1) becomes X(2;1,1) with rescale (1,2)") {
        NormalizeResult r = normalize(parse_type("(4;2,1)"));
        CHECK(types_equal(r.type, parse_type("(2;1,1)")));
        CHECK(r.rescale == std::vector<Int>{Int(1), Int(2)});
        CHECK(r.removed_order == 2);
        CHECK(!is_normalized(parse_type("(4;2,1)")));
    }
}

TEST_CASE("normalize properties on random types") {
    std::mt19937_64 rng(1234);
    int done = 0;
    while (done < 200) {
        long ncoords = std::uniform_int_distribution<long>(1, 3)(rng);
        QuotientType t = random_type(rng, ncoords, 8);
        QuotientGroup g(t);
        if (g.order() > 10000) continue;
        ++done;

        // lattice fast path agrees with element enumeration
        for (long j = 0; j < ncoords; ++j)
            CHECK(g.reflection_order(j) == reflection_order_by_enumeration(g, j));

        NormalizeResult r = normalize(t);
        // idempotent
        NormalizeResult r2 = normalize(r.type);
        CHECK(types_equal(r2.type, r.type));
        for (const Int& k : r2.rescale) CHECK(k == 1);
        // order bookkeeping
        CHECK(group_order(r.type) * r.removed_order == g.order());
        // no reflections left
        CHECK(is_normalized(r.type));
        // rescaling the original coordinates reproduces the normalized group
        QuotientGroup scaled = g;
        for (long j = 0; j < ncoords; ++j)
            if (r.rescale[static_cast<size_t>(j)] != 1)
                scaled = scaled.scale_coordinate(j, r.rescale[static_cast<size_t>(j)]);
        CHECK(scaled.same_group(QuotientGroup(r.type)));
    }
}

TEST_CASE("multiplicity on the spec instances") {
    SUBCASE("smooth space") {
        CHECK(multiplicity(QuotientType::trivial(1), {{Int(7)}}) == 7);
        CHECK(multiplicity(QuotientType::trivial(2), {{Int(6), Int(0)}}) == 6);
    }
    SUBCASE("X(2;1,1) with x^2 y^2") {
        CHECK(multiplicity(parse_type("(2;1,1)"), {{Int(2), Int(2)}}) == 2);
    }
    SUBCASE("two-row point with x^8 y^6") {
        QuotientType t = parse_type("(10,10; 1,-3; -4,2)");
        CHECK(multiplicity(t, {{Int(8), Int(6)}}) == 1);
    }
    SUBCASE("non-invariant germ is rejected") {
        CHECK_THROWS_AS(multiplicity(parse_type("(2;1,1)"), {{Int(1), Int(0)}}), std::domain_error);
    }
}

TEST_CASE("gcd and lcm multiplicity forms agree on one-variable germs") {
    std::mt19937_64 rng(777);
    int done = 0;
    while (done < 200) {
        long rows = std::uniform_int_distribution<long>(1, 3)(rng);
        std::vector<Int> d;
        IntMatrix a(rows, 2);
        Int l(1);
        for (long i = 0; i < rows; ++i) {
            long di = std::uniform_int_distribution<long>(1, 30)(rng);
            d.emplace_back(di);
            a(i, 0) = std::uniform_int_distribution<long>(-30, 30)(rng);
            a(i, 1) = std::uniform_int_distribution<long>(-30, 30)(rng);
            l = lcm(l, divexact(Int(di), gcd(Int(di), a(i, 0))));
        }
        QuotientType t(std::move(d), std::move(a));
        Int mult = l * std::uniform_int_distribution<long>(1, 5)(rng);
        MonomialGerm germ{{mult, Int(0)}};
        REQUIRE(is_invariant(t, germ));
        // multiplicity() asserts the two forms internally; also check the value
        CHECK(multiplicity(t, germ) == divexact(mult, l));
        ++done;
    }
}

TEST_CASE("multiplicity equals the orbit count of the cover factors") {
    // cyclic groups of order <= 12 acting on two variables: the irreducible
    // factors of t^e - x^a y^b are the orbits of mu_ell under index shifts
    std::mt19937_64 rng(31415);
    int done = 0;
    while (done < 200) {
        long dorder = std::uniform_int_distribution<long>(1, 12)(rng);
        long w0 = std::uniform_int_distribution<long>(-12, 12)(rng);
        long w1 = std::uniform_int_distribution<long>(-12, 12)(rng);
        QuotientType t = QuotientType::cyclic(Int(dorder), {Int(w0), Int(w1)});
        long m0 = std::uniform_int_distribution<long>(1, 12)(rng);
        long m1 = std::uniform_int_distribution<long>(0, 12)(rng);
        MonomialGerm germ{{Int(m0), Int(m1)}};
        if (!is_invariant(t, germ)) continue;
        ++done;
        long ell = gcdll(m0, m1);
        long shift = to_long(pos_mod(divexact(Int(w0) * m0 + Int(w1) * m1, Int(dorder)), Int(ell)));
        std::vector<bool> seen(static_cast<size_t>(ell), false);
        long orbits = 0;
        for (long i = 0; i < ell; ++i) {
            if (seen[static_cast<size_t>(i)]) continue;
            ++orbits;
            long cur = i;
            while (!seen[static_cast<size_t>(cur)]) {
                seen[static_cast<size_t>(cur)] = true;
                cur = (cur + shift) % ell;
            }
        }
        CHECK(multiplicity(t, germ) == orbits);
    }
}

TEST_CASE("two-dimensional weighted blow-up charts") {
    SUBCASE("smooth (2,3)-blow-up") {
        Blowup2Result r = blowup_2d(QuotientType::trivial(2), Int(2), Int(3));
        CHECK(types_equal(r.chart1.normalized, parse_type("(2;1,1)")));
        CHECK(types_equal(r.chart2.normalized, parse_type("(3;1,1)")));
    }
    SUBCASE("X(3;1,2) with omega=(1,1)") {
        Blowup2Result r = blowup_2d(parse_type("(3;1,2)"), Int(1), Int(1));
        CHECK(types_equal(r.chart1.raw, parse_type("(3;1,1)")));
        CHECK(types_equal(r.chart2.raw, parse_type("(3;1,1)")));
    }
    SUBCASE("X(3;-1,2) with omega=(1,10): second blow-up of the curve pipeline") {
        // (p,q,r,s) = (2,3,4,1): omega = (s, qr-ps) = (1,10)
        Blowup2Result r = blowup_2d(parse_type("(3;-1,2)"), Int(1), Int(10));
        CHECK(group_order(r.chart1.normalized) == 1);
        CHECK(types_equal(r.chart2.raw, parse_type("(10;-7,1)")));
        CHECK(is_normalized(r.chart2.normalized));
    }
    SUBCASE("non-normalized input is rejected") {
        CHECK_THROWS_AS(blowup_2d(parse_type("(4;2,1)"), Int(1), Int(1)), std::invalid_argument);
        CHECK_THROWS_AS(blowup_2d(QuotientType::trivial(2), Int(2), Int(4)), std::invalid_argument);
    }
}

TEST_CASE("pulled-back germs are invariant on blow-up charts") {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 60) {
        long d = std::uniform_int_distribution<long>(1, 9)(rng);
        long a = std::uniform_int_distribution<long>(-9, 9)(rng);
        long b = std::uniform_int_distribution<long>(-9, 9)(rng);
        QuotientType t = QuotientType::cyclic(Int(d), {Int(a), Int(b)});
        if (!is_normalized(t)) continue;
        long p = std::uniform_int_distribution<long>(1, 6)(rng);
        long q = std::uniform_int_distribution<long>(1, 6)(rng);
        if (gcdll(p, q) != 1) continue;
        long m0 = std::uniform_int_distribution<long>(0, 8)(rng);
        long m1 = std::uniform_int_distribution<long>(0, 8)(rng);
        if (m0 + m1 == 0) continue;
        MonomialGerm germ{{Int(m0), Int(m1)}};
        if (!is_invariant(t, germ)) continue;
        ++done;
        Blowup2Result r = blowup_2d(t, Int(p), Int(q));
        for (const Chart* c : {&r.chart1, &r.chart2})
            CHECK(is_invariant(c->raw, pullback_germ(*c, germ)));
    }
}

TEST_CASE("chart root on a non-coprime second blow-up") {
    // X(3;1,2) with omega = (1,5): e = gcd(3, 5*2-1) = 3
    Blowup2Result r = blowup_2d(parse_type("(3;1,2)"), Int(1), Int(5));
    CHECK(r.chart2.exceptional_root == 3);
    MonomialGerm germ{{Int(1), Int(7)}};  // invariant: 1 + 14 = 15
    REQUIRE(is_invariant(parse_type("(3;1,2)"), germ));
    MonomialGerm pulled = pullback_germ(r.chart2, germ);
    CHECK(pulled.exponents == std::vector<Int>{Int(1), Int(12)});  // (1*1+7*5)/3
    CHECK(is_invariant(r.chart2.raw, pulled));
}

TEST_CASE("three-dimensional smooth blow-up") {
    SUBCASE("standard blow-up") {
        Blowup3Result r = blowup_3d_smooth(Int(1), Int(1), Int(1));
        for (const auto& c : r.charts) CHECK(group_order(c.normalized) == 1);
    }
    SUBCASE("omega = (2,3,5)") {
        Blowup3Result r = blowup_3d_smooth(Int(2), Int(3), Int(5));
        CHECK(types_equal(r.charts[0].raw, parse_type("(2;-1,3,5)")));
        CHECK(types_equal(r.charts[1].raw, parse_type("(3;2,-1,5)")));
        CHECK(types_equal(r.charts[2].raw, parse_type("(5;2,3,-1)")));
        for (const auto& ax : r.exceptional.axes) CHECK(ax.isotropy == 1);
    }
    SUBCASE("surface pipeline weight vector at (p,q,k) = (2,3,1)") {
        long p = 2, q = 3, k = 1;
        long k1 = gcdll(k, p), k2 = gcdll(k, q);
        Int wx = Int(k) * p / (k1 * k2), wy = Int(k) * q / (k1 * k2), wz = Int(p) * q / (k1 * k2);
        CHECK(wx == 2);
        CHECK(wy == 3);
        CHECK(wz == 6);
        CHECK(gcd(gcd(wx, wy), wz) == 1);
        Blowup3Result r = blowup_3d_smooth(wx, wy, wz);
        CHECK(r.exceptional.axes[0].isotropy == 3);  // gcd(wy, wz)
        CHECK(r.exceptional.axes[1].isotropy == 2);  // gcd(wx, wz)
        CHECK(r.exceptional.axes[2].isotropy == 1);
    }
}

TEST_CASE("three-dimensional quotient blow-up") {
    SUBCASE("X(2;1,1,1) standard weights: first chart normalizes to smooth") {
        Blowup3Result r = blowup_3d_quotient(parse_type("(2;1,1,1)"), Int(1), Int(1), Int(1));
        CHECK(types_equal(r.charts[0].raw,
                          QuotientType({Int(1), Int(2)},
                                       IntMatrix{{Int(-1), Int(1), Int(1)}, {Int(1), Int(0), Int(0)}})));
        CHECK(group_order(r.charts[0].normalized) == 1);
    }
    SUBCASE("trivial group reduces to the smooth blow-up") {
        Blowup3Result rq = blowup_3d_quotient(QuotientType::trivial(3), Int(2), Int(3), Int(5));
        Blowup3Result rs = blowup_3d_smooth(Int(2), Int(3), Int(5));
        for (size_t i = 0; i < 3; ++i)
            CHECK(types_equal(rq.charts[i].normalized, rs.charts[i].normalized));
    }
    SUBCASE("X(3;1,1,2) third chart passes validation") {
        Blowup3Result r = blowup_3d_quotient(parse_type("(3;1,1,2)"), Int(1), Int(1), Int(1));
        CHECK(group_order(r.charts[2].raw) == group_order(r.charts[2].rewritten));
        CHECK(is_normalized(r.charts[2].normalized));
    }
    SUBCASE("Bezout rewrite preserves the group on random inputs") {
        std::mt19937_64 rng(555);
        int done = 0;
        while (done < 40) {
            long d = std::uniform_int_distribution<long>(1, 8)(rng);
            long a = std::uniform_int_distribution<long>(-8, 8)(rng);
            long b = std::uniform_int_distribution<long>(-8, 8)(rng);
            long c = std::uniform_int_distribution<long>(-8, 8)(rng);
            QuotientType t = QuotientType::cyclic(Int(d), {Int(a), Int(b), Int(c)});
            if (!is_normalized(t)) continue;
            long p = std::uniform_int_distribution<long>(1, 5)(rng);
            long q = std::uniform_int_distribution<long>(1, 5)(rng);
            long r = std::uniform_int_distribution<long>(1, 5)(rng);
            if (gcdll(gcdll(p, q), r) != 1) continue;
            ++done;
            // raw == rewritten is asserted inside the call
            Blowup3Result res = blowup_3d_quotient(t, Int(p), Int(q), Int(r));
            for (const auto& chart : res.charts) CHECK(is_normalized(chart.normalized));
        }
    }
}

TEST_CASE("weighted projective plane reduction") {
    SUBCASE("(1,1,1)") {
        SimplifyWp2Result r = simplify_wp2(Int(1), Int(1), Int(1));
        CHECK(r.weights == std::array<Int, 3>{Int(1), Int(1), Int(1)});
        CHECK(r.powers == std::array<Int, 3>{Int(1), Int(1), Int(1)});
    }
    SUBCASE("(2,3,5) pairwise coprime stays put") {
        SimplifyWp2Result r = simplify_wp2(Int(2), Int(3), Int(5));
        CHECK(r.weights == std::array<Int, 3>{Int(2), Int(3), Int(5)});
        CHECK(r.powers == std::array<Int, 3>{Int(1), Int(1), Int(1)});
    }
    SUBCASE("(6,10,15) collapses to the plane") {
        SimplifyWp2Result r = simplify_wp2(Int(6), Int(10), Int(15));
        CHECK(r.weights == std::array<Int, 3>{Int(1), Int(1), Int(1)});
        CHECK(r.powers == std::array<Int, 3>{Int(5), Int(3), Int(2)});
    }
}
