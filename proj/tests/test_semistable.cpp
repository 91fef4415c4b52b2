#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qres/semistable.hpp"

using namespace qres;

namespace {

StratifiedDivisor validated(StratifiedDivisor sd) {
    ValidationReport rep = validate(sd);
    REQUIRE_MESSAGE(rep.ok(), rep.str());
    return sd;
}

long count_edges(const SemistableComplex& k, bool dplus) {
    return static_cast<long>(k.cell_count(1, dplus));
}

// first Betti number of the full dual graph (curve case)
long graph_cycles(const SemistableComplex& k) {
    long v = static_cast<long>(k.cell_count(0, false));
    long e = static_cast<long>(k.cell_count(1, false));
    // the complexes in these tests are connected
    return e - v + 1;
}

}  // namespace

TEST_CASE("covering exponent") {
    CHECK(exponent(validated(gen_one_branch(2, 3))) == 6);
    CHECK(exponent(validated(gen_two_branch(2, 3, 4, 1))) == 24);
    StratifiedDivisor sd;
    sd.n = 1;
    sd.components = {{0, "E", ComponentRole::Exceptional, true, Int(1)}};
    Stratum s;
    s.components = {0};
    s.mult = {{0, Int(1)}};
    s.euler = 2;
    s.dim = 1;
    sd.strata = {s};
    CHECK(exponent(validated(sd)) == 1);
}

TEST_CASE("component counts") {
    StratifiedDivisor one = validated(gen_one_branch(2, 3));
    CHECK(component_count(one, 0) == 1);  // gcd(6,2,3,1)
    StratifiedDivisor two = validated(gen_two_branch(2, 3, 4, 1));
    CHECK(component_count(two, 0) == 1);  // gcd(8,4,1,1)
    CHECK(component_count(two, 1) == 1);

    // every stratum of E has fiber count 3
    StratifiedDivisor sd;
    sd.n = 1;
    sd.components = {{0, "E", ComponentRole::Exceptional, true, Int(3)}};
    Stratum s;
    s.components = {0};
    s.mult = {{0, Int(3)}};
    s.euler = 2;
    s.dim = 1;
    sd.strata = {s};
    sd = validated(std::move(sd));
    CHECK(component_count(sd, 0) == 3);
    ComponentEuler ce = component_euler(sd, 0);
    CHECK(ce.components == 3);
    CHECK(ce.chi == 2);
    CHECK(*ce.genus == 0);
}

TEST_CASE("component Euler characteristics and genera") {
    SUBCASE("one-branch grid matches p + q + gcd(p,q) - pq") {
        for (long p = 2; p <= 10; ++p)
            for (long q = 2; q <= 10; ++q) {
                StratifiedDivisor sd = validated(gen_one_branch(p, q));
                ComponentEuler ce = component_euler(sd, 0);
                CHECK(ce.chi == Int(p) + q + static_cast<long>(gcdll(p, q)) - p * q);
            }
    }
    SUBCASE("two-branch genera") {
        StratifiedDivisor sd = validated(gen_two_branch(2, 3, 4, 1));
        ComponentEuler d1 = component_euler(sd, 0);
        CHECK(d1.chi == -2);
        CHECK(*d1.genus == 2);  // ((p-1)(q+s) - gcd(p,s) + 1) / 2
        ComponentEuler d2 = component_euler(sd, 1);
        CHECK(*d2.genus == 0);
    }
    SUBCASE("reduced smooth component keeps its Euler characteristic") {
        StratifiedDivisor sd;
        sd.n = 1;
        sd.components = {{0, "E", ComponentRole::Exceptional, true, Int(1)}};
        Stratum s;
        s.components = {0};
        s.mult = {{0, Int(1)}};
        s.euler = 2;
        s.dim = 1;
        sd.strata = {s};
        sd = validated(std::move(sd));
        CHECK(component_euler(sd, 0).chi == 2);
    }
}

TEST_CASE("riemann-hurwitz cross-check") {
    SUBCASE("one-branch (2,3)") {
        StratifiedDivisor sd = validated(gen_one_branch(2, 3));
        RiemannHurwitzCheck rh = riemann_hurwitz_check(sd, 0);
        CHECK(rh.ok);
        CHECK(rh.cover_chi == 0);
    }
    SUBCASE("two-branch (2,3,4,1)") {
        StratifiedDivisor sd = validated(gen_two_branch(2, 3, 4, 1));
        RiemannHurwitzCheck rh = riemann_hurwitz_check(sd, 0);
        CHECK(rh.ok);
        CHECK(rh.cover_chi == -2);
    }
    SUBCASE("unbranched cover") {
        StratifiedDivisor sd;
        sd.n = 1;
        sd.components = {{0, "E", ComponentRole::Exceptional, true, Int(3)}};
        Stratum s;
        s.components = {0};
        s.mult = {{0, Int(3)}};
        s.euler = 2;
        s.dim = 1;
        sd.strata = {s};
        sd = validated(std::move(sd));
        RiemannHurwitzCheck rh = riemann_hurwitz_check(sd, 0);
        CHECK(rh.ok);
        CHECK(rh.cover_chi == 6);  // N * chi(P^1)
    }
    SUBCASE("full grid") {
        for (long p = 2; p <= 8; ++p)
            for (long q = 2; q <= 8; ++q) {
                StratifiedDivisor sd = validated(gen_one_branch(p, q));
                CHECK(riemann_hurwitz_check(sd, 0).ok);
            }
    }
}

TEST_CASE("dual complex of the curve families") {
    SUBCASE("one-branch (2,3): two vertices, one edge, tree") {
        SemistableComplex k = build_dual_complex(validated(gen_one_branch(2, 3)));
        CHECK(k.cell_count(0, false) == 2);
        CHECK(count_edges(k, false) == 1);
        CHECK(graph_cycles(k) == 0);
        CHECK(k.e == 6);
    }
    SUBCASE("two-branch: gcd(p,s) parallel edges and gcd(p,s)-1 cycles") {
        for (auto [p, q, r, s] : std::vector<std::array<long, 4>>{
                 {2, 3, 4, 1}, {3, 4, 5, 3}, {2, 5, 7, 2}, {2, 1, 3, 1}}) {
            StratifiedDivisor sd = validated(gen_two_branch(p, q, r, s));
            SemistableComplex k = build_dual_complex(sd);
            long gamma = gcdll(p, s);
            CHECK(k.cell_count(0, false) == 4);          // D1, D2, C1, C2
            CHECK(count_edges(k, true) == gamma);        // Q edges
            CHECK(count_edges(k, false) == gamma + 2);   // plus the strict crossings
            CHECK(graph_cycles(k) == gamma - 1);
        }
    }
    SUBCASE("vertex counts follow the component counts") {
        StratifiedDivisor sd = validated(gen_two_branch(2, 3, 4, 1));
        SemistableComplex k = build_dual_complex(sd);
        long expected = 0;
        for (const auto& c : sd.components)
            if (c.role == ComponentRole::Exceptional) expected += to_long(component_count(sd, c.id));
        CHECK(k.cell_count(0, true) == expected);
    }
}

TEST_CASE("deck action structure") {
    StratifiedDivisor sd = validated(gen_two_branch(3, 4, 5, 3));  // gcd(p,s) = 3
    SemistableComplex k = build_dual_complex(sd);
    for (const auto& f : k.families) {
        CHECK(divides(make_int(f.copies), k.e));  // deck^e = identity family-wise
        for (const auto& face : f.faces) {
            const auto& g = k.families[static_cast<size_t>(face.family)];
            CHECK(f.copies % g.copies == 0);  // attachment is deck-equivariant
        }
    }
    // edge orbit sizes equal the fiber counts of their base strata
    for (const auto& f : k.families) {
        if (f.dim != 1 || !f.in_dplus) continue;
        CHECK(f.copies == 3);
    }
}

TEST_CASE("chain complexes for several branches") {
    std::vector<std::pair<long, long>> pq = {{2, 3}, {3, 4}, {1, 2}};
    SemistableComplex k = gen_chain_complex(pq);
    // junction multiplicities e_i = gcd(p_1+..+p_i, q_{i+1}+..+q_k)
    CHECK(k.cell_count(0, true) == 3);
    std::vector<long long> expect = {gcdll(2, 4 + 2), gcdll(2 + 3, 2)};
    std::vector<long long> got;
    for (const auto& f : k.families)
        if (f.dim == 1 && f.in_dplus) got.push_back(f.copies);
    CHECK(got == expect);
}

TEST_CASE("level-B json input") {
    const char* text = R"({
        "n": 1,
        "vertices": [
            {"id": 0, "name": "D1", "copies": 1, "genus": 0},
            {"id": 1, "name": "D2", "copies": 1, "genus": 1}
        ],
        "edges": [
            {"ends": [0, 1], "copies": 3}
        ]
    })";
    SemistableComplex k = complex_from_json(text);
    CHECK(k.cell_count(0, false) == 2);
    CHECK(k.cell_count(1, false) == 3);
    CHECK(k.e == 3);
    CHECK_THROWS(complex_from_json(R"({"n":1,"vertices":[{"id":0}],
        "edges":[{"ends":[0,0],"copies":2}]})"));
}

TEST_CASE("dot output lists vertices and parallel edges") {
    SemistableComplex k = build_dual_complex(validated(gen_two_branch(3, 4, 5, 3)));
    std::string dot = complex_to_dot(k);
    CHECK(dot.find("graph dual_complex") != std::string::npos);
    CHECK(dot.find("g=6") != std::string::npos);  // g1 = ((3-1)(4+3) - 3 + 1)/2
    CHECK(dot.find("g=7") != std::string::npos);  // g2 = ((3-1)(3+5) - 3 + 1)/2
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("complex euler characteristic equals the stratum sum") {
    // additivity of the cover: sum over strata of m(S) chi(S) computed back
    // from the genus-decorated vertices and edge cells
    for (auto [p, q, r, s] :
         std::vector<std::array<long, 4>>{{2, 3, 4, 1}, {3, 4, 5, 3}, {2, 5, 7, 2}}) {
        StratifiedDivisor sd = validated(gen_two_branch(p, q, r, s));
        SemistableComplex k = build_dual_complex(sd);
        Int from_strata(0);
        for (const auto& st : sd.strata) from_strata += st.m * static_cast<long>(st.euler);
        Int from_complex(0);
        for (const auto& f : k.families) {
            if (f.dim == 0 && f.compact)
                from_complex += make_int(f.copies) * (Int(2) - Int(2) * *f.genus);
            else if (f.dim == 0)
                from_complex += make_int(f.copies);  // strict germ cells
            else
                from_complex -= make_int(f.copies);  // double points counted once
        }
        CHECK(from_strata == from_complex);
    }
}

TEST_CASE("offset ambiguity is rejected") {
    // two separate double points between the same pair of multi-copy vertices
    StratifiedDivisor sd;
    sd.n = 1;
    sd.components = {{0, "A", ComponentRole::Exceptional, true, Int(2)},
                     {1, "B", ComponentRole::Exceptional, true, Int(2)}};
    auto mk = [](std::vector<long> ids, std::string label, std::map<long, Int> mult, long long euler,
                 int dim) {
        Stratum s;
        s.components = std::move(ids);
        s.singular_label = std::move(label);
        s.mult = std::move(mult);
        s.euler = euler;
        s.dim = dim;
        return s;
    };
    sd.strata = {mk({0}, "generic", {{0, Int(2)}}, 0, 1), mk({1}, "generic", {{1, Int(2)}}, 0, 1),
                 mk({0, 1}, "a", {{0, Int(2)}, {1, Int(2)}}, 1, 0),
                 mk({0, 1}, "b", {{0, Int(2)}, {1, Int(2)}}, 1, 0)};
    sd = validated(std::move(sd));
    CHECK(component_count(sd, 0) == 2);
    CHECK_THROWS_AS(build_dual_complex(sd), std::domain_error);
}
