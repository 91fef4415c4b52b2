#pragma once

// Test-only reference implementations, independent of the library paths they
// check.

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qres/monodromy.hpp"

namespace qres::testing {

struct EdgeFamilySpec {
    long a, b;          // vertex family indices
    long long copies;
};

// Assemble a curve complex from explicit orbit families.
inline SemistableComplex make_graph_complex(const std::vector<long long>& vertex_copies,
                                            const std::vector<EdgeFamilySpec>& edges) {
    SemistableComplex k;
    k.n = 1;
    Int e(1);
    for (size_t i = 0; i < vertex_copies.size(); ++i) {
        CellFamily v;
        v.dim = 0;
        v.components = {static_cast<long>(i)};
        v.label = "v" + std::to_string(i);
        v.copies = vertex_copies[i];
        v.genus = Int(0);
        k.families.push_back(std::move(v));
        e = lcm(e, make_int(vertex_copies[i]));
    }
    for (size_t j = 0; j < edges.size(); ++j) {
        const auto& spec = edges[j];
        if (spec.copies % vertex_copies[static_cast<size_t>(spec.a)] != 0 ||
            spec.copies % vertex_copies[static_cast<size_t>(spec.b)] != 0)
            throw std::invalid_argument("make_graph_complex: face orbit must divide the edge orbit");
        CellFamily f;
        f.dim = 1;
        f.components = {std::min(spec.a, spec.b), std::max(spec.a, spec.b)};
        f.label = "e" + std::to_string(j);
        f.copies = spec.copies;
        f.faces = {{spec.a, -1}, {spec.b, +1}};
        k.families.push_back(std::move(f));
        e = lcm(e, make_int(spec.copies));
    }
    k.e = e;
    return k;
}

// Independent H^0 / H^1 oracle: count deck-power fixed points on cells and
// fixed connected components, then recover the H^1 characteristic polynomial
// from its traces.
inline CohomologyAction graph_cohomology_by_traces(const SemistableComplex& k) {
    struct Cell {
        long family;
        long long copy;
    };
    std::vector<Cell> vertices, edges;
    std::map<long, long> vertex_base;
    for (size_t i = 0; i < k.families.size(); ++i) {
        const auto& f = k.families[i];
        if (f.dim == 0) {
            vertex_base[static_cast<long>(i)] = static_cast<long>(vertices.size());
            for (long long s = 0; s < f.copies; ++s) vertices.push_back({static_cast<long>(i), s});
        }
    }
    for (size_t i = 0; i < k.families.size(); ++i) {
        const auto& f = k.families[i];
        if (f.dim == 1)
            for (long long s = 0; s < f.copies; ++s) edges.push_back({static_cast<long>(i), s});
    }
    const long nv = static_cast<long>(vertices.size());
    // union-find over the vertex cells
    std::vector<long> parent(static_cast<size_t>(nv));
    for (long i = 0; i < nv; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<long(long)> find = [&](long x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](long a, long b) { parent[static_cast<size_t>(find(a))] = find(b); };
    auto endpoint = [&](const Cell& e, int which) {
        const auto& f = k.families[static_cast<size_t>(e.family)];
        long vf = f.faces[static_cast<size_t>(which)].family;
        long long copies = k.families[static_cast<size_t>(vf)].copies;
        return vertex_base.at(vf) + static_cast<long>(e.copy % copies);
    };
    for (const auto& e : edges) unite(endpoint(e, 0), endpoint(e, 1));
    std::map<long, long> comp_index;
    for (long i = 0; i < nv; ++i) comp_index.emplace(find(i), static_cast<long>(comp_index.size()));
    const long ncomp = static_cast<long>(comp_index.size());
    const long b1 = static_cast<long>(edges.size()) - nv + ncomp;

    const long long e = to_long(k.e);
    auto vertex_image = [&](long idx, long long power) {
        const Cell& c = vertices[static_cast<size_t>(idx)];
        long long copies = k.families[static_cast<size_t>(c.family)].copies;
        return vertex_base.at(c.family) + static_cast<long>((c.copy + power) % copies);
    };
    // explicit dense permutation matrices on the cochain levels
    RatMatrix p0(nv, nv);
    for (long i = 0; i < nv; ++i) p0(vertex_image(i, 1), i) = 1;
    const long ne = static_cast<long>(edges.size());
    RatMatrix p1(ne, ne);
    {
        std::map<std::pair<long, long long>, long> edge_index;
        for (long i = 0; i < ne; ++i)
            edge_index[{edges[static_cast<size_t>(i)].family, edges[static_cast<size_t>(i)].copy}] = i;
        for (long i = 0; i < ne; ++i) {
            const Cell& c = edges[static_cast<size_t>(i)];
            long long copies = k.families[static_cast<size_t>(c.family)].copies;
            p1(edge_index.at({c.family, (c.copy + 1) % copies}), i) = 1;
        }
    }
    auto trace = [](const RatMatrix& m) {
        Rat t(0);
        for (long i = 0; i < m.rows(); ++i) t += m(i, i);
        return t;
    };
    // Lefschetz on the graph: tr H^0 - tr H^1 = tr C^0 - tr C^1
    std::vector<Rat> traces_h1;
    RatMatrix pow0 = RatMatrix::identity(nv), pow1 = RatMatrix::identity(ne);
    for (long long power = 1; power <= e; ++power) {
        pow0 = pow0 * p0;
        pow1 = pow1 * p1;
        std::map<long, long> comp_image;
        for (long i = 0; i < nv; ++i)
            comp_image[comp_index.at(find(i))] = comp_index.at(find(vertex_image(i, power)));
        long fixed_comps = 0;
        for (const auto& [c, img] : comp_image)
            if (c == img) ++fixed_comps;
        traces_h1.emplace_back(Int(fixed_comps) - trace(pow0) + trace(pow1));
    }
    while (static_cast<long>(traces_h1.size()) < b1) {
        // extend periodically when b1 exceeds the deck order
        traces_h1.push_back(traces_h1[traces_h1.size() - static_cast<size_t>(e)]);
    }
    CohomologyAction out;
    out.dims = {ncomp, b1};
    // H^0: permutation action on components via any fixed power-1 image
    std::vector<long> comp_perm(static_cast<size_t>(ncomp));
    for (long i = 0; i < nv; ++i)
        comp_perm[static_cast<size_t>(comp_index.at(find(i)))] =
            comp_index.at(find(vertex_image(i, 1)));
    out.delta = {perm_charpoly(comp_perm),
                 b1 == 0 ? CycloProduct() : cyclo_factor(charpoly_from_traces(traces_h1, b1, true), e)};
    return out;
}

// Jordan block counts of a nilpotent matrix from iterated kernel dimensions.
inline std::map<long, long> jordan_chain_counts(const RatMatrix& n) {
    const long dim = n.rows();
    std::vector<long> kdims;  // dim ker N^j
    kdims.push_back(0);
    RatMatrix power = RatMatrix::identity(dim);
    for (long j = 1; j <= dim + 1; ++j) {
        power = power * n;
        kdims.push_back(dim - rat_rank(power));
    }
    std::map<long, long> counts;
    for (long l = 1; l <= dim; ++l) {
        long cnt = 2 * kdims[static_cast<size_t>(l)] - kdims[static_cast<size_t>(l - 1)] -
                   kdims[static_cast<size_t>(l + 1)];
        if (cnt > 0) counts[l] = cnt;
    }
    return counts;
}

inline RatMatrix random_nilpotent(std::mt19937_64& rng, long dim, int span) {
    // strictly upper triangular, then a unimodular conjugation
    RatMatrix m(dim, dim);
    std::uniform_int_distribution<int> entry(-span, span);
    for (long i = 0; i < dim; ++i)
        for (long j = i + 1; j < dim; ++j) m(i, j) = entry(rng);
    RatMatrix g = RatMatrix::identity(dim), ginv = RatMatrix::identity(dim);
    std::uniform_int_distribution<long> pick(0, dim - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int moves = 0; moves < 2 * dim; ++moves) {
        long a = pick(rng), b = pick(rng);
        if (a == b) continue;
        Rat f = coin(rng) ? Rat(1) : Rat(-1);
        g.add_row(a, b, f);
        ginv.add_col(b, a, -f);
    }
    return g * m * ginv;
}

}  // namespace qres::testing
