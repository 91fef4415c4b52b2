#include "qres/monodromy.hpp"

#include <algorithm>

namespace qres {

CycloProduct acampo_charpoly(const StratifiedDivisor& sd) {
    if (!sd.validated) throw std::invalid_argument("acampo_charpoly: divisor not validated");
    if (!sd.isolated) throw std::invalid_argument("acampo_charpoly: isolated singularities only");
    if (sd.n != 1 && sd.n != 2) throw std::invalid_argument("acampo_charpoly: n must be 1 or 2");
    const int sign_chi = (sd.n % 2 == 0) ? 1 : -1;   // (-1)^n
    CycloProduct delta = CycloProduct::tm1(1, -sign_chi);  // (t-1)^{(-1)^{n+1}}
    for (const auto& s : sd.strata) {
        if (s.components.size() != 1) continue;
        if (sd.component(s.components[0]).role != ComponentRole::Exceptional) continue;
        if (s.euler == 0) continue;
        delta = delta * CycloProduct::tm1(to_long(s.m), sign_chi * s.euler);
    }
    return delta;
}

CycloProduct perm_charpoly(const std::vector<long>& perm) {
    const long n = static_cast<long>(perm.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    CycloProduct out;
    for (long i = 0; i < n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        long len = 0, cur = i;
        while (!seen[static_cast<size_t>(cur)]) {
            seen[static_cast<size_t>(cur)] = true;
            cur = perm[static_cast<size_t>(cur)];
            if (cur < 0 || cur >= n) throw std::invalid_argument("perm_charpoly: not a permutation");
            ++len;
        }
        out = out * CycloProduct::tm1(len);
    }
    return out;
}

namespace {

struct CellIndex {
    std::vector<long> family;          // selected family per dim-cell list position
    std::map<long, long> offset;       // family -> first global index
    long total = 0;
};

CellIndex index_cells(const SemistableComplex& k, int dim, bool dplus_only) {
    CellIndex idx;
    for (size_t i = 0; i < k.families.size(); ++i) {
        const auto& f = k.families[i];
        if (f.dim != dim || (dplus_only && !f.in_dplus)) continue;
        idx.offset[static_cast<long>(i)] = idx.total;
        idx.family.push_back(static_cast<long>(i));
        idx.total += f.copies;
    }
    return idx;
}

// coboundary: rows = (dim+1)-cells, cols = dim-cells
RatMatrix coboundary(const SemistableComplex& k, const CellIndex& lo, const CellIndex& hi) {
    RatMatrix d(hi.total, lo.total);
    for (long fi : hi.family) {
        const auto& f = k.families[static_cast<size_t>(fi)];
        long base = hi.offset.at(fi);
        for (long long s = 0; s < f.copies; ++s)
            for (const auto& face : f.faces) {
                auto it = lo.offset.find(face.family);
                if (it == lo.offset.end()) continue;  // face outside the selected part
                long long fc = k.families[static_cast<size_t>(face.family)].copies;
                d(base + s, it->second + (s % fc)) += face.sign;
            }
    }
    return d;
}

RatMatrix deck_matrix(const SemistableComplex& k, const CellIndex& idx) {
    RatMatrix p(idx.total, idx.total);
    for (long fi : idx.family) {
        const auto& f = k.families[static_cast<size_t>(fi)];
        long base = idx.offset.at(fi);
        for (long long s = 0; s < f.copies; ++s) p(base + (s + 1) % f.copies, base + s) = 1;
    }
    return p;
}

CycloProduct perm_charpoly_families(const SemistableComplex& k, const CellIndex& idx) {
    CycloProduct out;
    for (long fi : idx.family)
        out = out * CycloProduct::tm1(k.families[static_cast<size_t>(fi)].copies);
    return out;
}

RatMatrix basis_matrix(const std::vector<std::vector<Rat>>& cols, long rows) {
    RatMatrix m(rows, static_cast<long>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (long i = 0; i < rows; ++i) m(i, static_cast<long>(j)) = cols[j][static_cast<size_t>(i)];
    return m;
}

}  // namespace

CohomologyAction complex_cohomology_action(const SemistableComplex& k, ComplexPart part,
                                           CohomologyMode mode) {
    const bool dplus = part == ComplexPart::DPlus;
    const long long e = to_long(k.e);
    std::vector<CellIndex> idx;
    for (int d = 0; d <= k.n; ++d) idx.push_back(index_cells(k, d, dplus));
    std::vector<RatMatrix> cob;  // cob[d]: C^d -> C^{d+1}
    for (int d = 0; d < k.n; ++d) cob.push_back(coboundary(k, idx[static_cast<size_t>(d)], idx[static_cast<size_t>(d + 1)]));

    CohomologyAction out;
    auto push = [&out, e](const RatMatrix& action) {
        out.dims.push_back(action.rows());
        out.delta.push_back(action.rows() == 0 ? CycloProduct()
                                               : cyclo_factor(charpoly_exact(action), e));
    };

    if (mode == CohomologyMode::Vanishing) {
        if (k.n != 2) throw std::invalid_argument("complex_cohomology_action: vanishing mode needs n=2");
        // H^0 exactly, H^1 assumed zero, H^2 from the alternating product
        RatMatrix p0 = deck_matrix(k, idx[0]);
        KernelRank ker = rat_kernel_rank(cob[0]);
        RatMatrix kb = basis_matrix(ker.kernel, idx[0].total);
        push(restricted_action(p0, kb));
        out.dims.push_back(0);
        out.delta.push_back(CycloProduct());
        CycloProduct h2 = perm_charpoly_families(k, idx[2]) * perm_charpoly_families(k, idx[0]) /
                          (perm_charpoly_families(k, idx[1]) * out.delta[0]);
        if (!h2.is_polynomial())
            throw std::domain_error("complex_cohomology_action: vanishing assumption fails");
        out.dims.push_back(static_cast<long>(h2.degree()));
        out.delta.push_back(h2);
        return out;
    }

    for (int d = 0; d <= k.n; ++d) {
        RatMatrix p = deck_matrix(k, idx[static_cast<size_t>(d)]);
        if (idx[static_cast<size_t>(d)].total == 0) {
            out.dims.push_back(0);
            out.delta.push_back(CycloProduct());
            continue;
        }
        // kernel of the outgoing coboundary (full space at top degree)
        RatMatrix kb;
        if (d < k.n) {
            KernelRank ker = rat_kernel_rank(cob[static_cast<size_t>(d)]);
            kb = basis_matrix(ker.kernel, idx[static_cast<size_t>(d)].total);
        } else {
            kb = RatMatrix::identity(idx[static_cast<size_t>(d)].total);
        }
        RatMatrix restricted = restricted_action(p, kb);
        if (d == 0) {
            push(restricted);
            continue;
        }
        // image of the incoming coboundary expressed in kernel coordinates
        RatMatrix w;
        try {
            w = rat_solve_columns(kb, cob[static_cast<size_t>(d - 1)]);
        } catch (const std::domain_error&) {
            throw std::logic_error("complex_cohomology_action: image not inside kernel");
        }
        QuotientActionResult qa = quotient_action(restricted, w);
        push(qa.action);
    }
    return out;
}

CoverData cyclic_cover_curve(const Int& sheets, const std::vector<Int>& branch_fibers, long base_chi,
                             const Int& components) {
    if (sheets < 1 || components < 1)
        throw std::invalid_argument("cyclic_cover_curve: sheets and components must be positive");
    for (const Int& r : branch_fibers) {
        if (r < 1 || !divides(r, sheets))
            throw std::invalid_argument("cyclic_cover_curve: fiber counts must divide the sheet count");
        if (!divides(components, r))
            throw std::invalid_argument("cyclic_cover_curve: component count must divide every fiber count");
    }
    if (!divides(components, sheets))
        throw std::invalid_argument("cyclic_cover_curve: component count must divide the sheet count");

    CoverData out;
    out.chi = sheets * base_chi;
    for (const Int& r : branch_fibers) out.chi -= sheets - r;

    if (components > 1) {
        std::vector<Int> reduced;
        for (const Int& r : branch_fibers) reduced.push_back(divexact(r, components));
        CoverData comp = cyclic_cover_curve(divexact(sheets, components), reduced, base_chi, Int(1));
        if (comp.chi * components != out.chi)
            throw std::logic_error("cyclic_cover_curve: per-component Euler characteristic mismatch");
        out.genus = comp.genus;
        out.h1 = comp.h1.inflate(to_long(components));
        return out;
    }

    Int two_g = Int(2) - out.chi;
    if (two_g < 0 || !divides(Int(2), two_g))
        throw std::domain_error("cyclic_cover_curve: non-integral genus");
    out.genus = divexact(two_g, Int(2));

    const long n = to_long(sheets);
    const long dim = to_long(two_g);
    // Lefschetz numbers of the deck powers; trivial action on H^0 and H^2
    std::vector<Rat> traces;
    long need = std::max<long>(dim, n);
    for (long kk = 1; kk <= need; ++kk) {
        long j = ((kk - 1) % n) + 1;
        Int lambda(0);
        if (j == n) {
            lambda = out.chi;
        } else {
            for (const Int& r : branch_fibers)
                if (divides(r, Int(j))) lambda += r;
        }
        traces.emplace_back(Int(2) - lambda);
    }
    Poly char_poly = charpoly_from_traces(traces, dim, true);
    // remaining traces must satisfy the Newton recurrence of the degree-2g polynomial:
    // p_k = -sum_{i=1..dim} coeff(dim-i) p_{k-i}
    for (long kk = dim + 1; kk <= n; ++kk) {
        Rat expect(0);
        for (long i = 1; i <= dim; ++i)
            expect -= char_poly.coeff(dim - i) * traces[static_cast<size_t>(kk - i - 1)];
        if (expect != traces[static_cast<size_t>(kk - 1)])
            throw std::domain_error("cyclic_cover_curve: traces inconsistent with dim 2g");
    }
    out.h1 = cyclo_factor(char_poly, n);
    return out;
}

WeightFiltration weight_filtration(const RatMatrix& nilpotent, long central_index) {
    if (nilpotent.rows() != nilpotent.cols())
        throw std::invalid_argument("weight_filtration: square matrix required");
    const long dim = nilpotent.rows();
    std::vector<long> ranks;  // rank N^l for l = 0..dim+1
    ranks.push_back(dim);
    RatMatrix power = RatMatrix::identity(dim);
    for (long l = 1; l <= dim + 1; ++l) {
        power = power * nilpotent;
        ranks.push_back(rat_rank(power));
    }
    if (ranks[static_cast<size_t>(dim)] != 0)
        throw std::domain_error("weight_filtration: matrix is not nilpotent");

    WeightFiltration out;
    for (long l = 1; l <= dim; ++l) {
        long j = ranks[static_cast<size_t>(l - 1)] - 2 * ranks[static_cast<size_t>(l)] +
                 ranks[static_cast<size_t>(l + 1)];
        if (j < 0) throw std::logic_error("weight_filtration: negative block count");
        if (j > 0) out.jordan[l] = j;
    }
    for (const auto& [size, count] : out.jordan)
        for (long i = 1; i <= size; ++i) {
            long level = central_index - size + 2 * i - 1;
            out.graded[level] += count;
        }
    long acc = 0;
    if (!out.graded.empty())
        for (long l = out.graded.begin()->first; l <= out.graded.rbegin()->first; ++l) {
            acc += out.graded.count(l) ? out.graded.at(l) : 0;
            out.w_dims[l] = acc;
        }
    return out;
}

long long JordanSpectrum::total_dim() const {
    long long total = 0;
    for (const auto& [key, count] : blocks) total += euler_phi(key.first) * key.second * count;
    return total;
}

std::string JordanSpectrum::str() const {
    if (blocks.empty()) return "(empty)";
    std::string s;
    for (const auto& [key, count] : blocks) {
        if (!s.empty()) s += ", ";
        s += "order " + std::to_string(key.first) + " size " + std::to_string(key.second) + " x" +
             std::to_string(count);
    }
    return s;
}

GradedCharData graded_from_weights(int n, const std::map<long, CycloProduct>& delta_by_weight) {
    GradedCharData g;
    for (const auto& [w, delta] : delta_by_weight) {
        long long c1 = 0;
        for (const auto& [d, cd] : delta.canonical())
            if (d == 1) c1 = cd;
        if (c1 < 0) throw std::domain_error("graded_from_weights: negative eigenvalue-1 multiplicity");
        CycloProduct one_part = CycloProduct::tm1(1, c1);
        CycloProduct ne_part = delta / one_part;
        if (!ne_part.is_one()) {
            long l = n - w;
            auto it = g.delta_l.find(l);
            g.delta_l[l] = (it == g.delta_l.end()) ? ne_part : it->second * ne_part;
        }
        if (c1 > 0) {
            long l = n + 1 - w;
            auto it = g.delta_l.find(l);
            g.delta_l[l] = (it == g.delta_l.end()) ? one_part : it->second * one_part;
        }
    }
    return g;
}

JordanBlocks jordan_from_graded(const GradedCharData& g) {
    JordanBlocks out;
    long lmax = 0;
    for (const auto& [l, delta] : g.delta_l) lmax = std::max(lmax, std::abs(l));
    auto delta_at = [&g](long l) {
        auto it = g.delta_l.find(l);
        return it == g.delta_l.end() ? CycloProduct() : it->second;
    };
    for (long l = 1; l <= lmax + 1; ++l) {
        CycloProduct b = delta_at(l - 1) / delta_at(l + 1);
        if (!b.is_polynomial())
            throw std::domain_error("jordan_from_graded: size-" + std::to_string(l) +
                                    " quotient has negative exponents");
        if (b.is_one()) continue;
        out.size_poly[l] = b;
        for (const auto& [d, cd] : b.canonical())
            if (cd > 0) out.spectrum.blocks[{d, l}] += cd;
    }
    return out;
}

JordanSpectrum jordan_blocks_matrix(const RatMatrix& m, long long e) {
    if (m.rows() != m.cols()) throw std::invalid_argument("jordan_blocks_matrix: square matrix required");
    const long dim = m.rows();
    CycloProduct char_factored = cyclo_factor(charpoly_exact(m), e);  // throws on residual factors
    JordanSpectrum out;
    for (const auto& [d, cd] : char_factored.canonical()) {
        if (cd <= 0) throw std::logic_error("jordan_blocks_matrix: invalid factorization");
        // evaluate Phi_d at the matrix
        const Poly& phi = cyclotomic_poly(d);
        RatMatrix pm(dim, dim);
        for (long i = 0; i < dim; ++i)
            for (long j = 0; j < dim; ++j) pm(i, j) = 0;
        RatMatrix mp = RatMatrix::identity(dim);
        for (long k = 0; k <= phi.degree(); ++k) {
            Rat c = phi.coeff(k);
            if (c != 0)
                for (long i = 0; i < dim; ++i)
                    for (long j = 0; j < dim; ++j) pm(i, j) += c * mp(i, j);
            if (k < phi.degree()) mp = mp * m;
        }
        std::vector<long> ranks;
        ranks.push_back(dim);
        RatMatrix power = RatMatrix::identity(dim);
        long prev = dim;
        for (long l = 1; l <= dim + 1; ++l) {
            power = power * pm;
            long r = rat_rank(power);
            ranks.push_back(r);
            if (r == prev && l > 1) break;  // stabilized
            prev = r;
        }
        long long phi_d = euler_phi(d);
        for (long l = 1; l + 1 < static_cast<long>(ranks.size()); ++l) {
            long num = ranks[static_cast<size_t>(l - 1)] - 2 * ranks[static_cast<size_t>(l)] +
                       ranks[static_cast<size_t>(l + 1)];
            if (num == 0) continue;
            if (num < 0 || num % phi_d != 0)
                throw std::logic_error("jordan_blocks_matrix: rank defect not a multiple of phi(d)");
            out.blocks[{d, l}] += num / phi_d;
        }
    }
    return out;
}

}  // namespace qres
