#include "qres/steenbrink.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qres {

using nlohmann::json;

const E1Entry* E1Page::find(const std::string& space) const {
    for (const auto& e : entries)
        if (e.space == space) return &e;
    return nullptr;
}

std::string E1Page::str() const {
    std::ostringstream out;
    out << "E1 page (n=" << n << ")\n";
    for (const auto& e : entries) {
        out << "  [k=" << e.k_layer << "] E1^{" << e.weight << "," << e.q << "} = " << e.space
            << "  dim ";
        if (e.dim < 0)
            out << "?";
        else
            out << e.dim;
        if (e.delta) out << "  Delta = " << e.delta->str();
        out << "\n";
    }
    for (const auto& a : arrows)
        out << "  " << a.kind << ": " << entries[a.from].space << " -> " << entries[a.to].space
            << "\n";
    return out.str();
}

namespace {

long long genus_dim(const SemistableComplex& k, bool dplus_only) {
    long long dim = 0;
    for (const auto& f : k.families) {
        if (f.dim != 0 || !f.compact) continue;
        if (dplus_only && !f.in_dplus) continue;
        if (!f.genus) throw std::domain_error("e1_curve: missing genus decoration on " + f.label);
        dim += 2 * to_long(*f.genus) * f.copies;
    }
    return dim;
}

}  // namespace

E1Page e1_curve(const SemistableComplex& k) {
    if (k.n != 1) throw std::invalid_argument("e1_curve: curve complex required");
    E1Page page;
    page.n = 1;
    const long v_plus = static_cast<long>(k.cell_count(0, true));
    const long e_plus = static_cast<long>(k.cell_count(1, true));
    const long e_all = static_cast<long>(k.cell_count(1, false));
    page.entries = {
        {1, 0, 1, "H^0(D+[1])", e_plus, std::nullopt},
        {0, 0, 0, "H^0(D+[0])", v_plus, std::nullopt},
        {0, 1, 0, "H^1(D+[0])", static_cast<long>(genus_dim(k, true)), std::nullopt},
        {0, 2, 0, "H^2(D+[0])", v_plus, std::nullopt},
        {0, 2, -1, "H^0(D[1])", e_all, std::nullopt},
    };
    page.arrows = {{"mayer-vietoris", 1, 0}, {"gysin", 4, 3}};
    return page;
}

namespace {

// Gysin map H^0(D[1]) -> H^2(D+[0]): a point cell maps to the fundamental
// classes of the compact exceptional vertex cells it lies on; components on
// the strict transform are sent to zero.
struct GysinData {
    RatMatrix matrix;   // rows: compact vertex cells of D+, cols: all edge cells
    RatMatrix deck_edges;
    long edge_cells = 0;
};

GysinData curve_gysin(const SemistableComplex& k) {
    std::vector<std::pair<long, long>> vertex_cells;  // (family, copy)
    std::map<long, long> vertex_offset;
    for (size_t i = 0; i < k.families.size(); ++i) {
        const auto& f = k.families[i];
        if (f.dim != 0 || !f.in_dplus || !f.compact) continue;
        vertex_offset[static_cast<long>(i)] = static_cast<long>(vertex_cells.size());
        for (long long s = 0; s < f.copies; ++s) vertex_cells.push_back({static_cast<long>(i), s});
    }
    long edge_total = 0;
    std::map<long, long> edge_offset;
    for (size_t i = 0; i < k.families.size(); ++i) {
        const auto& f = k.families[i];
        if (f.dim != 1) continue;
        edge_offset[static_cast<long>(i)] = edge_total;
        edge_total += f.copies;
    }
    GysinData out;
    out.edge_cells = edge_total;
    out.matrix = RatMatrix(static_cast<long>(vertex_cells.size()), edge_total);
    out.deck_edges = RatMatrix(edge_total, edge_total);
    for (size_t i = 0; i < k.families.size(); ++i) {
        const auto& f = k.families[i];
        if (f.dim != 1) continue;
        long base = edge_offset[static_cast<long>(i)];
        for (long long s = 0; s < f.copies; ++s) {
            out.deck_edges(base + (s + 1) % f.copies, base + s) = 1;
            for (const auto& face : f.faces) {
                auto it = vertex_offset.find(face.family);
                if (it == vertex_offset.end()) continue;  // strict or noncompact: zero
                long long fc = k.families[static_cast<size_t>(face.family)].copies;
                out.matrix(it->second + (s % fc), base + s) += face.sign;
            }
        }
    }
    return out;
}

SymbolicCyclo sym_div(const SymbolicCyclo& a, const SymbolicCyclo& b) {
    SymbolicCyclo out;
    out.known = a.known / b.known;
    out.sym_power = a.sym_power - b.sym_power;
    out.sym_name = b.sym_name.empty() ? a.sym_name : b.sym_name;
    return out;
}

}  // namespace

MHSReport mhs_curve(const StratifiedDivisor& sd) {
    if (sd.n != 1) throw std::invalid_argument("mhs_curve: curve input required");
    if (!sd.validated) throw std::invalid_argument("mhs_curve: divisor not validated");
    SemistableComplex k = build_dual_complex(sd);
    const long long e = to_long(exponent(sd));

    MHSReport rep;
    rep.n = 1;
    rep.total = acampo_charpoly(sd);

    CohomologyAction dplus = complex_cohomology_action(k, ComplexPart::DPlus);
    CycloProduct gr0 = dplus.delta[1];
    long dim0 = dplus.dims[1];

    GysinData gysin = curve_gysin(k);
    KernelRank ker = rat_kernel_rank(gysin.matrix);
    long dim2 = static_cast<long>(ker.kernel.size());
    CycloProduct gr2;
    if (dim2 > 0) {
        RatMatrix kb(gysin.edge_cells, dim2);
        for (long j = 0; j < dim2; ++j)
            for (long i = 0; i < gysin.edge_cells; ++i)
                kb(i, j) = ker.kernel[static_cast<size_t>(j)][static_cast<size_t>(i)];
        gr2 = cyclo_factor(charpoly_exact(restricted_action(gysin.deck_edges, kb)), e);
    }

    long long genus_sum = 0;
    for (const auto& f : k.families)
        if (f.dim == 0 && f.compact && f.genus) genus_sum += to_long(*f.genus) * f.copies;
    CycloProduct gr1 = rep.total / (gr0 * gr2);
    if (!gr1.is_polynomial())
        throw std::domain_error("mhs_curve: weight-1 characteristic polynomial is not a polynomial");
    if (gr1.degree() != 2 * genus_sum)
        throw std::domain_error("mhs_curve: weight-1 dimension disagrees with the genus count");

    rep.weights[0] = WeightPiece{true, dim0, SymbolicCyclo{gr0, 0, ""}};
    rep.weights[1] = WeightPiece{true, 2 * genus_sum, SymbolicCyclo{gr1, 0, ""}};
    rep.weights[2] = WeightPiece{true, dim2, SymbolicCyclo{gr2, 0, ""}};
    rep.hodge01 = make_int(genus_sum);

    GradedCharData graded = graded_from_weights(1, {{0, gr0}, {1, gr1}, {2, gr2}});
    JordanBlocks jb = jordan_from_graded(graded);
    rep.spectrum = jb.spectrum;
    for (const auto& [l, poly] : jb.size_poly) rep.block_polys[l] = SymbolicCyclo{poly, 0, ""};

    if (static_cast<long long>(rep.total.degree()) != dim0 + 2 * genus_sum + dim2)
        throw std::domain_error("mhs_curve: graded dimensions do not sum to the Milnor number");
    return rep;
}

Int column_exact_solver(const std::vector<std::optional<Int>>& dims) {
    long unknown = -1;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (dims[i]) {
            if (*dims[i] < 0) throw std::invalid_argument("column_exact_solver: negative dimension");
        } else {
            if (unknown >= 0) throw std::invalid_argument("column_exact_solver: one unknown required");
            unknown = static_cast<long>(i);
        }
    }
    if (unknown < 0) throw std::invalid_argument("column_exact_solver: one unknown required");
    // alternating sum of an exact sequence vanishes: v_u = -sum_{i != u} (-1)^{i-u} v_i
    Int acc(0);
    for (size_t i = 0; i < dims.size(); ++i) {
        if (static_cast<long>(i) == unknown) continue;
        Int v = *dims[i];
        acc += ((static_cast<long>(i) - unknown) % 2 == 0) ? v : -v;
    }
    Int value = -acc;
    if (value < 0) throw std::domain_error("column_exact_solver: negative solution, inconsistent input");
    return value;
}

std::vector<EdgeCover> edge_covers(const StratifiedDivisor& sd, bool dplus_only,
                                   bool require_sphere) {
    if (!sd.validated) throw std::invalid_argument("edge_covers: divisor not validated");
    if (sd.n != 2) throw std::invalid_argument("edge_covers: surface input required");
    auto is_strict = [&](long id) { return sd.component(id).role == ComponentRole::Strict; };
    std::set<std::vector<long>> pairs;
    for (const auto& s : sd.strata)
        if (s.components.size() == 2) pairs.insert(s.components);
    std::vector<EdgeCover> out;
    for (const auto& pr : pairs) {
        if (dplus_only && (is_strict(pr[0]) || is_strict(pr[1]))) continue;
        EdgeCover ec;
        ec.pair = pr;
        const Stratum* generic = nullptr;
        long long chi = 0;
        Int c(0);
        for (const auto& s : sd.strata) {
            if (!std::includes(s.components.begin(), s.components.end(), pr.begin(), pr.end()))
                continue;
            c = gcd(c, s.m);
            if (s.components == pr && s.dim == 1) {
                if (generic) throw std::domain_error("edge_covers: several curve strata on one pair");
                generic = &s;
                chi += s.euler;
            } else if (s.dim == 0) {
                for (long long i = 0; i < s.euler; ++i) ec.fibers.push_back(s.m);
                chi += s.euler;
            }
        }
        if (!generic) throw std::domain_error("edge_covers: pair without a generic double curve");
        if (require_sphere && chi != 2)
            throw std::domain_error(
                "edge_covers: double curve is not a 2-sphere (chi over the closure != 2)");
        ec.sheets = generic->m;
        ec.components = c;
        ec.base_chi = chi;
        ec.cover = cyclic_cover_curve(ec.sheets, ec.fibers, chi, ec.components);
        out.push_back(std::move(ec));
    }
    return out;
}

E1Page e1_surface(const SemistableComplex& k, const SurfaceBetti& betti) {
    if (k.n != 2) throw std::invalid_argument("e1_surface: surface complex required");
    const long v_plus = static_cast<long>(k.cell_count(0, true));
    const long e_plus = static_cast<long>(k.cell_count(1, true));
    const long e_all = static_cast<long>(k.cell_count(1, false));
    const long f_plus = static_cast<long>(k.cell_count(2, true));
    const long f_all = static_cast<long>(k.cell_count(2, false));

    long b1_sum = 0, b2_sum = 0;
    for (const auto& f : k.families) {
        if (f.dim != 0 || !f.in_dplus) continue;
        auto it = betti.find(f.components[0]);
        if (it == betti.end() || it->second.b2 < 0)
            throw std::domain_error("e1_surface: missing Betti data for vertex surface " + f.label);
        b1_sum += it->second.b1 * static_cast<long>(f.copies);
        b2_sum += it->second.b2 * static_cast<long>(f.copies);
    }

    E1Page page;
    page.n = 2;
    page.entries = {
        {2, 0, 2, "H^0(D+[2])", f_plus, std::nullopt},
        {1, 0, 1, "H^0(D+[1])", e_plus, std::nullopt},
        {1, 1, 1, "H^1(D+[1])", -1, std::nullopt},
        {1, 2, 1, "H^2(D+[1])", e_plus, std::nullopt},
        {0, 0, 0, "H^0(D+[0])", v_plus, std::nullopt},
        {0, 1, 0, "H^1(D+[0])", b1_sum, std::nullopt},
        {1, 2, 0, "H^0(D[2])", f_all, std::nullopt},
        {0, 2, 0, "H^2(D+[0])", b2_sum, std::nullopt},
        {0, 3, 0, "H^3(D+[0])", b1_sum, std::nullopt},
        {0, 4, 0, "H^4(D+[0])", v_plus, std::nullopt},
        {0, 2, -1, "H^0(D[1])", e_all, std::nullopt},
        {0, 3, -1, "H^1(D[1])", -1, std::nullopt},
        {0, 4, -1, "H^2(D[1])", e_all, std::nullopt},
        {0, 4, -2, "H^0(D[2])", f_all, std::nullopt},
    };
    page.arrows = {{"mayer-vietoris", 1, 0}, {"mayer-vietoris", 4, 1}, {"mayer-vietoris", 5, 2},
                   {"gysin", 6, 2},          {"gysin", 10, 7},         {"gysin", 11, 8},
                   {"gysin", 12, 9},         {"gysin", 13, 12}};
    return page;
}

E1Page e1_surface(const StratifiedDivisor& sd, const SurfaceBetti& betti) {
    E1Page page = e1_surface(build_dual_complex(sd), betti);
    // curve cells are derivable from the covering data of the double curves
    long h1_all = 0, h1_plus = 0;
    for (const EdgeCover& ec : edge_covers(sd, false, false)) {
        long contribution = static_cast<long>(ec.cover.h1.degree());
        h1_all += contribution;
        bool strict = sd.component(ec.pair[0]).role == ComponentRole::Strict ||
                      sd.component(ec.pair[1]).role == ComponentRole::Strict;
        if (!strict) h1_plus += contribution;
    }
    for (auto& e : page.entries) {
        if (e.space == "H^1(D[1])") e.dim = h1_all;
        if (e.space == "H^1(D+[1])") e.dim = h1_plus;
    }
    return page;
}

MHSReport mhs_surface_partial(const StratifiedDivisor& sd, const SurfaceAux& aux) {
    if (sd.n != 2) throw std::invalid_argument("mhs_surface_partial: surface input required");
    if (!sd.validated) throw std::invalid_argument("mhs_surface_partial: divisor not validated");
    SemistableComplex k = build_dual_complex(sd);

    MHSReport rep;
    rep.n = 2;
    rep.total = acampo_charpoly(sd);

    // weight 0 = H^2 of the dual complex of the exceptional part
    CohomologyAction dplus = complex_cohomology_action(k, ComplexPart::DPlus);
    CycloProduct gr0 = dplus.delta[2];
    rep.weights[0] = WeightPiece{true, dplus.dims[2], SymbolicCyclo{gr0, 0, ""}};

    // weight 1 from 0 -> H^1(D+[0]) -> H^1(D+[1]) -> gr_1 -> 0
    SymbolicCyclo h1_edges{CycloProduct(), 0, ""};
    std::vector<EdgeCover> covers = edge_covers(sd, true);
    for (const auto& ec : covers) h1_edges.known = h1_edges.known * ec.cover.h1;
    SymbolicCyclo h1_vertices{CycloProduct(), 0, ""};
    for (const auto& f : k.families) {
        if (f.dim != 0 || !f.in_dplus || !f.compact) continue;
        auto it = aux.h1.find(f.components[0]);
        if (it == aux.h1.end())
            throw std::domain_error("mhs_surface_partial: missing H^1 data for surface " + f.label);
        if (f.copies != 1 && (it->second.sym_power != 0 || !it->second.known.is_one()))
            throw std::domain_error("mhs_surface_partial: nontrivial H^1 on a disconnected cover");
        h1_vertices.known = h1_vertices.known * it->second.known;
        h1_vertices.sym_power += it->second.sym_power;
        if (it->second.sym_power != 0) h1_vertices.sym_name = it->second.sym_name;
    }
    SymbolicCyclo gr1 = sym_div(h1_edges, h1_vertices);
    bool gr1_known = gr1.sym_power == 0;
    if (gr1_known && !gr1.known.is_polynomial())
        throw std::domain_error("mhs_surface_partial: weight-1 quotient is not a polynomial");
    rep.weights[1] =
        WeightPiece{gr1_known, gr1_known ? static_cast<long>(gr1.known.degree()) : -1, gr1};

    // weight 4 from 0 -> gr_4 -> H^0(D[2]) -> H^2(D[1]) -> H^4(D+[0]) -> 0
    CycloProduct h0_d2, h2_d1, h4_d0;
    long f_all = 0, e_all = 0, v_plus = 0;
    for (const auto& f : k.families) {
        if (f.dim == 2) {
            h0_d2 = h0_d2 * CycloProduct::tm1(f.copies);
            f_all += static_cast<long>(f.copies);
        } else if (f.dim == 1) {
            h2_d1 = h2_d1 * CycloProduct::tm1(f.copies);
            e_all += static_cast<long>(f.copies);
        } else if (f.in_dplus && f.compact) {
            h4_d0 = h4_d0 * CycloProduct::tm1(f.copies);
            v_plus += static_cast<long>(f.copies);
        }
    }
    CycloProduct gr4 = h0_d2 * h4_d0 / h2_d1;
    if (!gr4.is_polynomial())
        throw std::domain_error("mhs_surface_partial: weight-4 quotient is not a polynomial");
    Int dim4 = column_exact_solver({std::nullopt, Int(f_all), Int(e_all), Int(v_plus)});
    if (dim4 != make_int(gr4.degree()))
        throw std::logic_error("mhs_surface_partial: weight-4 dimension mismatch");
    rep.weights[4] = WeightPiece{true, static_cast<long>(gr4.degree()), SymbolicCyclo{gr4, 0, ""}};

    // Jordan summaries: size 3 from weight 0, size 2 at eigenvalue 1 from the
    // (t-1)-content of weight 4, size 2 elsewhere from weight 1
    rep.block_polys[3] = SymbolicCyclo{gr0, 0, ""};
    for (const auto& [d, cd] : gr0.canonical())
        if (d > 1 && cd > 0) rep.spectrum.blocks[{d, 3}] += cd;
    long long ones4 = gr4.order_at_one();
    CycloProduct b2 = gr1.known * CycloProduct::tm1(1, ones4);
    rep.block_polys[2] = SymbolicCyclo{b2, gr1.sym_power, gr1.sym_name};
    if (gr1_known) {
        for (const auto& [d, cd] : b2.canonical())
            if (cd > 0) rep.spectrum.blocks[{d, 2}] += cd;
    } else if (ones4 > 0) {
        rep.spectrum.blocks[{1, 2}] += ones4;
    }
    rep.notes.push_back("weights 2 and 3 are not computed by this pipeline");
    return rep;
}

// ---------------------------------------------------------------------------
// report emission

namespace {

std::string weight_line(long w, const WeightPiece& piece) {
    std::ostringstream out;
    out << "  gr_" << w << ": ";
    if (!piece.known_dim)
        out << "dim ?";
    else
        out << "dim " << piece.dim;
    out << "  Delta = " << piece.delta.str();
    return out.str();
}

json cyclo_json(const CycloProduct& c) {
    json j = json::object();
    for (const auto& [d, cd] : c.canonical()) j[std::to_string(d)] = cd;
    return j;
}

}  // namespace

std::string MHSReport::str() const {
    std::ostringstream out;
    out << "H^" << n << "(F) characteristic polynomial: " << total.str() << "\n";
    out << "  canonical: " << total.str_canonical() << "\n";
    out << "weight graded pieces:\n";
    for (const auto& [w, piece] : weights) out << weight_line(w, piece) << "\n";
    if (hodge01) out << "hodge split: h^{0,1} = h^{1,0} = " << hodge01->get_str() << "\n";
    if (!block_polys.empty()) {
        out << "jordan blocks:\n";
        for (const auto& [l, poly] : block_polys)
            out << "  size " << l << ": " << poly.str() << "\n";
    }
    if (!spectrum.blocks.empty()) out << "spectrum: " << spectrum.str() << "\n";
    for (const auto& note : notes) out << "note: " << note << "\n";
    return out.str();
}

std::string MHSReport::to_json() const {
    json j;
    j["n"] = n;
    j["total_degree"] = total.degree();
    j["delta"] = cyclo_json(total);
    j["weights"] = json::object();
    for (const auto& [w, piece] : weights) {
        json jw;
        if (piece.known_dim) jw["dim"] = piece.dim;
        jw["delta"] = cyclo_json(piece.delta.known);
        if (piece.delta.sym_power != 0) {
            jw["symbol"] = piece.delta.sym_name;
            jw["symbol_power"] = piece.delta.sym_power;
        }
        j["weights"][std::to_string(w)] = jw;
    }
    if (hodge01) j["h01"] = to_long(*hodge01);
    json blocks = json::array();
    for (const auto& [key, count] : spectrum.blocks) {
        json jb;
        jb["order"] = key.first;
        jb["size"] = key.second;
        jb["count"] = count;
        blocks.push_back(jb);
    }
    j["jordan"] = blocks;
    json polys = json::object();
    for (const auto& [l, poly] : block_polys) {
        json jp;
        jp["delta"] = cyclo_json(poly.known);
        if (poly.sym_power != 0) {
            jp["symbol"] = poly.sym_name;
            jp["symbol_power"] = poly.sym_power;
        }
        polys[std::to_string(l)] = jp;
    }
    j["block_polys"] = polys;
    if (!notes.empty()) j["notes"] = notes;
    return j.dump(2) + "\n";
}

}  // namespace qres
