#include "qres/semistable.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qres {

using nlohmann::json;

std::vector<long> SemistableComplex::families_of_dim(int d) const {
    std::vector<long> out;
    for (size_t i = 0; i < families.size(); ++i)
        if (families[i].dim == d) out.push_back(static_cast<long>(i));
    return out;
}

long long SemistableComplex::cell_count(int d, bool dplus_only) const {
    long long total = 0;
    for (const auto& f : families)
        if (f.dim == d && (!dplus_only || f.in_dplus)) total += f.copies;
    return total;
}

Int exponent(const StratifiedDivisor& sd) {
    if (!sd.validated) throw std::invalid_argument("exponent: divisor not validated");
    Int e(1);
    for (const auto& c : sd.components) e = lcm(e, c.multiplicity);
    return e;
}

Int component_count(const StratifiedDivisor& sd, long id) {
    if (!sd.validated) throw std::invalid_argument("component_count: divisor not validated");
    auto strata = sd.strata_containing(id);
    if (strata.empty()) throw std::out_of_range("component_count: unknown component");
    Int g(0);
    for (const Stratum* s : strata) g = gcd(g, s->m);
    return g;
}

ComponentEuler component_euler(const StratifiedDivisor& sd, long id) {
    if (!sd.validated) throw std::invalid_argument("component_euler: divisor not validated");
    const DivisorComponent& comp = sd.component(id);
    Int c = component_count(sd, id);
    Int total(0);
    for (const Stratum* s : sd.strata_containing(id)) total += s->m * static_cast<long>(s->euler);
    if (!divides(c, total))
        throw std::domain_error("component_euler: total Euler characteristic not divisible by the component count");
    ComponentEuler out{c, divexact(total, c), std::nullopt};
    if (sd.n == 1 && comp.compact) {
        Int two_g = Int(2) - out.chi;
        if (two_g < 0 || !divides(Int(2), two_g))
            throw std::domain_error("component_euler: non-integral genus for component " + comp.name);
        out.genus = divexact(two_g, Int(2));
    }
    return out;
}

RiemannHurwitzCheck riemann_hurwitz_check(const StratifiedDivisor& sd, long id) {
    if (sd.n != 1) throw std::invalid_argument("riemann_hurwitz_check: curve case only");
    if (!sd.validated) throw std::invalid_argument("riemann_hurwitz_check: divisor not validated");
    const Int n_sheets = sd.component(id).multiplicity;
    Int chi = Int(2) * n_sheets;
    std::string detail = "N=" + n_sheets.get_str();
    for (const Stratum* s : sd.strata_containing(id)) {
        if (s->dim != 0) continue;
        chi -= make_int(s->euler) * (n_sheets - s->m);
        detail += " (" + std::to_string(s->euler) + " pts, fiber " + s->m.get_str() + ")";
    }
    ComponentEuler ce = component_euler(sd, id);
    RiemannHurwitzCheck out;
    out.cover_chi = chi;
    out.stratum_chi = ce.chi * ce.components;
    out.ok = out.cover_chi == out.stratum_chi;
    out.detail = detail;
    return out;
}

SemistableComplex build_dual_complex(const StratifiedDivisor& sd) {
    if (!sd.validated) throw std::invalid_argument("build_dual_complex: divisor not validated");
    if (sd.n > 2) throw std::invalid_argument("build_dual_complex: n <= 2 only");

    SemistableComplex k;
    k.n = sd.n;
    k.e = exponent(sd);

    std::map<long, long> vertex_of;  // component id -> family index
    for (const auto& c : sd.components) {
        CellFamily f;
        f.dim = 0;
        f.components = {c.id};
        f.label = c.name;
        f.copies = to_long(component_count(sd, c.id));
        f.compact = c.compact;
        f.in_dplus = c.role == ComponentRole::Exceptional;
        if (sd.n == 1 && c.compact) {
            ComponentEuler ce = component_euler(sd, c.id);
            f.genus = ce.genus;
        }
        vertex_of[c.id] = static_cast<long>(k.families.size());
        k.families.push_back(std::move(f));
    }

    auto is_strict = [&](long id) { return sd.component(id).role == ComponentRole::Strict; };
    auto dplus_set = [&](const std::vector<long>& ids) {
        return std::none_of(ids.begin(), ids.end(), is_strict);
    };

    std::map<std::vector<long>, long> edge_of;  // pair -> family index (n=2)
    if (sd.n == 1) {
        // one edge family per point of each double stratum
        std::map<std::vector<long>, int> seen_pairs;
        for (const auto& s : sd.strata) {
            if (s.components.size() != 2 || s.dim != 0) continue;
            seen_pairs[s.components]++;
            for (long long pt = 0; pt < s.euler; ++pt) {
                CellFamily f;
                f.dim = 1;
                f.components = s.components;
                f.label = s.singular_label + "#" + std::to_string(pt);
                f.copies = to_long(s.m);
                f.compact = true;
                f.in_dplus = dplus_set(s.components);
                f.faces = {{vertex_of.at(s.components[0]), -1}, {vertex_of.at(s.components[1]), +1}};
                k.families.push_back(std::move(f));
            }
        }
        // relative attachment offsets between parallel multi-copy orbit families
        // are not determined by the combinatorial data; refuse to guess
        for (const auto& [pair, cnt] : seen_pairs) {
            long long total = 0;
            for (const auto& s : sd.strata)
                if (s.components == pair && s.dim == 0) total += s.euler;
            if (total > 1) {
                long ca = k.families[static_cast<size_t>(vertex_of.at(pair[0]))].copies;
                long cb = k.families[static_cast<size_t>(vertex_of.at(pair[1]))].copies;
                if (ca > 1 && cb > 1)
                    throw std::domain_error(
                        "build_dual_complex: parallel edge orbits between multi-copy vertex families");
            }
        }
    } else {
        // one edge family per intersecting pair; copies = gcd of m over the closure
        std::set<std::vector<long>> pairs;
        for (const auto& s : sd.strata)
            if (s.components.size() == 2) pairs.insert(s.components);
        for (const auto& pr : pairs) {
            bool has_curve = false;
            Int c(0);
            for (const auto& s : sd.strata) {
                if (!std::includes(s.components.begin(), s.components.end(), pr.begin(), pr.end()))
                    continue;
                c = gcd(c, s.m);
                if (s.components == pr && s.dim == 1) has_curve = true;
            }
            if (!has_curve)
                throw std::domain_error("build_dual_complex: pair without a generic double curve");
            CellFamily f;
            f.dim = 1;
            f.components = pr;
            f.label = "edge";
            f.copies = to_long(c);
            f.compact = true;
            f.in_dplus = dplus_set(pr);
            f.faces = {{vertex_of.at(pr[0]), -1}, {vertex_of.at(pr[1]), +1}};
            edge_of[pr] = static_cast<long>(k.families.size());
            k.families.push_back(std::move(f));
        }
        for (const auto& s : sd.strata) {
            if (s.components.size() != 3 || s.dim != 0) continue;
            long strict_count = static_cast<long>(std::count_if(s.components.begin(),
                                                                s.components.end(), is_strict));
            if (strict_count > 1)
                throw std::domain_error("build_dual_complex: triple point with several strict components");
            for (long long pt = 0; pt < s.euler; ++pt) {
                CellFamily f;
                f.dim = 2;
                f.components = s.components;
                f.label = s.singular_label + "#" + std::to_string(pt);
                f.copies = to_long(s.m);
                f.compact = true;
                f.in_dplus = dplus_set(s.components);
                const long a = s.components[0], b = s.components[1], c3 = s.components[2];
                f.faces = {{edge_of.at({b, c3}), +1}, {edge_of.at({a, c3}), -1}, {edge_of.at({a, b}), +1}};
                k.families.push_back(std::move(f));
            }
        }
    }

    // structural checks: orbit sizes divide the exponent and face orbit sizes
    // divide the cell orbit size
    for (const auto& f : k.families) {
        if (!divides(make_int(f.copies), k.e))
            throw std::logic_error("build_dual_complex: orbit size does not divide the exponent");
        for (const auto& face : f.faces)
            if (f.copies % k.families[static_cast<size_t>(face.family)].copies != 0)
                throw std::logic_error("build_dual_complex: face orbit size does not divide the cell orbit");
    }
    return k;
}

std::string complex_to_dot(const SemistableComplex& k) {
    static const char* palette[] = {"black", "red", "blue", "forestgreen", "orange",
                                    "purple", "brown", "cadetblue"};
    std::ostringstream out;
    out << "graph dual_complex {\n";
    int color = 0;
    for (size_t i = 0; i < k.families.size(); ++i) {
        const auto& f = k.families[i];
        if (f.dim != 0) continue;
        for (long long s = 0; s < f.copies; ++s) {
            out << "  v" << i << "_" << s << " [label=\"" << f.label;
            if (f.copies > 1) out << "#" << s;
            if (f.genus) out << " g=" << f.genus->get_str();
            out << "\"";
            if (!f.compact) out << " shape=box style=dashed";
            out << "];\n";
        }
    }
    for (size_t i = 0; i < k.families.size(); ++i) {
        const auto& f = k.families[i];
        if (f.dim != 1) continue;
        const char* col = palette[color++ % 8];
        for (long long s = 0; s < f.copies; ++s) {
            const auto& a = k.families[static_cast<size_t>(f.faces[0].family)];
            const auto& b = k.families[static_cast<size_t>(f.faces[1].family)];
            out << "  v" << f.faces[0].family << "_" << (s % a.copies) << " -- v"
                << f.faces[1].family << "_" << (s % b.copies) << " [color=" << col << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

SemistableComplex complex_from_json(const std::string& text) {
    json j = json::parse(text);
    SemistableComplex k;
    k.n = j.value("n", 1);
    std::map<long, long> vertex_of;
    for (const auto& jv : j.at("vertices")) {
        CellFamily f;
        f.dim = 0;
        long id = jv.at("id").get<long>();
        f.components = {id};
        f.label = jv.value("name", "v" + std::to_string(id));
        f.copies = jv.value("copies", 1);
        f.compact = jv.value("compact", true);
        f.in_dplus = jv.value("exceptional", true);
        if (jv.contains("genus")) f.genus = make_int(jv["genus"].get<long long>());
        vertex_of[id] = static_cast<long>(k.families.size());
        k.families.push_back(std::move(f));
    }
    std::map<std::vector<long>, long> edge_of;
    if (j.contains("edges"))
        for (const auto& je : j.at("edges")) {
            CellFamily f;
            f.dim = 1;
            auto ends = je.at("ends").get<std::vector<long>>();
            if (ends.size() != 2 || ends[0] == ends[1])
                throw std::invalid_argument("complex_from_json: edge needs two distinct ends");
            f.components = {std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
            f.label = je.value("label", "e");
            f.copies = je.value("copies", 1);
            f.in_dplus = k.families[static_cast<size_t>(vertex_of.at(f.components[0]))].in_dplus &&
                         k.families[static_cast<size_t>(vertex_of.at(f.components[1]))].in_dplus;
            f.faces = {{vertex_of.at(f.components[0]), -1}, {vertex_of.at(f.components[1]), +1}};
            edge_of[f.components] = static_cast<long>(k.families.size());
            k.families.push_back(std::move(f));
        }
    if (j.contains("faces"))
        for (const auto& jf : j.at("faces")) {
            CellFamily f;
            f.dim = 2;
            auto ends = jf.at("ends").get<std::vector<long>>();
            std::sort(ends.begin(), ends.end());
            if (ends.size() != 3) throw std::invalid_argument("complex_from_json: face needs three ends");
            f.components = ends;
            f.label = jf.value("label", "f");
            f.copies = jf.value("copies", 1);
            f.faces = {{edge_of.at({ends[1], ends[2]}), +1},
                       {edge_of.at({ends[0], ends[2]}), -1},
                       {edge_of.at({ends[0], ends[1]}), +1}};
            f.in_dplus = true;
            k.families.push_back(std::move(f));
        }
    Int e(1);
    for (const auto& f : k.families) e = lcm(e, make_int(f.copies));
    k.e = j.contains("e") ? make_int(j["e"].get<long long>()) : e;
    for (const auto& f : k.families)
        if (!divides(make_int(f.copies), k.e))
            throw std::invalid_argument("complex_from_json: orbit size does not divide e");
    return k;
}

SemistableComplex load_complex(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return complex_from_json(ss.str());
}

SemistableComplex gen_chain_complex(const std::vector<std::pair<long, long>>& pq) {
    const size_t kk = pq.size();
    if (kk < 1) throw std::invalid_argument("gen_chain_complex: need at least one branch");
    SemistableComplex k;
    k.n = 1;
    for (size_t i = 0; i < kk; ++i) {
        CellFamily v;
        v.dim = 0;
        v.components = {static_cast<long>(i)};
        v.label = "D" + std::to_string(i + 1);
        v.copies = 1;
        v.in_dplus = true;
        v.genus = Int(0);
        k.families.push_back(std::move(v));
        CellFamily hat;
        hat.dim = 0;
        hat.components = {static_cast<long>(kk + i)};
        hat.label = "C" + std::to_string(i + 1);
        hat.copies = 1;
        hat.compact = false;
        hat.in_dplus = false;
        k.families.push_back(std::move(hat));
        CellFamily strict_edge;
        strict_edge.dim = 1;
        strict_edge.components = {static_cast<long>(i), static_cast<long>(kk + i)};
        strict_edge.label = "hat" + std::to_string(i + 1);
        strict_edge.copies = 1;
        strict_edge.in_dplus = false;
        strict_edge.faces = {{static_cast<long>(3 * i), -1}, {static_cast<long>(3 * i + 1), +1}};
        k.families.push_back(std::move(strict_edge));
    }
    Int e(1);
    for (size_t i = 0; i + 1 < kk; ++i) {
        long long psum = 0, qsum = 0;
        for (size_t a = 0; a <= i; ++a) psum += pq[a].first;
        for (size_t b = i + 1; b < kk; ++b) qsum += pq[b].second;
        long long ei = gcdll(psum, qsum);
        if (ei < 1) throw std::invalid_argument("gen_chain_complex: weights must be positive");
        CellFamily f;
        f.dim = 1;
        f.components = {static_cast<long>(i), static_cast<long>(i + 1)};
        f.label = "junction" + std::to_string(i + 1);
        f.copies = ei;
        f.in_dplus = true;
        f.faces = {{static_cast<long>(3 * i), -1}, {static_cast<long>(3 * (i + 1)), +1}};
        k.families.push_back(std::move(f));
        e = lcm(e, make_int(ei));
    }
    k.e = e;
    return k;
}

}  // namespace qres
