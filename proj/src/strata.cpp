#include "qres/strata.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qres {

using nlohmann::json;

const DivisorComponent& StratifiedDivisor::component(long id) const {
    for (const auto& c : components)
        if (c.id == id) return c;
    throw std::out_of_range("StratifiedDivisor: unknown component id " + std::to_string(id));
}

std::vector<const Stratum*> StratifiedDivisor::strata_containing(long id) const {
    std::vector<const Stratum*> out;
    for (const auto& s : strata)
        if (std::find(s.components.begin(), s.components.end(), id) != s.components.end())
            out.push_back(&s);
    return out;
}

std::string ValidationReport::str() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& i : issues) s += i.where + ": " + i.message + "\n";
    return s;
}

namespace {

std::string stratum_name(const Stratum& s) {
    std::string name = "stratum {";
    for (size_t i = 0; i < s.components.size(); ++i) {
        if (i) name += ",";
        name += std::to_string(s.components[i]);
    }
    name += "}";
    if (!s.singular_label.empty()) name += "/" + s.singular_label;
    return name;
}

MonomialGerm stratum_germ(const StratifiedDivisor& sd, const Stratum& s, long ncoords) {
    MonomialGerm germ;
    germ.exponents.assign(static_cast<size_t>(ncoords), Int(0));
    for (size_t i = 0; i < s.components.size(); ++i)
        germ.exponents[i] = s.mult.at(s.components[i]);
    (void)sd;
    return germ;
}

}  // namespace

ValidationReport validate(StratifiedDivisor& sd) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& where, const std::string& msg) {
        rep.issues.push_back({where, msg});
    };

    if (sd.n != 1 && sd.n != 2) fail("divisor", "n must be 1 or 2");

    std::set<long> ids;
    for (const auto& c : sd.components) {
        if (!ids.insert(c.id).second) fail(c.name, "duplicate component id");
        if (c.multiplicity < 1) fail(c.name, "multiplicity must be positive");
    }

    std::set<std::pair<std::vector<long>, std::string>> keys;
    std::set<std::vector<long>> id_sets;
    for (auto& s : sd.strata) {
        const std::string where = stratum_name(s);
        if (s.components.empty()) {
            fail(where, "empty component set");
            continue;
        }
        if (!std::is_sorted(s.components.begin(), s.components.end()) ||
            std::adjacent_find(s.components.begin(), s.components.end()) != s.components.end())
            fail(where, "component ids must be sorted and distinct");
        bool known = true;
        for (long id : s.components)
            if (!ids.count(id)) {
                fail(where, "unknown component id " + std::to_string(id));
                known = false;
            }
        if (!known) continue;
        if (!keys.insert({s.components, s.singular_label}).second)
            fail(where, "duplicate stratum key");
        id_sets.insert(s.components);

        if (s.dim < 0 || s.dim > sd.n) fail(where, "dim out of range");
        if (static_cast<long>(s.components.size()) + s.dim > sd.n + 1)
            fail(where, "too many components through a stratum of this dimension");
        if (s.dim == 0 && s.euler < 1) fail(where, "0-dimensional stratum needs euler >= 1");

        if (s.mult.size() != s.components.size()) {
            fail(where, "mult must list exactly the stratum components");
            continue;
        }
        bool mult_ok = true;
        for (long id : s.components) {
            auto it = s.mult.find(id);
            if (it == s.mult.end()) {
                fail(where, "missing local multiplicity for component " + std::to_string(id));
                mult_ok = false;
            } else if (it->second != sd.component(id).multiplicity) {
                fail(where, "local multiplicity disagrees with component " + std::to_string(id));
                mult_ok = false;
            }
        }
        if (!mult_ok) continue;

        if (s.declared_m && s.local_type) {
            fail(where, "declared m and local type are mutually exclusive");
            continue;
        }
        if (s.declared_m) {
            Int g(0);
            for (const auto& [id, e] : s.mult) g = gcd(g, e);
            if (*s.declared_m < 1 || !divides(*s.declared_m, g)) {
                fail(where, "declared m must be positive and divide every local multiplicity");
                continue;
            }
            s.m = *s.declared_m;
        } else {
            long ncoords = s.local_type ? s.local_type->ncoords()
                                        : static_cast<long>(s.components.size());
            if (ncoords < static_cast<long>(s.components.size())) {
                fail(where, "local type has fewer coordinates than components");
                continue;
            }
            QuotientType type = s.local_type ? *s.local_type : QuotientType::trivial(ncoords);
            MonomialGerm germ = stratum_germ(sd, s, ncoords);
            if (!is_invariant(type, germ)) {
                fail(where, "monomial germ is not invariant on the local type");
                continue;
            }
            s.m = multiplicity(type, germ);
        }
    }

    // closure consistency: all sub-intersections of a stratum's id set exist
    for (const auto& I : id_sets) {
        if (I.size() < 2) continue;
        for (size_t mask = 1; mask + 1 < (1u << I.size()); ++mask) {
            std::vector<long> sub;
            for (size_t b = 0; b < I.size(); ++b)
                if (mask & (1u << b)) sub.push_back(I[b]);
            if (!id_sets.count(sub)) {
                std::string missing = "{";
                for (size_t i = 0; i < sub.size(); ++i)
                    missing += (i ? "," : "") + std::to_string(sub[i]);
                fail("closure", "intersection " + missing + " implied but not present");
            }
        }
    }

    // each component needs its generic stratum
    for (const auto& c : sd.components)
        if (!id_sets.count({c.id})) fail(c.name, "missing generic stratum");

    // curve case: euler characteristics over each compact exceptional closure sum to 2
    if (sd.n == 1) {
        for (const auto& c : sd.components) {
            if (c.role != ComponentRole::Exceptional || !c.compact) continue;
            long long sum = 0;
            for (const Stratum* s : sd.strata_containing(c.id)) sum += s->euler;
            if (sum != 2)
                fail(c.name, "euler characteristics over the closure sum to " +
                                 std::to_string(sum) + ", expected 2");
        }
    }

    sd.validated = rep.ok();
    return rep;
}

// ---------------------------------------------------------------------------
// generators

StratifiedDivisor gen_one_branch(long p, long q) {
    if (p < 2 || q < 2) throw std::invalid_argument("gen_one_branch: need p, q >= 2");
    long g = gcdll(p, q);
    long p1 = p / g, q1 = q / g;
    Int L = Int(p1) * q1 * g;

    StratifiedDivisor sd;
    sd.n = 1;
    sd.components = {{0, "E", ComponentRole::Exceptional, true, L},
                     {1, "C", ComponentRole::Strict, false, Int(1)}};

    Stratum generic;
    generic.components = {0};
    generic.singular_label = "generic";
    generic.mult = {{0, L}};
    generic.euler = -g;
    generic.dim = 1;

    Stratum pt1;
    pt1.components = {0};
    pt1.singular_label = "pt_q1";
    pt1.local_type = QuotientType::cyclic(Int(q1), {Int(-1), Int(p1)});
    pt1.mult = {{0, L}};
    pt1.euler = 1;
    pt1.dim = 0;

    Stratum pt2;
    pt2.components = {0};
    pt2.singular_label = "pt_p1";
    pt2.local_type = QuotientType::cyclic(Int(p1), {Int(q1), Int(-1)});
    pt2.mult = {{0, L}};
    pt2.euler = 1;
    pt2.dim = 0;

    Stratum cross;
    cross.components = {0, 1};
    cross.singular_label = "crossings";
    cross.mult = {{0, L}, {1, Int(1)}};
    cross.euler = g;
    cross.dim = 0;

    Stratum strict;
    strict.components = {1};
    strict.singular_label = "generic";
    strict.mult = {{1, Int(1)}};
    strict.euler = 1 - g;  // disk germ minus the crossing points
    strict.dim = 1;

    sd.strata = {generic, pt1, pt2, cross, strict};
    return sd;
}

StratifiedDivisor gen_two_branch(long p, long q, long r, long s) {
    if (p < 1 || q < 1 || r < 1 || s < 1)
        throw std::invalid_argument("gen_two_branch: weights must be positive");
    if (gcdll(p, q) != 1 || gcdll(r, s) != 1)
        throw std::invalid_argument("gen_two_branch: branches must be reduced (coprime pairs)");
    if (p * s >= q * r) throw std::invalid_argument("gen_two_branch: need p/q < r/s");

    Int m1 = Int(p) * (q + s);
    Int m2 = Int(s) * (p + r);
    Int det = Int(q) * r - Int(p) * s;

    StratifiedDivisor sd;
    sd.n = 1;
    sd.components = {{0, "E1", ComponentRole::Exceptional, true, m1},
                     {1, "E2", ComponentRole::Exceptional, true, m2},
                     {2, "C1", ComponentRole::Strict, false, Int(1)},
                     {3, "C2", ComponentRole::Strict, false, Int(1)}};

    auto mk = [](std::vector<long> comps, std::string label, std::map<long, Int> mult,
                 long long euler, int dim) {
        Stratum s;
        s.components = std::move(comps);
        s.singular_label = std::move(label);
        s.mult = std::move(mult);
        s.euler = euler;
        s.dim = dim;
        return s;
    };

    Stratum e1 = mk({0}, "generic", {{0, m1}}, -1, 1);
    Stratum e1pt = mk({0}, "pt", {{0, m1}}, 1, 0);
    e1pt.local_type = QuotientType::cyclic(Int(p), {Int(1), Int(-q)});
    Stratum e2 = mk({1}, "generic", {{1, m2}}, -1, 1);
    Stratum e2pt = mk({1}, "pt", {{1, m2}}, 1, 0);
    e2pt.local_type = QuotientType::cyclic(Int(s), {Int(1), -det});
    Stratum qpt = mk({0, 1}, "Q", {{0, m1}, {1, m2}}, 1, 0);
    qpt.local_type = QuotientType({det, det}, IntMatrix{{Int(s), Int(-q)}, {Int(-r), Int(p)}});
    Stratum x1 = mk({0, 2}, "crossing", {{0, m1}, {2, Int(1)}}, 1, 0);
    Stratum x2 = mk({1, 3}, "crossing", {{1, m2}, {3, Int(1)}}, 1, 0);
    Stratum c1 = mk({2}, "generic", {{2, Int(1)}}, 0, 1);
    Stratum c2 = mk({3}, "generic", {{3, Int(1)}}, 0, 1);

    sd.strata = {e1, e1pt, e2, e2pt, qpt, x1, x2, c1, c2};
    return sd;
}

StratifiedDivisor gen_yls_cusp(long p, long q, long k, long m) {
    if (p < 2 || q <= p || gcdll(p, q) != 1)
        throw std::invalid_argument("gen_yls_cusp: need 2 <= p < q coprime");
    if (k < 1 || m < q) throw std::invalid_argument("gen_yls_cusp: need k >= 1 and m >= q");
    long k1 = gcdll(k, p), k2 = gcdll(k, q);
    Int wx = Int(k) * p / (k1 * k2);
    Int wy = Int(k) * q / (k1 * k2);
    Int wz = Int(p) * q / (k1 * k2);
    Int m1 = (Int(m) + k) * p * q / (k1 * k2);
    // degree-m plane curve with one cusp point of type (p, q)
    long long chi_c = 2 - static_cast<long long>(m - 1) * (m - 2) +
                      static_cast<long long>(p - 1) * (q - 1);

    StratifiedDivisor sd;
    sd.n = 2;
    sd.components = {{0, "E0", ComponentRole::Exceptional, true, Int(m)},
                     {1, "E1", ComponentRole::Exceptional, true, m1},
                     {2, "V", ComponentRole::Strict, false, Int(1)}};

    auto mk = [](std::vector<long> comps, std::string label, std::map<long, Int> mult,
                 long long euler, int dim) {
        Stratum s;
        s.components = std::move(comps);
        s.singular_label = std::move(label);
        s.mult = std::move(mult);
        s.euler = euler;
        s.dim = dim;
        return s;
    };

    std::vector<Stratum> st;
    st.push_back(mk({0}, "generic", {{0, Int(m)}}, 3 - chi_c, 2));
    st.push_back(mk({1}, "generic", {{1, m1}}, static_cast<long long>(k1) * k2, 2));
    {
        Stratum ax = mk({1}, "axis_x", {{1, m1}}, -k1, 1);
        ax.local_type = QuotientType::cyclic(Int(q) / k2, {Int(-1), wx});
        st.push_back(ax);
        Stratum ay = mk({1}, "axis_y", {{1, m1}}, -k2, 1);
        ay.local_type = QuotientType::cyclic(Int(p) / k1, {Int(-1), wy});
        st.push_back(ay);
        Stratum vz = mk({1}, "vertex_z", {{1, m1}}, 1, 0);
        vz.local_type = QuotientType::cyclic(wz, {Int(-1), wx, wy});
        st.push_back(vz);
    }
    {
        Stratum zaxis = mk({0, 1}, "generic", {{0, Int(m)}, {1, m1}}, -1, 1);
        zaxis.local_type = QuotientType::cyclic(Int(k) / (k1 * k2), {wz, Int(-1)});
        st.push_back(zaxis);
        Stratum vy = mk({0, 1}, "vertex_y", {{0, Int(m)}, {1, m1}}, 1, 0);
        vy.local_type = QuotientType::cyclic(wy, {wz, Int(-1), wx});
        st.push_back(vy);
        Stratum vx = mk({0, 1}, "vertex_x", {{0, Int(m)}, {1, m1}}, 1, 0);
        vx.local_type = QuotientType::cyclic(wx, {wz, Int(-1), wy});
        st.push_back(vx);
    }
    {
        st.push_back(mk({1, 2}, "generic", {{1, m1}, {2, Int(1)}},
                        -static_cast<long long>(k1) * k2, 1));
        Stratum cx = mk({1, 2}, "on_axis_x", {{1, m1}, {2, Int(1)}}, k1, 0);
        cx.local_type = QuotientType::cyclic(Int(q) / k2, {Int(-1), Int(0), wx});
        st.push_back(cx);
        Stratum cy = mk({1, 2}, "on_axis_y", {{1, m1}, {2, Int(1)}}, k2, 0);
        cy.local_type = QuotientType::cyclic(Int(p) / k1, {Int(-1), Int(0), wy});
        st.push_back(cy);
    }
    st.push_back(mk({0, 2}, "generic", {{0, Int(m)}, {2, Int(1)}}, chi_c - 1, 1));
    st.push_back(mk({0, 1, 2}, "triple", {{0, Int(m)}, {1, m1}, {2, Int(1)}}, 1, 0));
    st.push_back(mk({2}, "generic", {{2, Int(1)}},
                    1 - chi_c + static_cast<long long>(k1) * k2 - k1 - k2, 2));

    sd.strata = std::move(st);
    return sd;
}

StratifiedDivisor gen_yls_two_branch(long p, long q, long r, long s, long k, long m) {
    if (gcdll(p, q) != 1 || gcdll(r, s) != 1)
        throw std::invalid_argument("gen_yls_two_branch: branches must be coprime pairs");
    if (static_cast<long long>(p) * s >= static_cast<long long>(q) * r)
        throw std::invalid_argument("gen_yls_two_branch: need p/q < r/s");
    if (k < 1 || m < q + s) throw std::invalid_argument("gen_yls_two_branch: need k >= 1, m >= q+s");

    long sigma = gcdll(p, s);
    long kappa = gcdll(k, sigma);
    long long d1 = gcdll(k, static_cast<long long>(p) * (q + s));
    long long d2 = gcdll(k, static_cast<long long>(s) * (p + r));
    Int m1 = divexact((Int(m) + k) * p * (q + s), make_int(d1));
    Int m2 = divexact((Int(m) + k) * s * (p + r), make_int(d2));
    // irreducible degree-m curve, one singular point with two branches
    long long twodelta = static_cast<long long>(p - 1) * (q - 1) +
                         static_cast<long long>(r - 1) * (s - 1) +
                         2 * static_cast<long long>(p) * s;
    long long chi_c = 1 - static_cast<long long>(m - 1) * (m - 2) + twodelta;

    StratifiedDivisor sd;
    sd.n = 2;
    sd.components = {{0, "E0", ComponentRole::Exceptional, true, Int(m)},
                     {1, "E1", ComponentRole::Exceptional, true, m1},
                     {2, "E2", ComponentRole::Exceptional, true, m2},
                     {3, "V", ComponentRole::Strict, false, Int(1)}};

    auto mk = [](std::vector<long> comps, std::string label, std::map<long, Int> mult,
                 std::optional<Int> declared, long long euler, int dim) {
        Stratum s;
        s.components = std::move(comps);
        s.singular_label = std::move(label);
        s.mult = std::move(mult);
        s.declared_m = std::move(declared);
        s.euler = euler;
        s.dim = dim;
        return s;
    };

    const Int im(m), one(1);
    std::vector<Stratum> st;
    st.push_back(mk({0}, "generic", {{0, im}}, std::nullopt, 3 - chi_c, 2));
    st.push_back(mk({1}, "generic", {{1, m1}}, m1, 1, 2));
    st.push_back(mk({2}, "generic", {{2, m2}}, m2, 1, 2));
    st.push_back(mk({3}, "generic", {{3, one}}, std::nullopt, 2 - chi_c - kappa, 2));

    st.push_back(mk({0, 1}, "generic", {{0, im}, {1, m1}},
                    make_int(gcdll(m, static_cast<long long>(p) * (q + s))), -1, 1));
    st.push_back(mk({0, 1}, "far_vertex", {{0, im}, {1, m1}}, make_int(gcdll(m, q + s)), 1, 0));
    st.push_back(mk({0, 2}, "generic", {{0, im}, {2, m2}},
                    make_int(gcdll(m, static_cast<long long>(s) * (p + r))), -1, 1));
    st.push_back(mk({0, 2}, "far_vertex", {{0, im}, {2, m2}}, make_int(gcdll(m, p + r)), 1, 0));
    st.push_back(mk({1, 2}, "generic", {{1, m1}, {2, m2}}, Int(sigma) * (m + k) / kappa, -kappa, 1));
    st.push_back(mk({1, 2}, "far_vertex", {{1, m1}, {2, m2}}, Int(m) + k, 1, 0));
    st.push_back(mk({0, 1, 2}, "vertex", {{0, im}, {1, m1}, {2, m2}}, make_int(gcdll(m, sigma)), 1, 0));

    st.push_back(mk({0, 3}, "generic", {{0, im}, {3, one}}, one, chi_c - 1, 1));
    st.push_back(mk({1, 3}, "generic", {{1, m1}, {3, one}}, one, -1, 1));
    st.push_back(mk({2, 3}, "generic", {{2, m2}, {3, one}}, one, -1, 1));
    st.push_back(mk({0, 1, 3}, "crossing", {{0, im}, {1, m1}, {3, one}}, one, 1, 0));
    st.push_back(mk({0, 2, 3}, "crossing", {{0, im}, {2, m2}, {3, one}}, one, 1, 0));
    st.push_back(mk({1, 2, 3}, "crossings", {{1, m1}, {2, m2}, {3, one}}, one, kappa, 0));

    sd.strata = std::move(st);
    return sd;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json int_to_json(const Int& v) {
    if (!v.fits_slong_p()) throw std::domain_error("json: integer out of range");
    return json(static_cast<long long>(v.get_si()));
}

Int json_to_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw std::invalid_argument("json " + where + ": integer required (floats rejected)");
    return make_int(j.get<long long>());
}

void check_keys(const json& j, const std::set<std::string>& allowed, bool strict,
                const std::string& where) {
    if (!strict) return;
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::invalid_argument("json " + where + ": unknown field \"" + it.key() + "\"");
}

}  // namespace

std::string sd_to_json(const StratifiedDivisor& sd) {
    json j;
    j["n"] = sd.n;
    j["isolated"] = sd.isolated;
    j["components"] = json::array();
    for (const auto& c : sd.components) {
        json jc;
        jc["id"] = c.id;
        jc["name"] = c.name;
        jc["role"] = c.role == ComponentRole::Exceptional ? "exceptional" : "strict";
        jc["compact"] = c.compact;
        jc["multiplicity"] = int_to_json(c.multiplicity);
        j["components"].push_back(jc);
    }
    j["strata"] = json::array();
    for (const auto& s : sd.strata) {
        json js;
        js["components"] = s.components;
        if (!s.singular_label.empty()) js["singular_label"] = s.singular_label;
        if (s.local_type) {
            js["d"] = json::array();
            for (const auto& di : s.local_type->d) js["d"].push_back(int_to_json(di));
            js["A"] = json::array();
            for (long i = 0; i < s.local_type->nrows(); ++i) {
                json row = json::array();
                for (long c = 0; c < s.local_type->ncoords(); ++c)
                    row.push_back(int_to_json(s.local_type->a(i, c)));
                js["A"].push_back(row);
            }
        }
        if (s.declared_m) js["m"] = int_to_json(*s.declared_m);
        js["mult"] = json::object();
        for (const auto& [id, e] : s.mult) js["mult"][std::to_string(id)] = int_to_json(e);
        js["euler"] = s.euler;
        js["dim"] = s.dim;
        j["strata"].push_back(js);
    }
    return j.dump(2) + "\n";
}

StratifiedDivisor sd_from_json(const std::string& text, bool strict) {
    json j = json::parse(text);
    check_keys(j, {"n", "isolated", "components", "strata"}, strict, "top level");
    StratifiedDivisor sd;
    sd.n = static_cast<int>(to_long(json_to_int(j.at("n"), "n")));
    if (j.contains("isolated")) {
        if (!j["isolated"].is_boolean()) throw std::invalid_argument("json isolated: boolean required");
        sd.isolated = j["isolated"].get<bool>();
    }
    for (const auto& jc : j.at("components")) {
        check_keys(jc, {"id", "name", "role", "compact", "multiplicity"}, strict, "component");
        DivisorComponent c;
        c.id = to_long(json_to_int(jc.at("id"), "id"));
        c.name = jc.at("name").get<std::string>();
        std::string role = jc.at("role").get<std::string>();
        if (role == "exceptional")
            c.role = ComponentRole::Exceptional;
        else if (role == "strict")
            c.role = ComponentRole::Strict;
        else
            throw std::invalid_argument("json component: role must be exceptional or strict");
        if (!jc.at("compact").is_boolean())
            throw std::invalid_argument("json component: compact must be boolean");
        c.compact = jc.at("compact").get<bool>();
        c.multiplicity = json_to_int(jc.at("multiplicity"), "multiplicity");
        if (c.multiplicity < 1) throw std::invalid_argument("json component: multiplicity must be >= 1");
        sd.components.push_back(std::move(c));
    }
    for (const auto& js : j.at("strata")) {
        check_keys(js, {"components", "singular_label", "d", "A", "m", "mult", "euler", "dim"},
                   strict, "stratum");
        Stratum s;
        for (const auto& id : js.at("components")) s.components.push_back(to_long(json_to_int(id, "components")));
        if (js.contains("singular_label")) s.singular_label = js["singular_label"].get<std::string>();
        if (js.contains("d") != js.contains("A"))
            throw std::invalid_argument("json stratum: d and A must come together");
        if (js.contains("d")) {
            std::vector<Int> d;
            for (const auto& di : js["d"]) d.push_back(json_to_int(di, "d"));
            std::vector<std::vector<Int>> rows;
            for (const auto& jr : js["A"]) {
                std::vector<Int> row;
                for (const auto& e : jr) row.push_back(json_to_int(e, "A"));
                rows.push_back(std::move(row));
            }
            if (rows.empty() || rows.size() != d.size())
                throw std::invalid_argument("json stratum: A must have one row per d entry");
            IntMatrix a(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != rows[0].size())
                    throw std::invalid_argument("json stratum: ragged A");
                for (size_t c = 0; c < rows[i].size(); ++c)
                    a(static_cast<long>(i), static_cast<long>(c)) = rows[i][c];
            }
            s.local_type = QuotientType(std::move(d), std::move(a));
        }
        if (js.contains("m")) s.declared_m = json_to_int(js["m"], "m");
        for (auto it = js.at("mult").begin(); it != js.at("mult").end(); ++it)
            s.mult[std::stol(it.key())] = json_to_int(it.value(), "mult");
        s.euler = to_long(json_to_int(js.at("euler"), "euler"));
        s.dim = static_cast<int>(to_long(json_to_int(js.at("dim"), "dim")));
        sd.strata.push_back(std::move(s));
    }
    return sd;
}

StratifiedDivisor load_sd(const std::string& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return sd_from_json(ss.str(), strict);
}

void save_sd(const StratifiedDivisor& sd, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << sd_to_json(sd);
}

}  // namespace qres
