// Command-line front end: embedded Q-resolution combinatorics in, semistable
// reduction / monodromy / mixed Hodge reports out.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qres/steenbrink.hpp"

using namespace qres;
using nlohmann::json;

namespace {

struct CliError : std::runtime_error {
    int code;
    CliError(int c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

std::vector<long> parse_longs(const std::string& s, char sep = ',') {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(std::stol(item));
    return out;
}

StratifiedDivisor from_generator(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw CliError(2, "generator spec needs name:params");
    std::string name = spec.substr(0, colon);
    std::vector<long> p = parse_longs(spec.substr(colon + 1));
    if (name == "one-branch" && p.size() == 2) return gen_one_branch(p[0], p[1]);
    if (name == "two-branch" && p.size() == 4) return gen_two_branch(p[0], p[1], p[2], p[3]);
    if (name == "yls-cusp" && p.size() == 4) return gen_yls_cusp(p[0], p[1], p[2], p[3]);
    if (name == "yls-two-branch" && p.size() == 6)
        return gen_yls_two_branch(p[0], p[1], p[2], p[3], p[4], p[5]);
    throw CliError(2, "unknown generator or wrong parameter count: " + spec);
}

struct InputOptions {
    std::string path;
    std::string gen;
    std::string complex_path;
    bool strict = true;
};

void add_input_flags(CLI::App* cmd, InputOptions& in, bool with_complex = false) {
    cmd->add_option("input", in.path, "divisor JSON file");
    cmd->add_option("--gen", in.gen, "generator spec, e.g. one-branch:2,3");
    if (with_complex)
        cmd->add_option("--complex", in.complex_path, "dual complex JSON (level-B input)");
    cmd->add_flag("--no-strict{false},--strict{true}", in.strict, "strict JSON validation");
}

StratifiedDivisor load_validated(const InputOptions& in) {
    bool strict = in.strict;
    if (const char* env = std::getenv("QRES_STRICT")) strict = std::string(env) == "1" || strict;
    StratifiedDivisor sd;
    if (!in.gen.empty() && !in.path.empty()) throw CliError(2, "choose one input source");
    if (!in.gen.empty())
        sd = from_generator(in.gen);
    else if (!in.path.empty())
        sd = load_sd(in.path, strict);
    else
        throw CliError(2, "no input given");
    ValidationReport rep = validate(sd);
    if (!rep.ok()) throw CliError(1, "validation failed:\n" + rep.str());
    return sd;
}

std::string cyclo_text(const CycloProduct& c) {
    std::string s = c.str() + "\n  canonical: " + c.str_canonical();
    if (c.is_polynomial() && c.degree() <= 24 && !c.is_one())
        s += "\n  expanded: " + c.expand().str();
    return s;
}

SurfaceAux aux_from_json(const std::string& path) {
    std::ifstream inp(path);
    if (!inp) throw CliError(2, "cannot open " + path);
    json j = json::parse(inp);
    SurfaceAux aux;
    for (auto it = j.at("h1").begin(); it != j.at("h1").end(); ++it) {
        SymbolicCyclo sc;
        const json& v = it.value();
        if (v.contains("symbol")) {
            sc.sym_name = v["symbol"].get<std::string>();
            sc.sym_power = v.value("power", 1);
        }
        if (v.contains("delta"))
            for (auto f = v["delta"].begin(); f != v["delta"].end(); ++f)
                sc.known = sc.known * CycloProduct::tm1(std::stol(f.key()), f.value().get<long long>());
        aux.h1[std::stol(it.key())] = sc;
    }
    return aux;
}

// first-blow-up surface keeps the symbolic pair invariant, the others are
// simply connected covers
SurfaceAux default_yls_aux(const StratifiedDivisor& sd) {
    SurfaceAux aux;
    bool first = true;
    for (const auto& c : sd.components) {
        if (c.role != ComponentRole::Exceptional) continue;
        aux.h1[c.id] = first ? SymbolicCyclo{CycloProduct(), 1, "H1D0"}
                             : SymbolicCyclo{CycloProduct(), 0, ""};
        first = false;
    }
    return aux;
}

int run_normalize(const std::string& type_str) {
    QuotientType t = parse_type(type_str);
    NormalizeResult r = normalize(t);
    std::cout << "input:      " << t.str() << "  order " << group_order(t).get_str() << "\n";
    std::cout << "normalized: " << r.type.str() << "  order " << group_order(r.type).get_str()
              << "\n";
    std::cout << "rescale:    (";
    for (size_t i = 0; i < r.rescale.size(); ++i)
        std::cout << (i ? "," : "") << r.rescale[i].get_str();
    std::cout << ")\n";
    return 0;
}

void print_chart(const char* name, const Chart& c) {
    std::cout << name << ": raw " << c.raw.str() << "  normalized " << c.normalized.str() << "\n";
    std::cout << "  substitution:";
    for (long i = 0; i < c.substitution.rows(); ++i) {
        std::cout << (i ? ", " : " ") << "old" << i << " =";
        for (long j = 0; j < c.substitution.cols(); ++j) {
            if (c.substitution(i, j) == 0) continue;
            std::cout << " new" << j;
            if (c.substitution(i, j) != 1) std::cout << "^" << c.substitution(i, j).get_str();
        }
    }
    std::cout << "\n";
}

int run_blowup2(const std::string& type_str, const std::string& w) {
    std::vector<long> pq = parse_longs(w);
    if (pq.size() != 2) throw CliError(2, "--w needs two weights");
    Blowup2Result r = blowup_2d(parse_type(type_str), Int(pq[0]), Int(pq[1]));
    print_chart("chart 1", r.chart1);
    print_chart("chart 2", r.chart2);
    std::cout << "exceptional: P^1 with weights (" << pq[0] << "," << pq[1] << ")\n";
    return 0;
}

int run_blowup3(const std::string& type_str, const std::string& w) {
    std::vector<long> pqr = parse_longs(w);
    if (pqr.size() != 3) throw CliError(2, "--w needs three weights");
    Blowup3Result r =
        type_str.empty()
            ? blowup_3d_smooth(Int(pqr[0]), Int(pqr[1]), Int(pqr[2]))
            : blowup_3d_quotient(parse_type(type_str), Int(pqr[0]), Int(pqr[1]), Int(pqr[2]));
    print_chart("chart 1", r.charts[0]);
    print_chart("chart 2", r.charts[1]);
    print_chart("chart 3", r.charts[2]);
    std::cout << "exceptional: " << r.exceptional.kind << " with weights (" << pqr[0] << ","
              << pqr[1] << "," << pqr[2] << ")\n";
    for (const auto& ax : r.exceptional.axes)
        std::cout << "  axis " << ax.axis << ": isotropy " << ax.isotropy.get_str() << "\n";
    return 0;
}

int run_semistable(const InputOptions& in) {
    if (!in.complex_path.empty()) {
        SemistableComplex k = load_complex(in.complex_path);
        std::cout << "covering exponent e = " << k.e.get_str() << "\n";
        CohomologyAction h = complex_cohomology_action(k, ComplexPart::DPlus);
        for (size_t d = 0; d < h.dims.size(); ++d)
            std::cout << "H^" << d << ": dim " << h.dims[d] << "  Delta = " << h.delta[d].str()
                      << "\n";
        return 0;
    }
    StratifiedDivisor sd = load_validated(in);
    std::cout << "covering exponent e = " << exponent(sd).get_str() << "\n";
    for (const auto& c : sd.components) {
        ComponentEuler ce = component_euler(sd, c.id);
        std::cout << c.name << ": components " << ce.components.get_str() << ", chi "
                  << ce.chi.get_str();
        if (ce.genus) std::cout << ", genus " << ce.genus->get_str();
        if (sd.n == 1 && c.compact && c.role == ComponentRole::Exceptional) {
            RiemannHurwitzCheck rh = riemann_hurwitz_check(sd, c.id);
            std::cout << (rh.ok ? "  [riemann-hurwitz ok]" : "  [riemann-hurwitz MISMATCH]");
            if (!rh.ok) throw CliError(2, "riemann-hurwitz mismatch on " + c.name);
        }
        std::cout << "\n";
    }
    SemistableComplex k = build_dual_complex(sd);
    for (int d = 0; d <= sd.n; ++d)
        std::cout << "cells dim " << d << ": " << k.cell_count(d, false) << " (" << k.cell_count(d, true)
                  << " exceptional)\n";
    if (sd.n == 2) {
        long f_all = static_cast<long>(k.cell_count(2, false));
        long e_all = static_cast<long>(k.cell_count(1, false));
        long v_plus = 0;
        for (const auto& f : k.families)
            if (f.dim == 0 && f.in_dplus && f.compact) v_plus += static_cast<long>(f.copies);
        Int gr4 = column_exact_solver({std::nullopt, Int(f_all), Int(e_all), Int(v_plus)});
        std::cout << "gr_4 dimension (fifth column): " << gr4.get_str() << "\n";
    }
    return 0;
}

int run_charpoly(const InputOptions& in) {
    StratifiedDivisor sd = load_validated(in);
    std::cout << "Delta(t) = " << cyclo_text(acampo_charpoly(sd)) << "\n";
    return 0;
}

int run_mhs(const InputOptions& in, const std::string& aux_path, const std::string& format) {
    StratifiedDivisor sd = load_validated(in);
    MHSReport rep;
    if (sd.n == 1) {
        rep = mhs_curve(sd);
    } else {
        SurfaceAux aux;
        if (!aux_path.empty())
            aux = aux_from_json(aux_path);
        else if (!in.gen.empty() && in.gen.rfind("yls", 0) == 0)
            aux = default_yls_aux(sd);
        else
            throw CliError(2, "surface input needs --aux");
        rep = mhs_surface_partial(sd, aux);
    }
    std::cout << (format == "json" ? rep.to_json() : rep.str());
    return 0;
}

int run_dualgraph(const InputOptions& in) {
    if (!in.complex_path.empty()) {
        std::cout << complex_to_dot(load_complex(in.complex_path));
        return 0;
    }
    std::cout << complex_to_dot(build_dual_complex(load_validated(in)));
    return 0;
}

RatMatrix matrix_from_json(const std::string& path) {
    std::ifstream inp(path);
    if (!inp) throw CliError(2, "cannot open " + path);
    json j = json::parse(inp);
    const auto& rows = j.at("rows");
    long nr = static_cast<long>(rows.size());
    long nc = nr ? static_cast<long>(rows[0].size()) : 0;
    RatMatrix m(nr, nc);
    for (long i = 0; i < nr; ++i)
        for (long c = 0; c < nc; ++c) {
            const auto& v = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (!v.is_number_integer()) throw CliError(2, "matrix entries must be integers");
            m(i, c) = Rat(make_int(v.get<long long>()));
        }
    return m;
}

long long derive_order(const Poly& p) {
    Poly rem = p;
    long long e = 1;
    long long bound = 2 * p.degree() * p.degree() + 2;
    for (long long d = 1; d <= bound && rem.degree() > 0; ++d) {
        if (euler_phi(d) > rem.degree()) continue;
        const Poly& phi = cyclotomic_poly(d);
        bool used = false;
        while (true) {
            auto [quot, r] = rem.divmod(phi);
            if (!r.is_zero()) break;
            rem = quot;
            used = true;
        }
        if (used) e = lcmll(e, d);
    }
    if (rem.degree() != 0) throw CliError(2, "characteristic polynomial is not a cyclotomic product");
    return e;
}

int run_jordan(const std::string& matrix_path, long long order, const std::string& graded_path) {
    if (!graded_path.empty()) {
        std::ifstream inp(graded_path);
        if (!inp) throw CliError(2, "cannot open " + graded_path);
        json j = json::parse(inp);
        int n = j.at("n").get<int>();
        std::map<long, CycloProduct> by_weight;
        for (auto it = j.at("weights").begin(); it != j.at("weights").end(); ++it) {
            CycloProduct c;
            for (auto f = it.value().begin(); f != it.value().end(); ++f)
                c = c * CycloProduct::tm1(std::stol(f.key()), f.value().get<long long>());
            by_weight[std::stol(it.key())] = c;
        }
        JordanBlocks jb = jordan_from_graded(graded_from_weights(n, by_weight));
        for (const auto& [l, poly] : jb.size_poly)
            std::cout << "size " << l << ": " << poly.str() << "\n";
        std::cout << "spectrum: " << jb.spectrum.str() << "\n";
        return 0;
    }
    RatMatrix m = matrix_from_json(matrix_path);
    Poly p = charpoly_exact(m);
    long long e = order > 0 ? order : derive_order(p);
    JordanSpectrum js = jordan_blocks_matrix(m, e);
    std::cout << "characteristic polynomial: " << p.str() << "\n";
    std::cout << "order: " << e << "\n";
    std::cout << "spectrum: " << js.str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact semistable-reduction and monodromy invariants of embedded Q-resolutions"};
    app.require_subcommand(1);

    std::string type_str, weights, aux_path, format = "text", matrix_path, graded_path;
    long long order = 0;
    InputOptions in;

    CLI::App* normalize_cmd = app.add_subcommand("normalize", "normalize a quotient space type");
    normalize_cmd->add_option("type", type_str, "type, e.g. \"(4;2,1)\"")->required();

    CLI::App* blowup2_cmd = app.add_subcommand("blowup2", "weighted blow-up of a surface point");
    blowup2_cmd->add_option("type", type_str)->required();
    blowup2_cmd->add_option("--w", weights, "weights p,q")->required();

    CLI::App* blowup3_cmd = app.add_subcommand("blowup3", "weighted blow-up of a 3-fold point");
    blowup3_cmd->add_option("type", type_str, "quotient type; omit for the smooth space");
    blowup3_cmd->add_option("--w", weights, "weights p,q,r")->required();

    CLI::App* validate_cmd = app.add_subcommand("validate", "check stratified divisor files");
    std::vector<std::string> batch;
    validate_cmd->add_option("inputs", batch, "divisor JSON files (processed in order)");
    validate_cmd->add_option("--gen", in.gen, "generator spec, e.g. one-branch:2,3");
    validate_cmd->add_flag("--no-strict{false},--strict{true}", in.strict, "strict JSON validation");

    CLI::App* semistable_cmd =
        app.add_subcommand("semistable", "semistable reduction combinatorics");
    add_input_flags(semistable_cmd, in, true);

    CLI::App* dualgraph_cmd = app.add_subcommand("dualgraph", "dual complex as DOT");
    add_input_flags(dualgraph_cmd, in, true);

    CLI::App* charpoly_cmd = app.add_subcommand("charpoly", "monodromy characteristic polynomial");
    add_input_flags(charpoly_cmd, in);

    CLI::App* mhs_cmd = app.add_subcommand("mhs", "mixed Hodge structure report");
    add_input_flags(mhs_cmd, in);
    mhs_cmd->add_option("--aux", aux_path, "auxiliary H^1 data for surface vertex covers");
    mhs_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* jordan_cmd = app.add_subcommand("jordan", "jordan block spectrum");
    jordan_cmd->add_option("--matrix", matrix_path, "matrix JSON {\"rows\": [[..]]}");
    jordan_cmd->add_option("--order", order, "eigenvalue order bound e");
    jordan_cmd->add_option("--graded", graded_path, "graded character data JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (normalize_cmd->parsed()) return run_normalize(type_str);
        if (blowup2_cmd->parsed()) return run_blowup2(type_str, weights);
        if (blowup3_cmd->parsed()) return run_blowup3(type_str, weights);
        if (validate_cmd->parsed()) {
            if (batch.size() > 1) {
                int worst = 0;
                for (const auto& path : batch) {
                    InputOptions one = in;
                    one.path = path;
                    try {
                        load_validated(one);
                        std::cout << path << ": ok\n";
                    } catch (const CliError& err) {
                        std::cout << path << ": " << err.what() << "\n";
                        worst = std::max(worst, err.code);
                    }
                }
                return worst;
            }
            if (batch.size() == 1) in.path = batch[0];
            load_validated(in);
            std::cout << "ok\n";
            return 0;
        }
        if (semistable_cmd->parsed()) return run_semistable(in);
        if (dualgraph_cmd->parsed()) return run_dualgraph(in);
        if (charpoly_cmd->parsed()) return run_charpoly(in);
        if (mhs_cmd->parsed()) return run_mhs(in, aux_path, format);
        if (jordan_cmd->parsed()) return run_jordan(matrix_path, order, graded_path);
    } catch (const CliError& err) {
        std::cerr << err.what() << "\n";
        return err.code;
    } catch (const std::invalid_argument& err) {
        std::cerr << "invalid input: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "internal inconsistency: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
