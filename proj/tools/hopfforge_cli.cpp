#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "hopfforge/io.hpp"
#include "hopfforge/report.hpp"

using namespace hopfforge;

namespace {

struct Globals {
    int workers = 1;
    std::uint64_t seed = 0;
    long precision = 128;
    bool timing = false;
};

struct Input {
    std::string name;
    std::string sha256;
    std::string bytes;
    bool orbit = false;
    std::optional<Complex> built;
};

std::vector<mpfr_prec_t> precision_schedule(const Globals& g)
{
    auto p = static_cast<mpfr_prec_t>(g.precision);
    return {p, 2 * p, 4 * p};
}

bool looks_like_orbits(const std::string& bytes)
{
    std::istringstream in(bytes);
    std::string line;
    while (std::getline(in, line)) {
        auto p = line.find_first_not_of(" \t\r");
        if (p == std::string::npos || line[p] == '#') continue;
        return line.compare(p, 6, "orbits") == 0;
    }
    return false;
}

KCyclicSpec parse_kcyclic(const std::string& freqs, long long n)
{
    KCyclicSpec spec;
    std::istringstream in(freqs);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            spec.frequencies.push_back(std::stoll(tok));
        } catch (const std::exception&) {
            throw Error(ErrorKind::usage, "bad frequency list '" + freqs + "'");
        }
    }
    spec.n = n;
    spec.validate();
    return spec;
}

Input load_input(const std::string& what, const Globals& g)
{
    Input in;
    in.name = what;
    if (what == "-") {
        in.bytes.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else if (what.rfind("dataset:", 0) == 0) {
        std::string id = what.substr(8);
        in.bytes = dataset_bytes(id);
    } else if (what.rfind("kcyclic:", 0) == 0) {
        auto rest = what.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::usage, "expected kcyclic:<f1,f2,...>:<n>");
        long long n = 0;
        try {
            n = std::stoll(rest.substr(colon + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::usage, "bad modulus in '" + what + "'");
        }
        auto r = k_cyclic_boundary(parse_kcyclic(rest.substr(0, colon), n), precision_schedule(g),
                                   g.workers);
        if (!r.status.ok()) throw Error(ErrorKind::build_error, "k-cyclic facets not certified: " + r.status.evidence);
        in.bytes = to_scx(r.complex);
        in.built = r.complex;
    } else {
        std::ifstream f(what, std::ios::binary);
        if (!f) throw Error(ErrorKind::usage, "cannot open '" + what + "'");
        in.bytes.assign(std::istreambuf_iterator<char>(f), {});
    }
    in.sha256 = sha256_hex(in.bytes);
    in.orbit = looks_like_orbits(in.bytes);
    return in;
}

OrbitFile orbits_of(const Input& in)
{
    if (!in.orbit) throw Error(ErrorKind::usage, in.name + " is not an orbit file");
    std::istringstream s(in.bytes);
    return read_orbits(s);
}

Complex complex_of(const Input& in)
{
    if (in.built) return *in.built;
    if (in.orbit) return orbits_of(in).expand();
    std::istringstream s(in.bytes);
    return read_complex(s);
}

class Reporter {
public:
    Reporter(std::string command, const Globals& g) : command_(std::move(command)), g_(g), start_(std::chrono::steady_clock::now()) {}

    void add(const Input& in) { inputs_.push_back({{"name", in.name}, {"sha256", in.sha256}}); }

    int emit(bool verdict, json result)
    {
        json j{{"command", command_},
               {"version", version_string},
               {"inputs", inputs_},
               {"seed", g_.seed},
               {"precision_bits", g_.precision},
               {"verdict", verdict ? "success" : "failure"},
               {"result", std::move(result)}};
        if (g_.timing)
            j["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::cout << j.dump(2) << "\n";
        return verdict ? 0 : 1;
    }

private:
    std::string command_;
    const Globals& g_;
    json inputs_ = json::array();
    std::chrono::steady_clock::time_point start_;
};

void write_complex(const Complex& c, const std::string& out, const std::vector<std::string>& comments = {})
{
    if (out.empty() || out == "-") {
        write_scx(std::cout, c, comments);
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error(ErrorKind::usage, "cannot write '" + out + "'");
    write_scx(f, c, comments);
}

std::vector<Label> parse_labels(const std::string& text)
{
    std::vector<Label> out;
    std::string t = text;
    for (char& ch : t)
        if (ch == ',') ch = ' ';
    std::istringstream in(t);
    long long x;
    while (in >> x) out.push_back(static_cast<Label>(x));
    if (!in.eof()) throw Error(ErrorKind::usage, "bad label list '" + text + "'");
    return out;
}

std::map<Label, Label> involution_map(const Complex& c, const std::string& cycles, long long negate)
{
    std::map<Label, Label> m;
    if (!cycles.empty()) {
        Permutation p = Permutation::from_cycles(cycles);
        for (Label v : c.vertices()) m[v] = p(v);
    } else if (negate > 0) {
        for (Label v : c.vertices()) m[v] = v < negate ? static_cast<Label>((negate - v) % negate) : v;
    } else {
        throw Error(ErrorKind::usage, "give --involution or --negate");
    }
    return m;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hopfforge: Hopf and equilibrium triangulations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_string);
    Globals g;
    app.add_option("--workers", g.workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "seed for randomized procedures");
    app.add_option("--precision-bits", g.precision, "starting interval precision")->check(CLI::Range(32, 4096));
    app.add_flag("--timing", g.timing, "include wall time in reports");

    // build
    auto* build = app.add_subcommand("build", "build a named triangulation as SCX");
    std::string build_name, build_out, build_freqs, build_assignment;
    long long build_n = 0;
    int build_m = 0;
    build->add_option("name", build_name)
        ->required()
        ->check(CLI::IsMember({"cp1", "cp2-10", "cp3-84", "rp3-12", "rp3-11", "rp3-15fix", "rp4-nice", "rp4-16", "kcyclic",
                               "bicyclic"}));
    build->add_option("--freqs", build_freqs, "kcyclic frequencies, comma separated");
    build->add_option("--n", build_n, "kcyclic vertex count");
    build->add_option("--m", build_m, "bicyclic parameter");
    build->add_option("--assignment", build_assignment, "rp4-nice cube assignment as 20 binary digits");
    build->add_option("-o,--out", build_out, "output file");

    auto* permcycle = app.add_subcommand("expand-permcycle", "expand a permcycle to SCX");
    std::vector<int> pc_entries;
    permcycle->add_option("entries", pc_entries)->required();

    auto* orbit_expand = app.add_subcommand("orbit-expand", "expand an orbit file to SCX");
    std::string oe_in = "-";
    orbit_expand->add_option("input", oe_in);

    auto* fvector = app.add_subcommand("fvector", "print the f-vector");
    std::string fv_in = "-";
    fvector->add_option("input", fv_in);

    auto* homology = app.add_subcommand("homology", "homology profile as JSON");
    std::string hom_in = "-", hom_ring = "gf2";
    homology->add_option("input", hom_in);
    homology->add_option("--ring", hom_ring)->check(CLI::IsMember({"gf2", "int", "q"}));

    auto* manifold = app.add_subcommand("check-manifold", "combinatorial manifold check");
    std::string man_in = "-";
    bool man_boundary = false;
    int man_tries = 20;
    manifold->add_option("input", man_in);
    manifold->add_flag("--with-boundary", man_boundary);
    manifold->add_option("--tries", man_tries)->check(CLI::PositiveNumber);
    manifold->add_option("--seed", g.seed);

    auto* vhopf = app.add_subcommand("verify-hopf", "verify a Hopf decomposition");
    std::vector<std::string> vh_pos, vh_pieces;
    std::string vh_sphere;
    vhopf->add_option("inputs", vh_pos, "sphere, or piece files when --sphere is given")->required();
    vhopf->add_option("--pieces", vh_pieces, "orbit or SCX files for A_1..A_k");
    vhopf->add_option("--sphere", vh_sphere, "sphere input (path, dataset:<id> or kcyclic:<freqs>:<n>)");

    auto* vequi = app.add_subcommand("verify-equilibrium", "verify an equilibrium triangulation from its apexes");
    std::string ve_in = "-", ve_apexes;
    bool ve_real = false;
    vequi->add_option("input", ve_in);
    vequi->add_option("--apexes", ve_apexes, "apex labels, comma separated")->required();
    vequi->add_flag("--real", ve_real, "real projective space");

    auto* assemble = app.add_subcommand("assemble-equilibrium", "assemble a perfect equilibrium triangulation");
    int as_k = 0;
    std::string as_sphere, as_out;
    bool as_census = false;
    assemble->add_option("--k", as_k)->check(CLI::Range(1, 6));
    assemble->add_option("--sphere", as_sphere);
    assemble->add_option("-o,--out", as_out, "SCX output when perfect");
    assemble->add_flag("--census", as_census, "run the census over the bundled 5-sphere datasets");

    auto* search = app.add_subcommand("search-decomposition", "barycenter rank search for solid tori");
    std::string sd_spec, sd_sphere;
    double sd_threshold = 1.25;
    long long sd_budget = 100000;
    search->add_option("--spec", sd_spec, "<f1,f2,...>:<n>")->required();
    search->add_option("--threshold", sd_threshold);
    search->add_option("--budget", sd_budget)->check(CLI::PositiveNumber);
    search->add_option("--sphere", sd_sphere, "sphere input (defaults to the certified k-cyclic boundary)");

    auto* cubes = app.add_subcommand("search-cube-assignment", "exhaustive incoherent-square search");
    std::string cs_out;
    cubes->add_option("-o,--out", cs_out, "argmin list output");

    auto* tight = app.add_subcommand("verify-tight", "tightness of an embedding into a cross-polytope");
    std::string vt_in = "-", vt_emb = "cross6", vt_group;
    bool vt_dual = false;
    tight->add_option("input", vt_in);
    tight->add_option("--embedding", vt_emb)->check(CLI::IsMember({"cross6"}));
    tight->add_option("--group", vt_group, "orbit file whose permutations act on the labels");
    tight->add_flag("--paper-mode", vt_dual, "check the reduced subset schedule and cover the rest by complement duality");

    auto* kcyc = app.add_subcommand("kcyclic", "certified k-cyclic polytope boundary");
    std::string kc_freqs, kc_out;
    long long kc_n = 0;
    kcyc->add_option("--freqs", kc_freqs)->required();
    kcyc->add_option("--n", kc_n)->required();
    kcyc->add_option("-o,--out", kc_out, "SCX output");

    auto* fixed = app.add_subcommand("fixed-points", "fixed point complex of an involution");
    std::string fp_in = "-", fp_inv;
    long long fp_negate = 0;
    fixed->add_option("input", fp_in);
    fixed->add_option("--involution", fp_inv, "cycle notation");
    fixed->add_option("--negate", fp_negate, "x -> -x mod N on labels below N");

    auto* cover = app.add_subcommand("double-cover", "double cover along a nontrivial GF(2) cocycle");
    std::string dc_in = "-";
    bool dc_report = false;
    cover->add_option("input", dc_in);
    cover->add_flag("--verify-24cell", dc_report, "report the octahedral 24-cell cover instead");

    auto* quotient = app.add_subcommand("quotient", "antipodal quotient by an involution");
    std::string q_in = "-", q_inv;
    long long q_negate = 0;
    quotient->add_option("input", q_in);
    quotient->add_option("--involution", q_inv, "cycle notation");
    quotient->add_option("--negate", q_negate, "x -> -x mod N on labels below N");

    auto* iso = app.add_subcommand("isomorphic", "isomorphism test");
    std::string iso_a, iso_b;
    iso->add_option("a", iso_a)->required();
    iso->add_option("b", iso_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (build->parsed()) {
            Complex c;
            std::string note = "hopfforge build " + build_name;
            if (build_name == "cp1") c = build_cp1();
            else if (build_name == "cp2-10") c = build_cp2_equilibrium().complex;
            else if (build_name == "cp3-84") c = build_cp3_equilibrium().complex;
            else if (build_name == "rp3-12") c = build_rp3_nice_12();
            else if (build_name == "rp3-11") c = build_rp3_11();
            else if (build_name == "rp3-15fix") c = build_rp3_from_fixed_points().complex;
            else if (build_name == "rp4-16") c = build_rp4_minimal_16();
            else if (build_name == "rp4-nice") {
                std::vector<int> a(rp4_cube_count, 0);
                if (!build_assignment.empty()) {
                    if (build_assignment.size() != a.size() || build_assignment.find_first_not_of("01") != std::string::npos)
                        throw Error(ErrorKind::usage, "--assignment needs 20 binary digits");
                    for (size_t i = 0; i < a.size(); ++i) a[i] = build_assignment[i] - '0';
                }
                c = build_rp4_nice(a).complex;
            } else if (build_name == "kcyclic") {
                auto r = k_cyclic_boundary(parse_kcyclic(build_freqs, build_n),
                                           precision_schedule(g), g.workers);
                if (!r.status.ok()) {
                    std::cerr << "not certified: " << r.status.evidence << "\n";
                    return 1;
                }
                c = r.complex;
            } else {
                if (build_m < 1) throw Error(ErrorKind::usage, "bicyclic needs --m >= 1");
                c = bicyclic_hopf(build_m).complex;
            }
            write_complex(c, build_out, {note});
            return 0;
        }
        if (permcycle->parsed()) {
            write_complex(expand_permcycle(PermCycle{pc_entries}), "");
            return 0;
        }
        if (orbit_expand->parsed()) {
            write_complex(orbits_of(load_input(oe_in, g)).expand(), "");
            return 0;
        }
        if (fvector->parsed()) {
            auto f = complex_of(load_input(fv_in, g)).f_vector();
            std::cout << "(";
            for (size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
            std::cout << ")\n";
            return 0;
        }
        if (homology->parsed()) {
            Reporter rep("homology", g);
            auto in = load_input(hom_in, g);
            rep.add(in);
            Complex c = complex_of(in);
            HomologyProfile h = hom_ring == "gf2" ? betti_gf2(c) : hom_ring == "q" ? betti_rational(c) : homology_integral(c);
            return rep.emit(true, to_json(h));
        }
        if (manifold->parsed()) {
            Reporter rep("check-manifold", g);
            auto in = load_input(man_in, g);
            rep.add(in);
            ManifoldOptions opt;
            opt.with_boundary = man_boundary;
            opt.sphere.seed = g.seed;
            opt.sphere.rounds = man_tries;
            opt.sphere.workers = g.workers;
            auto r = check_manifold(complex_of(in), opt);
            return rep.emit(r.overall.ok(), to_json(r));
        }
        if (vhopf->parsed()) {
            Reporter rep("verify-hopf", g);
            std::vector<std::string> piece_inputs = vh_pieces;
            std::string sphere_input = vh_sphere;
            if (sphere_input.empty()) {
                if (vh_pos.size() != 1) throw Error(ErrorKind::usage, "give one sphere and --pieces, or pieces and --sphere");
                sphere_input = vh_pos.front();
            } else {
                piece_inputs.insert(piece_inputs.begin(), vh_pos.begin(), vh_pos.end());
            }
            if (piece_inputs.empty()) throw Error(ErrorKind::usage, "no pieces given");
            auto sin = load_input(sphere_input, g);
            rep.add(sin);
            Complex s = complex_of(sin);
            PieceMap pieces;
            for (size_t i = 0; i < piece_inputs.size(); ++i) {
                auto pin = load_input(piece_inputs[i], g);
                rep.add(pin);
                pieces[{static_cast<int>(i) + 1}] = complex_of(pin);
            }
            auto r = verify_hopf(s, pieces, static_cast<int>(piece_inputs.size()), g.seed, g.workers);
            return rep.emit(r.valid, to_json(r));
        }
        if (vequi->parsed()) {
            Reporter rep("verify-equilibrium", g);
            auto in = load_input(ve_in, g);
            rep.add(in);
            Complex c = complex_of(in);
            auto pieces = apex_pieces(c, parse_labels(ve_apexes));
            auto r = verify_equilibrium(c, pieces,
                                        ve_real ? EquilibriumKind::real_projective : EquilibriumKind::complex_projective,
                                        g.seed, g.workers);
            return rep.emit(r.valid, to_json(r));
        }
        if (assemble->parsed()) {
            Reporter rep("assemble-equilibrium", g);
            if (as_census) {
                auto r = check_no_perfect_cp3();
                return rep.emit(r.no_perfect_cp3, to_json(r));
            }
            if (as_k < 1 || as_sphere.empty()) throw Error(ErrorKind::usage, "give --k and --sphere, or --census");
            auto in = load_input(as_sphere, g);
            rep.add(in);
            auto a = assemble_perfect_equilibrium(complex_of(in), as_k);
            if (a.complex && !as_out.empty()) write_complex(*a.complex, as_out);
            return rep.emit(a.complex.has_value(), to_json(a));
        }
        if (search->parsed()) {
            Reporter rep("search-decomposition", g);
            auto colon = sd_spec.find(':');
            if (colon == std::string::npos) throw Error(ErrorKind::usage, "--spec expects <f1,f2,...>:<n>");
            KCyclicSpec spec = parse_kcyclic(sd_spec.substr(0, colon), std::stoll(sd_spec.substr(colon + 1)));
            auto sin = load_input(sd_sphere.empty() ? "kcyclic:" + sd_spec : sd_sphere, g);
            rep.add(sin);
            RankSearchOptions opt;
            opt.threshold = sd_threshold;
            opt.budget = sd_budget;
            opt.precision = static_cast<mpfr_prec_t>(g.precision);
            opt.seed = g.seed;
            opt.workers = g.workers;
            auto r = barycenter_rank_search(complex_of(sin), spec, opt);
            return rep.emit(r.pieces.has_value(), to_json(r));
        }
        if (cubes->parsed()) {
            Reporter rep("search-cube-assignment", g);
            std::cerr << "searching 2^" << rp4_cube_count << " cube assignments\n";
            auto r = search_min_incoherent(g.workers);
            std::cerr << "done: minimum " << r.minimum << ", " << r.argmins.size() << " argmins\n";
            if (!cs_out.empty()) {
                std::ofstream f(cs_out);
                if (!f) throw Error(ErrorKind::usage, "cannot write '" + cs_out + "'");
                for (auto m : r.argmins) {
                    for (int i = 0; i < rp4_cube_count; ++i) f << ((m >> i) & 1);
                    f << "\n";
                }
            }
            return rep.emit(true, to_json(r));
        }
        if (tight->parsed()) {
            Reporter rep("verify-tight", g);
            auto in = load_input(vt_in, g);
            rep.add(in);
            Complex c = complex_of(in);
            GroupAction group;
            if (!vt_group.empty()) {
                auto gin = load_input(vt_group, g);
                rep.add(gin);
                group = orbits_of(gin).action();
            } else if (in.orbit) {
                group = orbits_of(in).action();
            } else {
                group = GroupAction({Permutation::identity(static_cast<size_t>(c.max_label()) + 1)});
            }
            auto verts = c.vertices();
            if (verts.size() != 12) throw Error(ErrorKind::usage, "cross6 needs 12 vertices");
            auto emb = CrossPolytopeEmbedding::cross(6, verts.front());
            TightnessOptions opt;
            opt.duality_mode = vt_dual;
            opt.workers = g.workers;
            opt.seed = g.seed;
            auto r = verify_tightness(c, emb, group, opt);
            return rep.emit(r.tight, to_json(r));
        }
        if (kcyc->parsed()) {
            Reporter rep("kcyclic", g);
            auto r = k_cyclic_boundary(parse_kcyclic(kc_freqs, kc_n), precision_schedule(g),
                                       g.workers);
            if (!kc_out.empty()) write_complex(r.complex, kc_out);
            return rep.emit(r.status.ok(), to_json(r));
        }
        if (fixed->parsed()) {
            Complex c = complex_of(load_input(fp_in, g));
            write_complex(fixed_point_complex(c, involution_map(c, fp_inv, fp_negate)).complex, "");
            return 0;
        }
        if (cover->parsed()) {
            auto in = load_input(dc_in, g);
            Complex c = complex_of(in);
            if (dc_report) {
                Reporter rep("double-cover", g);
                rep.add(in);
                auto r = verify_24cell_cover(c);
                return rep.emit(r.status.ok(), to_json(r));
            }
            auto z = nontrivial_cocycle(c);
            if (!z) throw Error(ErrorKind::invalid_cocycle, "first GF(2) cohomology vanishes");
            write_complex(double_cover(c, *z).cover, "");
            return 0;
        }
        if (quotient->parsed()) {
            Complex c = complex_of(load_input(q_in, g));
            write_complex(antipodal_quotient(c, involution_map(c, q_inv, q_negate)), "");
            return 0;
        }
        if (iso->parsed()) {
            Reporter rep("isomorphic", g);
            auto a = load_input(iso_a, g);
            auto b = load_input(iso_b, g);
            rep.add(a);
            rep.add(b);
            auto m = find_isomorphism(complex_of(a), complex_of(b));
            json res{{"isomorphic", m.has_value()}};
            if (m) {
                json w = json::array();
                for (auto [x, y] : *m) w.push_back({x, y});
                res["witness"] = w;
            }
            return rep.emit(m.has_value(), res);
        }
    } catch (const Error& e) {
        std::cerr << "hopfforge: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::malformed_input:
        case ErrorKind::usage:
        case ErrorKind::corrupted_data:
            return 2;
        default:
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "hopfforge: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
