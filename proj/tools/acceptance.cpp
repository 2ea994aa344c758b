#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

#include "CLI11.hpp"

#include "hopfforge/io.hpp"
#include "hopfforge/report.hpp"

using namespace hopfforge;

namespace {

struct Outcome {
    bool pass = true;
    json detail = json::object();
    std::vector<std::string> failed;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failed.push_back(what);
        }
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_s;
    std::function<Outcome(int workers, std::uint64_t seed)> run;
};

std::vector<mpfr_prec_t> schedule() { return {128, 256, 512}; }

std::vector<std::vector<Simplex>> sorted_orbit_set(std::vector<std::vector<Simplex>> orbits)
{
    for (auto& o : orbits) std::sort(o.begin(), o.end());
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

Permutation extend(const Permutation& p, Label n, const std::vector<Label>& apex_images)
{
    std::vector<Label> img;
    for (Label x = 0; x < n; ++x) img.push_back(p(x));
    for (Label a : apex_images) img.push_back(a);
    return Permutation(img);
}

Complex s7_handlebody_union()
{
    Complex u;
    for (int i = 1; i <= 4; ++i) u = unite(u, load_dataset_complex("s7-31-A" + std::to_string(i)));
    return u;
}

Outcome permcycle_torus(int, std::uint64_t)
{
    Outcome o;
    Complex t = expand_permcycle(PermCycle{{1, 2, 4, 8}});
    auto h = betti_gf2(t);
    auto a = standard_autos(3);
    o.detail["facets"] = t.num_facets();
    o.detail["betti_gf2"] = h.betti;
    o.require(t.num_facets() == 90, "torus has 90 facets");
    o.require(h.betti == std::vector<long long>{1, 3, 3, 1}, "torus GF(2) Betti (1,3,3,1)");
    o.require(is_automorphism(t, a.tau) && is_automorphism(t, a.rho) && is_automorphism(t, a.sigma),
              "tau, rho, sigma are automorphisms");
    auto mult = solid_torus_multiples(3);
    json mf = json::array();
    for (const auto& m : mult) mf.push_back(m.num_facets());
    o.detail["multiples_facets"] = mf;
    o.require(mult.size() == 4, "four sigma-multiples");
    for (const auto& m : mult) o.require(m.num_facets() == 60, "multiple has 60 facets");
    for (size_t i = 0; i < mult.size(); ++i)
        for (size_t j = i + 1; j < mult.size(); ++j)
            o.require(intersect(mult[i], mult[j]) == t, "pairwise intersection equals the torus");
    return o;
}

Outcome s5_15_sphere(int workers, std::uint64_t seed)
{
    Outcome o;
    Complex s = s5_15();
    Complex oracle = expand_orbits(s5_15_generators(), GroupAction::cyclic(15));
    o.detail["facets"] = s.num_facets();
    o.detail["f_vector"] = s.f_vector();
    o.require(s == oracle && s == load_dataset_complex("s5-15"), "builder, dataset and orbit expansion agree");
    o.require(s.num_facets() == 200, "facet count 200");

    ManifoldOptions mopt;
    mopt.sphere.seed = seed;
    mopt.sphere.workers = workers;
    auto m = check_manifold(s, mopt);
    o.detail["manifold"] = certainty_name(m.overall.status);
    o.require(m.overall.ok(), "combinatorial manifold");
    for (const auto& [v, c] : m.vertex_links) o.require(c != Certainty::fail, "vertex link " + to_string(v));

    SphereOptions sopt;
    sopt.seed = seed;
    sopt.workers = workers;
    auto sc = sphere_check(s, 5, sopt);
    o.detail["sphere"] = to_json(sc);
    o.require(sc.status == Certainty::certified, "sphere_check certified");
    Complex replay = s;
    o.require(replay_flips(replay, sc.trace) && replay.num_facets() == 7 && replay.num_vertices() == 7,
              "flip trace reduces to the boundary of the 6-simplex");

    auto r = verify_hopf(s, s5_15_pieces(), 3, seed, workers);
    o.detail["hopf"] = to_json(r);
    o.require(r.valid, "verify_hopf valid");
    auto mult = solid_torus_multiples(3);
    std::set<size_t> matched;
    for (const auto& p : r.pieces) {
        if (p.index.size() != 2) continue;
        auto it = std::find(mult.begin(), mult.end(), p.piece);
        o.require(it != mult.end(), "A_ij is a [1,1,1,4,8]-multiple");
        if (it != mult.end()) matched.insert(static_cast<size_t>(it - mult.begin()));
    }
    o.require(matched.size() == 3, "three distinct multiples");
    return o;
}

Outcome s7_handlebodies(int workers, std::uint64_t seed)
{
    Outcome o;
    std::vector<long long> counts;
    PieceMap pieces;
    for (int i = 1; i <= 4; ++i) {
        auto orb = load_dataset_orbits("s7-31-A" + std::to_string(i));
        counts.push_back(static_cast<long long>(orb.generators.size()));
        pieces[{i}] = orb.expand();
    }
    Complex u;
    for (const auto& [w, p] : pieces) u = unite(u, p);
    o.detail["orbit_counts"] = counts;
    o.detail["f_vector"] = u.f_vector();
    o.require(counts == std::vector<long long>{127, 100, 85, 41}, "orbit counts 127/100/85/41");
    o.require(u.f_vector() == std::vector<long long>{31, 465, 4340, 21793, 54188, 69130, 43772, 10943}, "union f-vector");

    auto r = verify_hopf(u, pieces, 4, seed, workers);
    o.detail["hopf"] = to_json(r);
    o.require(r.valid, "verify_hopf valid");
    for (const auto& p : r.pieces) {
        if (p.index.size() == 1)
            o.require(p.ball_dim == 6 && p.circles == 1 && p.type.ok(), "A_i is B^6 x S^1");
        if (p.index.size() == 4)
            o.require(p.piece == expand_permcycle(PermCycle{{1, 2, 4, 8, 16}}), "central piece is the permcycle torus");
    }
    return o;
}

Outcome k_cyclic(int workers, std::uint64_t)
{
    Outcome o;
    auto r2 = k_cyclic_boundary({{1, 2}, 7}, schedule(), workers);
    Complex c74 = cyclic_polytope_boundary(7, 4);
    auto iso = find_isomorphism(r2.complex, c74);
    o.require(r2.status.status == Certainty::certified, "2C(1,2;7) certified");
    o.require(iso && relabel(r2.complex, *iso) == c74, "2C(1,2;7) isomorphic to C(7,4) with checked witness");
    if (iso) {
        json w = json::array();
        for (auto [a, b] : *iso) w.push_back({a, b});
        o.detail["witness"] = w;
    }

    auto r3 = k_cyclic_boundary({{1, 2, 4}, 15}, schedule(), workers);
    o.detail["3C_facets"] = r3.complex.num_facets();
    o.require(r3.status.status == Certainty::certified && r3.complex.num_facets() == 225, "3C(1,2,4;15) has 225 facets");

    auto r4 = k_cyclic_boundary({{1, 2, 4, 8}, 31}, schedule(), workers);
    o.detail["4C"] = to_json(r4);
    o.require(r4.status.status == Certainty::certified, "4C(1,2,4,8;31) certified");
    o.require(r4.certified_facets == static_cast<long long>(r4.complex.num_facets()), "every facet certified");
    o.require(r4.complex == s7_handlebody_union(), "facet set equals the handlebody union");
    return o;
}

Outcome cp2(int workers, std::uint64_t seed)
{
    Outcome o;
    auto b = build_cp2_equilibrium();
    const Complex& c = b.complex;
    auto h = homology_integral(c);
    o.detail["f_vector"] = c.f_vector();
    o.detail["homology"] = to_json(h);
    o.require(c.num_vertices() == 10 && c.num_facets() == 42, "10 vertices, 42 facets");
    o.require(h.betti == std::vector<long long>{1, 0, 1, 0, 1}, "integral Betti (1,0,1,0,1)");
    bool torsion_free = std::all_of(h.torsion.begin(), h.torsion.end(), [](const auto& t) { return t.empty(); });
    o.require(torsion_free, "no torsion");

    auto r = verify_equilibrium(c, b.pieces, EquilibriumKind::complex_projective, seed, workers);
    o.detail["equilibrium"] = to_json(r);
    o.require(r.valid, "verify_equilibrium valid");
    auto ra = verify_equilibrium(c, apex_pieces(c, {7, 8, 9}), EquilibriumKind::complex_projective, seed, workers);
    o.require(ra.valid, "zones are the apex stars");

    auto a = standard_autos(2);
    Permutation tau = extend(a.tau, 7, {7, 8, 9});
    Permutation rho = extend(a.rho, 7, {7, 8, 9});
    Permutation sigma = extend(a.sigma, 7, {8, 9, 7});
    o.require(is_automorphism(c, tau) && is_automorphism(c, rho), "tau and rho fix the apexes");
    o.require(is_automorphism(c, sigma), "sigma cycles the apexes");
    o.detail["group_order"] = GroupAction({tau, rho, sigma}).order();
    return o;
}

Outcome cp3(int workers, std::uint64_t seed)
{
    Outcome o;
    auto a = assemble_perfect_equilibrium(s5_15(), 3);
    o.detail["assembly"] = to_json(a);
    auto z15 = GroupAction::cyclic(15);
    std::vector<std::vector<Simplex>> expected, got;
    for (const Simplex& s : {Simplex{0, 5, 10}, Simplex{3, 5, 10, 12}, Simplex{5, 6, 9, 10}}) expected.push_back(z15.orbit(s));
    for (const auto& d : a.defects.orbits) got.push_back(d.faces);
    o.require(sorted_orbit_set(expected) == sorted_orbit_set(got), "defect orbits (0 5 10), (3 5 5' 3'), (5 6 6' 5')");

    auto b = build_cp3_equilibrium();
    o.detail["f_vector"] = b.complex.f_vector();
    o.require(b.complex.num_vertices() == 84, "84 vertices");
    ManifoldOptions mopt;
    mopt.sphere.seed = seed;
    mopt.sphere.workers = workers;
    auto m = check_manifold(b.complex, mopt);
    o.detail["manifold"] = to_json(m);
    o.require(m.overall.ok(), "combinatorial manifold");
    for (const auto& l : m.by_link_dim) {
        if (l.link_dim <= 4) o.require(l.worst() == Certainty::certified, "links of dim <= 4 certified");
        else o.require(l.worst() != Certainty::fail, "dim-5 links pass");
    }
    auto h = betti_rational(b.complex);
    o.detail["betti_q"] = h.betti;
    o.require(h.betti == std::vector<long long>{1, 0, 1, 0, 1, 0, 1}, "rational Betti of CP^3");
    return o;
}

Outcome rp3(int, std::uint64_t)
{
    Outcome o;
    Complex r12 = build_rp3_nice_12();
    Complex r11 = build_rp3_11();
    o.detail["f12"] = r12.f_vector();
    o.detail["f11"] = r11.f_vector();
    o.require(is_isomorphic(r12, load_dataset_complex("rp3-12")), "12-vertex build matches the rp3-12 dataset");
    o.require(r12.f_vector() == std::vector<long long>{12, 60, 96, 48}, "f-vector (12,60,96,48)");
    o.require(r11.f_vector() == std::vector<long long>{11, 52, 82, 41}, "f-vector (11,52,82,41)");
    const std::vector<long long> rp3_betti{1, 1, 1, 1};
    o.require(betti_gf2(r12).betti == rp3_betti && betti_gf2(r11).betti == rp3_betti, "GF(2) Betti (1,1,1,1)");
    auto cv = verify_24cell_cover(r12);
    o.detail["cover"] = to_json(cv);
    o.require(cv.status.ok() && cv.vertices == 24 && cv.octahedra == 24 && cv.vertex_links_cubes,
              "24-cell cover with cube vertex links");
    return o;
}

Outcome rp4_nice(int workers, std::uint64_t)
{
    Outcome o;
    std::vector<int> zero(rp4_cube_count, 0);
    o.require(count_incoherent(zero) == 20, "all-zero assignment has 20 incoherent squares");
    auto s = search_min_incoherent(workers);
    o.detail["search"] = to_json(s);
    o.require(s.minimum == 20, "exhaustive minimum is 20");

    auto b = build_rp4_nice(zero);
    o.detail["skeleton3"] = b.skeleton3.f_vector();
    o.detail["f_vector"] = b.complex.f_vector();
    o.require(b.skeleton3.f_vector() == std::vector<long long>{16, 100, 200, 120}, "3-skeleton f-vector");
    o.require(!b.adaptors.empty(), "adaptors present");
    for (const auto& ad : b.adaptors) {
        auto it = b.adaptor_cubes.find(ad);
        o.require(it != b.adaptor_cubes.end() && it->second.size() == 2, "adaptor in exactly two 4-cube spheres");
    }
    o.require(b.complex.f_vector() == std::vector<long long>{21, 180, 520, 600, 240}, "f-vector (21,180,520,600,240)");
    o.require(is_isomorphic(b.complex, load_dataset_complex("rp4-21")), "isomorphic to the rp4-21 dataset");
    auto h = homology_integral(b.complex);
    o.detail["homology"] = to_json(h);
    using T = std::vector<std::vector<std::string>>;
    o.require(h.betti == std::vector<long long>{1, 0, 0, 0, 0} && h.torsion == T{{}, {"2"}, {}, {"2"}, {}},
              "H1 = H3 = Z/2");
    o.require(b.complex.euler_characteristic() == 1, "chi = 1");

    auto kb = extract_klein_bottles(b);
    const Complex& k3 = kb.hypersurface;
    o.detail["klein_f_vector"] = k3.f_vector();
    o.require(k3.dim() == 3 && is_closed_pseudomanifold(k3), "Klein bottle closed");
    o.require(!is_orientable(k3), "Klein bottle nonorientable");
    o.require(k3.euler_characteristic() == 0, "Klein bottle chi = 0");
    o.require(betti_gf2(k3) == betti_gf2(expand_permcycle(PermCycle{{1, 1, 2, 5}})), "GF(2) homology of [1,1,2,5]");
    return o;
}

Outcome rp4_minimal(int, std::uint64_t)
{
    Outcome o;
    auto v = verify_polytope_facets();
    o.detail["polytope"] = to_json(v);
    o.require(v.status.status == Certainty::certified, "exact facet verification");
    QSqrt5 r5 = QSqrt5::sqrt5();
    o.require(v.n1_offset == QSqrt5(6) / r5, "N1.x = 6/sqrt5");
    o.require(v.n2_offset == QSqrt5(3) / (QSqrt5(3) - r5), "N2.x = 3/(3-sqrt5)");
    auto up = v.orbit_sizes_upstairs;
    std::sort(up.begin(), up.end());
    o.require(up == std::vector<long long>{60, 240}, "orbits 60 + 240");
    o.require(v.upstairs.num_facets() == 300 && is_closed_pseudomanifold(v.upstairs), "every ridge in two facets");
    o.require(v.quotient.f_vector() == std::vector<long long>{16, 120, 330, 375, 150}, "quotient f-vector");
    o.require(v.quotient.f_vector()[1] == 16 * 15 / 2, "2-neighbourly");
    o.require(is_isomorphic(v.quotient, build_rp4_minimal_16()), "isomorphic to the <T,S> presentation");
    return o;
}

Outcome tightness(int workers, std::uint64_t seed)
{
    Outcome o;
    auto orb = load_dataset_orbits("p12");
    Complex c = orb.expand();
    auto emb = CrossPolytopeEmbedding::cross(6, 1);
    for (bool dual : {false, true}) {
        TightnessOptions opt;
        opt.duality_mode = dual;
        opt.workers = workers;
        opt.seed = seed;
        auto r = verify_tightness(c, emb, orb.action(), opt);
        o.detail[dual ? "duality_mode" : "default_mode"] = to_json(r);
        o.require(r.tight, dual ? "tight in duality mode" : "tight in default mode");
        o.require(r.checked_subsets + r.dual_subsets == r.feasible_subsets, "every feasible subset covered");
        if (dual) continue;
        std::vector<long long> sizes;
        for (const auto& s : r.empty_triangles) sizes.push_back(s.size);
        std::sort(sizes.begin(), sizes.end());
        o.require(sizes == std::vector<long long>{4, 12, 24, 24}, "empty-triangle orbits (24,12,24,4)");
        o.require(r.non_complex_tetrahedron_count == 192, "192 non-complex tetrahedra");
        for (const auto& s : r.non_complex_tetrahedra)
            o.require(s.triangles_in_complex == 2 && s.empty_triangles == 2, "two triangles and two empty triangles");
    }
    auto tr = collapse_onto(c, {1, 2, 4}, {}, seed, 100);
    o.require(tr.has_value(), "collapse trace found");
    if (tr) {
        o.detail["collapse_critical"] = tr->critical_by_dim;
        o.require(tr->critical_by_dim == std::vector<long long>{0, 0, 1, 1}, "one critical tetrahedron and one triangle");
    }
    return o;
}

Outcome census(int, std::uint64_t)
{
    Outcome o;
    auto r = check_no_perfect_cp3();
    o.detail = to_json(r);
    std::vector<int> mult;
    for (const auto& c : r.candidates) mult.push_back(c.multiples_contained);
    o.require(mult == std::vector<int>{2, 3, 2, 2}, "contained multiples 2/3/2/2");
    o.require(r.qualifying == std::vector<std::string>{"s5-15"}, "only the sigma-image sphere qualifies");
    o.require(!r.defects.empty(), "assembly has defects");
    o.require(r.no_perfect_cp3, "no perfect CP^3 report");
    return o;
}

std::string fmt_seconds(double s)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(1) << s;
    return out.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hopfforge acceptance suite"};
    std::uint64_t seed = 0;
    int second_workers = 4;
    std::string report_path;
    std::vector<int> only;
    app.add_option("--seed", seed);
    app.add_option("--workers", second_workers, "worker count of the determinism rerun")->check(CLI::PositiveNumber);
    app.add_option("--report", report_path, "write per-criterion details as JSON");
    app.add_option("--only", only, "criterion numbers to run (determinism compares only those)");
    CLI11_PARSE(app, argc, argv);

    std::vector<Criterion> criteria{
        {1, "permcycle torus", 5, permcycle_torus},
        {2, "S^5_15 Hopf sphere", 120, s5_15_sphere},
        {3, "S^7 handlebody decomposition", 900, s7_handlebodies},
        {4, "k-cyclic certification", 600, k_cyclic},
        {5, "CP^2 equilibrium", 5, cp2},
        {6, "CP^3 defects and repair", 600, cp3},
        {7, "RP^3 builds and 24-cell cover", 30, rp3},
        {8, "RP^4 nice equilibrium", 600, rp4_nice},
        {9, "RP^4 minimal polytope quotient", 120, rp4_minimal},
        {10, "tightness of P12 in the cross-polytope", 300, tightness},
        {11, "no perfect CP^3 census", 300, census},
    };
    auto selected = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };

    json report = json::object();
    std::map<int, std::string> digests;
    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected(c.id)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run(1, seed);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(dt < c.limit_s, "time limit " + fmt_seconds(c.limit_s) + " s");
        digests[c.id] = sha256_hex(o.detail.dump());
        report[std::to_string(c.id)] = {{"name", c.name}, {"pass", o.pass}, {"failed", o.failed}, {"detail", o.detail}};
        if (!o.pass) ++failures;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << " (" << fmt_seconds(dt) << " s)";
        for (const auto& f : o.failed) std::cout << " [" << f << "]";
        std::cout << std::endl;
    }

    if (selected(12)) {
        std::vector<int> differing;
        for (const auto& c : criteria) {
            if (!selected(c.id)) continue;
            std::string d;
            try {
                d = sha256_hex(c.run(second_workers, seed).detail.dump());
            } catch (const std::exception& e) {
                d = std::string("exception: ") + e.what();
            }
            if (d != digests[c.id]) differing.push_back(c.id);
        }
        bool ok = differing.empty();
        if (!ok) ++failures;
        std::cout << (ok ? "PASS" : "FAIL") << " 12 determinism for --workers 1 and " << second_workers;
        for (int id : differing) std::cout << " [criterion " << id << " differs]";
        std::cout << std::endl;
        report["12"] = {{"pass", ok}, {"differing", differing}, {"digests", digests}};
    }

    if (!report_path.empty()) {
        std::ofstream f(report_path);
        f << report.dump(2) << "\n";
    }
    return failures ? 1 : 0;
}
