#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "hopfforge/constructions.hpp"
#include "hopfforge/homology.hpp"
#include "hopfforge/io.hpp"

using namespace hopfforge;

namespace {

// Gale's evenness condition checked directly on every d-subset.
std::set<Simplex> gale_oracle(int n, int d)
{
    std::set<Simplex> out;
    Simplex all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    for (const auto& s : subsets_of_size(all, static_cast<size_t>(d))) {
        std::set<Label> in(s.begin(), s.end());
        bool ok = true;
        for (Label i = 0; i < n && ok; ++i)
            for (Label j = i + 1; j < n && ok; ++j) {
                if (in.count(i) || in.count(j)) continue;
                int between = 0;
                for (Label x = i + 1; x < j; ++x) between += static_cast<int>(in.count(x));
                ok = between % 2 == 0;
            }
        if (ok) out.insert(s);
    }
    return out;
}

bool equal_up_to_multiplier(const Complex& a, const Complex& b, Label n)
{
    for (Label m = 1; m < n; ++m) {
        if (std::gcd(m, n) != 1) continue;
        if (apply_perm(a, multiplier(n, m)) == b) return true;
    }
    return false;
}

} // namespace

TEST_CASE("cyclic polytopes satisfy Gale evenness", "[constructions]")
{
    for (auto [n, d] : std::vector<std::pair<int, int>>{{7, 4}, {8, 4}, {9, 4}, {8, 5}, {9, 6}, {10, 6}, {9, 3}}) {
        Complex c = cyclic_polytope_boundary(n, d);
        CHECK(std::set<Simplex>(c.facets().begin(), c.facets().end()) == gale_oracle(n, d));
        CHECK(is_closed_pseudomanifold(c));
    }
    CHECK(cyclic_polytope_boundary(8, 4).num_facets() == 20);
    CHECK(cyclic_polytope_boundary(10, 6).num_facets() == 50);
}

TEST_CASE("k-cyclic polytopes", "[constructions]")
{
    auto r2 = k_cyclic_boundary({{1, 2}, 7});
    CHECK(r2.status.status == Certainty::certified);
    CHECK(is_isomorphic(r2.complex, cyclic_polytope_boundary(7, 4)));
    CHECK(r2.complex.f_vector()[1] == 21);

    auto r3 = k_cyclic_boundary({{1, 2, 4}, 15});
    CHECK(r3.status.status == Certainty::certified);
    CHECK(r3.complex.num_facets() == 225);
    CHECK(r3.certified_facets == 225);
    CHECK(is_closed_pseudomanifold(r3.complex));
    CHECK(r3.complex.f_vector()[1] == 105);
}

TEST_CASE("k-cyclic certification is worker independent", "[constructions][property]")
{
    auto a = k_cyclic_boundary({{1, 3, 4}, 15}, {128, 256, 512}, 1);
    auto b = k_cyclic_boundary({{1, 3, 4}, 15}, {128, 256, 512}, 3);
    CHECK(a.complex == b.complex);
    CHECK(a.max_precision_used == b.max_precision_used);
}

TEST_CASE("k-cyclic spec validation", "[constructions]")
{
    REQUIRE_THROWS_AS(KCyclicSpec({{}, 7}).validate(), Error);
    REQUIRE_THROWS_AS(KCyclicSpec({{1, 2}, 4}).validate(), Error);
    REQUIRE_THROWS_AS(KCyclicSpec({{1, 8}, 7}).validate(), Error);
    REQUIRE_THROWS_AS(KCyclicSpec({{0, 2}, 7}).validate(), Error);
    REQUIRE_NOTHROW(KCyclicSpec({{1, 2}, 7}).validate());
}

TEST_CASE("bundled 5-spheres are 3-cyclic up to multipliers", "[constructions]")
{
    Complex c124 = k_cyclic_boundary({{1, 2, 4}, 15}).complex;
    Complex c134 = k_cyclic_boundary({{1, 3, 4}, 15}).complex;
    CHECK(equal_up_to_multiplier(load_dataset_complex("s5-15-2-2"), c124, 15));
    CHECK(equal_up_to_multiplier(load_dataset_complex("s5-15-7-1"), c134, 15));
    for (const char* id : {"s5-15", "s5-15-2-2", "s5-15-7-1", "s5-15-7-3"}) {
        Complex s = load_dataset_complex(id);
        CHECK(is_closed_pseudomanifold(s));
        CHECK(betti_gf2(s).betti == std::vector<long long>{1, 0, 0, 0, 0, 1});
    }
}

TEST_CASE("S^5_15 has 200 facets", "[constructions]")
{
    Complex s = s5_15();
    CHECK(s.num_facets() == 200);
    CHECK(s.f_vector() == std::vector<long long>{15, 105, 380, 690, 600, 200});
    // the short orbit
    CHECK(GroupAction::cyclic(15).orbit({0, 1, 5, 6, 10, 11}).size() == 5);
    CHECK(s5_15_generators().size() == 14);
}

TEST_CASE("bicyclic Hopf spheres", "[constructions]")
{
    for (int m = 2; m <= 3; ++m) {
        auto b = bicyclic_hopf(m);
        int n = m * m + m + 1;
        CHECK(b.complex.num_vertices() == static_cast<size_t>(n));
        CHECK(is_closed_pseudomanifold(b.complex));
        CHECK(betti_gf2(b.complex).betti == std::vector<long long>{1, 0, 0, 1});
        CHECK(unite(b.pieces.at({1}), b.pieces.at({2})) == b.complex);
    }
}

TEST_CASE("complex projective builds", "[constructions]")
{
    Complex cp1 = build_cp1();
    CHECK(cp1.f_vector() == std::vector<long long>{5, 9, 6});
    CHECK(sphere_check(cp1, 2).status == Certainty::certified);

    auto cp2 = build_cp2_equilibrium();
    CHECK(cp2.complex.f_vector() == std::vector<long long>{10, 42, 98, 105, 42});
    CHECK(cp2.complex.euler_characteristic() == 3);
    CHECK(is_combinatorial_manifold(cp2.complex).status == Certainty::certified);
}

TEST_CASE("CP^3 build", "[constructions][slow]")
{
    auto b = build_cp3_equilibrium();
    CHECK(b.complex.f_vector() == std::vector<long long>{84, 914, 4432, 11250, 15532, 11032, 3152});
    CHECK(b.complex.euler_characteristic() == 4);
    CHECK(is_closed_pseudomanifold(b.complex));
    CHECK(b.pre_repair.num_vertices() == 19);
    CHECK(b.subdivided.size() == 84 - 19);
}

TEST_CASE("real projective 3-space builds", "[constructions]")
{
    Complex r12 = build_rp3_nice_12();
    CHECK(r12 == load_dataset_complex("rp3-12"));
    CHECK(load_dataset_complex("rp3-12").num_facets() == 48);
    Complex r11 = build_rp3_11();
    CHECK(r11.f_vector() == std::vector<long long>{11, 52, 82, 41});
    CHECK(is_combinatorial_manifold(r11).ok());

    auto fixed = build_rp3_from_fixed_points();
    CHECK(fixed.complex.f_vector() == std::vector<long long>{15, 75, 120, 60});
    CHECK(fixed.defect_edges == std::vector<Simplex>{{0, 5}, {3, 5}, {5, 6}});
    CHECK(is_isomorphic(fixed.complex, rp3_from_cp3_fixed_set()));
    CHECK(betti_gf2(fixed.complex).betti == std::vector<long long>{1, 1, 1, 1});
    CHECK(is_combinatorial_manifold(fixed.complex).ok());
}

TEST_CASE("pyramid decompositions", "[constructions]")
{
    for (int k = 1; k <= 4; ++k) {
        auto p = pyramid_decomposition(k);
        CHECK(p.pyramids.size() == static_cast<size_t>(2 * k * (k + 1)));
        CHECK(p.num_vertices == (1 << k) + k + 1);
        for (const auto& [base, apex] : p.pyramids) {
            CHECK(base.size() == static_cast<size_t>(1 << (k - 1)));
            CHECK(apex >= (1 << k));
        }
    }
    CHECK(quotient_corner(0, 3) == 0);
    CHECK(quotient_corner(7, 3) == 0);
    CHECK(quotient_corner(5, 3) == 2);
}

TEST_CASE("flat adaptors", "[constructions]")
{
    CHECK(flat_adaptor({0, 1, 2, 3}, {0, 3}, {1, 2}) == Simplex{0, 1, 2, 3});
    REQUIRE_THROWS_AS(flat_adaptor({0, 1, 2, 3}, {0, 3}, {0, 3}), Error);
}

TEST_CASE("RP^4 nice equilibrium", "[constructions]")
{
    std::vector<int> zero(rp4_cube_count, 0);
    auto b = build_rp4_nice(zero);
    CHECK(b.incoherent == 20);
    CHECK(b.complex.f_vector() == std::vector<long long>{21, 180, 520, 600, 240});
    CHECK(is_isomorphic(b.complex, load_dataset_complex("rp4-21")));
    CHECK(b.cube4_spheres.size() == 5);
    for (const auto& s : b.cube4_spheres) CHECK(betti_gf2(s).betti == std::vector<long long>{1, 0, 0, 1});
    REQUIRE_THROWS_AS(build_rp4_nice(std::vector<int>(3, 0)), Error);
}

TEST_CASE("incoherence counts are invariant under flipping every cube", "[constructions][property]")
{
    for (std::uint32_t mask : {0u, 1u, 0x5a5a5u, 0xfffffu, 0x12345u}) {
        std::vector<int> a(rp4_cube_count), b(rp4_cube_count);
        for (int i = 0; i < rp4_cube_count; ++i) {
            a[i] = (mask >> i) & 1;
            b[i] = 1 - a[i];
        }
        CHECK(count_incoherent(a) == count_incoherent(b));
    }
}

TEST_CASE("RP^4 16-vertex polytope quotient", "[constructions]")
{
    Complex c = build_rp4_minimal_16();
    CHECK(c.f_vector() == std::vector<long long>{16, 120, 330, 375, 150});
    auto h = homology_integral(c);
    CHECK(h.torsion[1] == std::vector<std::string>{"2"});
    CHECK(h.torsion[3] == std::vector<std::string>{"2"});
}

TEST_CASE("octahedral cells and the 24-cell cover", "[constructions]")
{
    auto oct = octahedralize(build_rp3_nice_12());
    CHECK(oct.cells.size() == 12);
    for (const auto& cell : oct.cells) {
        CHECK(cell.vertices.size() == 6);
        CHECK(cell.opposite.size() == 3);
    }
    auto r = verify_24cell_cover(load_dataset_complex("p12"));
    CHECK(r.status.ok());
    CHECK(r.vertices == 24);
    CHECK(r.octahedra == 24);
    CHECK(r.vertex_links_cubes);
    Complex d4;
    {
        Simplex all{0, 1, 2, 3, 4};
        d4 = Complex::from_facets(subsets_of_size(all, 4));
    }
    try {
        verify_24cell_cover(d4);
        FAIL("accepted the boundary of the 4-simplex");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::structure_error);
    }
}

TEST_CASE("nontrivial cocycles", "[constructions]")
{
    CHECK(nontrivial_cocycle(build_rp3_nice_12()).has_value());
    CHECK_FALSE(nontrivial_cocycle(cyclic_polytope_boundary(7, 4)).has_value());
}

TEST_CASE("bundled datasets", "[io]")
{
    Complex b = load_dataset_complex("rp4-21");
    CHECK(b.num_facets() == 240);
    CHECK(b.num_vertices() == 21);
    auto c = load_dataset_orbits("d6-31");
    CHECK(c.generators.size() == 30);
    CHECK(c.expand().f_vector() == std::vector<long long>{31, 465, 2294, 5332, 6417, 3875, 930});
    for (const auto& e : dataset_manifest()) CHECK(dataset_checksum(e.id) == e.sha256);
    REQUIRE_THROWS_AS(load_dataset_complex("no-such-dataset"), Error);
}

TEST_CASE("corrupted datasets are refused", "[io]")
{
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "hopfforge-corrupt-test";
    fs::remove_all(tmp);
    fs::copy(data_dir(), tmp);
    {
        std::ofstream f(tmp / "rp3-12.scx", std::ios::app);
        f << "# tampered\n";
    }
    std::string old = data_dir();
    setenv("HOPFFORGE_DATA", tmp.c_str(), 1);
    try {
        load_dataset_complex("rp3-12");
        FAIL("tampered dataset accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::corrupted_data);
    }
    CHECK_NOTHROW(load_dataset_complex("rp4-21"));
    setenv("HOPFFORGE_DATA", old.c_str(), 1);
    fs::remove_all(tmp);
    CHECK_NOTHROW(load_dataset_complex("rp3-12"));
}

TEST_CASE("orbit files round trip", "[io]")
{
    auto o = load_dataset_orbits("p12");
    std::ostringstream out;
    write_orbits(out, o);
    std::istringstream in(out.str());
    auto back = read_orbits(in);
    CHECK(back.n == o.n);
    CHECK(back.generators == o.generators);
    CHECK(back.expand() == o.expand());
    std::istringstream bad("orbits n=7 group=cyclic\n0 1 9\n");
    REQUIRE_THROWS_AS(read_orbits(bad), Error);
}
