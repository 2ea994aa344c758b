#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "hopfforge/constructions.hpp"
#include "hopfforge/homology.hpp"
#include "hopfforge/hopf.hpp"
#include "hopfforge/io.hpp"

using namespace hopfforge;

TEST_CASE("bicyclic spheres carry a Hopf decomposition", "[hopf]")
{
    for (int m = 2; m <= 3; ++m) {
        auto b = bicyclic_hopf(m);
        auto r = verify_hopf(b.complex, b.pieces, 2);
        CHECK(r.valid);
        CHECK(r.union_ok);
        CHECK(r.boolean_ok);
        CHECK(r.pieces.size() == 3);
        for (const auto& p : r.pieces) {
            CHECK(p.type.ok());
            CHECK(p.circles == static_cast<int>(p.index.size()));
        }
    }
}

TEST_CASE("the 15-vertex 5-sphere pieces", "[hopf]")
{
    PieceMap pieces = s5_15_pieces();
    for (int i = 1; i <= 3; ++i)
        CHECK(pieces.at({i}) == load_dataset_orbits("s5-15-A" + std::to_string(i)).expand());
    auto r = verify_hopf(s5_15(), pieces, 3);
    CHECK(r.valid);
    REQUIRE(r.central_is_permcycle_torus);
    CHECK(*r.central_is_permcycle_torus);
    // pieces come ordered by size then lexicographically
    for (size_t i = 1; i < r.pieces.size(); ++i) {
        const auto &a = r.pieces[i - 1].index, &b = r.pieces[i].index;
        CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
}

TEST_CASE("a tampered piece is rejected", "[hopf]")
{
    auto b = bicyclic_hopf(2);
    PieceMap pieces = b.pieces;
    auto facets = pieces.at({1}).facets();
    facets.pop_back();
    pieces[{1}] = Complex::from_facets(facets);
    auto r = verify_hopf(b.complex, pieces, 2);
    CHECK_FALSE(r.valid);
    CHECK_FALSE(r.problems.empty());
}

TEST_CASE("perfect equilibrium assembly", "[hopf]")
{
    auto a1 = assemble_perfect_equilibrium(Complex::from_facets({{0, 1}, {1, 2}, {0, 2}}), 1);
    CHECK(a1.perfect.ok());
    REQUIRE(a1.complex);
    CHECK(is_isomorphic(*a1.complex, build_cp1()));

    auto a2 = assemble_perfect_equilibrium(cyclic_polytope_boundary(7, 4), 2);
    CHECK(a2.perfect.ok());
    CHECK(a2.defects.empty());
    REQUIRE(a2.complex);
    CHECK(a2.complex->f_vector() == std::vector<long long>{10, 42, 98, 105, 42});
    CHECK(a2.apexes == std::vector<Label>{7, 8, 9});
    CHECK(homology_integral(*a2.complex).betti == std::vector<long long>{1, 0, 1, 0, 1});
}

TEST_CASE("assembling the 15-vertex sphere leaves defects", "[hopf]")
{
    auto a = assemble_perfect_equilibrium(s5_15(), 3);
    CHECK_FALSE(a.perfect.ok());
    CHECK_FALSE(a.complex);
    CHECK(a.defects.orbits.size() == 3);
    for (const auto& d : a.defects.orbits) {
        CHECK(d.representative == *std::min_element(d.faces.begin(), d.faces.end()));
        CHECK(d.link_components.size() >= 2);
    }
}

TEST_CASE("assembly preconditions", "[hopf]")
{
    try {
        assemble_perfect_equilibrium(cyclic_polytope_boundary(8, 4), 2);
        FAIL("wrong vertex count accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::structure_error);
    }
}

TEST_CASE("only one candidate sphere qualifies", "[hopf]")
{
    auto r = check_no_perfect_cp3();
    CHECK(r.candidates.size() == 4);
    CHECK(r.qualifying == std::vector<std::string>{"s5-15"});
    CHECK(r.no_perfect_cp3);
    for (const auto& c : r.candidates) {
        CHECK(c.tau_invariant);
        CHECK(c.rho_invariant);
        CHECK(c.contains_torus);
        CHECK(c.multiples_contained == static_cast<int>(c.which_multiples.size()));
    }
}

TEST_CASE("barycenter rank search on 2C(1,2;7)", "[hopf]")
{
    KCyclicSpec spec{{1, 2}, 7};
    Complex c = k_cyclic_boundary(spec).complex;
    RankSearchOptions opt;
    opt.threshold = 1.1;
    auto r = barycenter_rank_search(c, spec, opt);
    REQUIRE(r.pieces);
    CHECK(verify_hopf(c, *r.pieces, 2).valid);
    for (const auto& o : r.orbits) {
        REQUIRE(o.ranks.size() == 2);
        for (double x : o.ranks) CHECK(x > 0);
    }
}

TEST_CASE("barycenter rank search on 3C(1,2,4;15)", "[hopf][slow]")
{
    KCyclicSpec spec{{1, 2, 4}, 15};
    Complex c = k_cyclic_boundary(spec).complex;
    RankSearchOptions opt;
    opt.threshold = 1.25;
    auto r = barycenter_rank_search(c, spec, opt);
    REQUIRE(r.pieces);
    CHECK(verify_hopf(c, *r.pieces, 3).valid);
}

TEST_CASE("rank search limits", "[hopf]")
{
    KCyclicSpec spec{{1, 2, 4}, 15};
    Complex c = k_cyclic_boundary(spec).complex;
    RankSearchOptions opt;
    opt.threshold = std::numeric_limits<double>::infinity();
    opt.budget = 1000;
    try {
        barycenter_rank_search(c, spec, opt);
        FAIL("budget not enforced");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::search_budget);
    }
    opt.threshold = 1.0;
    try {
        barycenter_rank_search(c, spec, opt);
        FAIL("threshold 1 accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::usage);
    }
}

TEST_CASE("equilibrium decompositions", "[hopf]")
{
    auto cp2 = build_cp2_equilibrium();
    CHECK(verify_equilibrium(cp2.complex, cp2.pieces, EquilibriumKind::complex_projective).valid);
    CHECK_FALSE(verify_equilibrium(cp2.complex, cp2.pieces, EquilibriumKind::real_projective).valid);

    Complex t5 = load_dataset_complex("rp3-12");
    auto r = verify_equilibrium(t5, apex_pieces(t5, {8, 9, 10, 11}), EquilibriumKind::real_projective);
    CHECK(r.valid);
    REQUIRE(r.restriction_ok);
    CHECK(*r.restriction_ok);

    Complex b = load_dataset_complex("rp4-21");
    CHECK(verify_equilibrium(b, apex_pieces(b, {17, 18, 19, 20, 21}), EquilibriumKind::real_projective).valid);
}

TEST_CASE("apex pieces are closed stars", "[hopf][property]")
{
    Complex t5 = load_dataset_complex("rp3-12");
    auto p = apex_pieces(t5, {8, 9, 10, 11});
    CHECK(p.size() == 4);
    for (int i = 0; i < 4; ++i) {
        const Complex& s = p.at({i});
        for (const auto& f : s.facets()) CHECK(std::find(f.begin(), f.end(), 8 + i) != f.end());
        CHECK(s == star(t5, {static_cast<Label>(8 + i)}));
    }
}
