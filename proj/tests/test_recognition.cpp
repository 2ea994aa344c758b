#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "hopfforge/constructions.hpp"
#include "hopfforge/homology.hpp"
#include "hopfforge/recognition.hpp"

using namespace hopfforge;

namespace {

Complex simplex_boundary(int n)
{
    Simplex all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return Complex::from_facets(subsets_of_size(all, static_cast<size_t>(n - 1)));
}

Complex rp2_6()
{
    return Complex::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                 {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}});
}

Complex torus() { return expand_permcycle(PermCycle{{1, 2, 4}}); }

} // namespace

TEST_CASE("sphere recognition by bistellar flips", "[recognition]")
{
    SphereOptions opt;
    opt.seed = 1;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{7, 4}, {8, 4}, {9, 4}, {8, 5}, {10, 6}}) {
        Complex c = cyclic_polytope_boundary(n, d);
        auto st = sphere_check(c, d - 1, opt);
        CHECK(st.status == Certainty::certified);
        Complex replay = c;
        REQUIRE(replay_flips(replay, st.trace));
        CHECK(replay.num_facets() == static_cast<size_t>(d + 1));
    }
    CHECK(sphere_check(simplex_boundary(5), 3).status == Certainty::certified);
}

TEST_CASE("non-spheres are rejected", "[recognition]")
{
    CHECK(sphere_check(torus(), 2).status == Certainty::fail);
    CHECK(sphere_check(rp2_6(), 2).status == Certainty::fail);
    CHECK(sphere_check(build_rp3_nice_12(), 3).status == Certainty::fail);
    CHECK(sphere_check(simplex_boundary(5), 2).status == Certainty::fail);
}

TEST_CASE("sphere certificates are reproducible from the seed", "[recognition][property]")
{
    Complex c = cyclic_polytope_boundary(9, 4);
    SphereOptions a;
    a.seed = 42;
    SphereOptions b = a;
    b.workers = 3;
    auto x = sphere_check(c, 3, a), y = sphere_check(c, 3, b);
    CHECK(x.status == y.status);
    CHECK(x.seed == y.seed);
    CHECK(x.trace.size() == y.trace.size());
}

TEST_CASE("illegal flips are refused", "[recognition]")
{
    Complex c = simplex_boundary(5);
    std::vector<Flip> bad{{{0, 1, 2, 3}, {4}}};
    CHECK_FALSE(replay_flips(c, bad));
}

TEST_CASE("ball recognition", "[recognition]")
{
    CHECK(ball_check(Complex::from_facets({{0, 1, 2, 3}}), 3).status == Certainty::certified);
    Complex disk = Complex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}});
    CHECK(ball_check(disk, 2).status == Certainty::certified);
    CHECK(ball_check(cone(torus(), 100), 3).status == Certainty::fail);
    Complex mobius = Complex::from_facets({{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}});
    CHECK(ball_check(mobius, 2).status == Certainty::fail);
}

TEST_CASE("pseudomanifold and orientability", "[recognition]")
{
    CHECK(is_closed_pseudomanifold(torus()));
    CHECK(is_orientable(torus()));
    CHECK(is_closed_pseudomanifold(rp2_6()));
    CHECK_FALSE(is_orientable(rp2_6()));
    Complex book = Complex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK_FALSE(is_pseudomanifold_with_boundary(book));
    CHECK_FALSE(is_orientable(book));
    Complex disk = Complex::from_facets({{0, 1, 2}, {0, 2, 3}});
    CHECK(is_pseudomanifold_with_boundary(disk));
    CHECK_FALSE(is_closed_pseudomanifold(disk));
}

TEST_CASE("combinatorial manifold check", "[recognition]")
{
    auto r = check_manifold(torus());
    CHECK(r.overall.status == Certainty::certified);
    CHECK(r.vertex_links.size() == 7);
    CHECK(is_combinatorial_manifold(cyclic_polytope_boundary(8, 5)).status == Certainty::certified);
    CHECK(is_combinatorial_manifold(build_rp3_nice_12()).ok());

    // two tetrahedra sharing one vertex
    Complex pinched = Complex::from_facets({{0, 1, 2, 3}, {0, 4, 5, 6}});
    ManifoldOptions wb;
    wb.with_boundary = true;
    auto p = check_manifold(pinched, wb);
    CHECK(p.overall.status == Certainty::fail);
    CHECK(p.overall.failing_face == Simplex{0});

    Complex disk = Complex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
    CHECK(check_manifold(disk, wb).overall.ok());
    CHECK_FALSE(check_manifold(disk).overall.ok());
}

TEST_CASE("suspension of a torus is not a manifold", "[recognition]")
{
    Complex t = torus();
    Complex s = unite(cone(t, 100), cone(t, 101));
    auto r = check_manifold(s);
    CHECK(r.overall.status == Certainty::fail);
    CHECK((r.overall.failing_face == Simplex{100} || r.overall.failing_face == Simplex{101}));
}

TEST_CASE("Dehn-Sommerville residuals vanish on manifolds", "[recognition]")
{
    for (const auto& r : dehn_sommerville_residual(cyclic_polytope_boundary(9, 6), 5, 0)) CHECK(r == 0);
    for (const auto& r : dehn_sommerville_residual(torus(), 2, 0)) CHECK(r == 0);
    for (const auto& r : dehn_sommerville_residual(build_rp3_nice_12(), 3, 0)) CHECK(r == 0);
    auto h = h_vector(simplex_boundary(5), 3);
    CHECK(h == std::vector<long long>{1, 1, 1, 1, 1});
}

TEST_CASE("random discrete Morse vectors", "[recognition]")
{
    CHECK(random_discrete_morse(simplex_boundary(5), 0, 10).vector == std::vector<long long>{1, 0, 0, 1});
    CHECK(random_discrete_morse(torus(), 0, 20).vector == std::vector<long long>{1, 2, 1});
    CHECK(random_discrete_morse(Complex::from_facets({{0, 1, 2, 3}}), 0, 1).vector == std::vector<long long>{1, 0, 0, 0});
}

TEST_CASE("Morse vectors are worker independent", "[recognition][property]")
{
    Complex c = cyclic_polytope_boundary(10, 4);
    for (std::uint64_t seed : {0ull, 9ull, 1234ull}) {
        auto a = random_discrete_morse(c, seed, 12, 1);
        auto b = random_discrete_morse(c, seed, 12, 4);
        CHECK(a.vector == b.vector);
        CHECK(a.seed == b.seed);
    }
}

TEST_CASE("Morse vectors bound Betti numbers", "[recognition][property]")
{
    for (const Complex& c : {torus(), rp2_6(), build_rp3_nice_12(), cyclic_polytope_boundary(9, 4)}) {
        auto m = random_discrete_morse(c, 3, 5).vector;
        auto b = betti_gf2(c).betti;
        REQUIRE(m.size() == b.size());
        long long alt_m = 0, alt_b = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            CHECK(m[i] >= b[i]);
            alt_m += (i % 2 ? -1 : 1) * m[i];
            alt_b += (i % 2 ? -1 : 1) * b[i];
        }
        CHECK(alt_m == alt_b);
    }
}

TEST_CASE("collapsing onto a subcomplex", "[recognition]")
{
    Complex tet = Complex::from_facets({{0, 1, 2, 3}});
    auto tr = collapse_onto(tet, {0});
    REQUIRE(tr);
    CHECK(std::accumulate(tr->critical_by_dim.begin(), tr->critical_by_dim.end(), 0LL) == 0);
    // the disk collapses onto the boundary of an empty triangle only with one critical 2-cell
    Complex disk = Complex::from_facets({{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
    auto t2 = collapse_onto(disk, {0, 1, 2});
    REQUIRE(t2);
    CHECK(t2->critical_by_dim == std::vector<long long>{0, 0, 1});
    REQUIRE_THROWS_AS(collapse_onto(disk, {0, 7}), Error);
}

TEST_CASE("handlebody signatures", "[recognition]")
{
    auto b = bicyclic_hopf(2);
    const Complex& solid = b.pieces.at({1});
    CHECK(handlebody_check(solid, 2, 1).ok());
    CHECK_FALSE(handlebody_check(solid, 3, 0).ok());
    CHECK(handlebody_check(Complex::from_facets({{0, 1, 2, 3}}), 3, 0).ok());
    CHECK(handlebody_check(torus(), 0, 2).ok());
    CHECK_FALSE(handlebody_check(rp2_6(), 0, 2).ok());
}
