#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "hopfforge/constructions.hpp"
#include "hopfforge/homology.hpp"
#include "hopfforge/symmetry.hpp"

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

// annulus: triangulated band between the triangles 0 1 2 and 3 4 5
Complex annulus()
{
    return Complex::from_facets({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
}

long long alternating(const std::vector<long long>& b)
{
    long long s = 0;
    for (size_t i = 0; i < b.size(); ++i) s += (i % 2 ? -1 : 1) * b[i];
    return s;
}

} // namespace

TEST_CASE("spheres", "[homology]")
{
    for (int n = 3; n <= 8; ++n) {
        std::vector<long long> expect(static_cast<size_t>(n - 1), 0);
        expect.front() = 1;
        expect.back() += 1;
        Complex s = simplex_boundary(n);
        CHECK(betti_gf2(s).betti == expect);
        CHECK(betti_rational(s).betti == expect);
        CHECK(homology_integral(s).betti == expect);
    }
}

TEST_CASE("seven-vertex torus", "[homology]")
{
    Complex t = expand_permcycle(PermCycle{{1, 2, 4}});
    REQUIRE(t.f_vector() == std::vector<long long>{7, 21, 14});
    CHECK(betti_gf2(t).betti == std::vector<long long>{1, 2, 1});
    auto z = homology_integral(t);
    CHECK(z.betti == std::vector<long long>{1, 2, 1});
    for (const auto& tor : z.torsion) CHECK(tor.empty());
}

TEST_CASE("projective plane has Z/2 torsion", "[homology]")
{
    Complex c = rp2_6();
    CHECK(betti_gf2(c).betti == std::vector<long long>{1, 1, 1});
    CHECK(betti_rational(c).betti == std::vector<long long>{1, 0, 0});
    auto z = homology_integral(c);
    CHECK(z.betti == std::vector<long long>{1, 0, 0});
    CHECK(z.torsion == std::vector<std::vector<std::string>>{{}, {"2"}, {}});
    CHECK(z.ring == "Z");
}

TEST_CASE("three-dimensional Klein bottle", "[homology]")
{
    Complex k = expand_permcycle(PermCycle{{1, 1, 2, 5}});
    CHECK(betti_gf2(k).betti == std::vector<long long>{1, 1, 1, 1});
    CHECK(betti_rational(k).betti == std::vector<long long>{1, 1, 0, 0});
    auto z = homology_integral(k);
    CHECK(z.torsion[2] == std::vector<std::string>{"2"});
}

TEST_CASE("Euler characteristic from Betti numbers", "[homology][property]")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 30; ++t) {
        std::vector<Simplex> f;
        for (int i = 0; i < 12; ++i) {
            Simplex s;
            for (Label v = 0; v < 8; ++v)
                if (rng() % 3 == 0) s.push_back(v);
            if (!s.empty()) f.push_back(s);
        }
        if (f.empty()) continue;
        Complex c = Complex::from_facets(f);
        auto g = betti_gf2(c).betti, q = betti_rational(c).betti;
        CHECK(alternating(g) == c.euler_characteristic());
        CHECK(alternating(q) == c.euler_characteristic());
        for (size_t i = 0; i < g.size(); ++i) CHECK(g[i] >= q[i]);
        CHECK(homology_integral(c).betti == q);
    }
}

TEST_CASE("boundary ranks of a simplex boundary", "[homology]")
{
    FaceIndex fi(simplex_boundary(5));
    auto r = gf2_boundary_ranks(fi);
    // d_k of the boundary of the 4-simplex has rank C(4,k)
    CHECK(r == std::vector<long long>{0, 4, 6, 4});
    CHECK(modp_boundary_ranks(fi) == r);
    CHECK(fi.index({0, 1}) >= 0);
    CHECK(fi.index({0, 1, 2, 3, 4}) == -1);
}

TEST_CASE("induced maps in homology", "[homology]")
{
    Complex a = annulus();
    Complex inner = Complex::from_facets({{0, 1}, {1, 2}, {0, 2}});
    CHECK(induced_map_injective(inner, a, 1));
    CHECK(induced_map_injective(inner, a, 0));
    Complex disk = Complex::from_facets({{0, 1, 2}});
    CHECK_FALSE(induced_map_injective(inner, disk, 1));
    Complex two_points = Complex::from_facets({{0}, {1}});
    CHECK_FALSE(induced_map_injective(two_points, disk, 0));
}

TEST_CASE("null-homologous cycles", "[homology]")
{
    Complex a = annulus();
    CHECK_FALSE(is_null_homologous(a, boundary_chain({0, 1, 2})));
    CHECK(is_null_homologous(a, boundary_chain({0, 1, 3})));
    REQUIRE_THROWS_AS(is_null_homologous(a, {{0, 1}, {1, 2}}), Error);
    REQUIRE(boundary_chain({0, 1, 2}).size() == 3);
}
