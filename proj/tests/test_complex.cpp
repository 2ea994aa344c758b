#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hopfforge/complex.hpp"
#include "hopfforge/constructions.hpp"
#include "hopfforge/homology.hpp"
#include "hopfforge/io.hpp"

using namespace hopfforge;

namespace {

long long binom(long long n, long long k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

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

// Vertices from the coordinates (0, +-1, +-phi) and cyclic shifts; x and x+6 are antipodal.
Complex icosahedron()
{
    const double phi = (1 + std::sqrt(5.0)) / 2;
    std::vector<std::array<double, 3>> p;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int r = 0; r < 3; ++r) {
                std::array<double, 3> v{0, s1 * 1.0, s2 * phi};
                std::rotate(v.begin(), v.begin() + r, v.end());
                p.push_back(v);
            }
    std::vector<std::array<double, 3>> q(12);
    for (int i = 0; i < 6; ++i) {
        q[i] = p[i];
        q[i + 6] = {-p[i][0], -p[i][1], -p[i][2]};
    }
    auto adjacent = [&](int i, int j) {
        double d = 0;
        for (int k = 0; k < 3; ++k) d += (q[i][k] - q[j][k]) * (q[i][k] - q[j][k]);
        return std::abs(d - 4) < 1e-9;
    };
    std::vector<Simplex> f;
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            for (int k = j + 1; k < 12; ++k)
                if (adjacent(i, j) && adjacent(j, k) && adjacent(i, k)) f.push_back({i, j, k});
    return Complex::from_facets(f);
}

std::map<Label, Label> icosahedron_antipode()
{
    std::map<Label, Label> iota;
    for (Label x = 0; x < 12; ++x) iota[x] = (x + 6) % 12;
    return iota;
}

} // namespace

TEST_CASE("simplex boundary f-vectors follow binomials", "[complex]")
{
    for (int n = 2; n <= 8; ++n) {
        Complex c = simplex_boundary(n);
        auto f = c.f_vector();
        REQUIRE(f.size() == static_cast<size_t>(n - 1));
        for (int k = 0; k < n - 1; ++k) CHECK(f[k] == binom(n, k + 1));
        CHECK(c.euler_characteristic() == (n % 2 == 0 ? 2 : 0));
    }
}

TEST_CASE("from_facets keeps maximal simplices only", "[complex]")
{
    Complex c = Complex::from_facets({{0, 1, 2}, {0, 1}, {2, 3}, {3}});
    REQUIRE(c.facets() == std::vector<Simplex>{{0, 1, 2}, {2, 3}});
    CHECK_FALSE(c.is_pure());
    CHECK(c.has_face({1, 2}));
    CHECK_FALSE(c.has_face({1, 3}));
    CHECK(c.has_facet({2, 3}));
    CHECK_FALSE(c.has_facet({0, 1}));
    CHECK(c.dim() == 2);
}

TEST_CASE("make_simplex sorts and rejects repeats", "[complex]")
{
    CHECK(make_simplex({3, 1, 2}) == Simplex{1, 2, 3});
    REQUIRE_THROWS_AS(make_simplex({1, 1}), Error);
    REQUIRE_THROWS_AS(make_simplex({-1, 2}), Error);
}

TEST_CASE("link and star in a simplex boundary", "[complex]")
{
    Complex c = simplex_boundary(6);
    Complex lk = link(c, {0, 1});
    CHECK(is_isomorphic(lk, simplex_boundary(4)));
    CHECK(lk.num_vertices() == 4);
    Complex st = star(c, {0});
    CHECK(st.num_facets() == 5);
    REQUIRE_THROWS_AS(link(c, {0, 1, 2, 3, 4, 5}), Error);
}

TEST_CASE("stellar subdivision preserves Euler characteristic and homology", "[complex]")
{
    Complex c = rp2_6();
    auto h = betti_gf2(c);
    for (const auto& s : std::vector<Simplex>{{1}, {1, 2}, {1, 2, 3}}) {
        Complex d = stellar_subdivide(c, s, 100);
        CHECK(d.euler_characteristic() == c.euler_characteristic());
        CHECK(betti_gf2(d) == h);
        CHECK(d.num_vertices() == (s.size() == 1 ? 6u : 7u));
    }
    REQUIRE_THROWS_AS(stellar_subdivide(c, {1, 2}, 3), Error);
    REQUIRE_THROWS_AS(stellar_subdivide(c, {1, 9}, 100), Error);
}

TEST_CASE("cone adds one vertex and is contractible", "[complex]")
{
    Complex c = cone(rp2_6(), 0);
    CHECK(c.num_vertices() == 7);
    CHECK(betti_gf2(c).betti == std::vector<long long>{1, 0, 0, 0});
    REQUIRE_THROWS_AS(cone(rp2_6(), 1), Error);
}

TEST_CASE("union and intersection", "[complex]")
{
    Complex a = Complex::from_facets({{0, 1, 2}, {1, 2, 3}});
    Complex b = Complex::from_facets({{1, 2, 3}, {2, 3, 4}});
    CHECK(unite(a, b).num_facets() == 3);
    CHECK(intersect(a, b) == Complex::from_facets({{1, 2, 3}}));
    CHECK(is_subcomplex(intersect(a, b), a));
    CHECK_FALSE(is_subcomplex(b, a));
    Complex c = Complex::from_facets({{0, 1}, {1, 2}});
    Complex d = Complex::from_facets({{0, 2}});
    CHECK(intersect(c, d) == Complex::from_facets({{0}, {2}}));
}

TEST_CASE("relabel and isomorphism", "[complex]")
{
    Complex c = rp2_6();
    std::vector<Label> perm{0, 4, 6, 1, 3, 2, 5};
    Complex d = relabel(c, [&](Label x) { return perm[x] + 10; });
    auto iso = find_isomorphism(c, d);
    REQUIRE(iso);
    CHECK(relabel(c, *iso) == d);
    CHECK_FALSE(is_isomorphic(c, simplex_boundary(4)));
}

TEST_CASE("random relabellings stay isomorphic", "[complex][property]")
{
    std::mt19937 rng(7);
    Complex c = icosahedron();
    for (int t = 0; t < 10; ++t) {
        std::vector<Label> p(12);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        Complex d = relabel(c, [&](Label x) { return p[x]; });
        CHECK(is_isomorphic(c, d));
        CHECK(d.f_vector() == c.f_vector());
    }
}

TEST_CASE("boundary of a ball", "[complex]")
{
    Complex disk = Complex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
    Complex bd = boundary_complex(disk);
    CHECK(bd.num_facets() == 5);
    CHECK(betti_gf2(bd).betti == std::vector<long long>{1, 1});
}

TEST_CASE("icosahedron quotient is the six-vertex projective plane", "[complex]")
{
    Complex ico = icosahedron();
    REQUIRE(ico.f_vector() == std::vector<long long>{12, 30, 20});
    Complex q = antipodal_quotient(ico, icosahedron_antipode());
    CHECK(q.f_vector() == std::vector<long long>{6, 15, 10});
    CHECK(is_isomorphic(q, rp2_6()));
}

TEST_CASE("octahedron quotient is not simplicial", "[complex]")
{
    Complex oct = Complex::from_facets({{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5}, {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});
    std::map<Label, Label> iota{{0, 3}, {3, 0}, {1, 4}, {4, 1}, {2, 5}, {5, 2}};
    try {
        antipodal_quotient(oct, iota);
        FAIL("quotient accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::non_simplicial_quotient);
    }
}

TEST_CASE("double cover of the quotient recovers the icosahedron", "[complex]")
{
    Complex ico = icosahedron();
    Complex q = antipodal_quotient(ico, icosahedron_antipode());
    REQUIRE(q.vertices() == std::vector<Label>{0, 1, 2, 3, 4, 5});
    // lift each edge from its smaller-labelled representatives: 1 when the lift crosses to the antipodes
    std::map<Simplex, int> z;
    for (const auto& e : q.faces(1)) z[e] = ico.has_face(e) ? 0 : 1;
    auto dc = double_cover(q, z);
    CHECK(dc.cover.f_vector() == std::vector<long long>{12, 30, 20});
    CHECK(is_isomorphic(dc.cover, ico));
    for (auto [x, y] : dc.deck) {
        CHECK(x != y);
        CHECK(dc.deck.at(y) == x);
        CHECK(dc.projection.at(x) == dc.projection.at(y));
    }
    auto nz = nontrivial_cocycle(q);
    REQUIRE(nz);
    CHECK(is_isomorphic(double_cover(q, *nz).cover, ico));
}

TEST_CASE("double cover rejects a non-cocycle", "[complex]")
{
    Complex c = rp2_6();
    std::map<Simplex, int> z{{{1, 2}, 1}};
    REQUIRE_THROWS_AS(double_cover(c, z), Error);
}

TEST_CASE("fixed set of a reflection of the octahedron", "[complex]")
{
    Complex oct = Complex::from_facets({{0, 1, 2}, {0, 1, 5}, {0, 4, 2}, {0, 4, 5}, {3, 1, 2}, {3, 1, 5}, {3, 4, 2}, {3, 4, 5}});
    // swap 2 <-> 5, fixing the square 0 1 3 4
    std::map<Label, Label> rho{{0, 0}, {1, 1}, {2, 5}, {5, 2}, {3, 3}, {4, 4}};
    auto fp = fixed_point_complex(oct, rho);
    CHECK(betti_gf2(fp.complex).betti == std::vector<long long>{1, 1});
    CHECK(fp.complex.num_vertices() == 4);
    std::map<Label, Label> id{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}};
    REQUIRE_THROWS_AS(fixed_point_complex(oct, id), Error);
}

TEST_CASE("SCX round trip is byte exact", "[io]")
{
    Complex c = icosahedron();
    std::string text = to_scx(c);
    std::istringstream in(text);
    Complex d = read_scx(in);
    CHECK(d == c);
    CHECK(to_scx(d) == text);
    auto j = complex_to_json(c);
    CHECK(j["n"] == 12);
    CHECK(j["dim"] == 2);
    CHECK(complex_from_json(j) == c);
    std::istringstream jin(j.dump());
    CHECK(read_complex(jin) == c);
}

TEST_CASE("malformed SCX is rejected with a line number", "[io]")
{
    const char* bad[] = {"scx dim=2 n=3\n0 1\n", "scx dim=1 n=2\n0 x\n", "0 1 2\n", "scx dim=1 n=2\n0 0\n",
                         "scx dim=1 n=2\n0 1\n1 2\n"};
    for (const char* text : bad) {
        std::istringstream in(text);
        try {
            read_scx(in);
            FAIL("accepted: " << text);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::malformed_input);
        }
    }
    std::istringstream in("# c\nscx dim=1 n=2\n0 x\n");
    try {
        read_scx(in);
        FAIL("accepted a non-integer label");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}
