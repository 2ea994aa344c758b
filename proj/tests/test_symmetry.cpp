#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <set>

#include "hopfforge/constructions.hpp"
#include "hopfforge/homology.hpp"
#include "hopfforge/io.hpp"
#include "hopfforge/symmetry.hpp"

using namespace hopfforge;

namespace {

// Independent permcycle expansion: every permutation of the differences, partial sums, all translates.
std::set<Simplex> permcycle_oracle(std::vector<int> d)
{
    int n = std::accumulate(d.begin(), d.end(), 0);
    std::sort(d.begin(), d.end());
    std::set<Simplex> out;
    do {
        for (int t = 0; t < n; ++t) {
            Simplex s;
            int x = t;
            for (size_t i = 0; i + 1 < d.size(); ++i) {
                s.push_back(x % n);
                x += d[i];
            }
            s.push_back(x % n);
            std::sort(s.begin(), s.end());
            out.insert(s);
        }
    } while (std::next_permutation(d.begin(), d.end()));
    return out;
}

long long factorial(int k)
{
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

} // namespace

TEST_CASE("permutations from cycle notation", "[symmetry]")
{
    Permutation p = Permutation::from_cycles("(0 1 2)(3 4)");
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(4) == 3);
    CHECK(p(7) == 7);
    CHECK(p.order() == 6);
    CHECK((p * p.inverse()).is_identity());
    Permutation q = Permutation::from_cycles("(0 3)");
    CHECK((p * q)(0) == 4);
    CHECK((q * p)(0) == 1);
    CHECK(Permutation::from_cycles(p.cycles()) == p);
    REQUIRE_THROWS_AS(Permutation::from_cycles("(0 1 0)"), Error);
    REQUIRE_THROWS_AS(Permutation::from_cycles("(0 1"), Error);
}

TEST_CASE("permcycle expansion matches the brute-force oracle", "[symmetry]")
{
    std::vector<std::vector<int>> cases{{1, 2, 4}, {1, 2, 4, 8}, {1, 1, 1, 4, 8}, {1, 1, 2, 5}, {1, 2, 4, 8, 16}, {1, 3}};
    for (const auto& d : cases) {
        Complex c = expand_permcycle(PermCycle{d});
        auto oracle = permcycle_oracle(d);
        CHECK(std::set<Simplex>(c.facets().begin(), c.facets().end()) == oracle);
    }
}

TEST_CASE("permcycle torus has k! n facets and all edges", "[symmetry]")
{
    for (int k = 1; k <= 4; ++k) {
        std::vector<int> d;
        for (int i = 0; i <= k; ++i) d.push_back(1 << i);
        int n = (1 << (k + 1)) - 1;
        Complex t = expand_permcycle(PermCycle{d});
        CHECK(static_cast<long long>(t.num_facets()) == factorial(k + 1) / 1 * n / (k + 1));
        CHECK(t.f_vector()[1] == static_cast<long long>(n) * (n - 1) / 2);
        std::vector<long long> betti;
        for (int i = 0; i <= k; ++i) {
            long long b = 1;
            for (int j = 1; j <= i; ++j) b = b * (k - j + 1) / j;
            betti.push_back(b);
        }
        CHECK(betti_gf2(t).betti == betti);
    }
}

TEST_CASE("standard automorphisms of the permcycle torus", "[symmetry]")
{
    for (int k = 2; k <= 4; ++k) {
        auto a = standard_autos(k);
        std::vector<int> d;
        for (int i = 0; i <= k; ++i) d.push_back(1 << i);
        Complex t = expand_permcycle(PermCycle{d});
        CHECK(is_automorphism(t, a.tau));
        CHECK(is_automorphism(t, a.rho));
        CHECK(is_automorphism(t, a.sigma));
        CHECK(a.sigma.order() == k + 1);
        CHECK(GroupAction({a.tau, a.rho, a.sigma}).order() == static_cast<size_t>(a.n * 2 * (k + 1)));
    }
}

TEST_CASE("for k = 1 sigma coincides with rho", "[symmetry]")
{
    auto a = standard_autos(1);
    CHECK(a.sigma == a.rho);
    CHECK(GroupAction({a.tau, a.rho, a.sigma}).order() == 6);
}

TEST_CASE("orbit sizes divide the group order", "[symmetry][property]")
{
    auto orb = load_dataset_orbits("p12");
    GroupAction g = orb.action();
    size_t order = g.order();
    CHECK(order == 24);
    Complex c = orb.expand();
    for (const auto& f : c.facets()) {
        auto o = g.orbit(f);
        CHECK(order % o.size() == 0);
        for (const auto& s : o) CHECK(std::is_sorted(s.begin(), s.end()));
    }
}

TEST_CASE("S6 acts on the 16-vertex RP4", "[symmetry]")
{
    auto orb = load_dataset_orbits("rp4-16");
    GroupAction g = orb.action();
    CHECK(g.order() == 720);
    Complex c = orb.expand();
    for (const auto& p : g.generators()) CHECK(is_automorphism(c, p));
}

TEST_CASE("expanding an orbit twice is idempotent", "[symmetry][property]")
{
    GroupAction z = GroupAction::cyclic(15);
    auto gens = s5_15_generators();
    Complex c = expand_orbits(gens, z);
    Complex again = expand_orbits(c.facets(), z);
    CHECK(c == again);
}

TEST_CASE("multipliers act on Z_n", "[symmetry]")
{
    Permutation m = multiplier(15, 2);
    CHECK(m(7) == 14);
    CHECK(m(8) == 1);
    CHECK(m(15) == 15);
    CHECK(m.order() == 4);
}

TEST_CASE("group closure is capped", "[symmetry]")
{
    std::vector<Label> big(12);
    std::iota(big.begin(), big.end(), 0);
    std::rotate(big.begin(), big.begin() + 1, big.end());
    Permutation cyc(big);
    Permutation swap = Permutation::from_cycles("(0 1)", 12);
    GroupAction s12({cyc, swap});
    REQUIRE_THROWS_AS(s12.order(1000), Error);
}
