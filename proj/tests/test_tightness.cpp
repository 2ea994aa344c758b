#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hopfforge/io.hpp"
#include "hopfforge/tightness.hpp"

using namespace hopfforge;

namespace {

Complex octahedron()
{
    return CrossPolytopeEmbedding::cross(3, 1).boundary();
}

} // namespace

TEST_CASE("the cross-polytope embedding", "[tightness]")
{
    auto e = CrossPolytopeEmbedding::cross(3, 1);
    CHECK(e.labels == std::vector<Label>{1, 2, 3, 4, 5, 6});
    CHECK(e.diagonals.size() == 3);
    Complex o = octahedron();
    CHECK(o.num_facets() == 8);
    CHECK(e.consistent_with(o));
    CHECK_FALSE(e.consistent_with(Complex::from_facets({{1, 2, 3}})));
}

TEST_CASE("the 12-vertex polytope is tight", "[tightness]")
{
    auto orb = load_dataset_orbits("p12");
    Complex c = orb.expand();
    auto emb = CrossPolytopeEmbedding::cross(6, 1);
    CHECK(edge_graph_complete_check(c, emb));
    for (bool dual : {false, true}) {
        TightnessOptions opt;
        opt.duality_mode = dual;
        auto r = verify_tightness(c, emb, orb.action(), opt);
        CHECK(r.tight);
        CHECK(r.failures.empty());
        CHECK(r.checked_subsets + r.dual_subsets == r.feasible_subsets);
        if (!dual) CHECK(r.dual_subsets == 0);
    }
}

TEST_CASE("feasible subsets are invariant under the symmetry group", "[tightness][property]")
{
    auto orb = load_dataset_orbits("p12");
    auto emb = CrossPolytopeEmbedding::cross(6, 1);
    auto masks = halfspace_subsets(emb.coords);
    std::set<std::uint32_t> feasible(masks.begin(), masks.end());
    GroupAction group = orb.action();
    for (const auto& g : group.generators()) {
        for (auto mask : masks) {
            std::uint32_t image = 0;
            for (int i = 0; i < 12; ++i)
                if ((mask >> i) & 1) image |= 1u << (g(emb.labels[i]) - 1);
            CHECK(feasible.count(image));
        }
    }
}

TEST_CASE("the octahedron is tight and loses tightness without a facet", "[tightness]")
{
    auto emb = CrossPolytopeEmbedding::cross(3, 1);
    GroupAction trivial({Permutation::identity(7)});
    CHECK(verify_tightness(octahedron(), emb, trivial).tight);

    Complex full = octahedron();
    std::vector<Simplex> facets;
    for (const auto& f : full.facets())
        if (f != Simplex{1, 2, 3}) facets.push_back(f);
    Complex open = Complex::from_facets(facets);
    auto r = verify_tightness(open, emb, trivial);
    CHECK_FALSE(r.tight);
    bool found = std::any_of(r.failures.begin(), r.failures.end(),
                             [](const SubsetResult& s) { return s.vertices == std::vector<Label>{1, 2, 3}; });
    CHECK(found);
}

TEST_CASE("an inconsistent embedding is refused", "[tightness]")
{
    auto emb = CrossPolytopeEmbedding::cross(6, 1);
    GroupAction trivial({Permutation::identity(13)});
    try {
        verify_tightness(octahedron(), emb, trivial);
        FAIL("inconsistent embedding accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::usage);
    }
}
