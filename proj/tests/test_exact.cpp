#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "hopfforge/exact.hpp"
#include "hopfforge/tightness.hpp"

using namespace hopfforge;

namespace {

std::vector<std::vector<Rational>> cross_points(int m)
{
    return CrossPolytopeEmbedding::cross(m).coords;
}

// Separable subsets of {+-e_i}: infeasible exactly when some antipodal pair lies inside and another outside.
long long cross_oracle_count(int m)
{
    long long pow4 = 1, pow3 = 1, pow2 = 1;
    for (int i = 0; i < m; ++i) {
        pow4 *= 4;
        pow3 *= 3;
        pow2 *= 2;
    }
    return pow4 - (pow4 - 2 * pow3 + pow2);
}

bool cross_oracle(std::uint32_t mask, int m)
{
    bool both_in = false, both_out = false;
    for (int i = 0; i < m; ++i) {
        bool p = (mask >> i) & 1, q = (mask >> (i + m)) & 1;
        both_in = both_in || (p && q);
        both_out = both_out || (!p && !q);
    }
    return !(both_in && both_out);
}

} // namespace

TEST_CASE("rational parsing", "[exact]")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    REQUIRE_THROWS_AS(parse_rational("1/0"), Error);
    REQUIRE_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("arithmetic in Q(sqrt5)", "[exact]")
{
    QSqrt5 r5 = QSqrt5::sqrt5();
    CHECK(r5 * r5 == QSqrt5(5));
    QSqrt5 phi = (QSqrt5(1) + r5) / QSqrt5(2);
    CHECK(phi * phi == phi + QSqrt5(1));
    CHECK(QSqrt5(6) / r5 == QSqrt5(0, Rational(6, 5)));
    CHECK(QSqrt5(3) / (QSqrt5(3) - r5) == QSqrt5(Rational(9, 4), Rational(3, 4)));
    CHECK((QSqrt5(3) - r5).sign() > 0);
    CHECK((QSqrt5(2) - r5).sign() < 0);
    CHECK((QSqrt5(Rational(9, 4)) - r5).sign() > 0);
    CHECK(QSqrt5(0).sign() == 0);
    CHECK(std::abs(phi.to_double() - (1 + std::sqrt(5.0)) / 2) < 1e-12);
}

TEST_CASE("QSqrt5 signs agree with floating point on random values", "[exact][property]")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int t = 0; t < 500; ++t) {
        QSqrt5 x(Rational(d(rng), 7), Rational(d(rng), 11));
        double v = x.to_double();
        if (std::abs(v) > 1e-9) CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("intervals enclose exact values", "[exact]")
{
    Interval a = Interval::from_rational(Rational(1, 3), 128);
    Interval b = Interval::from_rational(Rational(2, 3), 128);
    Interval s = a + b;
    CHECK(s.contains(Rational(1)));
    CHECK((a * b).contains(Rational(2, 9)));
    CHECK((a - a).contains_zero());
    CHECK((b / a).contains(Rational(2)));
    CHECK(a.sign() == 1);
    CHECK((-a).sign() == -1);
}

TEST_CASE("trigonometric points lie on the unit circles", "[exact]")
{
    for (long long j : {0LL, 1LL, 5LL, 30LL}) {
        auto p = interval_trig_point(j, 31, {1, 2, 4, 8}, 128);
        REQUIRE(p.size() == 8);
        for (size_t i = 0; i < p.size(); i += 2) {
            Interval r = p[i] * p[i] + p[i + 1] * p[i + 1];
            CHECK(r.contains(Rational(1)));
            CHECK(r.width_double() < 1e-30);
        }
    }
}

TEST_CASE("interval determinant signs", "[exact]")
{
    auto I = [](long x) { return Interval::from_rational(Rational(x), 128); };
    CHECK(interval_det_sign({{I(2), I(1)}, {I(1), I(1)}}) == SignResult::positive);
    CHECK(interval_det_sign({{I(1), I(2)}, {I(1), I(1)}}) == SignResult::negative);
    CHECK(interval_det_sign({{I(1), I(2)}, {I(2), I(4)}}) == SignResult::indeterminate);
    auto res = certified_sign_det([&](mpfr_prec_t bits) {
        Interval tiny = Interval::from_rational(Rational(1, 1) / Rational(mpz_class("1000000000000000000000000")), bits);
        Interval one = Interval::from_rational(Rational(1), bits);
        return std::vector<std::vector<Interval>>{{one + tiny, one}, {one, one}};
    });
    CHECK(res.sign == SignResult::positive);
    CHECK(res.bits >= 128);
}

TEST_CASE("GF(2) rank", "[exact]")
{
    CHECK(gf2_rank({{0, 1}, {1, 2}, {0, 2}}) == 2);
    CHECK(gf2_rank({{0}, {1}, {2}}) == 3);
    CHECK(gf2_rank({{}, {0, 1}, {0, 1}}) == 1);
    Gf2Reducer r;
    CHECK(r.add({0, 3}));
    CHECK(r.add({3, 5}));
    CHECK_FALSE(r.add({0, 5}));
    CHECK(r.reduce({0, 5}).empty());
}

TEST_CASE("GF(2) rank is invariant under column operations", "[exact][property]")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::vector<int>> cols(8);
        for (auto& c : cols)
            for (int r = 0; r < 10; ++r)
                if (rng() % 3 == 0) c.push_back(r);
        size_t r0 = gf2_rank(cols);
        auto mixed = cols;
        for (int k = 0; k < 10; ++k) {
            size_t a = rng() % mixed.size(), b = rng() % mixed.size();
            if (a != b) gf2_xor_into(mixed[a], mixed[b]);
        }
        CHECK(gf2_rank(mixed) == r0);
    }
}

TEST_CASE("strict separation certificates", "[exact]")
{
    std::vector<std::vector<Rational>> in{{0, 0}, {1, 0}};
    std::vector<std::vector<Rational>> out{{0, 2}, {1, 2}};
    auto sep = strict_separation(in, out);
    REQUIRE(sep);
    auto margin = [&](const std::vector<Rational>& v) {
        Rational x = sep->normal[0] * v[0] + sep->normal[1] * v[1] - sep->offset;
        return x;
    };
    for (const auto& v : in) CHECK(margin(v) >= 1);
    for (const auto& v : out) CHECK(margin(v) <= -1);
    // XOR configuration
    CHECK_FALSE(strict_separation_feasible({{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}));
    // a point inside the hull of the other side
    CHECK_FALSE(strict_separation_feasible({{Rational(1, 2), 0}}, {{0, 0}, {1, 0}}));
}

TEST_CASE("separation is monotone", "[exact][property]")
{
    auto pts = cross_points(3);
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
        std::vector<std::vector<Rational>> in, out;
        for (int i = 0; i < 6; ++i) ((mask >> i) & 1 ? in : out).push_back(pts[i]);
        if (in.empty() || out.empty() || !strict_separation_feasible(in, out)) continue;
        for (size_t drop = 0; drop < in.size() && in.size() > 1; ++drop) {
            auto smaller = in;
            smaller.erase(smaller.begin() + static_cast<long>(drop));
            CHECK(strict_separation_feasible(smaller, out));
        }
    }
}

TEST_CASE("halfspace subsets of small point sets", "[exact]")
{
    CHECK(halfspace_subsets({{0, 0, 0}}).size() == 2);
    std::vector<std::vector<Rational>> tet{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(halfspace_subsets(tet).size() == 16);
    std::vector<std::vector<Rational>> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(halfspace_subsets(square).size() == 14);
    std::vector<std::vector<Rational>> many(17, std::vector<Rational>{0});
    REQUIRE_THROWS_AS(halfspace_subsets(many), Error);
}

TEST_CASE("halfspace subsets of the cross-polytope match the combinatorial oracle", "[exact]")
{
    for (int m = 2; m <= 6; ++m) {
        auto subsets = halfspace_subsets(cross_points(m), m == 6 ? 2 : 1);
        CHECK(static_cast<long long>(subsets.size()) == cross_oracle_count(m));
        for (auto mask : subsets) CHECK(cross_oracle(mask, m));
    }
    CHECK(cross_oracle_count(6) == 1394);
}

TEST_CASE("halfspace subsets are closed under complement", "[exact][property]")
{
    auto subsets = halfspace_subsets(cross_points(6));
    std::set<std::uint32_t> s(subsets.begin(), subsets.end());
    for (auto mask : subsets) CHECK(s.count(~mask & 0xfffu));
}
