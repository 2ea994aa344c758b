#include "hopfforge/constructions.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hopfforge/io.hpp"

namespace hopfforge {

namespace {

// Points 0..5 are the simplex vertices 1..6, 6..11 their antipodes, 12..31 the triples in lex order.
struct PointSet {
    std::vector<std::array<QSqrt5, 6>> coords;
    std::vector<std::array<int, 3>> triples;
};

const PointSet& points()
{
    static const PointSet ps = [] {
        PointSet p;
        QSqrt5 big = QSqrt5::sqrt5();            // 5/sqrt5
        QSqrt5 small(0, Rational(-1, 5));        // -1/sqrt5
        for (int i = 0; i < 6; ++i) {
            std::array<QSqrt5, 6> x;
            for (int j = 0; j < 6; ++j) x[j] = j == i ? big : small;
            p.coords.push_back(x);
        }
        for (int i = 0; i < 6; ++i) {
            std::array<QSqrt5, 6> x = p.coords[i];
            for (auto& v : x) v = -v;
            p.coords.push_back(x);
        }
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) {
                    std::array<QSqrt5, 6> x;
                    for (int j = 0; j < 6; ++j) x[j] = (j == a || j == b || j == c) ? QSqrt5(1) : QSqrt5(-1);
                    p.coords.push_back(x);
                    p.triples.push_back({a, b, c});
                }
        return p;
    }();
    return ps;
}

Label triple_index(std::array<int, 3> t)
{
    std::sort(t.begin(), t.end());
    const auto& tr = points().triples;
    return 12 + static_cast<Label>(std::find(tr.begin(), tr.end(), t) - tr.begin());
}

// Action of a permutation pi of {0..5} (and optional central inversion) on the 32 points.
Permutation point_action(const std::array<int, 6>& pi, bool invert)
{
    std::vector<Label> img(32);
    for (int i = 0; i < 6; ++i) {
        img[i] = pi[i] + (invert ? 6 : 0);
        img[6 + i] = pi[i] + (invert ? 0 : 6);
    }
    const auto& tr = points().triples;
    for (size_t t = 0; t < tr.size(); ++t) {
        std::array<int, 3> m{pi[tr[t][0]], pi[tr[t][1]], pi[tr[t][2]]};
        if (invert) {
            std::array<int, 3> comp{};
            int k = 0;
            for (int j = 0; j < 6; ++j)
                if (j != m[0] && j != m[1] && j != m[2]) comp[k++] = j;
            m = comp;
        }
        img[12 + t] = triple_index(m);
    }
    return Permutation(img);
}

// The permutation acts on coordinates as x -> (x_{pi^{-1}(j)}), negated when inverting.
bool matches_coordinates(const Permutation& p, const std::array<int, 6>& pi, bool invert)
{
    const auto& c = points().coords;
    for (Label v = 0; v < 32; ++v) {
        std::array<QSqrt5, 6> moved;
        for (int j = 0; j < 6; ++j) moved[pi[j]] = invert ? -c[v][j] : c[v][j];
        if (moved != c[p(v)]) return false;
    }
    return true;
}

std::vector<QSqrt5> drop_last(const std::array<QSqrt5, 6>& x) { return std::vector<QSqrt5>(x.begin(), x.begin() + 5); }

// Rank of vectors over Q(sqrt5).
size_t rank_qsqrt5(std::vector<std::vector<QSqrt5>> m)
{
    size_t r = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t p = r;
        while (p < m.size() && m[p][c].sign() == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].sign() == 0) continue;
            QSqrt5 f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Exact facet test of simplex s with normal n and offset h: equality on s, strictly below elsewhere.
std::string facet_check(const Simplex& s, const std::vector<QSqrt5>& n, const QSqrt5& h)
{
    const auto& c = points().coords;
    for (Label v = 0; v < 32; ++v) {
        QSqrt5 val = qsqrt5_dot(n, drop_last(c[v]));
        bool on = std::binary_search(s.begin(), s.end(), v);
        if (on && val != h) return "vertex " + std::to_string(v) + " of the facet is off the hyperplane";
        if (!on && !(val < h))
            throw Error(ErrorKind::polytope_error, "point " + std::to_string(v) + " is not strictly inside the hyperplane of " + to_string(s));
    }
    std::vector<std::vector<QSqrt5>> diffs;
    auto base = drop_last(c[s[0]]);
    for (size_t i = 1; i < s.size(); ++i) {
        auto x = drop_last(c[s[i]]);
        for (size_t j = 0; j < x.size(); ++j) x[j] = x[j] - base[j];
        diffs.push_back(x);
    }
    if (rank_qsqrt5(diffs) != 4) return "facet vertices are affinely dependent";
    return {};
}

// Quotient labels: simplex vertex i -> 11+i; triple pair -> 1..10 in the table order.
std::map<Label, Label> quotient_labels()
{
    static const std::vector<std::pair<std::array<int, 3>, Label>> table = {
        {{1, 2, 4}, 1}, {{1, 4, 6}, 2}, {{1, 2, 5}, 3}, {{1, 4, 5}, 4}, {{1, 3, 4}, 5},
        {{1, 5, 6}, 6}, {{1, 3, 5}, 7}, {{1, 2, 6}, 8}, {{1, 2, 3}, 9}, {{1, 3, 6}, 10}};
    std::map<Label, Label> out;
    for (Label i = 0; i < 6; ++i) out[i] = 11 + i;
    for (const auto& [t, lab] : table) out[triple_index({t[0] - 1, t[1] - 1, t[2] - 1})] = lab;
    return out;
}

std::vector<long long> orbit_sizes(const Complex& c, const GroupAction& g)
{
    std::set<Simplex> left(c.facets().begin(), c.facets().end());
    std::vector<long long> sizes;
    while (!left.empty()) {
        auto orb = g.orbit(*left.begin());
        for (const auto& s : orb) left.erase(s);
        sizes.push_back(static_cast<long long>(orb.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

} // namespace

PolytopeVerification verify_polytope_facets()
{
    PolytopeVerification out;
    const auto& c = points().coords;
    bool ok = true;
    auto note = [&](bool pass, const std::string& what) {
        out.checks.push_back(std::string(pass ? "ok: " : "FAILED: ") + what);
        ok = ok && pass;
    };

    bool on_sphere = true;
    for (const auto& x : c) {
        QSqrt5 norm2(0), sum(0);
        for (const auto& v : x) {
            norm2 = norm2 + v * v;
            sum = sum + v;
        }
        if (norm2 != QSqrt5(6) || sum != QSqrt5(0)) on_sphere = false;
    }
    note(on_sphere, "32 points on the sphere of radius sqrt6 in the zero-sum hyperplane");

    QSqrt5 r5 = QSqrt5::sqrt5();
    QSqrt5 one(1);
    std::vector<QSqrt5> n1 = {one + one / r5, r5 - one, QSqrt5(0), QSqrt5(0), QSqrt5(0)};
    QSqrt5 q = r5 / (QSqrt5(6) - QSqrt5(2) * r5);
    std::vector<QSqrt5> n2 = {QSqrt5(Rational(3, 4)) + q, QSqrt5(Rational(3, 4)) - q, one, one, one};
    out.n1_offset = QSqrt5(6) / r5;
    out.n2_offset = QSqrt5(3) / (QSqrt5(3) - r5);

    Simplex d1 = make_simplex({0, triple_index({0, 1, 2}), triple_index({0, 1, 3}), triple_index({0, 1, 4}), triple_index({0, 1, 5})});
    Simplex d2 = make_simplex({0, 6 + 1, triple_index({0, 2, 3}), triple_index({0, 2, 4}), triple_index({0, 3, 4})});
    std::string e1 = facet_check(d1, n1, out.n1_offset);
    note(e1.empty(), "N1 supports Delta1 at 6/sqrt5" + (e1.empty() ? "" : ": " + e1));
    std::string e2 = facet_check(d2, n2, out.n2_offset);
    note(e2.empty(), "N2 supports Delta2 at 3/(3-sqrt5)" + (e2.empty() ? "" : ": " + e2));

    std::array<int, 6> t{1, 2, 3, 4, 5, 0}, s{1, 0, 2, 3, 4, 5}, id{0, 1, 2, 3, 4, 5};
    Permutation pt = point_action(t, false), psw = point_action(s, false), pr = point_action(id, true);
    note(matches_coordinates(pt, t, false) && matches_coordinates(psw, s, false) && matches_coordinates(pr, id, true),
         "T, S, R act by isometries permuting the points");
    GroupAction g({pt, psw, pr});
    note(g.order() == 1440, "group S6 x C2 of order 1440");

    std::vector<Simplex> facets;
    auto o1 = g.orbit(d1), o2 = g.orbit(d2);
    facets.insert(facets.end(), o1.begin(), o1.end());
    facets.insert(facets.end(), o2.begin(), o2.end());
    out.upstairs = Complex::from_facets(facets);
    out.orbit_sizes_upstairs = {static_cast<long long>(o1.size()), static_cast<long long>(o2.size())};
    note(o1.size() == 60 && o2.size() == 240, "facet orbits of length 60 and 240");
    note(is_closed_pseudomanifold(out.upstairs, 4), "every ridge lies in exactly two certified facets");

    std::map<Label, Label> iota;
    for (Label v = 0; v < 6; ++v) {
        iota[v] = v + 6;
        iota[v + 6] = v;
    }
    for (Label v = 12; v < 32; ++v) iota[v] = pr(v);
    bool separated = true;
    for (const auto& e : out.upstairs.faces(1))
        for (Label x : e) {
            Label other = e[0] == x ? e[1] : e[0];
            if (out.upstairs.has_face(make_simplex({x, iota[other]}))) separated = false;
        }
    note(separated, "no vertex is joined to an antipodal pair");

    Complex q0 = antipodal_quotient(out.upstairs, iota);
    auto labels = quotient_labels();
    out.quotient = relabel(q0, labels);
    note(out.quotient.num_facets() == 150, "quotient has 150 facets");

    Permutation qt = Permutation::from_cycles("(1 2 3 4 5 10)(6 8 9)(11 12 13 14 15 16)", 17);
    Permutation qs = Permutation::from_cycles("(2 7)(4 10)(5 6)(11 12)", 17);
    note(is_automorphism(out.quotient, qt) && is_automorphism(out.quotient, qs), "quotient admits the S6 action");
    out.orbit_sizes_quotient = orbit_sizes(out.quotient, GroupAction({qt, qs}));
    note(out.orbit_sizes_quotient == std::vector<long long>{30, 120}, "quotient facet orbits of length 30 and 120");

    out.status.status = ok ? Certainty::certified : Certainty::fail;
    out.status.evidence = ok ? "exact Q(sqrt5) facet certificates, orbit expansion and ridge closure" : "some polytope check failed";
    return out;
}

Complex build_rp4_minimal_16()
{
    auto v = verify_polytope_facets();
    if (v.status.status != Certainty::certified) throw Error(ErrorKind::polytope_error, v.status.evidence);
    return v.quotient;
}

} // namespace hopfforge
