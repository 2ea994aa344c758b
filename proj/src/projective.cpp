#include "hopfforge/constructions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

namespace hopfforge {

namespace {

Complex cyclic_orbits(const std::vector<Simplex>& gens, Label n) { return expand_orbits(gens, GroupAction::cyclic(n)); }

// sigma^i applied to the labels below n, apex label appended.
Complex cone_of_power(const Complex& s, Label n, Label mult, int power, Label apex)
{
    Complex img = s;
    for (int i = 0; i < power; ++i) img = apply_perm(img, multiplier(n, mult));
    return cone(img, apex);
}

std::vector<Simplex> joined(const Simplex& face, const Complex& part)
{
    std::vector<Simplex> out;
    for (const auto& s : part.facets()) out.push_back(simplex_union(face, s));
    return out;
}

} // namespace

std::vector<Complex> link_components(const Complex& link_complex) { return connected_components(link_complex); }

Complex subdivide_in_component(const Complex& c, const Simplex& face, const Complex& component, Label new_label)
{
    return stellar_subdivide_in(c, face, new_label, joined(face, component));
}

Complex pick_component(const Complex& c, const Simplex& face, Label apex_base)
{
    auto comps = link_components(link(c, face));
    if (comps.empty()) throw Error(ErrorKind::not_a_face, to_string(face));
    auto key = [&](const Complex& k) {
        for (Label v : k.vertices())
            if (v >= apex_base) return std::make_pair(v, k.facets().front());
        return std::make_pair(std::numeric_limits<Label>::max(), k.facets().front());
    };
    return *std::min_element(comps.begin(), comps.end(), [&](const Complex& a, const Complex& b) { return key(a) < key(b); });
}

std::vector<std::vector<Simplex>> s5_15_piece_generators()
{
    return {
        {{0, 1, 3, 5, 7, 11}, {0, 2, 4, 6, 7, 11}, {0, 2, 4, 5, 7, 9}, {0, 2, 4, 7, 9, 11}, {0, 2, 4, 6, 8, 10}},
        {{0, 1, 2, 3, 7, 11}, {0, 1, 2, 6, 10, 11}, {0, 1, 5, 9, 10, 11}, {0, 1, 5, 6, 10, 11}},
        {{0, 1, 2, 3, 5, 7}, {0, 2, 4, 5, 6, 7}, {0, 1, 2, 5, 6, 7}, {0, 1, 2, 4, 5, 6}, {0, 1, 2, 3, 4, 5}},
    };
}

std::vector<Simplex> s5_15_generators()
{
    auto p = s5_15_piece_generators();
    std::vector<Simplex> out = p[2];
    out.insert(out.end(), p[0].begin(), p[0].end());
    out.insert(out.end(), p[1].begin(), p[1].end());
    return out;
}

Complex s5_15() { return cyclic_orbits(s5_15_generators(), 15); }

PieceMap s5_15_pieces()
{
    auto gens = s5_15_piece_generators();
    PieceMap out;
    for (int i = 0; i < 3; ++i) out[{i + 1}] = cyclic_orbits(gens[i], 15);
    out[{2, 3}] = cyclic_orbits({{0, 1, 2, 3, 7}, {0, 1, 2, 6, 7}, {0, 1, 5, 6, 7}, {0, 4, 5, 6, 7}}, 15);
    out[{1, 3}] = cyclic_orbits({{0, 1, 3, 5, 7}, {0, 2, 3, 5, 7}, {0, 2, 4, 5, 7}, {0, 2, 4, 6, 7}}, 15);
    out[{1, 2}] = cyclic_orbits({{0, 1, 3, 7, 11}, {0, 2, 3, 7, 11}, {0, 1, 5, 7, 11}, {0, 1, 5, 9, 11}}, 15);
    out[{1, 2, 3}] = expand_permcycle({{1, 2, 4, 8}});
    return out;
}

Complex build_cp1()
{
    Complex tri = Complex::from_facets({{0, 1}, {1, 2}, {0, 2}});
    return unite(cone(tri, 3), cone(tri, 4));
}

Decomposed build_cp2_equilibrium()
{
    const Label n = 7;
    Complex s = cyclic_polytope_boundary(7, 4);
    Decomposed out;
    for (int i = 0; i < 3; ++i) {
        out.pieces[{i}] = cone_of_power(s, n, 2, i, n + i);
        out.complex = unite(out.complex, out.pieces[{i}]);
    }
    Complex t0 = cyclic_orbits({{0, 1, 2, 3}}, n);
    Complex t1 = apply_perm(t0, multiplier(n, 2));
    Complex t2 = apply_perm(t1, multiplier(n, 2));
    out.pieces[{0, 1}] = t0;
    out.pieces[{1, 2}] = t1;
    out.pieces[{0, 2}] = t2;
    out.pieces[{0, 1, 2}] = cyclic_orbits({{0, 1, 3}, {0, 2, 3}}, n);
    return out;
}

Cp3Build build_cp3_equilibrium()
{
    const Label n = 15, apex = 15;
    Cp3Build out;
    Complex s = s5_15();
    for (int i = 0; i < 4; ++i) out.pre_repair = unite(out.pre_repair, cone_of_power(s, n, 2, i, apex + i));
    Complex c = out.pre_repair;
    Label next = apex + 4;

    // the five triangles of the orbit of (0 5 10)
    for (Label k = 0; k < 5; ++k) {
        Simplex t = make_simplex({k, k + 5, k + 10});
        c = subdivide_in_component(c, t, pick_component(c, t, apex), next);
        out.subdivided[next++] = t;
    }

    // the tetrahedra (3 5 10 12) and (5 6 9 10) up to translation, read as (x v2 v1 y)
    const std::vector<std::array<Label, 4>> bad = {{3, 5, 10, 12}, {6, 5, 10, 9}};
    for (const auto& g : bad)
        for (Label k = 0; k < n; ++k) {
            Label x = (g[0] + k) % n, v2 = (g[1] + k) % n, v1 = (g[2] + k) % n, y = (g[3] + k) % n;
            Simplex tet = make_simplex({x, v2, v1, y});
            Complex kept = pick_component(c, tet, apex);
            auto kv = kept.vertices();
            std::vector<std::pair<Simplex, Complex>> regions;
            for (const auto& [t, v] : {std::make_pair(make_simplex({x, v2, y}), v1), std::make_pair(make_simplex({x, v1, y}), v2)}) {
                std::vector<Simplex> rest;
                Complex lk = link(c, t);
                for (const auto& f : lk.facets())
                    if (!std::binary_search(f.begin(), f.end(), v)) rest.push_back(f);
                std::vector<Complex> touching;
                for (const auto& comp : connected_components(Complex::from_facets(rest))) {
                    auto cv = comp.vertices();
                    bool meets = std::any_of(cv.begin(), cv.end(), [&](Label u) { return std::binary_search(kv.begin(), kv.end(), u); });
                    if (meets) touching.push_back(comp);
                }
                if (touching.size() != 1)
                    throw Error(ErrorKind::build_error, "no unique region around " + to_string(t) + " in the link of " + to_string(tet));
                regions.emplace_back(t, touching[0]);
            }
            Label a = next++, b = next++;
            c = subdivide_in_component(c, regions[0].first, regions[0].second, a);
            c = subdivide_in_component(c, regions[1].first, regions[1].second, b);
            out.subdivided[a] = regions[0].first;
            out.subdivided[b] = regions[1].first;

            const std::vector<Simplex> fill = {make_simplex({a, x, v2, v1}), make_simplex({a, v2, v1, y}), make_simplex({a, b, x, v1}),
                                               make_simplex({a, b, v1, y}), make_simplex({a, b, x, y})};
            std::set<Simplex> drop;
            for (const auto& f : kept.facets()) drop.insert(simplex_union(tet, f));
            std::vector<Simplex> facets;
            for (const auto& f : c.facets())
                if (!drop.count(f)) facets.push_back(f);
            for (const auto& f : kept.facets())
                for (const auto& piece : fill) facets.push_back(simplex_union(piece, f));
            c = Complex::from_facets(std::move(facets));
        }
    out.complex = std::move(c);
    return out;
}

namespace {

constexpr Label rp3_fixed_apex = 8;

// Subdivides every edge with a disconnected link, in the component with the smallest apex.
Complex repair_defect_edges(Complex c, Label next, std::vector<Simplex>& defects, std::map<Label, Simplex>& subdivided)
{
    for (const auto& e : c.faces(1))
        if (connected_components(link(c, e)).size() > 1) defects.push_back(e);
    for (const auto& e : defects) {
        c = subdivide_in_component(c, e, pick_component(c, e, rp3_fixed_apex), next);
        subdivided[next++] = e;
    }
    return c;
}

} // namespace

Rp3FixedBuild build_rp3_from_fixed_points()
{
    const std::vector<Simplex> sphere = {{0, 1, 2}, {1, 2, 3}, {4, 5, 6}, {5, 6, 7}, {0, 2, 4}, {2, 4, 6},
                                         {1, 3, 5}, {3, 5, 7}, {0, 1, 5}, {0, 4, 5}, {2, 3, 7}, {2, 6, 7}};
    Permutation sigma_t = Permutation::from_cycles("(1 2 4 7)(3 6)", 8);
    Rp3FixedBuild out;
    Complex s = Complex::from_facets(sphere);
    for (int i = 0; i < 4; ++i) {
        out.pre_repair = unite(out.pre_repair, cone(s, rp3_fixed_apex + i));
        s = apply_perm(s, sigma_t);
    }
    out.complex = repair_defect_edges(out.pre_repair, rp3_fixed_apex + 4, out.defect_edges, out.subdivided);
    return out;
}

Complex rp3_from_cp3_fixed_set()
{
    const Label n = 15;
    Complex pre;
    Complex s = s5_15();
    for (int i = 0; i < 4; ++i) pre = unite(pre, cone_of_power(s, n, 2, i, n + i));
    std::map<Label, Label> rho;
    for (Label x = 0; x < n; ++x) rho[x] = (n - x) % n;
    FixedPointSet fp = fixed_point_complex(pre, rho);
    Complex fixed = relabel(fp.complex, [&](Label v) { return v >= n ? v - n + rp3_fixed_apex : v; });
    std::vector<Simplex> defects;
    std::map<Label, Simplex> sub;
    return repair_defect_edges(fixed, rp3_fixed_apex + 4, defects, sub);
}

} // namespace hopfforge
