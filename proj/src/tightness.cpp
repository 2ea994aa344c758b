#include "hopfforge/tightness.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <thread>

#include "hopfforge/error.hpp"
#include "hopfforge/homology.hpp"
#include "hopfforge/recognition.hpp"

namespace hopfforge {

CrossPolytopeEmbedding CrossPolytopeEmbedding::cross(int m, Label first)
{
    CrossPolytopeEmbedding e;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < m; ++i) {
            e.labels.push_back(first + s * m + i);
            std::vector<Rational> x(static_cast<size_t>(m), Rational(0));
            x[i] = s ? -1 : 1;
            e.coords.push_back(x);
        }
    for (int i = 0; i < m; ++i) e.diagonals.emplace_back(first + i, first + m + i);
    return e;
}

bool CrossPolytopeEmbedding::consistent_with(const Complex& c) const
{
    std::vector<Label> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (c.vertices() != sorted) return false;
    std::set<std::pair<Label, Label>> missing;
    for (size_t i = 0; i < sorted.size(); ++i)
        for (size_t j = i + 1; j < sorted.size(); ++j)
            if (!c.has_face({sorted[i], sorted[j]})) missing.emplace(sorted[i], sorted[j]);
    std::set<std::pair<Label, Label>> diag;
    for (auto [a, b] : diagonals) diag.emplace(std::min(a, b), std::max(a, b));
    return missing == diag;
}

Complex CrossPolytopeEmbedding::boundary() const
{
    size_t m = diagonals.size();
    std::vector<Simplex> facets;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Label> f;
        for (size_t i = 0; i < m; ++i) f.push_back((mask >> i) & 1 ? diagonals[i].second : diagonals[i].first);
        facets.push_back(make_simplex(f));
    }
    return Complex::from_facets(std::move(facets));
}

std::vector<std::uint32_t> halfspace_subsets(const std::vector<std::vector<Rational>>& points, int workers)
{
    size_t n = points.size();
    if (n > 16) throw Error(ErrorKind::usage, "at most 16 points");
    std::uint32_t total = 1u << n;
    std::vector<char> ok(total, 0);
    workers = std::max(1, workers);
    auto job = [&](int w) {
        for (std::uint32_t mask = static_cast<std::uint32_t>(w); mask < total; mask += static_cast<std::uint32_t>(workers)) {
            std::vector<std::vector<Rational>> in, out;
            for (size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? in : out).push_back(points[i]);
            ok[mask] = in.empty() || out.empty() || strict_separation_feasible(in, out);
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& t : pool) t.join();
    }
    std::vector<std::uint32_t> res;
    for (std::uint32_t mask = 0; mask < total; ++mask)
        if (ok[mask]) res.push_back(mask);
    return res;
}

bool edge_graph_complete_check(const Complex& c, const CrossPolytopeEmbedding& emb)
{
    for (const auto& e : emb.boundary().faces(1))
        if (!c.has_face(e)) return false;
    return true;
}

namespace {

std::vector<std::vector<Simplex>> split_orbits(const std::vector<Simplex>& faces, const GroupAction& g)
{
    std::set<Simplex> left(faces.begin(), faces.end());
    std::vector<std::vector<Simplex>> out;
    while (!left.empty()) {
        auto orb = g.orbit(*left.begin());
        std::sort(orb.begin(), orb.end());
        for (const auto& s : orb) left.erase(s);
        out.push_back(std::move(orb));
    }
    return out;
}

bool is_empty_triangle(const Complex& c, const Simplex& t)
{
    if (c.has_face(t)) return false;
    for (const auto& e : subsets_of_size(t, 2))
        if (!c.has_face(e)) return false;
    return true;
}

FaceOrbitStat orbit_stat(const Complex& c, const std::vector<Simplex>& orbit, std::uint64_t seed)
{
    FaceOrbitStat st;
    st.generator = orbit.front();
    st.size = static_cast<long long>(orbit.size());
    Complex span = induced_subcomplex(c, st.generator);
    st.induced_f = span.f_vector();
    auto h = betti_gf2(span);
    st.h1_rank = h.betti.size() > 1 ? h.betti[1] : 0;
    st.injective = induced_map_injective(span, c, 1);
    if (st.generator.size() >= 5)
        for (const auto& t : subsets_of_size(st.generator, 3)) {
            if (!is_empty_triangle(c, t)) continue;
            auto tr = collapse_onto(span, t, {}, seed, 50);
            if (tr && std::accumulate(tr->critical_by_dim.begin(), tr->critical_by_dim.end(), 0LL) == 0) {
                st.collapses_to_empty_triangle = true;
                break;
            }
        }
    return st;
}

} // namespace

TightnessReport verify_tightness(const Complex& c, const CrossPolytopeEmbedding& emb, const GroupAction& group,
                                 const TightnessOptions& opt)
{
    if (!emb.consistent_with(c)) throw Error(ErrorKind::usage, "missing edges of the complex are not the diagonals");
    TightnessReport rep;
    rep.duality_mode = opt.duality_mode;
    rep.edge_graph_complete = edge_graph_complete_check(c, emb);

    const size_t n = emb.labels.size();
    auto feasible = halfspace_subsets(emb.coords, opt.workers);
    rep.feasible_subsets = static_cast<long long>(feasible.size());
    std::set<std::uint32_t> feasible_set(feasible.begin(), feasible.end());

    std::vector<std::uint32_t> pair_mask;
    for (auto [a, b] : emb.diagonals) {
        std::uint32_t m = 0;
        for (size_t i = 0; i < n; ++i)
            if (emb.labels[i] == a || emb.labels[i] == b) m |= 1u << i;
        pair_mask.push_back(m);
    }
    auto antipode_free = [&](std::uint32_t mask) {
        return std::none_of(pair_mask.begin(), pair_mask.end(), [&](std::uint32_t p) { return (mask & p) == p; });
    };
    const std::uint32_t all = (1u << n) - 1;

    std::vector<std::uint32_t> schedule;
    for (std::uint32_t mask : feasible) {
        if (opt.duality_mode && !antipode_free(mask) && antipode_free(all & ~mask) && feasible_set.count(all & ~mask)) {
            ++rep.dual_subsets;
            continue;
        }
        schedule.push_back(mask);
    }
    rep.checked_subsets = static_cast<long long>(schedule.size());

    std::vector<SubsetResult> results(schedule.size());
    int workers = std::max(1, opt.workers);
    auto job = [&](int w) {
        for (size_t i = static_cast<size_t>(w); i < schedule.size(); i += static_cast<size_t>(workers)) {
            SubsetResult& r = results[i];
            for (size_t b = 0; b < n; ++b)
                if ((schedule[i] >> b) & 1) r.vertices.push_back(emb.labels[b]);
            std::sort(r.vertices.begin(), r.vertices.end());
            if (r.vertices.empty()) {
                r.h0 = r.h1 = true;
                continue;
            }
            Complex span = induced_subcomplex(c, r.vertices);
            r.h0 = induced_map_injective(span, c, 0);
            r.h1 = induced_map_injective(span, c, 1);
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& t : pool) t.join();
    }
    for (auto& r : results)
        if (!r.h0 || !r.h1) rep.failures.push_back(std::move(r));

    // orbit bookkeeping over the faces of the cross-polytope
    Complex beta = emb.boundary();
    std::vector<Simplex> empty, tets;
    for (const auto& t : beta.faces(2))
        if (is_empty_triangle(c, t)) empty.push_back(t);
    for (const auto& t : beta.faces(3))
        if (!c.has_face(t)) tets.push_back(t);
    rep.empty_triangle_count = static_cast<long long>(empty.size());
    rep.non_complex_tetrahedron_count = static_cast<long long>(tets.size());

    for (const auto& orb : split_orbits(empty, group)) {
        FaceOrbitStat st = orbit_stat(c, orb, opt.seed);
        for (const auto& t : orb)
            if (is_null_homologous(c, boundary_chain(t))) st.null_homologous = true;
        rep.empty_triangles.push_back(std::move(st));
    }
    for (const auto& orb : split_orbits(tets, group)) {
        FaceOrbitStat st = orbit_stat(c, orb, opt.seed);
        for (const auto& t : subsets_of_size(st.generator, 3)) {
            if (c.has_face(t)) ++st.triangles_in_complex;
            else if (is_empty_triangle(c, t)) ++st.empty_triangles;
        }
        rep.non_complex_tetrahedra.push_back(std::move(st));
    }
    for (const auto& orb : split_orbits(beta.faces(4), group)) rep.four_simplices.push_back(orbit_stat(c, orb, opt.seed));
    for (const auto& orb : split_orbits(beta.faces(5), group)) rep.facets.push_back(orbit_stat(c, orb, opt.seed));

    bool covered = rep.checked_subsets + rep.dual_subsets == rep.feasible_subsets;
    rep.tight = rep.failures.empty() && rep.edge_graph_complete && covered;
    return rep;
}

} // namespace hopfforge
