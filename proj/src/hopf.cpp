#include "hopfforge/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "hopfforge/io.hpp"

namespace hopfforge {

namespace {

// Non-empty subsets of idx, by size then lexicographically.
std::vector<std::vector<int>> subsets_by_size(const std::vector<int>& idx)
{
    std::vector<std::vector<int>> out;
    size_t n = idx.size();
    for (size_t size = 1; size <= n; ++size) {
        std::vector<size_t> c(size);
        for (size_t i = 0; i < size; ++i) c[i] = i;
        while (true) {
            std::vector<int> w;
            for (size_t i : c) w.push_back(idx[i]);
            out.push_back(w);
            size_t i = size;
            while (i > 0 && c[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (size_t j = i; j < size; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return out;
}

std::vector<int> merge_indices(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string index_string(const std::vector<int>& w)
{
    std::string s = "{";
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + "}";
}

// Faces of the symmetric difference of two facet lists, at most limit of them.
void note_difference(const Complex& a, const Complex& b, std::vector<Simplex>& out, size_t limit = 5)
{
    std::vector<Simplex> diff;
    std::set_symmetric_difference(a.facets().begin(), a.facets().end(), b.facets().begin(), b.facets().end(),
                                  std::back_inserter(diff));
    for (size_t i = 0; i < diff.size() && i < limit; ++i) out.push_back(diff[i]);
}

std::vector<int> singleton_indices(const PieceMap& pieces)
{
    std::vector<int> idx;
    for (const auto& [w, p] : pieces)
        if (w.size() == 1) idx.push_back(w[0]);
    return idx;
}

// Fills report.pieces with given or intersected pieces and checks containment and the Boolean algebra.
void check_pieces(const Complex& c, const PieceMap& pieces, DecompositionReport& rep,
                  const std::function<void(PieceCheck&)>& classify)
{
    rep.indices = singleton_indices(pieces);
    for (const auto& [w, p] : pieces)
        if (w.empty() || !std::is_sorted(w.begin(), w.end()) ||
            !std::includes(rep.indices.begin(), rep.indices.end(), w.begin(), w.end()))
            rep.problems.push_back("piece " + index_string(w) + " is not indexed by a subset of the singletons");

    std::map<std::vector<int>, size_t> at;
    for (const auto& w : subsets_by_size(rep.indices)) {
        PieceCheck pc;
        pc.index = w;
        Complex meet = pieces.at({w[0]});
        for (size_t i = 1; i < w.size(); ++i) meet = intersect(meet, pieces.at({w[i]}));
        auto given = pieces.find(w);
        if (given != pieces.end()) {
            pc.piece = given->second;
            if (w.size() > 1 && pc.piece != meet) {
                pc.matches_intersection = false;
                rep.problems.push_back("piece " + index_string(w) + " differs from the intersection of its singletons");
                note_difference(pc.piece, meet, rep.offending);
            }
        } else {
            pc.piece = meet;
        }
        pc.subcomplex = is_subcomplex(pc.piece, c);
        if (!pc.subcomplex) {
            rep.problems.push_back("piece " + index_string(w) + " is not a subcomplex");
            for (const auto& f : pc.piece.facets())
                if (!c.has_face(f) && rep.offending.size() < 10) rep.offending.push_back(f);
        }
        classify(pc);
        if (!pc.type.ok()) rep.problems.push_back("piece " + index_string(w) + ": " + pc.type.evidence);
        at[w] = rep.pieces.size();
        rep.pieces.push_back(std::move(pc));
    }

    Complex all;
    for (int i : rep.indices) all = unite(all, pieces.at({i}));
    rep.union_ok = all == c;
    if (!rep.union_ok) {
        rep.problems.push_back("union of the singleton pieces differs from the complex");
        note_difference(all, c, rep.offending);
    }

    rep.boolean_ok = true;
    for (size_t a = 0; a < rep.pieces.size(); ++a)
        for (size_t b = a + 1; b < rep.pieces.size(); ++b) {
            const auto& pa = rep.pieces[a];
            const auto& pb = rep.pieces[b];
            const auto& pu = rep.pieces[at[merge_indices(pa.index, pb.index)]];
            Complex meet = intersect(pa.piece, pb.piece);
            if (meet != pu.piece) {
                rep.boolean_ok = false;
                rep.problems.push_back("A" + index_string(pa.index) + " meets A" + index_string(pb.index) + " outside A" +
                                       index_string(pu.index));
                note_difference(meet, pu.piece, rep.offending);
            }
        }
}

bool labels_are_range(const Complex& c, Label n)
{
    auto v = c.vertices();
    if (v.size() != static_cast<size_t>(n)) return false;
    for (Label i = 0; i < n; ++i)
        if (v[i] != i) return false;
    return true;
}

Label hopf_modulus(int k) { return (Label(1) << (k + 1)) - 1; }

} // namespace

PermCycle solid_torus_permcycle(int k)
{
    PermCycle pc{{1, 1, 1}};
    for (int i = 2; i <= k; ++i) pc.entries.push_back(1 << i);
    return pc;
}

PermCycle central_torus_permcycle(int k)
{
    PermCycle pc;
    for (int i = 0; i <= k; ++i) pc.entries.push_back(1 << i);
    return pc;
}

std::vector<Complex> solid_torus_multiples(int k)
{
    Label n = hopf_modulus(k);
    std::vector<Complex> out{expand_permcycle(solid_torus_permcycle(k))};
    for (int j = 1; j <= k; ++j) out.push_back(apply_perm(out.back(), multiplier(n, 2)));
    return out;
}

DecompositionReport verify_hopf(const Complex& s, const PieceMap& pieces, int k, std::uint64_t seed, int workers)
{
    DecompositionReport rep;
    auto idx = singleton_indices(pieces);
    if (static_cast<int>(idx.size()) != k) {
        rep.problems.push_back("expected " + std::to_string(k) + " singleton pieces, found " + std::to_string(idx.size()));
        return rep;
    }
    check_pieces(s, pieces, rep, [&](PieceCheck& pc) {
        int m = static_cast<int>(pc.index.size());
        pc.ball_dim = 2 * k - 2 * m;
        pc.circles = m;
        pc.type = handlebody_check(pc.piece, pc.ball_dim, pc.circles, seed, 100, workers);
    });
    Label n = hopf_modulus(k);
    if (labels_are_range(s, n)) {
        rep.central_is_permcycle_torus = rep.pieces.back().piece == expand_permcycle(central_torus_permcycle(k));
        if (!*rep.central_is_permcycle_torus) rep.problems.push_back("central piece is not the permcycle torus");
    }
    bool types = std::all_of(rep.pieces.begin(), rep.pieces.end(), [](const PieceCheck& p) { return p.type.ok(); });
    bool contained = std::all_of(rep.pieces.begin(), rep.pieces.end(),
                                 [](const PieceCheck& p) { return p.subcomplex && p.matches_intersection; });
    rep.valid = rep.problems.empty() && types && contained && rep.union_ok && rep.boolean_ok;
    return rep;
}

PieceMap apex_pieces(const Complex& c, const std::vector<Label>& apexes)
{
    PieceMap out;
    for (size_t i = 0; i < apexes.size(); ++i) out[{static_cast<int>(i)}] = star(c, {apexes[i]});
    return out;
}

DecompositionReport verify_equilibrium(const Complex& c, const PieceMap& pieces, EquilibriumKind kind,
                                       std::uint64_t seed, int workers)
{
    DecompositionReport rep;
    auto idx = singleton_indices(pieces);
    if (idx.size() < 2) {
        rep.problems.push_back("need at least two zones");
        return rep;
    }
    int k = static_cast<int>(idx.size()) - 1;
    bool complex_case = kind == EquilibriumKind::complex_projective;
    check_pieces(c, pieces, rep, [&](PieceCheck& pc) {
        int m = static_cast<int>(pc.index.size()) - 1;
        if (complex_case) {
            pc.ball_dim = 2 * k - 2 * m;
            pc.circles = m;
            pc.type = handlebody_check(pc.piece, pc.ball_dim, pc.circles, seed, 100, workers);
            return;
        }
        // 2^m disjoint balls of dimension k - m
        pc.ball_dim = k - m;
        pc.circles = 0;
        auto comps = connected_components(pc.piece);
        size_t want = size_t(1) << m;
        if (comps.size() != want) {
            pc.type.evidence = std::to_string(comps.size()) + " components, expected " + std::to_string(want);
            return;
        }
        if (pc.ball_dim == 0) {
            bool points = pc.piece.dim() == 0;
            pc.type.status = points ? Certainty::certified : Certainty::fail;
            pc.type.evidence = points ? std::to_string(want) + " isolated points" : "central piece is not a set of points";
            return;
        }
        pc.type.status = Certainty::certified;
        pc.type.evidence = std::to_string(want) + " balls of dimension " + std::to_string(pc.ball_dim);
        for (const auto& comp : comps) {
            auto st = handlebody_check(comp, pc.ball_dim, 0, seed, 100, workers);
            pc.type.status = weakest(pc.type.status, st.status);
            if (!st.ok()) pc.type.evidence = "component: " + st.evidence;
        }
    });

    // each zone is the star of the one vertex it does not share, and the link of that vertex is split by the pairs
    rep.restriction_ok = true;
    for (int i : idx) {
        const Complex& bi = pieces.at({i});
        std::vector<Label> own;
        for (Label v : bi.vertices()) {
            bool shared = false;
            for (int j : idx)
                if (j != i && pieces.at({j}).has_face({v})) shared = true;
            if (!shared) own.push_back(v);
        }
        if (own.size() != 1) {
            rep.restriction_ok = false;
            rep.problems.push_back("zone " + std::to_string(i) + " has " + std::to_string(own.size()) + " private vertices");
            continue;
        }
        Complex lk = link(c, {own[0]});
        Complex pairs;
        for (const auto& pc : rep.pieces)
            if (pc.index.size() == 2 && std::binary_search(pc.index.begin(), pc.index.end(), i)) pairs = unite(pairs, pc.piece);
        if (star(c, {own[0]}) != bi || pairs != lk) {
            rep.restriction_ok = false;
            rep.problems.push_back("zone " + std::to_string(i) + " is not split along the link of its apex " +
                                   std::to_string(own[0]));
            note_difference(pairs, lk, rep.offending);
        }
    }

    if (complex_case) {
        Label n = hopf_modulus(k);
        const Complex& central = rep.pieces.back().piece;
        if (labels_are_range(central, n)) {
            rep.central_is_permcycle_torus = central == expand_permcycle(central_torus_permcycle(k));
            if (!*rep.central_is_permcycle_torus) rep.problems.push_back("central piece is not the permcycle torus");
        }
    }
    bool types = std::all_of(rep.pieces.begin(), rep.pieces.end(), [](const PieceCheck& p) { return p.type.ok(); });
    rep.valid = rep.problems.empty() && types && rep.union_ok && rep.boolean_ok && *rep.restriction_ok;
    return rep;
}

// ---- barycenter ranks ----

std::vector<RankedOrbit> barycenter_ranks(const Complex& c, const KCyclicSpec& spec, double threshold,
                                          mpfr_prec_t precision)
{
    spec.validate();
    if (!(threshold > 1.0)) throw Error(ErrorKind::usage, "threshold must exceed 1");
    const Label n = static_cast<Label>(spec.n);
    const size_t k = spec.frequencies.size();
    std::vector<std::vector<Interval>> pts;
    for (Label j = 0; j < n; ++j) pts.push_back(interval_trig_point(j, n, spec.frequencies, precision));
    bool finite = std::isfinite(threshold);
    Interval p2 = finite ? Interval::from_rational(Rational(threshold) * Rational(threshold), precision)
                         : Interval::from_rational(0, precision);

    GroupAction z = GroupAction::cyclic(n);
    std::set<Simplex> seen;
    std::vector<RankedOrbit> out;
    for (const auto& f : c.facets()) {
        if (seen.count(f)) continue;
        RankedOrbit ro;
        ro.orbit = z.orbit(f);
        std::sort(ro.orbit.begin(), ro.orbit.end());
        seen.insert(ro.orbit.begin(), ro.orbit.end());
        ro.generator = ro.orbit.front();
        std::vector<Interval> mag2;
        for (size_t i = 0; i < k; ++i) {
            Interval x = Interval::from_rational(0, precision), y = Interval::from_rational(0, precision);
            for (Label v : ro.generator) {
                x = x + pts[v][2 * i];
                y = y + pts[v][2 * i + 1];
            }
            mag2.push_back(x * x + y * y);
            ro.magnitudes.push_back(std::sqrt(std::max(0.0, mag2.back().mid_double())));
        }
        for (size_t i = 0; i < k; ++i) {
            double r = std::numeric_limits<double>::infinity();
            for (size_t j = 0; j < k; ++j)
                if (j != i) r = std::min(r, ro.magnitudes[j] > 0 ? ro.magnitudes[i] / ro.magnitudes[j] : std::numeric_limits<double>::infinity());
            ro.ranks.push_back(r);
        }
        if (finite)
            for (size_t i = 0; i < k && ro.assigned < 0; ++i) {
                bool above = true;
                for (size_t j = 0; j < k && above; ++j)
                    if (j != i && (mag2[i] - p2 * mag2[j]).sign() <= 0) above = false;
                if (above) ro.assigned = static_cast<int>(i);
            }
        out.push_back(std::move(ro));
    }
    std::sort(out.begin(), out.end(), [](const RankedOrbit& a, const RankedOrbit& b) { return a.generator < b.generator; });
    return out;
}

namespace {

// Closedness, Euler characteristics, vertex links, then the handlebody type B^{2k-2} x S^1.
bool acceptable_solid_torus(const Complex& c, int k, const RankSearchOptions& opt)
{
    int d = 2 * k - 1;
    if (c.empty() || c.dim() != d || !c.is_pure() || !is_pseudomanifold_with_boundary(c, d)) return false;
    Complex bd = boundary_complex(c);
    if (bd.empty() || !is_closed_pseudomanifold(bd, d - 1)) return false;
    if (c.euler_characteristic() != 0 || bd.euler_characteristic() != 0) return false;
    SphereOptions so;
    so.seed = opt.seed;
    for (Label v : c.vertices()) {
        Complex lk = link(c, {v});
        CertStatus st = bd.has_face({v}) ? ball_check(lk, d - 1, so) : sphere_check(lk, d - 1, so);
        if (!st.ok()) return false;
    }
    return handlebody_check(c, 2 * k - 2, 1, opt.seed, 100, opt.workers).ok();
}

} // namespace

RankSearchResult barycenter_rank_search(const Complex& c, const KCyclicSpec& spec, const RankSearchOptions& opt)
{
    RankSearchResult res;
    res.orbits = barycenter_ranks(c, spec, opt.threshold, opt.precision);
    const int k = static_cast<int>(spec.frequencies.size());
    std::vector<std::vector<size_t>> assigned(static_cast<size_t>(k));
    std::vector<size_t> ambiguous;
    for (size_t o = 0; o < res.orbits.size(); ++o) {
        if (res.orbits[o].assigned >= 0) assigned[res.orbits[o].assigned].push_back(o);
        else ambiguous.push_back(o);
    }
    res.ambiguous = static_cast<long long>(ambiguous.size());

    auto build = [&](const std::vector<size_t>& orbits) {
        std::vector<Simplex> facets;
        for (size_t o : orbits) facets.insert(facets.end(), res.orbits[o].orbit.begin(), res.orbits[o].orbit.end());
        return Complex::from_facets(std::move(facets));
    };

    std::vector<Complex> chosen(static_cast<size_t>(k));
    std::function<bool(int, const std::vector<size_t>&)> search = [&](int dir, const std::vector<size_t>& remaining) {
        size_t m = remaining.size();
        auto attempt = [&](const std::vector<size_t>& pick) {
            if (res.candidates >= opt.budget)
                throw Error(ErrorKind::search_budget, "budget of " + std::to_string(opt.budget) + " candidates exhausted with " +
                                                          std::to_string(ambiguous.size()) + " ambiguous orbits");
            ++res.candidates;
            std::vector<size_t> orbits = assigned[dir];
            std::vector<size_t> rest;
            for (size_t i = 0; i < m; ++i)
                if (std::find(pick.begin(), pick.end(), i) != pick.end()) orbits.push_back(remaining[i]);
                else rest.push_back(remaining[i]);
            Complex cand = build(orbits);
            if (!acceptable_solid_torus(cand, k, opt)) return false;
            chosen[dir] = std::move(cand);
            return dir + 1 == k || search(dir + 1, rest);
        };
        if (dir + 1 == k) {
            std::vector<size_t> all(m);
            for (size_t i = 0; i < m; ++i) all[i] = i;
            return attempt(all);
        }
        for (size_t size = 0; size <= m; ++size) {
            std::vector<size_t> pick(size);
            for (size_t i = 0; i < size; ++i) pick[i] = i;
            while (true) {
                if (attempt(pick)) return true;
                size_t i = size;
                while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
                if (i == 0) break;
                ++pick[i - 1];
                for (size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
            }
        }
        return false;
    };

    if (!search(0, ambiguous)) return res;
    PieceMap pieces;
    for (int i = 0; i < k; ++i) pieces[{i + 1}] = chosen[static_cast<size_t>(i)];
    std::vector<int> idx;
    for (int i = 1; i <= k; ++i) idx.push_back(i);
    for (const auto& w : subsets_by_size(idx)) {
        if (w.size() < 2) continue;
        Complex meet = pieces[{w[0]}];
        for (size_t i = 1; i < w.size(); ++i) meet = intersect(meet, pieces[{w[i]}]);
        pieces[w] = meet;
    }
    res.pieces = std::move(pieces);
    return res;
}

// ---- perfect equilibrium assembly ----

Assembly assemble_perfect_equilibrium(const Complex& s, int k)
{
    if (k < 1) throw Error(ErrorKind::usage, "k must be positive");
    const Label n = hopf_modulus(k);
    auto autos = standard_autos(k);
    std::vector<std::string> failed;
    if (!labels_are_range(s, n)) failed.push_back("vertices are not 0.." + std::to_string(n - 1));
    if (!is_automorphism(s, autos.tau)) failed.push_back("not invariant under x -> x+1");
    if (!is_automorphism(s, autos.rho)) failed.push_back("not invariant under x -> -x");
    if (!is_subcomplex(expand_permcycle(central_torus_permcycle(k)), s)) failed.push_back("central torus missing");
    if (k >= 2) {
        int contained = 0;
        for (const auto& m : solid_torus_multiples(k))
            if (is_subcomplex(m, s)) ++contained;
        if (contained < k)
            failed.push_back("only " + std::to_string(contained) + " solid torus multiples contained, need " + std::to_string(k));
    }
    if (!failed.empty()) {
        std::string msg;
        for (const auto& f : failed) msg += (msg.empty() ? "" : "; ") + f;
        throw Error(ErrorKind::structure_error, msg);
    }

    Assembly out;
    Permutation sigma = multiplier(n, 2);
    Complex img = s;
    for (int i = 0; i <= k; ++i) {
        Label apex = n + i;
        out.apexes.push_back(apex);
        out.pieces[{i}] = cone(img, apex);
        out.union_complex = unite(out.union_complex, out.pieces[{i}]);
        img = apply_perm(img, sigma);
    }

    // faces away from the apexes whose link in the union falls apart
    const Complex& x = out.union_complex;
    Complex torus = expand_permcycle(central_torus_permcycle(k));
    std::set<Simplex> bad;
    for (int d = 0; d <= 2 * k - 2; ++d)
        for (const auto& f : x.faces(d)) {
            if (f.back() >= n) continue;
            if (connected_components(link(x, f)).size() > 1) bad.insert(f);
        }
    auto shift = [&](const Simplex& f, Label t, Label m) {
        Simplex g;
        for (Label v : f) g.push_back(static_cast<Label>((static_cast<long long>(v) * m + t) % n));
        std::sort(g.begin(), g.end());
        return g;
    };
    std::set<Simplex> done;
    for (const auto& f : bad) {
        if (done.count(f)) continue;
        DefectOrbit orb;
        std::set<Simplex> members;
        for (Label t = 0; t < n; ++t) members.insert(shift(f, t, 1));
        orb.faces.assign(members.begin(), members.end());
        orb.representative = orb.faces.front();
        done.insert(members.begin(), members.end());
        Label mult = 2;
        for (int j = 1; j <= k + 1; ++j, mult = static_cast<Label>((mult * 2) % n)) {
            std::set<Simplex> img_set;
            for (const auto& g : orb.faces) img_set.insert(shift(g, 0, mult));
            if (img_set == members) {
                orb.sigma_period = j;
                break;
            }
        }
        orb.sigma_invariant = orb.sigma_period > 0 && orb.sigma_period <= k;
        orb.in_central_torus = torus.has_face(orb.representative);
        for (const auto& comp : connected_components(link(x, orb.representative)))
            orb.link_components.push_back(static_cast<long long>(comp.num_facets()));
        out.defects.orbits.push_back(std::move(orb));
    }

    if (!out.defects.empty()) {
        out.perfect.evidence = std::to_string(out.defects.orbits.size()) + " orbits of faces with disconnected links";
        return out;
    }
    if (!is_closed_pseudomanifold(x, 2 * k)) {
        out.perfect.evidence = "union is not a closed pseudomanifold";
        return out;
    }
    size_t size = static_cast<size_t>(n) + k + 1;
    std::vector<Label> t(size), r(size), g(size);
    for (Label v = 0; v < n; ++v) {
        t[v] = (v + 1) % n;
        r[v] = (n - v) % n;
        g[v] = static_cast<Label>((2 * v) % n);
    }
    for (int i = 0; i <= k; ++i) {
        t[n + i] = r[n + i] = n + i;
        g[n + i] = n + (i + 1) % (k + 1);
    }
    Permutation pt(t), pr(r), pg(g);
    bool autos_ok = is_automorphism(x, pt) && is_automorphism(x, pr) && is_automorphism(x, pg);
    out.group_order = static_cast<long long>(GroupAction({pt, pr, pg}).order());
    if (!autos_ok) {
        out.perfect.evidence = "tau, rho or sigma does not extend to the union";
        return out;
    }
    out.complex = x;
    out.perfect.status = Certainty::certified;
    out.perfect.evidence = "no defects; tau and rho fix the apexes, sigma permutes them cyclically; group of order " +
                           std::to_string(out.group_order);
    return out;
}

CandidateCensus census_candidate(const std::string& id, const Complex& s)
{
    const int k = 3;
    const Label n = hopf_modulus(k);
    auto autos = standard_autos(k);
    CandidateCensus cc;
    cc.id = id;
    cc.facets = static_cast<long long>(s.num_facets());
    cc.tau_invariant = is_automorphism(s, autos.tau);
    cc.rho_invariant = is_automorphism(s, autos.rho);
    cc.contains_torus = is_subcomplex(expand_permcycle(central_torus_permcycle(k)), s);
    auto mult = solid_torus_multiples(k);
    for (size_t j = 0; j < mult.size(); ++j)
        if (is_subcomplex(mult[j], s)) cc.which_multiples.push_back(static_cast<int>(j));
    cc.multiples_contained = static_cast<int>(cc.which_multiples.size());
    Permutation sigma = multiplier(n, 2);
    Complex img = apply_perm(s, sigma);
    cc.sigma_orbit_size = 1;
    while (img != s) {
        img = apply_perm(img, sigma);
        ++cc.sigma_orbit_size;
    }
    return cc;
}

NoPerfectCp3Report check_no_perfect_cp3()
{
    NoPerfectCp3Report rep;
    for (const std::string id : {"s5-15-7-3", "s5-15", "s5-15-2-2", "s5-15-7-1"}) {
        Complex s = load_dataset_complex(id);
        auto cc = census_candidate(id, s);
        if (cc.sigma_orbit_size == 4 && cc.multiples_contained == 3 && cc.tau_invariant && cc.rho_invariant &&
            cc.contains_torus)
            rep.qualifying.push_back(id);
        rep.candidates.push_back(std::move(cc));
    }
    bool all_defective = true;
    for (const auto& id : rep.qualifying) {
        auto a = assemble_perfect_equilibrium(load_dataset_complex(id), 3);
        if (a.defects.empty()) all_defective = false;
        if (id == rep.qualifying.front()) rep.defects = a.defects;
    }
    rep.no_perfect_cp3 = all_defective;
    return rep;
}

} // namespace hopfforge
