#include "hopfforge/recognition.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "hopfforge/homology.hpp"

namespace hopfforge {

std::string certainty_name(Certainty c)
{
    switch (c) {
    case Certainty::certified: return "certified";
    case Certainty::heuristic_pass: return "heuristic_pass";
    case Certainty::fail: return "fail";
    }
    return "fail";
}

namespace {

std::map<Simplex, int> ridge_counts(const Complex& c, int d)
{
    std::map<Simplex, int> ridges;
    for (const auto& f : c.facets()) {
        if (static_cast<int>(f.size()) != d + 1) continue;
        for (size_t i = 0; i < f.size(); ++i) {
            Simplex r = f;
            r.erase(r.begin() + static_cast<long>(i));
            ++ridges[r];
        }
    }
    return ridges;
}

bool pure_of_dim(const Complex& c, int d)
{
    for (const auto& f : c.facets())
        if (static_cast<int>(f.size()) != d + 1) return false;
    return true;
}

long long binom(long long n, long long k)
{
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

bool is_sphere_homology(const Complex& c, int d)
{
    auto check = [&](const HomologyProfile& h) {
        if (static_cast<int>(h.betti.size()) != d + 1) return false;
        for (int k = 0; k <= d; ++k)
            if (h.betti[k] != ((k == 0 || k == d) ? 1 : 0)) return false;
        return true;
    };
    return check(betti_gf2(c)) && check(betti_rational(c));
}

// ---- bistellar flips on vertex bitmasks ----

using Mask = unsigned __int128;

struct MaskHash {
    size_t operator()(Mask m) const noexcept
    {
        return mix64(static_cast<std::uint64_t>(m) ^ mix64(static_cast<std::uint64_t>(m >> 64)));
    }
};

int popc(Mask m)
{
    return __builtin_popcountll(static_cast<std::uint64_t>(m)) + __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

Mask bit(int v) { return Mask(1) << v; }

std::vector<int> bits_of(Mask m)
{
    std::vector<int> out;
    for (int v = 0; v < 128 && m; ++v)
        if (m & bit(v)) {
            out.push_back(v);
            m &= ~bit(v);
        }
    return out;
}

template <typename T>
class IndexedSet {
public:
    void insert(const T& x)
    {
        if (pos_.count(x)) return;
        pos_[x] = items_.size();
        items_.push_back(x);
    }
    void erase(const T& x)
    {
        auto it = pos_.find(x);
        if (it == pos_.end()) return;
        size_t p = it->second;
        pos_.erase(it);
        if (p + 1 != items_.size()) {
            items_[p] = items_.back();
            pos_[items_[p]] = p;
        }
        items_.pop_back();
    }
    size_t size() const { return items_.size(); }
    const T& operator[](size_t i) const { return items_[i]; }
    const std::vector<T>& items() const { return items_; }

private:
    std::vector<T> items_;
    std::unordered_map<T, size_t, MaskHash> pos_;
};

class FlipEngine {
public:
    FlipEngine(const std::vector<Mask>& facets, int d) : d_(d), cand_(static_cast<size_t>(d))
    {
        for (Mask f : facets) add_facet(f);
    }

    size_t num_facets() const { return facets_.size(); }
    Mask used() const
    {
        Mask u = 0;
        for (Mask f : facets_.items()) u |= f;
        return u;
    }
    const std::vector<Mask>& facets() const { return facets_.items(); }
    const IndexedSet<Mask>& candidates(int i) const { return cand_[static_cast<size_t>(i)]; }

    // B for a legal move at face a of dimension < d, or 0.
    Mask move_target(Mask a) const
    {
        Mask u = 0;
        int n = 0;
        for (Mask f : facets_.items())
            if ((f & a) == a) {
                u |= f;
                ++n;
            }
        int i = popc(a) - 1;
        if (n != d_ - i + 1) return 0;
        Mask b = u & ~a;
        if (popc(b) != d_ - i + 1) return 0;
        if (face_count_.count(b)) return 0;
        return b;
    }

    void apply(Mask a, Mask b)
    {
        std::vector<Mask> gone;
        for (Mask f : facets_.items())
            if ((f & a) == a) gone.push_back(f);
        for (Mask f : gone) remove_facet(f);
        if (popc(a) == 1) {
            add_facet(b);
        } else {
            for (int v : bits_of(a)) add_facet((a & ~bit(v)) | b);
        }
    }

private:
    template <typename F>
    void for_subfaces(Mask f, F&& fn)
    {
        auto vs = bits_of(f);
        unsigned n = static_cast<unsigned>(vs.size());
        for (unsigned s = 1; s < (1u << n); ++s) {
            Mask m = 0;
            for (unsigned j = 0; j < n; ++j)
                if (s & (1u << j)) m |= bit(vs[j]);
            fn(m);
        }
    }

    void refresh(Mask s, int count)
    {
        int i = popc(s) - 1;
        if (i >= d_) return;
        if (count > 0 && popc(s) + count == d_ + 2)
            cand_[static_cast<size_t>(i)].insert(s);
        else
            cand_[static_cast<size_t>(i)].erase(s);
    }

    void add_facet(Mask f)
    {
        facets_.insert(f);
        for_subfaces(f, [&](Mask s) { refresh(s, ++face_count_[s]); });
    }

    void remove_facet(Mask f)
    {
        facets_.erase(f);
        for_subfaces(f, [&](Mask s) {
            auto it = face_count_.find(s);
            int c = --it->second;
            if (c == 0) face_count_.erase(it);
            refresh(s, c);
        });
    }

    int d_;
    IndexedSet<Mask> facets_;
    std::unordered_map<Mask, int, MaskHash> face_count_;
    std::vector<IndexedSet<Mask>> cand_;
};

struct RoundResult {
    bool success = false;
    std::vector<std::pair<Mask, Mask>> moves;
    size_t best_facets = 0;
};

RoundResult bistellar_round(const std::vector<Mask>& start, int d, std::uint64_t seed, int budget,
                            const std::function<bool(const std::vector<Mask>&)>& paranoid)
{
    FlipEngine eng(start, d);
    std::mt19937_64 rng(seed);
    RoundResult out;
    out.best_facets = eng.num_facets();
    std::deque<Mask> tabu;
    auto is_tabu = [&](Mask a) { return std::find(tabu.begin(), tabu.end(), a) != tabu.end(); };
    auto apply = [&](Mask a, Mask b) {
        eng.apply(a, b);
        out.moves.emplace_back(a, b);
        tabu.push_back(b);
        if (tabu.size() > static_cast<size_t>(2 * d + 4)) tabu.pop_front();
        if (paranoid && !paranoid(eng.facets()))
            throw Error(ErrorKind::structure_error, "bistellar flip changed homology");
        out.best_facets = std::min(out.best_facets, eng.num_facets());
    };
    // tries candidates of class i in random order
    auto try_class = [&](int i, bool respect_tabu) {
        if (i == d) {
            Mask free = ~eng.used();
            if (!free) return false;
            int v = bits_of(free & (~Mask(0)))[0];
            const auto& fs = eng.facets();
            Mask a = fs[rng() % fs.size()];
            apply(a, bit(v));
            return true;
        }
        std::vector<Mask> pool = eng.candidates(i).items();
        std::shuffle(pool.begin(), pool.end(), rng);
        for (Mask a : pool) {
            if (respect_tabu && is_tabu(a)) continue;
            Mask b = eng.move_target(a);
            if (b) {
                apply(a, b);
                return true;
            }
        }
        return false;
    };
    int moves = 0;
    for (long long iters = 0; moves < budget && iters < 4LL * budget; ++iters) {
        if (static_cast<int>(eng.num_facets()) == d + 2) {
            out.success = true;
            return out;
        }
        bool moved = false;
        for (int i = 0; 2 * i < d && !moved; ++i) moved = try_class(i, true);
        if (!moved && d % 2 == 0 && rng() % 4 != 0) moved = try_class(d / 2, true);
        if (!moved) {
            int heat = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(d));
            for (int h = 0; h < heat && moves < budget; ++h) {
                int lo = d / 2 + 1;
                int i = (rng() % 4 != 0 || lo == d) ? lo : lo + static_cast<int>(rng() % static_cast<std::uint64_t>(d - lo + 1));
                if (!try_class(i, false) && !try_class(d, false)) break;
                ++moves;
            }
            continue;
        }
        ++moves;
    }
    out.success = static_cast<int>(eng.num_facets()) == d + 2;
    return out;
}

CertStatus sphere_low_dim(const Complex& c, int d)
{
    CertStatus st;
    if (d == 0) {
        if (c.num_facets() == 2 && c.dim() == 0) {
            st.status = Certainty::certified;
            st.evidence = "two points";
        } else {
            st.evidence = "not two points";
        }
        return st;
    }
    if (!is_closed_pseudomanifold(c, d)) {
        st.evidence = "not a closed pseudomanifold";
        return st;
    }
    if (connected_components(c).size() != 1) {
        st.evidence = "disconnected";
        return st;
    }
    if (d == 1) {
        st.status = Certainty::certified;
        st.evidence = "connected cycle";
        return st;
    }
    for (Label v : c.vertices()) {
        Complex l = link(c, {v});
        if (!is_closed_pseudomanifold(l, 1) || connected_components(l).size() != 1) {
            st.evidence = "vertex link not a circle";
            st.failing_face = {v};
            return st;
        }
    }
    if (c.euler_characteristic() != 2) {
        st.evidence = "Euler characteristic " + std::to_string(c.euler_characteristic());
        return st;
    }
    st.status = Certainty::certified;
    st.evidence = "closed connected surface with Euler characteristic 2";
    return st;
}

} // namespace

bool is_closed_pseudomanifold(const Complex& c, int d)
{
    if (c.empty()) return false;
    if (d < 0) d = c.dim();
    if (!pure_of_dim(c, d)) return false;
    if (d == 0) return true;
    for (const auto& [r, n] : ridge_counts(c, d))
        if (n != 2) return false;
    return true;
}

bool is_pseudomanifold_with_boundary(const Complex& c, int d)
{
    if (c.empty()) return false;
    if (d < 0) d = c.dim();
    if (!pure_of_dim(c, d)) return false;
    for (const auto& [r, n] : ridge_counts(c, d))
        if (n > 2) return false;
    return true;
}

std::vector<long long> h_vector(const Complex& c, int d)
{
    auto f = c.f_vector();
    std::vector<long long> fx(static_cast<size_t>(d) + 2, 0);   // fx[i] = f_{i-1}
    fx[0] = 1;
    for (size_t i = 0; i < f.size() && i + 1 < fx.size(); ++i) fx[i + 1] = f[i];
    std::vector<long long> h(static_cast<size_t>(d) + 2, 0);
    for (int k = 0; k <= d + 1; ++k)
        for (int i = 0; i <= k; ++i)
            h[k] += ((k - i) % 2 ? -1 : 1) * binom(d + 1 - i, k - i) * fx[i];
    return h;
}

std::vector<Rational> dehn_sommerville_residual(const Complex& c, int d, long long chi)
{
    auto h = h_vector(c, d);
    long long chi_sphere = 1 + (d % 2 ? -1 : 1);
    std::vector<Rational> out;
    for (int i = 0; i <= d + 1; ++i) {
        long long expected = (i % 2 ? -1 : 1) * binom(d + 1, i) * (chi - chi_sphere);
        out.emplace_back(static_cast<long>(h[d + 1 - i] - h[i] - expected));
    }
    return out;
}

CertStatus sphere_check(const Complex& c, int d, const SphereOptions& opt)
{
    CertStatus st;
    st.seed = opt.seed;
    if (d < 0) {
        st.status = c.empty() ? Certainty::certified : Certainty::fail;
        st.evidence = c.empty() ? "empty sphere" : "nonempty complex for dimension -1";
        return st;
    }
    if (c.empty() || !pure_of_dim(c, d)) {
        st.evidence = "not pure of dimension " + std::to_string(d);
        return st;
    }
    if (d <= 2) return sphere_low_dim(c, d);
    if (!is_closed_pseudomanifold(c, d)) {
        st.evidence = "not a closed pseudomanifold";
        return st;
    }
    if (!is_sphere_homology(c, d)) {
        st.evidence = "homology differs from a sphere";
        return st;
    }
    auto verts = c.vertices();
    if (verts.size() > 128) {
        st.status = Certainty::heuristic_pass;
        st.evidence = "sphere homology; too many vertices for flip search";
        return st;
    }
    std::map<Label, int> to_bit;
    for (size_t i = 0; i < verts.size(); ++i) to_bit[verts[i]] = static_cast<int>(i);
    std::vector<Mask> start;
    for (const auto& f : c.facets()) {
        Mask m = 0;
        for (Label v : f) m |= bit(to_bit[v]);
        start.push_back(m);
    }
    std::function<bool(const std::vector<Mask>&)> paranoid;
    if (opt.paranoid) {
        long long chi = c.euler_characteristic();
        paranoid = [d, chi](const std::vector<Mask>& fs) {
            std::vector<Simplex> sx;
            for (Mask m : fs) sx.push_back(bits_of(m));
            Complex k = Complex::from_facets(sx);
            return k.euler_characteristic() == chi && is_sphere_homology(k, d);
        };
    }

    int rounds = std::max(1, opt.rounds);
    int workers = std::max(1, opt.workers);
    std::vector<RoundResult> results(static_cast<size_t>(rounds));
    int found = -1;
    size_t best = c.num_facets();
    for (int base = 0; base < rounds && found < 0; base += workers) {
        int top = std::min(rounds, base + workers);
        auto job = [&](int r) {
            results[r] = bistellar_round(start, d, mix64(opt.seed + static_cast<std::uint64_t>(r)), opt.moves, paranoid);
        };
        if (workers == 1) {
            job(base);
        } else {
            std::vector<std::thread> pool;
            for (int r = base; r < top; ++r) pool.emplace_back(job, r);
            for (auto& t : pool) t.join();
        }
        for (int r = base; r < top; ++r) {
            best = std::min(best, results[r].best_facets);
            if (results[r].success) {
                found = r;
                break;
            }
        }
    }
    if (found < 0) {
        st.status = Certainty::heuristic_pass;
        st.evidence = "sphere homology; flip search reached " + std::to_string(best) + " facets";
        return st;
    }
    // translate masks back to labels; new vertices get labels above the input
    Label next = c.max_label() + 1;
    std::map<int, Label> label_of;
    for (size_t i = 0; i < verts.size(); ++i) label_of[static_cast<int>(i)] = verts[i];
    std::set<int> live;
    for (size_t i = 0; i < verts.size(); ++i) live.insert(static_cast<int>(i));
    auto to_simplex = [&](Mask m) {
        Simplex s;
        for (int v : bits_of(m)) s.push_back(label_of.at(v));
        return make_simplex(s);
    };
    for (auto [a, b] : results[found].moves) {
        if (popc(b) == 1) {
            int v = bits_of(b)[0];
            if (!live.count(v)) {
                label_of[v] = next++;
                live.insert(v);
            }
        }
        st.trace.push_back({to_simplex(a), to_simplex(b)});
        if (popc(a) == 1) live.erase(bits_of(a)[0]);
    }
    st.status = Certainty::certified;
    st.seed = mix64(opt.seed + static_cast<std::uint64_t>(found));
    st.evidence = "bistellar reduction to the boundary of a simplex in " + std::to_string(st.trace.size()) + " flips";
    return st;
}

CertStatus ball_check(const Complex& c, int d, const SphereOptions& opt)
{
    CertStatus st;
    if (c.empty() || !pure_of_dim(c, d)) {
        st.evidence = "not pure of dimension " + std::to_string(d);
        return st;
    }
    if (d == 0) {
        st.status = c.num_facets() == 1 ? Certainty::certified : Certainty::fail;
        st.evidence = c.num_facets() == 1 ? "point" : "not a point";
        return st;
    }
    if (!is_pseudomanifold_with_boundary(c, d)) {
        st.evidence = "ridge in more than two facets";
        return st;
    }
    Complex bd = boundary_complex(c);
    if (bd.empty()) {
        st.evidence = "empty boundary";
        return st;
    }
    Complex s = unite(c, cone(bd, c.max_label() + 1));
    st = sphere_check(s, d, opt);
    if (st.ok()) st.evidence = "coned boundary: " + st.evidence;
    return st;
}

bool replay_flips(Complex& c, const std::vector<Flip>& flips)
{
    std::set<Simplex> facets(c.facets().begin(), c.facets().end());
    for (const auto& fl : flips) {
        Complex cur = Complex::from_facets(std::vector<Simplex>(facets.begin(), facets.end()));
        if (!cur.has_face(fl.a) || cur.has_face(fl.b)) return false;
        if (!simplex_minus(fl.a, fl.b).size() || fl.a.size() + fl.b.size() != static_cast<size_t>(cur.dim()) + 2) return false;
        std::set<Simplex> expected;
        if (fl.b.size() == 1)
            expected.insert(fl.a);
        else
            for (Label v : fl.b) expected.insert(simplex_union(fl.a, simplex_without(fl.b, v)));
        auto got = cur.facets_containing(fl.a);
        if (std::set<Simplex>(got.begin(), got.end()) != expected) return false;
        for (const auto& f : expected) facets.erase(f);
        if (fl.a.size() == 1)
            facets.insert(fl.b);
        else
            for (Label v : fl.a) facets.insert(simplex_union(fl.b, simplex_without(fl.a, v)));
    }
    c = Complex::from_facets(std::vector<Simplex>(facets.begin(), facets.end()));
    return true;
}

namespace {

// Facets through each vertex, for fast links.
class LinkIndex {
public:
    explicit LinkIndex(const Complex& c) : c_(c)
    {
        for (size_t i = 0; i < c.facets().size(); ++i)
            for (Label v : c.facets()[i]) by_vertex_[v].push_back(i);
    }

    Complex link(const Simplex& s) const
    {
        const std::vector<size_t>* best = nullptr;
        for (Label v : s) {
            auto it = by_vertex_.find(v);
            if (it == by_vertex_.end()) return Complex();
            if (!best || it->second.size() < best->size()) best = &it->second;
        }
        std::vector<Simplex> out;
        for (size_t i : *best) {
            const auto& f = c_.facets()[i];
            if (is_subset(s, f)) out.push_back(simplex_minus(f, s));
        }
        return Complex::from_facets(std::move(out));
    }

private:
    const Complex& c_;
    std::unordered_map<Label, std::vector<size_t>> by_vertex_;
};

} // namespace

ManifoldReport check_manifold(const Complex& c, const ManifoldOptions& opt)
{
    ManifoldReport rep;
    rep.overall.status = Certainty::certified;
    int d = c.dim();
    if (c.empty() || !pure_of_dim(c, d)) {
        rep.overall.status = Certainty::fail;
        rep.overall.evidence = "not pure";
        return rep;
    }
    bool pm = opt.with_boundary ? is_pseudomanifold_with_boundary(c, d) : is_closed_pseudomanifold(c, d);
    if (!pm) {
        rep.overall.status = Certainty::fail;
        rep.overall.evidence = opt.with_boundary ? "ridge in more than two facets" : "not a closed pseudomanifold";
        return rep;
    }
    rep.by_link_dim.resize(static_cast<size_t>(std::max(d, 0)));
    for (int m = 0; m < d; ++m) rep.by_link_dim[m].link_dim = m;
    std::set<Simplex> bd_faces;
    if (opt.with_boundary) {
        auto all = boundary_complex(c).all_faces();
        bd_faces.insert(all.begin(), all.end());
    }
    LinkIndex li(c);
    auto check_face = [&](const Simplex& s) {
        Complex l = li.link(s);
        int m = d - static_cast<int>(s.size());
        return bd_faces.count(s) ? ball_check(l, m, opt.sphere) : sphere_check(l, m, opt.sphere);
    };
    auto record = [&](const Simplex& s, Certainty st, const std::string& why) {
        int m = d - static_cast<int>(s.size());
        if (m < 0) return;
        auto& row = rep.by_link_dim[m];
        if (st == Certainty::certified) ++row.certified;
        else if (st == Certainty::heuristic_pass) ++row.heuristic;
        else ++row.failed;
        if (st < rep.overall.status) {
            rep.overall.status = st;
            if (st == Certainty::fail) {
                rep.overall.failing_face = s;
                rep.overall.evidence = "link of " + to_string(s) + ": " + why;
            }
        }
    };
    std::set<Label> certified_vertex;
    if (d == 0) {
        rep.overall.evidence = "zero-dimensional";
        return rep;
    }
    for (Label v : c.vertices()) {
        CertStatus st = check_face({v});
        rep.vertex_links.emplace_back(Simplex{v}, st.status);
        if (st.status == Certainty::certified) certified_vertex.insert(v);
        record({v}, st.status, st.evidence);
    }
    if (opt.all_faces) {
        for (int k = 1; k < d; ++k) {
            for (const auto& s : c.faces(k)) {
                bool implied = std::any_of(s.begin(), s.end(), [&](Label v) { return certified_vertex.count(v) > 0; });
                if (implied) {
                    record(s, Certainty::certified, "");
                    continue;
                }
                CertStatus st = check_face(s);
                record(s, st.status, st.evidence);
            }
        }
    }
    if (rep.overall.status != Certainty::fail) {
        std::ostringstream ev;
        ev << "links";
        for (const auto& row : rep.by_link_dim)
            ev << " dim" << row.link_dim << ":" << row.certified << "c/" << row.heuristic << "h";
        rep.overall.evidence = ev.str();
    }
    return rep;
}

namespace {

// Hasse-diagram collapse engine for random discrete Morse functions.
class MorseEngine {
public:
    explicit MorseEngine(const Complex& c) : fi_(c)
    {
        int d = fi_.dim();
        offset_.assign(static_cast<size_t>(d) + 2, 0);
        for (int k = 0; k <= d; ++k) offset_[k + 1] = offset_[k] + static_cast<int>(fi_.count(k));
        int n = offset_[d + 1];
        dim_of_.resize(static_cast<size_t>(n));
        bnd_.resize(static_cast<size_t>(n));
        cof_.resize(static_cast<size_t>(n));
        for (int k = 0; k <= d; ++k)
            for (int i = 0; i < static_cast<int>(fi_.count(k)); ++i) {
                int id = offset_[k] + i;
                dim_of_[id] = k;
                if (k == 0) continue;
                for (int j : fi_.boundary(k, i)) {
                    int b = offset_[k - 1] + j;
                    bnd_[id].push_back(b);
                    cof_[b].push_back(id);
                }
            }
    }

    int size() const { return static_cast<int>(dim_of_.size()); }
    int dim() const { return fi_.dim(); }
    int id(const Simplex& s) const
    {
        int i = fi_.index(s);
        return i < 0 ? -1 : offset_[s.size() - 1] + i;
    }
    const Simplex& simplex(int id) const { return fi_.faces(dim_of_[id])[id - offset_[dim_of_[id]]]; }

    // Returns critical cells per dimension; protected cells are never removed.
    std::vector<long long> run(std::mt19937_64& rng, const std::vector<char>& prot,
                               std::vector<std::pair<int, int>>* pairs, std::vector<int>* critical) const
    {
        int n = size();
        int d = dim();
        std::vector<char> alive(static_cast<size_t>(n), 1);
        std::vector<int> cnt(static_cast<size_t>(n));
        std::vector<int> fpos(static_cast<size_t>(n), -1);
        std::vector<int> free_list;
        std::vector<std::vector<int>> by_dim(static_cast<size_t>(d) + 1);
        std::vector<int> dpos(static_cast<size_t>(n), -1);
        long long remaining = 0;
        auto add_free = [&](int f) {
            if (fpos[f] >= 0) return;
            fpos[f] = static_cast<int>(free_list.size());
            free_list.push_back(f);
        };
        auto drop_free = [&](int f) {
            if (fpos[f] < 0) return;
            int last = free_list.back();
            free_list[fpos[f]] = last;
            fpos[last] = fpos[f];
            free_list.pop_back();
            fpos[f] = -1;
        };
        for (int f = 0; f < n; ++f) {
            cnt[f] = static_cast<int>(cof_[f].size());
            if (prot[f]) continue;
            ++remaining;
            dpos[f] = static_cast<int>(by_dim[dim_of_[f]].size());
            by_dim[dim_of_[f]].push_back(f);
            if (cnt[f] == 1) add_free(f);
        }
        auto kill = [&](int f) {
            alive[f] = 0;
            drop_free(f);
            auto& v = by_dim[dim_of_[f]];
            int last = v.back();
            v[dpos[f]] = last;
            dpos[last] = dpos[f];
            v.pop_back();
            --remaining;
            for (int b : bnd_[f]) {
                int c = --cnt[b];
                if (prot[b] || !alive[b]) continue;
                if (c == 1) add_free(b);
                else drop_free(b);
            }
        };
        std::vector<long long> crit(static_cast<size_t>(d) + 1, 0);
        while (remaining > 0) {
            if (!free_list.empty()) {
                int s = free_list[rng() % free_list.size()];
                int t = -1;
                for (int x : cof_[s])
                    if (alive[x]) t = x;
                if (pairs) pairs->emplace_back(s, t);
                kill(t);
                kill(s);
                continue;
            }
            int k = d;
            while (by_dim[k].empty()) --k;
            int f = by_dim[k][rng() % by_dim[k].size()];
            ++crit[k];
            if (critical) critical->push_back(f);
            kill(f);
        }
        return crit;
    }

private:
    FaceIndex fi_;
    std::vector<int> offset_;
    std::vector<int> dim_of_;
    std::vector<std::vector<int>> bnd_;
    std::vector<std::vector<int>> cof_;
};

bool morse_better(const std::vector<long long>& a, const std::vector<long long>& b)
{
    long long sa = std::accumulate(a.begin(), a.end(), 0LL);
    long long sb = std::accumulate(b.begin(), b.end(), 0LL);
    if (sa != sb) return sa < sb;
    return a < b;
}

} // namespace

MorseResult random_discrete_morse(const Complex& c, std::uint64_t seed, int tries, int workers)
{
    if (c.empty()) throw Error(ErrorKind::usage, "random_discrete_morse on an empty complex");
    MorseEngine eng(c);
    std::vector<char> prot(static_cast<size_t>(eng.size()), 0);
    tries = std::max(1, tries);
    workers = std::max(1, std::min(workers, tries));
    std::vector<std::vector<long long>> vecs(static_cast<size_t>(tries));
    auto job = [&](int w) {
        for (int t = w; t < tries; t += workers) {
            std::mt19937_64 rng(mix64(seed + static_cast<std::uint64_t>(t)));
            vecs[t] = eng.run(rng, prot, nullptr, nullptr);
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& t : pool) t.join();
    }
    MorseResult best{vecs[0], seed};
    for (int t = 1; t < tries; ++t)
        if (morse_better(vecs[t], best.vector)) best = {vecs[t], seed + static_cast<std::uint64_t>(t)};
    return best;
}

std::optional<CollapseTrace> collapse_onto(const Complex& c, const Simplex& target, const std::vector<Simplex>& avoid,
                                           std::uint64_t seed, int tries)
{
    if (c.empty()) return std::nullopt;
    MorseEngine eng(c);
    std::vector<char> prot(static_cast<size_t>(eng.size()), 0);
    auto protect_closure = [&](const Simplex& s) {
        for (size_t k = 1; k <= s.size(); ++k)
            for (const auto& f : subsets_of_size(s, k)) {
                int id = eng.id(f);
                if (id < 0) throw Error(ErrorKind::not_a_face, to_string(f) + " is not a face");
                prot[id] = 1;
            }
    };
    if (c.has_face(target)) {
        protect_closure(target);
    } else {
        for (Label v : target) {
            Simplex side = simplex_without(target, v);
            if (!side.empty()) protect_closure(side);
        }
    }
    for (const auto& a : avoid) protect_closure(a);
    std::optional<CollapseTrace> best;
    for (int t = 0; t < std::max(1, tries); ++t) {
        std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        std::mt19937_64 rng(mix64(s));
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> critical;
        auto crit = eng.run(rng, prot, &pairs, &critical);
        if (best && !morse_better(crit, best->critical_by_dim)) continue;
        CollapseTrace tr;
        for (auto [a, b] : pairs) tr.pairs.emplace_back(eng.simplex(a), eng.simplex(b));
        for (int f : critical) tr.critical.push_back(eng.simplex(f));
        tr.critical_by_dim = crit;
        tr.seed = s;
        best = std::move(tr);
        if (std::accumulate(crit.begin(), crit.end(), 0LL) == 0) break;
    }
    return best;
}

CertStatus handlebody_check(const Complex& c, int ball_dim, int circles, std::uint64_t seed, int tries, int workers)
{
    CertStatus st;
    st.seed = seed;
    int d = ball_dim + circles;
    if (c.empty() || c.dim() != d || !pure_of_dim(c, d)) {
        st.evidence = "not pure of dimension " + std::to_string(d);
        return st;
    }
    if (ball_dim == 0) {
        if (!is_closed_pseudomanifold(c, d)) {
            st.evidence = "closed torus expected but some ridge is not in two facets";
            return st;
        }
    } else {
        if (!is_pseudomanifold_with_boundary(c, d)) {
            st.evidence = "ridge in more than two facets";
            return st;
        }
        Complex bd = boundary_complex(c);
        if (bd.empty() || !is_closed_pseudomanifold(bd, d - 1)) {
            st.evidence = "boundary is not a closed pseudomanifold";
            return st;
        }
    }
    std::vector<long long> want(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) want[k] = binom(circles, k);
    auto h = betti_gf2(c);
    if (h.betti != want) {
        st.evidence = "GF(2) homology differs from a product of circles";
        return st;
    }
    auto m = random_discrete_morse(c, seed, tries, workers);
    st.seed = m.seed;
    std::ostringstream ev;
    ev << "Morse vector (";
    for (size_t k = 0; k < m.vector.size(); ++k) ev << (k ? "," : "") << m.vector[k];
    ev << ")";
    if (m.vector != want) {
        st.evidence = ev.str() + " is not perfect";
        return st;
    }
    st.status = Certainty::heuristic_pass;
    st.evidence = ev.str() + (ball_dim == 0 ? " perfect, closed pseudomanifold" : " perfect, boundary closed pseudomanifold");
    return st;
}

bool is_orientable(const Complex& c)
{
    int d = c.dim();
    if (c.empty() || !pure_of_dim(c, d)) return false;
    const auto& facets = c.facets();
    std::map<Simplex, std::vector<std::pair<size_t, int>>> ridges;   // ridge -> (facet, induced sign)
    for (size_t f = 0; f < facets.size(); ++f)
        for (size_t i = 0; i < facets[f].size(); ++i) {
            Simplex r = facets[f];
            r.erase(r.begin() + static_cast<long>(i));
            ridges[r].emplace_back(f, i % 2 ? -1 : 1);
        }
    std::vector<int> orient(facets.size(), 0);
    for (size_t s = 0; s < facets.size(); ++s) {
        if (orient[s]) continue;
        orient[s] = 1;
        std::vector<size_t> stack{s};
        while (!stack.empty()) {
            size_t f = stack.back();
            stack.pop_back();
            for (size_t i = 0; i < facets[f].size(); ++i) {
                Simplex r = facets[f];
                r.erase(r.begin() + static_cast<long>(i));
                const auto& inc = ridges[r];
                if (inc.size() > 2) return false;
                if (inc.size() < 2) continue;
                int mine = orient[f] * (i % 2 ? -1 : 1);
                for (const auto& [g, sg] : inc) {
                    if (g == f) continue;
                    int want = -mine * sg;
                    if (!orient[g]) {
                        orient[g] = want;
                        stack.push_back(g);
                    } else if (orient[g] != want) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

} // namespace hopfforge
