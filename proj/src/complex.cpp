#include "hopfforge/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hopfforge {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::malformed_input: return "malformed-input";
    case ErrorKind::not_a_face: return "not-a-face";
    case ErrorKind::label_clash: return "label-clash";
    case ErrorKind::non_simplicial_quotient: return "non-simplicial-quotient";
    case ErrorKind::invalid_cocycle: return "invalid-cocycle";
    case ErrorKind::unsupported_fixed_set: return "unsupported-fixed-set";
    case ErrorKind::order_too_large: return "order-too-large";
    case ErrorKind::not_a_subcomplex: return "not-a-subcomplex";
    case ErrorKind::not_a_cycle: return "not-a-cycle";
    case ErrorKind::search_budget: return "search-budget";
    case ErrorKind::degenerate_hull: return "degenerate-hull";
    case ErrorKind::build_error: return "build-error";
    case ErrorKind::no_adaptor_needed: return "no-adaptor-needed";
    case ErrorKind::search_exhausted: return "search-exhausted";
    case ErrorKind::structure_error: return "structure-error";
    case ErrorKind::polytope_error: return "polytope-error";
    case ErrorKind::corrupted_data: return "corrupted-data";
    case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

Simplex make_simplex(std::vector<Label> labels)
{
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw Error(ErrorKind::malformed_input, "repeated vertex in simplex " + to_string(labels));
    for (Label v : labels)
        if (v < 0) throw Error(ErrorKind::malformed_input, "negative vertex label");
    return labels;
}

std::string to_string(const Simplex& s)
{
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << ')';
    return out.str();
}

bool is_subset(const Simplex& a, const Simplex& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Simplex simplex_union(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex simplex_minus(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Simplex simplex_with(const Simplex& s, Label v)
{
    Simplex out = s;
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

Simplex simplex_without(const Simplex& s, Label v)
{
    Simplex out;
    out.reserve(s.size());
    for (Label x : s)
        if (x != v) out.push_back(x);
    return out;
}

size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    uint64_t h = 1469598103934665603ull;
    for (Label v : s) {
        h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<size_t>(h);
}

std::vector<Simplex> subsets_of_size(const Simplex& s, size_t size)
{
    std::vector<Simplex> out;
    if (size > s.size()) return out;
    std::vector<size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Simplex sub(size);
        for (size_t i = 0; i < size; ++i) sub[i] = s[idx[i]];
        out.push_back(std::move(sub));
        size_t i = size;
        while (i > 0 && idx[i - 1] == s.size() - size + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Complex Complex::from_facets(std::vector<Simplex> simplices)
{
    for (auto& s : simplices) s = make_simplex(std::move(s));
    simplices.erase(std::remove_if(simplices.begin(), simplices.end(),
                                   [](const Simplex& s) { return s.empty(); }),
                    simplices.end());
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

    bool same_size = std::all_of(simplices.begin(), simplices.end(),
                                 [&](const Simplex& s) { return s.size() == simplices.front().size(); });
    Complex c;
    if (same_size) {
        c.facets_ = std::move(simplices);
        return c;
    }

    std::vector<size_t> order(simplices.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return simplices[a].size() > simplices[b].size(); });
    std::unordered_map<Label, std::vector<size_t>> by_vertex;
    std::vector<Simplex> kept;
    for (size_t i : order) {
        const Simplex& s = simplices[i];
        const std::vector<size_t>* best = nullptr;
        bool some_empty = false;
        for (Label v : s) {
            auto it = by_vertex.find(v);
            if (it == by_vertex.end()) {
                some_empty = true;
                break;
            }
            if (!best || it->second.size() < best->size()) best = &it->second;
        }
        bool dominated = false;
        if (!some_empty && best)
            for (size_t k : *best)
                if (is_subset(s, kept[k])) {
                    dominated = true;
                    break;
                }
        if (dominated) continue;
        for (Label v : s) by_vertex[v].push_back(kept.size());
        kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    c.facets_ = std::move(kept);
    return c;
}

int Complex::dim() const
{
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool Complex::is_pure() const
{
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Simplex& f) { return f.size() == facets_.front().size(); });
}

std::vector<Label> Complex::vertices() const
{
    std::vector<Label> v;
    for (const auto& f : facets_) v.insert(v.end(), f.begin(), f.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Label Complex::max_label() const
{
    Label m = -1;
    for (const auto& f : facets_)
        if (!f.empty()) m = std::max(m, f.back());
    return m;
}

bool Complex::has_face(const Simplex& s) const
{
    for (const auto& f : facets_)
        if (is_subset(s, f)) return true;
    return false;
}

bool Complex::has_facet(const Simplex& s) const
{
    return std::binary_search(facets_.begin(), facets_.end(), s);
}

std::vector<Simplex> Complex::faces(int k) const
{
    std::vector<Simplex> out;
    if (k < 0) return out;
    for (const auto& f : facets_) {
        if (static_cast<int>(f.size()) < k + 1) continue;
        auto subs = subsets_of_size(f, k + 1);
        out.insert(out.end(), std::make_move_iterator(subs.begin()), std::make_move_iterator(subs.end()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Simplex> Complex::all_faces() const
{
    std::vector<Simplex> out;
    for (int k = 0; k <= dim(); ++k) {
        auto fk = faces(k);
        out.insert(out.end(), fk.begin(), fk.end());
    }
    return out;
}

std::vector<long long> Complex::f_vector() const
{
    std::vector<long long> f;
    for (int k = 0; k <= dim(); ++k) f.push_back(static_cast<long long>(faces(k).size()));
    return f;
}

long long euler_characteristic(const std::vector<long long>& f)
{
    long long chi = 0;
    for (size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? -f[i] : f[i]);
    return chi;
}

long long Complex::euler_characteristic() const { return hopfforge::euler_characteristic(f_vector()); }

std::vector<Simplex> Complex::facets_containing(const Simplex& s) const
{
    std::vector<Simplex> out;
    for (const auto& f : facets_)
        if (is_subset(s, f)) out.push_back(f);
    return out;
}

Complex link(const Complex& c, const Simplex& s)
{
    auto around = c.facets_containing(s);
    if (around.empty()) throw Error(ErrorKind::not_a_face, to_string(s));
    std::vector<Simplex> out;
    for (const auto& f : around) out.push_back(simplex_minus(f, s));
    return Complex::from_facets(std::move(out));
}

Complex star(const Complex& c, const Simplex& s)
{
    auto around = c.facets_containing(s);
    if (around.empty()) throw Error(ErrorKind::not_a_face, to_string(s));
    return Complex::from_facets(std::move(around));
}

Complex closure(const std::vector<Simplex>& faces) { return Complex::from_facets(faces); }

Complex induced_subcomplex(const Complex& c, const std::vector<Label>& w)
{
    std::vector<Label> ws = w;
    std::sort(ws.begin(), ws.end());
    std::vector<Simplex> out;
    for (const auto& f : c.facets()) {
        Simplex s;
        std::set_intersection(f.begin(), f.end(), ws.begin(), ws.end(), std::back_inserter(s));
        if (!s.empty()) out.push_back(std::move(s));
    }
    return Complex::from_facets(std::move(out));
}

Complex cone(const Complex& c, Label apex)
{
    std::vector<Simplex> out;
    for (const auto& f : c.facets()) {
        if (std::binary_search(f.begin(), f.end(), apex))
            throw Error(ErrorKind::label_clash, "apex " + std::to_string(apex) + " already a vertex");
        out.push_back(simplex_with(f, apex));
    }
    return Complex::from_facets(std::move(out));
}

Complex unite(const Complex& a, const Complex& b)
{
    std::vector<Simplex> out = a.facets();
    out.insert(out.end(), b.facets().begin(), b.facets().end());
    return Complex::from_facets(std::move(out));
}

Complex intersect(const Complex& a, const Complex& b)
{
    std::unordered_set<Simplex, SimplexHash> in_b;
    for (int k = 0; k <= b.dim(); ++k)
        for (auto& s : b.faces(k)) in_b.insert(std::move(s));
    std::vector<Simplex> out;
    for (int k = 0; k <= a.dim(); ++k)
        for (auto& s : a.faces(k))
            if (in_b.count(s)) out.push_back(std::move(s));
    return Complex::from_facets(std::move(out));
}

bool is_subcomplex(const Complex& a, const Complex& c)
{
    if (a.empty()) return true;
    std::vector<std::vector<size_t>> by_vertex(static_cast<size_t>(std::max(a.max_label(), c.max_label()) + 1));
    for (size_t i = 0; i < c.facets().size(); ++i)
        for (Label v : c.facets()[i]) by_vertex[v].push_back(i);
    for (const auto& f : a.facets()) {
        const auto* best = &by_vertex[f[0]];
        for (Label v : f)
            if (by_vertex[v].size() < best->size()) best = &by_vertex[v];
        bool found = false;
        for (size_t i : *best)
            if (is_subset(f, c.facets()[i])) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

Complex boundary_complex(const Complex& c)
{
    std::map<Simplex, int> count;
    for (const auto& f : c.facets())
        for (auto& r : subsets_of_size(f, f.size() - 1)) ++count[r];
    std::vector<Simplex> out;
    for (auto& [r, n] : count)
        if (n == 1 && !r.empty()) out.push_back(r);
    return Complex::from_facets(std::move(out));
}

Complex stellar_subdivide(const Complex& c, const Simplex& s, Label new_label)
{
    return stellar_subdivide_in(c, s, new_label, c.facets_containing(s));
}

Complex stellar_subdivide_in(const Complex& c, const Simplex& s, Label new_label,
                             const std::vector<Simplex>& region)
{
    if (region.empty()) throw Error(ErrorKind::not_a_face, to_string(s));
    for (const auto& f : c.facets())
        if (std::binary_search(f.begin(), f.end(), new_label))
            throw Error(ErrorKind::label_clash, "label " + std::to_string(new_label) + " in use");
    std::set<Simplex> replaced(region.begin(), region.end());
    std::vector<Simplex> out;
    for (const auto& f : c.facets()) {
        if (!replaced.count(f)) {
            out.push_back(f);
            continue;
        }
        if (!is_subset(s, f)) throw Error(ErrorKind::not_a_face, to_string(s) + " not in " + to_string(f));
        for (Label v : s) out.push_back(simplex_with(simplex_without(f, v), new_label));
        replaced.erase(f);
    }
    if (!replaced.empty()) throw Error(ErrorKind::not_a_face, to_string(*replaced.begin()) + " is not a facet");
    return Complex::from_facets(std::move(out));
}

Complex relabel(const Complex& c, const std::function<Label(Label)>& f)
{
    std::vector<Simplex> out;
    out.reserve(c.num_facets());
    for (const auto& s : c.facets()) {
        Simplex t;
        t.reserve(s.size());
        for (Label v : s) t.push_back(f(v));
        out.push_back(make_simplex(std::move(t)));
    }
    return Complex::from_facets(std::move(out));
}

Complex relabel(const Complex& c, const std::map<Label, Label>& m)
{
    return relabel(c, [&](Label v) {
        auto it = m.find(v);
        return it == m.end() ? v : it->second;
    });
}

std::vector<Complex> connected_components(const Complex& c)
{
    std::map<Label, Label> parent;
    std::function<Label(Label)> find = [&](Label x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& f : c.facets())
        for (Label v : f) parent.emplace(v, v);
    for (const auto& f : c.facets())
        for (size_t i = 1; i < f.size(); ++i) {
            Label a = find(f[0]), b = find(f[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<Label, std::vector<Simplex>> groups;
    for (const auto& f : c.facets()) groups[find(f[0])].push_back(f);
    std::vector<Complex> out;
    for (auto& [root, fs] : groups) out.push_back(Complex::from_facets(std::move(fs)));
    return out;
}

Complex antipodal_quotient(const Complex& c, const std::map<Label, Label>& iota)
{
    auto rep = [&](Label v) {
        auto it = iota.find(v);
        if (it == iota.end()) throw Error(ErrorKind::malformed_input, "involution undefined on " + std::to_string(v));
        if (it->second == v) throw Error(ErrorKind::malformed_input, "involution fixes vertex " + std::to_string(v));
        return std::min(v, it->second);
    };
    std::vector<Simplex> out;
    for (const auto& f : c.facets()) {
        Simplex q;
        for (Label v : f) q.push_back(rep(v));
        std::sort(q.begin(), q.end());
        if (std::adjacent_find(q.begin(), q.end()) != q.end())
            throw Error(ErrorKind::non_simplicial_quotient, "face " + to_string(f) + " contains an antipodal pair");
        out.push_back(std::move(q));
    }
    // every face of the quotient must have exactly the two preimages f and iota f
    std::map<Simplex, int> preimages;
    for (const auto& f : c.all_faces()) {
        Simplex q;
        for (Label v : f) q.push_back(rep(v));
        std::sort(q.begin(), q.end());
        ++preimages[q];
    }
    for (const auto& [q, k] : preimages) {
        if (k == 1) throw Error(ErrorKind::malformed_input, "complex is not invariant under the involution at " + to_string(q));
        if (k > 2) throw Error(ErrorKind::non_simplicial_quotient, "distinct faces collapse onto " + to_string(q));
    }
    return Complex::from_facets(std::move(out));
}

DoubleCover double_cover(const Complex& c, const std::map<Simplex, int>& cocycle)
{
    auto w = [&](Label a, Label b) {
        auto it = cocycle.find(Simplex{std::min(a, b), std::max(a, b)});
        return it == cocycle.end() ? 0 : (it->second & 1);
    };
    for (const auto& t : c.faces(2))
        if ((w(t[0], t[1]) + w(t[1], t[2]) + w(t[0], t[2])) % 2)
            throw Error(ErrorKind::invalid_cocycle, "nonzero on boundary of " + to_string(t));

    auto verts = c.vertices();
    Label offset = verts.empty() ? 0 : verts.back() + 1;
    DoubleCover out;
    std::vector<Simplex> lifted;
    for (const auto& f : c.facets()) {
        for (int sheet = 0; sheet < 2; ++sheet) {
            // Sheet of each vertex: parity of the path from the first vertex.
            Simplex s;
            for (Label v : f) {
                int p = (sheet + (v == f[0] ? 0 : w(f[0], v))) % 2;
                s.push_back(v + p * offset);
            }
            lifted.push_back(make_simplex(std::move(s)));
        }
    }
    out.cover = Complex::from_facets(std::move(lifted));
    for (Label v : verts) {
        out.deck[v] = v + offset;
        out.deck[v + offset] = v;
        out.projection[v] = v;
        out.projection[v + offset] = v;
    }
    return out;
}

FixedPointSet fixed_point_complex(const Complex& c, const std::map<Label, Label>& rho)
{
    auto img = [&](Label v) {
        auto it = rho.find(v);
        return it == rho.end() ? v : it->second;
    };
    bool nontrivial = false;
    for (Label v : c.vertices()) {
        if (img(img(v)) != v)
            throw Error(ErrorKind::unsupported_fixed_set, "map is not an involution at " + std::to_string(v));
        if (img(v) != v) nontrivial = true;
    }
    if (!nontrivial) throw Error(ErrorKind::unsupported_fixed_set, "identity involution");
    {
        std::vector<Simplex> image;
        for (const auto& f : c.facets()) {
            Simplex s;
            for (Label v : f) s.push_back(img(v));
            image.push_back(make_simplex(std::move(s)));
        }
        if (Complex::from_facets(std::move(image)) != c)
            throw Error(ErrorKind::unsupported_fixed_set, "map is not a simplicial automorphism");
    }

    FixedPointSet out;
    std::vector<Simplex> pieces;
    std::set<Simplex> seen;
    for (int k = 0; k <= c.dim(); ++k) {
        for (const auto& s : c.faces(k)) {
            Simplex t;
            for (Label v : s) t.push_back(img(v));
            std::sort(t.begin(), t.end());
            if (t != s) continue;
            Simplex fixed;
            for (Label v : s) {
                Label m = std::min(v, img(v));
                fixed.push_back(m);
                out.origin[m] = {std::min(v, img(v)), std::max(v, img(v))};
            }
            std::sort(fixed.begin(), fixed.end());
            fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
            if (seen.insert(fixed).second) pieces.push_back(fixed);
        }
    }
    out.complex = Complex::from_facets(std::move(pieces));
    return out;
}

namespace {

struct IsoData {
    std::vector<Label> verts;
    std::map<Label, int> index;
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<long long>> invariant;
    std::vector<std::vector<int>> facets;   // as vertex indices
};

IsoData iso_data(const Complex& c)
{
    IsoData d;
    d.verts = c.vertices();
    for (size_t i = 0; i < d.verts.size(); ++i) d.index[d.verts[i]] = static_cast<int>(i);
    size_t n = d.verts.size();
    d.adj.assign(n, std::vector<char>(n, 0));
    std::vector<std::vector<Simplex>> vstar(n);
    for (const auto& f : c.facets()) {
        std::vector<int> fi;
        for (Label v : f) fi.push_back(d.index[v]);
        for (int a : fi) {
            vstar[a].push_back(simplex_without(f, d.verts[a]));
            for (int b : fi)
                if (a != b) d.adj[a][b] = 1;
        }
        d.facets.push_back(std::move(fi));
    }
    d.invariant.resize(n);
    for (size_t i = 0; i < n; ++i) {
        auto lk = Complex::from_facets(vstar[i]);
        d.invariant[i] = lk.f_vector();
        d.invariant[i].push_back(static_cast<long long>(lk.num_facets()));
    }
    return d;
}

} // namespace

std::optional<std::map<Label, Label>> find_isomorphism(const Complex& a, const Complex& b)
{
    if (a.num_facets() != b.num_facets() || a.f_vector() != b.f_vector()) return std::nullopt;
    IsoData da = iso_data(a), db = iso_data(b);
    size_t n = da.verts.size();
    if (n != db.verts.size()) return std::nullopt;
    {
        auto ia = da.invariant, ib = db.invariant;
        std::sort(ia.begin(), ia.end());
        std::sort(ib.begin(), ib.end());
        if (ia != ib) return std::nullopt;
    }
    if (n == 0) return std::map<Label, Label>{};

    // Order: start from the rarest invariant class, then grow along edges.
    std::map<std::vector<long long>, int> class_size;
    for (auto& inv : da.invariant) ++class_size[inv];
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    while (order.size() < n) {
        int best = -1;
        long long best_key = -1;
        for (size_t v = 0; v < n; ++v) {
            if (placed[v]) continue;
            long long links = 0;
            for (int u : order) links += da.adj[v][u];
            long long key = links * 1000000 - class_size[da.invariant[v]];
            if (best < 0 || key > best_key) {
                best = static_cast<int>(v);
                best_key = key;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<int> pos(n);
    for (size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<int>(i);
    // Facets checked once their last vertex (in order) is placed.
    std::vector<std::vector<int>> closing(n);
    for (size_t f = 0; f < da.facets.size(); ++f) {
        int last = 0;
        for (int v : da.facets[f]) last = std::max(last, pos[v]);
        closing[last].push_back(static_cast<int>(f));
    }
    std::set<std::vector<int>> bfacets;
    for (auto f : db.facets) {
        std::sort(f.begin(), f.end());
        bfacets.insert(f);
    }

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(size_t)> extend = [&](size_t depth) -> bool {
        if (depth == n) return true;
        int v = order[depth];
        for (size_t w = 0; w < n; ++w) {
            if (used[w] || db.invariant[w] != da.invariant[v]) continue;
            bool ok = true;
            for (size_t i = 0; i < depth && ok; ++i) {
                int u = order[i];
                if (da.adj[v][u] != db.adj[w][map[u]]) ok = false;
            }
            if (!ok) continue;
            map[v] = static_cast<int>(w);
            for (int f : closing[depth]) {
                std::vector<int> img;
                for (int x : da.facets[f]) img.push_back(map[x]);
                std::sort(img.begin(), img.end());
                if (!bfacets.count(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[w] = 1;
                if (extend(depth + 1)) return true;
                used[w] = 0;
            }
            map[v] = -1;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    std::map<Label, Label> out;
    for (size_t v = 0; v < n; ++v) out[da.verts[v]] = db.verts[map[v]];
    return out;
}

std::vector<long long> CubicalComplex::f_vector() const
{
    std::vector<long long> f(static_cast<size_t>(dim + 1), 0);
    for (const auto& cell : cells) {
        int d = 0;
        while ((size_t(1) << d) < cell.size()) ++d;
        ++f[d];
    }
    return f;
}

std::vector<std::vector<Label>> CubicalComplex::cells_of_dim(int k) const
{
    std::vector<std::vector<Label>> out;
    for (const auto& cell : cells)
        if (cell.size() == (size_t(1) << k)) out.push_back(cell);
    return out;
}

CubicalComplex cube_boundary_complex(int m)
{
    // A face of the m-cube: each coordinate is 0, 1 or free; the boundary excludes the all-free cell.
    CubicalComplex c;
    c.dim = m - 1;
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        std::vector<int> state(m);
        long long x = code;
        int free_count = 0;
        for (int i = 0; i < m; ++i) {
            state[i] = static_cast<int>(x % 3);
            x /= 3;
            if (state[i] == 2) ++free_count;
        }
        if (free_count == m) continue;
        std::vector<Label> corners;
        for (Label v = 0; v < (1 << m); ++v) {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i)
                if (state[i] != 2 && ((v >> i) & 1) != state[i]) ok = false;
            if (ok) corners.push_back(v);
        }
        c.cells.push_back(std::move(corners));
    }
    std::sort(c.cells.begin(), c.cells.end());
    return c;
}

CubicalComplex antipodal_quotient(const CubicalComplex& c, const std::map<Label, Label>& iota)
{
    CubicalComplex out;
    out.dim = c.dim;
    std::set<std::vector<Label>> cells;
    for (const auto& cell : c.cells) {
        std::vector<Label> q;
        for (Label v : cell) {
            auto it = iota.find(v);
            if (it == iota.end() || it->second == v)
                throw Error(ErrorKind::malformed_input, "involution must move every corner");
            q.push_back(std::min(v, it->second));
        }
        std::sort(q.begin(), q.end());
        if (std::adjacent_find(q.begin(), q.end()) != q.end())
            throw Error(ErrorKind::non_simplicial_quotient, "cell contains an antipodal pair");
        cells.insert(std::move(q));
    }
    out.cells.assign(cells.begin(), cells.end());
    return out;
}

} // namespace hopfforge
