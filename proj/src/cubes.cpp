#include "hopfforge/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

namespace hopfforge {

namespace {

struct Cell {
    std::vector<int> free;
    std::vector<int> fixed;
    std::vector<int> vals;
    std::vector<Label> corners;   // in product order over the free bits
};

int popcount(unsigned v) { return __builtin_popcount(v); }

// Cells of dimension dim of the m-cube boundary, ordered by free-coordinate combination then values.
std::vector<Cell> cube_cells(int m, int dim)
{
    std::vector<Cell> out;
    std::vector<int> comb(static_cast<size_t>(dim));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == dim) {
            Cell base;
            base.free = comb;
            for (int i = 0; i < m; ++i)
                if (std::find(comb.begin(), comb.end(), i) == comb.end()) base.fixed.push_back(i);
            int nf = static_cast<int>(base.fixed.size());
            for (int vv = 0; vv < (1 << nf); ++vv) {
                Cell c = base;
                c.vals.resize(static_cast<size_t>(nf));
                for (int t = 0; t < nf; ++t) c.vals[t] = (vv >> (nf - 1 - t)) & 1;
                for (int fv = 0; fv < (1 << dim); ++fv) {
                    Label v = 0;
                    for (int t = 0; t < nf; ++t) v |= c.vals[t] << c.fixed[t];
                    for (int t = 0; t < dim; ++t) v |= ((fv >> (dim - 1 - t)) & 1) << c.free[t];
                    c.corners.push_back(v);
                }
                out.push_back(std::move(c));
            }
            return;
        }
        for (int i = start; i < m; ++i) {
            comb[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

Simplex quotient_set(const std::vector<Label>& corners, int m)
{
    Simplex s;
    for (Label v : corners) s.push_back(quotient_corner(v, m));
    return make_simplex(s);
}

bool contains_all(const std::vector<Label>& big, const std::vector<Label>& small)
{
    for (Label v : small)
        if (std::find(big.begin(), big.end(), v) == big.end()) return false;
    return true;
}

// Five tetrahedra of a 3-cell; the central one on corners of global parity == mirror.
std::vector<std::vector<Label>> five_tet_cell(const Cell& c, int mirror)
{
    std::vector<std::vector<Label>> tets;
    std::vector<Label> central;
    for (Label v : c.corners)
        if (popcount(static_cast<unsigned>(v)) % 2 == mirror) central.push_back(v);
    tets.push_back(central);
    for (Label v : c.corners) {
        if (popcount(static_cast<unsigned>(v)) % 2 == mirror) continue;
        std::vector<Label> t{v};
        for (int i : c.free) t.push_back(v ^ (1 << i));
        tets.push_back(t);
    }
    return tets;
}

constexpr int rp4_bits = 5;

struct SquareClass {
    Simplex key;   // quotient labels
    // (cube index, diagonal for mirror 0, diagonal for mirror 1)
    std::vector<std::tuple<int, Simplex, Simplex>> incident;
};

struct Rp4Geometry {
    std::vector<Cell> reps;
    std::vector<SquareClass> squares;
    std::vector<std::vector<Simplex>> cube_squares;   // per cube, quotient keys of its squares
    std::vector<std::array<std::vector<Simplex>, 2>> quotient_tets;
};

Simplex cell_diagonal(const std::vector<std::vector<Label>>& tets, const std::vector<Label>& sq)
{
    for (size_t i = 0; i < sq.size(); ++i)
        for (size_t j = i + 1; j < sq.size(); ++j) {
            Label a = sq[i], b = sq[j];
            if (popcount(static_cast<unsigned>(a ^ b)) != 2) continue;
            for (const auto& t : tets)
                if (contains_all(t, {a, b})) return make_simplex({quotient_corner(a, rp4_bits), quotient_corner(b, rp4_bits)});
        }
    throw Error(ErrorKind::structure_error, "square without diagonal");
}

const Rp4Geometry& rp4_geometry()
{
    static const Rp4Geometry geo = [] {
        Rp4Geometry g;
        for (auto& c : cube_cells(rp4_bits, 3))
            if (c.vals[0] == 0) g.reps.push_back(c);
        const Label top = (1 << rp4_bits) - 1;
        std::vector<std::array<std::vector<std::vector<Label>>, 2>> tets(g.reps.size());
        for (size_t i = 0; i < g.reps.size(); ++i)
            for (int mir = 0; mir < 2; ++mir) {
                tets[i][mir] = five_tet_cell(g.reps[i], mir);
                g.quotient_tets.resize(g.reps.size());
                for (const auto& t : tets[i][mir]) g.quotient_tets[i][mir].push_back(quotient_set(t, rp4_bits));
            }
        g.cube_squares.resize(g.reps.size());
        std::map<Simplex, size_t> seen;
        for (const auto& sq : cube_cells(rp4_bits, 2)) {
            Simplex key = quotient_set(sq.corners, rp4_bits);
            if (seen.count(key)) continue;
            seen[key] = g.squares.size();
            SquareClass cls;
            cls.key = key;
            std::vector<Label> anti;
            for (Label v : sq.corners) anti.push_back(top - v);
            for (size_t i = 0; i < g.reps.size(); ++i)
                for (const auto& s : {sq.corners, anti})
                    if (contains_all(g.reps[i].corners, s)) {
                        cls.incident.emplace_back(static_cast<int>(i), cell_diagonal(tets[i][0], s), cell_diagonal(tets[i][1], s));
                        g.cube_squares[i].push_back(key);
                    }
            if (cls.incident.size() != 3) throw Error(ErrorKind::structure_error, "square class not in three cubes");
            g.squares.push_back(std::move(cls));
        }
        return g;
    }();
    return geo;
}

int common_fixed(const Cell& a, const Cell& b)
{
    for (int x : a.fixed)
        if (std::find(b.fixed.begin(), b.fixed.end(), x) != b.fixed.end()) return x;
    throw Error(ErrorKind::structure_error, "cubes share no 4-cube");
}

void check_assignment(const std::vector<int>& a)
{
    if (a.size() != static_cast<size_t>(rp4_cube_count)) throw Error(ErrorKind::usage, "assignment must have 20 entries");
    for (int x : a)
        if (x != 0 && x != 1) throw Error(ErrorKind::usage, "assignment entries must be 0 or 1");
}

} // namespace

Label quotient_corner(Label v, int m)
{
    Label top = (1 << m) - 1;
    return std::min(v, top - v);
}

PyramidDecomposition pyramid_decomposition(int k)
{
    if (k < 1) throw Error(ErrorKind::usage, "pyramid decomposition needs k >= 1");
    int m = k + 1;
    PyramidDecomposition out;
    out.k = k;
    std::set<Label> verts;
    for (const auto& big : cube_cells(m, k)) {
        if (big.vals[0] != 0) continue;
        int i = big.fixed[0];
        Label apex = (1 << k) + i;
        for (const auto& face : cube_cells(m, k - 1)) {
            if (!contains_all(big.corners, face.corners)) continue;
            std::vector<Label> base;
            for (Label v : face.corners) base.push_back(quotient_corner(v, m));
            std::sort(base.begin(), base.end());
            verts.insert(base.begin(), base.end());
            verts.insert(apex);
            out.pyramids.emplace_back(base, apex);
        }
    }
    out.num_vertices = static_cast<int>(verts.size());
    return out;
}

FiveTet cube3_five_tet(bool mirror, const std::vector<Label>& corners)
{
    if (corners.size() != 8) throw Error(ErrorKind::usage, "cube needs 8 corner labels");
    if (std::set<Label>(corners.begin(), corners.end()).size() != 8) throw Error(ErrorKind::label_clash, "repeated cube corner");
    int p = mirror ? 1 : 0;
    FiveTet out;
    std::vector<Simplex> tets;
    Simplex central;
    for (unsigned b = 0; b < 8; ++b)
        if (popcount(b) % 2 == p) central.push_back(corners[b]);
    tets.push_back(make_simplex(central));
    for (unsigned b = 0; b < 8; ++b) {
        if (popcount(b) % 2 == p) continue;
        tets.push_back(make_simplex({corners[b], corners[b ^ 1], corners[b ^ 2], corners[b ^ 4]}));
    }
    out.tets = Complex::from_facets(tets);
    for (int bit = 0; bit < 3; ++bit)
        for (unsigned val = 0; val < 2; ++val) {
            Simplex d;
            for (unsigned b = 0; b < 8; ++b)
                if (((b >> bit) & 1) == val && popcount(b) % 2 == p) d.push_back(corners[b]);
            out.diagonals.push_back(make_simplex(d));
        }
    std::sort(out.diagonals.begin(), out.diagonals.end());
    return out;
}

Simplex flat_adaptor(const std::vector<Label>& square, const Simplex& diag_a, const Simplex& diag_b)
{
    Simplex sq = make_simplex(square);
    if (sq.size() != 4) throw Error(ErrorKind::usage, "square needs 4 distinct corners");
    for (const auto& d : {diag_a, diag_b})
        if (d.size() != 2 || !is_subset(d, sq)) throw Error(ErrorKind::usage, "diagonal " + to_string(d) + " not in square");
    if (diag_a == diag_b) throw Error(ErrorKind::no_adaptor_needed, "both sides use diagonal " + to_string(diag_a));
    if (simplex_minus(diag_a, diag_b).size() != 2)
        throw Error(ErrorKind::usage, "diagonals must be disjoint");
    return sq;
}

int count_incoherent(const std::vector<int>& assignment)
{
    check_assignment(assignment);
    int n = 0;
    for (const auto& sq : rp4_geometry().squares) {
        std::set<Simplex> ds;
        for (const auto& [idx, d0, d1] : sq.incident) ds.insert(assignment[idx] ? d1 : d0);
        if (ds.size() > 1) ++n;
    }
    return n;
}

Rp4NiceBuild build_rp4_nice(const std::vector<int>& assignment, bool check_spheres)
{
    check_assignment(assignment);
    const auto& g = rp4_geometry();
    Rp4NiceBuild out;
    out.assignment = assignment;
    std::map<int, std::vector<Simplex>> ad_in;
    for (const auto& sq : g.squares) {
        std::vector<std::pair<int, Simplex>> ds;
        for (const auto& [idx, d0, d1] : sq.incident) ds.emplace_back(idx, assignment[idx] ? d1 : d0);
        std::map<Simplex, int> tally;
        for (const auto& [idx, d] : ds) ++tally[d];
        if (tally.size() == 1) continue;
        ++out.incoherent;
        int odd = -1;
        Simplex odd_diag, other_diag;
        for (const auto& [idx, d] : ds)
            if (tally[d] == 1) {
                odd = idx;
                odd_diag = d;
            } else {
                other_diag = d;
            }
        Simplex adaptor = flat_adaptor(sq.key, other_diag, odd_diag);
        out.adaptors.push_back(adaptor);
        for (const auto& [idx, d] : ds) {
            if (idx == odd) continue;
            int f = common_fixed(g.reps[idx], g.reps[odd]);
            ad_in[f].push_back(adaptor);
            out.adaptor_cubes[adaptor].push_back(f);
        }
    }
    std::vector<Simplex> skeleton = out.adaptors;
    for (size_t i = 0; i < g.reps.size(); ++i)
        for (const auto& t : g.quotient_tets[i][assignment[i]]) skeleton.push_back(t);
    out.skeleton3 = Complex::from_facets(skeleton);

    std::vector<Simplex> facets;
    for (int i = 0; i < rp4_bits; ++i) {
        std::vector<Simplex> bd;
        for (size_t c = 0; c < g.reps.size(); ++c) {
            const auto& fx = g.reps[c].fixed;
            if (std::find(fx.begin(), fx.end(), i) == fx.end()) continue;
            for (const auto& t : g.quotient_tets[c][assignment[c]]) bd.push_back(t);
        }
        for (const auto& a : ad_in[i]) bd.push_back(a);
        Complex sphere = Complex::from_facets(bd);
        if (check_spheres) {
            CertStatus st = sphere_check(sphere, 3);
            if (st.status != Certainty::certified)
                throw Error(ErrorKind::build_error, "boundary of 4-cube " + std::to_string(i) + " is not a 3-sphere: " + st.evidence);
        }
        for (const auto& t : sphere.facets()) facets.push_back(simplex_with(t, rp4_apex_base + i));
        out.cube4_spheres.push_back(std::move(sphere));
    }
    out.complex = Complex::from_facets(std::move(facets));
    return out;
}

IncoherentSearch search_min_incoherent(int workers)
{
    const auto& g = rp4_geometry();
    // per square: cube indices and diagonal bit for mirror 0 / 1
    struct Row {
        int cube[3];
        int val[3][2];
    };
    std::vector<Row> rows;
    for (const auto& sq : g.squares) {
        Row r{};
        Simplex ref = std::get<1>(sq.incident[0]);
        for (int j = 0; j < 3; ++j) {
            const auto& [idx, d0, d1] = sq.incident[j];
            r.cube[j] = idx;
            r.val[j][0] = d0 == ref ? 0 : 1;
            r.val[j][1] = d1 == ref ? 0 : 1;
        }
        rows.push_back(r);
    }
    const std::uint32_t total = 1u << rp4_cube_count;
    workers = std::max(1, workers);
    std::vector<int> mins(static_cast<size_t>(workers), 1 << 30);
    std::vector<std::vector<std::uint32_t>> args(static_cast<size_t>(workers));
    auto job = [&](int w) {
        std::uint32_t lo = static_cast<std::uint32_t>(static_cast<std::uint64_t>(total) * w / workers);
        std::uint32_t hi = static_cast<std::uint32_t>(static_cast<std::uint64_t>(total) * (w + 1) / workers);
        int best = 1 << 30;
        std::vector<std::uint32_t> found;
        for (std::uint32_t a = lo; a < hi; ++a) {
            int n = 0;
            for (const auto& r : rows) {
                int v0 = r.val[0][(a >> r.cube[0]) & 1];
                int v1 = r.val[1][(a >> r.cube[1]) & 1];
                int v2 = r.val[2][(a >> r.cube[2]) & 1];
                if (v0 != v1 || v1 != v2) ++n;
            }
            if (n < best) {
                best = n;
                found.clear();
            }
            if (n == best) found.push_back(a);
        }
        mins[w] = best;
        args[w] = std::move(found);
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& t : pool) t.join();
    }
    IncoherentSearch out;
    out.minimum = *std::min_element(mins.begin(), mins.end());
    for (int w = 0; w < workers; ++w)
        if (mins[w] == out.minimum) out.argmins.insert(out.argmins.end(), args[w].begin(), args[w].end());
    std::sort(out.argmins.begin(), out.argmins.end());
    out.at_zero = count_incoherent(std::vector<int>(rp4_cube_count, 0));
    return out;
}

KleinBottles extract_klein_bottles(const Rp4NiceBuild& rp4)
{
    const auto& g = rp4_geometry();
    KleinBottles out;
    const int i = 0, j = 1;
    out.cube4_pair = {i, j};
    Complex s1 = star(rp4.complex, {rp4_apex_base + i});
    Complex s2 = star(rp4.complex, {rp4_apex_base + j});
    out.hypersurface = boundary_complex(unite(s1, s2));

    std::vector<int> h;
    for (size_t c = 0; c < g.reps.size(); ++c) {
        const auto& fx = g.reps[c].fixed;
        int hits = (std::find(fx.begin(), fx.end(), i) != fx.end()) + (std::find(fx.begin(), fx.end(), j) != fx.end());
        if (hits == 1) h.push_back(static_cast<int>(c));
    }
    auto diagonal_in = [&](int cube, const Simplex& key) {
        for (const auto& sq : g.squares) {
            if (sq.key != key) continue;
            for (const auto& [idx, d0, d1] : sq.incident)
                if (idx == cube) return rp4.assignment[cube] ? d1 : d0;
        }
        throw Error(ErrorKind::structure_error, "square not in cube");
    };
    // splits of the 12 cubes into 6 + 6 whose interface is a closed nonorientable surface
    const int half = static_cast<int>(h.size()) / 2;
    std::vector<int> pick(static_cast<size_t>(half));
    std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
        if (depth == half) {
            if (pick[0] != h[0]) return false;
            std::set<Simplex> a, b;
            std::set<int> in(pick.begin(), pick.end());
            for (int c : h)
                for (const auto& k : g.cube_squares[c]) (in.count(c) ? a : b).insert(k);
            std::vector<Simplex> tris;
            for (const auto& key : a) {
                if (!b.count(key)) continue;
                int owner = -1;
                for (int c : pick)
                    if (std::find(g.cube_squares[c].begin(), g.cube_squares[c].end(), key) != g.cube_squares[c].end()) {
                        owner = c;
                        break;
                    }
                Simplex d = diagonal_in(owner, key);
                for (Label v : simplex_minus(key, d)) tris.push_back(simplex_with(d, v));
            }
            if (tris.size() != 32) return false;
            Complex s = Complex::from_facets(tris);
            if (s.num_vertices() != 16 || !is_closed_pseudomanifold(s, 2) || s.euler_characteristic() != 0) return false;
            if (connected_components(s).size() != 1 || is_orientable(s)) return false;
            out.surface = s;
            return true;
        }
        for (int x = start; x < static_cast<int>(h.size()); ++x) {
            pick[depth] = h[x];
            if (rec(x + 1, depth + 1)) return true;
        }
        return false;
    };
    rec(0, 0);
    return out;
}

namespace {

constexpr int rp3_bits = 4;
constexpr Label rp3_apex_base = 8;

// quotient square -> its diagonal
const std::map<Simplex, Simplex>& rp3_diagonals()
{
    static const std::map<Simplex, Simplex> d = {
        {{0, 1, 4, 5}, {1, 4}}, {{2, 3, 6, 7}, {2, 7}}, {{0, 1, 2, 3}, {1, 2}}, {{4, 5, 6, 7}, {4, 7}},
        {{0, 2, 4, 6}, {2, 4}}, {{1, 3, 5, 7}, {1, 7}}, {{0, 2, 5, 7}, {0, 5}}, {{1, 3, 4, 6}, {3, 6}},
        {{1, 2, 5, 6}, {5, 6}}, {{0, 3, 4, 7}, {0, 3}}, {{0, 1, 6, 7}, {0, 6}}, {{2, 3, 4, 5}, {3, 5}}};
    return d;
}

// cube j has fixed coordinate (3 + j) mod 4 at value 0 and apex 8 + j
std::vector<Simplex> rp3_cube_boundary(int j)
{
    int fixed = (3 + j) % rp3_bits;
    Cell cube;
    for (const auto& c : cube_cells(rp3_bits, 3))
        if (c.fixed[0] == fixed && c.vals[0] == 0) cube = c;
    std::vector<Simplex> tris;
    for (const auto& sq : cube_cells(rp3_bits, 2)) {
        if (!contains_all(cube.corners, sq.corners)) continue;
        Simplex key = quotient_set(sq.corners, rp3_bits);
        auto it = rp3_diagonals().find(key);
        if (it == rp3_diagonals().end()) throw Error(ErrorKind::structure_error, "no diagonal for square " + to_string(key));
        for (Label v : simplex_minus(key, it->second)) tris.push_back(simplex_with(it->second, v));
    }
    return tris;
}

} // namespace

Complex build_rp3_nice_12()
{
    std::vector<Simplex> facets;
    for (int j = 0; j < 4; ++j)
        for (const auto& t : rp3_cube_boundary(j)) facets.push_back(simplex_with(t, rp3_apex_base + j));
    return Complex::from_facets(std::move(facets));
}

Complex build_rp3_11()
{
    Complex c12 = build_rp3_nice_12();
    const Label apex = rp3_apex_base;
    Complex sphere = link(c12, {apex});
    std::set<Simplex> allowed;
    for (const auto& e : sphere.faces(1)) allowed.insert(e);
    std::set<Simplex> boundary(sphere.facets().begin(), sphere.facets().end());
    auto verts = sphere.vertices();
    std::vector<Simplex> cand;
    for (const auto& t : subsets_of_size(verts, 4)) {
        bool ok = true;
        for (const auto& e : subsets_of_size(t, 2))
            if (!allowed.count(e)) ok = false;
        if (ok) cand.push_back(t);
    }
    // exact cover: boundary triangles once, interior triangles twice
    std::map<Simplex, int> used;
    std::vector<Simplex> chosen;
    std::optional<Complex> filling;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (filling) return;
        const Simplex* open = nullptr;
        for (const auto& b : boundary)
            if (used[b] == 0) {
                open = &b;
                break;
            }
        if (!open)
            for (const auto& [t, n] : used)
                if (!boundary.count(t) && n == 1) {
                    open = &t;
                    break;
                }
        if (!open) {
            Complex ball = Complex::from_facets(chosen);
            if (ball.num_facets() == chosen.size() && boundary_complex(ball) == sphere && ball_check(ball, 3).ok())
                filling = ball;
            return;
        }
        Simplex need = *open;
        for (size_t i = 0; i < cand.size(); ++i) {
            const auto& t = cand[i];
            if (!is_subset(need, t) || std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
            bool ok = true;
            for (const auto& tri : subsets_of_size(t, 3)) {
                int limit = boundary.count(tri) ? 1 : 2;
                if (used[tri] + 1 > limit) ok = false;
            }
            if (!ok) continue;
            for (const auto& tri : subsets_of_size(t, 3)) ++used[tri];
            chosen.push_back(t);
            rec(i + 1);
            chosen.pop_back();
            for (const auto& tri : subsets_of_size(t, 3)) --used[tri];
            if (filling) return;
        }
    };
    rec(0);
    if (!filling) throw Error(ErrorKind::search_exhausted, "cube C has no filling without new edges");
    std::vector<Simplex> facets;
    for (const auto& f : c12.facets())
        if (!std::binary_search(f.begin(), f.end(), apex)) facets.push_back(f);
    for (const auto& t : filling->facets()) facets.push_back(t);
    return Complex::from_facets(std::move(facets));
}

} // namespace hopfforge
