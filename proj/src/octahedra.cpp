#include "hopfforge/constructions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace hopfforge {

namespace {

// Vertices of a 4-cycle link in cyclic order, starting at the smallest; empty if not a 4-cycle.
std::vector<Label> four_cycle(const Complex& lk)
{
    if (lk.dim() != 1 || lk.num_facets() != 4) return {};
    auto verts = lk.vertices();
    if (verts.size() != 4) return {};
    std::map<Label, std::vector<Label>> adj;
    for (const auto& e : lk.facets()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) return {};
    std::vector<Label> cyc{verts[0]};
    Label prev = verts[0], cur = std::min(adj[verts[0]][0], adj[verts[0]][1]);
    while (cur != verts[0]) {
        cyc.push_back(cur);
        Label next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    return cyc.size() == 4 ? cyc : std::vector<Label>{};
}

OctahedralCell cell_of_axis(const Simplex& axis, const std::vector<Label>& cyc)
{
    OctahedralCell cell;
    cell.vertices = {axis[0], axis[1], cyc[0], cyc[1], cyc[2], cyc[3]};
    std::sort(cell.vertices.begin(), cell.vertices.end());
    cell.opposite = {{axis[0], axis[1]}, {cyc[0], cyc[2]}, {std::min(cyc[1], cyc[3]), std::max(cyc[1], cyc[3])}};
    std::sort(cell.opposite.begin(), cell.opposite.end());
    return cell;
}

} // namespace

Octahedralization octahedralize(const Complex& c)
{
    if (c.dim() != 3) throw Error(ErrorKind::structure_error, "octahedral cells need a 3-dimensional complex");
    std::vector<Simplex> axes;
    std::map<Simplex, std::vector<Label>> cycles;
    for (const auto& e : c.faces(1)) {
        auto cyc = four_cycle(link(c, e));
        if (cyc.empty()) continue;
        axes.push_back(e);
        cycles[e] = cyc;
    }
    if (axes.empty()) throw Error(ErrorKind::structure_error, "no edge has a 4-cycle link");

    const auto& facets = c.facets();
    std::map<Simplex, size_t> index;
    for (size_t i = 0; i < facets.size(); ++i) index[facets[i]] = i;
    std::vector<std::vector<size_t>> star_of(axes.size());
    for (size_t a = 0; a < axes.size(); ++a)
        for (const auto& f : c.facets_containing(axes[a])) star_of[a].push_back(index[f]);

    // lexicographically first exact cover of the facets by axis stars
    std::vector<int> covered(facets.size(), 0);
    std::vector<size_t> chosen;
    std::function<bool()> rec = [&]() -> bool {
        size_t open = facets.size();
        for (size_t i = 0; i < facets.size(); ++i)
            if (!covered[i]) {
                open = i;
                break;
            }
        if (open == facets.size()) return true;
        for (size_t a = 0; a < axes.size(); ++a) {
            const auto& st = star_of[a];
            if (std::find(st.begin(), st.end(), open) == st.end()) continue;
            if (std::any_of(st.begin(), st.end(), [&](size_t f) { return covered[f]; })) continue;
            for (size_t f : st) covered[f] = 1;
            chosen.push_back(a);
            if (rec()) return true;
            chosen.pop_back();
            for (size_t f : st) covered[f] = 0;
        }
        return false;
    };
    if (!rec()) throw Error(ErrorKind::structure_error, "facets are not partitioned by octahedral edge stars");

    Octahedralization out;
    std::sort(chosen.begin(), chosen.end());
    for (size_t a : chosen) {
        out.axes.push_back(axes[a]);
        out.cells.push_back(cell_of_axis(axes[a], cycles[axes[a]]));
    }
    return out;
}

std::optional<std::map<Simplex, int>> nontrivial_cocycle(const Complex& c)
{
    auto verts = c.vertices();
    auto edges = c.faces(1);
    if (verts.empty()) return std::nullopt;
    std::map<Label, std::vector<Label>> adj;
    for (const auto& e : edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::set<Simplex> tree;
    std::set<Label> seen{verts[0]};
    std::deque<Label> queue{verts[0]};
    while (!queue.empty()) {
        Label v = queue.front();
        queue.pop_front();
        for (Label w : adj[v])
            if (seen.insert(w).second) {
                tree.insert(make_simplex({v, w}));
                queue.push_back(w);
            }
    }
    std::map<Simplex, size_t> var;
    std::vector<Simplex> free_edges;
    for (const auto& e : edges)
        if (!tree.count(e)) {
            var[e] = free_edges.size();
            free_edges.push_back(e);
        }
    size_t nv = free_edges.size();
    if (nv == 0) return std::nullopt;

    // rows: triangle constraints over the non-tree edges
    std::vector<std::vector<int>> rows;
    for (const auto& t : c.faces(2)) {
        std::vector<int> row(nv, 0);
        for (const auto& e : subsets_of_size(t, 2)) {
            auto it = var.find(e);
            if (it != var.end()) row[it->second] ^= 1;
        }
        if (std::any_of(row.begin(), row.end(), [](int x) { return x; })) rows.push_back(std::move(row));
    }
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < nv && r < rows.size(); ++col) {
        size_t p = r;
        while (p < rows.size() && !rows[p][col]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][col])
                for (size_t j = col; j < nv; ++j) rows[i][j] ^= rows[r][j];
        pivots.push_back(col);
        ++r;
    }
    size_t free_col = nv;
    for (size_t col = 0; col < nv; ++col)
        if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) {
            free_col = col;
            break;
        }
    if (free_col == nv) return std::nullopt;
    std::vector<int> x(nv, 0);
    x[free_col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][free_col];
    std::map<Simplex, int> out;
    for (const auto& e : edges) out[e] = 0;
    for (size_t i = 0; i < nv; ++i) out[free_edges[i]] = x[i];
    return out;
}

CoverReport verify_24cell_cover(const Complex& c)
{
    CoverReport rep;
    Octahedralization oct = octahedralize(c);
    auto cocycle = nontrivial_cocycle(c);
    if (!cocycle) {
        rep.status.evidence = "H^1(GF(2)) vanishes: no connected double cover";
        return rep;
    }
    DoubleCover dc = double_cover(c, *cocycle);
    rep.cover = dc.cover;
    rep.vertices = static_cast<long long>(dc.cover.num_vertices());

    std::vector<OctahedralCell> cells;
    std::set<Simplex> covered;
    bool partition = true;
    for (const auto& e : dc.cover.faces(1)) {
        Simplex down = make_simplex({dc.projection.at(e[0]), dc.projection.at(e[1])});
        if (!std::binary_search(oct.axes.begin(), oct.axes.end(), down)) continue;
        auto cyc = four_cycle(link(dc.cover, e));
        if (cyc.empty()) {
            partition = false;
            continue;
        }
        cells.push_back(cell_of_axis(e, cyc));
        for (const auto& f : dc.cover.facets_containing(e))
            if (!covered.insert(f).second) partition = false;
    }
    rep.octahedra = static_cast<long long>(cells.size());
    if (covered.size() != dc.cover.num_facets()) partition = false;

    // vertex links in the octahedral complex: squares on the four non-opposite neighbours
    bool cubes = true;
    for (Label v : dc.cover.vertices()) {
        std::map<Label, int> deg;
        std::map<std::pair<Label, Label>, int> edge_count;
        size_t squares = 0;
        for (const auto& cell : cells) {
            if (!std::binary_search(cell.vertices.begin(), cell.vertices.end(), v)) continue;
            ++squares;
            Label opp = v;
            for (const auto& [a, b] : cell.opposite)
                if (a == v) opp = b;
                else if (b == v) opp = a;
            for (Label w : cell.vertices)
                if (w != v && w != opp) ++deg[w];
            for (Label a : cell.vertices)
                for (Label b : cell.vertices) {
                    if (a >= b || a == v || b == v || a == opp || b == opp) continue;
                    bool opposite = false;
                    for (const auto& [x, y] : cell.opposite)
                        if (x == a && y == b) opposite = true;
                    if (!opposite) ++edge_count[{a, b}];
                }
        }
        bool ok = squares == 6 && deg.size() == 8 && edge_count.size() == 12;
        for (const auto& [w, n] : deg)
            if (n != 3) ok = false;
        for (const auto& [e, n] : edge_count)
            if (n != 2) ok = false;
        if (!ok) cubes = false;
    }
    rep.vertex_links_cubes = cubes;

    bool connected = connected_components(dc.cover).size() == 1;
    if (partition && connected && rep.vertices == 24 && rep.octahedra == 24 && cubes) {
        rep.status.status = Certainty::certified;
        rep.status.evidence = "connected double cover with 24 vertices and 24 octahedra; every vertex link is a cube boundary";
    } else {
        rep.status.evidence = "cover has " + std::to_string(rep.vertices) + " vertices, " + std::to_string(rep.octahedra) +
                              " octahedra" + (partition ? "" : ", octahedra do not partition the facets") +
                              (connected ? "" : ", disconnected") + (cubes ? "" : ", some vertex link is not a cube");
    }
    return rep;
}

} // namespace hopfforge
