#include "hopfforge/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "hopfforge/exact.hpp"

namespace hopfforge {

FaceIndex::FaceIndex(const Complex& c)
{
    int d = c.dim();
    faces_.resize(static_cast<size_t>(d + 1));
    index_.resize(static_cast<size_t>(d + 1));
    for (int k = 0; k <= d; ++k) {
        faces_[k] = c.faces(k);
        index_[k].reserve(faces_[k].size() * 2);
        for (size_t i = 0; i < faces_[k].size(); ++i) index_[k].emplace(faces_[k][i], static_cast<int>(i));
    }
}

int FaceIndex::index(const Simplex& s) const
{
    int k = static_cast<int>(s.size()) - 1;
    if (k < 0 || k > dim()) return -1;
    auto it = index_[k].find(s);
    return it == index_[k].end() ? -1 : it->second;
}

std::vector<int> FaceIndex::boundary(int k, int i) const
{
    std::vector<int> out;
    if (k == 0) return out;
    const Simplex& s = faces_[k][i];
    Simplex sub(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
        for (size_t a = 0, b = 0; a < s.size(); ++a)
            if (a != drop) sub[b++] = s[a];
        out.push_back(index_[k - 1].at(sub));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> boundary_chain(const Simplex& s) { return subsets_of_size(s, s.size() - 1); }

std::vector<long long> gf2_boundary_ranks(const FaceIndex& fi)
{
    int d = fi.dim();
    std::vector<long long> rank(static_cast<size_t>(std::max(d, 0) + 1), 0);
    std::vector<char> cleared;
    for (int k = d; k >= 1; --k) {
        std::vector<char> next_cleared(fi.count(k - 1), 0);
        std::vector<int> pivot_of(fi.count(k - 1), -1);
        std::vector<std::vector<int>> stored;
        for (size_t j = 0; j < fi.count(k); ++j) {
            if (!cleared.empty() && cleared[j]) continue;
            std::vector<int> col = fi.boundary(k, static_cast<int>(j));
            while (!col.empty() && pivot_of[col.back()] >= 0) gf2_xor_into(col, stored[pivot_of[col.back()]]);
            if (col.empty()) continue;
            pivot_of[col.back()] = static_cast<int>(stored.size());
            next_cleared[col.back()] = 1;
            stored.push_back(std::move(col));
        }
        rank[k] = static_cast<long long>(stored.size());
        cleared.swap(next_cleared);
    }
    return rank;
}

namespace {

using ModCol = std::vector<std::pair<int, unsigned long long>>;

unsigned long long mod_pow(unsigned long long a, unsigned long long e, unsigned long long p)
{
    unsigned long long r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = static_cast<unsigned long long>((unsigned __int128)r * a % p);
        a = static_cast<unsigned long long>((unsigned __int128)a * a % p);
        e >>= 1;
    }
    return r;
}

// target -= f * other (mod p)
void mod_axpy(ModCol& target, const ModCol& other, unsigned long long f, unsigned long long p)
{
    ModCol out;
    out.reserve(target.size() + other.size());
    size_t a = 0, b = 0;
    while (a < target.size() || b < other.size()) {
        if (b == other.size() || (a < target.size() && target[a].first < other[b].first)) {
            out.push_back(target[a++]);
        } else if (a == target.size() || other[b].first < target[a].first) {
            unsigned long long v = (p - static_cast<unsigned long long>((unsigned __int128)f * other[b].second % p)) % p;
            if (v) out.emplace_back(other[b].first, v);
            ++b;
        } else {
            unsigned long long v = (target[a].second + p -
                                    static_cast<unsigned long long>((unsigned __int128)f * other[b].second % p)) % p;
            if (v) out.emplace_back(target[a].first, v);
            ++a;
            ++b;
        }
    }
    target.swap(out);
}

ModCol signed_boundary_mod(const FaceIndex& fi, int k, int j, unsigned long long p)
{
    const Simplex& s = fi.faces(k)[j];
    ModCol col;
    Simplex sub(s.size() - 1);
    for (size_t drop = 0; drop < s.size(); ++drop) {
        for (size_t a = 0, b = 0; a < s.size(); ++a)
            if (a != drop) sub[b++] = s[a];
        col.emplace_back(fi.index(sub), drop % 2 ? p - 1 : 1);
    }
    std::sort(col.begin(), col.end());
    return col;
}

} // namespace

std::vector<long long> modp_boundary_ranks(const FaceIndex& fi, unsigned long long p)
{
    int d = fi.dim();
    std::vector<long long> rank(static_cast<size_t>(std::max(d, 0) + 1), 0);
    std::vector<char> cleared;
    for (int k = d; k >= 1; --k) {
        std::vector<char> next_cleared(fi.count(k - 1), 0);
        std::vector<int> pivot_of(fi.count(k - 1), -1);
        std::vector<ModCol> stored;
        std::vector<unsigned long long> inv_low;
        for (size_t j = 0; j < fi.count(k); ++j) {
            if (!cleared.empty() && cleared[j]) continue;
            ModCol col = signed_boundary_mod(fi, k, static_cast<int>(j), p);
            while (!col.empty() && pivot_of[col.back().first] >= 0) {
                int piv = pivot_of[col.back().first];
                unsigned long long f =
                    static_cast<unsigned long long>((unsigned __int128)col.back().second * inv_low[piv] % p);
                mod_axpy(col, stored[piv], f, p);
            }
            if (col.empty()) continue;
            pivot_of[col.back().first] = static_cast<int>(stored.size());
            next_cleared[col.back().first] = 1;
            inv_low.push_back(mod_pow(col.back().second, p - 2, p));
            stored.push_back(std::move(col));
        }
        rank[k] = static_cast<long long>(stored.size());
        cleared.swap(next_cleared);
    }
    return rank;
}

namespace {

HomologyProfile profile_from_ranks(const FaceIndex& fi, const std::vector<long long>& rank, const std::string& ring)
{
    HomologyProfile h;
    h.ring = ring;
    int d = fi.dim();
    for (int k = 0; k <= d; ++k) {
        long long rk = k >= 1 ? rank[k] : 0;
        long long rk1 = k + 1 <= d ? rank[k + 1] : 0;
        h.betti.push_back(static_cast<long long>(fi.count(k)) - rk - rk1);
    }
    return h;
}

using IntCol = std::vector<std::pair<int, long long>>;

long long checked_mul(long long a, long long b)
{
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::structure_error, "integer overflow in elimination");
    return r;
}

void int_axpy(IntCol& target, const IntCol& other, long long f)
{
    IntCol out;
    out.reserve(target.size() + other.size());
    size_t a = 0, b = 0;
    while (a < target.size() || b < other.size()) {
        if (b == other.size() || (a < target.size() && target[a].first < other[b].first)) {
            out.push_back(target[a++]);
        } else if (a == target.size() || other[b].first < target[a].first) {
            out.emplace_back(other[b].first, -checked_mul(f, other[b].second));
            ++b;
        } else {
            long long v;
            if (__builtin_sub_overflow(target[a].second, checked_mul(f, other[b].second), &v))
                throw Error(ErrorKind::structure_error, "integer overflow in elimination");
            if (v) out.emplace_back(target[a].first, v);
            ++a;
            ++b;
        }
    }
    target.swap(out);
}

// Invariant factors (>= 1) of a dense integer matrix.
std::vector<mpz_class> dense_invariant_factors(std::vector<std::vector<mpz_class>> m)
{
    std::vector<mpz_class> diag;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero entry in the trailing block
        size_t pr = rows, pc = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (auto& row : m) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (auto& row : m) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
        }
        diag.push_back(abs(m[t][t]));
        ++t;
    }
    // enforce the divisibility chain
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j) {
            mpz_class g = gcd(diag[i], diag[j]);
            mpz_class l = lcm(diag[i], diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    return diag;
}

struct IntRankTorsion {
    long long rank = 0;
    std::vector<std::string> torsion;
};

IntRankTorsion integral_boundary(const FaceIndex& fi, int k)
{
    IntRankTorsion out;
    size_t nrows = fi.count(k - 1);
    std::vector<int> pivot_of(nrows, -1);
    std::vector<IntCol> pivots;
    std::vector<IntCol> rest;
    for (size_t j = 0; j < fi.count(k); ++j) {
        const Simplex& s = fi.faces(k)[j];
        IntCol col;
        Simplex sub(s.size() - 1);
        for (size_t drop = 0; drop < s.size(); ++drop) {
            for (size_t a = 0, b = 0; a < s.size(); ++a)
                if (a != drop) sub[b++] = s[a];
            col.emplace_back(fi.index(sub), drop % 2 ? -1 : 1);
        }
        std::sort(col.begin(), col.end());
        while (!col.empty() && pivot_of[col.back().first] >= 0) {
            const IntCol& p = pivots[pivot_of[col.back().first]];
            int_axpy(col, p, col.back().second * p.back().second);   // pivot entry is +-1
        }
        if (col.empty()) continue;
        if (col.back().second == 1 || col.back().second == -1) {
            pivot_of[col.back().first] = static_cast<int>(pivots.size());
            pivots.push_back(std::move(col));
        } else {
            rest.push_back(std::move(col));
        }
    }
    out.rank = static_cast<long long>(pivots.size());
    if (rest.empty()) return out;
    // Clear pivot rows from the leftover columns, highest row first.
    std::map<int, int> row_id;
    for (auto& col : rest) {
        IntCol reduced;
        while (!col.empty()) {
            auto [r, v] = col.back();
            if (pivot_of[r] >= 0) {
                const IntCol& p = pivots[pivot_of[r]];
                int_axpy(col, p, v * p.back().second);
            } else {
                reduced.push_back(col.back());
                col.pop_back();
            }
        }
        for (auto& [r, v] : reduced) row_id.emplace(r, 0);
        col.swap(reduced);
    }
    int next = 0;
    for (auto& [r, id] : row_id) id = next++;
    if (row_id.size() * rest.size() > 4000000ull)
        throw Error(ErrorKind::structure_error, "integral elimination left a block too large for dense reduction");
    std::vector<std::vector<mpz_class>> dense(row_id.size(), std::vector<mpz_class>(rest.size(), 0));
    for (size_t j = 0; j < rest.size(); ++j)
        for (auto& [r, v] : rest[j]) dense[row_id[r]][j] = static_cast<long>(v);
    for (auto& f : dense_invariant_factors(std::move(dense))) {
        ++out.rank;
        if (f > 1) out.torsion.push_back(f.get_str());
    }
    return out;
}

} // namespace

HomologyProfile betti_gf2(const Complex& c)
{
    FaceIndex fi(c);
    return profile_from_ranks(fi, gf2_boundary_ranks(fi), "GF2");
}

HomologyProfile betti_rational(const Complex& c)
{
    FaceIndex fi(c);
    return profile_from_ranks(fi, modp_boundary_ranks(fi), "Q");
}

HomologyProfile homology_integral(const Complex& c)
{
    FaceIndex fi(c);
    int d = fi.dim();
    std::vector<long long> rank(static_cast<size_t>(std::max(d, 0) + 1), 0);
    std::vector<std::vector<std::string>> tors(static_cast<size_t>(std::max(d, 0) + 1));
    for (int k = 1; k <= d; ++k) {
        auto r = integral_boundary(fi, k);
        rank[k] = r.rank;
        tors[k - 1] = r.torsion;
    }
    HomologyProfile h = profile_from_ranks(fi, rank, "Z");
    h.torsion = tors;
    h.torsion.resize(h.betti.size());
    return h;
}

namespace {

// Cycle basis of dimension k over GF(2), as sorted lists of k-face indices.
std::vector<std::vector<int>> gf2_cycle_basis(const FaceIndex& fi, int k)
{
    std::vector<std::vector<int>> cycles;
    if (k == 0) {
        for (size_t i = 0; i < fi.count(0); ++i) cycles.push_back({static_cast<int>(i)});
        return cycles;
    }
    std::vector<int> pivot_of(fi.count(k - 1), -1);
    std::vector<std::vector<int>> stored, combos;
    for (size_t j = 0; j < fi.count(k); ++j) {
        std::vector<int> col = fi.boundary(k, static_cast<int>(j));
        std::vector<int> combo{static_cast<int>(j)};
        while (!col.empty() && pivot_of[col.back()] >= 0) {
            int p = pivot_of[col.back()];
            gf2_xor_into(col, stored[p]);
            gf2_xor_into(combo, combos[p]);
        }
        if (col.empty()) {
            cycles.push_back(std::move(combo));
            continue;
        }
        pivot_of[col.back()] = static_cast<int>(stored.size());
        stored.push_back(std::move(col));
        combos.push_back(std::move(combo));
    }
    return cycles;
}

} // namespace

bool induced_map_injective(const Complex& a, const Complex& c, int k)
{
    if (!is_subcomplex(a, c)) throw Error(ErrorKind::not_a_subcomplex, "inclusion requires a subcomplex");
    if (a.empty() || k > a.dim()) return true;
    FaceIndex fa(a), fc(c);
    long long betti_a = betti_gf2(a).betti[k];
    Gf2Reducer red;
    if (k + 1 <= fc.dim())
        for (size_t j = 0; j < fc.count(k + 1); ++j) red.add(fc.boundary(k + 1, static_cast<int>(j)));
    size_t base = red.rank();
    for (auto& z : gf2_cycle_basis(fa, k)) {
        std::vector<int> img;
        for (int i : z) img.push_back(fc.index(fa.faces(k)[i]));
        std::sort(img.begin(), img.end());
        red.add(std::move(img));
    }
    return static_cast<long long>(red.rank() - base) == betti_a;
}

bool is_null_homologous(const Complex& c, const std::vector<Simplex>& z)
{
    if (z.empty()) return true;
    int k = static_cast<int>(z[0].size()) - 1;
    FaceIndex fc(c);
    std::vector<int> chain;
    for (const auto& s : z) {
        if (static_cast<int>(s.size()) - 1 != k) throw Error(ErrorKind::not_a_cycle, "chain of mixed dimension");
        int i = fc.index(s);
        if (i < 0) throw Error(ErrorKind::not_a_face, to_string(s));
        chain.push_back(i);
    }
    std::sort(chain.begin(), chain.end());
    {
        std::vector<int> reduced;
        for (size_t i = 0; i < chain.size();) {
            size_t j = i;
            while (j < chain.size() && chain[j] == chain[i]) ++j;
            if ((j - i) % 2) reduced.push_back(chain[i]);
            i = j;
        }
        chain.swap(reduced);
    }
    if (k > 0) {
        std::vector<int> bd;
        for (int i : chain) gf2_xor_into(bd, fc.boundary(k, i));
        if (!bd.empty()) throw Error(ErrorKind::not_a_cycle, "chain has nonzero boundary");
    }
    Gf2Reducer red;
    if (k + 1 <= fc.dim())
        for (size_t j = 0; j < fc.count(k + 1); ++j) red.add(fc.boundary(k + 1, static_cast<int>(j)));
    return red.reduce(chain).empty();
}

} // namespace hopfforge
