#include "hopfforge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

namespace hopfforge {

namespace {

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[i] = i;
    if (k > n) return;
    while (true) {
        fn(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

std::vector<double> trig_point(long long j, long long n, const std::vector<long long>& freqs)
{
    std::vector<double> x;
    for (long long f : freqs) {
        double a = 2.0 * M_PI * static_cast<double>((f * j) % n) / static_cast<double>(n);
        x.push_back(std::cos(a));
        x.push_back(std::sin(a));
    }
    return x;
}

// Null vector of a k x (k+1) matrix, or empty when rank-deficient.
std::vector<double> null_vector(std::vector<std::vector<double>> m)
{
    size_t rows = m.size(), cols = rows + 1;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t best = r;
        for (size_t i = r + 1; i < rows; ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[best][c])) best = i;
        if (std::fabs(m[best][c]) < 1e-12) continue;
        std::swap(m[r], m[best]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            double f = m[i][c] / m[r][c];
            if (f == 0.0) continue;
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r != rows) return {};
    size_t free_col = 0;
    for (size_t c = 0; c < cols; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
            free_col = c;
            break;
        }
    std::vector<double> h(cols, 0.0);
    h[free_col] = 1.0;
    for (size_t i = 0; i < rows; ++i) h[pivot_col[i]] = -m[i][free_col] / m[i][pivot_col[i]];
    return h;
}

// Determinant enclosure.
Interval interval_det(std::vector<std::vector<Interval>> m, mpfr_prec_t bits)
{
    size_t n = m.size();
    Interval det = Interval::from_rational(1, bits);
    for (size_t c = 0; c < n; ++c) {
        size_t best = n;
        double best_mag = 0.0;
        for (size_t i = c; i < n; ++i) {
            double mag = m[i][c].magnitude_lower_double();
            if (!m[i][c].contains_zero() && (best == n || mag > best_mag)) {
                best = i;
                best_mag = mag;
            }
        }
        if (best == n) {
            // remaining block may be exactly singular: enclose its determinant by the row-norm product
            double bound = 1.0;
            for (size_t i = c; i < n; ++i) {
                double row = 0.0;
                for (size_t j = c; j < n; ++j)
                    row += std::max(std::fabs(m[i][j].lower_double()), std::fabs(m[i][j].upper_double()));
                bound *= row * (1.0 + 1e-12) + 1e-300;
            }
            mpfr_t lo, hi;
            mpfr_init2(lo, bits);
            mpfr_init2(hi, bits);
            mpfr_set_d(lo, -bound, MPFR_RNDD);
            mpfr_set_d(hi, bound, MPFR_RNDU);
            Interval rest = Interval::from_bounds(lo, hi, bits);
            mpfr_clear(lo);
            mpfr_clear(hi);
            return det * rest;
        }
        if (best != c) {
            std::swap(m[best], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            Interval f = m[i][c] / m[c][c];
            for (size_t j = c + 1; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

// Hyperplane through f from cofactors; some test value straddles zero when a cofactor is exactly zero.
std::optional<int> cofactor_side(const Simplex& f, const std::vector<std::vector<Interval>>& pts, mpfr_prec_t bits)
{
    size_t d = f.size();
    size_t cols = d + 1;
    std::vector<Interval> cof;
    for (size_t j = 0; j < cols; ++j) {
        std::vector<std::vector<Interval>> minor;
        for (Label v : f) {
            std::vector<Interval> r;
            if (j != 0) r.push_back(Interval::from_rational(1, bits));
            for (size_t c = 1; c < cols; ++c)
                if (c != j) r.push_back(pts[static_cast<size_t>(v)][c - 1]);
            minor.push_back(std::move(r));
        }
        Interval det = interval_det(std::move(minor), bits);
        cof.push_back(((d + j) % 2) ? -det : det);
    }
    bool pos = false, neg = false, open = false;
    std::set<Label> in(f.begin(), f.end());
    for (size_t t = 0; t < pts.size(); ++t) {
        if (in.count(static_cast<Label>(t))) continue;
        Interval v = cof[0];
        for (size_t j = 1; j < cols; ++j) v = v + cof[j] * pts[t][j - 1];
        int s = v.sign();
        if (s == 0) open = true;
        else (s > 0 ? pos : neg) = true;
        if (pos && neg) return 0;
    }
    if (open) return std::nullopt;
    return pos ? 1 : -1;
}

// +1/-1 when all other points lie strictly on one side, 0 when two points are strictly separated, nullopt otherwise.
std::optional<int> interval_facet_side(const Simplex& f, const std::vector<std::vector<Interval>>& pts, mpfr_prec_t bits)
{
    if (auto quick = cofactor_side(f, pts, bits)) return quick;
    std::vector<std::vector<Interval>> rows;
    for (Label v : f) {
        std::vector<Interval> row{Interval::from_rational(1, bits)};
        for (const auto& x : pts[static_cast<size_t>(v)]) row.push_back(x);
        rows.push_back(std::move(row));
    }
    bool pos = false, neg = false, open = false;
    std::set<Label> in(f.begin(), f.end());
    for (size_t t = 0; t < pts.size(); ++t) {
        if (in.count(static_cast<Label>(t))) continue;
        auto m = rows;
        std::vector<Interval> row{Interval::from_rational(1, bits)};
        for (const auto& x : pts[t]) row.push_back(x);
        m.push_back(std::move(row));
        int s = interval_det(std::move(m), bits).sign();
        if (s == 0) open = true;
        else (s > 0 ? pos : neg) = true;
        if (pos && neg) return 0;
    }
    if (open) return std::nullopt;
    return pos ? 1 : -1;
}

} // namespace

Complex cyclic_polytope_boundary(int n, int d)
{
    if (d < 1 || n <= d) throw Error(ErrorKind::usage, "cyclic polytope needs n > d >= 1");
    std::vector<Simplex> facets;
    for_each_combination(n, d, [&](const std::vector<int>& s) {
        std::set<int> in(s.begin(), s.end());
        for (int i = 0; i < n; ++i) {
            if (in.count(i)) continue;
            for (int j = i + 1; j < n; ++j) {
                if (in.count(j)) continue;
                int between = 0;
                for (int x : s)
                    if (x > i && x < j) ++between;
                if (between % 2) return;
            }
        }
        facets.push_back(Simplex(s.begin(), s.end()));
    });
    return Complex::from_facets(std::move(facets));
}

void KCyclicSpec::validate() const
{
    long long k = static_cast<long long>(frequencies.size());
    if (k < 1) throw Error(ErrorKind::usage, "k-cyclic spec needs at least one frequency");
    if (n < 2 * k + 1) throw Error(ErrorKind::usage, "k-cyclic spec needs n >= 2k+1");
    std::set<long long> seen;
    for (long long f : frequencies) {
        if (f <= 0) throw Error(ErrorKind::usage, "frequencies must be positive");
        if (!seen.insert(f % n).second) throw Error(ErrorKind::usage, "frequencies must be distinct mod n");
    }
}

KCyclicResult k_cyclic_boundary(const KCyclicSpec& spec, const std::vector<mpfr_prec_t>& schedule, int workers)
{
    spec.validate();
    if (schedule.empty()) throw Error(ErrorKind::usage, "empty precision schedule");
    const long long n = spec.n;
    const int d = 2 * static_cast<int>(spec.frequencies.size());
    std::vector<std::vector<double>> pts;
    for (long long j = 0; j < n; ++j) pts.push_back(trig_point(j, n, spec.frequencies));

    // proposals through vertex 0
    std::set<Simplex> proposed;
    for_each_combination(static_cast<int>(n) - 1, d - 1, [&](const std::vector<int>& c) {
        Simplex s{0};
        for (int x : c) s.push_back(x + 1);
        std::vector<std::vector<double>> m;
        for (Label v : s) {
            std::vector<double> row{1.0};
            row.insert(row.end(), pts[v].begin(), pts[v].end());
            m.push_back(std::move(row));
        }
        auto h = null_vector(std::move(m));
        if (h.empty()) return;
        double scale = 0.0;
        for (double x : h) scale = std::max(scale, std::fabs(x));
        int side = 0;
        size_t pos = 0;
        for (long long t = 0; t < n; ++t) {
            if (pos < s.size() && s[pos] == t) {
                ++pos;
                continue;
            }
            double v = h[0];
            for (int j = 0; j < d; ++j) v += h[j + 1] * pts[t][j];
            if (std::fabs(v) < 1e-9 * scale) continue;
            int sg = v > 0 ? 1 : -1;
            if (side == 0) side = sg;
            else if (sg != side) return;
        }
        for (long long r = 0; r < n; ++r) {
            Simplex t;
            for (Label v : s) t.push_back(static_cast<Label>((v + r) % n));
            std::sort(t.begin(), t.end());
            proposed.insert(t);
        }
    });

    std::vector<Simplex> cand(proposed.begin(), proposed.end());
    std::vector<int> verdict(cand.size(), 0);        // 1 facet, 0 rejected, -1 unresolved
    std::vector<mpfr_prec_t> used(cand.size(), 0);
    std::vector<std::vector<std::vector<Interval>>> ipts;
    for (mpfr_prec_t bits : schedule) {
        std::vector<std::vector<Interval>> level;
        for (long long j = 0; j < n; ++j) level.push_back(interval_trig_point(j, n, spec.frequencies, bits));
        ipts.push_back(std::move(level));
    }
    workers = std::max(1, workers);
    auto job = [&](int w) {
        for (size_t i = static_cast<size_t>(w); i < cand.size(); i += static_cast<size_t>(workers)) {
            verdict[i] = -1;
            for (size_t p = 0; p < schedule.size(); ++p) {
                auto side = interval_facet_side(cand[i], ipts[p], schedule[p]);
                if (side) {
                    verdict[i] = *side != 0 ? 1 : 0;
                    used[i] = schedule[p];
                    break;
                }
            }
        }
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& t : pool) t.join();
    }

    KCyclicResult out;
    std::vector<Simplex> facets;
    for (size_t i = 0; i < cand.size(); ++i) {
        if (verdict[i] < 0) throw Error(ErrorKind::degenerate_hull, "sign unresolved at maximum precision for " + to_string(cand[i]));
        if (verdict[i] == 1) {
            facets.push_back(cand[i]);
            out.max_precision_used = std::max(out.max_precision_used, used[i]);
        }
    }
    out.certified_facets = static_cast<long long>(facets.size());
    out.complex = Complex::from_facets(std::move(facets));
    if (is_closed_pseudomanifold(out.complex, d - 1)) {
        out.status.status = Certainty::certified;
        out.status.evidence = std::to_string(out.certified_facets) + " facets certified by interval signs; every ridge in two facets";
    } else {
        out.status.status = Certainty::fail;
        out.status.evidence = "certified facets do not close up";
    }
    return out;
}

Decomposed bicyclic_hopf(int m)
{
    if (m < 2) throw Error(ErrorKind::usage, "bicyclic_hopf needs m >= 2");
    Label n = m * m + m + 1;
    std::vector<Simplex> gens;
    for (int j = 2; j <= m; ++j) gens.push_back({0, 1, j, j + 1});
    GroupAction z = GroupAction::cyclic(n);
    Complex a1 = expand_orbits(gens, z);
    Complex a2 = apply_perm(a1, multiplier(n, m));
    Complex torus = expand_orbits({{0, 1, m + 1}, {0, m, m + 1}}, z);
    Decomposed out;
    out.complex = unite(a1, a2);
    out.pieces[{1}] = a1;
    out.pieces[{2}] = a2;
    out.pieces[{1, 2}] = torus;
    return out;
}

} // namespace hopfforge
