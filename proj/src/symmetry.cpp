#include "hopfforge/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace hopfforge {

Permutation::Permutation(std::vector<Label> images) : images_(std::move(images))
{
    std::vector<char> hit(images_.size(), 0);
    for (Label x : images_) {
        if (x < 0 || static_cast<size_t>(x) >= images_.size() || hit[x])
            throw Error(ErrorKind::malformed_input, "not a permutation");
        hit[x] = 1;
    }
}

Permutation Permutation::identity(size_t size)
{
    std::vector<Label> im(size);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::vector<std::vector<Label>>& cycles, size_t size)
{
    for (const auto& cyc : cycles)
        for (Label x : cyc) {
            if (x < 0) throw Error(ErrorKind::malformed_input, "negative label in cycle");
            size = std::max(size, static_cast<size_t>(x) + 1);
        }
    std::vector<Label> im(size);
    std::iota(im.begin(), im.end(), 0);
    std::vector<char> seen(size, 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (seen[cyc[i]]) throw Error(ErrorKind::malformed_input, "label repeated across cycles");
            seen[cyc[i]] = 1;
            im[cyc[i]] = cyc[(i + 1) % cyc.size()];
        }
    }
    return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(const std::string& text, size_t size)
{
    std::vector<std::vector<Label>> cycles;
    std::vector<Label> cur;
    bool open = false;
    std::string num;
    auto flush = [&]() {
        if (!num.empty()) {
            if (!open) throw Error(ErrorKind::malformed_input, "label outside a cycle: " + text);
            cur.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char ch : text) {
        if (ch == '(') {
            if (open) throw Error(ErrorKind::malformed_input, "nested cycle: " + text);
            open = true;
            cur.clear();
        } else if (ch == ')') {
            flush();
            if (!open) throw Error(ErrorKind::malformed_input, "unbalanced cycle: " + text);
            open = false;
            cycles.push_back(cur);
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            num += ch;
        } else if (ch == ' ' || ch == '\t' || ch == ',') {
            flush();
        } else {
            throw Error(ErrorKind::malformed_input, std::string("unexpected character '") + ch + "' in " + text);
        }
    }
    if (open || !num.empty()) throw Error(ErrorKind::malformed_input, "unterminated cycle: " + text);
    return from_cycles(cycles, size);
}

Label Permutation::operator()(Label x) const
{
    if (x >= 0 && static_cast<size_t>(x) < images_.size()) return images_[x];
    return x;
}

Permutation Permutation::operator*(const Permutation& other) const
{
    size_t n = std::max(size(), other.size());
    std::vector<Label> im(n);
    for (size_t x = 0; x < n; ++x) im[x] = (*this)(other(static_cast<Label>(x)));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const
{
    std::vector<Label> im(size());
    for (size_t x = 0; x < size(); ++x) im[images_[x]] = static_cast<Label>(x);
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const
{
    for (size_t x = 0; x < size(); ++x)
        if (images_[x] != static_cast<Label>(x)) return false;
    return true;
}

long long Permutation::order() const
{
    long long ord = 1;
    std::vector<char> seen(size(), 0);
    for (size_t x = 0; x < size(); ++x) {
        if (seen[x]) continue;
        long long len = 0;
        for (size_t y = x; !seen[y]; y = images_[y]) {
            seen[y] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::string Permutation::cycles() const
{
    std::ostringstream out;
    std::vector<char> seen(size(), 0);
    for (size_t x = 0; x < size(); ++x) {
        if (seen[x] || images_[x] == static_cast<Label>(x)) continue;
        out << '(';
        for (size_t y = x; !seen[y]; y = images_[y]) {
            seen[y] = 1;
            out << (y == x ? "" : " ") << y;
        }
        out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
}

bool Permutation::operator==(const Permutation& o) const
{
    size_t n = std::max(size(), o.size());
    for (size_t x = 0; x < n; ++x)
        if ((*this)(static_cast<Label>(x)) != o(static_cast<Label>(x))) return false;
    return true;
}

bool Permutation::operator<(const Permutation& o) const
{
    size_t n = std::max(size(), o.size());
    for (size_t x = 0; x < n; ++x) {
        Label a = (*this)(static_cast<Label>(x)), b = o(static_cast<Label>(x));
        if (a != b) return a < b;
    }
    return false;
}

Simplex Permutation::apply(const Simplex& s) const
{
    Simplex t;
    t.reserve(s.size());
    for (Label v : s) t.push_back((*this)(v));
    std::sort(t.begin(), t.end());
    return t;
}

Complex apply_perm(const Complex& c, const Permutation& p)
{
    std::vector<Simplex> out;
    out.reserve(c.num_facets());
    for (const auto& f : c.facets()) out.push_back(p.apply(f));
    return Complex::from_facets(std::move(out));
}

bool is_automorphism(const Complex& c, const Permutation& p) { return apply_perm(c, p) == c; }

GroupAction::GroupAction(std::vector<Permutation> generators) : generators_(std::move(generators)) {}

GroupAction GroupAction::cyclic(Label n)
{
    std::vector<Label> im(static_cast<size_t>(n));
    for (Label x = 0; x < n; ++x) im[x] = (x + 1) % n;
    return GroupAction({Permutation(std::move(im))});
}

size_t GroupAction::universe() const
{
    size_t n = 0;
    for (const auto& g : generators_) n = std::max(n, g.size());
    return n;
}

std::vector<Permutation> GroupAction::elements(size_t cap) const
{
    size_t n = universe();
    std::vector<Permutation> gens;
    for (const auto& g : generators_) gens.push_back(g * Permutation::identity(n));
    std::set<Permutation> seen{Permutation::identity(n)};
    std::deque<Permutation> queue{Permutation::identity(n)};
    std::vector<Permutation> out{Permutation::identity(n)};
    while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            Permutation next = g * cur;
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw Error(ErrorKind::order_too_large, "group order exceeds " + std::to_string(cap));
                out.push_back(next);
                queue.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

size_t GroupAction::order(size_t cap) const { return elements(cap).size(); }

std::vector<Simplex> GroupAction::orbit(const Simplex& s) const
{
    std::set<Simplex> seen{s};
    std::deque<Simplex> queue{s};
    while (!queue.empty()) {
        Simplex cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators_) {
            Simplex next = g.apply(cur);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Simplex> orbit(const Simplex& s, const GroupAction& g) { return g.orbit(s); }

Complex expand_orbits(const std::vector<Simplex>& generators, const GroupAction& g)
{
    std::vector<Simplex> all;
    for (const auto& s : generators) {
        auto o = g.orbit(s);
        all.insert(all.end(), o.begin(), o.end());
    }
    return Complex::from_facets(std::move(all));
}

Label PermCycle::modulus() const { return std::accumulate(entries.begin(), entries.end(), 0); }

Complex expand_permcycle(const PermCycle& pc)
{
    for (int d : pc.entries)
        if (d <= 0) throw Error(ErrorKind::malformed_input, "permcycle entries must be positive");
    Label n = pc.modulus();
    std::vector<int> e = pc.entries;
    std::sort(e.begin(), e.end());
    std::set<Simplex> out;
    do {
        Simplex base{0};
        for (size_t i = 0; i + 1 < e.size(); ++i) base.push_back(base.back() + e[i]);
        for (Label t = 0; t < n; ++t) {
            Simplex s;
            for (Label x : base) s.push_back((x + t) % n);
            out.insert(make_simplex(std::move(s)));
        }
    } while (std::next_permutation(e.begin(), e.end()));
    return Complex::from_facets({out.begin(), out.end()});
}

Permutation multiplier(Label n, Label m, size_t size)
{
    size = std::max(size, static_cast<size_t>(n));
    std::vector<Label> im(size);
    std::iota(im.begin(), im.end(), 0);
    for (Label x = 0; x < n; ++x) im[x] = static_cast<Label>((static_cast<long long>(m) * x) % n);
    return Permutation(std::move(im));
}

StandardAutos standard_autos(int k)
{
    if (k < 1) throw Error(ErrorKind::malformed_input, "k must be at least 1");
    Label n = (Label(1) << (k + 1)) - 1;
    StandardAutos a{n, GroupAction::cyclic(n).generators()[0], multiplier(n, n - 1), multiplier(n, 2), {}};
    std::vector<Label> im(static_cast<size_t>(n / 2 + 1));
    for (Label x = 0; x <= n / 2; ++x) {
        Label y = (2 * x) % n;
        im[x] = std::min(y, (n - y) % n);
    }
    a.sigma_tilde = Permutation(std::move(im));
    return a;
}

} // namespace hopfforge
