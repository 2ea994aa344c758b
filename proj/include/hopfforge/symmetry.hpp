#pragma once

#include <string>
#include <vector>

#include "hopfforge/complex.hpp"

namespace hopfforge {

// Bijection of {0..size-1}; labels outside the universe are fixed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Label> images);
    static Permutation identity(size_t size);
    // Cycle notation such as "(1 3 5)(2 4)"; singletons may be omitted.
    static Permutation from_cycles(const std::string& text, size_t size = 0);
    static Permutation from_cycles(const std::vector<std::vector<Label>>& cycles, size_t size = 0);

    Label operator()(Label x) const;
    size_t size() const { return images_.size(); }
    const std::vector<Label>& images() const { return images_; }

    // (a * b)(x) = a(b(x))
    Permutation operator*(const Permutation& other) const;
    Permutation inverse() const;
    bool is_identity() const;
    long long order() const;
    std::string cycles() const;

    bool operator==(const Permutation& o) const;
    bool operator<(const Permutation& o) const;

    Simplex apply(const Simplex& s) const;

private:
    std::vector<Label> images_;
};

Complex apply_perm(const Complex& c, const Permutation& p);
bool is_automorphism(const Complex& c, const Permutation& p);

class GroupAction {
public:
    GroupAction() = default;
    explicit GroupAction(std::vector<Permutation> generators);
    static GroupAction cyclic(Label n);

    const std::vector<Permutation>& generators() const { return generators_; }
    size_t universe() const;

    // Breadth-first closure; throws order_too_large beyond cap.
    std::vector<Permutation> elements(size_t cap = 1000000) const;
    size_t order(size_t cap = 1000000) const;

    std::vector<Simplex> orbit(const Simplex& s) const;

private:
    std::vector<Permutation> generators_;
};

std::vector<Simplex> orbit(const Simplex& s, const GroupAction& g);
Complex expand_orbits(const std::vector<Simplex>& generators, const GroupAction& g);

struct PermCycle {
    std::vector<int> entries;
    Label modulus() const;
};

Complex expand_permcycle(const PermCycle& pc);

struct StandardAutos {
    Label n;
    Permutation tau;     // x -> x+1
    Permutation rho;     // x -> -x
    Permutation sigma;   // x -> 2x
    // sigma on the classes {x, -x}, each class labelled by its smaller member
    Permutation sigma_tilde;
};

StandardAutos standard_autos(int k);

// x -> m*x mod n on labels below n; other labels fixed.
Permutation multiplier(Label n, Label m, size_t size = 0);

} // namespace hopfforge
