#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hopfforge/complex.hpp"

namespace hopfforge {

// All faces of a complex, per dimension, sorted, with reverse lookup.
class FaceIndex {
public:
    explicit FaceIndex(const Complex& c);

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    const std::vector<Simplex>& faces(int k) const { return faces_[k]; }
    size_t count(int k) const { return k < 0 || k > dim() ? 0 : faces_[k].size(); }
    // -1 when absent
    int index(const Simplex& s) const;
    // Boundary of face i of dimension k as sorted indices of (k-1)-faces.
    std::vector<int> boundary(int k, int i) const;

private:
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
};

struct HomologyProfile {
    std::string ring;                       // "GF2", "Q" or "Z"
    std::vector<long long> betti;            // unreduced, dims 0..d
    std::vector<std::vector<std::string>> torsion;   // integral only: invariant factors > 1 per dim

    bool operator==(const HomologyProfile& o) const { return betti == o.betti && torsion == o.torsion; }
};

// rank of boundary maps d_k : C_k -> C_{k-1}, k = 1..d (entry 0 is 0)
std::vector<long long> gf2_boundary_ranks(const FaceIndex& fi);
std::vector<long long> modp_boundary_ranks(const FaceIndex& fi, unsigned long long p = 2147483647ull);

HomologyProfile betti_gf2(const Complex& c);
// Field of 2^31-1 elements; equals the rational profile unless that prime divides a torsion coefficient.
HomologyProfile betti_rational(const Complex& c);
HomologyProfile homology_integral(const Complex& c);

bool induced_map_injective(const Complex& a, const Complex& c, int k);
// z: k-simplices of c (GF(2) chain)
bool is_null_homologous(const Complex& c, const std::vector<Simplex>& z);

// Edges of the boundary of a simplex, as a GF(2) chain.
std::vector<Simplex> boundary_chain(const Simplex& s);

} // namespace hopfforge
