#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/complex.hpp"
#include "hopfforge/constructions.hpp"
#include "hopfforge/recognition.hpp"

namespace hopfforge {

struct PieceCheck {
    std::vector<int> index;
    Complex piece;
    bool subcomplex = false;
    bool matches_intersection = true;   // given piece equals the intersection of its singletons
    int ball_dim = 0;
    int circles = 0;
    CertStatus type;
};

struct DecompositionReport {
    bool valid = false;
    std::vector<int> indices;
    std::vector<PieceCheck> pieces;     // every non-empty subset, ascending by size then lex
    bool union_ok = false;
    bool boolean_ok = false;
    std::optional<bool> central_is_permcycle_torus;
    std::optional<bool> restriction_ok;     // equilibrium only
    std::vector<std::string> problems;
    std::vector<Simplex> offending;         // first few faces behind a failed equality
};

// Missing pieces for |w| >= 2 are computed as intersections. The type of A_w is (S^1)^|w| x B^{2k-2|w|}.
DecompositionReport verify_hopf(const Complex& s, const PieceMap& pieces, int k, std::uint64_t seed = 0,
                                int workers = 1);

enum class EquilibriumKind { complex_projective, real_projective };

// Pieces over {0..k}; B_i is expected to be the star of its own apex.
DecompositionReport verify_equilibrium(const Complex& c, const PieceMap& pieces, EquilibriumKind kind,
                                       std::uint64_t seed = 0, int workers = 1);

// {i} -> closed star of apexes[i].
PieceMap apex_pieces(const Complex& c, const std::vector<Label>& apexes);

// ---- barycenter ranks ----

struct RankedOrbit {
    Simplex generator;
    std::vector<Simplex> orbit;
    std::vector<double> magnitudes;     // |b_i| per complex coordinate
    std::vector<double> ranks;          // rk_i
    int assigned = -1;                  // index into the frequencies, -1 when ambiguous
};

struct RankSearchOptions {
    double threshold = 1.25;
    long long budget = 100000;     // candidate complexes examined
    mpfr_prec_t precision = 128;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct RankSearchResult {
    std::optional<PieceMap> pieces;     // {1}..{k} and their intersections
    std::vector<RankedOrbit> orbits;
    long long ambiguous = 0;
    long long candidates = 0;
};

std::vector<RankedOrbit> barycenter_ranks(const Complex& c, const KCyclicSpec& spec, double threshold,
                                          mpfr_prec_t precision = 128);
RankSearchResult barycenter_rank_search(const Complex& c, const KCyclicSpec& spec, const RankSearchOptions& opt = {});

// ---- perfect equilibrium assembly ----

struct DefectOrbit {
    Simplex representative;            // lexicographically smallest member
    std::vector<Simplex> faces;
    int sigma_period = 0;              // smallest j with sigma^j mapping the orbit to itself
    bool sigma_invariant = false;      // period at most k
    bool in_central_torus = false;
    std::vector<long long> link_components;   // component sizes (facets) of the link of the representative
};

struct DefectReport {
    std::vector<DefectOrbit> orbits;
    bool empty() const { return orbits.empty(); }
};

struct Assembly {
    Complex union_complex;              // cones over sigma^i(S), apex n+i
    std::vector<Label> apexes;
    PieceMap pieces;                    // {i} -> cone i
    std::optional<Complex> complex;     // set when perfect
    DefectReport defects;
    CertStatus perfect;
    long long group_order = 0;
};

// S on 2^{k+1}-1 vertices, invariant under tau and rho, containing the permcycle torus and k of the
// multiples of the solid torus; structure_error lists the failed preconditions.
Assembly assemble_perfect_equilibrium(const Complex& s, int k);

// 1 1 1 4 8 ... 2^k
PermCycle solid_torus_permcycle(int k);
// 1 2 4 ... 2^k
PermCycle central_torus_permcycle(int k);
// sigma^j of the solid torus, j = 0..k
std::vector<Complex> solid_torus_multiples(int k);

struct CandidateCensus {
    std::string id;
    bool tau_invariant = false;
    bool rho_invariant = false;
    bool contains_torus = false;
    int multiples_contained = 0;
    std::vector<int> which_multiples;
    int sigma_orbit_size = 0;
    long long facets = 0;
};

struct NoPerfectCp3Report {
    std::vector<CandidateCensus> candidates;
    std::vector<std::string> qualifying;    // sigma-orbit 4 and three multiples
    DefectReport defects;                   // assembly of the qualifying sphere
    bool no_perfect_cp3 = false;
};

NoPerfectCp3Report check_no_perfect_cp3();
CandidateCensus census_candidate(const std::string& id, const Complex& s);

} // namespace hopfforge
