#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <mpfr.h>

#include "hopfforge/complex.hpp"
#include "hopfforge/exact.hpp"
#include "hopfforge/recognition.hpp"
#include "hopfforge/symmetry.hpp"

namespace hopfforge {

// Pieces keyed by a sorted index subset, e.g. {1}, {1,2}.
using PieceMap = std::map<std::vector<int>, Complex>;

struct Decomposed {
    Complex complex;
    PieceMap pieces;
};

// ---- cyclic polytopes ----

// Gale evenness; labels 0..n-1.
Complex cyclic_polytope_boundary(int n, int d);

struct KCyclicSpec {
    std::vector<long long> frequencies;
    long long n = 0;

    void validate() const;
};

struct KCyclicResult {
    Complex complex;
    CertStatus status;
    long long certified_facets = 0;
    mpfr_prec_t max_precision_used = 0;
};

// Float proposal over subsets through vertex 0, rotated; every facet certified with interval signs.
KCyclicResult k_cyclic_boundary(const KCyclicSpec& spec, const std::vector<mpfr_prec_t>& schedule = {128, 256, 512},
                                int workers = 1);

// 2C(1,m; m^2+m+1) with solid tori {1} and {2} and the torus {1,2}.
Decomposed bicyclic_hopf(int m);

// ---- cubes and the real projective builds ----

struct PyramidDecomposition {
    int k = 0;
    // base corners as quotient labels, apex label
    std::vector<std::pair<std::vector<Label>, Label>> pyramids;
    int num_vertices = 0;
};

// Corners of the (k+1)-cube quotient are labelled min(v, 2^{k+1}-1-v); the centre of the k-cube
// with fixed coordinate i is 2^k + i.
PyramidDecomposition pyramid_decomposition(int k);
Label quotient_corner(Label v, int m);

struct FiveTet {
    Complex tets;
    std::vector<Simplex> diagonals;   // one per square
};

// corners[b] is the corner with local coordinates b (3 bits); the central tetrahedron uses corners
// of local parity equal to mirror.
FiveTet cube3_five_tet(bool mirror, const std::vector<Label>& corners);

// Tetrahedron on a square whose two sides carry different diagonals.
Simplex flat_adaptor(const std::vector<Label>& square, const Simplex& diag_a, const Simplex& diag_b);

struct Rp4NiceBuild {
    Complex complex;
    Complex skeleton3;                              // cube tetrahedra plus adaptors
    std::vector<Complex> cube4_spheres;             // boundary sphere of 4-cube i
    std::vector<Simplex> adaptors;
    std::map<Simplex, std::vector<int>> adaptor_cubes;   // adaptor -> 4-cubes whose sphere holds it
    int incoherent = 0;
    std::vector<int> assignment;
};

constexpr int rp4_cube_count = 20;
constexpr Label rp4_apex_base = 16;

Rp4NiceBuild build_rp4_nice(const std::vector<int>& assignment, bool check_spheres = true);
int count_incoherent(const std::vector<int>& assignment);

struct IncoherentSearch {
    int minimum = 0;
    std::vector<std::uint32_t> argmins;   // assignments as bit masks, ascending
    int at_zero = 0;
};

IncoherentSearch search_min_incoherent(int workers = 1);

struct KleinBottles {
    Complex hypersurface;    // 3-dimensional
    Complex surface;         // 2-dimensional
    std::vector<int> cube4_pair;
};

KleinBottles extract_klein_bottles(const Rp4NiceBuild& rp4);

Complex build_rp3_nice_12();
Complex build_rp3_11();

struct OctahedralCell {
    std::vector<Label> vertices;                       // 6 labels
    std::vector<std::pair<Label, Label>> opposite;     // 3 pairs
};

struct Octahedralization {
    std::vector<Simplex> axes;                 // edges with a 4-cycle link
    std::vector<OctahedralCell> cells;
};

Octahedralization octahedralize(const Complex& c);
// Nonzero GF(2) 1-cocycle, zero on a spanning tree; nullopt when H^1 vanishes.
std::optional<std::map<Simplex, int>> nontrivial_cocycle(const Complex& c);

struct CoverReport {
    CertStatus status;
    long long vertices = 0;
    long long octahedra = 0;
    bool vertex_links_cubes = false;
    Complex cover;
};

CoverReport verify_24cell_cover(const Complex& c);

struct PolytopeVerification {
    CertStatus status;
    std::vector<std::string> checks;
    Complex upstairs;        // 300 facets on 32 points
    Complex quotient;        // 150 facets on 16 vertices
    std::vector<long long> orbit_sizes_upstairs;
    std::vector<long long> orbit_sizes_quotient;
    QSqrt5 n1_offset, n2_offset;
};

PolytopeVerification verify_polytope_facets();
Complex build_rp4_minimal_16();

// ---- complex projective builds ----

Complex build_cp1();
Decomposed build_cp2_equilibrium();

struct Cp3Build {
    Complex complex;
    Complex pre_repair;
    // new vertex -> the face it subdivides
    std::map<Label, Simplex> subdivided;
};

Cp3Build build_cp3_equilibrium();

struct Rp3FixedBuild {
    Complex complex;
    Complex pre_repair;
    std::vector<Simplex> defect_edges;
    std::map<Label, Simplex> subdivided;
};

Rp3FixedBuild build_rp3_from_fixed_points();
// Fixed set of the pre-repair CP^3 union with the same edge repairs applied.
Complex rp3_from_cp3_fixed_set();

// ---- shared data ----

std::vector<Simplex> s5_15_generators();
std::vector<std::vector<Simplex>> s5_15_piece_generators();   // A_1, A_2, A_3
Complex s5_15();
PieceMap s5_15_pieces();

// Repairs used by the CP^3 and RP^3 pipelines.
std::vector<Complex> link_components(const Complex& link_complex);
Complex subdivide_in_component(const Complex& c, const Simplex& face, const Complex& component, Label new_label);
// Component of the link of face containing the smallest label >= apex_base.
Complex pick_component(const Complex& c, const Simplex& face, Label apex_base);

} // namespace hopfforge
