#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfforge/complex.hpp"
#include "hopfforge/exact.hpp"
#include "hopfforge/symmetry.hpp"

namespace hopfforge {

struct CrossPolytopeEmbedding {
    std::vector<Label> labels;                      // vertex order used for subsets
    std::vector<std::vector<Rational>> coords;      // coords[i] is the image of labels[i]
    std::vector<std::pair<Label, Label>> diagonals;

    // i -> e_i and i+m -> -e_i for i = first..first+m-1
    static CrossPolytopeEmbedding cross(int m, Label first = 1);
    // Missing edges of c are exactly the diagonals.
    bool consistent_with(const Complex& c) const;
    // Faces of the cross-polytope boundary: antipode-free label sets.
    Complex boundary() const;
};

// Subsets (bit i <-> points[i]) with a strict affine separation from their complement, ascending.
std::vector<std::uint32_t> halfspace_subsets(const std::vector<std::vector<Rational>>& points, int workers = 1);

struct SubsetResult {
    std::vector<Label> vertices;
    bool h0 = false;
    bool h1 = false;
};

struct FaceOrbitStat {
    Simplex generator;
    long long size = 0;
    std::vector<long long> induced_f;     // f-vector of the induced subcomplex
    long long h1_rank = 0;                // GF(2) first Betti number of the induced subcomplex
    bool injective = false;
    long long triangles_in_complex = 0;   // non-complex tetrahedra: triangles of the tetrahedron that are faces
    long long empty_triangles = 0;
    bool collapses_to_empty_triangle = false;
    bool null_homologous = false;         // empty triangles: boundary cycle bounds in the complex
};

struct TightnessReport {
    bool tight = false;
    bool duality_mode = false;
    bool edge_graph_complete = false;
    long long feasible_subsets = 0;
    long long checked_subsets = 0;
    long long dual_subsets = 0;           // duality mode: covered by the complement of a checked face
    std::vector<SubsetResult> failures;
    std::vector<FaceOrbitStat> empty_triangles;
    std::vector<FaceOrbitStat> non_complex_tetrahedra;
    std::vector<FaceOrbitStat> four_simplices;
    std::vector<FaceOrbitStat> facets;
    long long empty_triangle_count = 0;
    long long non_complex_tetrahedron_count = 0;
};

struct TightnessOptions {
    bool duality_mode = false;
    int workers = 1;
    std::uint64_t seed = 0;
};

// group acts on the labels of c; orbit tables are split by it.
TightnessReport verify_tightness(const Complex& c, const CrossPolytopeEmbedding& emb, const GroupAction& group,
                                 const TightnessOptions& opt = {});

bool edge_graph_complete_check(const Complex& c, const CrossPolytopeEmbedding& emb);

} // namespace hopfforge
