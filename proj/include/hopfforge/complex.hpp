#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/error.hpp"

namespace hopfforge {

using Label = int;

// Strictly increasing vertex labels.
using Simplex = std::vector<Label>;

Simplex make_simplex(std::vector<Label> labels);
std::string to_string(const Simplex& s);
bool is_subset(const Simplex& a, const Simplex& b);
Simplex simplex_union(const Simplex& a, const Simplex& b);
Simplex simplex_minus(const Simplex& a, const Simplex& b);
Simplex simplex_with(const Simplex& s, Label v);
Simplex simplex_without(const Simplex& s, Label v);

struct SimplexHash {
    size_t operator()(const Simplex& s) const noexcept;
};

// All k+1 element subsets of s, lexicographic.
std::vector<Simplex> subsets_of_size(const Simplex& s, size_t size);

class Complex {
public:
    Complex() = default;

    // Keeps the inclusion-maximal input simplices; result is sorted.
    static Complex from_facets(std::vector<Simplex> simplices);

    const std::vector<Simplex>& facets() const { return facets_; }
    size_t num_facets() const { return facets_.size(); }
    bool empty() const { return facets_.empty(); }
    int dim() const;
    bool is_pure() const;
    std::vector<Label> vertices() const;
    size_t num_vertices() const { return vertices().size(); }
    Label max_label() const;

    bool has_face(const Simplex& s) const;
    bool has_facet(const Simplex& s) const;
    std::vector<Simplex> faces(int k) const;
    std::vector<Simplex> all_faces() const;
    std::vector<long long> f_vector() const;
    long long euler_characteristic() const;

    // Facets containing s.
    std::vector<Simplex> facets_containing(const Simplex& s) const;

    bool operator==(const Complex& other) const { return facets_ == other.facets_; }
    bool operator!=(const Complex& other) const { return facets_ != other.facets_; }

private:
    std::vector<Simplex> facets_;
};

long long euler_characteristic(const std::vector<long long>& f);

Complex link(const Complex& c, const Simplex& s);
Complex star(const Complex& c, const Simplex& s);
Complex closure(const std::vector<Simplex>& faces);
Complex induced_subcomplex(const Complex& c, const std::vector<Label>& w);
Complex cone(const Complex& c, Label apex);
Complex unite(const Complex& a, const Complex& b);
Complex intersect(const Complex& a, const Complex& b);
bool is_subcomplex(const Complex& a, const Complex& c);

// Facet-level boundary of a pure complex: ridges lying in exactly one facet.
Complex boundary_complex(const Complex& c);

Complex stellar_subdivide(const Complex& c, const Simplex& s, Label new_label);
// Subdivides s only inside the listed facets (each must contain s).
Complex stellar_subdivide_in(const Complex& c, const Simplex& s, Label new_label,
                             const std::vector<Simplex>& region);

Complex relabel(const Complex& c, const std::function<Label(Label)>& f);
Complex relabel(const Complex& c, const std::map<Label, Label>& m);

// Connected components of a complex (vertex adjacency through facets).
std::vector<Complex> connected_components(const Complex& c);

Complex antipodal_quotient(const Complex& c, const std::map<Label, Label>& iota);

struct DoubleCover {
    Complex cover;
    std::map<Label, Label> deck;          // involution on cover labels
    std::map<Label, Label> projection;    // cover label -> base label
};

// Edge labels in {0,1}; missing edges count as 0.
DoubleCover double_cover(const Complex& c, const std::map<Simplex, int>& cocycle);

struct FixedPointSet {
    Complex complex;
    // fixed-set label -> the vertex pair {x, rho x} (x == rho x for fixed vertices)
    std::map<Label, std::pair<Label, Label>> origin;
};

FixedPointSet fixed_point_complex(const Complex& c, const std::map<Label, Label>& rho);

std::optional<std::map<Label, Label>> find_isomorphism(const Complex& a, const Complex& b);
inline bool is_isomorphic(const Complex& a, const Complex& b) { return find_isomorphism(a, b).has_value(); }

// Axis-aligned cubes given by their corner labels.
struct CubicalComplex {
    std::vector<std::vector<Label>> cells;   // each sorted
    int dim = -1;

    std::vector<long long> f_vector() const;
    std::vector<std::vector<Label>> cells_of_dim(int k) const;
};

// Boundary of the (m)-cube; corners are the integers 0..2^m-1 read as bit vectors.
CubicalComplex cube_boundary_complex(int m);
CubicalComplex antipodal_quotient(const CubicalComplex& c, const std::map<Label, Label>& iota);

} // namespace hopfforge
