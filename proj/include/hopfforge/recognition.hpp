#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfforge/complex.hpp"
#include "hopfforge/exact.hpp"

namespace hopfforge {

enum class Certainty { fail = 0, heuristic_pass = 1, certified = 2 };
std::string certainty_name(Certainty c);
inline Certainty weakest(Certainty a, Certainty b) { return a < b ? a : b; }

struct Flip {
    Simplex a;   // removed face
    Simplex b;   // inserted face
};

struct CertStatus {
    Certainty status = Certainty::fail;
    std::string evidence;
    std::vector<Flip> trace;      // bistellar reduction witness
    std::uint64_t seed = 0;       // seed of the run that produced the witness
    Simplex failing_face;

    bool ok() const { return status != Certainty::fail; }
};

// d < 0 means the complex's own dimension.
bool is_closed_pseudomanifold(const Complex& c, int d = -1);
// Every ridge in one or two facets.
bool is_pseudomanifold_with_boundary(const Complex& c, int d = -1);
// Coherent orientation of the facets across ridges; false if some ridge is in more than two facets.
bool is_orientable(const Complex& c);

// h_{d+1-i} - h_i - (-1)^i C(d+1,i) (chi - chi(S^d)), i = 0..d+1
std::vector<Rational> dehn_sommerville_residual(const Complex& c, int d, long long chi);
std::vector<long long> h_vector(const Complex& c, int d);

struct SphereOptions {
    std::uint64_t seed = 0;
    int rounds = 20;
    int moves = 5000;
    int workers = 1;
    bool paranoid = false;   // recheck homology after every flip
};

CertStatus sphere_check(const Complex& c, int d, const SphereOptions& opt = {});
// Ball test via the sphere L u cone(boundary L).
CertStatus ball_check(const Complex& c, int d, const SphereOptions& opt = {});

// Applies flips in order; returns false if one is illegal.
bool replay_flips(Complex& c, const std::vector<Flip>& flips);

struct LinkDimensionSummary {
    int link_dim = 0;
    long long certified = 0;
    long long heuristic = 0;
    long long failed = 0;
    Certainty worst() const
    {
        return failed ? Certainty::fail : heuristic ? Certainty::heuristic_pass : Certainty::certified;
    }
};

struct ManifoldReport {
    CertStatus overall;
    std::vector<LinkDimensionSummary> by_link_dim;   // indexed by link dimension
    std::vector<std::pair<Simplex, Certainty>> vertex_links;
};

struct ManifoldOptions {
    bool with_boundary = false;
    SphereOptions sphere;
    // Face dimensions to examine explicitly; faces of a vertex with a certified link inherit the certificate.
    bool all_faces = true;
};

ManifoldReport check_manifold(const Complex& c, const ManifoldOptions& opt = {});
inline CertStatus is_combinatorial_manifold(const Complex& c, const ManifoldOptions& opt = {})
{
    return check_manifold(c, opt).overall;
}

struct MorseResult {
    std::vector<long long> vector;   // critical cells per dimension
    std::uint64_t seed = 0;
};

MorseResult random_discrete_morse(const Complex& c, std::uint64_t seed, int tries, int workers = 1);

struct CollapseTrace {
    std::vector<std::pair<Simplex, Simplex>> pairs;   // (free face, coface) in removal order
    std::vector<Simplex> critical;
    std::vector<long long> critical_by_dim;
    std::uint64_t seed = 0;
};

// Collapses towards the closure of target (or of its boundary when target is not a face).
std::optional<CollapseTrace> collapse_onto(const Complex& c, const Simplex& target,
                                           const std::vector<Simplex>& avoid = {}, std::uint64_t seed = 0,
                                           int tries = 100);

// Signature B^{ball_dim} x (S^1)^circles.
CertStatus handlebody_check(const Complex& c, int ball_dim, int circles, std::uint64_t seed = 0, int tries = 100,
                            int workers = 1);

} // namespace hopfforge
