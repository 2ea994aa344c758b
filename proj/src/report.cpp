#include "hopfforge/report.hpp"

namespace hopfforge {

const char* const version_string = "hopfforge 1.0.0";

namespace {

json simplices_json(const std::vector<Simplex>& v)
{
    json a = json::array();
    for (const auto& s : v) a.push_back(simplex_json(s));
    return a;
}

json index_json(const std::vector<int>& w) { return json(w); }

json orbit_stats_json(const std::vector<FaceOrbitStat>& v)
{
    json a = json::array();
    for (const auto& s : v)
        a.push_back({{"generator", simplex_json(s.generator)},
                     {"size", s.size},
                     {"induced_f_vector", s.induced_f},
                     {"h1_rank", s.h1_rank},
                     {"injective", s.injective},
                     {"triangles_in_complex", s.triangles_in_complex},
                     {"empty_triangles", s.empty_triangles},
                     {"collapses_to_empty_triangle", s.collapses_to_empty_triangle},
                     {"null_homologous", s.null_homologous}});
    return a;
}

} // namespace

json simplex_json(const Simplex& s) { return json(s); }

json to_json(const CertStatus& s, bool with_trace)
{
    json j{{"status", certainty_name(s.status)}, {"evidence", s.evidence}, {"seed", s.seed}};
    if (!s.failing_face.empty()) j["failing_face"] = simplex_json(s.failing_face);
    if (with_trace) {
        json t = json::array();
        for (const auto& f : s.trace) t.push_back({simplex_json(f.a), simplex_json(f.b)});
        j["trace"] = t;
    } else {
        j["trace_length"] = s.trace.size();
    }
    return j;
}

json to_json(const HomologyProfile& h)
{
    json j{{"ring", h.ring}, {"betti", h.betti}};
    if (h.ring == "Z") j["torsion"] = h.torsion;
    return j;
}

json to_json(const ManifoldReport& r)
{
    json links = json::array();
    for (const auto& l : r.by_link_dim)
        links.push_back({{"link_dim", l.link_dim},
                         {"certified", l.certified},
                         {"heuristic_pass", l.heuristic},
                         {"failed", l.failed},
                         {"worst", certainty_name(l.worst())}});
    json verts = json::array();
    for (const auto& [v, c] : r.vertex_links) verts.push_back({{"vertex", simplex_json(v)}, {"status", certainty_name(c)}});
    return {{"overall", to_json(r.overall)}, {"links_by_dimension", links}, {"vertex_links", verts}};
}

json to_json(const DecompositionReport& r)
{
    json pieces = json::array();
    for (const auto& p : r.pieces)
        pieces.push_back({{"index", index_json(p.index)},
                          {"facets", p.piece.num_facets()},
                          {"f_vector", p.piece.f_vector()},
                          {"subcomplex", p.subcomplex},
                          {"matches_intersection", p.matches_intersection},
                          {"ball_dim", p.ball_dim},
                          {"circles", p.circles},
                          {"type", to_json(p.type)}});
    json j{{"valid", r.valid},
           {"indices", r.indices},
           {"union_ok", r.union_ok},
           {"boolean_ok", r.boolean_ok},
           {"pieces", pieces},
           {"problems", r.problems},
           {"offending", simplices_json(r.offending)}};
    if (r.central_is_permcycle_torus) j["central_is_permcycle_torus"] = *r.central_is_permcycle_torus;
    if (r.restriction_ok) j["restriction_ok"] = *r.restriction_ok;
    return j;
}

json to_json(const DefectReport& r)
{
    json a = json::array();
    for (const auto& o : r.orbits)
        a.push_back({{"representative", simplex_json(o.representative)},
                     {"size", o.faces.size()},
                     {"sigma_period", o.sigma_period},
                     {"sigma_invariant", o.sigma_invariant},
                     {"in_central_torus", o.in_central_torus},
                     {"link_components", o.link_components}});
    return {{"empty", r.empty()}, {"orbits", a}};
}

json to_json(const Assembly& a)
{
    json j{{"apexes", a.apexes},
           {"union_f_vector", a.union_complex.f_vector()},
           {"perfect", to_json(a.perfect)},
           {"defects", to_json(a.defects)}};
    if (a.group_order) j["group_order"] = a.group_order;
    return j;
}

json to_json(const CandidateCensus& c)
{
    return {{"id", c.id},
            {"facets", c.facets},
            {"tau_invariant", c.tau_invariant},
            {"rho_invariant", c.rho_invariant},
            {"contains_torus", c.contains_torus},
            {"multiples_contained", c.multiples_contained},
            {"which_multiples", c.which_multiples},
            {"sigma_orbit_size", c.sigma_orbit_size}};
}

json to_json(const NoPerfectCp3Report& r)
{
    json cands = json::array();
    for (const auto& c : r.candidates) cands.push_back(to_json(c));
    return {{"candidates", cands}, {"qualifying", r.qualifying}, {"defects", to_json(r.defects)}, {"no_perfect_cp3", r.no_perfect_cp3}};
}

json to_json(const TightnessReport& r)
{
    json fails = json::array();
    for (const auto& f : r.failures) fails.push_back({{"vertices", f.vertices}, {"h0", f.h0}, {"h1", f.h1}});
    return {{"tight", r.tight},
            {"duality_mode", r.duality_mode},
            {"edge_graph_complete", r.edge_graph_complete},
            {"feasible_subsets", r.feasible_subsets},
            {"checked_subsets", r.checked_subsets},
            {"dual_subsets", r.dual_subsets},
            {"failures", fails},
            {"empty_triangle_count", r.empty_triangle_count},
            {"non_complex_tetrahedron_count", r.non_complex_tetrahedron_count},
            {"empty_triangles", orbit_stats_json(r.empty_triangles)},
            {"non_complex_tetrahedra", orbit_stats_json(r.non_complex_tetrahedra)},
            {"four_simplices", orbit_stats_json(r.four_simplices)},
            {"facets", orbit_stats_json(r.facets)}};
}

json to_json(const KCyclicResult& r)
{
    return {{"status", to_json(r.status)},
            {"certified_facets", r.certified_facets},
            {"max_precision_used", r.max_precision_used},
            {"f_vector", r.complex.f_vector()}};
}

json to_json(const IncoherentSearch& s)
{
    return {{"minimum", s.minimum}, {"at_zero", s.at_zero}, {"argmin_count", s.argmins.size()}, {"argmins", s.argmins}};
}

json to_json(const CoverReport& r)
{
    return {{"status", to_json(r.status)},
            {"vertices", r.vertices},
            {"octahedra", r.octahedra},
            {"vertex_links_cubes", r.vertex_links_cubes}};
}

json to_json(const PolytopeVerification& v)
{
    return {{"status", to_json(v.status)},
            {"checks", v.checks},
            {"n1_offset", v.n1_offset.str()},
            {"n2_offset", v.n2_offset.str()},
            {"orbit_sizes_upstairs", v.orbit_sizes_upstairs},
            {"orbit_sizes_quotient", v.orbit_sizes_quotient},
            {"quotient_f_vector", v.quotient.f_vector()}};
}

json to_json(const RankSearchResult& r)
{
    json orbits = json::array();
    for (const auto& o : r.orbits)
        orbits.push_back({{"generator", simplex_json(o.generator)}, {"ranks", o.ranks}, {"assigned", o.assigned}});
    json j{{"found", r.pieces.has_value()}, {"ambiguous", r.ambiguous}, {"candidates", r.candidates}, {"orbits", orbits}};
    if (r.pieces) j["pieces"] = piece_map_json(*r.pieces);
    return j;
}

json piece_map_json(const PieceMap& pieces)
{
    json a = json::array();
    for (const auto& [w, p] : pieces) a.push_back({{"index", index_json(w)}, {"facets", p.num_facets()}, {"f_vector", p.f_vector()}});
    return a;
}

} // namespace hopfforge
