#pragma once

#include "json.hpp"

#include "hopfforge/complex.hpp"
#include "hopfforge/constructions.hpp"
#include "hopfforge/homology.hpp"
#include "hopfforge/hopf.hpp"
#include "hopfforge/recognition.hpp"
#include "hopfforge/tightness.hpp"

namespace hopfforge {

using nlohmann::json;

extern const char* const version_string;

json simplex_json(const Simplex& s);
json to_json(const CertStatus& s, bool with_trace = false);
json to_json(const HomologyProfile& h);
json to_json(const ManifoldReport& r);
json to_json(const DecompositionReport& r);
json to_json(const DefectReport& r);
json to_json(const Assembly& a);
json to_json(const CandidateCensus& c);
json to_json(const NoPerfectCp3Report& r);
json to_json(const TightnessReport& r);
json to_json(const KCyclicResult& r);
json to_json(const IncoherentSearch& s);
json to_json(const CoverReport& r);
json to_json(const PolytopeVerification& v);
json to_json(const RankSearchResult& r);

json piece_map_json(const PieceMap& pieces);

} // namespace hopfforge
