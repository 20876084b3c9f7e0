#pragma once

#include <string>

#include <json.hpp>

#include "core/analysis.hpp"
#include "core/latin.hpp"
#include "core/magic.hpp"
#include "core/models.hpp"
#include "core/perm.hpp"

namespace qf {

using Json = nlohmann::json;

// Permutations are one-based image arrays, e.g. [2,1,3]; measures are arrays
// of {perm, weight} records; matrices are arrays of rows of [re, im] pairs;
// square grids are plain integer matrices with 0 for *.

Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

Json to_json(const PermutationGroup& g);  // {degree, generators}
PermutationGroup group_from_json(const Json& j);

Json to_json(const GroupMeasure& m);
GroupMeasure measure_from_json(const Json& j);

Json to_json(const CMatrix& m);
CMatrix cmatrix_from_json(const Json& j);

Json to_json(const BMatrix& m);
BMatrix bmatrix_from_json(const Json& j);

Json to_json(const ProjectionFrame& f);  // {dimension, projections}
ProjectionFrame frame_from_json(const Json& j);

Json to_json(const SparseLatinSquare& s);
SparseLatinSquare square_from_json(const Json& j);

Json to_json(const MagicValidation& v);  // {passed, max_defect, defects}
Json to_json(const OrbitDecomposition& d);

Json to_json(const ModelFamily& f);  // {"variant": ..., params...}
ModelFamily family_from_json(const Json& j);

Json to_json(const ModelFamily& f, const ModelPoint& p);
ModelPoint point_from_json(const ModelFamily& f, const Json& j);

Json to_json(const ReducedWord& w);

Json to_json(const StateEstimate& e);
Json to_json(const FaithfulnessReport& r);
Json to_json(const CesaroReport& r);
Json to_json(const StationarityReport& r);
Json to_json(const ThomaReport& r);
Json to_json(const ObstructionReport& r);

}  // namespace qf
