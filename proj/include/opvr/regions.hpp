#pragma once

#include <vector>

#include "opvr/graph.hpp"

namespace opvr {

struct RegionSplit {
    std::vector<FaceId> inside;   // faces cut off from the outer face
    std::vector<FaceId> outside;  // component containing the outer face
};

/// Splits the faces of g along a simple closed curve given as a cyclic dart
/// walk in the planarization. The curve's planarization edges are removed
/// from the dual adjacency and faces are flood-filled from the outer face;
/// "inside" is everything not reached.
/// Throws ValidationError if the walk is not a simple closed curve.
RegionSplit region_split(const OnePlaneGraph& g, const std::vector<DartId>& curve);

/// True iff every face incident to `v` belongs to `inside` (given sorted).
bool vertex_inside(const OnePlaneGraph& g, NodeId v, const std::vector<FaceId>& inside_sorted);

}  // namespace opvr
