#pragma once

#include <string>
#include <vector>

#include "opvr/configs.hpp"
#include "opvr/graph.hpp"
#include "opvr/nonredundant.hpp"

namespace opvr {

/// One subdivision step: entry assigned to pole u, crossing k on edges
/// (u,v) x (w,z) with z another pole of the entry; the fragment (k,u) is
/// subdivided by a new vertex s and the uncrossed edges (z,s), (s,w) are
/// added in the two faces flanking the fragment at k.
struct SurgeryStep {
    std::string entry_key;
    std::string pole_u, pole_z;
    std::string crossing;
    std::string edge_uv, edge_wz;  // edge ids at the crossing, at plan time
    std::string witness_v, witness_w;
    std::string new_vertex;
};

/// Chooses the crossing and edge roles for one entry. For a T-configuration
/// both qualifying crossings work; the lowest dummy name is chosen unless
/// `forced_crossing` names one of them.
SurgeryStep plan_step(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs,
                      const NonRedundantSet::Entry& entry, NodeId pole,
                      const std::string& forced_crossing = "");

struct SurgeryResult {
    OnePlaneGraph graph;
    std::vector<SurgeryStep> steps;
    std::vector<std::pair<std::string, int>> subdivision_neighbors;  // per pole
    int max_subdivision_neighbors = 0;
};

/// Applies one step per entry of F in canonical order and re-validates the
/// postconditions: no forbidden configurations remain, the graph is still
/// 3-connected, and no pole carries more than five subdivision vertices.
/// Throws PropertyViolation if any postcondition fails.
SurgeryResult apply_all(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs,
                        const NonRedundantSet& F, const PoleAssignment& assignment);

std::string steps_log_json(const SurgeryResult& r);

}  // namespace opvr
