#pragma once

#include <string>
#include <vector>

#include "opvr/graph.hpp"
#include "opvr/regions.hpp"

namespace opvr {

/// A B-, T-, or W-configuration: poles, crossings, the closed external
/// boundary walk in the planarization, the faces of its interior region,
/// and the non-pole endpoints required inside.
struct ForbiddenConfig {
    enum class Kind { B, T, W };
    Kind kind;
    std::vector<NodeId> poles;      // sorted, 2 (B/W) or 3 (T)
    std::vector<NodeId> crossings;  // sorted dummies, 1 (B), 2 (W), 3 (T)
    std::vector<DartId> boundary;   // closed walk, simple in the planarization
    std::vector<FaceId> interior;   // sorted
    std::vector<NodeId> witnesses;  // sorted, strictly inside
    std::string key;                // canonical id, e.g. "B(u,z)@{p}"

    static const char* kind_name(Kind k) {
        switch (k) {
            case Kind::B: return "B";
            case Kind::T: return "T";
            default: return "W";
        }
    }
};

/// All B-, T- and W-configurations of g, canonically ordered by
/// (kind, poles, crossings). The default entry point runs the OpenMP
/// kernel when available; the serial reference is kept for testing.
std::vector<ForbiddenConfig> detect_all(const OnePlaneGraph& g);
std::vector<ForbiddenConfig> detect_all_serial(const OnePlaneGraph& g);

/// True iff the two configurations share a crossing.
bool dependent(const ForbiddenConfig& f1, const ForbiddenConfig& f2);

/// Poles of the graph: union of poles over all detected configurations.
std::vector<NodeId> pole_set(const std::vector<ForbiddenConfig>& configs);

/// True iff some pole of the graph other than t's own poles lies strictly
/// inside t's interior region.
bool is_separating_t(const OnePlaneGraph& g, const ForbiddenConfig& t,
                     const std::vector<NodeId>& all_poles);

bool has_separating_t(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs);

/// Structural properties of the configurations of a 3-connected 1-plane
/// graph, checked empirically. Violations carry a witness description.
struct PropertyReport {
    struct Item {
        std::string name;
        bool holds = true;
        std::vector<std::string> violations;
    };
    Item p1, p2, p3, p4, p5, claim1;
    bool all_hold() const {
        return p1.holds && p2.holds && p3.holds && p4.holds && p5.holds && claim1.holds;
    }
};

PropertyReport check_properties(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs);

std::string config_report_json(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs);

}  // namespace opvr
