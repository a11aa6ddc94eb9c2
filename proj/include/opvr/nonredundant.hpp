#pragma once

#include <string>
#include <vector>

#include "opvr/configs.hpp"
#include "opvr/graph.hpp"

namespace opvr {

/// The non-redundant multiset F: all B-configurations, all T-configurations
/// independent of B-configurations, and 0/1/2 copies of the (at most one)
/// W-configuration; each W copy is tagged with one of the W's crossings.
struct NonRedundantSet {
    struct Entry {
        int config;            // index into the configs vector
        NodeId w_tag = kNone;  // tagged crossing, W copies only
        std::string key;
    };
    std::vector<Entry> entries;  // canonical order
    std::vector<NodeId> poles;   // sorted union of entry poles
    int beta = 0, tau = 0, omega = 0;
    int w_dependent_b = 0;  // number of B-configurations dependent on the W
};

NonRedundantSet build_F(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs);

/// Planar multigraph on the poles with one drawn edge per (entry, crossing)
/// contribution; duplicates drawn by W copies are merged and counted by s.
struct AuxiliaryGraph {
    struct AuxEdge {
        NodeId a, b;          // pole pair, a < b
        NodeId crossing;
        PedgeId frag_a, frag_b;
        int multiplicity = 1;  // contributions drawing this same edge
    };
    std::vector<NodeId> nodes;  // poles
    std::vector<AuxEdge> edges;
    int n_a = 0, m_a = 0, s = 0;
    bool planar_ok = false;  // Euler check on the inherited rotation
    int euler_faces = 0, components = 0;
    int max_parallel = 0;
};

AuxiliaryGraph build_aux_graph(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs,
                               const NonRedundantSet& F);

/// Lemma-style counting bounds: |F| <= 4|P|-8 (omega = 0) or 4|P|-7, with
/// the equality characterization, checked when no separating
/// T-configuration exists. Small pole sets (|P| < 3) are reported as
/// degenerate rather than asserted.
struct BoundReport {
    bool applicable = false;  // no separating T and |P| >= 3
    bool degenerate = false;  // |P| < 3
    bool separating_t = false;
    bool bound_holds = false;
    bool equality = false;
    bool equality_characterization_ok = true;  // |F|=4|P|-8 iff beta/tau hit their maxima
    int f_size = 0, poles = 0, bound = 0;
};

BoundReport check_lemma3(const NonRedundantSet& F, const AuxiliaryGraph& aux, bool has_separating_t);

/// Assignment of every entry of F to one of its own poles, at most five per
/// pole; the two copies of a W go to distinct poles. Computed by maximum
/// flow; a shortfall means Theorem 3 is violated upstream and throws.
struct PoleAssignment {
    std::vector<NodeId> pole_of;  // per entry of F
    std::vector<int> load;        // per pole index in F.poles
    int max_load = 0;
};

PoleAssignment compute_assignment(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs,
                                  const NonRedundantSet& F);

/// Hall condition for a 5-matching over all subsets of F (|F| <= 20).
bool hall_check_bruteforce(const std::vector<ForbiddenConfig>& configs, const NonRedundantSet& F);

std::string assignment_report_json(const OnePlaneGraph& g, const NonRedundantSet& F,
                                   const PoleAssignment& a);

}  // namespace opvr
