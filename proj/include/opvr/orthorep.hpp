#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "opvr/graph.hpp"

namespace opvr {

/// Planar expansion of a 1-plane graph: each real vertex becomes a cycle of
/// degree-3 ports (one per incident planarization edge, in rotation order);
/// crossing dummies stay as degree-4 nodes. Visibility edges join ports and
/// dummies; the vertex face f_v is the inner face bounded by the port cycle.
struct ExpandedGraph {
    struct HNode {
        bool is_port = false;
        NodeId g_node = kNone;  // owner vertex (port) or dummy id
        DartId g_dart = kNone;  // the dart this port serves
    };
    struct HDart {
        int origin = kNone, head = kNone, twin = kNone, rot_next = kNone, rot_prev = kNone;
        int edge = kNone;
        int face = kNone;
    };
    struct HEdge {
        int a = kNone, b = kNone;          // H-nodes
        int darts[2] = {kNone, kNone};     // darts[i] originates at a (i=0) / b (i=1)
        bool cycle = false;                // port-cycle edge (bendable)
        NodeId owner = kNone;              // cycle edges: the vertex
        PedgeId g_pedge = kNone;           // visibility edges: the fragment
    };

    std::vector<HNode> nodes;
    std::vector<HDart> darts;
    std::vector<HEdge> edges;
    std::vector<std::vector<int>> faces;       // dart walks
    std::vector<NodeId> vertex_face;           // face id -> owner vertex or kNone
    std::vector<FaceId> orig_face;             // face id -> g face or kNone
    std::vector<int> face_of_vertex;           // g vertex -> f_v face id
    int outer_face = kNone;

    int face_next(int d) const { return darts[size_t(darts[size_t(d)].twin)].rot_prev; }
};

ExpandedGraph expand(const OnePlaneGraph& g);

/// Angle/bend description of an orthogonal drawing of the expansion.
struct OrthoRep {
    std::shared_ptr<const ExpandedGraph> H;
    int budget = 0;                    // the reflex budget it was solved for
    std::vector<int> wedge;            // per H-dart: angle (x90) of the face
                                       // left of the dart at its origin
    std::vector<int> convex_bends;     // per H-edge (cycle only): 90 toward f_v
    std::vector<int> reflex_bends;     // per H-edge: 270 toward f_v
    std::vector<int> vertex_reflex;    // per g vertex
    int max_reflex = 0;
};

/// Tamassia-style angle/bend feasibility flow with a per-vertex budget of k
/// reflex corners, enforced by a capacity-k arc bundle into each f_v.
std::optional<OrthoRep> feasible(const OnePlaneGraph& g, const ExpandedGraph& H, int k);

struct MinComplexityResult {
    int k_star = 0;
    OrthoRep rep;
};

/// Smallest k with feasible(g, k), scanning upward from 0.
MinComplexityResult min_complexity(const OnePlaneGraph& g, int max_k = -1);

}  // namespace opvr
