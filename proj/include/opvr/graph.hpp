#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace opvr {

/// Validation failure on an input document or a mutated graph model.
/// The message names the offending element.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A guaranteed structural property failed at runtime; always a bug in the
/// caller's input pipeline rather than malformed input.
struct PropertyViolation : std::runtime_error {
    explicit PropertyViolation(const std::string& what) : std::runtime_error(what) {}
};

using NodeId = int;
using EdgeId = int;   // original edge
using PedgeId = int;  // planarization edge (fragment or uncrossed edge)
using DartId = int;
using FaceId = int;

constexpr int kNone = -1;

/// A dart reference as it appears in the JSON rotation lists:
/// the planarization edge of original `edge` leaving a node toward `toward`.
struct DartRef {
    std::string edge;
    std::string toward;

    friend bool operator==(const DartRef& a, const DartRef& b) {
        return a.edge == b.edge && a.toward == b.toward;
    }
    friend bool operator<(const DartRef& a, const DartRef& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.toward < b.toward;
    }
};

/// Mutable description of a 1-plane embedded graph, mirroring the JSON
/// document: vertices, original edges, crossings, per-node rotations
/// (counterclockwise), and a dart identifying the outer face.
///
/// Generators and the surgery build or edit this model and then bake() it
/// into an immutable OnePlaneGraph; parsing goes through the same path, so
/// every graph in the system is validated identically.
struct GraphModel {
    std::vector<std::string> vertices;
    struct Edge {
        std::string id;
        std::string u, v;
    };
    std::vector<Edge> edges;
    struct Crossing {
        std::string dummy;
        std::string e1, e2;
    };
    std::vector<Crossing> crossings;
    // rotation[node] = ccw cyclic list of dart refs
    std::map<std::string, std::vector<DartRef>> rotation;
    std::string outer_at, outer_edge;  // empty when the graph has no edges

    bool has_vertex(const std::string& name) const;
    bool has_edge_between(const std::string& a, const std::string& b) const;
    const Edge* find_edge(const std::string& id) const;
};

struct Dart {
    NodeId origin = kNone;
    NodeId head = kNone;
    PedgeId pedge = kNone;
    DartId twin = kNone;
    DartId rot_next = kNone;  // ccw successor around origin
    DartId rot_prev = kNone;
    FaceId face = kNone;      // face on the LEFT of this dart
};

struct Pedge {
    EdgeId original = kNone;
    std::array<NodeId, 2> ends{kNone, kNone};
    std::array<DartId, 2> darts{kNone, kNone};  // darts[i] originates at ends[i]
};

struct OriginalEdge {
    std::string name;
    NodeId u = kNone, v = kNone;
    NodeId crossing = kNone;              // dummy node, or kNone if uncrossed
    std::vector<PedgeId> pedges;          // 1 (uncrossed) or 2 (split at crossing)
    EdgeId crossing_partner = kNone;      // the edge crossing this one
};

struct FaceWalk {
    std::vector<DartId> darts;  // cyclic boundary walk, face on the left
    bool outer = false;
};

/// An immutable validated 1-plane embedding given as its planarization.
///
/// Conventions (fixed across the project):
///  - rotations are counterclockwise around every node;
///  - the next dart along a face is rot_prev(twin(d)), so every face lies
///    to the LEFT of each of its darts; inner faces are traversed ccw.
class OnePlaneGraph {
public:
    static OnePlaneGraph bake(const GraphModel& model);

    // --- nodes ---
    int node_count() const { return int(node_names_.size()); }
    int real_vertex_count() const { return real_count_; }
    int dummy_count() const { return int(node_names_.size()) - real_count_; }
    bool is_dummy(NodeId n) const { return dummy_[size_t(n)]; }
    const std::string& node_name(NodeId n) const { return node_names_[size_t(n)]; }
    NodeId node_id(const std::string& name) const;
    const std::vector<DartId>& darts_at(NodeId n) const { return node_darts_[size_t(n)]; }
    int degree(NodeId n) const { return int(node_darts_[size_t(n)].size()); }

    // --- darts / pedges ---
    int dart_count() const { return int(darts_.size()); }
    const Dart& dart(DartId d) const { return darts_[size_t(d)]; }
    const Pedge& pedge(PedgeId p) const { return pedges_[size_t(p)]; }
    int pedge_count() const { return int(pedges_.size()); }
    DartId face_next(DartId d) const { return darts_[size_t(darts_[size_t(d)].twin)].rot_prev; }
    /// Dart of `pe` originating at node `at`.
    DartId dart_from(PedgeId pe, NodeId at) const;

    // --- original edges ---
    int edge_count() const { return int(edges_.size()); }
    const OriginalEdge& edge(EdgeId e) const { return edges_[size_t(e)]; }
    EdgeId edge_id(const std::string& name) const;
    EdgeId edge_between(NodeId a, NodeId b) const;  // kNone if absent
    /// Fragment of edge `e` incident to node `n` (n must be an endpoint or
    /// the crossing dummy of e).
    PedgeId fragment_at(EdgeId e, NodeId n) const;
    const std::vector<std::pair<NodeId, EdgeId>>& crossing_pairs() const { return crossing_list_; }

    // --- faces ---
    int face_count() const { return int(faces_.size()); }
    const FaceWalk& face(FaceId f) const { return faces_[size_t(f)]; }
    FaceId outer_face() const { return outer_face_; }
    FaceId face_of(DartId d) const { return darts_[size_t(d)].face; }
    /// Faces incident to a node, in rotation order (left face of each dart).
    std::vector<FaceId> faces_at(NodeId n) const;

    // --- underlying simple graph (real vertices, original edges) ---
    const std::vector<std::vector<NodeId>>& underlying_adjacency() const { return under_adj_; }

    const GraphModel& model() const { return model_; }

private:
    GraphModel model_;
    std::vector<std::string> node_names_;
    std::vector<bool> dummy_;
    int real_count_ = 0;
    std::map<std::string, NodeId> node_index_;
    std::vector<std::vector<DartId>> node_darts_;
    std::vector<Dart> darts_;
    std::vector<Pedge> pedges_;
    std::vector<OriginalEdge> edges_;
    std::map<std::string, EdgeId> edge_index_;
    std::map<std::pair<NodeId, NodeId>, EdgeId> edge_between_;
    std::vector<std::pair<NodeId, EdgeId>> crossing_list_;  // (dummy, first edge)
    std::vector<FaceWalk> faces_;
    FaceId outer_face_ = kNone;
    std::vector<std::vector<NodeId>> under_adj_;
};

// --- JSON document format (External Interfaces, graph-core) ---
OnePlaneGraph parse_graph(const std::string& json_text);
GraphModel parse_model(const std::string& json_text);
std::string serialize_graph(const OnePlaneGraph& g);

/// Plane-graph view of the planarization: dummies become ordinary degree-4
/// vertices. Pure view over the baked graph.
struct PlanarizeView {
    const OnePlaneGraph* g;
    int vertex_count() const { return g->node_count(); }
    int edge_count() const { return g->pedge_count(); }
    int face_count() const { return g->face_count(); }
};
inline PlanarizeView planarize_view(const OnePlaneGraph& g) { return PlanarizeView{&g}; }

/// True iff the underlying simple graph (crossings ignored) has no cut
/// vertex and no separation pair. Fewer than 4 real vertices is degenerate:
/// the result is then "graph is complete".
bool is_three_connected(const OnePlaneGraph& g);
/// Serial reference implementation, kept for testing the parallel kernel.
bool is_three_connected_serial(const OnePlaneGraph& g);

}  // namespace opvr
