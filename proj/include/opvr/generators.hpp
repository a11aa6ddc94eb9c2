#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "opvr/graph.hpp"

namespace opvr {

/// Nested triangle graph S(i): maximal plane graph with 3i vertices, plus a
/// T-face marking (3i-2 faces, no two sharing an edge).
struct NestedTriangleGraph {
    int level = 0;
    OnePlaneGraph graph;
    std::vector<std::vector<std::string>> t_faces;   // corner name sets
    std::vector<std::vector<std::string>> nt_faces;  // remaining faces
};
NestedTriangleGraph nested_triangles(int i);

struct PlantedConfig {
    char kind;  // 'B', 'T', 'W'
    std::vector<std::string> poles;      // sorted
    std::vector<std::string> crossings;  // sorted
};

/// The lower-bound family G(n_p): 3n_p-6 B-configurations and n_p-2
/// T-configurations with pairwise disjoint interiors, 3-connected.
struct LowerBoundGraph {
    int np = 0;
    bool theorem2_applies = false;  // n_p > 8
    OnePlaneGraph graph;
    std::vector<PlantedConfig> planted;
};
LowerBoundGraph lower_bound_graph(int np);

struct CorpusInstance {
    std::string name;
    OnePlaneGraph graph;
    int planted_b = 0;
    int kites = 0;
};

/// One seeded 3-connected 1-plane instance: a random plane triangulation on
/// n vertices with `kites` kite crossings and `planted_b` planted
/// B-configurations.
CorpusInstance kite_instance(int n, std::uint64_t seed, int kites, int planted_b);

/// A small assorted batch derived from (n, seed): plain, kite-augmented and
/// configuration-rich instances.
std::vector<CorpusInstance> kite_corpus(int n, std::uint64_t seed);

// --- fixture builders shared between tests and the CLI ---

/// The introductory example: a triangle with one T-configuration planted
/// inside (poles u,v,w). Minimum vertex complexity 1.
OnePlaneGraph fig1a();

/// fig1a with a B-configuration planted on a witness-ring edge inside the
/// T-configuration's interior region, making the T separating.
OnePlaneGraph nested_separating_fixture();

/// Wheel hub u with `count` B-configurations b(u, t_i) planted around it.
OnePlaneGraph b_star_fixture(int count);

/// Incremental construction of 1-plane models: bakes after every mutation,
/// so all invariants are re-validated as the graph grows.
class Planter {
public:
    explicit Planter(GraphModel m);

    const OnePlaneGraph& graph() const { return baked_; }
    GraphModel& model() { return model_; }
    void rebake();

    /// Face with the given corner-name set and walk length 3. Throws unless
    /// exactly one face matches.
    FaceId find_face(const std::vector<std::string>& corners) const;

    struct LensInfo {
        std::string side_edge;  // original edge id of the side
        std::string w_name;     // witness targeted by the NT connector
        DartRef w_slot;         // rotation ref at w after which it attaches
        std::string crossing;   // lens crossing dummy
        std::string arc_edge;   // the crossed lens edge leaving the S corner
        std::string s_corner;
    };

    struct TFacePlant {
        std::vector<PlantedConfig> planted;
        std::map<std::string, LensInfo> lens_by_side;  // side edge id -> lens
    };

    /// Plants a T-configuration plus one B-configuration per side into a
    /// triangular face, with interior support chords. `with_lenses` off
    /// yields the bare T-configuration (fig 1a style).
    TFacePlant plant_t_face(FaceId f, const std::string& prefix, bool with_lenses = true,
                            bool with_chords = true);

    /// Plants the connector vertex of an NT-face: one vertex joined to the
    /// w-witness of each adjacent lens, each edge crossing its side edge
    /// once, plus the three corner chords.
    void plant_nt_face(FaceId f, const std::string& prefix,
                       const std::map<std::string, LensInfo>& lens_by_side);

    /// Plants a standalone B-configuration on the face side given by a walk
    /// dart (pole edge stays uncrossed). Returns the planted config.
    PlantedConfig plant_b_lens(DartId side_dart, const std::string& prefix, bool connected = false);

    /// Adds a kite crossing over the uncrossed edge of `side_dart`,
    /// joining the third corners of its two triangular faces.
    void plant_kite(DartId side_dart, const std::string& prefix);

    /// New degree-3 vertex inside triangular face f.
    void insert_vertex(FaceId f, const std::string& name);

    /// Redesignates the outer face as the face to the left of the dart of
    /// `edge` at node `at`.
    void set_outer(const std::string& at, const std::string& edge);

private:
    GraphModel model_;
    OnePlaneGraph baked_;
};

}  // namespace opvr
