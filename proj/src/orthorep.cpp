#include "opvr/orthorep.hpp"

#include <algorithm>
#include <map>

#include "opvr/flow.hpp"

namespace opvr {

ExpandedGraph expand(const OnePlaneGraph& g) {
    ExpandedGraph H;
    // ports per real-vertex dart, dummies unchanged
    std::map<DartId, int> port_of;       // g dart at a real vertex -> H node
    std::map<NodeId, int> dummy_node;    // g dummy -> H node
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.is_dummy(v)) {
            dummy_node[v] = int(H.nodes.size());
            H.nodes.push_back({false, v, kNone});
        } else {
            for (DartId d : g.darts_at(v)) {
                port_of[d] = int(H.nodes.size());
                H.nodes.push_back({true, v, d});
            }
        }
    }

    auto image = [&](DartId d) {
        NodeId o = g.dart(d).origin;
        return g.is_dummy(o) ? dummy_node.at(o) : port_of.at(d);
    };

    // H-darts grouped per node in ccw rotation order; built after edges
    struct PendingDart {
        int node;
        int edge;
        int slot;  // 0 = at edge.a, 1 = at edge.b
    };

    // visibility edges: one per planarization edge
    for (PedgeId pe = 0; pe < g.pedge_count(); ++pe) {
        const auto& p = g.pedge(pe);
        ExpandedGraph::HEdge e;
        e.a = image(p.darts[0]);
        e.b = image(p.darts[1]);
        e.cycle = false;
        e.g_pedge = pe;
        H.edges.push_back(e);
    }
    // cycle edges: consecutive ports around each real vertex
    std::map<std::pair<NodeId, int>, int> cycle_edge;  // (vertex, index) -> edge
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.is_dummy(v)) continue;
        const auto& ds = g.darts_at(v);
        int deg = int(ds.size());
        if (deg < 2) throw ValidationError("expand requires minimum degree 2");
        for (int i = 0; i < deg; ++i) {
            ExpandedGraph::HEdge e;
            e.a = port_of.at(ds[size_t(i)]);
            e.b = port_of.at(ds[size_t((i + 1) % deg)]);
            e.cycle = true;
            e.owner = v;
            cycle_edge[{v, i}] = int(H.edges.size());
            H.edges.push_back(e);
        }
    }

    // rotations: port (ccw): [visibility, cycle-to-next, cycle-to-prev];
    // dummy: its four visibility darts in the g rotation order
    std::vector<std::vector<std::pair<int, int>>> node_darts(H.nodes.size());  // (edge, slot)
    for (int ei = 0; ei < int(H.edges.size()); ++ei) {
        // slots resolved below by matching node ids
        (void)ei;
    }
    auto push_dart = [&](int node, int edge, int slot) {
        node_darts[size_t(node)].push_back({edge, slot});
    };
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.is_dummy(v)) {
            for (DartId d : g.darts_at(v)) {
                int slot = (g.pedge(g.dart(d).pedge).darts[0] == d) ? 0 : 1;
                push_dart(dummy_node.at(v), int(g.dart(d).pedge), slot);
            }
            continue;
        }
        const auto& ds = g.darts_at(v);
        int deg = int(ds.size());
        for (int i = 0; i < deg; ++i) {
            int port = port_of.at(ds[size_t(i)]);
            // visibility dart slot: which end of the pedge this dart is
            const auto& p = g.pedge(g.dart(ds[size_t(i)]).pedge);
            int vis_slot = (p.darts[0] == ds[size_t(i)]) ? 0 : 1;
            push_dart(port, int(g.dart(ds[size_t(i)]).pedge), vis_slot);
            push_dart(port, cycle_edge.at({v, i}), 0);
            push_dart(port, cycle_edge.at({v, (i + deg - 1) % deg}), 1);
        }
    }

    // materialize darts
    std::map<std::pair<int, int>, int> dart_id;  // (edge, slot) -> dart
    for (int n = 0; n < int(H.nodes.size()); ++n) {
        for (auto [e, slot] : node_darts[size_t(n)]) {
            ExpandedGraph::HDart d;
            d.origin = n;
            d.edge = e;
            int id = int(H.darts.size());
            H.darts.push_back(d);
            dart_id[{e, slot}] = id;
            H.edges[size_t(e)].darts[slot] = id;
        }
    }
    for (int e = 0; e < int(H.edges.size()); ++e) {
        int d0 = H.edges[size_t(e)].darts[0], d1 = H.edges[size_t(e)].darts[1];
        if (d0 == kNone || d1 == kNone) throw ValidationError("expand wiring incomplete");
        H.darts[size_t(d0)].twin = d1;
        H.darts[size_t(d1)].twin = d0;
        H.darts[size_t(d0)].head = H.darts[size_t(d1)].origin;
        H.darts[size_t(d1)].head = H.darts[size_t(d0)].origin;
    }
    for (int n = 0; n < int(H.nodes.size()); ++n) {
        const auto& list = node_darts[size_t(n)];
        int k = int(list.size());
        for (int i = 0; i < k; ++i) {
            int d = dart_id.at(list[size_t(i)]);
            H.darts[size_t(d)].rot_next = dart_id.at(list[size_t((i + 1) % k)]);
            H.darts[size_t(d)].rot_prev = dart_id.at(list[size_t((i + k - 1) % k)]);
        }
    }

    // faces
    std::vector<char> seen(H.darts.size(), 0);
    for (int d0 = 0; d0 < int(H.darts.size()); ++d0) {
        if (seen[size_t(d0)]) continue;
        std::vector<int> walk;
        int d = d0;
        do {
            seen[size_t(d)] = 1;
            H.darts[size_t(d)].face = int(H.faces.size());
            walk.push_back(d);
            d = H.face_next(d);
        } while (d != d0);
        H.faces.push_back(std::move(walk));
    }
    long V = long(H.nodes.size()), E = long(H.edges.size()), F = long(H.faces.size());
    if (V - E + F != 2) throw ValidationError("expanded graph failed the Euler check");

    // identify faces: any face containing a visibility dart maps to the
    // g-face left of the matching g-dart; all-cycle orbits are vertex faces
    H.vertex_face.assign(H.faces.size(), kNone);
    H.orig_face.assign(H.faces.size(), kNone);
    H.face_of_vertex.assign(size_t(g.node_count()), kNone);
    for (int f = 0; f < int(H.faces.size()); ++f) {
        NodeId owner = kNone;
        bool has_vis = false;
        for (int d : H.faces[size_t(f)]) {
            const auto& e = H.edges[size_t(H.darts[size_t(d)].edge)];
            if (!e.cycle) {
                has_vis = true;
                // the g dart matching this H dart direction
                const auto& p = g.pedge(e.g_pedge);
                DartId gd = (H.edges[size_t(H.darts[size_t(d)].edge)].darts[0] == d)
                                ? p.darts[0]
                                : p.darts[1];
                H.orig_face[size_t(f)] = g.face_of(gd);
            } else {
                owner = e.owner;
            }
        }
        if (!has_vis) {
            H.vertex_face[size_t(f)] = owner;
            H.face_of_vertex[size_t(owner)] = f;
        }
    }
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!g.is_dummy(v) && H.face_of_vertex[size_t(v)] == kNone)
            throw ValidationError("vertex face missing in expansion");
    for (int f = 0; f < int(H.faces.size()); ++f)
        if (H.orig_face[size_t(f)] == g.outer_face()) H.outer_face = f;
    if (H.outer_face == kNone) throw ValidationError("outer face missing in expansion");
    return H;
}

std::optional<OrthoRep> feasible(const OnePlaneGraph& g, const ExpandedGraph& H, int k) {
    (void)g;
    int n_faces = int(H.faces.size());
    int n_ports = 0;
    for (const auto& n : H.nodes)
        if (n.is_port) ++n_ports;

    // network nodes: faces, then ports, then one gate per vertex face
    std::map<int, int> port_node;  // H node -> net node
    int idx = n_faces;
    for (int n = 0; n < int(H.nodes.size()); ++n)
        if (H.nodes[size_t(n)].is_port) port_node[n] = idx++;
    std::map<NodeId, int> gate_node;
    for (int f = 0; f < n_faces; ++f)
        if (H.vertex_face[size_t(f)] != kNone) gate_node[H.vertex_face[size_t(f)]] = idx++;

    MinCostFlow net(idx);
    // ports supply one extra quarter-turn; each of their three corners can
    // absorb it (angle 90 -> 180)
    std::vector<std::pair<int, int>> port_corner_arcs;  // (arc, dart)
    for (int d = 0; d < int(H.darts.size()); ++d) {
        int o = H.darts[size_t(d)].origin;
        if (!H.nodes[size_t(o)].is_port) continue;
        int arc = net.add_arc(port_node.at(o), H.darts[size_t(d)].face, 1, 0);
        port_corner_arcs.push_back({arc, d});
    }
    for (auto& [n, net_id] : port_node) net.add_supply(net_id, 1);

    for (int f = 0; f < n_faces; ++f) {
        int deg = int(H.faces[size_t(f)].size());
        int demand = (f == H.outer_face) ? deg + 4 : deg - 4;
        net.add_supply(f, -demand);
    }

    // bends on cycle edges only; reflex bends are funneled through the
    // owner's capacity-k gate
    std::vector<std::pair<int, int>> convex_arcs, reflex_arcs;  // (arc, edge)
    for (int e = 0; e < int(H.edges.size()); ++e) {
        const auto& he = H.edges[size_t(e)];
        if (!he.cycle) continue;
        int f_in = kNone, f_out = kNone;
        for (int s = 0; s < 2; ++s) {
            int f = H.darts[size_t(he.darts[s])].face;
            if (H.vertex_face[size_t(f)] == he.owner)
                f_in = f;
            else
                f_out = f;
        }
        if (f_in == kNone || f_out == kNone)
            throw ValidationError("cycle edge does not border its vertex face");
        convex_arcs.push_back({net.add_arc(f_in, f_out, 1 << 20, 1), e});
        reflex_arcs.push_back({net.add_arc(f_out, gate_node.at(f_in), 1 << 20, 1), e});
    }
    for (auto& [f, gate] : gate_node) net.add_arc(gate, f, k, 0);

    if (!net.solve()) return std::nullopt;

    OrthoRep rep;
    rep.H = std::make_shared<ExpandedGraph>(H);
    rep.budget = k;
    rep.wedge.assign(H.darts.size(), 0);
    for (int d = 0; d < int(H.darts.size()); ++d) {
        int o = H.darts[size_t(d)].origin;
        rep.wedge[size_t(d)] = H.nodes[size_t(o)].is_port ? 1 : 1;
    }
    for (auto [arc, d] : port_corner_arcs) rep.wedge[size_t(d)] += net.flow_on(arc);
    rep.convex_bends.assign(H.edges.size(), 0);
    rep.reflex_bends.assign(H.edges.size(), 0);
    for (auto [arc, e] : convex_arcs) rep.convex_bends[size_t(e)] = net.flow_on(arc);
    for (auto [arc, e] : reflex_arcs) rep.reflex_bends[size_t(e)] = net.flow_on(arc);
    // a bend in each direction on one edge would be a positive-cost cycle;
    // the min-cost solution never keeps one
    for (int e = 0; e < int(H.edges.size()); ++e)
        if (rep.convex_bends[size_t(e)] && rep.reflex_bends[size_t(e)])
            throw PropertyViolation("canceling bend pair in min-cost solution");

    rep.vertex_reflex.assign(size_t(g.node_count()), 0);
    for (int e = 0; e < int(H.edges.size()); ++e)
        if (H.edges[size_t(e)].cycle)
            rep.vertex_reflex[size_t(H.edges[size_t(e)].owner)] += rep.reflex_bends[size_t(e)];
    for (int r : rep.vertex_reflex) rep.max_reflex = std::max(rep.max_reflex, r);
    if (rep.max_reflex > k) throw PropertyViolation("reflex budget exceeded by the flow");

    // angle sums: ports 4 across three corners, dummies 4 across four
    std::vector<int> sums(H.nodes.size(), 0);
    for (int d = 0; d < int(H.darts.size()); ++d)
        sums[size_t(H.darts[size_t(d)].origin)] += rep.wedge[size_t(d)];
    for (int s : sums)
        if (s != 4) throw PropertyViolation("angle sum around an expansion node is not 360");
    return rep;
}

MinComplexityResult min_complexity(const OnePlaneGraph& g, int max_k) {
    auto H = expand(g);
    if (max_k < 0) max_k = 2 * std::max(4, g.node_count());
    for (int k = 0; k <= max_k; ++k) {
        auto rep = feasible(g, H, k);
        if (rep) return {k, std::move(*rep)};
    }
    throw PropertyViolation("no feasible orthogonal representation up to the scan cap " +
                            std::to_string(max_k));
}

}  // namespace opvr
