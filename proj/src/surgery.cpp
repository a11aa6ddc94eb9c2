#include "opvr/surgery.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>

namespace opvr {

SurgeryStep plan_step(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs,
                      const NonRedundantSet::Entry& entry, NodeId pole,
                      const std::string& forced_crossing) {
    const auto& f = configs[size_t(entry.config)];
    std::vector<NodeId> candidates;
    if (entry.w_tag != kNone) {
        candidates.push_back(entry.w_tag);
    } else {
        for (NodeId k : f.crossings) candidates.push_back(k);
    }

    // a crossing qualifies if one of its edges ends at the matched pole and
    // the other ends at another pole of the entry
    struct Qual {
        NodeId k;
        EdgeId e_u, e_z;
        NodeId v, z, w;
    };
    std::vector<Qual> quals;
    for (NodeId k : candidates) {
        EdgeId e1 = kNone, e2 = kNone;
        for (const auto& [dummy, first] : g.crossing_pairs())
            if (dummy == k) {
                e1 = first;
                e2 = g.edge(first).crossing_partner;
            }
        if (e1 == kNone) continue;
        for (auto [eu, ez] : {std::pair{e1, e2}, {e2, e1}}) {
            const auto& a = g.edge(eu);
            if (a.u != pole && a.v != pole) continue;
            const auto& b = g.edge(ez);
            for (NodeId z : {b.u, b.v}) {
                if (z == pole) continue;
                if (!std::binary_search(f.poles.begin(), f.poles.end(), z)) continue;
                Qual q;
                q.k = k;
                q.e_u = eu;
                q.e_z = ez;
                q.v = a.u == pole ? a.v : a.u;
                q.z = z;
                q.w = b.u == z ? b.v : b.u;
                quals.push_back(q);
            }
        }
    }
    if (quals.empty())
        throw PropertyViolation("no qualifying crossing for " + entry.key + " at pole " +
                                g.node_name(pole));
    std::sort(quals.begin(), quals.end(),
              [&](const Qual& a, const Qual& b) { return g.node_name(a.k) < g.node_name(b.k); });
    const Qual* pick = &quals[0];
    if (!forced_crossing.empty()) {
        pick = nullptr;
        for (const auto& q : quals)
            if (g.node_name(q.k) == forced_crossing) pick = &q;
        if (!pick) throw ValidationError("forced crossing does not qualify");
    }

    SurgeryStep s;
    s.entry_key = entry.key;
    s.pole_u = g.node_name(pole);
    s.pole_z = g.node_name(pick->z);
    s.crossing = g.node_name(pick->k);
    s.edge_uv = g.edge(pick->e_u).name;
    s.edge_wz = g.edge(pick->e_z).name;
    s.witness_v = g.node_name(pick->v);
    s.witness_w = g.node_name(pick->w);
    return s;
}

namespace {

// inserts ref for (a -> b) into a's rotation inside face f (after a's
// boundary dart on f); a must occur exactly once on the walk
void insert_in_face(GraphModel& m, const OnePlaneGraph& g, FaceId f, const std::string& a,
                    const DartRef& new_ref) {
    const auto& walk = g.face(f).darts;
    int hits = 0;
    DartRef out{"", ""};
    for (DartId d : walk) {
        const Dart& dd = g.dart(d);
        if (g.node_name(dd.origin) == a) {
            ++hits;
            out = {g.edge(g.pedge(dd.pedge).original).name, g.node_name(dd.head)};
        }
    }
    if (hits != 1)
        throw PropertyViolation("surgery face corner '" + a + "' occurs " + std::to_string(hits) +
                                " times on the face walk");
    auto& rot = m.rotation.at(a);
    auto it = std::find(rot.begin(), rot.end(), out);
    if (it == rot.end()) throw PropertyViolation("surgery: face dart missing from rotation");
    rot.insert(it + 1, new_ref);
}

}  // namespace

SurgeryResult apply_all(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs,
                        const NonRedundantSet& F, const PoleAssignment& assignment) {
    GraphModel model = g.model();
    OnePlaneGraph cur = g;
    SurgeryResult out;
    std::map<std::string, int> subdiv;
    std::set<std::pair<std::string, std::string>> used_fragments;

    int fresh = 0;
    for (size_t i = 0; i < F.entries.size(); ++i) {
        // plan against the current graph; crossing dummies keep their names
        // across steps, edges at them may have been renamed by subdivisions
        const auto& entry = F.entries[i];
        // rebuild the entry's pole list on the current graph by name
        ForbiddenConfig fcur = configs[size_t(entry.config)];
        std::vector<NodeId> cur_poles;
        for (NodeId p : fcur.poles) cur_poles.push_back(cur.node_id(g.node_name(p)));
        std::sort(cur_poles.begin(), cur_poles.end());
        fcur.poles = cur_poles;
        std::vector<NodeId> cur_cross;
        for (NodeId c : fcur.crossings) cur_cross.push_back(cur.node_id(g.node_name(c)));
        std::sort(cur_cross.begin(), cur_cross.end());
        fcur.crossings = cur_cross;
        NonRedundantSet::Entry ecur = entry;
        ecur.config = 0;
        if (ecur.w_tag != kNone) ecur.w_tag = cur.node_id(g.node_name(entry.w_tag));
        std::vector<ForbiddenConfig> one{fcur};
        NodeId pole = cur.node_id(g.node_name(assignment.pole_of[i]));
        SurgeryStep step = plan_step(cur, one, ecur, pole);
        out.steps.push_back(step);

        if (!used_fragments.insert({step.crossing, step.pole_u}).second)
            throw PropertyViolation("two steps subdivide the same fragment at " + step.crossing);

        // subdivide the fragment (k, u) of edge (u,v) with s
        std::string s_name = "sdv" + std::to_string(fresh++);
        while (model.has_vertex(s_name)) s_name = "sdv" + std::to_string(fresh++);
        std::string id_cross = step.edge_uv + "_s";  // (s, v), still crossed at k
        std::string id_plain = step.edge_uv + "_u";  // (s, u), uncrossed
        model.vertices.push_back(s_name);
        for (auto it = model.edges.begin(); it != model.edges.end(); ++it)
            if (it->id == step.edge_uv) {
                model.edges.erase(it);
                break;
            }
        model.edges.push_back({id_cross, s_name, step.witness_v});
        model.edges.push_back({id_plain, s_name, step.pole_u});
        for (auto& c : model.crossings) {
            if (c.dummy != step.crossing) continue;
            if (c.e1 == step.edge_uv) c.e1 = id_cross;
            if (c.e2 == step.edge_uv) c.e2 = id_cross;
        }
        auto rewrite = [&](const std::string& at, const DartRef& from, const DartRef& to) {
            auto& rot = model.rotation.at(at);
            auto it = std::find(rot.begin(), rot.end(), from);
            if (it == rot.end()) throw PropertyViolation("surgery: dart to rewrite not found");
            *it = to;
        };
        if (model.outer_edge == step.edge_uv) {
            if (model.outer_at == step.pole_u)
                model.outer_edge = id_plain;
            else if (model.outer_at == step.witness_v)
                model.outer_edge = id_cross;
            else
                throw PropertyViolation("outer face reference lost by subdivision");
        }
        rewrite(step.pole_u, {step.edge_uv, step.crossing}, {id_plain, s_name});
        rewrite(step.witness_v, {step.edge_uv, step.crossing}, {id_cross, step.crossing});
        rewrite(step.crossing, {step.edge_uv, step.pole_u}, {id_cross, s_name});
        rewrite(step.crossing, {step.edge_uv, step.witness_v}, {id_cross, step.witness_v});
        // s sees the crossing on one side and u on the other; (z,s) and
        // (s,w) are inserted into the correct wedges below
        model.rotation[s_name] = {{id_cross, step.crossing}, {id_plain, step.pole_u}};
        cur = OnePlaneGraph::bake(model);

        // F1: face between the darts toward z and toward s at k, hosts (z,s)
        // F2: face between the darts toward s and toward w at k, hosts (s,w)
        NodeId k = cur.node_id(step.crossing);
        auto dart_toward = [&](const std::string& edge_id, const std::string& head) {
            EdgeId e = cur.edge_id(edge_id);
            PedgeId pe = cur.fragment_at(e, cur.node_id(head));
            return cur.dart_from(pe, k);
        };
        DartId dz = dart_toward(step.edge_wz, step.pole_z);
        DartId ds = dart_toward(id_cross, s_name);
        DartId dw = dart_toward(step.edge_wz, step.witness_w);
        auto wedge_face = [&](DartId a, DartId b) {
            if (cur.dart(a).rot_next == b) return cur.face_of(a);
            if (cur.dart(b).rot_next == a) return cur.face_of(b);
            throw PropertyViolation("surgery: crossing darts are not adjacent in rotation");
        };
        auto add_in_wedge = [&](DartId da, DartId db, const std::string& wedge_edge_a,
                                const std::string& wedge_head_a, const std::string& na,
                                const std::string& nb, const std::string& edge_id) {
            FaceId f = wedge_face(da, db);
            bool was_outer = (f == cur.outer_face());
            model.edges.push_back({edge_id, na, nb});
            insert_in_face(model, cur, f, na, {edge_id, nb});
            insert_in_face(model, cur, f, nb, {edge_id, na});
            cur = OnePlaneGraph::bake(model);
            if (was_outer) {
                // the corner wedge at the crossing becomes a pocket; the
                // outer face stays on the other side of the new edge
                NodeId kk = cur.node_id(step.crossing);
                EdgeId we = cur.edge_id(wedge_edge_a);
                DartId wd = cur.dart_from(cur.fragment_at(we, cur.node_id(wedge_head_a)), kk);
                FaceId pocket = cur.face_of(wd);
                EdgeId ne = cur.edge_id(edge_id);
                DartId dna = cur.dart_from(cur.edge(ne).pedges[0], cur.node_id(na));
                if (cur.face_of(dna) != pocket) {
                    model.outer_at = na;
                } else {
                    model.outer_at = nb;
                }
                model.outer_edge = edge_id;
                cur = OnePlaneGraph::bake(model);
            }
        };
        // the wedge dart whose left face is the corner pocket at k
        auto wedge_dart_of = [&](DartId da, DartId db) {
            return cur.dart(da).rot_next == db ? da : db;
        };
        std::string ez_id = "zs" + std::to_string(int(i));
        {
            DartId wd = wedge_dart_of(dz, ds);
            std::string we = wd == dz ? step.edge_wz : id_cross;
            std::string wh = wd == dz ? step.pole_z : s_name;
            add_in_wedge(dz, ds, we, wh, step.pole_z, s_name, ez_id);
        }

        k = cur.node_id(step.crossing);
        ds = dart_toward(id_cross, s_name);
        dw = dart_toward(step.edge_wz, step.witness_w);
        std::string ew_id = "sw" + std::to_string(int(i));
        {
            DartId wd = wedge_dart_of(ds, dw);
            std::string we = wd == ds ? id_cross : step.edge_wz;
            std::string wh = wd == ds ? s_name : step.witness_w;
            add_in_wedge(ds, dw, we, wh, s_name, step.witness_w, ew_id);
        }

        step.new_vertex = s_name;
        out.steps.back().new_vertex = s_name;
        ++subdiv[step.pole_u];
    }

    // postconditions
    auto leftovers = detect_all(cur);
    if (!leftovers.empty())
        throw PropertyViolation("surgery left " + std::to_string(leftovers.size()) +
                                " forbidden configurations, first: " + leftovers[0].key);
    if (is_three_connected(g) && !is_three_connected(cur))
        throw PropertyViolation("surgery broke 3-connectivity");
    for (auto& [pole, count] : subdiv) {
        out.subdivision_neighbors.push_back({pole, count});
        out.max_subdivision_neighbors = std::max(out.max_subdivision_neighbors, count);
    }
    if (out.max_subdivision_neighbors > 5)
        throw PropertyViolation("a pole has more than five subdivision vertices");

    out.graph = std::move(cur);
    return out;
}

std::string steps_log_json(const SurgeryResult& r) {
    nlohmann::json j;
    j["steps"] = nlohmann::json::array();
    for (const auto& s : r.steps)
        j["steps"].push_back({{"entry", s.entry_key},
                              {"pole", s.pole_u},
                              {"other_pole", s.pole_z},
                              {"crossing", s.crossing},
                              {"subdivided_edge", s.edge_uv},
                              {"new_vertex", s.new_vertex}});
    j["subdivision_neighbors"] = nlohmann::json::object();
    for (const auto& [pole, count] : r.subdivision_neighbors)
        j["subdivision_neighbors"][pole] = count;
    return j.dump(2) + "\n";
}

}  // namespace opvr
