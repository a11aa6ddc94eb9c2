#include "opvr/graph.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opvr {

using nlohmann::json;

bool GraphModel::has_vertex(const std::string& name) const {
    return std::find(vertices.begin(), vertices.end(), name) != vertices.end();
}

bool GraphModel::has_edge_between(const std::string& a, const std::string& b) const {
    for (const auto& e : edges)
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return true;
    return false;
}

const GraphModel::Edge* GraphModel::find_edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return &e;
    return nullptr;
}

namespace {

struct Baker {
    const GraphModel& m;
    OnePlaneGraph* out;

    std::map<std::string, NodeId> node_index;
    std::vector<std::string> node_names;
    std::vector<bool> dummy;

    NodeId need_node(const std::string& name, const char* what) {
        auto it = node_index.find(name);
        if (it == node_index.end())
            throw ValidationError(std::string(what) + " references unknown node '" + name + "'");
        return it->second;
    }
};

}  // namespace

OnePlaneGraph OnePlaneGraph::bake(const GraphModel& m) {
    OnePlaneGraph g;
    g.model_ = m;

    // nodes: real vertices, then dummies
    for (const auto& v : m.vertices) {
        if (g.node_index_.count(v))
            throw ValidationError("duplicate vertex id '" + v + "'");
        g.node_index_[v] = NodeId(g.node_names_.size());
        g.node_names_.push_back(v);
        g.dummy_.push_back(false);
    }
    g.real_count_ = int(g.node_names_.size());
    for (const auto& c : m.crossings) {
        if (g.node_index_.count(c.dummy))
            throw ValidationError("crossing dummy '" + c.dummy + "' collides with an existing node id");
        g.node_index_[c.dummy] = NodeId(g.node_names_.size());
        g.node_names_.push_back(c.dummy);
        g.dummy_.push_back(true);
    }

    auto need_node = [&](const std::string& name, const char* what) {
        auto it = g.node_index_.find(name);
        if (it == g.node_index_.end())
            throw ValidationError(std::string(what) + " references unknown node '" + name + "'");
        return it->second;
    };

    // original edges
    for (const auto& e : m.edges) {
        if (g.edge_index_.count(e.id))
            throw ValidationError("duplicate edge id '" + e.id + "'");
        OriginalEdge oe;
        oe.name = e.id;
        oe.u = need_node(e.u, ("edge '" + e.id + "'").c_str());
        oe.v = need_node(e.v, ("edge '" + e.id + "'").c_str());
        if (g.dummy_[size_t(oe.u)] || g.dummy_[size_t(oe.v)])
            throw ValidationError("edge '" + e.id + "' must join real vertices");
        if (oe.u == oe.v)
            throw ValidationError("self-loop on edge '" + e.id + "'");
        auto key = std::minmax(oe.u, oe.v);
        if (g.edge_between_.count({key.first, key.second}))
            throw ValidationError("parallel edge '" + e.id + "' between '" + e.u + "' and '" + e.v + "'");
        g.edge_between_[{key.first, key.second}] = EdgeId(g.edges_.size());
        g.edge_index_[e.id] = EdgeId(g.edges_.size());
        g.edges_.push_back(oe);
    }

    // crossings
    for (const auto& c : m.crossings) {
        NodeId d = g.node_index_.at(c.dummy);
        auto it1 = g.edge_index_.find(c.e1);
        auto it2 = g.edge_index_.find(c.e2);
        if (it1 == g.edge_index_.end() || it2 == g.edge_index_.end())
            throw ValidationError("crossing '" + c.dummy + "' references unknown edge");
        if (it1->second == it2->second)
            throw ValidationError("crossing '" + c.dummy + "' crosses edge '" + c.e1 + "' with itself");
        for (EdgeId e : {it1->second, it2->second}) {
            if (g.edges_[size_t(e)].crossing != kNone)
                throw ValidationError("edge crossed twice: '" + g.edges_[size_t(e)].name + "'");
            g.edges_[size_t(e)].crossing = d;
        }
        g.edges_[size_t(it1->second)].crossing_partner = it2->second;
        g.edges_[size_t(it2->second)].crossing_partner = it1->second;
        g.crossing_list_.push_back({d, it1->second});
    }

    // planarization edges: for uncrossed e: (u,v); for crossed: (u,d),(d,v)
    for (EdgeId ei = 0; ei < int(g.edges_.size()); ++ei) {
        auto& e = g.edges_[size_t(ei)];
        auto add_pedge = [&](NodeId a, NodeId b) {
            Pedge pe;
            pe.original = ei;
            pe.ends = {a, b};
            g.pedges_.push_back(pe);
            e.pedges.push_back(PedgeId(g.pedges_.size() - 1));
        };
        if (e.crossing == kNone) {
            add_pedge(e.u, e.v);
        } else {
            add_pedge(e.u, e.crossing);
            add_pedge(e.crossing, e.v);
        }
    }

    // darts from rotation lists
    // map (node, edge, toward) -> pedge end
    std::map<std::tuple<NodeId, EdgeId, NodeId>, PedgeId> pedge_at;
    for (PedgeId pi = 0; pi < int(g.pedges_.size()); ++pi) {
        const auto& pe = g.pedges_[size_t(pi)];
        pedge_at[{pe.ends[0], pe.original, pe.ends[1]}] = pi;
        pedge_at[{pe.ends[1], pe.original, pe.ends[0]}] = pi;
    }

    g.node_darts_.resize(g.node_names_.size());
    std::map<std::pair<PedgeId, NodeId>, DartId> dart_of;  // (pedge, origin)
    for (const auto& [node_name, refs] : m.rotation) {
        NodeId n = need_node(node_name, "rotation");
        for (const auto& r : refs) {
            auto eit = g.edge_index_.find(r.edge);
            if (eit == g.edge_index_.end())
                throw ValidationError("rotation at '" + node_name + "' references unknown edge '" + r.edge + "'");
            NodeId toward = need_node(r.toward, ("rotation at '" + node_name + "'").c_str());
            auto pit = pedge_at.find({n, eit->second, toward});
            if (pit == pedge_at.end())
                throw ValidationError("rotation at '" + node_name + "' lists dart {edge '" + r.edge +
                                      "', toward '" + r.toward + "'} which is not incident there");
            if (dart_of.count({pit->second, n}))
                throw ValidationError("rotation at '" + node_name + "' repeats dart {edge '" + r.edge +
                                      "', toward '" + r.toward + "'}");
            Dart d;
            d.origin = n;
            d.head = toward;
            d.pedge = pit->second;
            g.darts_.push_back(d);
            DartId di = DartId(g.darts_.size() - 1);
            dart_of[{pit->second, n}] = di;
            g.node_darts_[size_t(n)].push_back(di);
        }
    }

    // every pedge must have both darts; wire twins
    for (PedgeId pi = 0; pi < int(g.pedges_.size()); ++pi) {
        const auto& pe = g.pedges_[size_t(pi)];
        auto a = dart_of.find({pi, pe.ends[0]});
        auto b = dart_of.find({pi, pe.ends[1]});
        if (a == dart_of.end() || b == dart_of.end())
            throw ValidationError("edge '" + g.edges_[size_t(pe.original)].name +
                                  "' is missing from a rotation list");
        g.pedges_[size_t(pi)].darts = {a->second, b->second};
        g.darts_[size_t(a->second)].twin = b->second;
        g.darts_[size_t(b->second)].twin = a->second;
    }

    // rotation next/prev
    for (NodeId n = 0; n < g.node_count(); ++n) {
        const auto& ds = g.node_darts_[size_t(n)];
        int k = int(ds.size());
        for (int i = 0; i < k; ++i) {
            g.darts_[size_t(ds[size_t(i)])].rot_next = ds[size_t((i + 1) % k)];
            g.darts_[size_t(ds[size_t(i)])].rot_prev = ds[size_t((i + k - 1) % k)];
        }
    }

    // dummy structure: degree 4, alternating edges e1,e2,e1,e2
    for (const auto& [d, e1] : g.crossing_list_) {
        const auto& ds = g.node_darts_[size_t(d)];
        if (ds.size() != 4)
            throw ValidationError("dummy '" + g.node_names_[size_t(d)] + "' has degree " +
                                  std::to_string(ds.size()) + ", expected 4");
        EdgeId prev = kNone;
        for (int i = 0; i < 4; ++i) {
            EdgeId e = g.pedges_[size_t(g.darts_[size_t(ds[size_t(i)])].pedge)].original;
            if (i > 0 && e == prev)
                throw ValidationError("rotation at dummy '" + g.node_names_[size_t(d)] +
                                      "' does not alternate between its two crossing edges");
            prev = e;
        }
        (void)e1;
    }
    // real-vertex degree sanity (every incident pedge present exactly once)
    for (NodeId n = 0; n < g.node_count(); ++n) {
        if (g.dummy_[size_t(n)]) continue;
        int expect = 0;
        for (const auto& pe : g.pedges_)
            if (pe.ends[0] == n || pe.ends[1] == n) ++expect;
        if (int(g.node_darts_[size_t(n)].size()) != expect)
            throw ValidationError("rotation at '" + g.node_names_[size_t(n)] + "' lists " +
                                  std::to_string(g.node_darts_[size_t(n)].size()) + " darts, expected " +
                                  std::to_string(expect));
    }

    // faces: orbits of face_next(d) = rot_prev(twin(d))
    std::vector<char> seen(g.darts_.size(), 0);
    for (DartId d0 = 0; d0 < int(g.darts_.size()); ++d0) {
        if (seen[size_t(d0)]) continue;
        FaceWalk f;
        DartId d = d0;
        do {
            seen[size_t(d)] = 1;
            g.darts_[size_t(d)].face = FaceId(g.faces_.size());
            f.darts.push_back(d);
            d = g.face_next(d);
        } while (d != d0);
        g.faces_.push_back(std::move(f));
    }

    // connectivity of the planarization
    if (!g.darts_.empty()) {
        std::vector<char> vis(g.node_names_.size(), 0);
        std::vector<NodeId> stack{g.darts_[0].origin};
        vis[size_t(stack[0])] = 1;
        while (!stack.empty()) {
            NodeId n = stack.back();
            stack.pop_back();
            for (DartId d : g.node_darts_[size_t(n)]) {
                NodeId h = g.darts_[size_t(d)].head;
                if (!vis[size_t(h)]) {
                    vis[size_t(h)] = 1;
                    stack.push_back(h);
                }
            }
        }
        for (NodeId n = 0; n < g.node_count(); ++n)
            if (!vis[size_t(n)] && g.degree(n) > 0)
                throw ValidationError("planarization is disconnected at '" + g.node_names_[size_t(n)] + "'");
        int isolated = 0;
        for (NodeId n = 0; n < g.node_count(); ++n)
            if (g.degree(n) == 0) ++isolated;
        if (isolated > 0 && g.node_count() - isolated > 0)
            throw ValidationError("graph mixes isolated and connected vertices");
    }

    // Euler check on the planarization
    if (!g.darts_.empty()) {
        long V = g.node_count(), E = g.pedge_count(), F = g.face_count();
        if (V - E + F != 2)
            throw ValidationError("rotation system is not planar: V-E+F = " +
                                  std::to_string(V - E + F) + " (V=" + std::to_string(V) +
                                  " E=" + std::to_string(E) + " F=" + std::to_string(F) + ")");
    }

    // outer face
    if (!m.outer_at.empty()) {
        NodeId at = need_node(m.outer_at, "outer_face");
        auto eit = g.edge_index_.find(m.outer_edge);
        if (eit == g.edge_index_.end())
            throw ValidationError("outer_face references unknown edge '" + m.outer_edge + "'");
        PedgeId pe = g.fragment_at(eit->second, at);
        if (pe == kNone)
            throw ValidationError("outer_face dart {at '" + m.outer_at + "', edge '" + m.outer_edge +
                                  "'} is not incident");
        DartId d = g.dart_from(pe, at);
        g.outer_face_ = g.darts_[size_t(d)].face;
        g.faces_[size_t(g.outer_face_)].outer = true;
    } else if (!g.edges_.empty()) {
        throw ValidationError("outer_face is required for a graph with edges");
    } else if (!g.faces_.empty()) {
        g.outer_face_ = 0;
        g.faces_[0].outer = true;
    }

    // underlying adjacency
    g.under_adj_.resize(size_t(g.real_count_));
    for (const auto& e : g.edges_) {
        g.under_adj_[size_t(e.u)].push_back(e.v);
        g.under_adj_[size_t(e.v)].push_back(e.u);
    }
    for (auto& a : g.under_adj_) std::sort(a.begin(), a.end());

    return g;
}

NodeId OnePlaneGraph::node_id(const std::string& name) const {
    auto it = node_index_.find(name);
    return it == node_index_.end() ? kNone : it->second;
}

EdgeId OnePlaneGraph::edge_id(const std::string& name) const {
    auto it = edge_index_.find(name);
    return it == edge_index_.end() ? kNone : it->second;
}

EdgeId OnePlaneGraph::edge_between(NodeId a, NodeId b) const {
    auto key = std::minmax(a, b);
    auto it = edge_between_.find({key.first, key.second});
    return it == edge_between_.end() ? kNone : it->second;
}

PedgeId OnePlaneGraph::fragment_at(EdgeId e, NodeId n) const {
    for (PedgeId pi : edges_[size_t(e)].pedges) {
        const auto& pe = pedges_[size_t(pi)];
        if (pe.ends[0] == n || pe.ends[1] == n) return pi;
    }
    return kNone;
}

DartId OnePlaneGraph::dart_from(PedgeId pe, NodeId at) const {
    const auto& p = pedges_[size_t(pe)];
    if (p.ends[0] == at) return p.darts[0];
    if (p.ends[1] == at) return p.darts[1];
    return kNone;
}

std::vector<FaceId> OnePlaneGraph::faces_at(NodeId n) const {
    std::vector<FaceId> out;
    for (DartId d : node_darts_[size_t(n)]) out.push_back(darts_[size_t(d)].face);
    return out;
}

// --- JSON ---

GraphModel parse_model(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("malformed document: ") + ex.what());
    }
    GraphModel m;
    try {
        for (const auto& v : j.at("vertices")) m.vertices.push_back(v.get<std::string>());
        for (const auto& e : j.at("edges")) {
            GraphModel::Edge ge;
            ge.id = e.at("id").get<std::string>();
            ge.u = e.at("ends").at(0).get<std::string>();
            ge.v = e.at("ends").at(1).get<std::string>();
            m.edges.push_back(ge);
        }
        if (j.count("crossings"))
            for (const auto& c : j.at("crossings")) {
                GraphModel::Crossing gc;
                gc.dummy = c.at("dummy").get<std::string>();
                gc.e1 = c.at("edges").at(0).get<std::string>();
                gc.e2 = c.at("edges").at(1).get<std::string>();
                m.crossings.push_back(gc);
            }
        for (const auto& [node, refs] : j.at("rotation").items()) {
            std::vector<DartRef> list;
            for (const auto& r : refs)
                list.push_back(DartRef{r.at("edge").get<std::string>(), r.at("toward").get<std::string>()});
            m.rotation[node] = std::move(list);
        }
        if (j.count("outer_face") && !j.at("outer_face").is_null()) {
            m.outer_at = j.at("outer_face").at("at").get<std::string>();
            m.outer_edge = j.at("outer_face").at("edge").get<std::string>();
        }
    } catch (const json::exception& ex) {
        throw ValidationError(std::string("malformed document: ") + ex.what());
    }
    return m;
}

OnePlaneGraph parse_graph(const std::string& json_text) {
    return OnePlaneGraph::bake(parse_model(json_text));
}

std::string serialize_graph(const OnePlaneGraph& g) {
    const GraphModel& m = g.model();
    json j;
    auto verts = m.vertices;
    std::sort(verts.begin(), verts.end());
    j["vertices"] = verts;

    auto edges = m.edges;
    std::sort(edges.begin(), edges.end(),
              [](const GraphModel::Edge& a, const GraphModel::Edge& b) { return a.id < b.id; });
    j["edges"] = json::array();
    for (const auto& e : edges) j["edges"].push_back({{"id", e.id}, {"ends", {e.u, e.v}}});

    auto crossings = m.crossings;
    std::sort(crossings.begin(), crossings.end(),
              [](const GraphModel::Crossing& a, const GraphModel::Crossing& b) { return a.dummy < b.dummy; });
    j["crossings"] = json::array();
    for (const auto& c : crossings) {
        auto e1 = c.e1, e2 = c.e2;
        if (e2 < e1) std::swap(e1, e2);
        j["crossings"].push_back({{"dummy", c.dummy}, {"edges", {e1, e2}}});
    }

    j["rotation"] = json::object();
    for (const auto& [node, refs] : m.rotation) {
        // normalize the cyclic list to start at the smallest dart ref
        if (refs.empty()) {
            j["rotation"][node] = json::array();
            continue;
        }
        size_t best = 0;
        for (size_t i = 1; i < refs.size(); ++i)
            if (refs[i] < refs[best]) best = i;
        json list = json::array();
        for (size_t i = 0; i < refs.size(); ++i) {
            const auto& r = refs[(best + i) % refs.size()];
            list.push_back({{"edge", r.edge}, {"toward", r.toward}});
        }
        j["rotation"][node] = std::move(list);
    }

    if (g.outer_face() != kNone && g.edge_count() > 0) {
        // canonical dart on the outer face: smallest (node name, edge name)
        const auto& walk = g.face(g.outer_face()).darts;
        std::pair<std::string, std::string> best;
        bool first = true;
        for (DartId d : walk) {
            const auto& dd = g.dart(d);
            // a (node, edge) pair is ambiguous at a dummy, which carries two
            // fragments of the same edge; real origins identify darts uniquely
            if (g.is_dummy(dd.origin)) continue;
            std::pair<std::string, std::string> cand{g.node_name(dd.origin),
                                                     g.edge(g.pedge(dd.pedge).original).name};
            if (first || cand < best) {
                best = cand;
                first = false;
            }
        }
        j["outer_face"] = {{"at", best.first}, {"edge", best.second}};
    }

    return j.dump(2) + "\n";
}

// --- 3-connectivity ---

namespace {

// articulation points of the underlying graph with vertex `skip` removed;
// returns true iff G - skip is connected and has no cut vertex.
bool biconnected_without(const std::vector<std::vector<NodeId>>& adj, int n, NodeId skip) {
    if (n - 1 < 3) return true;  // degenerate, caller guards
    std::vector<int> disc(size_t(n), -1), low(size_t(n), 0), parent(size_t(n), -1);
    std::vector<size_t> it(size_t(n), 0);
    int timer = 0, visited = 0;
    NodeId root = kNone;
    for (NodeId s = 0; s < n; ++s)
        if (s != skip) {
            root = s;
            break;
        }
    std::vector<NodeId> stack{root};
    disc[size_t(root)] = low[size_t(root)] = timer++;
    ++visited;
    int root_children = 0;
    while (!stack.empty()) {
        NodeId u = stack.back();
        if (it[size_t(u)] < adj[size_t(u)].size()) {
            NodeId v = adj[size_t(u)][it[size_t(u)]++];
            if (v == skip) continue;
            if (disc[size_t(v)] == -1) {
                parent[size_t(v)] = u;
                if (u == root) ++root_children;
                disc[size_t(v)] = low[size_t(v)] = timer++;
                ++visited;
                stack.push_back(v);
            } else if (v != parent[size_t(u)]) {
                low[size_t(u)] = std::min(low[size_t(u)], disc[size_t(v)]);
            }
        } else {
            stack.pop_back();
            NodeId p = parent[size_t(u)];
            if (p != kNone) {
                low[size_t(p)] = std::min(low[size_t(p)], low[size_t(u)]);
                if (p != root && low[size_t(u)] >= disc[size_t(p)]) return false;  // p is a cut vertex
            }
        }
    }
    if (visited != n - 1) return false;       // G - skip disconnected
    if (root_children > 1) return false;      // root is a cut vertex
    return true;
}

bool three_connected_impl(const OnePlaneGraph& g, bool parallel) {
    int n = g.real_vertex_count();
    const auto& adj = g.underlying_adjacency();
    if (n < 4) {
        // degenerate: defined as "graph is complete"
        for (NodeId u = 0; u < n; ++u)
            if (int(adj[size_t(u)].size()) != n - 1) return false;
        return true;
    }
    for (NodeId u = 0; u < n; ++u)
        if (adj[size_t(u)].empty()) return false;

    bool ok = true;
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (NodeId u = 0; u < n; ++u) {
            if (!ok) continue;
            if (!biconnected_without(adj, n, u)) {
#pragma omp atomic write
                ok = false;
            }
        }
        return ok;
#endif
    }
    for (NodeId u = 0; u < n && ok; ++u)
        if (!biconnected_without(adj, n, u)) ok = false;
    return ok;
}

}  // namespace

bool is_three_connected_serial(const OnePlaneGraph& g) { return three_connected_impl(g, false); }
bool is_three_connected(const OnePlaneGraph& g) { return three_connected_impl(g, true); }

}  // namespace opvr
