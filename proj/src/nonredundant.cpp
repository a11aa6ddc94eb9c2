#include "opvr/nonredundant.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <map>
#include <set>

namespace opvr {

NonRedundantSet build_F(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs) {
    NonRedundantSet F;
    int w_index = kNone;
    for (size_t i = 0; i < configs.size(); ++i) {
        if (configs[i].kind != ForbiddenConfig::Kind::W) continue;
        if (w_index != kNone)
            throw ValidationError("multiple W-configurations; input is not 3-connected");
        w_index = int(i);
    }

    for (size_t i = 0; i < configs.size(); ++i)
        if (configs[i].kind == ForbiddenConfig::Kind::B)
            F.entries.push_back({int(i), kNone, configs[i].key});
    F.beta = int(F.entries.size());

    for (size_t i = 0; i < configs.size(); ++i) {
        if (configs[i].kind != ForbiddenConfig::Kind::T) continue;
        bool indep = true;
        for (const auto& other : configs)
            if (other.kind == ForbiddenConfig::Kind::B && dependent(configs[i], other)) indep = false;
        if (indep) {
            F.entries.push_back({int(i), kNone, configs[i].key});
            ++F.tau;
        }
    }

    if (w_index != kNone) {
        const auto& w = configs[size_t(w_index)];
        std::set<NodeId> covered;
        for (const auto& f : configs)
            if (f.kind == ForbiddenConfig::Kind::B && dependent(f, w)) {
                ++F.w_dependent_b;
                covered.insert(f.crossings[0]);
            }
        F.omega = std::max(0, 2 - F.w_dependent_b);
        if (F.omega == 2) {
            for (NodeId c : w.crossings)
                F.entries.push_back({w_index, c, w.key + "#" + g.node_name(c)});
        } else if (F.omega == 1) {
            // tag the copy with the crossing not covered by a dependent B
            for (NodeId c : w.crossings)
                if (!covered.count(c)) {
                    F.entries.push_back({w_index, c, w.key + "#" + g.node_name(c)});
                    break;
                }
        }
    }

    std::sort(F.entries.begin(), F.entries.end(),
              [](const NonRedundantSet::Entry& a, const NonRedundantSet::Entry& b) {
                  return a.key < b.key;
              });
    std::set<NodeId> poles;
    for (const auto& e : F.entries) {
        const auto& ps = configs[size_t(e.config)].poles;
        poles.insert(ps.begin(), ps.end());
    }
    F.poles.assign(poles.begin(), poles.end());
    return F;
}

namespace {

struct Drawn {
    NodeId a, b;  // a < b
    NodeId crossing;
    PedgeId frag_a, frag_b;
    friend bool operator<(const Drawn& x, const Drawn& y) {
        return std::tie(x.a, x.b, x.crossing, x.frag_a, x.frag_b) <
               std::tie(y.a, y.b, y.crossing, y.frag_a, y.frag_b);
    }
};

// per switching crossing of f: the boundary pole pair and its fragments
std::vector<Drawn> contributions(const OnePlaneGraph& g, const ForbiddenConfig& f) {
    std::vector<Drawn> out;
    const auto& walk = f.boundary;
    for (size_t i = 0; i < walk.size(); ++i) {
        const Dart& d = g.dart(walk[i]);
        NodeId k = d.head;
        if (!std::binary_search(f.crossings.begin(), f.crossings.end(), k)) continue;
        const Dart& dn = g.dart(walk[(i + 1) % walk.size()]);
        NodeId a = d.origin, b = dn.head;
        PedgeId fa = d.pedge, fb = dn.pedge;
        if (a > b) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
        out.push_back({a, b, k, fa, fb});
    }
    return out;
}

}  // namespace

AuxiliaryGraph build_aux_graph(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs,
                               const NonRedundantSet& F) {
    AuxiliaryGraph aux;
    aux.nodes = F.poles;
    aux.n_a = int(F.poles.size());

    std::map<Drawn, size_t> seen;
    for (const auto& e : F.entries) {
        const auto& f = configs[size_t(e.config)];
        bool is_w_copy = e.w_tag != kNone;
        for (const auto& c : contributions(g, f)) {
            auto it = seen.find(c);
            if (it != seen.end()) {
                ++aux.edges[it->second].multiplicity;
                if (is_w_copy) ++aux.s;
                continue;
            }
            seen[c] = aux.edges.size();
            aux.edges.push_back({c.a, c.b, c.crossing, c.frag_a, c.frag_b, 1});
        }
    }
    aux.m_a = int(aux.edges.size());

    std::map<std::pair<NodeId, NodeId>, int> parallel;
    for (const auto& e : aux.edges)
        aux.max_parallel = std::max(aux.max_parallel, ++parallel[{e.a, e.b}]);

    int m = int(aux.edges.size());
    if (m == 0) {
        aux.planar_ok = true;
        aux.components = aux.n_a;
        return aux;
    }
    std::map<NodeId, int> pole_index;
    for (size_t i = 0; i < F.poles.size(); ++i) pole_index[F.poles[i]] = int(i);

    auto host_pos = [&](NodeId node, DartId d) {
        const auto& ds = g.darts_at(node);
        for (size_t i = 0; i < ds.size(); ++i)
            if (ds[i] == d) return int(i);
        return -1;
    };

    // aux darts: 2e at edge.a, 2e+1 at edge.b; rotation inherited from the
    // host graph, curves sharing a first fragment ordered by where they
    // continue around the shared crossing
    std::vector<int> rot_prev(size_t(2 * m));
    std::vector<std::vector<int>> at_pole(F.poles.size());
    for (int e = 0; e < m; ++e) {
        at_pole[size_t(pole_index.at(aux.edges[size_t(e)].a))].push_back(2 * e);
        at_pole[size_t(pole_index.at(aux.edges[size_t(e)].b))].push_back(2 * e + 1);
    }
    for (size_t pi = 0; pi < at_pole.size(); ++pi) {
        NodeId pole = F.poles[pi];
        auto key = [&](int ad) {
            const auto& e = aux.edges[size_t(ad / 2)];
            PedgeId frag = (ad % 2 == 0) ? e.frag_a : e.frag_b;
            PedgeId other = (ad % 2 == 0) ? e.frag_b : e.frag_a;
            DartId host = g.dart_from(frag, pole);
            DartId cont = g.dart_from(other, e.crossing);
            DartId in_twin = g.dart(host).twin;
            int c_in = host_pos(e.crossing, in_twin);
            int c_out = host_pos(e.crossing, cont);
            int rel = ((c_out - c_in) % 4 + 4) % 4;
            return std::tuple<int, int, int>(host_pos(pole, host), rel, ad);
        };
        auto& list = at_pole[pi];
        std::sort(list.begin(), list.end(), [&](int x, int y) { return key(x) < key(y); });
        int k = int(list.size());
        for (int i = 0; i < k; ++i)
            rot_prev[size_t(list[size_t(i)])] = list[size_t((i + k - 1) % k)];
    }
    std::vector<char> visited(size_t(2 * m), 0);
    int faces = 0;
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        if (visited[size_t(d0)]) continue;
        ++faces;
        int d = d0;
        do {
            visited[size_t(d)] = 1;
            d = rot_prev[size_t(d ^ 1)];
        } while (d != d0);
    }
    aux.euler_faces = faces;

    std::map<NodeId, NodeId> parent;
    std::function<NodeId(NodeId)> find = [&](NodeId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (NodeId p : F.poles) parent[p] = p;
    for (const auto& e : aux.edges) parent[find(e.a)] = find(e.b);
    std::set<NodeId> roots;
    for (NodeId p : F.poles) roots.insert(find(p));
    aux.components = int(roots.size());
    aux.planar_ok = (aux.n_a - aux.m_a + aux.euler_faces == 1 + aux.components);
    return aux;
}

BoundReport check_lemma3(const NonRedundantSet& F, const AuxiliaryGraph& aux, bool has_sep_t) {
    BoundReport r;
    (void)aux;
    r.f_size = int(F.entries.size());
    r.poles = int(F.poles.size());
    r.separating_t = has_sep_t;
    if (r.poles < 3) {
        r.degenerate = r.f_size > 0;
        r.bound_holds = r.f_size == 0;
        return r;
    }
    if (has_sep_t) return r;
    r.applicable = true;
    r.bound = 4 * r.poles - (F.omega > 0 ? 7 : 8);
    r.bound_holds = r.f_size <= r.bound;
    if (F.omega == 0) {
        r.equality = (r.f_size == 4 * r.poles - 8);
        bool maxed = (F.beta == 3 * r.poles - 6) && (F.tau == r.poles - 2);
        r.equality_characterization_ok = (r.equality == maxed);
    }
    return r;
}

namespace {

// deterministic DFS augmentation over a fixed arc order
struct UnitFlow {
    struct Arc {
        int to, cap, flow = 0;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> adj;

    explicit UnitFlow(int n) : adj(size_t(n)) {}
    int add(int u, int v, int cap) {
        int id = int(arcs.size());
        arcs.push_back({v, cap});
        adj[size_t(u)].push_back(id);
        arcs.push_back({u, 0});
        adj[size_t(v)].push_back(id + 1);
        return id;
    }
    bool augment(int u, int t, std::vector<char>& vis) {
        if (u == t) return true;
        vis[size_t(u)] = 1;
        for (int id : adj[size_t(u)]) {
            auto& a = arcs[size_t(id)];
            if (a.cap - a.flow <= 0 || vis[size_t(a.to)]) continue;
            if (augment(a.to, t, vis)) {
                ++a.flow;
                --arcs[size_t(id ^ 1)].flow;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

PoleAssignment compute_assignment(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs,
                                  const NonRedundantSet& F) {
    (void)g;
    int n_entries = int(F.entries.size());
    std::map<NodeId, int> pole_index;
    for (size_t i = 0; i < F.poles.size(); ++i) pole_index[F.poles[i]] = int(i);
    int n_poles = int(F.poles.size());

    std::vector<int> w_copies;
    for (int i = 0; i < n_entries; ++i)
        if (F.entries[size_t(i)].w_tag != kNone) w_copies.push_back(i);
    bool use_gadget = w_copies.size() == 2;

    // nodes: 0 source, 1..n entries (the two W copies share a gadget node of
    // capacity 2 fanning to both poles), then poles, then sink
    int pole_base = 1 + n_entries;
    int sink = pole_base + n_poles;
    UnitFlow net(sink + 1);
    std::vector<std::vector<std::pair<int, int>>> entry_pole_arcs{size_t(n_entries)};
    int gadget = kNone;
    for (int i = 0; i < n_entries; ++i) {
        const auto& f = configs[size_t(F.entries[size_t(i)].config)];
        if (use_gadget && F.entries[size_t(i)].w_tag != kNone) {
            if (gadget == kNone) {
                gadget = 1 + i;
                net.add(0, gadget, 2);
                for (NodeId p : f.poles)
                    entry_pole_arcs[size_t(i)].push_back(
                        {net.add(gadget, pole_base + pole_index.at(p), 1), pole_index.at(p)});
            }
            continue;
        }
        net.add(0, 1 + i, 1);
        for (NodeId p : f.poles)
            entry_pole_arcs[size_t(i)].push_back(
                {net.add(1 + i, pole_base + pole_index.at(p), 1), pole_index.at(p)});
    }
    for (int p = 0; p < n_poles; ++p) net.add(pole_base + p, sink, 5);

    int value = 0;
    for (int round = 0; round < n_entries + 2; ++round) {
        std::vector<char> vis(size_t(sink + 1), 0);
        if (!net.augment(0, sink, vis)) break;
        ++value;
    }
    if (value != n_entries)
        throw PropertyViolation("Theorem 3 violated: 5-matching flow value " +
                                std::to_string(value) + " < |F| = " + std::to_string(n_entries));

    PoleAssignment out;
    out.pole_of.assign(size_t(n_entries), kNone);
    out.load.assign(size_t(n_poles), 0);
    for (int i = 0; i < n_entries; ++i) {
        if (use_gadget && F.entries[size_t(i)].w_tag != kNone) continue;
        for (auto [arc, p] : entry_pole_arcs[size_t(i)])
            if (net.arcs[size_t(arc)].flow > 0) out.pole_of[size_t(i)] = F.poles[size_t(p)];
    }
    if (use_gadget) {
        std::vector<int> chosen;
        for (auto [arc, p] : entry_pole_arcs[size_t(w_copies[0])])
            if (net.arcs[size_t(arc)].flow > 0) chosen.push_back(p);
        std::sort(chosen.begin(), chosen.end());
        if (chosen.size() != 2) throw PropertyViolation("W gadget did not route two units");
        out.pole_of[size_t(w_copies[0])] = F.poles[size_t(chosen[0])];
        out.pole_of[size_t(w_copies[1])] = F.poles[size_t(chosen[1])];
    }
    for (int i = 0; i < n_entries; ++i) {
        if (out.pole_of[size_t(i)] == kNone) throw PropertyViolation("entry left unassigned");
        int p = pole_index.at(out.pole_of[size_t(i)]);
        out.max_load = std::max(out.max_load, ++out.load[size_t(p)]);
    }
    if (out.max_load > 5) throw PropertyViolation("pole load exceeds five");
    return out;
}

bool hall_check_bruteforce(const std::vector<ForbiddenConfig>& configs, const NonRedundantSet& F) {
    size_t n = F.entries.size();
    if (n > 20) throw ValidationError("hall_check_bruteforce requires |F| <= 20");
    if (n == 0) return true;
    std::map<NodeId, int> pole_index;
    for (size_t i = 0; i < F.poles.size(); ++i) pole_index[F.poles[i]] = int(i);
    std::vector<std::uint64_t> masks(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (NodeId p : configs[size_t(F.entries[i].config)].poles)
            masks[i] |= 1ULL << pole_index.at(p);
    for (std::uint64_t sub = 1; sub < (1ULL << n); ++sub) {
        std::uint64_t nb = 0;
        int size = 0;
        for (size_t i = 0; i < n; ++i)
            if (sub & (1ULL << i)) {
                nb |= masks[i];
                ++size;
            }
        if (size > 5 * __builtin_popcountll(nb)) return false;
    }
    return true;
}

std::string assignment_report_json(const OnePlaneGraph& g, const NonRedundantSet& F,
                                   const PoleAssignment& a) {
    nlohmann::json j;
    j["assignment"] = nlohmann::json::array();
    for (size_t i = 0; i < F.entries.size(); ++i)
        j["assignment"].push_back(
            {{"config", F.entries[i].key}, {"pole", g.node_name(a.pole_of[i])}});
    j["load"] = nlohmann::json::object();
    for (size_t p = 0; p < F.poles.size(); ++p)
        j["load"][g.node_name(F.poles[p])] = a.load[p];
    j["max_load"] = a.max_load;
    return j.dump(2) + "\n";
}

}  // namespace opvr
