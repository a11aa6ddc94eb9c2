#include "opvr/configs.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace opvr {

namespace {

std::string make_key(const OnePlaneGraph& g, ForbiddenConfig::Kind kind,
                     const std::vector<NodeId>& poles, const std::vector<NodeId>& crossings) {
    std::ostringstream os;
    os << ForbiddenConfig::kind_name(kind) << "(";
    for (size_t i = 0; i < poles.size(); ++i) os << (i ? "," : "") << g.node_name(poles[i]);
    os << ")@{";
    for (size_t i = 0; i < crossings.size(); ++i) os << (i ? "," : "") << g.node_name(crossings[i]);
    os << "}";
    return os.str();
}

// one pole-pair candidate at a crossing: alpha is an endpoint of e_alpha,
// beta of e_beta, the two edges crossing at dummy k
struct PairCand {
    NodeId k;
    NodeId alpha, beta;
    EdgeId e_alpha, e_beta;
};

// fragment dart from real endpoint v toward the crossing of edge e
DartId frag_dart(const OnePlaneGraph& g, EdgeId e, NodeId v) {
    return g.dart_from(g.fragment_at(e, v), v);
}

// boundary darts of the full edge e walked starting at `from`
// (two pedges through the dummy when e is crossed)
void append_edge_path(const OnePlaneGraph& g, EdgeId e, NodeId from, std::vector<DartId>& out) {
    const auto& oe = g.edge(e);
    NodeId to = oe.u == from ? oe.v : oe.u;
    if (oe.crossing == kNone) {
        out.push_back(g.dart_from(oe.pedges[0], from));
    } else {
        out.push_back(g.dart_from(g.fragment_at(e, from), from));
        out.push_back(g.dart_from(g.fragment_at(e, to), oe.crossing));
    }
}

NodeId other_end(const OnePlaneGraph& g, EdgeId e, NodeId v) {
    const auto& oe = g.edge(e);
    return oe.u == v ? oe.v : oe.u;
}

bool walk_is_simple(const OnePlaneGraph& g, const std::vector<DartId>& walk) {
    std::set<NodeId> nodes;
    for (size_t i = 0; i < walk.size(); ++i) {
        const Dart& d = g.dart(walk[i]);
        const Dart& dn = g.dart(walk[(i + 1) % walk.size()]);
        if (d.head != dn.origin) return false;
        if (!nodes.insert(d.origin).second) return false;
    }
    return true;
}

// region-splits the boundary and requires every witness strictly inside
bool finish(const OnePlaneGraph& g, ForbiddenConfig& f) {
    if (!walk_is_simple(g, f.boundary)) return false;
    RegionSplit rs;
    try {
        rs = region_split(g, f.boundary);
    } catch (const ValidationError&) {
        return false;
    }
    std::sort(f.witnesses.begin(), f.witnesses.end());
    f.witnesses.erase(std::unique(f.witnesses.begin(), f.witnesses.end()), f.witnesses.end());
    for (NodeId w : f.witnesses)
        if (!vertex_inside(g, w, rs.inside)) return false;
    f.interior = rs.inside;
    std::sort(f.poles.begin(), f.poles.end());
    std::sort(f.crossings.begin(), f.crossings.end());
    f.key = make_key(g, f.kind, f.poles, f.crossings);
    return true;
}

struct Candidates {
    std::map<std::pair<NodeId, NodeId>, std::vector<PairCand>> by_pair;

    explicit Candidates(const OnePlaneGraph& g) {
        for (const auto& [dummy, e1] : g.crossing_pairs()) {
            EdgeId e2 = g.edge(e1).crossing_partner;
            for (NodeId a : {g.edge(e1).u, g.edge(e1).v})
                for (NodeId b : {g.edge(e2).u, g.edge(e2).v}) {
                    if (a == b) continue;
                    PairCand c{dummy, a, b, e1, e2};
                    auto key = std::minmax(a, b);
                    by_pair[{key.first, key.second}].push_back(c);
                }
        }
    }
};

std::vector<ForbiddenConfig> detect_impl(const OnePlaneGraph& g, bool parallel) {
    Candidates cands(g);

    struct BUnit {
        PairCand c;
        EdgeId conn;
    };
    std::vector<BUnit> b_units;
    for (const auto& [pair, list] : cands.by_pair)
        for (const auto& c : list) {
            EdgeId conn = g.edge_between(c.alpha, c.beta);
            if (conn == kNone || conn == c.e_alpha || conn == c.e_beta) continue;
            if (g.edge(conn).crossing == c.k) continue;
            b_units.push_back({c, conn});
        }

    struct WUnit {
        PairCand c1, c2;
    };
    std::vector<WUnit> w_units;
    for (const auto& [pair, list] : cands.by_pair)
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                if (list[i].k == list[j].k) continue;
                w_units.push_back({list[i], list[j]});
            }

    struct TUnit {
        PairCand uz, ux, xz;
    };
    std::vector<TUnit> t_units;
    {
        std::set<NodeId> pole_nodes;
        for (const auto& [pair, list] : cands.by_pair) {
            pole_nodes.insert(pair.first);
            pole_nodes.insert(pair.second);
        }
        std::vector<NodeId> poles(pole_nodes.begin(), pole_nodes.end());
        auto fi = [&](NodeId a, NodeId b) -> const std::vector<PairCand>* {
            auto key = std::minmax(a, b);
            auto it = cands.by_pair.find({key.first, key.second});
            return it == cands.by_pair.end() ? nullptr : &it->second;
        };
        for (size_t iu = 0; iu < poles.size(); ++iu)
            for (size_t ix = iu + 1; ix < poles.size(); ++ix) {
                NodeId u = poles[iu], x = poles[ix];
                if (!fi(u, x)) continue;
                for (size_t iz = ix + 1; iz < poles.size(); ++iz) {
                    NodeId z = poles[iz];
                    auto *uz = fi(u, z), *ux = fi(u, x), *xz = fi(x, z);
                    if (!uz || !xz) continue;
                    for (const auto& p : *uz)
                        for (const auto& q : *ux)
                            for (const auto& r : *xz) {
                                if (p.k == q.k || p.k == r.k || q.k == r.k) continue;
                                PairCand cp = p, cq = q, cr = r;
                                if (cp.alpha != u) {
                                    std::swap(cp.alpha, cp.beta);
                                    std::swap(cp.e_alpha, cp.e_beta);
                                }
                                if (cq.alpha != u) {
                                    std::swap(cq.alpha, cq.beta);
                                    std::swap(cq.e_alpha, cq.e_beta);
                                }
                                if (cr.alpha != x) {
                                    std::swap(cr.alpha, cr.beta);
                                    std::swap(cr.e_alpha, cr.e_beta);
                                }
                                std::set<EdgeId> es{cp.e_alpha, cp.e_beta, cq.e_alpha,
                                                    cq.e_beta, cr.e_alpha, cr.e_beta};
                                if (es.size() != 6) continue;
                                t_units.push_back({cp, cq, cr});
                            }
                }
            }
    }

    auto run_b = [&](const BUnit& u, std::vector<ForbiddenConfig>& out) {
        ForbiddenConfig f;
        f.kind = ForbiddenConfig::Kind::B;
        f.poles = {u.c.alpha, u.c.beta};
        f.crossings = {u.c.k};
        f.boundary.push_back(frag_dart(g, u.c.e_alpha, u.c.alpha));
        f.boundary.push_back(g.dart_from(g.fragment_at(u.c.e_beta, u.c.beta), u.c.k));
        append_edge_path(g, u.conn, u.c.beta, f.boundary);
        f.witnesses = {other_end(g, u.c.e_alpha, u.c.alpha), other_end(g, u.c.e_beta, u.c.beta)};
        if (finish(g, f)) out.push_back(std::move(f));
    };
    auto run_w = [&](const WUnit& u, std::vector<ForbiddenConfig>& out) {
        PairCand c1 = u.c1, c2 = u.c2;
        if (c2.alpha != c1.alpha) {
            std::swap(c2.alpha, c2.beta);
            std::swap(c2.e_alpha, c2.e_beta);
        }
        std::set<EdgeId> es{c1.e_alpha, c1.e_beta, c2.e_alpha, c2.e_beta};
        if (es.size() != 4) return;
        ForbiddenConfig f;
        f.kind = ForbiddenConfig::Kind::W;
        f.poles = {c1.alpha, c1.beta};
        f.crossings = {c1.k, c2.k};
        f.boundary.push_back(frag_dart(g, c1.e_alpha, c1.alpha));
        f.boundary.push_back(g.dart_from(g.fragment_at(c1.e_beta, c1.beta), c1.k));
        f.boundary.push_back(frag_dart(g, c2.e_beta, c1.beta));
        f.boundary.push_back(g.dart_from(g.fragment_at(c2.e_alpha, c1.alpha), c2.k));
        for (const auto& c : {c1, c2}) {
            f.witnesses.push_back(other_end(g, c.e_alpha, c.alpha));
            f.witnesses.push_back(other_end(g, c.e_beta, c.beta));
        }
        if (finish(g, f)) out.push_back(std::move(f));
    };
    auto run_t = [&](const TUnit& u, std::vector<ForbiddenConfig>& out) {
        NodeId un = u.uz.alpha, zn = u.uz.beta, xn = u.ux.beta;
        ForbiddenConfig f;
        f.kind = ForbiddenConfig::Kind::T;
        f.poles = {un, xn, zn};
        f.crossings = {u.uz.k, u.ux.k, u.xz.k};
        // boundary: u -> p -> z -> r -> x -> q -> u
        f.boundary.push_back(frag_dart(g, u.uz.e_alpha, un));
        f.boundary.push_back(g.dart_from(g.fragment_at(u.uz.e_beta, zn), u.uz.k));
        f.boundary.push_back(frag_dart(g, u.xz.e_beta, zn));
        f.boundary.push_back(g.dart_from(g.fragment_at(u.xz.e_alpha, xn), u.xz.k));
        f.boundary.push_back(frag_dart(g, u.ux.e_beta, xn));
        f.boundary.push_back(g.dart_from(g.fragment_at(u.ux.e_alpha, un), u.ux.k));
        for (const auto& c : {u.uz, u.ux, u.xz}) {
            f.witnesses.push_back(other_end(g, c.e_alpha, c.alpha));
            f.witnesses.push_back(other_end(g, c.e_beta, c.beta));
        }
        if (finish(g, f)) out.push_back(std::move(f));
    };

    std::vector<ForbiddenConfig> found;
    bool did_parallel = false;
#ifdef _OPENMP
    if (parallel) {
        std::vector<std::vector<ForbiddenConfig>> parts;
#pragma omp parallel
        {
#pragma omp single
            parts.resize(size_t(omp_get_num_threads()));
#pragma omp barrier
            auto& mine = parts[size_t(omp_get_thread_num())];
#pragma omp for schedule(dynamic) nowait
            for (long i = 0; i < long(b_units.size()); ++i) run_b(b_units[size_t(i)], mine);
#pragma omp for schedule(dynamic) nowait
            for (long i = 0; i < long(w_units.size()); ++i) run_w(w_units[size_t(i)], mine);
#pragma omp for schedule(dynamic)
            for (long i = 0; i < long(t_units.size()); ++i) run_t(t_units[size_t(i)], mine);
        }
        for (auto& p : parts)
            for (auto& f : p) found.push_back(std::move(f));
        did_parallel = true;
    }
#endif
    if (!did_parallel) {
        for (const auto& u : b_units) run_b(u, found);
        for (const auto& u : w_units) run_w(u, found);
        for (const auto& u : t_units) run_t(u, found);
    }

    std::sort(found.begin(), found.end(), [](const ForbiddenConfig& a, const ForbiddenConfig& b) {
        if (a.kind != b.kind) return int(a.kind) < int(b.kind);
        if (a.poles != b.poles) return a.poles < b.poles;
        return a.crossings < b.crossings;
    });
    found.erase(std::unique(found.begin(), found.end(),
                            [](const ForbiddenConfig& a, const ForbiddenConfig& b) {
                                return a.kind == b.kind && a.poles == b.poles &&
                                       a.crossings == b.crossings;
                            }),
                found.end());

    // A candidate whose interior strictly contains the interior of another
    // configuration with a common pole is a wrap-around of that
    // configuration; it is redundant and reported through the inner one.
    // The W-configuration is exempt as the contained one: its dependent
    // B-configurations legitimately enclose it (same poles).
    auto contains = [](const std::vector<FaceId>& big, const std::vector<FaceId>& small) {
        return small.size() < big.size() &&
               std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    auto share_pole = [](const ForbiddenConfig& a, const ForbiddenConfig& b) {
        for (NodeId p : a.poles)
            if (std::binary_search(b.poles.begin(), b.poles.end(), p)) return true;
        return false;
    };
    std::vector<char> drop(found.size(), 0);
    for (size_t i = 0; i < found.size(); ++i)
        for (size_t j = 0; j < found.size(); ++j) {
            if (i == j) continue;
            const auto &f = found[i], &g = found[j];
            if (!contains(f.interior, g.interior)) continue;
            if (!share_pole(f, g)) continue;
            if (g.kind == ForbiddenConfig::Kind::W && g.poles == f.poles) continue;
            drop[i] = 1;
            break;
        }
    std::vector<ForbiddenConfig> kept;
    for (size_t i = 0; i < found.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(found[i]));
    return kept;
}

}  // namespace

std::vector<ForbiddenConfig> detect_all(const OnePlaneGraph& g) { return detect_impl(g, true); }
std::vector<ForbiddenConfig> detect_all_serial(const OnePlaneGraph& g) { return detect_impl(g, false); }

bool dependent(const ForbiddenConfig& f1, const ForbiddenConfig& f2) {
    for (NodeId c : f1.crossings)
        if (std::binary_search(f2.crossings.begin(), f2.crossings.end(), c)) return true;
    return false;
}

std::vector<NodeId> pole_set(const std::vector<ForbiddenConfig>& configs) {
    std::set<NodeId> s;
    for (const auto& f : configs) s.insert(f.poles.begin(), f.poles.end());
    return {s.begin(), s.end()};
}

bool is_separating_t(const OnePlaneGraph& g, const ForbiddenConfig& t,
                     const std::vector<NodeId>& all_poles) {
    for (NodeId p : all_poles) {
        if (std::binary_search(t.poles.begin(), t.poles.end(), p)) continue;
        if (vertex_inside(g, p, t.interior)) return true;
    }
    return false;
}

bool has_separating_t(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs) {
    auto poles = pole_set(configs);
    for (const auto& f : configs)
        if (f.kind == ForbiddenConfig::Kind::T && is_separating_t(g, f, poles)) return true;
    return false;
}

PropertyReport check_properties(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs) {
    PropertyReport rep;
    rep.p1.name = "P1 no three independent configurations share a pole pair";
    rep.p2.name = "P2 all vertices except the poles lie inside the W-configuration";
    rep.p3.name = "P3 no configuration independent of the W shares its poles";
    rep.p4.name = "P4 no two B-configurations share both poles unless they form the W";
    rep.p5.name = "P5 dependent T-configurations share exactly one crossing";
    rep.claim1.name = "Claim 1 separating curves have all vertices on one side";

    std::map<std::pair<NodeId, NodeId>, std::vector<size_t>> by_pair;
    for (size_t i = 0; i < configs.size(); ++i) {
        const auto& ps = configs[i].poles;
        for (size_t a = 0; a < ps.size(); ++a)
            for (size_t b = a + 1; b < ps.size(); ++b) by_pair[{ps[a], ps[b]}].push_back(i);
    }
    for (const auto& [pair, list] : by_pair) {
        for (size_t a = 0; a < list.size(); ++a)
            for (size_t b = a + 1; b < list.size(); ++b)
                for (size_t c = b + 1; c < list.size(); ++c) {
                    const auto &fa = configs[list[a]], &fb = configs[list[b]], &fc = configs[list[c]];
                    if (!dependent(fa, fb) && !dependent(fa, fc) && !dependent(fb, fc)) {
                        rep.p1.holds = false;
                        rep.p1.violations.push_back(fa.key + " | " + fb.key + " | " + fc.key);
                    }
                }
    }

    for (const auto& f : configs) {
        if (f.kind != ForbiddenConfig::Kind::W) continue;
        for (NodeId v = 0; v < g.real_vertex_count(); ++v) {
            if (std::binary_search(f.poles.begin(), f.poles.end(), v)) continue;
            if (!vertex_inside(g, v, f.interior)) {
                rep.p2.holds = false;
                rep.p2.violations.push_back(f.key + " excludes vertex " + g.node_name(v));
            }
        }
        for (const auto& o : configs) {
            if (&o == &f || dependent(o, f)) continue;
            if (std::includes(o.poles.begin(), o.poles.end(), f.poles.begin(), f.poles.end())) {
                rep.p3.holds = false;
                rep.p3.violations.push_back(f.key + " | " + o.key);
            }
        }
    }

    for (size_t i = 0; i < configs.size(); ++i)
        for (size_t j = i + 1; j < configs.size(); ++j) {
            const auto &a = configs[i], &b = configs[j];
            if (a.kind != ForbiddenConfig::Kind::B || b.kind != ForbiddenConfig::Kind::B) continue;
            if (a.poles != b.poles) continue;
            std::vector<NodeId> un;
            std::set_union(a.crossings.begin(), a.crossings.end(), b.crossings.begin(),
                           b.crossings.end(), std::back_inserter(un));
            bool forms_w = false;
            for (const auto& w : configs)
                if (w.kind == ForbiddenConfig::Kind::W && w.poles == a.poles && w.crossings == un)
                    forms_w = true;
            if (!forms_w) {
                rep.p4.holds = false;
                rep.p4.violations.push_back(a.key + " | " + b.key);
            }
        }

    for (size_t i = 0; i < configs.size(); ++i)
        for (size_t j = i + 1; j < configs.size(); ++j) {
            const auto &a = configs[i], &b = configs[j];
            if (a.kind != ForbiddenConfig::Kind::T || b.kind != ForbiddenConfig::Kind::T) continue;
            std::vector<NodeId> shared;
            std::set_intersection(a.crossings.begin(), a.crossings.end(), b.crossings.begin(),
                                  b.crossings.end(), std::back_inserter(shared));
            if (shared.size() >= 2) {
                rep.p5.holds = false;
                rep.p5.violations.push_back(a.key + " | " + b.key);
            }
        }

    // Claim 1: separating curves = two switching crossings over a common
    // pole pair, four distinct edges.
    Candidates cands(g);
    for (const auto& [pair, list] : cands.by_pair)
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                PairCand c1 = list[i], c2 = list[j];
                if (c1.k == c2.k) continue;
                if (c2.alpha != c1.alpha) {
                    std::swap(c2.alpha, c2.beta);
                    std::swap(c2.e_alpha, c2.e_beta);
                }
                std::set<EdgeId> es{c1.e_alpha, c1.e_beta, c2.e_alpha, c2.e_beta};
                if (es.size() != 4) continue;
                std::vector<DartId> curve;
                curve.push_back(frag_dart(g, c1.e_alpha, c1.alpha));
                curve.push_back(g.dart_from(g.fragment_at(c1.e_beta, c1.beta), c1.k));
                curve.push_back(frag_dart(g, c2.e_beta, c1.beta));
                curve.push_back(g.dart_from(g.fragment_at(c2.e_alpha, c1.alpha), c2.k));
                if (!walk_is_simple(g, curve)) continue;
                RegionSplit rs;
                try {
                    rs = region_split(g, curve);
                } catch (const ValidationError&) {
                    continue;
                }
                bool some_in = false, some_out = false;
                for (NodeId v = 0; v < g.real_vertex_count(); ++v) {
                    if (v == c1.alpha || v == c1.beta) continue;
                    if (vertex_inside(g, v, rs.inside))
                        some_in = true;
                    else
                        some_out = true;
                }
                if (some_in && some_out) {
                    rep.claim1.holds = false;
                    rep.claim1.violations.push_back(
                        "curve C(" + g.node_name(c1.alpha) + "," + g.node_name(c1.k) + "," +
                        g.node_name(c1.beta) + "," + g.node_name(c2.k) + ")");
                }
            }

    return rep;
}

std::string config_report_json(const OnePlaneGraph& g, const std::vector<ForbiddenConfig>& configs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : configs) {
        nlohmann::json j;
        auto names = [&](const std::vector<NodeId>& ns) {
            std::vector<std::string> out;
            for (NodeId n : ns) out.push_back(g.node_name(n));
            return out;
        };
        j["kind"] = ForbiddenConfig::kind_name(f.kind);
        j["poles"] = names(f.poles);
        j["crossings"] = names(f.crossings);
        j["interior_face_count"] = f.interior.size();
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

}  // namespace opvr
