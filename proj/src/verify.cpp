#include "opvr/verify.hpp"

#include <algorithm>
#include <climits>
#include <json.hpp>
#include <map>
#include <set>

namespace opvr {

namespace {

using Pt = OpvrDrawing::Pt;

long long cross(Pt o, Pt a, Pt b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Pt a, Pt b, Pt p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

// any common point of two closed segments (axis-parallel throughout)
bool segments_touch(Pt a, Pt b, Pt c, Pt d) {
    auto sgn = [](long long v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
    int d1 = sgn(cross(c, d, a)), d2 = sgn(cross(c, d, b));
    int d3 = sgn(cross(a, b, c)), d4 = sgn(cross(a, b, d));
    if (d1 != d2 && d3 != d4) return true;
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
           on_segment(c, d, b);
}

// proper interior crossing point of two perpendicular segments, if any
bool proper_cross(Pt a, Pt b, Pt c, Pt d, Pt* where) {
    auto is_h = [](Pt p, Pt q) { return p.y == q.y; };
    if (is_h(a, b) == is_h(c, d)) return false;
    if (!is_h(a, b)) {
        std::swap(a, c);
        std::swap(b, d);
    }
    // a-b horizontal, c-d vertical
    long long y = a.y, x = c.x;
    if (std::min(a.x, b.x) < x && x < std::max(a.x, b.x) && std::min(c.y, d.y) < y &&
        y < std::max(c.y, d.y)) {
        if (where) *where = {x, y};
        return true;
    }
    return false;
}

struct Poly {
    std::string vertex;
    std::vector<Pt> pts;  // ccw
    std::vector<std::pair<Pt, Pt>> sides() const {
        std::vector<std::pair<Pt, Pt>> out;
        for (size_t i = 0; i < pts.size(); ++i)
            out.push_back({pts[i], pts[(i + 1) % pts.size()]});
        return out;
    }
    bool on_boundary(Pt p) const {
        for (auto [a, b] : sides())
            if (on_segment(a, b, p)) return true;
        return false;
    }
    // strict interior, exact: even-odd on the doubled grid
    bool inside(Pt p) const {
        if (on_boundary(p)) return false;
        long long px = 2 * p.x + 0, py = 2 * p.y + 1;  // odd y avoids side collinearity
        int hits = 0;
        for (auto [a, b] : sides()) {
            if (a.y == b.y) continue;  // horizontal sides never intersect odd y
            long long ylo = 2 * std::min(a.y, b.y), yhi = 2 * std::max(a.y, b.y);
            if (ylo < py && py < yhi && 2 * a.x > px) ++hits;
        }
        return hits % 2 == 1;
    }
};

}  // namespace

VerificationReport verify(const OnePlaneGraph& g, const OpvrDrawing& d) {
    VerificationReport rep;

    std::map<std::string, Poly> polys;
    for (const auto& p : d.polygons) {
        if (g.node_id(p.vertex) == kNone || g.is_dummy(g.node_id(p.vertex)))
            rep.fail("polygon for unknown vertex " + p.vertex);
        Poly poly{p.vertex, p.corners};
        polys[p.vertex] = poly;
    }
    for (NodeId v = 0; v < g.real_vertex_count(); ++v)
        if (!polys.count(g.node_name(v))) rep.fail("missing polygon for " + g.node_name(v));

    // polygon shape: even corner count, alternating axis-parallel sides,
    // simple boundary, ccw orientation
    for (auto& [name, poly] : polys) {
        const auto& pts = poly.pts;
        int k = int(pts.size());
        if (k < 4 || k % 2 != 0) {
            rep.fail("polygon " + name + " has " + std::to_string(k) + " corners");
            continue;
        }
        long long area2 = 0;
        for (int i = 0; i < k; ++i) {
            Pt a = pts[size_t(i)], b = pts[size_t((i + 1) % k)], c = pts[size_t((i + 2) % k)];
            bool h1 = a.y == b.y, v1 = a.x == b.x;
            bool h2 = b.y == c.y, v2 = b.x == c.x;
            if (!(h1 ^ v1) || !(h2 ^ v2)) rep.fail("polygon " + name + " has a non axis side");
            if (h1 == h2) rep.fail("polygon " + name + " has collinear corners");
            area2 += a.x * b.y - b.x * a.y;
        }
        if (area2 <= 0) rep.fail("polygon " + name + " is not counterclockwise");
        auto ss = poly.sides();
        for (size_t i = 0; i < ss.size(); ++i)
            for (size_t j = i + 1; j < ss.size(); ++j) {
                bool adjacent = (j == i + 1) || (i == 0 && j == ss.size() - 1);
                if (adjacent) continue;
                if (segments_touch(ss[i].first, ss[i].second, ss[j].first, ss[j].second))
                    rep.fail("polygon " + name + " is not simple");
            }
        int reflex = 0;
        for (int i = 0; i < k; ++i)
            if (cross(pts[size_t(i)], pts[size_t((i + 1) % k)], pts[size_t((i + 2) % k)]) < 0)
                ++reflex;
        rep.reflex.push_back({name, reflex});
        rep.max_reflex = std::max(rep.max_reflex, reflex);
    }

    // pairwise disjoint
    for (auto it = polys.begin(); it != polys.end(); ++it)
        for (auto jt = std::next(it); jt != polys.end(); ++jt) {
            bool bad = false;
            for (auto [a, b] : it->second.sides()) {
                for (auto [c, c2] : jt->second.sides())
                    if (segments_touch(a, b, c, c2)) bad = true;
                if (bad) break;
            }
            if (!bad &&
                (it->second.inside(jt->second.pts[0]) || jt->second.inside(it->second.pts[0])))
                bad = true;
            if (bad) rep.fail("polygons " + it->first + " and " + jt->first + " intersect");
        }

    // visibilities
    std::map<std::string, const OpvrDrawing::Vis*> vis_by_edge;
    for (const auto& v : d.visibilities) {
        if (g.edge_id(v.edge) == kNone) rep.fail("visibility for unknown edge " + v.edge);
        if (vis_by_edge.count(v.edge)) rep.fail("duplicate visibility for " + v.edge);
        vis_by_edge[v.edge] = &v;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!vis_by_edge.count(g.edge(e).name)) rep.fail("missing visibility for " + g.edge(e).name);
    if (!rep.pass) return rep;

    // attachment map: per vertex, (edge, point)
    std::map<std::string, std::vector<std::pair<std::string, Pt>>> attach;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& oe = g.edge(e);
        const auto& vis = *vis_by_edge.at(oe.name);
        if (vis.from.x != vis.to.x && vis.from.y != vis.to.y) {
            rep.fail("visibility " + oe.name + " is not axis-parallel");
            continue;
        }
        if (vis.from == vis.to) rep.fail("visibility " + oe.name + " is degenerate");
        const Poly &pu = polys.at(g.node_name(oe.u)), &pv = polys.at(g.node_name(oe.v));
        // match endpoints to end polygons
        Pt at_u = vis.from, at_v = vis.to;
        if (!pu.on_boundary(at_u) || !pv.on_boundary(at_v)) {
            std::swap(at_u, at_v);
            if (!pu.on_boundary(at_u) || !pv.on_boundary(at_v)) {
                rep.fail("visibility " + oe.name + " does not join its end polygons");
                continue;
            }
        }
        for (auto [poly, pt] : {std::pair<const Poly*, Pt>{&pu, at_u}, {&pv, at_v}})
            for (const auto& c : poly->pts)
                if (c == pt) rep.fail("visibility " + oe.name + " attaches at a corner");
        attach[g.node_name(oe.u)].push_back({oe.name, at_u});
        attach[g.node_name(oe.v)].push_back({oe.name, at_v});
    }

    // obstacle checks: a visibility may meet only its two end polygons (at
    // the attachment points) and its crossing partner
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& oe = g.edge(e);
        const auto& vis = *vis_by_edge.at(oe.name);
        for (auto& [name, poly] : polys) {
            bool is_end = (name == g.node_name(oe.u)) || (name == g.node_name(oe.v));
            for (auto [a, b] : poly.sides()) {
                if (!segments_touch(a, b, vis.from, vis.to)) continue;
                if (is_end) {
                    // contact must be exactly the attachment point
                    Pt pt{};
                    bool proper = proper_cross(a, b, vis.from, vis.to, &pt);
                    if (proper) rep.fail("visibility " + oe.name + " pierces polygon " + name);
                } else {
                    rep.fail("visibility " + oe.name + " touches polygon " + name);
                }
            }
            if (poly.inside(vis.from) || poly.inside(vis.to))
                rep.fail("visibility " + oe.name + " ends inside polygon " + name);
        }
        for (EdgeId e2 = EdgeId(e + 1); e2 < g.edge_count(); ++e2) {
            const auto& oe2 = g.edge(e2);
            const auto& vis2 = *vis_by_edge.at(oe2.name);
            bool partners = oe.crossing != kNone && oe.crossing_partner == e2;
            bool touch = segments_touch(vis.from, vis.to, vis2.from, vis2.to);
            Pt where{};
            bool proper = proper_cross(vis.from, vis.to, vis2.from, vis2.to, &where);
            if (partners) {
                if (!proper)
                    rep.fail("crossing pair " + oe.name + " x " + oe2.name +
                             " does not cross perpendicularly");
            } else if (touch) {
                rep.fail("visibilities " + oe.name + " and " + oe2.name + " intersect");
            }
        }
    }

    // rotation preservation: attachments in ccw boundary order must equal
    // the vertex rotation cyclically
    for (NodeId v = 0; v < g.real_vertex_count(); ++v) {
        const auto& name = g.node_name(v);
        auto& list = attach[name];
        const Poly& poly = polys.at(name);
        // order attachments along the ccw boundary
        std::vector<std::pair<long long, std::string>> ordered;
        auto ss = poly.sides();
        long long walked = 0;
        for (auto [a, b] : ss) {
            for (auto& [edge, pt] : list)
                if (on_segment(a, b, pt) && !(pt == b))
                    ordered.push_back({walked + std::abs(pt.x - a.x) + std::abs(pt.y - a.y), edge});
            walked += std::abs(b.x - a.x) + std::abs(b.y - a.y);
        }
        std::sort(ordered.begin(), ordered.end());
        std::vector<std::string> got;
        for (auto& [pos, edge] : ordered) got.push_back(edge);
        std::vector<std::string> want;
        for (DartId dt : g.darts_at(v)) want.push_back(g.edge(g.pedge(g.dart(dt).pedge).original).name);
        if (got.size() != want.size()) {
            rep.fail("vertex " + name + " attachment count mismatch");
            continue;
        }
        bool match = false;
        for (size_t off = 0; off < want.size() && !match; ++off) {
            bool ok = true;
            for (size_t i = 0; i < want.size(); ++i)
                if (want[(i + off) % want.size()] != got[i]) ok = false;
            match = ok;
        }
        if (!match) rep.fail("vertex " + name + " attachment order differs from its rotation");
    }

    // crossing rotation: branch directions around each crossing point must
    // match the dummy rotation cyclically
    for (const auto& [dummy, e1] : g.crossing_pairs()) {
        EdgeId e2 = g.edge(e1).crossing_partner;
        const auto& v1 = *vis_by_edge.at(g.edge(e1).name);
        const auto& v2 = *vis_by_edge.at(g.edge(e2).name);
        Pt x{};
        if (!proper_cross(v1.from, v1.to, v2.from, v2.to, &x)) continue;  // already reported
        auto dir_code = [&](Pt from, Pt to) {
            if (to.x > from.x) return 0;
            if (to.y > from.y) return 1;
            if (to.x < from.x) return 2;
            return 3;
        };
        // map "toward endpoint" to a branch direction
        std::map<std::string, int> branch;
        auto endpoint_of = [&](const OpvrDrawing::Vis& vis, NodeId end) {
            const Poly& p = polys.at(g.node_name(end));
            return p.on_boundary(vis.from) ? vis.from : vis.to;
        };
        branch[g.node_name(g.edge(e1).u)] = dir_code(x, endpoint_of(v1, g.edge(e1).u));
        branch[g.node_name(g.edge(e1).v)] = dir_code(x, endpoint_of(v1, g.edge(e1).v));
        branch[g.node_name(g.edge(e2).u)] = dir_code(x, endpoint_of(v2, g.edge(e2).u));
        branch[g.node_name(g.edge(e2).v)] = dir_code(x, endpoint_of(v2, g.edge(e2).v));
        std::vector<int> want;
        for (DartId dt : g.darts_at(dummy)) want.push_back(branch.at(g.node_name(g.dart(dt).head)));
        // ccw rotation: the four branch directions must increase by one
        bool match = false;
        for (int start = 0; start < 4 && !match; ++start) {
            bool ok = true;
            for (int i = 0; i < 4; ++i)
                if (want[size_t((start + i) % 4)] != (want[size_t(start)] + i) % 4) ok = false;
            match = ok;
        }
        if (!match)
            rep.fail("crossing " + g.node_name(dummy) + " branch order differs from its rotation");
    }

    // the designated outer face must be the unbounded region: above the
    // topmost polygon side lies the outer face of g
    {
        std::string top_vertex;
        long long top_y = LLONG_MIN;
        for (auto& [name, poly] : polys)
            for (const auto& pt : poly.pts)
                if (pt.y > top_y) {
                    top_y = pt.y;
                    top_vertex = name;
                }
        NodeId v = g.node_id(top_vertex);
        // the wedge of v's rotation facing up: between the attachment
        // before and after the top side; with attachments matching the
        // rotation, the face above is left of the dart arriving before the
        // gap. Identify by walking the boundary from the top side.
        const Poly& poly = polys.at(top_vertex);
        auto& list = attach[top_vertex];
        // boundary position of the top-left corner of the topmost side
        auto ss = poly.sides();
        std::vector<std::pair<long long, std::string>> ordered;
        long long walked = 0, top_pos = -1;
        for (auto [a, b] : ss) {
            for (auto& [edge, pt] : list)
                if (on_segment(a, b, pt) && !(pt == b))
                    ordered.push_back({walked + std::abs(pt.x - a.x) + std::abs(pt.y - a.y), edge});
            if (a.y == top_y && b.y == top_y && top_pos < 0) top_pos = walked;
            walked += std::abs(b.x - a.x) + std::abs(b.y - a.y);
        }
        std::sort(ordered.begin(), ordered.end());
        if (!ordered.empty() && top_pos >= 0) {
            // last attachment before the top side (cyclically)
            std::string prev_edge = ordered.back().second;
            for (auto& [pos, edge] : ordered)
                if (pos < top_pos) prev_edge = edge;
            EdgeId pe = g.edge_id(prev_edge);
            DartId dt = g.dart_from(g.fragment_at(pe, v), v);
            if (g.face_of(dt) != g.outer_face())
                rep.fail("unbounded region does not match the designated outer face");
        }
    }

    for (auto& [name, count] : rep.reflex)
        if (count > d.complexity)
            rep.fail("polygon " + name + " exceeds the claimed complexity");
    long long w = 0, h = 0;
    for (auto& [name, poly] : polys)
        for (auto& pt : poly.pts) {
            w = std::max(w, pt.x);
            h = std::max(h, pt.y);
            if (pt.x < 0 || pt.y < 0) rep.fail("negative coordinate in polygon " + name);
        }
    for (const auto& vis : d.visibilities) {
        w = std::max({w, vis.from.x, vis.to.x});
        h = std::max({h, vis.from.y, vis.to.y});
    }
    rep.width = w;
    rep.height = h;
    if (w != d.width || h != d.height) rep.fail("grid dimensions do not match the drawing extent");

    return rep;
}

namespace {

struct WalkPoint {
    Pt p;
    int kind;  // 0 polygon corner, 1 attachment, 2 switching crossing
    std::string pole;  // for polygon corners
};

}  // namespace

BoundaryAudit boundary_audit(const OnePlaneGraph& g, const OpvrDrawing& d,
                             const ForbiddenConfig& f) {
    std::map<std::string, Poly> polys;
    for (const auto& p : d.polygons) polys[p.vertex] = Poly{p.vertex, p.corners};
    std::map<std::string, const OpvrDrawing::Vis*> vis_by_edge;
    for (const auto& v : d.visibilities) vis_by_edge[v.edge] = &v;

    auto crossing_point = [&](NodeId dummy) {
        EdgeId e1 = kNone, e2 = kNone;
        for (const auto& [dm, first] : g.crossing_pairs())
            if (dm == dummy) {
                e1 = first;
                e2 = g.edge(first).crossing_partner;
            }
        const auto& v1 = *vis_by_edge.at(g.edge(e1).name);
        const auto& v2 = *vis_by_edge.at(g.edge(e2).name);
        Pt x{};
        if (!proper_cross(v1.from, v1.to, v2.from, v2.to, &x))
            throw PropertyViolation("crossing point missing in drawing");
        return x;
    };
    auto attachment_of = [&](EdgeId e, NodeId v) {
        const auto& vis = *vis_by_edge.at(g.edge(e).name);
        const Poly& p = polys.at(g.node_name(v));
        if (p.on_boundary(vis.from)) return vis.from;
        if (p.on_boundary(vis.to)) return vis.to;
        throw PropertyViolation("attachment missing for " + g.edge(e).name);
    };

    // boundary stations: merge consecutive boundary darts of one original
    // edge; stations are poles and switching crossings
    struct Piece {
        EdgeId edge;
        NodeId from, to;  // pole or crossing of f
    };
    std::vector<Piece> pieces;
    {
        const auto& walk = f.boundary;
        std::vector<std::pair<EdgeId, NodeId>> starts;
        for (size_t i = 0; i < walk.size(); ++i) {
            const Dart& dt = g.dart(walk[i]);
            EdgeId e = g.pedge(dt.pedge).original;
            if (pieces.empty() || pieces.back().edge != e)
                pieces.push_back({e, dt.origin, dt.head});
            else
                pieces.back().to = dt.head;
        }
        if (pieces.size() >= 2 && pieces.front().edge == pieces.back().edge) {
            pieces.front().from = pieces.back().from;
            pieces.pop_back();
        }
    }

    // geometric polyline with classified junctions
    std::vector<WalkPoint> pts;
    auto is_switch = [&](NodeId n) {
        return std::binary_search(f.crossings.begin(), f.crossings.end(), n);
    };
    for (size_t i = 0; i < pieces.size(); ++i) {
        const Piece& pc = pieces[i];
        Pt from = is_switch(pc.from) ? crossing_point(pc.from) : attachment_of(pc.edge, pc.from);
        Pt to = is_switch(pc.to) ? crossing_point(pc.to) : attachment_of(pc.edge, pc.to);
        if (is_switch(pc.from))
            pts.push_back({from, 2, ""});
        else
            pts.push_back({from, 1, ""});
        // piece is straight; junction at `to` added by the next piece or by
        // the polygon portion below
        if (!is_switch(pc.to)) {
            // walk along polygon(pc.to) to the next piece's start attachment
            const Piece& nx = pieces[(i + 1) % pieces.size()];
            NodeId v = pc.to;
            Pt a_in = attachment_of(pc.edge, v);
            Pt a_out = attachment_of(nx.edge, v);
            pts.push_back({a_in, 1, ""});
            // choose the boundary arc whose interior attachments are the
            // inside edges of f at v
            std::set<std::string> inside_edges, outside_edges;
            for (DartId dt : g.darts_at(v)) {
                EdgeId e = g.pedge(g.dart(dt).pedge).original;
                if (e == pc.edge || e == nx.edge) continue;
                bool in1 = std::binary_search(f.interior.begin(), f.interior.end(), g.face_of(dt));
                bool in2 = std::binary_search(f.interior.begin(), f.interior.end(),
                                              g.face_of(g.dart(dt).twin));
                if (in1 && in2)
                    inside_edges.insert(g.edge(e).name);
                else
                    outside_edges.insert(g.edge(e).name);
            }
            const Poly& poly = polys.at(g.node_name(v));
            auto ss = poly.sides();
            // positions along the ccw boundary
            auto pos_of = [&](Pt p) {
                long long walked = 0;
                for (auto [s1, s2] : ss) {
                    if (on_segment(s1, s2, p) && !(p == s2))
                        return walked + std::abs(p.x - s1.x) + std::abs(p.y - s1.y);
                    walked += std::abs(s2.x - s1.x) + std::abs(s2.y - s1.y);
                }
                throw PropertyViolation("attachment not on polygon boundary");
            };
            long long total = 0;
            for (auto [s1, s2] : ss) total += std::abs(s2.x - s1.x) + std::abs(s2.y - s1.y);
            long long p_in = pos_of(a_in), p_out = pos_of(a_out);
            auto in_arc_ccw = [&](long long x) {  // strictly between p_in .. p_out ccw
                long long rel = ((x - p_in) % total + total) % total;
                long long end = ((p_out - p_in) % total + total) % total;
                return rel > 0 && rel < end;
            };
            int ccw_in = 0, cw_in = 0, ccw_out = 0, cw_out = 0;
            for (DartId dt : g.darts_at(v)) {
                EdgeId e = g.pedge(g.dart(dt).pedge).original;
                bool is_in = inside_edges.count(g.edge(e).name) > 0;
                bool is_out = outside_edges.count(g.edge(e).name) > 0;
                if (!is_in && !is_out) continue;
                bool ccw_side = in_arc_ccw(pos_of(attachment_of(e, v)));
                if (is_in) (ccw_side ? ccw_in : cw_in)++;
                if (is_out) (ccw_side ? ccw_out : cw_out)++;
            }
            // the walked portion faces the interior region: it carries all
            // inside attachments and no outside ones
            bool ccw_ok = (cw_in == 0 && ccw_out == 0);
            bool cw_ok = (ccw_in == 0 && cw_out == 0);
            bool go_ccw;
            if (ccw_ok && !cw_ok)
                go_ccw = true;
            else if (cw_ok && !ccw_ok)
                go_ccw = false;
            else if (ccw_ok && cw_ok)
                go_ccw = true;  // no attachments at all; either arc closes
            else
                throw PropertyViolation("polygon portion ambiguous at " + g.node_name(v));
            // corners along the chosen arc
            std::vector<std::pair<long long, Pt>> corners;
            long long walked = 0;
            for (auto [s1, s2] : ss) {
                corners.push_back({walked, s1});
                walked += std::abs(s2.x - s1.x) + std::abs(s2.y - s1.y);
            }
            std::vector<Pt> portion;
            if (go_ccw) {
                for (auto& [cp, cpt] : corners) {
                    long long rel = ((cp - p_in) % total + total) % total;
                    long long end = ((p_out - p_in) % total + total) % total;
                    if (rel > 0 && rel < end) portion.push_back(cpt);
                }
                // ccw list sorted by relative position
                std::sort(portion.begin(), portion.end(), [&](Pt x, Pt y) {
                    auto rel = [&](Pt p) {
                        return ((pos_of(p) - p_in) % total + total) % total;
                    };
                    return rel(x) < rel(y);
                });
            } else {
                for (auto& [cp, cpt] : corners) {
                    long long rel = ((p_in - cp) % total + total) % total;
                    long long end = ((p_in - p_out) % total + total) % total;
                    if (rel > 0 && rel < end) portion.push_back(cpt);
                }
                std::sort(portion.begin(), portion.end(), [&](Pt x, Pt y) {
                    auto rel = [&](Pt p) {
                        return ((p_in - pos_of(p)) % total + total) % total;
                    };
                    return rel(x) < rel(y);
                });
            }
            for (auto& cpt : portion) pts.push_back({cpt, 0, g.node_name(v)});
            pts.push_back({a_out, 1, ""});
        }
    }

    // drop duplicate consecutive points and collinear pass-throughs that are
    // not classified junctions
    std::vector<WalkPoint> walk;
    for (auto& wp : pts) {
        if (!walk.empty() && walk.back().p == wp.p) {
            // an attachment and a coincident corner cannot happen (verified
            // drawings); keep the classified junction
            continue;
        }
        walk.push_back(wp);
    }

    BoundaryAudit audit;
    int n = int(walk.size());
    if (n < 4) throw PropertyViolation("degenerate audit walk");
    // orientation: region on the right = clockwise
    long long area2 = 0;
    for (int i = 0; i < n; ++i) {
        Pt a = walk[size_t(i)].p, b = walk[size_t((i + 1) % n)].p;
        area2 += a.x * b.y - b.x * a.y;
    }
    if (area2 > 0) std::reverse(walk.begin(), walk.end());

    int p90 = 0, p270 = 0;
    for (int i = 0; i < n; ++i) {
        const WalkPoint& wp = walk[size_t(i)];
        Pt a = walk[size_t((i + n - 1) % n)].p, b = wp.p, c = walk[size_t((i + 1) % n)].p;
        long long cr = cross(b, {2 * b.x - a.x, 2 * b.y - a.y}, c);
        // cr > 0: left turn (ccw); cr < 0: right
        if (cr == 0) continue;  // straight pass-through
        bool right = cr < 0;
        if (wp.kind == 2) {
            ++audit.k;
            if (right) throw PropertyViolation("switching crossing turns right on the walk");
        } else if (wp.kind == 1) {
            ++audit.a;
            if (!right) throw PropertyViolation("attachment turns left on the walk");
        } else {
            if (right) {
                ++p90;
                audit.reflex_corners.push_back({wp.pole, wp.p});
            } else {
                ++p270;
            }
        }
    }
    audit.walk_reflex = p90;
    audit.r = 2 * audit.a + p90 - p270;
    audit.identity = (audit.r == audit.k + audit.a + 4);
    return audit;
}

LowerBoundAudit lower_bound_audit(const OnePlaneGraph& g, const OpvrDrawing& d,
                                  const std::vector<ForbiddenConfig>& configs, int np) {
    LowerBoundAudit out;
    std::set<std::pair<std::string, std::pair<long long, long long>>> distinct;
    std::map<std::string, int> per_pole;
    for (const auto& f : configs) {
        BoundaryAudit a = boundary_audit(g, d, f);
        if (!a.identity) {
            out.pass = false;
            out.failures.push_back("corner identity fails for " + f.key);
        }
        if (a.walk_reflex < 1) {
            out.pass = false;
            out.failures.push_back("no reflex corner inside " + f.key);
        }
        for (auto& [pole, pt] : a.reflex_corners)
            if (distinct.insert({pole, {pt.x, pt.y}}).second) ++per_pole[pole];
    }
    for (auto& [pole, cnt] : per_pole) out.max_per_pole = std::max(out.max_per_pole, cnt);
    out.total_distinct_reflex = int(distinct.size());
    if (out.total_distinct_reflex < 4 * np - 8) {
        out.pass = false;
        out.failures.push_back("fewer than 4n_p-8 distinct reflex corners");
    }
    if (np > 8 && out.max_per_pole < 4) {
        out.pass = false;
        out.failures.push_back("maximum reflex per pole below four");
    }
    return out;
}

std::string verification_report_json(const VerificationReport& r) {
    nlohmann::json j;
    j["pass"] = r.pass;
    j["failures"] = r.failures;
    j["max_reflex"] = r.max_reflex;
    j["grid"] = {r.width, r.height};
    j["reflex"] = nlohmann::json::object();
    for (auto& [name, c] : r.reflex) j["reflex"][name] = c;
    return j.dump(2) + "\n";
}

}  // namespace opvr
