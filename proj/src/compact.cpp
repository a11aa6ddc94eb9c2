#include "opvr/compact.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <json.hpp>
#include <map>
#include <numeric>
#include <set>

namespace opvr {

namespace {

// rectilinear shape graph: darts with quarter-turn wedge angles; the wedge
// of a dart is the corner of the face on its left, at its origin
struct Shape {
    enum EClass { kCycle, kVis, kHelper };
    struct Node {
        int kind;  // 0 port, 1 dummy, 2 bend, 3 frame, 4 projection
        NodeId owner = kNone;
        DartId g_dart = kNone;
    };
    struct Dart {
        int origin = kNone, head = kNone, twin = kNone, rnext = kNone, rprev = kNone;
        int wedge = 0;  // 1..4
        int eclass = kHelper;
        NodeId owner = kNone;    // cycle edges
        EdgeId g_edge = kNone;   // visibility edges: the original g edge
        int face = kNone;
    };
    std::vector<Node> nodes;
    std::vector<Dart> darts;
    std::vector<std::vector<int>> faces;
    int outer_face = kNone;

    int face_next(int d) const { return darts[size_t(darts[size_t(d)].twin)].rprev; }

    void recompute_faces() {
        for (auto& d : darts) d.face = kNone;
        faces.clear();
        for (int d0 = 0; d0 < int(darts.size()); ++d0) {
            if (darts[size_t(d0)].face != kNone) continue;
            std::vector<int> walk;
            int d = d0;
            do {
                darts[size_t(d)].face = int(faces.size());
                walk.push_back(d);
                d = face_next(d);
            } while (d != d0);
            faces.push_back(std::move(walk));
        }
    }

    void check() const {
        for (int n = 0; n < int(nodes.size()); ++n) {
            (void)n;
        }
        std::vector<int> sum(nodes.size(), 0);
        for (const auto& d : darts) sum[size_t(d.origin)] += d.wedge;
        for (int s : sum)
            if (s != 4) throw PropertyViolation("shape node angle sum is not 360");
        for (int f = 0; f < int(faces.size()); ++f) {
            int t = 0;
            for (int d : faces[size_t(f)]) t += 2 - darts[size_t(d)].wedge;
            if (t != (f == outer_face ? -4 : 4))
                throw PropertyViolation("shape face turn law violated");
        }
    }

    // splits the edge of dart d with a new degree-2 node; returns the node
    int split(int d, int kind, NodeId owner) {
        int t = darts[size_t(d)].twin;
        int m = int(nodes.size());
        nodes.push_back({kind, owner, kNone});
        int d2 = int(darts.size());
        darts.push_back(darts[size_t(d)]);  // m -> old head
        int t2 = int(darts.size());
        darts.push_back(darts[size_t(t)]);  // m -> old origin
        auto& D = darts[size_t(d)];
        auto& T = darts[size_t(t)];
        auto& D2 = darts[size_t(d2)];
        auto& T2 = darts[size_t(t2)];
        D2.origin = m;
        D2.head = D.head;
        T2.origin = m;
        T2.head = D.origin;
        D.head = m;
        T.head = m;
        D.twin = t2;
        T2.twin = d;
        T.twin = d2;
        D2.twin = t;
        D2.rnext = t2;
        D2.rprev = t2;
        T2.rnext = d2;
        T2.rprev = d2;
        D2.wedge = 2;
        T2.wedge = 2;
        return m;
    }

    // splits the wedge of dart d (at its origin), inserting a new dart at a1
    // quarter-turns ccw from d; pairs it with a new dart at node h inside the
    // wedge of dart hd there (split 1 + rest)
    void cut(int d, int a1, int hd) {
        int c = darts[size_t(d)].origin;
        int h = darts[size_t(hd)].origin;
        int w = darts[size_t(d)].wedge;
        if (a1 < 1 || a1 >= w) throw PropertyViolation("cut splits a wedge out of range");
        int cd = int(darts.size());
        darts.push_back({});
        int hd2 = int(darts.size());
        darts.push_back({});
        auto& CD = darts[size_t(cd)];
        auto& HD = darts[size_t(hd2)];
        CD.origin = c;
        CD.head = h;
        CD.twin = hd2;
        HD.origin = h;
        HD.head = c;
        HD.twin = cd;
        CD.eclass = HD.eclass = kHelper;
        // rotation at c: d -> cd -> old next
        int dn = darts[size_t(d)].rnext;
        CD.rnext = dn;
        CD.rprev = d;
        darts[size_t(d)].rnext = cd;
        darts[size_t(dn)].rprev = cd;
        CD.wedge = w - a1;
        darts[size_t(d)].wedge = a1;
        // rotation at h: hd -> hd2 -> old next; perpendicular arrival
        int wn = darts[size_t(hd)].wedge;
        if (wn < 2) throw PropertyViolation("cut target wedge too small");
        int hn = darts[size_t(hd)].rnext;
        HD.rnext = hn;
        HD.rprev = hd;
        darts[size_t(hd)].rnext = hd2;
        darts[size_t(hn)].rprev = hd2;
        darts[size_t(hd)].wedge = 1;
        HD.wedge = wn - 1;
    }
};

Shape build_shape(const OrthoRep& rep) {
    const ExpandedGraph& H = *rep.H;
    Shape s;
    for (const auto& n : H.nodes) s.nodes.push_back({n.is_port ? 0 : 1, n.g_node, n.g_dart});
    s.darts.resize(H.darts.size());
    for (int d = 0; d < int(H.darts.size()); ++d) {
        const auto& hd = H.darts[size_t(d)];
        auto& sd = s.darts[size_t(d)];
        sd.origin = hd.origin;
        sd.head = hd.head;
        sd.twin = hd.twin;
        sd.rnext = hd.rot_next;
        sd.rprev = hd.rot_prev;
        sd.wedge = rep.wedge[size_t(d)];
        const auto& he = H.edges[size_t(hd.edge)];
        if (he.cycle) {
            sd.eclass = Shape::kCycle;
            sd.owner = he.owner;
        } else {
            sd.eclass = Shape::kVis;
        }
    }

    // expand bends: walking the dart whose left face is f_v, a convex bend
    // (90 toward the polygon interior) is a left turn
    for (int e = 0; e < int(H.edges.size()); ++e) {
        const auto& he = H.edges[size_t(e)];
        if (!he.cycle) continue;
        int n_convex = rep.convex_bends[size_t(e)];
        int n_reflex = rep.reflex_bends[size_t(e)];
        if (n_convex + n_reflex == 0) continue;
        // the dart with f_v on its left
        int d_in = kNone;
        for (int slot = 0; slot < 2; ++slot) {
            int d = he.darts[slot];
            if (H.vertex_face[size_t(H.darts[size_t(d)].face)] == he.owner) d_in = d;
        }
        if (d_in == kNone) throw PropertyViolation("cycle edge lost its vertex face");
        int cur = d_in;
        for (int i = 0; i < n_convex + n_reflex; ++i) {
            bool convex = i < n_convex;
            int out = int(s.darts.size());      // continuation m -> old head
            int back = out + 1;                 // m -> old origin
            s.split(cur, 2, he.owner);
            // left of travel is f_v: convex puts 90 there, reflex 270
            s.darts[size_t(out)].wedge = convex ? 1 : 3;
            s.darts[size_t(back)].wedge = convex ? 3 : 1;
            cur = out;
        }
    }
    s.recompute_faces();
    return s;
}

std::vector<int> assign_dirs(const Shape& s) {
    std::vector<int> dir(s.darts.size(), -1);
    for (int seed = 0; seed < int(s.darts.size()); ++seed) {
        if (dir[size_t(seed)] != -1) continue;
        dir[size_t(seed)] = 0;
        std::vector<int> stack{seed};
        while (!stack.empty()) {
            int d = stack.back();
            stack.pop_back();
            int dd = dir[size_t(d)];
            int t = s.darts[size_t(d)].twin;
            int r = s.darts[size_t(d)].rnext;
            if (dir[size_t(t)] == -1) {
                dir[size_t(t)] = (dd + 2) % 4;
                stack.push_back(t);
            } else if (dir[size_t(t)] != (dd + 2) % 4)
                throw PropertyViolation("direction assignment inconsistent at a twin");
            int rd = (dd + s.darts[size_t(d)].wedge) % 4;
            if (dir[size_t(r)] == -1) {
                dir[size_t(r)] = rd;
                stack.push_back(r);
            } else if (dir[size_t(r)] != rd)
                throw PropertyViolation("direction assignment inconsistent in a rotation");
        }
    }
    return dir;
}

void add_frame(Shape& s) {
    std::vector<int> dir = assign_dirs(s);
    const auto& walk = s.faces[size_t(s.outer_face)];

    // pick four corners offering the cardinals in clockwise succession
    struct Pick {
        int dart = kNone;  // wedge being split
        int a1 = 0;
        int cardinal = 0;
    };
    std::vector<Pick> picks;
    {
        std::vector<std::pair<int, std::vector<int>>> offers;  // (dart, cardinals)
        for (int d : walk) {
            int w = s.darts[size_t(d)].wedge;
            if (w < 2) continue;
            std::vector<int> cs;
            for (int a = 1; a < w; ++a) cs.push_back((dir[size_t(d)] + a) % 4);
            offers.push_back({d, cs});
        }
        if (offers.empty()) throw PropertyViolation("outer face offers no frame anchors");
        bool done = false;
        for (size_t start = 0; start < offers.size() && !done; ++start) {
            for (int c0 = 0; c0 < 4 && !done; ++c0) {
                std::vector<Pick> trial;
                int want = c0;
                size_t pos = start;
                size_t steps = 0;
                while (trial.size() < 4 && steps < 3 * offers.size()) {
                    const auto& [d, cs] = offers[pos % offers.size()];
                    bool used = false;
                    for (const auto& p : trial) used |= (p.dart == d);
                    if (!used)
                        for (int c : cs)
                            if (c == want) {
                                int a1 = ((want - dir[size_t(d)]) % 4 + 4) % 4;
                                trial.push_back({d, a1, want});
                                want = (want + 3) % 4;  // clockwise succession
                                break;
                            }
                    ++pos;
                    ++steps;
                }
                if (trial.size() == 4) {
                    picks = trial;
                    done = true;
                }
            }
        }
        if (!done) throw PropertyViolation("could not anchor the frame on the outer face");
    }

    // frame cycle: corners FNW..., inner walk top:W left:S bottom:E right:N
    int base = int(s.nodes.size());
    for (int i = 0; i < 4; ++i) s.nodes.push_back({3, kNone, kNone});
    int nw = base, ne = base + 1, se = base + 2, sw = base + 3;
    auto add_edge = [&](int a, int b) {
        int d = int(s.darts.size());
        s.darts.push_back({});
        s.darts.push_back({});
        s.darts[size_t(d)].origin = a;
        s.darts[size_t(d)].head = b;
        s.darts[size_t(d)].twin = d + 1;
        s.darts[size_t(d + 1)].origin = b;
        s.darts[size_t(d + 1)].head = a;
        s.darts[size_t(d + 1)].twin = d;
        s.darts[size_t(d)].eclass = Shape::kHelper;
        s.darts[size_t(d + 1)].eclass = Shape::kHelper;
        return d;
    };
    int top = add_edge(ne, nw);    // inner dir W
    int left = add_edge(nw, sw);   // S
    int bottom = add_edge(sw, se); // E
    int right = add_edge(se, ne);  // N
    // corner rotations: [outgoing, incoming-twin], inner corner 90
    auto wire_corner = [&](int node, int out_dart, int in_dart) {
        int in_twin = s.darts[size_t(in_dart)].twin;
        s.darts[size_t(out_dart)].rnext = in_twin;
        s.darts[size_t(out_dart)].rprev = in_twin;
        s.darts[size_t(in_twin)].rnext = out_dart;
        s.darts[size_t(in_twin)].rprev = out_dart;
        s.darts[size_t(out_dart)].wedge = 1;  // annulus corner
        s.darts[size_t(in_twin)].wedge = 3;   // outer side of the frame
    };
    wire_corner(nw, left, top);
    wire_corner(sw, bottom, left);
    wire_corner(se, right, bottom);
    wire_corner(ne, top, right);

    // connectors: cardinal c attaches to the frame side it points at
    for (const auto& p : picks) {
        int side_dart;
        switch (p.cardinal) {
            case 1: side_dart = top; break;     // heading N hits the top side
            case 3: side_dart = bottom; break;  // heading S
            case 0: side_dart = right; break;   // heading E
            default: side_dart = left; break;   // heading W
        }
        int cont = int(s.darts.size());  // Q -> far frame corner, annulus side
        s.split(side_dart, 3, kNone);
        s.cut(p.dart, p.a1, cont);
    }

    s.recompute_faces();
    // the outer face is now the frame exterior: the face left of the twin
    // of an inner frame dart
    s.outer_face = s.darts[size_t(s.darts[size_t(top)].twin)].face;
    s.check();
}

void refine(Shape& s) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int f = 0; f < int(s.faces.size()) && !changed; ++f) {
            if (f == s.outer_face) continue;
            const auto& walk = s.faces[size_t(f)];
            for (size_t i = 0; i < walk.size(); ++i) {
                int d0 = walk[i];
                int w = s.darts[size_t(d0)].wedge;
                if (w < 3) continue;
                if (w > 3) throw PropertyViolation("interior 360 corner during refinement");
                // project the reflex corner: the first later edge where the
                // cumulative turn reaches +2 faces it
                int t = 0;
                size_t j = i;
                int hit = kNone;
                for (size_t step = 1; step < walk.size(); ++step) {
                    j = (i + step) % walk.size();
                    t += 2 - s.darts[size_t(walk[j])].wedge;
                    if (t == 2) {
                        hit = walk[j];
                        break;
                    }
                }
                if (hit == kNone) throw PropertyViolation("projection target not found");
                // split the hit edge and cut from the reflex corner
                int cont = int(s.darts.size());  // continuation on the face side
                s.split(hit, 4, kNone);
                s.cut(d0, w - 2, cont);
                s.recompute_faces();
                changed = true;
                break;
            }
        }
    }
    s.check();
    for (int f = 0; f < int(s.faces.size()); ++f) {
        if (f == s.outer_face) continue;
        int corners = 0;
        for (int d : s.faces[size_t(f)]) corners += (s.darts[size_t(d)].wedge == 1) ? 1 : 0;
        bool flat_only = true;
        for (int d : s.faces[size_t(f)])
            if (s.darts[size_t(d)].wedge > 2) flat_only = false;
        if (corners != 4 || !flat_only)
            throw PropertyViolation("refinement left a non-rectangular face");
    }
}

struct Coords {
    std::vector<long long> x, y;  // per shape node
};

Coords coordinates(const Shape& s) {
    std::vector<int> dir = assign_dirs(s);
    int n = int(s.nodes.size());

    auto solve_axis = [&](int forward_dir) {
        // union nodes along perpendicular edges, then longest path over
        // forward arcs
        std::vector<int> parent(static_cast<size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int v) {
            while (parent[size_t(v)] != v) v = parent[size_t(v)] = parent[size_t(parent[size_t(v)])];
            return v;
        };
        for (int d = 0; d < int(s.darts.size()); ++d) {
            int dd = dir[size_t(d)];
            if (dd == (forward_dir + 1) % 4 || dd == (forward_dir + 3) % 4)
                parent[size_t(find(s.darts[size_t(d)].origin))] = find(s.darts[size_t(d)].head);
        }
        std::vector<std::vector<int>> out{static_cast<size_t>(n)};
        std::vector<int> indeg(static_cast<size_t>(n), 0);
        for (int d = 0; d < int(s.darts.size()); ++d) {
            if (dir[size_t(d)] != forward_dir) continue;
            int a = find(s.darts[size_t(d)].origin), b = find(s.darts[size_t(d)].head);
            out[size_t(a)].push_back(b);
            ++indeg[size_t(b)];
        }
        std::vector<long long> dist(static_cast<size_t>(n), 0);
        std::vector<int> order;
        for (int v = 0; v < n; ++v)
            if (find(v) == v && indeg[size_t(v)] == 0) order.push_back(v);
        size_t head = 0;
        int processed = 0;
        while (head < order.size()) {
            int v = order[head++];
            ++processed;
            for (int w : out[size_t(v)]) {
                dist[size_t(w)] = std::max(dist[size_t(w)], dist[size_t(v)] + 1);
                if (--indeg[size_t(w)] == 0) order.push_back(w);
            }
        }
        int roots = 0;
        for (int v = 0; v < n; ++v)
            if (find(v) == v) ++roots;
        if (processed != roots) throw PropertyViolation("compaction constraint graph has a cycle");
        std::vector<long long> coord(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) coord[size_t(v)] = dist[size_t(find(v))];
        return coord;
    };

    Coords c;
    c.x = solve_axis(0);  // E arcs
    c.y = solve_axis(1);  // N arcs
    return c;
}

}  // namespace

OpvrDrawing unit_square_drawing(const OnePlaneGraph& g) {
    OpvrDrawing d;
    OpvrDrawing::Polygon p;
    p.vertex = g.node_name(0);
    p.corners = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    d.polygons.push_back(p);
    d.width = d.height = 1;
    d.complexity = 0;
    return d;
}

OpvrDrawing compact(const OnePlaneGraph& g, const OrthoRep& rep) {
    if (g.edge_count() == 0) return unit_square_drawing(g);

    Shape s = build_shape(rep);
    s.outer_face = kNone;
    // outer face of the shape: the face holding the darts of the outer
    // H-face (faces were renumbered by recompute)
    for (int d = 0; d < int(s.darts.size()); ++d) {
        // the bend expansion preserved dart ids for H-darts
        if (d < int(rep.H->darts.size()) && rep.H->darts[size_t(d)].face == rep.H->outer_face) {
            s.outer_face = s.darts[size_t(d)].face;
            break;
        }
    }
    if (s.outer_face == kNone) throw PropertyViolation("shape lost the outer face");
    s.check();

    add_frame(s);
    refine(s);
    Coords co = coordinates(s);

    // drop helper geometry; gather polygons and visibilities
    OpvrDrawing out;
    long long minx = LLONG_MAX, miny = LLONG_MAX;
    auto consider = [&](long long x, long long y) {
        minx = std::min(minx, x);
        miny = std::min(miny, y);
    };
    // polygon boundaries: cycle-class darts per owner
    std::map<NodeId, int> start_dart;
    for (int d = 0; d < int(s.darts.size()); ++d)
        if (s.darts[size_t(d)].eclass == Shape::kCycle)
            start_dart.emplace(s.darts[size_t(d)].owner, d);
    for (auto [v, d0] : start_dart) {
        std::vector<OpvrDrawing::Pt> pts;
        int d = d0;
        do {
            int node = s.darts[size_t(d)].origin;
            pts.push_back({co.x[size_t(node)], co.y[size_t(node)]});
            // continue along the next cycle dart of the same owner at head
            int at = s.darts[size_t(d)].head;
            int next = kNone;
            int cand = s.darts[size_t(d)].twin;
            for (int rounds = 0; rounds < 8; ++rounds) {
                cand = s.darts[size_t(cand)].rnext;
                if (cand == s.darts[size_t(d)].twin) break;
                if (s.darts[size_t(cand)].eclass == Shape::kCycle &&
                    s.darts[size_t(cand)].owner == v) {
                    next = cand;
                    break;
                }
            }
            if (next == kNone) throw PropertyViolation("polygon boundary interrupted");
            (void)at;
            d = next;
        } while (d != d0);
        // drop collinear points
        std::vector<OpvrDrawing::Pt> poly;
        int np = int(pts.size());
        for (int i = 0; i < np; ++i) {
            auto &a = pts[size_t((i + np - 1) % np)], &b = pts[size_t(i)], &c2 = pts[size_t((i + 1) % np)];
            long long cross = (b.x - a.x) * (c2.y - b.y) - (b.y - a.y) * (c2.x - b.x);
            if (cross != 0) poly.push_back(b);
        }
        // normalize to ccw
        long long area2 = 0;
        int k = int(poly.size());
        for (int i = 0; i < k; ++i) {
            auto &a = poly[size_t(i)], &b = poly[size_t((i + 1) % k)];
            area2 += a.x * b.y - b.x * a.y;
        }
        if (area2 < 0) std::reverse(poly.begin(), poly.end());
        for (auto& p : poly) consider(p.x, p.y);
        out.polygons.push_back({g.node_name(v), std::move(poly)});
    }
    std::sort(out.polygons.begin(), out.polygons.end(),
              [](const OpvrDrawing::Polygon& a, const OpvrDrawing::Polygon& b) {
                  return a.vertex < b.vertex;
              });

    // visibilities: per original edge, the segment between its end ports
    std::map<DartId, int> port_node;
    for (int n = 0; n < int(s.nodes.size()); ++n)
        if (s.nodes[size_t(n)].kind == 0) port_node[s.nodes[size_t(n)].g_dart] = n;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& oe = g.edge(e);
        PedgeId pu = g.fragment_at(e, oe.u), pv = g.fragment_at(e, oe.v);
        int a = port_node.at(g.dart_from(pu, oe.u));
        int b = port_node.at(g.dart_from(pv, oe.v));
        OpvrDrawing::Vis vis;
        vis.edge = oe.name;
        vis.from = {co.x[size_t(a)], co.y[size_t(a)]};
        vis.to = {co.x[size_t(b)], co.y[size_t(b)]};
        if (vis.from.x != vis.to.x && vis.from.y != vis.to.y)
            throw PropertyViolation("visibility is not axis-parallel: " + oe.name);
        consider(vis.from.x, vis.from.y);
        consider(vis.to.x, vis.to.y);
        out.visibilities.push_back(vis);
    }
    std::sort(out.visibilities.begin(), out.visibilities.end(),
              [](const OpvrDrawing::Vis& a, const OpvrDrawing::Vis& b) { return a.edge < b.edge; });

    for (auto& p : out.polygons)
        for (auto& pt : p.corners) {
            pt.x -= minx;
            pt.y -= miny;
            out.width = std::max(out.width, pt.x);
            out.height = std::max(out.height, pt.y);
        }
    for (auto& v : out.visibilities) {
        v.from.x -= minx;
        v.from.y -= miny;
        v.to.x -= minx;
        v.to.y -= miny;
        out.width = std::max({out.width, v.from.x, v.to.x});
        out.height = std::max({out.height, v.from.y, v.to.y});
    }

    // geometric reflex counts must agree with the representation
    out.complexity = 0;
    for (const auto& poly : out.polygons) {
        int reflex = 0;
        int k = int(poly.corners.size());
        for (int i = 0; i < k; ++i) {
            auto &a = poly.corners[size_t((i + k - 1) % k)], &b = poly.corners[size_t(i)],
                 &c2 = poly.corners[size_t((i + 1) % k)];
            long long cross = (b.x - a.x) * (c2.y - b.y) - (b.y - a.y) * (c2.x - b.x);
            if (cross < 0) ++reflex;
        }
        NodeId v = g.node_id(poly.vertex);
        if (v < int(rep.vertex_reflex.size()) && reflex != rep.vertex_reflex[size_t(v)])
            throw PropertyViolation("geometric reflex count disagrees with the representation for " +
                                    poly.vertex);
        out.complexity = std::max(out.complexity, reflex);
    }
    return out;
}

std::string drawing_to_json(const OpvrDrawing& d) {
    nlohmann::json j;
    j["polygons"] = nlohmann::json::object();
    for (const auto& p : d.polygons) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& pt : p.corners) pts.push_back({pt.x, pt.y});
        j["polygons"][p.vertex] = pts;
    }
    j["visibilities"] = nlohmann::json::array();
    for (const auto& v : d.visibilities)
        j["visibilities"].push_back(
            {{"edge", v.edge}, {"from", {v.from.x, v.from.y}}, {"to", {v.to.x, v.to.y}}});
    j["grid"] = {d.width, d.height};
    j["complexity"] = d.complexity;
    return j.dump(2) + "\n";
}

OpvrDrawing drawing_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw ValidationError(std::string("malformed drawing: ") + ex.what());
    }
    OpvrDrawing d;
    try {
        for (const auto& [vertex, pts] : j.at("polygons").items()) {
            OpvrDrawing::Polygon p;
            p.vertex = vertex;
            for (const auto& pt : pts) p.corners.push_back({pt.at(0), pt.at(1)});
            d.polygons.push_back(std::move(p));
        }
        for (const auto& v : j.at("visibilities")) {
            OpvrDrawing::Vis vis;
            vis.edge = v.at("edge");
            vis.from = {v.at("from").at(0), v.at("from").at(1)};
            vis.to = {v.at("to").at(0), v.at("to").at(1)};
            d.visibilities.push_back(vis);
        }
        d.width = j.at("grid").at(0);
        d.height = j.at("grid").at(1);
        d.complexity = j.at("complexity");
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("malformed drawing: ") + ex.what());
    }
    std::sort(d.polygons.begin(), d.polygons.end(),
              [](const OpvrDrawing::Polygon& a, const OpvrDrawing::Polygon& b) {
                  return a.vertex < b.vertex;
              });
    return d;
}

}  // namespace opvr
