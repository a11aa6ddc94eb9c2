#include "opvr/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "opvr/configs.hpp"

namespace opvr {

namespace {

struct Vec {
    double x = 0, y = 0;
};
Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator*(double s, Vec v) { return {s * v.x, s * v.y}; }
Vec rot90(Vec v) { return {-v.y, v.x}; }

double ang(Vec from, Vec to) {
    double a = std::atan2(to.y - from.y, to.x - from.x) * 180.0 / M_PI;
    return a < 0 ? a + 360.0 : a;
}

// One planting operation: fresh nodes whose rotations are derived from
// template coordinates (ccw angle sort), ordered insertions into existing
// rotations, and existing-edge splits. Applied to the model in one commit.
class Session {
public:
    explicit Session(GraphModel& m) : m_(m) {}

    void place(const std::string& name, Vec pos) { pos_[name] = pos; }

    void new_vertex(const std::string& name, Vec pos) {
        place(name, pos);
        nodes_.push_back({name, false});
    }

    void anchor_after(const std::string& node, DartRef after, double base_angle) {
        anchor_of_[node] = anchors_.size();
        anchors_.push_back({node, after, base_angle, false, {}, {}});
    }
    void anchor_before(const std::string& node, DartRef before) {
        anchor_of_[node] = anchors_.size();
        anchors_.push_back({node, before, 0.0, true, {}, {}});
    }

    void uncrossed(const std::string& id, const std::string& a, const std::string& b) {
        edges_.push_back({id, a, b});
        ref_at(a, {id, b}, ang(pos_.at(a), pos_.at(b)));
        ref_at(b, {id, a}, ang(pos_.at(b), pos_.at(a)));
    }

    // edges (a1,a2) and (b1,b2) crossing at a fresh dummy
    void crossed(const std::string& id_a, const std::string& a1, const std::string& a2,
                 const std::string& id_b, const std::string& b1, const std::string& b2,
                 const std::string& dummy, Vec dpos) {
        place(dummy, dpos);
        nodes_.push_back({dummy, true});
        edges_.push_back({id_a, a1, a2});
        edges_.push_back({id_b, b1, b2});
        crossings_.push_back({dummy, id_a, id_b});
        for (const auto& [id, n] :
             {std::pair<std::string, std::string>{id_a, a1}, {id_a, a2}, {id_b, b1}, {id_b, b2}}) {
            ref_at(n, {id, dummy}, ang(pos_.at(n), dpos));
            ref_at(dummy, {id, n}, ang(dpos, pos_.at(n)));
        }
    }

    // splits existing uncrossed edge `side` with dummy m, crossed by the new
    // edge conn = (c_from, c_to); rotation at m is given explicitly (ccw)
    void split_existing(const std::string& side, const std::string& conn_id,
                        const std::string& c_from, const std::string& c_to,
                        const std::string& m_name, Vec m_pos, std::vector<DartRef> m_rotation) {
        place(m_name, m_pos);
        edges_.push_back({conn_id, c_from, c_to});
        splits_.push_back({side, conn_id, m_name, std::move(m_rotation)});
        ref_at(c_from, {conn_id, m_name}, ang(pos_.at(c_from), m_pos));
        ref_at(c_to, {conn_id, m_name}, ang(pos_.at(c_to), m_pos));
    }

    void commit() {
        for (const auto& [name, dummy] : nodes_)
            if (!dummy) m_.vertices.push_back(name);
        for (auto& e : edges_) m_.edges.push_back(e);
        for (auto& c : crossings_) m_.crossings.push_back(c);
        for (const auto& [name, dummy] : nodes_) {
            auto& list = new_refs_[name];
            std::sort(list.begin(), list.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            std::vector<DartRef> refs;
            refs.reserve(list.size());
            for (auto& [a, r] : list) refs.push_back(r);
            m_.rotation[name] = refs;
        }
        for (auto& a : anchors_) {
            auto& rot = m_.rotation.at(a.node);
            auto it = std::find(rot.begin(), rot.end(), a.pivot);
            if (it == rot.end())
                throw ValidationError("planting anchor not found at '" + a.node + "'");
            if (a.before) {
                rot.insert(it, a.refs_ordered.begin(), a.refs_ordered.end());
            } else {
                std::sort(a.pending.begin(), a.pending.end(), [&](const auto& p, const auto& q) {
                    return std::fmod(p.first - a.base + 720.0, 360.0) <
                           std::fmod(q.first - a.base + 720.0, 360.0);
                });
                size_t idx = size_t(it - rot.begin());
                for (size_t i = 0; i < a.pending.size(); ++i)
                    rot.insert(rot.begin() + long(idx + 1 + i), a.pending[i].second);
            }
        }
        // splits last: the rewrites must not disturb anchor pivots
        for (auto& s : splits_) {
            m_.crossings.push_back({s.m_name, s.side, s.conn});
            const auto* e = m_.find_edge(s.side);
            if (!e) throw ValidationError("split references unknown edge '" + s.side + "'");
            auto rewrite = [&](const std::string& at, const std::string& other) {
                for (auto& r : m_.rotation.at(at))
                    if (r.edge == s.side && r.toward == other) {
                        r.toward = s.m_name;
                        return;
                    }
                throw ValidationError("side dart to rewrite not found at '" + at + "'");
            };
            rewrite(e->u, e->v);
            rewrite(e->v, e->u);
            m_.rotation[s.m_name] = s.m_rotation;
        }
    }

private:
    struct Anchor {
        std::string node;
        DartRef pivot;
        double base;
        bool before;
        std::vector<DartRef> refs_ordered;
        std::vector<std::pair<double, DartRef>> pending;
    };
    struct Split {
        std::string side, conn, m_name;
        std::vector<DartRef> m_rotation;
    };

    void ref_at(const std::string& n, DartRef r, double angle) {
        auto ai = anchor_of_.find(n);
        if (ai != anchor_of_.end()) {
            auto& a = anchors_[ai->second];
            if (a.before)
                a.refs_ordered.push_back(r);
            else
                a.pending.push_back({angle, r});
            return;
        }
        new_refs_[n].push_back({angle, r});
    }

    GraphModel& m_;
    std::map<std::string, Vec> pos_;
    std::vector<std::pair<std::string, bool>> nodes_;
    std::vector<GraphModel::Edge> edges_;
    std::vector<GraphModel::Crossing> crossings_;
    std::map<std::string, std::vector<std::pair<double, DartRef>>> new_refs_;
    std::vector<Anchor> anchors_;
    std::map<std::string, size_t> anchor_of_;
    std::vector<Split> splits_;
};

struct FaceFrame {
    std::array<std::string, 3> corner;
    std::array<Vec, 3> cpos{Vec{0, 0}, Vec{1, 0}, Vec{0.5, 0.9}};
    std::array<DartRef, 3> out_ref;
};

FaceFrame frame_of(const OnePlaneGraph& g, FaceId f) {
    const auto& walk = g.face(f).darts;
    if (walk.size() != 3) throw ValidationError("planting requires a triangular face");
    FaceFrame fr;
    for (int i = 0; i < 3; ++i) {
        const Dart& d = g.dart(walk[size_t(i)]);
        fr.corner[size_t(i)] = g.node_name(d.origin);
        fr.out_ref[size_t(i)] = {g.edge(g.pedge(d.pedge).original).name, g.node_name(d.head)};
    }
    return fr;
}

}  // namespace

Planter::Planter(GraphModel m) : model_(std::move(m)) { rebake(); }

void Planter::rebake() { baked_ = OnePlaneGraph::bake(model_); }

FaceId Planter::find_face(const std::vector<std::string>& corners) const {
    std::set<std::string> want(corners.begin(), corners.end());
    std::vector<FaceId> hits;
    for (FaceId f = 0; f < baked_.face_count(); ++f) {
        const auto& walk = baked_.face(f).darts;
        if (walk.size() != want.size()) continue;
        std::set<std::string> got;
        for (DartId d : walk) got.insert(baked_.node_name(baked_.dart(d).origin));
        if (got == want) hits.push_back(f);
    }
    if (hits.size() != 1)
        throw ValidationError("face lookup matched " + std::to_string(hits.size()) + " faces");
    return hits[0];
}

Planter::TFacePlant Planter::plant_t_face(FaceId f, const std::string& prefix, bool with_lenses,
                                          bool with_chords) {
    FaceFrame fr = frame_of(baked_, f);
    Session s(model_);
    TFacePlant out;

    for (int i = 0; i < 3; ++i) {
        s.place(fr.corner[size_t(i)], fr.cpos[size_t(i)]);
        s.anchor_after(fr.corner[size_t(i)], fr.out_ref[size_t(i)],
                       ang(fr.cpos[size_t(i)], fr.cpos[size_t((i + 1) % 3)]));
    }
    const std::string &A = fr.corner[0], &B = fr.corner[1], &C = fr.corner[2];

    auto nm = [&](const char* tag) { return prefix + "_" + tag; };
    s.new_vertex(nm("v"), {0.455, 0.378});
    s.new_vertex(nm("w"), {0.411, 0.284});
    s.new_vertex(nm("y"), {0.545, 0.222});
    s.new_vertex(nm("w2"), {0.462, 0.218});
    s.new_vertex(nm("y2"), {0.587, 0.277});
    s.new_vertex(nm("v2"), {0.545, 0.378});
    s.crossed(nm("eAv"), A, nm("v"), nm("ewC"), nm("w"), C, nm("p"), {0.3375, 0.3975});
    s.crossed(nm("eAy"), A, nm("y"), nm("eBw2"), B, nm("w2"), nm("q"), {0.5, 0.105});
    s.crossed(nm("eCy2"), C, nm("y2"), nm("ev2B"), nm("v2"), B, nm("r"), {0.6625, 0.3975});
    s.uncrossed(nm("g0"), nm("v"), nm("v2"));
    s.uncrossed(nm("g1"), nm("v"), nm("w"));
    s.uncrossed(nm("g2"), nm("w"), nm("w2"));
    s.uncrossed(nm("g3"), nm("w2"), nm("y"));
    s.uncrossed(nm("g4"), nm("y"), nm("y2"));
    s.uncrossed(nm("g5"), nm("y2"), nm("v2"));
    if (with_chords) {
        s.uncrossed(nm("c0"), A, nm("w"));
        s.uncrossed(nm("c1"), A, nm("w2"));
        s.uncrossed(nm("c2"), B, nm("y"));
        s.uncrossed(nm("c3"), B, nm("y2"));
        s.uncrossed(nm("c4"), C, nm("v"));
        s.uncrossed(nm("c5"), C, nm("v2"));
        s.uncrossed(nm("f0"), nm("v"), nm("w2"));
        s.uncrossed(nm("f1"), nm("v"), nm("y"));
        s.uncrossed(nm("f2"), nm("v"), nm("y2"));
    }
    std::vector<std::string> tp{A, B, C};
    std::sort(tp.begin(), tp.end());
    std::vector<std::string> tc{nm("p"), nm("q"), nm("r")};
    std::sort(tc.begin(), tc.end());
    out.planted.push_back({'T', tp, tc});

    if (with_lenses) {
        for (int i = 0; i < 3; ++i) {
            const std::string& S = fr.corner[size_t(i)];
            const std::string& E = fr.corner[size_t((i + 1) % 3)];
            Vec sp = fr.cpos[size_t(i)], ep = fr.cpos[size_t((i + 1) % 3)];
            Vec xh = ep - sp, yh = rot90(xh);
            auto lm = [&](const char* tag) {
                return prefix + "_l" + std::to_string(i) + tag;
            };
            s.new_vertex(lm("w"), sp + 0.38 * xh + 0.01 * yh);
            s.new_vertex(lm("v"), sp + 0.62 * xh + 0.01 * yh);
            s.crossed(lm("eSv"), S, lm("v"), lm("ewE"), lm("w"), E, lm("x"),
                      sp + 0.5 * xh + 0.028 * yh);
            s.uncrossed(lm("cS"), S, lm("w"));
            s.uncrossed(lm("cm"), lm("w"), lm("v"));
            s.uncrossed(lm("cE"), lm("v"), E);

            LensInfo info;
            info.side_edge = fr.out_ref[size_t(i)].edge;
            info.w_name = lm("w");
            info.w_slot = DartRef{lm("cS"), S};
            info.crossing = lm("x");
            info.arc_edge = lm("eSv");
            info.s_corner = S;
            out.lens_by_side[info.side_edge] = info;

            std::vector<std::string> poles{S, E};
            std::sort(poles.begin(), poles.end());
            out.planted.push_back({'B', poles, {lm("x")}});
        }
    }

    s.commit();
    rebake();
    return out;
}

void Planter::plant_nt_face(FaceId f, const std::string& prefix,
                            const std::map<std::string, LensInfo>& lens_by_side) {
    FaceFrame fr = frame_of(baked_, f);
    Session s(model_);
    for (int i = 0; i < 3; ++i) {
        s.place(fr.corner[size_t(i)], fr.cpos[size_t(i)]);
        s.anchor_after(fr.corner[size_t(i)], fr.out_ref[size_t(i)],
                       ang(fr.cpos[size_t(i)], fr.cpos[size_t((i + 1) % 3)]));
    }
    std::string cnt = prefix + "_c";
    s.new_vertex(cnt, {0.5, 0.3});

    for (int i = 0; i < 3; ++i) {
        const std::string& S = fr.corner[size_t(i)];
        const std::string& E = fr.corner[size_t((i + 1) % 3)];
        const std::string& side = fr.out_ref[size_t(i)].edge;
        auto it = lens_by_side.find(side);
        if (it == lens_by_side.end())
            throw ValidationError("NT side '" + side + "' has no adjacent lens");
        const LensInfo& li = it->second;
        Vec sp = fr.cpos[size_t(i)], ep = fr.cpos[size_t((i + 1) % 3)];
        Vec xh = ep - sp, yh = rot90(xh);
        // the target witness lies just beyond the side, inside the lens
        s.place(li.w_name, sp + 0.62 * xh - 0.01 * yh);
        s.anchor_after(li.w_name, li.w_slot, 0.0);
        std::string m = prefix + "_m" + std::to_string(i);
        std::string conn = prefix + "_k" + std::to_string(i);
        s.split_existing(side, conn, cnt, li.w_name, m, sp + 0.55 * xh,
                         {DartRef{side, E}, DartRef{conn, cnt}, DartRef{side, S},
                          DartRef{conn, li.w_name}});
    }
    for (int i = 0; i < 3; ++i)
        s.uncrossed(prefix + "_a" + std::to_string(i), cnt, fr.corner[size_t(i)]);

    s.commit();
    rebake();
}

PlantedConfig Planter::plant_b_lens(DartId side_dart, const std::string& prefix, bool connected) {
    const Dart& d = baked_.dart(side_dart);
    const auto& oe = baked_.edge(baked_.pedge(d.pedge).original);
    if (oe.crossing != kNone) throw ValidationError("lens side must be uncrossed");
    std::string S = baked_.node_name(d.origin), E = baked_.node_name(d.head);

    // third attachment for the lens witnesses: the third corner of the face
    // on the other side of the pole edge, joined across it
    std::string D;
    DartRef d_out{"", ""};
    if (connected) {
        FaceId f2 = baked_.face_of(d.twin);
        for (DartId w : baked_.face(f2).darts) {
            const Dart& wd = baked_.dart(w);
            if (baked_.is_dummy(wd.origin)) continue;
            if (wd.origin == d.origin || wd.origin == d.head) continue;
            D = baked_.node_name(wd.origin);
            d_out = {baked_.edge(baked_.pedge(wd.pedge).original).name,
                     baked_.node_name(wd.head)};
            break;
        }
        if (D.empty()) throw ValidationError("no far corner for the lens connector");
    }

    Session s(model_);
    s.place(S, {0, 0});
    s.place(E, {1, 0});
    s.anchor_after(S, DartRef{oe.name, E}, 0.0);
    s.anchor_before(E, DartRef{oe.name, S});
    auto nm = [&](const char* tag) { return prefix + "_" + tag; };
    s.new_vertex(nm("w"), {0.38, 0.05});
    s.new_vertex(nm("v"), {0.62, 0.05});
    s.crossed(nm("eSv"), S, nm("v"), nm("ewE"), nm("w"), E, nm("x"), {0.5, 0.12});
    s.uncrossed(nm("cS"), S, nm("w"));
    s.uncrossed(nm("cm"), nm("w"), nm("v"));
    s.uncrossed(nm("cE"), nm("v"), E);
    if (connected) {
        s.place(D, {0.5, -0.9});
        s.anchor_after(D, d_out, 0.0);
        s.split_existing(oe.name, nm("k"), D, nm("w"), nm("m"), {0.45, 0.0},
                         {DartRef{oe.name, S}, DartRef{nm("k"), D}, DartRef{oe.name, E},
                          DartRef{nm("k"), nm("w")}});
    }
    s.commit();
    rebake();

    std::vector<std::string> poles{S, E};
    std::sort(poles.begin(), poles.end());
    return {'B', poles, {nm("x")}};
}

void Planter::plant_kite(DartId side_dart, const std::string& prefix) {
    const Dart& d = baked_.dart(side_dart);
    const auto& oe = baked_.edge(baked_.pedge(d.pedge).original);
    if (oe.crossing != kNone) throw ValidationError("kite edge must be uncrossed");
    FaceId f1 = baked_.face_of(side_dart), f2 = baked_.face_of(d.twin);
    auto third = [&](FaceId f) -> std::string {
        const auto& walk = baked_.face(f).darts;
        if (walk.size() != 3) throw ValidationError("kite requires triangular faces");
        for (DartId w : walk) {
            NodeId n = baked_.dart(w).origin;
            if (baked_.is_dummy(n)) throw ValidationError("kite faces must have real corners");
            if (n != d.origin && n != d.head) return baked_.node_name(n);
        }
        throw ValidationError("kite face has no third corner");
    };
    std::string S = baked_.node_name(d.origin), E = baked_.node_name(d.head);
    std::string c = third(f1), dd = third(f2);
    if (c == dd || model_.has_edge_between(c, dd))
        throw ValidationError("kite corners already joined");

    auto out_ref_at = [&](FaceId f, const std::string& corner) -> DartRef {
        for (DartId w : baked_.face(f).darts) {
            const Dart& wd = baked_.dart(w);
            if (baked_.node_name(wd.origin) == corner)
                return {baked_.edge(baked_.pedge(wd.pedge).original).name,
                        baked_.node_name(wd.head)};
        }
        throw ValidationError("corner not on face");
    };

    Session s(model_);
    s.place(S, {0, 0});
    s.place(E, {1, 0});
    s.place(c, {0.5, 0.9});
    s.place(dd, {0.5, -0.9});
    s.anchor_after(c, out_ref_at(f1, c), 0.0);
    s.anchor_after(dd, out_ref_at(f2, dd), 0.0);
    std::string m = prefix + "_x", conn = prefix + "_e";
    s.split_existing(oe.name, conn, c, dd, m, {0.5, 0.0},
                     {DartRef{oe.name, E}, DartRef{conn, c}, DartRef{oe.name, S},
                      DartRef{conn, dd}});
    s.commit();
    rebake();
}

void Planter::insert_vertex(FaceId f, const std::string& name) {
    FaceFrame fr = frame_of(baked_, f);
    Session s(model_);
    for (int i = 0; i < 3; ++i) {
        s.place(fr.corner[size_t(i)], fr.cpos[size_t(i)]);
        s.anchor_after(fr.corner[size_t(i)], fr.out_ref[size_t(i)],
                       ang(fr.cpos[size_t(i)], fr.cpos[size_t((i + 1) % 3)]));
    }
    s.new_vertex(name, {0.5, 0.3});
    for (int i = 0; i < 3; ++i)
        s.uncrossed(name + "_e" + std::to_string(i), name, fr.corner[size_t(i)]);
    s.commit();
    rebake();
}

void Planter::set_outer(const std::string& at, const std::string& edge) {
    model_.outer_at = at;
    model_.outer_edge = edge;
    rebake();
}

// --- nested triangles ---

namespace {
std::string rv(int l, int j) {
    return "r" + std::to_string(l) + "_" + std::to_string(((j % 3) + 3) % 3);
}
std::string ring_e(int l, int j) {
    return "g" + std::to_string(l) + "_" + std::to_string(((j % 3) + 3) % 3);
}
std::string rad_e(int l, int j) {
    return "a" + std::to_string(l) + "_" + std::to_string(((j % 3) + 3) % 3);
}
std::string dia_e(int l, int j) {
    return "d" + std::to_string(l) + "_" + std::to_string(((j % 3) + 3) % 3);
}
}  // namespace

NestedTriangleGraph nested_triangles(int i) {
    if (i < 1) throw ValidationError("nested_triangles requires i >= 1");
    GraphModel m;
    for (int l = 1; l <= i; ++l)
        for (int j = 0; j < 3; ++j) m.vertices.push_back(rv(l, j));
    for (int l = 1; l <= i; ++l)
        for (int j = 0; j < 3; ++j) m.edges.push_back({ring_e(l, j), rv(l, j), rv(l, j + 1)});
    for (int l = 1; l < i; ++l)
        for (int j = 0; j < 3; ++j) {
            m.edges.push_back({rad_e(l, j), rv(l, j), rv(l + 1, j)});
            m.edges.push_back({dia_e(l, j), rv(l, j), rv(l + 1, j + 1)});
        }
    for (int l = 1; l <= i; ++l)
        for (int j = 0; j < 3; ++j) {
            std::vector<DartRef> rot;
            if (l < i) {
                rot.push_back({rad_e(l, j), rv(l + 1, j)});
                rot.push_back({dia_e(l, j), rv(l + 1, j + 1)});
            }
            rot.push_back({ring_e(l, j), rv(l, j + 1)});
            if (l > 1) {
                rot.push_back({rad_e(l - 1, j), rv(l - 1, j)});
                rot.push_back({dia_e(l - 1, j - 1), rv(l - 1, j - 1)});
            }
            rot.push_back({ring_e(l, j - 1), rv(l, j - 1)});
            m.rotation[rv(l, j)] = rot;
        }
    m.outer_at = rv(i, 0);
    m.outer_edge = ring_e(i, 2);

    NestedTriangleGraph out;
    out.level = i;
    out.graph = OnePlaneGraph::bake(m);

    for (int l = 1; l < i; ++l)
        for (int j = 0; j < 3; ++j)
            out.t_faces.push_back({rv(l, j), rv(l + 1, j + 1), rv(l, j + 1)});
    out.t_faces.push_back({rv(i, 0), rv(i, 1), rv(i, 2)});
    out.nt_faces.push_back({rv(1, 0), rv(1, 1), rv(1, 2)});
    for (int l = 1; l < i; ++l)
        for (int j = 0; j < 3; ++j)
            out.nt_faces.push_back({rv(l + 1, j), rv(l, j), rv(l + 1, j + 1)});

    if (int(out.t_faces.size()) != 3 * i - 2)
        throw ValidationError("T-face marking count mismatch");
    if (i >= 2) {
        // no two T-faces share an edge
        const auto& g = out.graph;
        std::set<PedgeId> seen;
        for (const auto& tf : out.t_faces) {
            std::set<std::string> want(tf.begin(), tf.end());
            bool found = false;
            for (FaceId fc = 0; fc < g.face_count() && !found; ++fc) {
                const auto& walk = g.face(fc).darts;
                if (walk.size() != 3) continue;
                std::set<std::string> got;
                for (DartId d : walk) got.insert(g.node_name(g.dart(d).origin));
                if (got != want) continue;
                for (DartId d : walk)
                    if (!seen.insert(g.dart(d).pedge).second)
                        throw ValidationError("T-faces share an edge");
                found = true;
            }
            if (!found) throw ValidationError("marked T-face not found");
        }
    }
    return out;
}

LowerBoundGraph lower_bound_graph(int np) {
    if (np % 3 != 0 || np < 6)
        throw ValidationError("lower_bound_graph requires n_p >= 6 with n_p mod 3 = 0");
    int i = np / 3;
    auto nt = nested_triangles(i);

    LowerBoundGraph out;
    out.np = np;
    out.theorem2_applies = np > 8;

    Planter pl(nt.graph.model());
    std::map<std::string, Planter::LensInfo> lenses;
    std::string outer_at, outer_edge;
    int k = 0;
    for (const auto& tf : nt.t_faces) {
        FaceId f = pl.find_face({tf.begin(), tf.end()});
        auto plant = pl.plant_t_face(f, "f" + std::to_string(k++));
        for (auto& pc : plant.planted) out.planted.push_back(pc);
        for (auto& [side, li] : plant.lens_by_side) {
            if (lenses.count(side)) throw ValidationError("side planted twice: " + side);
            lenses[side] = li;
            if (outer_at.empty()) {
                // outer face: the channel between this lens and the gadget
                outer_at = li.s_corner;
                outer_edge = li.arc_edge;
            }
        }
    }
    int nk = 0;
    for (const auto& ntf : nt.nt_faces) {
        FaceId f = pl.find_face({ntf.begin(), ntf.end()});
        pl.plant_nt_face(f, "n" + std::to_string(nk++), lenses);
    }
    pl.set_outer(outer_at, outer_edge);
    out.graph = pl.graph();

    // cross-validate against the independent detector
    auto found = detect_all(out.graph);
    std::set<std::string> found_keys, want_keys;
    for (const auto& f : found) found_keys.insert(f.key);
    for (const auto& p : out.planted) {
        std::string key(1, p.kind);
        key += "(";
        for (size_t j = 0; j < p.poles.size(); ++j) key += (j ? "," : "") + p.poles[j];
        key += ")@{";
        for (size_t j = 0; j < p.crossings.size(); ++j) key += (j ? "," : "") + p.crossings[j];
        key += "}";
        want_keys.insert(key);
    }
    if (found_keys != want_keys)
        throw ValidationError("lower_bound_graph: detector disagrees with the planted set (" +
                              std::to_string(found_keys.size()) + " found vs " +
                              std::to_string(want_keys.size()) + " planted)");
    for (size_t a = 0; a < found.size(); ++a)
        for (size_t b = a + 1; b < found.size(); ++b) {
            std::vector<FaceId> inter;
            std::set_intersection(found[a].interior.begin(), found[a].interior.end(),
                                  found[b].interior.begin(), found[b].interior.end(),
                                  std::back_inserter(inter));
            if (!inter.empty())
                throw ValidationError("lower_bound_graph: interiors overlap: " + found[a].key +
                                      " and " + found[b].key);
        }
    if (!is_three_connected(out.graph))
        throw ValidationError("lower_bound_graph: result is not 3-connected");
    return out;
}

// --- random triangulations, kites, corpus ---

namespace {

GraphModel random_triangulation(int n, std::mt19937_64& rng) {
    if (n < 4) throw ValidationError("triangulation requires n >= 4");
    GraphModel m;
    auto vn = [](int k) { return "v" + std::to_string(k); };
    auto en = [](int a, int b) {
        return "e" + std::to_string(std::min(a, b)) + "_" + std::to_string(std::max(a, b));
    };
    for (int k = 0; k < 4; ++k) m.vertices.push_back(vn(k));
    auto add_edge = [&](int a, int b) { m.edges.push_back({en(a, b), vn(a), vn(b)}); };
    add_edge(0, 1);
    add_edge(1, 2);
    add_edge(2, 0);
    add_edge(3, 0);
    add_edge(3, 1);
    add_edge(3, 2);
    m.rotation[vn(0)] = {{en(0, 1), vn(1)}, {en(0, 3), vn(3)}, {en(0, 2), vn(2)}};
    m.rotation[vn(1)] = {{en(1, 2), vn(2)}, {en(1, 3), vn(3)}, {en(0, 1), vn(0)}};
    m.rotation[vn(2)] = {{en(0, 2), vn(0)}, {en(2, 3), vn(3)}, {en(1, 2), vn(1)}};
    m.rotation[vn(3)] = {{en(2, 3), vn(2)}, {en(0, 3), vn(0)}, {en(1, 3), vn(1)}};
    m.outer_at = vn(0);
    m.outer_edge = en(0, 2);

    std::vector<std::array<int, 3>> faces{{0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
    for (int k = 4; k < n; ++k) {
        size_t fi = size_t(rng() % faces.size());
        auto [a, b, c] = faces[fi];
        m.vertices.push_back(vn(k));
        add_edge(k, a);
        add_edge(k, b);
        add_edge(k, c);
        m.rotation[vn(k)] = {{en(k, a), vn(a)}, {en(k, b), vn(b)}, {en(k, c), vn(c)}};
        auto insert_after = [&](int at, int towards, int nw) {
            auto& rot = m.rotation[vn(at)];
            auto it = std::find(rot.begin(), rot.end(), DartRef{en(at, towards), vn(towards)});
            if (it == rot.end()) throw ValidationError("triangulation bookkeeping broke");
            rot.insert(it + 1, DartRef{en(at, nw), vn(nw)});
        };
        insert_after(a, b, k);
        insert_after(b, c, k);
        insert_after(c, a, k);
        faces[fi] = {a, b, k};
        faces.push_back({b, c, k});
        faces.push_back({c, a, k});
    }
    return m;
}

}  // namespace

CorpusInstance kite_instance(int n, std::uint64_t seed, int kites, int planted_b) {
    std::mt19937_64 rng(seed);
    Planter pl(random_triangulation(n, rng));

    int made_kites = 0;
    for (int t = 0; t < kites; ++t) {
        const auto& g = pl.graph();
        std::vector<DartId> cands;
        for (DartId d = 0; d < g.dart_count(); ++d) {
            const Dart& dd = g.dart(d);
            if (dd.origin > dd.head) continue;
            const auto& oe = g.edge(g.pedge(dd.pedge).original);
            if (oe.crossing != kNone) continue;
            bool ok = true;
            std::vector<std::string> thirds;
            for (DartId side : {d, dd.twin}) {
                const auto& fw = g.face(g.face_of(side));
                if (fw.darts.size() != 3 || fw.outer) {
                    ok = false;
                    break;
                }
                for (DartId w : fw.darts) {
                    NodeId nn = g.dart(w).origin;
                    if (g.is_dummy(nn)) ok = false;
                    if (nn != dd.origin && nn != dd.head) thirds.push_back(g.node_name(nn));
                }
            }
            if (!ok || thirds.size() != 2 || thirds[0] == thirds[1]) continue;
            if (pl.model().has_edge_between(thirds[0], thirds[1])) continue;
            cands.push_back(d);
        }
        if (cands.empty()) break;
        pl.plant_kite(cands[size_t(rng() % cands.size())], "kt" + std::to_string(t));
        ++made_kites;
    }

    int made_b = 0;
    std::set<std::string> used_sides;
    for (int t = 0; t < planted_b; ++t) {
        const auto& g = pl.graph();
        std::vector<DartId> cands;
        for (DartId d = 0; d < g.dart_count(); ++d) {
            const Dart& dd = g.dart(d);
            const auto& oe = g.edge(g.pedge(dd.pedge).original);
            if (oe.crossing != kNone || used_sides.count(oe.name)) continue;
            bool ok = true;
            // the near face hosts the lens, the far one the connector corner
            for (DartId side : {d, dd.twin}) {
                const auto& fw = g.face(g.face_of(side));
                if (fw.outer || fw.darts.size() != 3) ok = false;
                for (DartId w : fw.darts)
                    if (ok && g.is_dummy(g.dart(w).origin)) ok = false;
            }
            if (ok) cands.push_back(d);
        }
        if (cands.empty()) break;
        DartId pick = cands[size_t(rng() % cands.size())];
        used_sides.insert(
            pl.graph().edge(pl.graph().pedge(pl.graph().dart(pick).pedge).original).name);
        pl.plant_b_lens(pick, "pb" + std::to_string(t), true);
        ++made_b;
    }

    CorpusInstance out;
    out.name = "kite_n" + std::to_string(n) + "_s" + std::to_string(seed) + "_k" +
               std::to_string(made_kites) + "_b" + std::to_string(made_b);
    out.graph = pl.graph();
    out.planted_b = made_b;
    out.kites = made_kites;
    return out;
}

std::vector<CorpusInstance> kite_corpus(int n, std::uint64_t seed) {
    std::vector<CorpusInstance> out;
    out.push_back(kite_instance(n, seed, 0, 0));
    if (n >= 6) {
        out.push_back(kite_instance(n, seed + 1, std::max(1, n / 6), 0));
        out.push_back(kite_instance(n, seed + 2, std::max(1, n / 8), 2));
        out.push_back(kite_instance(n, seed + 3, 0, 3));
    }
    return out;
}

// --- fixtures ---

namespace {
GraphModel triangle_model(const std::string& a, const std::string& b, const std::string& c) {
    GraphModel m;
    m.vertices = {a, b, c};
    m.edges = {{"s0", a, b}, {"s1", b, c}, {"s2", c, a}};
    m.rotation[a] = {{"s0", b}, {"s2", c}};
    m.rotation[b] = {{"s1", c}, {"s0", a}};
    m.rotation[c] = {{"s2", a}, {"s1", b}};
    m.outer_at = b;
    m.outer_edge = "s0";
    return m;
}

FaceId inner_face(const OnePlaneGraph& g) {
    for (FaceId f = 0; f < g.face_count(); ++f)
        if (!g.face(f).outer) return f;
    throw ValidationError("no inner face");
}
}  // namespace

OnePlaneGraph fig1a() {
    Planter pl(triangle_model("u", "v", "w"));
    pl.plant_t_face(inner_face(pl.graph()), "t", /*with_lenses=*/false, /*with_chords=*/false);
    return pl.graph();
}

OnePlaneGraph nested_separating_fixture() {
    Planter pl(triangle_model("u", "v", "w"));
    pl.plant_t_face(inner_face(pl.graph()), "t", false, false);
    const auto& g = pl.graph();
    EdgeId ring = g.edge_between(g.node_id("t_v"), g.node_id("t_w"));
    DartId d0 = g.pedge(g.edge(ring).pedges[0]).darts[0];
    DartId pick = g.face(g.face_of(d0)).darts.size() == 6 ? d0 : g.dart(d0).twin;
    pl.plant_b_lens(pick, "bx");
    return pl.graph();
}

OnePlaneGraph b_star_fixture(int count) {
    if (count < 1 || count > 5) throw ValidationError("b_star_fixture supports 1..5 arms");
    int rim = std::max(count, 3);
    GraphModel m;
    m.vertices.push_back("u");
    auto tn = [](int j) { return "t" + std::to_string(j); };
    for (int j = 0; j < rim; ++j) m.vertices.push_back(tn(j));
    auto hub_e = [](int j) { return "h" + std::to_string(j); };
    auto rim_e = [](int j) { return "g" + std::to_string(j); };
    std::vector<DartRef> hub_rot;
    for (int j = 0; j < rim; ++j) {
        m.edges.push_back({hub_e(j), "u", tn(j)});
        m.edges.push_back({rim_e(j), tn(j), tn((j + 1) % rim)});
        hub_rot.push_back({hub_e(j), tn(j)});
    }
    m.rotation["u"] = hub_rot;
    for (int j = 0; j < rim; ++j)
        m.rotation[tn(j)] = {{rim_e(j), tn((j + 1) % rim)},
                             {hub_e(j), "u"},
                             {rim_e((j + rim - 1) % rim), tn((j + rim - 1) % rim)}};
    m.outer_at = tn(0);
    m.outer_edge = rim_e(rim - 1);

    Planter pl(m);
    for (int j = 0; j < count; ++j) {
        const auto& g = pl.graph();
        EdgeId he = g.edge_id(hub_e(j));
        DartId d = g.dart_from(g.fragment_at(he, g.node_id("u")), g.node_id("u"));
        pl.plant_b_lens(d, "s" + std::to_string(j), true);
    }
    return pl.graph();
}

}  // namespace opvr
