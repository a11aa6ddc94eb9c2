#include "opvr/regions.hpp"

#include <algorithm>
#include <set>

namespace opvr {

RegionSplit region_split(const OnePlaneGraph& g, const std::vector<DartId>& curve) {
    if (curve.size() < 2) throw ValidationError("region curve too short");
    std::set<NodeId> nodes;
    std::set<PedgeId> cut;
    for (size_t i = 0; i < curve.size(); ++i) {
        const Dart& d = g.dart(curve[i]);
        const Dart& dn = g.dart(curve[(i + 1) % curve.size()]);
        if (d.head != dn.origin) throw ValidationError("region curve is not a closed walk");
        if (!nodes.insert(d.origin).second) throw ValidationError("region curve is not simple");
        if (!cut.insert(d.pedge).second) throw ValidationError("region curve repeats an edge");
    }

    std::vector<char> reached(size_t(g.face_count()), 0);
    std::vector<FaceId> stack{g.outer_face()};
    reached[size_t(g.outer_face())] = 1;
    while (!stack.empty()) {
        FaceId f = stack.back();
        stack.pop_back();
        for (DartId d : g.face(f).darts) {
            if (cut.count(g.dart(d).pedge)) continue;
            FaceId nf = g.face_of(g.dart(d).twin);
            if (!reached[size_t(nf)]) {
                reached[size_t(nf)] = 1;
                stack.push_back(nf);
            }
        }
    }

    RegionSplit out;
    for (FaceId f = 0; f < g.face_count(); ++f)
        (reached[size_t(f)] ? out.outside : out.inside).push_back(f);
    if (out.inside.empty()) throw ValidationError("region curve does not separate any face");
    return out;
}

bool vertex_inside(const OnePlaneGraph& g, NodeId v, const std::vector<FaceId>& inside_sorted) {
    for (DartId d : g.darts_at(v)) {
        FaceId f = g.face_of(d);
        if (!std::binary_search(inside_sorted.begin(), inside_sorted.end(), f)) return false;
    }
    return !g.darts_at(v).empty();
}

}  // namespace opvr
