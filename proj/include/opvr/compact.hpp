#pragma once

#include <string>
#include <vector>

#include "opvr/graph.hpp"
#include "opvr/orthorep.hpp"

namespace opvr {

/// Integer-grid ortho-polygon visibility drawing.
struct OpvrDrawing {
    struct Pt {
        long long x = 0, y = 0;
        friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
    };
    struct Polygon {
        std::string vertex;
        std::vector<Pt> corners;  // ccw, no collinear triples
    };
    struct Vis {
        std::string edge;
        Pt from, to;
    };
    std::vector<Polygon> polygons;  // sorted by vertex name
    std::vector<Vis> visibilities;  // sorted by edge name
    long long width = 0, height = 0;
    int complexity = 0;
};

/// Realizes an orthogonal representation on the integer grid: bends become
/// corners, all inner faces are refined to rectangles, and coordinates come
/// from longest paths over the column/row constraint graphs.
OpvrDrawing compact(const OnePlaneGraph& g, const OrthoRep& rep);

/// The trivial drawing of a single vertex with no edges.
OpvrDrawing unit_square_drawing(const OnePlaneGraph& g);

std::string drawing_to_json(const OpvrDrawing& d);
OpvrDrawing drawing_from_json(const std::string& text);

std::string to_svg(const OpvrDrawing& d, bool labels = false);

}  // namespace opvr
