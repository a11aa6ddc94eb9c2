#include <sstream>

#include "opvr/compact.hpp"

namespace opvr {

namespace {
const char* kFills[] = {"#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc", "#fc9272",
                        "#c7e9c0", "#fdd0a2", "#dadaeb", "#d9d9d9", "#9edae5"};
}

std::string to_svg(const OpvrDrawing& d, bool labels) {
    const int unit = 20, margin = 20;
    long long w = d.width * unit + 2 * margin, h = d.height * unit + 2 * margin;
    auto X = [&](long long x) { return margin + x * unit; };
    auto Y = [&](long long y) { return margin + (d.height - y) * unit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    size_t idx = 0;
    for (const auto& p : d.polygons) {
        os << "  <path d=\"";
        for (size_t i = 0; i < p.corners.size(); ++i)
            os << (i ? "L" : "M") << X(p.corners[i].x) << " " << Y(p.corners[i].y) << " ";
        os << "Z\" fill=\"" << kFills[idx++ % 10]
           << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& v : d.visibilities)
        os << "  <line x1=\"" << X(v.from.x) << "\" y1=\"" << Y(v.from.y) << "\" x2=\"" << X(v.to.x)
           << "\" y2=\"" << Y(v.to.y) << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
    if (labels) {
        for (const auto& p : d.polygons) {
            long long cx = 0, cy = 0;
            for (const auto& pt : p.corners) {
                cx += pt.x;
                cy += pt.y;
            }
            cx /= (long long)p.corners.size();
            cy /= (long long)p.corners.size();
            os << "  <text x=\"" << X(cx) << "\" y=\"" << Y(cy)
               << "\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"middle\">"
               << p.vertex << "</text>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace opvr
