#include "support/fixtures.hpp"

namespace opvr::fixtures {

namespace {
GraphModel::Edge E(const std::string& id, const std::string& u, const std::string& v) {
    return {id, u, v};
}
DartRef D(const std::string& edge, const std::string& toward) { return {edge, toward}; }
}  // namespace

GraphModel plane_triangle() {
    GraphModel m;
    m.vertices = {"a", "b", "c"};
    m.edges = {E("ab", "a", "b"), E("bc", "b", "c"), E("ca", "c", "a")};
    m.rotation["a"] = {D("ab", "b"), D("ca", "c")};
    m.rotation["b"] = {D("bc", "c"), D("ab", "a")};
    m.rotation["c"] = {D("ca", "a"), D("bc", "b")};
    m.outer_at = "b";
    m.outer_edge = "ab";
    return m;
}

GraphModel fig2a() {
    GraphModel m;
    m.vertices = {"u", "v", "w", "z"};
    m.edges = {E("uv", "u", "v"), E("wz", "w", "z"), E("uz", "u", "z")};
    m.crossings = {{"p", "uv", "wz"}};
    m.rotation["u"] = {D("uz", "z"), D("uv", "p")};
    m.rotation["z"] = {D("wz", "p"), D("uz", "u")};
    m.rotation["p"] = {D("uv", "u"), D("wz", "w"), D("uv", "v"), D("wz", "z")};
    m.rotation["v"] = {D("uv", "p")};
    m.rotation["w"] = {D("wz", "p")};
    m.outer_at = "z";
    m.outer_edge = "uz";
    return m;
}

GraphModel k4_plane() {
    GraphModel m;
    m.vertices = {"a", "b", "c", "d"};
    m.edges = {E("ab", "a", "b"), E("bc", "b", "c"), E("ca", "c", "a"),
               E("da", "d", "a"), E("db", "d", "b"), E("dc", "d", "c")};
    m.rotation["a"] = {D("ab", "b"), D("da", "d"), D("ca", "c")};
    m.rotation["b"] = {D("bc", "c"), D("db", "d"), D("ab", "a")};
    m.rotation["c"] = {D("ca", "a"), D("dc", "d"), D("bc", "b")};
    m.rotation["d"] = {D("dc", "c"), D("da", "a"), D("db", "b")};
    m.outer_at = "a";
    m.outer_edge = "ca";
    return m;
}

GraphModel k4_kite() {
    GraphModel m;
    m.vertices = {"u", "w", "v", "z"};
    m.edges = {E("uw", "u", "w"), E("wv", "w", "v"), E("vz", "v", "z"),
               E("zu", "z", "u"), E("uv", "u", "v"), E("wz", "w", "z")};
    m.crossings = {{"p", "uv", "wz"}};
    m.rotation["u"] = {D("uw", "w"), D("uv", "p"), D("zu", "z")};
    m.rotation["w"] = {D("wv", "v"), D("wz", "p"), D("uw", "u")};
    m.rotation["v"] = {D("vz", "z"), D("uv", "p"), D("wv", "w")};
    m.rotation["z"] = {D("vz", "v"), D("zu", "u"), D("wz", "p")};
    m.rotation["p"] = {D("uv", "v"), D("wz", "z"), D("uv", "u"), D("wz", "w")};
    m.outer_at = "u";
    m.outer_edge = "zu";
    return m;
}

GraphModel w_fixture() {
    GraphModel m;
    m.vertices = {"u", "z", "v", "w", "x", "y"};
    m.edges = {E("uv", "u", "v"), E("wz", "w", "z"), E("ux", "u", "x"), E("yz", "y", "z"),
               E("uw", "u", "w"), E("uy", "u", "y"), E("zv", "z", "v"), E("zx", "z", "x"),
               E("vw", "v", "w"), E("xy", "x", "y"), E("wy", "w", "y")};
    m.crossings = {{"p", "uv", "wz"}, {"q", "ux", "yz"}};
    m.rotation["u"] = {D("uw", "w"), D("uv", "p"), D("ux", "q"), D("uy", "y")};
    m.rotation["z"] = {D("wz", "p"), D("zv", "v"), D("zx", "x"), D("yz", "q")};
    m.rotation["p"] = {D("uv", "u"), D("wz", "w"), D("uv", "v"), D("wz", "z")};
    m.rotation["q"] = {D("yz", "z"), D("ux", "x"), D("yz", "y"), D("ux", "u")};
    m.rotation["v"] = {D("uv", "p"), D("vw", "w"), D("zv", "z")};
    m.rotation["w"] = {D("vw", "v"), D("wz", "p"), D("uw", "u"), D("wy", "y")};
    m.rotation["y"] = {D("xy", "x"), D("wy", "w"), D("uy", "u"), D("yz", "q")};
    m.rotation["x"] = {D("zx", "z"), D("xy", "y"), D("ux", "q")};
    m.outer_at = "u";
    m.outer_edge = "uv";
    return m;
}

GraphModel w_fixture_with_pole_edge() {
    GraphModel m = w_fixture();
    m.edges.push_back(E("uz", "u", "z"));
    m.rotation["u"] = {D("uw", "w"), D("uv", "p"), D("uz", "z"), D("ux", "q"), D("uy", "y")};
    m.rotation["z"] = {D("wz", "p"), D("zv", "v"), D("zx", "x"), D("yz", "q"), D("uz", "u")};
    return m;
}

}  // namespace opvr::fixtures
