#pragma once

#include "opvr/graph.hpp"

namespace opvr::fixtures {

/// Plane triangle a,b,c (no crossings).
GraphModel plane_triangle();

/// The B-configuration graph: u,v,w,z with (u,v) x (w,z) at p and the pole
/// edge (u,z); v,w inside.
GraphModel fig2a();

/// Planar K4 (d inside triangle a,b,c).
GraphModel k4_plane();

/// K4 drawn as a kite: square u,w,v,z with diagonals (u,v) x (w,z).
GraphModel k4_kite();

/// 3-connected W-configuration graph w(u,z), witnesses v,w,x,y inside,
/// no dependent B-configurations.
GraphModel w_fixture();

/// w_fixture plus the pole edge (u,z) routed outside past the bottom
/// crossing, giving exactly one dependent B-configuration.
GraphModel w_fixture_with_pole_edge();

}  // namespace opvr::fixtures
