#pragma once

#include <cstdint>
#include <string>

#include "twocol/plane_graph.hpp"

namespace twocol {

// Canonical rotation systems for the named families.  double_wheel takes the
// rim length n >= 3.
PlaneGraph named_graph(const std::string& family, int n = 0);

PlaneGraph triangle_graph();
PlaneGraph tetrahedron();
PlaneGraph octahedron();
PlaneGraph icosahedron();
PlaneGraph dodecahedron();
PlaneGraph double_wheel(int n);
PlaneGraph digon();

// Planar dual (vertex per face, rotation from the face walks).
PlaneGraph dual(const PlaneGraph& g);

// Stellate every face of a simple 2-connected plane graph; the outer face of
// the result is the triangle containing the smallest dart.
PlaneGraph kleetope(const PlaneGraph& g);

// Stacked triangulation plus random diagonal flips, deterministic under
// (n, seed, flips).  All non-outer faces are triangles; the initial triangle
// stays on the outer face.
PlaneGraph random_triangulation(int n, std::uint64_t seed, int flips = 0);

// Minimum vertex cut of a simple graph via unit-capacity max-flow over all
// non-adjacent pairs (n - 1 for complete graphs, 0 if disconnected).
int vertex_connectivity(const PlaneGraph& g);

} // namespace twocol
