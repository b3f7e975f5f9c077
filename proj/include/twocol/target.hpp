#pragma once

#include <memory>

#include "twocol/plane_graph.hpp"

namespace twocol {

// The unit of recursion: a plane graph with the outer-boundary prefix set K
// (2 or 3 vertices, exactly the vertices on the outer face) and the
// exceptional set C (disjoint from K, each member with at most 4 neighbors
// outside C).  The graph is shared: steps that only move vertices into C
// reuse it, mutating steps clone it first.
struct Target {
    std::shared_ptr<const PlaneGraph> g;
    VertexSet K;
    VertexSet C;

    Target() = default;
    Target(PlaneGraph graph, VertexSet k, VertexSet c)
        : g(std::make_shared<PlaneGraph>(std::move(graph))), K(std::move(k)), C(std::move(c)) {}
    Target(std::shared_ptr<const PlaneGraph> graph, VertexSet k, VertexSet c)
        : g(std::move(graph)), K(std::move(k)), C(std::move(c)) {}

    // Vertices to be ordered.
    std::vector<VertexId> domain() const;

    void validate() const; // throws Error(BadC/KNotOnOuterFace/...) on violations
};

} // namespace twocol
