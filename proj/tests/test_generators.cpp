#include "doctest.h"

#include <map>

#include "twocol/generators.hpp"

using namespace twocol;

TEST_CASE("icosahedron: 12 vertices of degree 5, 20 triangular faces") {
    PlaneGraph g = icosahedron();
    g.validate();
    CHECK(g.vertex_count() == 12);
    CHECK(g.edge_count() == 30);
    auto fs = g.faces();
    CHECK(fs.size() == 20);
    for (const auto& f : fs)
        CHECK(f.length() == 3);
    for (VertexId v : g.vertices())
        CHECK(g.degree(v) == 5);
    CHECK(g.vertex_count() - g.edge_count() + g.euler_face_count() == 2);
}

TEST_CASE("dodecahedron: 20 vertices of degree 3, 12 pentagons") {
    PlaneGraph g = dodecahedron();
    g.validate();
    CHECK(g.vertex_count() == 20);
    CHECK(g.edge_count() == 30);
    auto fs = g.faces();
    CHECK(fs.size() == 12);
    for (const auto& f : fs)
        CHECK(f.length() == 5);
    for (VertexId v : g.vertices())
        CHECK(g.degree(v) == 3);
}

TEST_CASE("double wheel five: C5 plus two degree-5 apexes") {
    PlaneGraph g = double_wheel(5);
    g.validate();
    CHECK(g.vertex_count() == 7);
    CHECK(g.degree(5) == 5);
    CHECK(g.degree(6) == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(g.degree(i) == 4);
    for (const auto& f : g.faces())
        CHECK(f.length() == 3);
}

TEST_CASE("named dispatch and bad family") {
    CHECK(named_graph("digon").edge_count() == 2);
    CHECK(named_graph("tetrahedron").vertex_count() == 4);
    CHECK_THROWS_AS(named_graph("hypercube"), Error);
}

TEST_CASE("kleetope of the dodecahedron is the pentakis dodecahedron") {
    PlaneGraph g = kleetope(dodecahedron());
    g.validate();
    CHECK(g.vertex_count() == 32);
    CHECK(g.edge_count() == 90);
    CHECK(g.faces().size() == 60);
    std::map<int, int> degs;
    for (VertexId v : g.vertices())
        degs[g.degree(v)]++;
    CHECK(degs[5] == 12);
    CHECK(degs[6] == 20);
    // degree-5 vertices (the stellation vertices) are pairwise non-adjacent
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 5)
            continue;
        for (VertexId w : g.neighbors(v))
            CHECK(g.degree(w) == 6);
    }
    // simple
    for (VertexId v : g.vertices())
        for (VertexId w : g.neighbors(v))
            CHECK(g.multiplicity(v, w) == 1);
    // triangulation, outer face included
    for (const auto& f : g.faces())
        CHECK(f.length() == 3);
}

TEST_CASE("kleetope of the tetrahedron") {
    PlaneGraph g = kleetope(tetrahedron());
    g.validate();
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 18);
    CHECK(g.faces().size() == 12); // 4 faces stellated into 3 each
    for (const auto& f : g.faces())
        CHECK(f.length() == 3);
}

TEST_CASE("kleetope triples the face count of a triangulation") {
    PlaneGraph g = octahedron();
    PlaneGraph k = kleetope(g);
    CHECK(k.faces().size() == 3 * g.faces().size());
    // old degrees double, new degrees equal the stellated face length
    for (VertexId v : g.vertices())
        CHECK(k.degree(v) == 2 * g.degree(v));
}

TEST_CASE("random triangulations are valid and deterministic") {
    PlaneGraph a = random_triangulation(10, 1);
    a.validate();
    CHECK(a.vertex_count() == 10);
    CHECK(a.faces().size() == 2 * 10 - 4);
    for (const auto& f : a.faces())
        CHECK(f.length() == 3);

    PlaneGraph b = random_triangulation(10, 1);
    CHECK(a == b);

    PlaneGraph c = random_triangulation(10, 2);
    CHECK(!(a == c));

    PlaneGraph d = random_triangulation(3, 9);
    CHECK(d.vertex_count() == 3);

    // flips keep the triangulation property
    PlaneGraph e = random_triangulation(20, 5, 30);
    e.validate();
    for (const auto& f : e.faces())
        CHECK(f.length() == 3);
    CHECK(e.edge_count() == 3 * 20 - 6);
}

TEST_CASE("initial triangle stays on the outer face of stacked triangulations") {
    PlaneGraph g = random_triangulation(10, 1, 0);
    auto outer = g.outer_vertices();
    CHECK(outer == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("vertex connectivity of named graphs") {
    CHECK(vertex_connectivity(tetrahedron()) == 3);
    CHECK(vertex_connectivity(icosahedron()) == 5);
    CHECK(vertex_connectivity(dodecahedron()) == 3);
    CHECK(vertex_connectivity(octahedron()) == 4);
}

TEST_CASE("pentakis dodecahedron is 5-connected") {
    CHECK(vertex_connectivity(kleetope(dodecahedron())) == 5);
}
