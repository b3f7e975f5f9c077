#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "twocol/exact.hpp"
#include "twocol/generators.hpp"
#include "twocol/heuristics.hpp"

using namespace twocol;

namespace {

PlaneGraph star(int n) {
    GraphSpec s;
    s.vertices.push_back(0);
    for (int i = 1; i <= n; ++i)
        s.vertices.push_back(i);
    for (int i = 0; i < n; ++i) {
        DartId a = 2 * i, b = 2 * i + 1;
        s.darts.push_back({a, 0, b, (a + 2) % (2 * n)});
        s.darts.push_back({b, i + 1, a, b});
    }
    s.outer = 0;
    return PlaneGraph::build(s);
}

int greedy_bound(const PlaneGraph& g, const VertexSet& C = {}, const VertexSet& K = {}) {
    Ordering ord = greedy_backward(g, C, K);
    Target t(g, K, C);
    auto res = verify(t, ord, g.vertex_count());
    REQUIRE(res.ok());
    return res.profile.max_back;
}

} // namespace

TEST_CASE("greedy achieves max_back 1 on stars") {
    CHECK(greedy_bound(star(9)) == 1);
}

TEST_CASE("greedy on K4 reaches 3") {
    CHECK(greedy_bound(tetrahedron()) == 3);
}

TEST_CASE("greedy on the icosahedron stays within the degree ceiling") {
    int b = greedy_bound(icosahedron());
    int exact = col2_exact(icosahedron()) - 1;
    CHECK(b >= exact);
    CHECK(b <= 11);
}

TEST_CASE("greedy never beats the exact solver") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 25; ++it) {
        PlaneGraph g = random_triangulation(4 + (int)(rng() % 8), rng(), (int)(rng() % 5));
        CHECK(greedy_bound(g) >= col2_exact(g) - 1);
    }
}

TEST_CASE("greedy respects the K prefix") {
    PlaneGraph g = icosahedron();
    auto outer = g.outer_vertices();
    VertexSet K(outer.begin(), outer.end());
    Ordering ord = greedy_backward(g, {}, K);
    for (size_t i = 0; i < K.size(); ++i)
        CHECK(K.count(ord.seq[i]));
}

TEST_CASE("greedy is deterministic, including under a fixed tie-break seed") {
    PlaneGraph g = random_triangulation(30, 17, 10);
    auto a = greedy_backward(g, {}, {});
    auto b = greedy_backward(g, {}, {});
    CHECK(a.seq == b.seq);
    auto c = greedy_backward(g, {}, {}, 5);
    auto d = greedy_backward(g, {}, {}, 5);
    CHECK(c.seq == d.seq);
}
