#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "twocol/exact.hpp"
#include "twocol/generators.hpp"

using namespace twocol;

namespace {

PlaneGraph k4() { return tetrahedron(); }

PlaneGraph square() {
    return PlaneGraph::from_faces({{0, 3, 2, 1}, {0, 1, 2, 3}}, 0);
}

PlaneGraph path(int n) {
    GraphSpec s;
    for (int i = 0; i < n; ++i)
        s.vertices.push_back(i);
    for (int i = 0; i + 1 < n; ++i) {
        DartId a = 2 * i, b = 2 * i + 1;
        // rotation at i: darts to i-1 and i+1
        s.darts.push_back({a, i, b, i > 0 ? 2 * (i - 1) + 1 : a});
        s.darts.push_back({b, i + 1, a, i + 2 < n ? 2 * (i + 1) : b});
    }
    s.outer = n > 1 ? 0 : -1;
    return PlaneGraph::build(s);
}

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

PlaneGraph single_vertex() {
    GraphSpec s;
    s.vertices = {0};
    s.outer = -1;
    return PlaneGraph::build(s);
}

} // namespace

TEST_CASE("small exact values, frozen after brute-force derivation") {
    CHECK(col2_exact(single_vertex()) == 1);

    CHECK(oracle::brute_col2(oracle::from_plane(k4())) == 4);
    CHECK(col2_exact(k4()) == 4);

    CHECK(oracle::brute_col2(oracle::from_plane(square())) == 3);
    CHECK(col2_exact(square()) == 3);

    CHECK(oracle::brute_col2(oracle::from_plane(star(5))) == 2);
    CHECK(col2_exact(star(5)) == 2);

    CHECK(oracle::brute_col2(oracle::from_plane(path(5))) == 2);
    CHECK(col2_exact(path(5)) == 2);
}

TEST_CASE("tetrahedron with the outer triangle as forced prefix still needs 4") {
    PlaneGraph g = k4();
    auto outer = g.outer_vertices();
    VertexSet K(outer.begin(), outer.end());
    CHECK(oracle::brute_col2(oracle::from_plane(g), {}, {K.begin(), K.end()}) == 4);
    CHECK(col2_exact(g, {}, K) == 4);
}

TEST_CASE("feasible_d on C4") {
    PlaneGraph g = square();
    CHECK(!feasible_d(g, {}, {}, 1));
    auto w = feasible_d(g, {}, {}, 2);
    REQUIRE(w);
    CHECK(oracle::max_back_of(oracle::from_plane(g), {}, w->seq) <= 2);
    // monotone in d
    CHECK(feasible_d(g, {}, {}, 3));
    // d = |V|-1 is always feasible
    CHECK(feasible_d(g, {}, {}, 3));
}

TEST_CASE("witness orderings satisfy the claimed bound") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        PlaneGraph g = random_triangulation(9, rng());
        int c2 = col2_exact(g);
        auto w = feasible_d(g, {}, {}, c2 - 1);
        REQUIRE(w);
        CHECK(oracle::max_back_of(oracle::from_plane(g), {}, w->seq) == c2 - 1);
        CHECK(!feasible_d(g, {}, {}, c2 - 2));
    }
}

TEST_CASE("relative variant with C and K agrees with brute force") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 15; ++it) {
        PlaneGraph g = random_triangulation(7, rng());
        // put one low-degree vertex into C when allowed
        VertexSet C;
        for (VertexId v : g.vertices())
            if (g.neighbors(v).size() <= 4) {
                C.insert(v);
                break;
            }
        VertexSet K;
        for (VertexId v : g.vertices())
            if (!C.count(v) && K.size() < 2)
                K.insert(v);
        int got = col2_exact(g, C, K);
        int want = oracle::brute_col2(oracle::from_plane(g), {C.begin(), C.end()},
                                      {K.begin(), K.end()});
        CHECK(got == want);
    }
}

TEST_CASE("solver refuses oversized instances") {
    PlaneGraph g = random_triangulation(24, 3);
    CHECK_THROWS_AS(col2_exact(g, {}, {}, 22), Error);
    CHECK(col2_exact(g, {}, {}, 24) >= 1); // raising the limit works
}

TEST_CASE("prove_lower_bound: C4 is infeasible at d=1") {
    auto res = prove_lower_bound(square(), 1, 10.0);
    CHECK(res.status == LowerBoundStatus::Infeasible);
}

TEST_CASE("prove_lower_bound: icosahedron is feasible at d=7") {
    auto res = prove_lower_bound(icosahedron(), 7, 30.0);
    REQUIRE(res.status == LowerBoundStatus::Feasible);
    REQUIRE(res.witness);
    CHECK(oracle::max_back_of(oracle::from_plane(icosahedron()), {}, res.witness->seq) <= 7);
}

TEST_CASE("prove_lower_bound agrees with the DP on small graphs") {
    std::mt19937_64 rng(4242);
    for (int it = 0; it < 10; ++it) {
        PlaneGraph g = random_triangulation(8, rng());
        int c2 = col2_exact(g);
        auto lo = prove_lower_bound(g, c2 - 2, 10.0);
        CHECK(lo.status == LowerBoundStatus::Infeasible);
        auto hi = prove_lower_bound(g, c2 - 1, 10.0);
        CHECK(hi.status == LowerBoundStatus::Feasible);
    }
}

TEST_CASE("timeout is reported as a result, not an error") {
    PlaneGraph g = kleetope(dodecahedron());
    auto res = prove_lower_bound(g, 6, 0.05);
    CHECK((res.status == LowerBoundStatus::Timeout || res.status == LowerBoundStatus::Infeasible));
}

TEST_CASE("exact solver equals brute force on all connected graphs up to 4 vertices") {
    // the full n<=5 + multigraph sweep runs in the acceptance suite
    for (int n = 1; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            oracle::Graph og;
            std::vector<std::pair<int, int>> all;
            for (int i = 0; i < n; ++i) {
                og.verts.push_back(i);
                og.adj[i] = {};
                for (int j = i + 1; j < n; ++j)
                    all.push_back({i, j});
            }
            for (int b = 0; b < pairs; ++b)
                if (mask & (1 << b))
                    og.add_edge(all[b].first, all[b].second);
            // connectivity
            std::vector<int> comp(n, -1);
            std::vector<int> stack{0};
            comp[0] = 0;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : og.adj[v])
                    if (comp[w] < 0) {
                        comp[w] = 0;
                        stack.push_back(w);
                    }
            }
            bool conn = true;
            for (int v = 0; v < n; ++v)
                conn = conn && comp[v] == 0;
            if (!conn)
                continue;

            std::vector<std::pair<VertexId, VertexId>> edges;
            for (int b = 0; b < pairs; ++b)
                if (mask & (1 << b))
                    edges.push_back(all[b]);
            CHECK(ExactSolver(n, edges, {}, {}).col2() == oracle::brute_col2(og));
        }
    }
}
