#include "twocol/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>

namespace twocol {

PlaneGraph triangle_graph() {
    return PlaneGraph::from_faces({{0, 2, 1}, {0, 1, 2}}, 0);
}

PlaneGraph tetrahedron() {
    return PlaneGraph::from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}, 0);
}

PlaneGraph octahedron() {
    return PlaneGraph::from_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                   {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}},
                                  0);
}

PlaneGraph icosahedron() {
    // gyroelongated pentagonal bipyramid: poles 0 and 11, rings 1..5 and 6..10
    std::vector<std::vector<VertexId>> fs;
    auto u = [](int i) { return 1 + ((i % 5) + 5) % 5; };
    auto l = [](int i) { return 6 + ((i % 5) + 5) % 5; };
    for (int i = 0; i < 5; ++i)
        fs.push_back({0, u(i), u(i + 1)});
    for (int i = 0; i < 5; ++i)
        fs.push_back({u(i), l(i), u(i + 1)});
    for (int i = 0; i < 5; ++i)
        fs.push_back({u(i + 1), l(i), l(i + 1)});
    for (int i = 0; i < 5; ++i)
        fs.push_back({11, l(i + 1), l(i)});
    return PlaneGraph::from_faces(fs, 0);
}

PlaneGraph dual(const PlaneGraph& g) {
    auto faces = g.faces();
    std::vector<int> face_of_dart(g.darts().size() + 16, -1);
    {
        int max_dart = -1;
        for (DartId d : g.darts())
            max_dart = std::max(max_dart, d);
        face_of_dart.assign(max_dart + 1, -1);
    }
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        for (DartId d : faces[i].darts())
            face_of_dart[d] = i;

    GraphSpec spec;
    for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        spec.vertices.push_back(i);
    // dual dart i for primal dart i: from face(d) across the edge of d.
    for (DartId d : g.darts()) {
        GraphSpec::DartSpec ds;
        ds.id = d;
        ds.origin = face_of_dart[d];
        ds.twin = g.twin(d);
        // next spoke counterclockwise around the face = next dart of the walk
        ds.rnext = g.face_next(d);
        spec.darts.push_back(ds);
    }
    spec.outer = 0;
    PlaneGraph out = PlaneGraph::build(spec);
    return out;
}

PlaneGraph dodecahedron() {
    return dual(icosahedron());
}

PlaneGraph double_wheel(int n) {
    if (n < 3)
        throw Error(Errc::UnknownFamily, "double_wheel needs rim length >= 3");
    std::vector<std::vector<VertexId>> fs;
    for (int i = 0; i < n; ++i)
        fs.push_back({n, i, (i + 1) % n});
    for (int i = 0; i < n; ++i)
        fs.push_back({n + 1, (i + 1) % n, i});
    return PlaneGraph::from_faces(fs, 0);
}

PlaneGraph digon() {
    GraphSpec s;
    s.vertices = {0, 1};
    s.darts = {
        {0, 0, 1, 2}, {1, 1, 0, 3},
        {2, 0, 3, 0}, {3, 1, 2, 1},
    };
    s.outer = 0;
    return PlaneGraph::build(s);
}

PlaneGraph named_graph(const std::string& family, int n) {
    if (family == "triangle")
        return triangle_graph();
    if (family == "tetrahedron")
        return tetrahedron();
    if (family == "octahedron")
        return octahedron();
    if (family == "icosahedron")
        return icosahedron();
    if (family == "dodecahedron")
        return dodecahedron();
    if (family == "double_wheel")
        return double_wheel(n);
    if (family == "digon")
        return digon();
    throw Error(Errc::UnknownFamily, family);
}

PlaneGraph kleetope(const PlaneGraph& g) {
    g.validate();
    for (VertexId v : g.vertices())
        for (VertexId w : g.neighbors(v))
            if (g.multiplicity(v, w) > 1)
                throw Error(Errc::FacialCycle, "kleetope input must be simple");

    if (vertex_connectivity(g) < 2)
        throw Error(Errc::FacialCycle, "kleetope input must be 2-connected");

    PlaneGraph out = g;
    auto faces = g.faces(); // ordered by smallest dart id
    for (const FaceWalk& f : faces) {
        VertexId w = out.add_vertex();
        // first spoke into the corner of the first walk dart
        auto [a0, b0] = out.add_edge(w, std::nullopt, out.origin(f.darts()[0]), f.darts()[0]);
        (void)b0;
        DartId prev_spoke = a0;
        for (int i = 1; i < f.length(); ++i) {
            // after inserting the previous spoke, the corner before
            // f.darts()[i] still lies on the face being stellated
            auto [ai, bi] =
                out.add_edge(w, prev_spoke, out.origin(f.darts()[i]), f.darts()[i]);
            (void)bi;
            prev_spoke = ai;
        }
    }
    // outer face: the triangle containing the smallest dart
    out.set_outer(0);
#ifndef NDEBUG
    out.validate();
#endif
    return out;
}

namespace {

// deterministic uniform pick, avoiding implementation-defined distributions
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

} // namespace

PlaneGraph random_triangulation(int n, std::uint64_t seed, int flips) {
    if (n < 3)
        throw Error(Errc::UnknownFamily, "triangulation needs n >= 3");
    PlaneGraph g = triangle_graph();
    std::mt19937_64 rng(seed);

    auto stellate = [&](const FaceWalk& f) {
        VertexId w = g.add_vertex();
        auto [a0, b0] = g.add_edge(w, std::nullopt, g.origin(f.darts()[0]), f.darts()[0]);
        (void)b0;
        DartId prev = a0;
        for (int i = 1; i < f.length(); ++i) {
            auto [ai, bi] = g.add_edge(w, prev, g.origin(f.darts()[i]), f.darts()[i]);
            (void)bi;
            prev = ai;
        }
    };

    for (int k = 3; k < n; ++k) {
        auto faces = g.faces();
        std::vector<FaceWalk> inner;
        for (auto& f : faces)
            if (!f.contains(g.outer_dart()))
                inner.push_back(std::move(f));
        stellate(inner[pick(rng, inner.size())]);
    }

    // Diagonal flips: pick a dart, flip its edge when legal.
    auto outer_set = [&] {
        std::set<DartId> s;
        for (DartId d : g.face_of(g.outer_dart()).darts())
            s.insert(d);
        return s;
    };
    for (int t = 0; t < flips; ++t) {
        auto ds = g.darts();
        DartId d = ds[pick(rng, ds.size())];
        DartId tw = g.twin(d);
        auto outer = outer_set();
        if (outer.count(d) || outer.count(tw))
            continue;
        FaceWalk f1 = g.face_of(d), f2 = g.face_of(tw);
        if (f1.length() != 3 || f2.length() != 3)
            continue;
        if (f1.contains(g.outer_dart()) || f2.contains(g.outer_dart()))
            continue;
        VertexId u = g.origin(d), v = g.origin(tw);
        VertexId w1 = g.origin(g.face_next(g.face_next(d)));
        VertexId w2 = g.origin(g.face_next(g.face_next(tw)));
        if (w1 == w2 || g.adjacent(w1, w2))
            continue;
        if (g.multiplicity(u, v) > 1)
            continue;
        g.delete_edge(d);
        // the two triangles merged into a quadrilateral; insert the other diagonal
        DartId c1 = -1, c2 = -1;
        for (DartId x : g.darts_at(w1)) {
            FaceWalk f = g.face_of(x);
            if (f.length() == 4) {
                bool has_w2 = false;
                for (DartId y : f.darts())
                    if (g.origin(y) == w2)
                        has_w2 = true;
                if (has_w2) {
                    c1 = x;
                    for (DartId y : f.darts())
                        if (g.origin(y) == w2)
                            c2 = y;
                    break;
                }
            }
        }
        if (c1 < 0 || c2 < 0)
            throw Error(Errc::MalformedEmbedding, "flip lost its quadrilateral");
        g.add_chord(g.face_of(c1), c1, c2);
    }
#ifndef NDEBUG
    g.validate();
#endif
    return g;
}

int vertex_connectivity(const PlaneGraph& g) {
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    if (n <= 1)
        return 0;
    if (!g.connected())
        return 0;
    std::map<VertexId, int> idx;
    for (int i = 0; i < n; ++i)
        idx[vs[i]] = i;

    // unit-capacity vertex-split network: node 2i = in, 2i+1 = out
    auto maxflow = [&](int s, int t) {
        int N = 2 * n;
        std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
        const int INF = 1 << 20;
        for (int i = 0; i < n; ++i)
            cap[2 * i][2 * i + 1] = (i == s || i == t) ? INF : 1;
        for (int i = 0; i < n; ++i)
            for (VertexId w : g.neighbors(vs[i])) {
                int j = idx[w];
                cap[2 * i + 1][2 * j] = INF;
            }
        int flow = 0;
        while (true) {
            std::vector<int> par(N, -1);
            std::queue<int> q;
            q.push(2 * s + 1);
            par[2 * s + 1] = 2 * s + 1;
            while (!q.empty() && par[2 * t] < 0) {
                int x = q.front();
                q.pop();
                for (int y = 0; y < N; ++y)
                    if (cap[x][y] > 0 && par[y] < 0) {
                        par[y] = x;
                        q.push(y);
                    }
            }
            if (par[2 * t] < 0)
                break;
            for (int y = 2 * t; y != 2 * s + 1; y = par[y]) {
                cap[par[y]][y] -= 1;
                cap[y][par[y]] += 1;
            }
            ++flow;
            if (flow > n)
                break;
        }
        return flow;
    };

    int best = n - 1;
    bool any_pair = false;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.adjacent(vs[s], vs[t]))
                continue;
            any_pair = true;
            best = std::min(best, maxflow(s, t));
        }
    return any_pair ? best : n - 1;
}

} // namespace twocol
