#pragma once

// Independent brute-force oracle for two-coloring numbers: enumerates every
// ordering (respecting the K-prefix rule) and applies the three back-set
// clauses literally.  Deliberately shares no code with the library.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "twocol/plane_graph.hpp"

namespace oracle {

struct Graph {
    std::vector<int> verts;
    std::map<int, std::set<int>> adj; // distinct neighbors

    void add_edge(int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
};

inline Graph from_plane(const twocol::PlaneGraph& g) {
    Graph out;
    out.verts = g.vertices();
    for (int v : out.verts)
        out.adj[v] = {};
    for (int v : out.verts)
        for (int w : g.neighbors(v))
            out.add_edge(v, w);
    return out;
}

// max |L| over the given full ordering of V \ C (left = earliest).
inline int max_back_of(const Graph& g, const std::set<int>& C, const std::vector<int>& seq) {
    std::map<int, int> pos;
    for (int i = 0; i < (int)seq.size(); ++i)
        pos[seq[i]] = i;
    int worst = 0;
    for (int i = 0; i < (int)seq.size(); ++i) {
        int v = seq[i];
        int count = 0;
        for (int j = 0; j < i; ++j) {
            int u = seq[j];
            bool in = g.adj.at(u).count(v) > 0;
            if (!in) {
                for (int w : g.adj.at(u)) {
                    if (!g.adj.at(v).count(w))
                        continue;
                    if (C.count(w) || (pos.count(w) && pos[w] > i)) {
                        in = true;
                        break;
                    }
                }
            }
            if (in)
                ++count;
        }
        worst = std::max(worst, count);
    }
    return worst;
}

// min over all K-prefix orderings of (max back-set), i.e. col2 - 1.
inline int brute_min_back(const Graph& g, const std::set<int>& C = {},
                          const std::set<int>& K = {}) {
    std::vector<int> dom;
    for (int v : g.verts)
        if (!C.count(v))
            dom.push_back(v);
    std::sort(dom.begin(), dom.end());
    int best = (int)dom.size(); // upper bound
    std::vector<int> seq = dom;
    do {
        bool ok = true;
        bool seen_non_k = false;
        for (int v : seq) {
            if (K.count(v)) {
                if (seen_non_k) {
                    ok = false;
                    break;
                }
            } else {
                seen_non_k = true;
            }
        }
        if (!ok)
            continue;
        best = std::min(best, max_back_of(g, C, seq));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return best;
}

inline int brute_col2(const Graph& g, const std::set<int>& C = {}, const std::set<int>& K = {}) {
    return brute_min_back(g, C, K) + 1;
}

} // namespace oracle
