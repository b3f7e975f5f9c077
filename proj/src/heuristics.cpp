#include "twocol/heuristics.hpp"

#include <algorithm>
#include <random>

namespace twocol {

Ordering greedy_backward(const PlaneGraph& g, const VertexSet& C, const VertexSet& K,
                         std::optional<std::uint64_t> tie_break_seed) {
    std::vector<VertexId> dom;
    for (VertexId v : g.vertices())
        if (!C.count(v))
            dom.push_back(v);

    std::map<VertexId, std::vector<VertexId>> nbr;   // distinct, outside C
    std::map<VertexId, std::vector<VertexId>> cpart; // shares a C neighbor
    for (VertexId v : dom) {
        for (VertexId w : g.neighbors(v))
            if (!C.count(w))
                nbr[v].push_back(w);
    }
    {
        std::map<VertexId, std::set<VertexId>> tmp;
        for (VertexId c : C) {
            std::vector<VertexId> dn;
            for (VertexId x : g.neighbors(c))
                if (!C.count(x))
                    dn.push_back(x);
            for (VertexId x : dn)
                for (VertexId y : dn)
                    if (x != y)
                        tmp[x].insert(y);
        }
        for (auto& [v, s] : tmp)
            cpart[v].assign(s.begin(), s.end());
    }

    std::set<VertexId> top;
    auto back_size = [&](VertexId v) {
        std::set<VertexId> members;
        for (VertexId u : nbr[v])
            if (!top.count(u))
                members.insert(u);
        for (VertexId w : nbr[v])
            if (top.count(w))
                for (VertexId u : nbr[w])
                    if (u != v && !top.count(u))
                        members.insert(u);
        for (VertexId u : cpart[v])
            if (!top.count(u))
                members.insert(u);
        return static_cast<int>(members.size());
    };

    std::optional<std::mt19937_64> rng;
    if (tie_break_seed)
        rng.emplace(*tie_break_seed);

    std::vector<VertexId> seq; // built top-down
    int remaining_nonk = 0;
    for (VertexId v : dom)
        if (!K.count(v))
            ++remaining_nonk;

    while (top.size() < dom.size()) {
        std::vector<VertexId> ties;
        int best = -1;
        for (VertexId v : dom) {
            if (top.count(v))
                continue;
            if (K.count(v) && remaining_nonk > 0)
                continue;
            int b = back_size(v);
            if (best < 0 || b < best) {
                best = b;
                ties = {v};
            } else if (b == best) {
                ties.push_back(v);
            }
        }
        VertexId pick = ties.front();
        if (rng && ties.size() > 1)
            pick = ties[(*rng)() % ties.size()];
        top.insert(pick);
        if (!K.count(pick))
            --remaining_nonk;
        seq.push_back(pick);
    }

    Ordering ord;
    ord.seq.assign(seq.rbegin(), seq.rend());
    return ord;
}

} // namespace twocol
