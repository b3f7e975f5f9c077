#include "twocol/ordering.hpp"

#include <algorithm>
#include <string>

namespace twocol {

std::map<VertexId, int> Ordering::positions() const {
    std::map<VertexId, int> pos;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i)
        pos[seq[i]] = i;
    return pos;
}

std::vector<VertexId> back_set(const PlaneGraph& g, const VertexSet& C, const Ordering& ord,
                               VertexId v) {
    auto pos = ord.positions();
    auto pv = pos.find(v);
    if (pv == pos.end())
        throw Error(Errc::DomainMismatch, "vertex " + std::to_string(v) + " not in the ordering");
    std::set<VertexId> out;
    for (VertexId u : ord.seq) {
        if (pos[u] >= pv->second)
            break;
        bool in = g.adjacent(u, v);
        if (!in) {
            for (VertexId w : g.neighbors(v)) {
                if (!g.adjacent(u, w))
                    continue;
                if (C.count(w) || (pos.count(w) && pos[w] > pv->second)) {
                    in = true;
                    break;
                }
            }
        }
        if (in)
            out.insert(u);
    }
    return {out.begin(), out.end()};
}

VerifyResult verify(const Target& t, const Ordering& ord, int d) {
    const PlaneGraph& g = *t.g;
    auto domain = t.domain();
    std::vector<VertexId> sorted = ord.seq;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != domain)
        throw Error(Errc::DomainMismatch, "ordering is not a permutation of V minus C");

    VerifyResult res;

    // K-prefix rule: every K vertex before every non-K vertex.
    bool seen_non_k = false;
    for (VertexId v : ord.seq) {
        if (t.K.count(v)) {
            if (seen_non_k) {
                res.status = VerifyStatus::KPrefixViolation;
                res.offender = v;
                return res;
            }
        } else {
            seen_non_k = true;
        }
    }

    int n = ord.size();
    std::map<VertexId, int> pos = ord.positions();

    // Mark-based batch computation of all back sets.
    std::map<VertexId, std::vector<VertexId>> cpartners; // via a common neighbor in C
    for (VertexId c : t.C) {
        auto nb = g.neighbors(c);
        std::vector<VertexId> dn;
        for (VertexId x : nb)
            if (!t.C.count(x))
                dn.push_back(x);
        for (VertexId x : dn)
            for (VertexId y : dn)
                if (x != y)
                    cpartners[x].push_back(y);
    }

    BackProfile prof;
    for (int i = 0; i < n; ++i) {
        VertexId v = ord.seq[i];
        std::set<VertexId> members;
        auto consider = [&](VertexId u) {
            if (u != v && pos.count(u) && pos[u] < i)
                members.insert(u);
        };
        for (VertexId u : g.neighbors(v))
            consider(u);
        for (VertexId w : g.neighbors(v)) {
            if (t.C.count(w))
                continue;
            if (pos.count(w) && pos[w] > i)
                for (VertexId u : g.neighbors(w))
                    consider(u);
        }
        auto it = cpartners.find(v);
        if (it != cpartners.end())
            for (VertexId u : it->second)
                consider(u);

        if (static_cast<int>(members.size()) > d) {
            res.status = VerifyStatus::BackDegreeExceeded;
            res.offender = v;
            res.offender_back.assign(members.begin(), members.end());
            return res;
        }
        prof.max_back = std::max(prof.max_back, static_cast<int>(members.size()));
        prof.back_sets[v].assign(members.begin(), members.end());
    }
    res.profile = std::move(prof);
    return res;
}

int col2_from_ordering(const BackProfile& profile) {
    return profile.max_back + 1;
}

std::vector<VertexId> friends(const PlaneGraph& g, const VertexSet& C, const Ordering& ord,
                              VertexId u, VertexId v) {
    if (C.count(u))
        throw Error(Errc::DomainMismatch, "u must lie outside C");
    if (!g.adjacent(u, v))
        throw Error(Errc::NotNeighbors,
                    std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
    auto pos = ord.positions();
    auto pu = pos.find(u);
    if (pu == pos.end())
        throw Error(Errc::DomainMismatch, "u not in the ordering");

    auto common_c_neighbor = [&](VertexId x, VertexId y) {
        for (VertexId w : g.neighbors(x))
            if (C.count(w) && g.adjacent(y, w))
                return true;
        return false;
    };

    std::set<VertexId> out;
    for (VertexId w : ord.seq) {
        if (pos[w] >= pu->second)
            break;
        if (w == u)
            continue;
        if (w == v) {
            out.insert(w);
            continue;
        }
        if (!g.adjacent(v, w) || g.adjacent(u, w))
            continue;
        if (C.count(v)) {
            out.insert(w);
            continue;
        }
        bool v_later = pos.count(v) && pos[v] > pu->second;
        if (v_later && !common_c_neighbor(u, w))
            out.insert(w);
    }
    return {out.begin(), out.end()};
}

} // namespace twocol
