#include "twocol/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>
#include <unordered_set>

namespace twocol {

namespace {
inline int popcount(std::uint64_t x) { return std::popcount(x); }
} // namespace

namespace {

std::vector<std::pair<VertexId, VertexId>> edges_of(const PlaneGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (DartId d : g.darts())
        if (d < g.twin(d))
            out.push_back({g.origin(d), g.head(d)});
    return out;
}

std::vector<VertexId> vertices_of(const PlaneGraph& g) { return g.vertices(); }

} // namespace

void ExactSolver::init(const std::vector<VertexId>& verts,
                       const std::vector<std::pair<VertexId, VertexId>>& edges, const VertexSet& C,
                       const VertexSet& K, int n_limit) {
    for (VertexId v : verts)
        if (!C.count(v))
            id_of_.push_back(v);
    m_ = static_cast<int>(id_of_.size());
    if (m_ > n_limit || m_ > 63)
        throw Error(Errc::TooLarge,
                    "instance has " + std::to_string(m_) + " orderable vertices");
    std::map<VertexId, int> idx;
    for (int i = 0; i < m_; ++i)
        idx[id_of_[i]] = i;

    adj_.assign(m_, 0);
    commonc_.assign(m_, 0);
    std::map<VertexId, std::uint64_t> cnb;
    for (auto [u, v] : edges) {
        bool uc = C.count(u), vc = C.count(v);
        if (!uc && !vc) {
            adj_[idx.at(u)] |= 1ull << idx.at(v);
            adj_[idx.at(v)] |= 1ull << idx.at(u);
        } else if (uc && !vc) {
            cnb[u] |= 1ull << idx.at(v);
        } else if (!uc && vc) {
            cnb[v] |= 1ull << idx.at(u);
        }
    }
    for (const auto& [c, nb] : cnb)
        for (int i = 0; i < m_; ++i)
            if (nb & (1ull << i))
                commonc_[i] |= nb & ~(1ull << i);
    for (VertexId k : K) {
        auto it = idx.find(k);
        if (it == idx.end())
            throw Error(Errc::MissingElement, "K vertex missing or in C");
        kmask_ |= 1ull << it->second;
    }
    nonk_ = (m_ == 64 ? ~0ull : (1ull << m_) - 1) & ~kmask_;
}

ExactSolver::ExactSolver(const PlaneGraph& g, const VertexSet& C, const VertexSet& K,
                         int n_limit) {
    init(vertices_of(g), edges_of(g), C, K, n_limit);
}

ExactSolver::ExactSolver(int n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                         const VertexSet& C, const VertexSet& K, int n_limit) {
    std::vector<VertexId> verts;
    for (int i = 0; i < n; ++i)
        verts.push_back(i);
    init(verts, edges, C, K, n_limit);
}

std::uint64_t ExactSolver::back_bits(int v, std::uint64_t top) const {
    std::uint64_t members = adj_[v] | commonc_[v];
    std::uint64_t med = adj_[v] & top;
    while (med) {
        int w = std::countr_zero(med);
        med &= med - 1;
        members |= adj_[w];
    }
    return members & ~top & ~(1ull << v);
}

bool ExactSolver::may_place(int v, std::uint64_t top) const {
    // K vertices go below everything else: only placeable once all non-K
    // vertices are already in the top set.
    if (kmask_ & (1ull << v))
        return (nonk_ & ~top) == 0;
    return true;
}

std::vector<std::uint8_t> ExactSolver::run_dp() const {
    if (m_ > 28)
        throw Error(Errc::TooLarge, "subset DP is limited to 28 vertices");
    std::uint64_t full = m_ == 0 ? 0 : (1ull << m_) - 1;
    std::vector<std::uint8_t> best(full + 1, 255);
    best[0] = 0;
    for (std::uint64_t mask = 1; mask <= full; ++mask) {
        std::uint8_t b = 255;
        std::uint64_t mm = mask;
        while (mm) {
            int v = std::countr_zero(mm);
            mm &= mm - 1;
            std::uint64_t rest = mask & ~(1ull << v);
            if (best[rest] == 255 || !may_place(v, rest))
                continue;
            std::uint8_t cost = std::max(best[rest],
                                         static_cast<std::uint8_t>(popcount(back_bits(v, rest))));
            b = std::min(b, cost);
        }
        best[mask] = b;
    }
    return best;
}

int ExactSolver::col2() const {
    if (m_ == 0)
        return 1;
    auto best = run_dp();
    std::uint64_t full = (1ull << m_) - 1;
    return best[full] + 1;
}

std::optional<Ordering> ExactSolver::feasible(int d) const {
    if (m_ == 0)
        return Ordering{};
    auto best = run_dp();
    std::uint64_t full = (1ull << m_) - 1;
    if (best[full] > d)
        return std::nullopt;
    // Peeling the full set removes the order-least element each time: the
    // removed vertex sits below the remaining suffix.  Smallest id first for
    // determinism.
    std::vector<VertexId> seq;
    std::uint64_t mask = full;
    while (mask) {
        for (int v = 0; v < m_; ++v) {
            if (!(mask & (1ull << v)))
                continue;
            std::uint64_t rest = mask & ~(1ull << v);
            if (best[rest] == 255 || !may_place(v, rest))
                continue;
            if (std::max<int>(best[rest], popcount(back_bits(v, rest))) <= d) {
                seq.push_back(id_of_[v]);
                mask = rest;
                break;
            }
        }
    }
    Ordering ord;
    ord.seq = std::move(seq);
    return ord;
}

int col2_exact(const PlaneGraph& g, const VertexSet& C, const VertexSet& K, int n_limit) {
    return ExactSolver(g, C, K, n_limit).col2();
}

std::optional<Ordering> feasible_d(const PlaneGraph& g, const VertexSet& C, const VertexSet& K,
                                   int d, int n_limit) {
    return ExactSolver(g, C, K, n_limit).feasible(d);
}

struct LowerBoundSearch {
    const ExactSolver& p;
    int d;
    std::chrono::steady_clock::time_point deadline;
    std::unordered_set<std::uint64_t> dead;
    long long nodes = 0;
    bool timed_out = false;
    std::vector<int> placed; // top-down

    bool expired() {
        if ((nodes & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            timed_out = true;
        return timed_out;
    }

    // true iff a completion of `top` exists
    bool search(std::uint64_t top) {
        ++nodes;
        std::uint64_t full = (1ull << p.m_) - 1;
        if (top == full)
            return true;
        if (expired() || dead.count(top))
            return false;

        std::uint64_t cand = 0;
        int forced = -1;
        for (int v = 0; v < p.m_; ++v) {
            if (top & (1ull << v))
                continue;
            if (!p.may_place(v, top))
                continue;
            if (popcount(p.back_bits(v, top)) > d)
                continue;
            cand |= 1ull << v;
            if (forced < 0 && popcount(p.adj_[v] & ~top) <= 2)
                forced = v;
        }
        if (!cand) {
            dead.insert(top);
            return false;
        }
        if (forced >= 0) {
            placed.push_back(forced);
            if (search(top | (1ull << forced)))
                return true;
            placed.pop_back();
            if (!timed_out)
                dead.insert(top);
            return false;
        }
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            placed.push_back(v);
            if (search(top | (1ull << v)))
                return true;
            placed.pop_back();
            if (timed_out)
                return false;
        }
        dead.insert(top);
        return false;
    }
};

LowerBoundResult prove_lower_bound(const PlaneGraph& g, int d, double budget_seconds) {
    ExactSolver p(g, {}, {}, 63);
    LowerBoundSearch s{p, d,
                       std::chrono::steady_clock::now() +
                           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(budget_seconds))};
    auto t0 = std::chrono::steady_clock::now();
    bool found = p.size() == 0 ? true : s.search(0);
    auto t1 = std::chrono::steady_clock::now();

    LowerBoundResult res;
    res.nodes = s.nodes;
    res.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (s.timed_out) {
        res.status = LowerBoundStatus::Timeout;
        return res;
    }
    if (!found) {
        res.status = LowerBoundStatus::Infeasible;
        return res;
    }
    res.status = LowerBoundStatus::Feasible;
    Ordering ord;
    for (auto it = s.placed.rbegin(); it != s.placed.rend(); ++it)
        ord.seq.push_back(p.id_of_[*it]);
    res.witness = std::move(ord);
    return res;
}

} // namespace twocol
