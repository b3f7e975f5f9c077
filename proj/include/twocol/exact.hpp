#pragma once

#include <cstdint>
#include <optional>

#include "twocol/ordering.hpp"

namespace twocol {

enum class LowerBoundStatus { Infeasible, Feasible, Timeout };

struct LowerBoundResult {
    LowerBoundStatus status;
    std::optional<Ordering> witness; // for Feasible
    long long nodes = 0;
    double seconds = 0.0;
};

// Ground-truth solver over subsets of V\C.  The key fact making the suffix DP
// work: when v is placed immediately below the already-placed top set T, its
// back set is a function of (v, T) alone, because the later-common-neighbor
// clause only ever looks at T and the C clause ignores positions entirely.
class ExactSolver {
public:
    ExactSolver(const PlaneGraph& g, const VertexSet& C, const VertexSet& K, int n_limit = 22);
    // Back sets only ever read the adjacency, so abstract (multi)graphs are
    // accepted as well: vertices 0..n-1 plus an edge list (duplicates allowed).
    ExactSolver(int n, const std::vector<std::pair<VertexId, VertexId>>& edges, const VertexSet& C,
                const VertexSet& K, int n_limit = 22);

    int size() const { return m_; }

    // Smallest d+1 over K-prefix orderings (relative to C).
    int col2() const;
    // Witness ordering with all back sets <= d, if one exists.
    std::optional<Ordering> feasible(int d) const;

private:
    int m_ = 0;
    std::vector<VertexId> id_of_;        // index -> vertex id

    void init(const std::vector<VertexId>& verts,
              const std::vector<std::pair<VertexId, VertexId>>& edges, const VertexSet& C,
              const VertexSet& K, int n_limit);
    std::vector<std::uint64_t> adj_;     // among V\C
    std::vector<std::uint64_t> commonc_; // pairs with a shared neighbor in C
    std::uint64_t kmask_ = 0;
    std::uint64_t nonk_ = 0;

    std::uint64_t back_bits(int v, std::uint64_t top) const;
    bool may_place(int v, std::uint64_t top) const;
    std::vector<std::uint8_t> run_dp() const;

    friend struct LowerBoundSearch;
    friend LowerBoundResult prove_lower_bound(const PlaneGraph& g, int d, double budget_seconds);
};

// Convenience wrappers.
int col2_exact(const PlaneGraph& g, const VertexSet& C = {}, const VertexSet& K = {},
               int n_limit = 22);
std::optional<Ordering> feasible_d(const PlaneGraph& g, const VertexSet& C, const VertexSet& K,
                                   int d, int n_limit = 22);

// Branch-and-bound over backward placement; Infeasible certifies col2(g) > d.
// Placement of a vertex is forced when it has at most two unplaced neighbors:
// moving such a vertex to the current top of any completion changes other back
// sets by (gained mediated partners) - (the vertex itself) <= ν - 2 <= 0, so
// the commitment never loses feasibility.  A forced placement with a larger
// candidate back set is not safe in general; see the fuzz test.
LowerBoundResult prove_lower_bound(const PlaneGraph& g, int d, double budget_seconds);

} // namespace twocol
