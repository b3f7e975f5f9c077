#pragma once

#include <array>
#include <string>

#include "twocol/ordering.hpp"

namespace twocol {

// Lexicographic size of a target: (n, -c, e_C, q, -t, e).  Every applied
// reduction strictly decreases it.
struct Measure {
    std::array<long long, 6> key{};

    auto operator<=>(const Measure&) const = default;
    std::string str() const;
};

Measure measure_of(const Target& t);

struct ReductionStep {
    enum class Kind {
        DeleteEdgeInC,
        DeleteIsolatedCVertex,
        JoinComponents,
        DeleteDigonEdge,
        AddChord,
        DeleteSmallCVertex,
        SuppressParallelAtC,
        MoveVertexToC,
        SplitOnCycle,
        MovePathToC,
        MoveCycleToC,
        Move61PathToC,
        BaseCase,
    };

    Kind kind = Kind::BaseCase;
    std::vector<VertexId> vertices;
    std::vector<DartId> darts;

    std::string str() const;
};

const char* kind_name(ReductionStep::Kind k);

struct TraceEntry {
    ReductionStep step;
    Measure before;
    std::vector<Measure> after; // one per child
};

using ReductionTrace = std::vector<TraceEntry>;

// Carries the offending target of a falsification event (an irreducible
// target or a failed re-verification), so callers can dump it for replay.
class FalsificationError : public Error {
public:
    FalsificationError(Errc code, const std::string& what, Target t)
        : Error(code, what), target(std::move(t)) {}

    Target target;
};

// Wraps (g, K0, C) into a proper target: |K| grows to 2 with fresh vertices
// if needed, enclosing edges are added inside the outer face so that the
// outer face is incident only with K, and components holding a vertex
// outside C are joined up eagerly.  A valid ordering of the result,
// restricted to V(g)\C, is valid for g (additions only shrink back sets on
// the original vertices).
Target normalize(const PlaneGraph& g, const VertexSet& K0, const VertexSet& C);

// First applicable reduction under the fixed priority scan; BaseCase when
// V\C is contained in K.  Throws FalsificationError(IrreducibleTarget) when
// nothing applies: by the underlying theorem this cannot happen for genuine
// plane-graph targets, so it signals a bug worth dumping.
ReductionStep find_reduction(const Target& t);

// Child target(s); SplitOnCycle yields two (outer closure first).
std::vector<Target> apply_step(const Target& t, const ReductionStep& step);

// Lifts child ordering(s) to the parent target.
Ordering reconstruct(const ReductionStep& step, const std::vector<Ordering>& children);

struct SolveOptions {
    bool certify = false;       // re-verify every reconstruction at d = 7
    ReductionTrace* trace = nullptr;
};

// Runs the reduction recursion to the base case and reconstructs a valid
// ordering: 7-two-degenerate relative to C with K first.
Ordering solve(const Target& t, const SolveOptions& opts = {});

// Theorem entry point: an ordering of all of V(g) with back sets of size at
// most 7 (so col2(g) <= 8), for an arbitrary plane graph.
Ordering col2_order_planar(const PlaneGraph& g, const SolveOptions& opts = {});

} // namespace twocol
