#pragma once

#include <cstdint>
#include <optional>

#include "twocol/ordering.hpp"

namespace twocol {

// Backward greedy: repeatedly place, among the unplaced eligible vertices
// (non-K while any remain), one minimizing the back set it would get under
// the current suffix.  Ties break by smallest id, or by a seeded draw when
// tie_break_seed is given.  The result always verifies at its own max_back.
Ordering greedy_backward(const PlaneGraph& g, const VertexSet& C, const VertexSet& K,
                         std::optional<std::uint64_t> tie_break_seed = std::nullopt);

} // namespace twocol
