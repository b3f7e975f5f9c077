#pragma once

#include <map>
#include <vector>

#include "twocol/target.hpp"

namespace twocol {

// A linear order on a vertex set (earlier = smaller in the order).
struct Ordering {
    std::vector<VertexId> seq;

    int size() const { return static_cast<int>(seq.size()); }
    std::map<VertexId, int> positions() const;
};

// Back-set sizes of a checked ordering; col2 bound = max_back + 1.
struct BackProfile {
    std::map<VertexId, std::vector<VertexId>> back_sets;
    int max_back = 0;

    int col2_bound() const { return max_back + 1; }
};

enum class VerifyStatus { Valid, KPrefixViolation, BackDegreeExceeded };

struct VerifyResult {
    VerifyStatus status = VerifyStatus::Valid;
    VertexId offender = -1;               // order-least offending vertex on failure
    std::vector<VertexId> offender_back;  // its back set (for BackDegreeExceeded)
    BackProfile profile;                  // filled when valid

    bool ok() const { return status == VerifyStatus::Valid; }
};

// L_{G,C,<}(v): earlier vertices u (outside C) adjacent to v, or sharing a
// later common neighbor outside C, or sharing any common neighbor in C.
// The absolute back set is the C = {} case.
std::vector<VertexId> back_set(const PlaneGraph& g, const VertexSet& C, const Ordering& ord,
                               VertexId v);

// Checks that ord orders exactly V\C, K comes first, and every back set has
// size <= d.  Throws Error(DomainMismatch) if the domain is wrong; K/back
// violations are reported in the result.
VerifyResult verify(const Target& t, const Ordering& ord, int d);

int col2_from_ordering(const BackProfile& profile);

// Friends of u via its neighbor v (v may lie in C); their union over all
// neighbors of u is exactly back_set(u).
std::vector<VertexId> friends(const PlaneGraph& g, const VertexSet& C, const Ordering& ord,
                              VertexId u, VertexId v);

} // namespace twocol
