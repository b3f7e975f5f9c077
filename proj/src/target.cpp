#include "twocol/target.hpp"

#include <algorithm>
#include <string>

namespace twocol {

std::vector<VertexId> Target::domain() const {
    std::vector<VertexId> out;
    for (VertexId v : g->vertices())
        if (!C.count(v))
            out.push_back(v);
    return out;
}

void Target::validate() const {
    g->validate();
    if (K.size() < 2 || K.size() > 3)
        throw Error(Errc::KNotOnOuterFace, "|K| must be 2 or 3");
    for (VertexId v : K) {
        if (!g->has_vertex(v))
            throw Error(Errc::MissingElement, "K vertex " + std::to_string(v) + " missing");
        if (C.count(v))
            throw Error(Errc::BadC, "K and C intersect at " + std::to_string(v));
    }
    auto outer = g->outer_vertices();
    if (!std::equal(outer.begin(), outer.end(), K.begin(), K.end()) || outer.size() != K.size())
        throw Error(Errc::KNotOnOuterFace, "outer face must be incident with exactly K");
    for (VertexId v : C) {
        if (!g->has_vertex(v))
            throw Error(Errc::BadC, "C vertex " + std::to_string(v) + " missing");
        int outside = 0;
        for (VertexId w : g->neighbors(v))
            if (!C.count(w))
                ++outside;
        if (outside > 4)
            throw Error(Errc::BadC,
                        "C vertex " + std::to_string(v) + " has more than 4 outside neighbors");
    }
}

} // namespace twocol
