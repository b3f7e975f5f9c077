#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "twocol/error.hpp"

namespace twocol {

using VertexId = int;
using DartId = int;
using VertexSet = std::set<VertexId>;

// Rotation-system description used by PlaneGraph::build and the file format.
struct GraphSpec {
    struct DartSpec {
        DartId id;
        VertexId origin;
        DartId twin;
        DartId rnext;
    };
    std::vector<VertexId> vertices;
    std::vector<DartSpec> darts;
    DartId outer = -1;
};

// One face orbit of the successor permutation phi(d) = rnext(twin(d)),
// listed in phi-order starting from its smallest dart.
class FaceWalk {
public:
    FaceWalk() = default;
    explicit FaceWalk(std::vector<DartId> darts) : darts_(std::move(darts)) {}

    const std::vector<DartId>& darts() const { return darts_; }
    int length() const { return static_cast<int>(darts_.size()); }
    bool contains(DartId d) const;

private:
    std::vector<DartId> darts_;
};

// Plane multigraph as a dart structure: each dart has an origin vertex, a twin
// (the other side of its edge) and rnext (next outgoing dart counterclockwise
// around the origin).  Faces are the orbits of phi(d) = rnext(twin(d)); the
// orbit of outer_dart is the designated outer face.  Parallel edges are
// first-class, loops are rejected.  Disconnected graphs are stored as
// independent sphere embeddings; the geometric outer face is shared, which is
// what euler_face_count() reports.
class PlaneGraph {
public:
    PlaneGraph() = default;

    static PlaneGraph build(const GraphSpec& spec);
    // Faces given as vertex cycles of a consistently oriented simple map;
    // every directed edge must appear exactly once.  Dart ids are assigned in
    // lexicographic order of (origin, head, ...) pairs.
    static PlaneGraph from_faces(const std::vector<std::vector<VertexId>>& faces,
                                 int outer_face_index = 0);

    // -- queries ---------------------------------------------------------
    int vertex_count() const { return n_vertices_; }
    int dart_count() const { return n_darts_; }
    int edge_count() const { return n_darts_ / 2; }
    bool has_vertex(VertexId v) const;
    bool has_dart(DartId d) const;
    VertexId origin(DartId d) const { return recs_[d].origin; }
    DartId twin(DartId d) const { return recs_[d].twin; }
    DartId rnext(DartId d) const { return recs_[d].rnext; }
    DartId rprev(DartId d) const;
    DartId face_next(DartId d) const { return recs_[recs_[d].twin].rnext; }
    VertexId head(DartId d) const { return recs_[recs_[d].twin].origin; }
    DartId outer_dart() const { return outer_; }

    std::vector<VertexId> vertices() const;
    std::vector<DartId> darts() const;
    // Rotation at v starting from its smallest dart; empty if isolated.
    std::vector<DartId> darts_at(VertexId v) const;
    int degree(VertexId v) const;
    std::vector<VertexId> neighbors(VertexId v) const; // distinct, sorted
    bool adjacent(VertexId u, VertexId v) const;
    int multiplicity(VertexId u, VertexId v) const;
    // Smallest dart from u to v, if any.
    std::optional<DartId> dart_between(VertexId u, VertexId v) const;

    FaceWalk face_of(DartId d) const;
    std::vector<FaceWalk> faces() const; // ordered by smallest dart
    int face_orbit_count() const;
    // Geometric face count: orbits, with the outer faces of all edge-bearing
    // components identified (so |V| - |E| + F = 1 + #components).
    int euler_face_count() const;
    int component_count() const;
    bool connected() const;
    std::vector<int> component_of_vertices() const; // component index per max id slot, -1 if absent
    std::vector<VertexId> outer_vertices() const;   // origins on the outer orbit, sorted

    // (a, b) = edge-multiplicity counts from v to V\C and to C.  v must not be in C.
    std::pair<int, int> vertex_class(const VertexSet& C, VertexId v) const;

    void validate() const; // throws Error on any broken invariant

    // -- mutations -------------------------------------------------------
    VertexId add_vertex();
    // Low-level splice.  corner_u (a dart with origin u) means: insert the new
    // u-dart immediately before corner_u in u's rotation, i.e. into the face
    // corner entering corner_u.  nullopt requires u isolated.  Returns the new
    // dart pair (at_u, at_v).
    std::pair<DartId, DartId> add_edge(VertexId u, std::optional<DartId> corner_u,
                                       VertexId v, std::optional<DartId> corner_v);
    // Chord inside a face between two of its corners; splits the face.
    std::pair<DartId, DartId> add_chord(const FaceWalk& face, DartId at_u, DartId at_v);
    void delete_edge(DartId d);
    void delete_vertex(VertexId v);
    void set_outer(DartId d);

    // Cut along a non-facial closed walk of length 2 or 3 through distinct
    // vertices.  First result: the closure of the side containing the outer
    // face (the cycle's far side becomes a face).  Second: the closure of the
    // other side, with the cycle as its outer face.  Dart identities are
    // preserved; the cycle's darts appear in both parts.
    std::pair<PlaneGraph, PlaneGraph> split_on_cycle(const std::vector<DartId>& cycle) const;

    bool operator==(const PlaneGraph& other) const;

private:
    struct Rec {
        VertexId origin = -1;
        DartId twin = -1;
        DartId rnext = -1;
    };

    std::vector<Rec> recs_;        // slot per dart id, origin == -1 when free
    std::vector<char> vertex_;     // slot per vertex id, 0 when free
    std::vector<DartId> vdart_;    // some dart at each vertex, -1 if isolated
    DartId outer_ = -1;
    int n_vertices_ = 0;
    int n_darts_ = 0;

    DartId alloc_dart();
    void splice_out(DartId d);
    void check_dart(DartId d) const;
    void check_vertex(VertexId v) const;
};

} // namespace twocol
