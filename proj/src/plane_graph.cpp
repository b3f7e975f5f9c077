#include "twocol/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <string>

namespace twocol {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::MalformedEmbedding: return "MalformedEmbedding";
    case Errc::LoopPresent: return "LoopPresent";
    case Errc::NotOnFace: return "NotOnFace";
    case Errc::SameVertex: return "SameVertex";
    case Errc::MissingElement: return "MissingElement";
    case Errc::FacialCycle: return "FacialCycle";
    case Errc::NotACycle: return "NotACycle";
    case Errc::VertexInC: return "VertexInC";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NotNeighbors: return "NotNeighbors";
    case Errc::TooLarge: return "TooLarge";
    case Errc::KNotOnOuterFace: return "KNotOnOuterFace";
    case Errc::BadC: return "BadC";
    case Errc::IrreducibleTarget: return "IrreducibleTarget";
    case Errc::InapplicableStep: return "InapplicableStep";
    case Errc::CertificationFailed: return "CertificationFailed";
    case Errc::NotTriangulated: return "NotTriangulated";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::ParseError: return "ParseError";
    }
    return "Error";
}

bool FaceWalk::contains(DartId d) const {
    return std::find(darts_.begin(), darts_.end(), d) != darts_.end();
}

// ---------------------------------------------------------------------------

void PlaneGraph::check_dart(DartId d) const {
    if (!has_dart(d))
        throw Error(Errc::MissingElement, "no dart " + std::to_string(d));
}

void PlaneGraph::check_vertex(VertexId v) const {
    if (!has_vertex(v))
        throw Error(Errc::MissingElement, "no vertex " + std::to_string(v));
}

bool PlaneGraph::has_vertex(VertexId v) const {
    return v >= 0 && v < static_cast<int>(vertex_.size()) && vertex_[v];
}

bool PlaneGraph::has_dart(DartId d) const {
    return d >= 0 && d < static_cast<int>(recs_.size()) && recs_[d].origin >= 0;
}

PlaneGraph PlaneGraph::build(const GraphSpec& spec) {
    PlaneGraph g;
    for (VertexId v : spec.vertices) {
        if (v < 0)
            throw Error(Errc::MalformedEmbedding, "negative vertex id");
        if (v >= static_cast<int>(g.vertex_.size()))
            g.vertex_.resize(v + 1, 0);
        if (g.vertex_[v])
            throw Error(Errc::MalformedEmbedding, "duplicate vertex " + std::to_string(v));
        g.vertex_[v] = 1;
        ++g.n_vertices_;
    }
    g.vdart_.assign(g.vertex_.size(), -1);
    for (const auto& d : spec.darts) {
        if (d.id < 0)
            throw Error(Errc::MalformedEmbedding, "negative dart id");
        if (d.id >= static_cast<int>(g.recs_.size()))
            g.recs_.resize(d.id + 1);
        if (g.recs_[d.id].origin >= 0)
            throw Error(Errc::MalformedEmbedding, "duplicate dart " + std::to_string(d.id));
        if (!g.has_vertex(d.origin))
            throw Error(Errc::MalformedEmbedding,
                        "dart " + std::to_string(d.id) + " has unknown origin");
        g.recs_[d.id] = Rec{d.origin, d.twin, d.rnext};
        ++g.n_darts_;
        if (g.vdart_[d.origin] < 0 || d.id < g.vdart_[d.origin])
            g.vdart_[d.origin] = d.id;
    }
    g.outer_ = spec.outer;
    g.validate();
    return g;
}

PlaneGraph PlaneGraph::from_faces(const std::vector<std::vector<VertexId>>& faces,
                                  int outer_face_index) {
    // Collect directed edges and assign dart ids lexicographically.
    std::map<std::pair<VertexId, VertexId>, DartId> id_of;
    for (const auto& f : faces) {
        if (f.size() < 2)
            throw Error(Errc::MalformedEmbedding, "face shorter than 2");
        for (size_t i = 0; i < f.size(); ++i) {
            VertexId u = f[i], v = f[(i + 1) % f.size()];
            if (u == v)
                throw Error(Errc::LoopPresent, "face repeats vertex consecutively");
            auto [it, fresh] = id_of.insert({{u, v}, -1});
            if (!fresh)
                throw Error(Errc::MalformedEmbedding, "directed edge repeated across faces");
        }
    }
    DartId next = 0;
    for (auto& [key, id] : id_of)
        id = next++;

    GraphSpec spec;
    std::set<VertexId> verts;
    for (const auto& [key, id] : id_of) {
        verts.insert(key.first);
        verts.insert(key.second);
    }
    spec.vertices.assign(verts.begin(), verts.end());

    // phi(d) = next dart of d's face; rnext(e) = phi(twin(e)).
    std::vector<DartId> phi(id_of.size(), -1), tw(id_of.size(), -1);
    for (const auto& [key, id] : id_of) {
        auto rit = id_of.find({key.second, key.first});
        if (rit == id_of.end())
            throw Error(Errc::MalformedEmbedding, "unmatched directed edge");
        tw[id] = rit->second;
    }
    for (const auto& f : faces) {
        for (size_t i = 0; i < f.size(); ++i) {
            DartId d = id_of.at({f[i], f[(i + 1) % f.size()]});
            DartId dn = id_of.at({f[(i + 1) % f.size()], f[(i + 2) % f.size()]});
            phi[d] = dn;
        }
    }
    for (const auto& [key, id] : id_of)
        spec.darts.push_back({id, key.first, tw[id], phi[tw[id]]});

    if (outer_face_index < 0 || outer_face_index >= static_cast<int>(faces.size()))
        throw Error(Errc::MalformedEmbedding, "outer face index out of range");
    const auto& of = faces[outer_face_index];
    spec.outer = id_of.at({of[0], of[1]});
    return build(spec);
}

DartId PlaneGraph::rprev(DartId d) const {
    check_dart(d);
    DartId x = d;
    while (rnext(x) != d)
        x = rnext(x);
    return x;
}

std::vector<VertexId> PlaneGraph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(n_vertices_);
    for (VertexId v = 0; v < static_cast<int>(vertex_.size()); ++v)
        if (vertex_[v])
            out.push_back(v);
    return out;
}

std::vector<DartId> PlaneGraph::darts() const {
    std::vector<DartId> out;
    out.reserve(n_darts_);
    for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d)
        if (recs_[d].origin >= 0)
            out.push_back(d);
    return out;
}

std::vector<DartId> PlaneGraph::darts_at(VertexId v) const {
    check_vertex(v);
    std::vector<DartId> out;
    if (vdart_[v] < 0)
        return out;
    DartId start = vdart_[v], d = start;
    do {
        out.push_back(d);
        d = rnext(d);
    } while (d != start);
    auto mn = std::min_element(out.begin(), out.end());
    std::rotate(out.begin(), mn, out.end());
    return out;
}

int PlaneGraph::degree(VertexId v) const {
    check_vertex(v);
    if (vdart_[v] < 0)
        return 0;
    int deg = 0;
    DartId start = vdart_[v], d = start;
    do {
        ++deg;
        d = rnext(d);
    } while (d != start);
    return deg;
}

std::vector<VertexId> PlaneGraph::neighbors(VertexId v) const {
    std::set<VertexId> nb;
    for (DartId d : darts_at(v))
        nb.insert(head(d));
    return {nb.begin(), nb.end()};
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
    for (DartId d : darts_at(u))
        if (head(d) == v)
            return true;
    return false;
}

int PlaneGraph::multiplicity(VertexId u, VertexId v) const {
    int m = 0;
    for (DartId d : darts_at(u))
        if (head(d) == v)
            ++m;
    return m;
}

std::optional<DartId> PlaneGraph::dart_between(VertexId u, VertexId v) const {
    std::optional<DartId> best;
    for (DartId d : darts_at(u))
        if (head(d) == v && (!best || d < *best))
            best = d;
    return best;
}

FaceWalk PlaneGraph::face_of(DartId d) const {
    check_dart(d);
    std::vector<DartId> orbit;
    DartId x = d;
    do {
        orbit.push_back(x);
        x = face_next(x);
    } while (x != d);
    auto mn = std::min_element(orbit.begin(), orbit.end());
    std::rotate(orbit.begin(), mn, orbit.end());
    return FaceWalk(std::move(orbit));
}

std::vector<FaceWalk> PlaneGraph::faces() const {
    std::vector<FaceWalk> out;
    std::vector<char> seen(recs_.size(), 0);
    for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d) {
        if (recs_[d].origin < 0 || seen[d])
            continue;
        FaceWalk f = face_of(d);
        for (DartId x : f.darts())
            seen[x] = 1;
        out.push_back(std::move(f));
    }
    return out;
}

int PlaneGraph::face_orbit_count() const {
    return static_cast<int>(faces().size());
}

std::vector<int> PlaneGraph::component_of_vertices() const {
    std::vector<int> comp(vertex_.size(), -1);
    int next = 0;
    for (VertexId s = 0; s < static_cast<int>(vertex_.size()); ++s) {
        if (!vertex_[s] || comp[s] >= 0)
            continue;
        comp[s] = next;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (DartId d : darts_at(v)) {
                VertexId w = head(d);
                if (comp[w] < 0) {
                    comp[w] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

int PlaneGraph::component_count() const {
    auto comp = component_of_vertices();
    int mx = -1;
    for (int c : comp)
        mx = std::max(mx, c);
    return mx + 1;
}

bool PlaneGraph::connected() const {
    return component_count() <= 1;
}

int PlaneGraph::euler_face_count() const {
    if (n_darts_ == 0)
        return n_vertices_ > 0 ? 1 : 0;
    auto comp = component_of_vertices();
    std::set<int> edged;
    for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d)
        if (recs_[d].origin >= 0)
            edged.insert(comp[recs_[d].origin]);
    return face_orbit_count() - (static_cast<int>(edged.size()) - 1);
}

std::vector<VertexId> PlaneGraph::outer_vertices() const {
    std::set<VertexId> out;
    if (outer_ >= 0) {
        FaceWalk f = face_of(outer_);
        for (DartId d : f.darts())
            out.insert(origin(d));
    }
    return {out.begin(), out.end()};
}

std::pair<int, int> PlaneGraph::vertex_class(const VertexSet& C, VertexId v) const {
    check_vertex(v);
    if (C.count(v))
        throw Error(Errc::VertexInC, "vertex " + std::to_string(v) + " is in C");
    int a = 0, b = 0;
    for (DartId d : darts_at(v))
        (C.count(head(d)) ? b : a)++;
    return {a, b};
}

void PlaneGraph::validate() const {
    int nd = 0;
    for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d) {
        const Rec& r = recs_[d];
        if (r.origin < 0)
            continue;
        ++nd;
        if (!has_vertex(r.origin))
            throw Error(Errc::MalformedEmbedding, "dart origin missing");
        if (!has_dart(r.twin) || r.twin == d || twin(r.twin) != d)
            throw Error(Errc::MalformedEmbedding,
                        "twin not an involution at dart " + std::to_string(d));
        if (origin(r.twin) == r.origin)
            throw Error(Errc::LoopPresent, "loop at vertex " + std::to_string(r.origin));
        if (!has_dart(r.rnext) || origin(r.rnext) != r.origin)
            throw Error(Errc::MalformedEmbedding,
                        "rnext leaves origin at dart " + std::to_string(d));
    }
    if (nd != n_darts_)
        throw Error(Errc::MalformedEmbedding, "dart count drifted");

    // rnext must be a single cycle per vertex: count reachable darts from the
    // anchor and compare with the per-origin incidence count.
    std::vector<int> at(vertex_.size(), 0);
    for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d)
        if (recs_[d].origin >= 0)
            ++at[recs_[d].origin];
    std::vector<char> seen(recs_.size(), 0);
    for (VertexId v = 0; v < static_cast<int>(vertex_.size()); ++v) {
        if (!vertex_[v])
            continue;
        if (vdart_[v] < 0) {
            if (at[v] != 0)
                throw Error(Errc::MalformedEmbedding, "missing rotation anchor");
            continue;
        }
        if (!has_dart(vdart_[v]) || origin(vdart_[v]) != v)
            throw Error(Errc::MalformedEmbedding, "bad rotation anchor");
        int cnt = 0;
        DartId d = vdart_[v];
        do {
            if (seen[d])
                throw Error(Errc::MalformedEmbedding, "rotation not a permutation");
            seen[d] = 1;
            ++cnt;
            d = rnext(d);
        } while (d != vdart_[v]);
        if (cnt != at[v])
            throw Error(Errc::MalformedEmbedding,
                        "rotation at vertex " + std::to_string(v) + " is not a single cycle");
    }

    if (n_darts_ > 0) {
        if (!has_dart(outer_))
            throw Error(Errc::MalformedEmbedding, "outer dart missing");
    } else if (outer_ != -1) {
        throw Error(Errc::MalformedEmbedding, "outer dart set on edgeless graph");
    }

    // Genus 0 per component: V - E + F == 2 whenever the component has edges.
    auto comp = component_of_vertices();
    int ncomp = component_count();
    std::vector<int> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
    for (VertexId v = 0; v < static_cast<int>(vertex_.size()); ++v)
        if (vertex_[v])
            ++cv[comp[v]];
    for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d)
        if (recs_[d].origin >= 0)
            ++ce[comp[recs_[d].origin]];
    for (const FaceWalk& f : faces()) {
        if (f.length() < 2)
            throw Error(Errc::MalformedEmbedding, "face of length < 2");
        ++cf[comp[origin(f.darts()[0])]];
    }
    for (int c = 0; c < ncomp; ++c) {
        if (ce[c] == 0)
            continue;
        if (cv[c] - ce[c] / 2 + cf[c] != 2)
            throw Error(Errc::MalformedEmbedding,
                        "Euler check failed on component " + std::to_string(c));
    }
}

// -- mutations --------------------------------------------------------------

VertexId PlaneGraph::add_vertex() {
    for (VertexId v = 0; v < static_cast<int>(vertex_.size()); ++v) {
        if (!vertex_[v]) {
            vertex_[v] = 1;
            vdart_[v] = -1;
            ++n_vertices_;
            return v;
        }
    }
    vertex_.push_back(1);
    vdart_.push_back(-1);
    ++n_vertices_;
    return static_cast<VertexId>(vertex_.size()) - 1;
}

DartId PlaneGraph::alloc_dart() {
    for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d)
        if (recs_[d].origin < 0)
            return d;
    recs_.push_back(Rec{});
    return static_cast<DartId>(recs_.size()) - 1;
}

std::pair<DartId, DartId> PlaneGraph::add_edge(VertexId u, std::optional<DartId> corner_u,
                                               VertexId v, std::optional<DartId> corner_v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error(Errc::SameVertex, "edge would be a loop at " + std::to_string(u));
    auto check_corner = [&](VertexId w, const std::optional<DartId>& c) {
        if (c) {
            check_dart(*c);
            if (origin(*c) != w)
                throw Error(Errc::NotOnFace, "corner dart not at vertex " + std::to_string(w));
        } else if (vdart_[w] >= 0) {
            throw Error(Errc::NotOnFace,
                        "vertex " + std::to_string(w) + " is not isolated, corner required");
        }
    };
    check_corner(u, corner_u);
    check_corner(v, corner_v);

    DartId a = alloc_dart();
    recs_[a].origin = u; // reserve before second alloc
    DartId b = alloc_dart();
    recs_[b] = Rec{v, a, -1};
    recs_[a] = Rec{u, b, -1};
    ++n_darts_;
    ++n_darts_;

    auto splice_in = [&](DartId nd, VertexId w, const std::optional<DartId>& c) {
        if (!c) {
            recs_[nd].rnext = nd;
            vdart_[w] = nd;
            return;
        }
        DartId p = rprev(*c);
        recs_[p].rnext = nd;
        recs_[nd].rnext = *c;
        if (vdart_[w] < 0 || nd < vdart_[w])
            vdart_[w] = nd;
    };
    splice_in(a, u, corner_u);
    splice_in(b, v, corner_v);
    return {a, b};
}

std::pair<DartId, DartId> PlaneGraph::add_chord(const FaceWalk& face, DartId at_u, DartId at_v) {
    if (face.length() < 3)
        throw Error(Errc::NotOnFace, "digon face admits no chord");
    if (!face.contains(at_u) || !face.contains(at_v))
        throw Error(Errc::NotOnFace, "chord corners must lie on the face");
    if (at_u == at_v || origin(at_u) == origin(at_v))
        throw Error(Errc::SameVertex, "chord endpoints coincide");
    return add_edge(origin(at_u), at_u, origin(at_v), at_v);
}

void PlaneGraph::splice_out(DartId d) {
    VertexId w = origin(d);
    DartId nx = rnext(d);
    if (nx == d) {
        vdart_[w] = -1;
    } else {
        DartId p = rprev(d);
        recs_[p].rnext = nx;
        if (vdart_[w] == d)
            vdart_[w] = nx;
    }
}

void PlaneGraph::delete_edge(DartId d) {
    check_dart(d);
    DartId t = twin(d);
    if (outer_ == d || outer_ == t) {
        // Re-anchor: smallest surviving dart on the face(s) bordering the
        // deleted edge, else smallest surviving dart anywhere, else none.
        DartId best = -1;
        for (DartId side : {d, t}) {
            FaceWalk f = face_of(side);
            for (DartId x : f.darts())
                if (x != d && x != t && (best < 0 || x < best))
                    best = x;
        }
        if (best < 0)
            for (DartId x = 0; x < static_cast<int>(recs_.size()); ++x)
                if (recs_[x].origin >= 0 && x != d && x != t && (best < 0 || x < best))
                    best = x;
        outer_ = best;
    }
    splice_out(d);
    splice_out(t);
    recs_[d] = Rec{};
    recs_[t] = Rec{};
    n_darts_ -= 2;
}

void PlaneGraph::delete_vertex(VertexId v) {
    check_vertex(v);
    while (vdart_[v] >= 0) {
        auto ds = darts_at(v);
        delete_edge(ds[0]);
    }
    vertex_[v] = 0;
    --n_vertices_;
}

void PlaneGraph::set_outer(DartId d) {
    if (d != -1)
        check_dart(d);
    outer_ = d;
}

std::pair<PlaneGraph, PlaneGraph> PlaneGraph::split_on_cycle(const std::vector<DartId>& cycle) const {
    size_t k = cycle.size();
    if (k != 2 && k != 3)
        throw Error(Errc::NotACycle, "cycle must have length 2 or 3");
    if (!connected())
        throw Error(Errc::NotACycle, "split requires a connected graph");
    std::set<VertexId> cyc_verts;
    for (size_t i = 0; i < k; ++i) {
        check_dart(cycle[i]);
        if (head(cycle[i]) != origin(cycle[(i + 1) % k]))
            throw Error(Errc::NotACycle, "darts do not form a closed walk");
        if (!cyc_verts.insert(origin(cycle[i])).second)
            throw Error(Errc::NotACycle, "cycle revisits a vertex");
    }
    std::set<DartId> boundary;
    for (DartId d : cycle) {
        boundary.insert(d);
        boundary.insert(twin(d));
    }
    if (boundary.size() != 2 * k)
        throw Error(Errc::NotACycle, "cycle repeats an edge");

    // Facial iff one side of the cycle is itself a face.
    auto side_is_face = [&](DartId d0, bool reversed) {
        FaceWalk f = face_of(reversed ? twin(cycle[0]) : cycle[0]);
        (void)d0;
        if (f.length() != static_cast<int>(k))
            return false;
        for (DartId x : f.darts())
            if (!boundary.count(x))
                return false;
        return true;
    };
    if (side_is_face(cycle[0], false) || side_is_face(cycle[0], true))
        throw Error(Errc::FacialCycle, "cycle bounds a face");

    // Classify non-boundary darts into the two regions: darts of one face are
    // in the same region, as are the two darts of an edge.
    std::vector<int> region(recs_.size(), -1);
    int next_region = 0;
    for (DartId s = 0; s < static_cast<int>(recs_.size()); ++s) {
        if (recs_[s].origin < 0 || boundary.count(s) || region[s] >= 0)
            continue;
        int r = next_region++;
        std::queue<DartId> q;
        region[s] = r;
        q.push(s);
        while (!q.empty()) {
            DartId d = q.front();
            q.pop();
            for (DartId e : {twin(d), face_next(d)}) {
                if (boundary.count(e) || region[e] >= 0)
                    continue;
                region[e] = r;
                q.push(e);
            }
        }
    }
    if (next_region != 2)
        throw Error(Errc::NotACycle, "cycle does not separate the graph into two regions");

    // The outer face lies in the "outside" region.
    int outside = -1;
    FaceWalk outer_face = face_of(outer_);
    for (DartId x : outer_face.darts())
        if (!boundary.count(x)) {
            outside = region[x];
            break;
        }
    if (outside < 0)
        throw Error(Errc::NotACycle, "outer face fully on the cycle");

    auto build_part = [&](int keep_region) {
        PlaneGraph part;
        part.recs_.resize(recs_.size());
        part.vertex_.assign(vertex_.size(), 0);
        part.vdart_.assign(vertex_.size(), -1);
        std::vector<char> keep(recs_.size(), 0);
        for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d)
            if (recs_[d].origin >= 0 && (boundary.count(d) || region[d] == keep_region))
                keep[d] = 1;
        for (DartId d = 0; d < static_cast<int>(recs_.size()); ++d) {
            if (!keep[d])
                continue;
            // rnext: next kept dart in the original rotation.
            DartId nx = rnext(d);
            while (!keep[nx])
                nx = rnext(nx);
            part.recs_[d] = Rec{origin(d), twin(d), nx};
            ++part.n_darts_;
            VertexId v = origin(d);
            if (!part.vertex_[v]) {
                part.vertex_[v] = 1;
                ++part.n_vertices_;
            }
            if (part.vdart_[v] < 0 || d < part.vdart_[v])
                part.vdart_[v] = d;
        }
        return part;
    };

    PlaneGraph g1 = build_part(outside);
    g1.outer_ = outer_;
    PlaneGraph g2 = build_part(1 - outside);
    // Outer face of the inner part: the cycle side that faced outside.
    DartId best = -1;
    for (DartId d : boundary) {
        FaceWalk f = face_of(d); // face in the *original* graph
        bool faces_outside = false;
        for (DartId x : f.darts())
            if (!boundary.count(x) && region[x] == outside) {
                faces_outside = true;
                break;
            }
        if (faces_outside && (best < 0 || d < best))
            best = d;
    }
    if (best < 0)
        throw Error(Errc::NotACycle, "could not identify the outward cycle side");
    g2.outer_ = best;
#ifndef NDEBUG
    g1.validate();
    g2.validate();
#endif
    return {std::move(g1), std::move(g2)};
}

bool PlaneGraph::operator==(const PlaneGraph& other) const {
    return vertices() == other.vertices() && outer_ == other.outer_ && [&] {
        auto a = darts(), b = other.darts();
        if (a != b)
            return false;
        for (DartId d : a)
            if (origin(d) != other.origin(d) || twin(d) != other.twin(d) ||
                rnext(d) != other.rnext(d))
                return false;
        return true;
    }();
}

} // namespace twocol
