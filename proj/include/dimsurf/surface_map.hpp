#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dimsurf/gf2.hpp"

namespace dimsurf {

using VertexId = int;
using EdgeId = int;
using Dart = int;

/// Edge-indexed bit vector over GF(2); addition is symmetric difference.
using EdgeChain = gf2::Vec;

/// Raw description of a cellular embedding: edge e owns darts 2e (at u)
/// and 2e+1 (at v); rotations list the darts around each vertex in
/// counter-clockwise order.
struct RawMap {
    int n_vertices = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::vector<Dart>> rotations;
};

/// Graph cellularly embedded in a closed oriented surface, encoded as a
/// combinatorial map. Immutable after build; faces are the orbits of
/// phi = next_ccw . opposite.
class SurfaceMap {
public:
    static SurfaceMap build(const RawMap& raw);

    int vertex_count() const { return n_vertices_; }
    int edge_count() const { return n_edges_; }
    int dart_count() const { return 2 * n_edges_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int genus() const { return genus_; }

    static Dart opposite(Dart d) { return d ^ 1; }
    static EdgeId edge_of(Dart d) { return d >> 1; }

    VertexId vertex_of(Dart d) const { return vertex_of_[static_cast<std::size_t>(d)]; }
    Dart next_ccw(Dart d) const { return next_ccw_[static_cast<std::size_t>(d)]; }

    std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
        return {vertex_of(2 * e), vertex_of(2 * e + 1)};
    }
    bool is_loop(EdgeId e) const { return vertex_of(2 * e) == vertex_of(2 * e + 1); }

    /// Darts at v in rotation order, starting from the input listing.
    const std::vector<Dart>& darts_at(VertexId v) const {
        return rotations_[static_cast<std::size_t>(v)];
    }

    int face_of(Dart d) const { return face_of_[static_cast<std::size_t>(d)]; }
    /// Orbit dart sequences; orbit k traverses face k with the face on the
    /// right of each dart (clockwise boundary).
    const std::vector<std::vector<Dart>>& faces() const { return faces_; }

    /// Parity vector of edge occurrences in the boundary walk of face f.
    EdgeChain face_boundary_chain(int f) const;

    EdgeChain empty_chain() const { return EdgeChain(n_edges_); }

private:
    SurfaceMap() = default;

    int n_vertices_ = 0;
    int n_edges_ = 0;
    int genus_ = 0;
    std::vector<VertexId> vertex_of_;
    std::vector<Dart> next_ccw_;
    std::vector<std::vector<Dart>> rotations_;
    std::vector<std::vector<Dart>> faces_;
    std::vector<int> face_of_;
};

struct MapInfo {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int genus = 0;
};

MapInfo info(const SurfaceMap& m);

/// Closed walk given as a cyclic dart sequence: vertex_of(d[i+1]) equals
/// vertex_of(opposite(d[i])).
struct DartWalk {
    std::vector<Dart> darts;

    bool empty() const { return darts.empty(); }
    int length() const { return static_cast<int>(darts.size()); }
};

bool is_closed_walk(const SurfaceMap& m, const DartWalk& w);
bool is_simple_walk(const SurfaceMap& m, const DartWalk& w);
EdgeChain chain_of_walk(const SurfaceMap& m, const DartWalk& w);
DartWalk reverse_walk(const DartWalk& w);

/// True when every vertex meets an even number of chain edges.
bool is_cycle_chain(const SurfaceMap& m, const EdgeChain& z);

/// Decomposes an even-degree edge set into closed walks, each covering its
/// edges exactly once. Deterministic (lowest dart first).
std::vector<DartWalk> closed_walks_of_chain(const SurfaceMap& m, const EdgeChain& z);

/// Basis of H_1(Sigma;Z2) carried by simple cycles of the graph, with the
/// mod-2 intersection Gram matrix and the face-boundary reduction data
/// needed to compute homology classes of arbitrary cycles.
struct HomologyBasis {
    int genus = 0;
    std::vector<DartWalk> cycles;        // 2g simple closed walks
    std::vector<EdgeChain> cycle_chains; // their edge chains
    std::vector<gf2::Vec> gram;          // 2g x 2g intersection matrix rows
    std::vector<EdgeChain> face_chains;  // all face boundary chains

    bool intersect(const gf2::Vec& x, const gf2::Vec& y) const;
};

HomologyBasis homology_basis(const SurfaceMap& m);

/// Coordinates of [z] in the basis; throws NotACycle when z has a vertex of
/// odd degree. Adding face boundaries to z does not change the result.
gf2::Vec class_of(const SurfaceMap& m, const HomologyBasis& basis, const EdgeChain& z);

/// Mod-2 intersection number of the homology classes of two closed walks,
/// computed from crossing parities at shared subpaths and shared vertices.
int intersection_parity(const SurfaceMap& m, const DartWalk& a, const DartWalk& b);

/// Sum of pairwise parities between two collections of closed walks.
int intersection_parity(const SurfaceMap& m, std::span<const DartWalk> as,
                        std::span<const DartWalk> bs);

/// True iff dart probe lies strictly inside the counter-clockwise arc from
/// `from` to `to` around their common vertex. With from = out-dart and
/// to = in-dart of a walk passage this is the walk's left side.
bool in_ccw_arc(const SurfaceMap& m, Dart from, Dart to, Dart probe);

/// 2g edge sets meeting every face boundary evenly, whose classes span
/// H^1(Sigma;Z2); pairing[j].get(i) = |z_j cap a_i| mod 2 (invertible).
struct CocycleBasis {
    std::vector<EdgeChain> cocycles;
    std::vector<gf2::Vec> pairing;
};

CocycleBasis cocycle_basis(const SurfaceMap& m, const HomologyBasis& basis);

/// True when |z cap boundary(f)| is even for every face.
bool is_cocycle(const SurfaceMap& m, const EdgeChain& z);

}  // namespace dimsurf
