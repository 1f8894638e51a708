#pragma once

#include <vector>

#include "dimsurf/surface_map.hpp"

namespace dimsurf {

/// Total edge orientation: tail[e] is the dart at the source vertex.
struct Orientation {
    std::vector<Dart> tail;

    bool oriented_as(Dart d) const { return tail[static_cast<std::size_t>(SurfaceMap::edge_of(d))] == d; }
    /// Serialized form: bit e = 1 means the tail is dart 2e+1.
    std::string to_bit_string() const;
    static Orientation from_bit_string(const std::string& bits);

    friend bool operator==(const Orientation&, const Orientation&) = default;
};

struct FaceCheck {
    bool ok = false;
    std::vector<int> face_products;  // +1 / -1 per face
};

/// Product over each face boundary of the relative orientation signs; true
/// iff every face product is -1.
FaceCheck is_kasteleyn(const SurfaceMap& m, const Orientation& k);

/// Sign contributed by edge e to face f's product: +1 when K orients e as
/// the counter-clockwise boundary of f (i.e. against the traced orbit).
int face_edge_sign(const SurfaceMap& m, const Orientation& k, Dart orbit_dart);

/// Deterministic Kasteleyn orientation via a BFS spanning tree of the dual
/// graph; throws OddVertexCount when none exists.
Orientation construct_kasteleyn(const SurfaceMap& m);

/// Reverses every non-loop edge at v.
Orientation flip_vertex(const SurfaceMap& m, const Orientation& k, VertexId v);

struct EquivalenceResult {
    EdgeChain theta;  // disagreement edge set
    bool equivalent = false;
    std::vector<VertexId> witness;  // flip set carrying k to k2 (when equivalent)
};

/// Both orientations must be Kasteleyn; throws NotKasteleyn otherwise.
EquivalenceResult equivalence(const SurfaceMap& m, const Orientation& k, const Orientation& k2);

/// Reverses the edges of a cocycle; preserves the Kasteleyn property.
/// Throws NotACocycle when z meets some face boundary oddly.
Orientation act_cocycle(const SurfaceMap& m, const Orientation& k, const EdgeChain& z);

/// Representatives of all 2^{2g} equivalence classes: index I (as a bitmask
/// over the cocycle basis) yields act(K0, xor of the chosen cocycles).
std::vector<Orientation> class_representatives(const SurfaceMap& m, const CocycleBasis& cocycles);
std::vector<Orientation> class_representatives(const SurfaceMap& m);

}  // namespace dimsurf
