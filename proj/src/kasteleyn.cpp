#include "dimsurf/kasteleyn.hpp"

#include <algorithm>
#include <queue>

#include "dimsurf/errors.hpp"

namespace dimsurf {

std::string Orientation::to_bit_string() const {
    std::string s(tail.size(), '0');
    for (std::size_t e = 0; e < tail.size(); ++e)
        if (tail[e] & 1) s[e] = '1';
    return s;
}

Orientation Orientation::from_bit_string(const std::string& bits) {
    Orientation k;
    k.tail.reserve(bits.size());
    for (std::size_t e = 0; e < bits.size(); ++e)
        k.tail.push_back(static_cast<Dart>(2 * e + (bits[e] == '1' ? 1 : 0)));
    return k;
}

int face_edge_sign(const SurfaceMap& m, const Orientation& k, Dart orbit_dart) {
    (void)m;
    // Traced orbits run clockwise while the oriented face boundary is
    // counter-clockwise, so agreement means the opposite dart is the tail.
    return k.oriented_as(SurfaceMap::opposite(orbit_dart)) ? 1 : -1;
}

FaceCheck is_kasteleyn(const SurfaceMap& m, const Orientation& k) {
    FaceCheck r;
    r.ok = true;
    for (const auto& orbit : m.faces()) {
        int prod = 1;
        for (Dart d : orbit) prod *= face_edge_sign(m, k, d);
        r.face_products.push_back(prod);
        if (prod != -1) r.ok = false;
    }
    return r;
}

Orientation construct_kasteleyn(const SurfaceMap& m) {
    const int E = m.edge_count();
    const int F = m.face_count();
    Orientation k;
    k.tail.assign(static_cast<std::size_t>(E), -1);

    // BFS spanning tree of the dual graph, rooted at face 0. tree_edge[f] is
    // the primal edge crossed to reach f from its parent.
    std::vector<int> parent(static_cast<std::size_t>(F), -1);
    std::vector<EdgeId> tree_edge(static_cast<std::size_t>(F), -1);
    std::vector<char> crossed(static_cast<std::size_t>(E), 0);
    std::vector<int> order;
    {
        std::vector<char> reached(static_cast<std::size_t>(F), 0);
        std::queue<int> bfs;
        bfs.push(0);
        reached[0] = 1;
        while (!bfs.empty()) {
            int f = bfs.front();
            bfs.pop();
            order.push_back(f);
            for (Dart d : m.faces()[static_cast<std::size_t>(f)]) {
                int g = m.face_of(SurfaceMap::opposite(d));
                if (reached[static_cast<std::size_t>(g)]) continue;
                reached[static_cast<std::size_t>(g)] = 1;
                parent[static_cast<std::size_t>(g)] = f;
                tree_edge[static_cast<std::size_t>(g)] = SurfaceMap::edge_of(d);
                crossed[static_cast<std::size_t>(SurfaceMap::edge_of(d))] = 1;
                bfs.push(g);
            }
        }
    }

    // Phase 1: orient every edge not crossed by the dual tree. Tail is the
    // lower vertex id, ties (loops, equal ids) go to dart 2e.
    for (EdgeId e = 0; e < E; ++e) {
        if (crossed[static_cast<std::size_t>(e)]) continue;
        auto [u, v] = m.endpoints(e);
        k.tail[static_cast<std::size_t>(e)] = (v < u) ? (2 * e + 1) : (2 * e);
    }

    // Phase 2: walk the dual tree leaves-to-root; each face fixes its parent
    // edge so its own product becomes -1.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int f = *it;
        if (parent[static_cast<std::size_t>(f)] < 0) continue;
        const EdgeId fix = tree_edge[static_cast<std::size_t>(f)];
        int prod = 1;
        Dart fix_orbit_dart = -1;
        for (Dart d : m.faces()[static_cast<std::size_t>(f)]) {
            if (SurfaceMap::edge_of(d) == fix) {
                fix_orbit_dart = d;
                continue;
            }
            prod *= face_edge_sign(m, k, d);
        }
        // Choosing the opposite dart as tail contributes +1 to this face.
        k.tail[static_cast<std::size_t>(fix)] =
            (prod == -1) ? SurfaceMap::opposite(fix_orbit_dart) : fix_orbit_dart;
    }

    auto check = is_kasteleyn(m, k);
    if (!check.ok) {
        // By the parity argument only the root face can fail, and it fails
        // exactly when the vertex count is odd.
        throw OddVertexCount("no Kasteleyn orientation: odd number of vertices");
    }
    return k;
}

Orientation flip_vertex(const SurfaceMap& m, const Orientation& k, VertexId v) {
    Orientation r = k;
    for (Dart d : m.darts_at(v)) {
        EdgeId e = SurfaceMap::edge_of(d);
        if (m.is_loop(e)) continue;  // flipped twice, net unchanged
        r.tail[static_cast<std::size_t>(e)] = SurfaceMap::opposite(r.tail[static_cast<std::size_t>(e)]);
    }
    return r;
}

EquivalenceResult equivalence(const SurfaceMap& m, const Orientation& k, const Orientation& k2) {
    if (!is_kasteleyn(m, k).ok || !is_kasteleyn(m, k2).ok)
        throw NotKasteleyn("equivalence is defined between Kasteleyn orientations");
    EquivalenceResult r;
    r.theta = EdgeChain(m.edge_count());
    for (EdgeId e = 0; e < m.edge_count(); ++e)
        if (k.tail[static_cast<std::size_t>(e)] != k2.tail[static_cast<std::size_t>(e)])
            r.theta.set(e, true);

    // theta is a sum of vertex stars iff the flip-set system is solvable.
    std::vector<gf2::Vec> stars;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        EdgeChain star(m.edge_count());
        for (Dart d : m.darts_at(v))
            if (!m.is_loop(SurfaceMap::edge_of(d))) star.flip(SurfaceMap::edge_of(d));
        stars.push_back(std::move(star));
    }
    auto sol = gf2::solve(stars, r.theta);
    r.equivalent = sol.has_value();
    if (sol) {
        for (VertexId v = 0; v < m.vertex_count(); ++v)
            if (sol->get(v)) r.witness.push_back(v);
    }
    return r;
}

Orientation act_cocycle(const SurfaceMap& m, const Orientation& k, const EdgeChain& z) {
    if (!is_cocycle(m, z))
        throw NotACocycle("edge set meets some face boundary an odd number of times");
    Orientation r = k;
    for (EdgeId e = 0; e < m.edge_count(); ++e)
        if (z.get(e))
            r.tail[static_cast<std::size_t>(e)] = SurfaceMap::opposite(r.tail[static_cast<std::size_t>(e)]);
    return r;
}

std::vector<Orientation> class_representatives(const SurfaceMap& m, const CocycleBasis& cocycles) {
    if (m.vertex_count() % 2 != 0)
        throw OddVertexCount("no Kasteleyn orientation: odd number of vertices");
    const Orientation base = construct_kasteleyn(m);
    const int g2 = static_cast<int>(cocycles.cocycles.size());
    std::vector<Orientation> reps;
    reps.reserve(std::size_t{1} << g2);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << g2); ++mask) {
        EdgeChain z(m.edge_count());
        for (int i = 0; i < g2; ++i)
            if ((mask >> i) & 1) z ^= cocycles.cocycles[static_cast<std::size_t>(i)];
        reps.push_back(act_cocycle(m, base, z));
    }
    return reps;
}

std::vector<Orientation> class_representatives(const SurfaceMap& m) {
    return class_representatives(m, cocycle_basis(m, homology_basis(m)));
}

}  // namespace dimsurf
