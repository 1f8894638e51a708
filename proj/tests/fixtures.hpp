#pragma once

// Shared fixture maps for the test suites. The .smg files under data/ are
// emitted from these builders; test_graph_file pins the equivalence.

#include <algorithm>
#include <random>

#include "dimsurf/matchings.hpp"
#include "dimsurf/surface_map.hpp"

namespace fixtures {

using namespace dimsurf;

// Planar 4-cycle, weights 1,2,3,5. V=4 E=4 F=2 g=0.
inline RawMap raw_square() {
    RawMap raw;
    raw.n_vertices = 4;
    raw.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    raw.rotations = {{0, 7}, {2, 1}, {4, 3}, {5, 6}};
    return raw;
}

inline SurfaceMap square() { return SurfaceMap::build(raw_square()); }

inline WeightSystem square_weights() {
    WeightSystem ws;
    ws.w = {Rational(1), Rational(2), Rational(3), Rational(5)};
    return ws;
}

// Two vertices joined by three parallel edges, same rotation order at both
// ends: one hexagonal face, genus 1.
inline RawMap raw_genus1() {
    RawMap raw;
    raw.n_vertices = 2;
    raw.edges = {{0, 1}, {0, 1}, {0, 1}};
    raw.rotations = {{0, 2, 4}, {1, 3, 5}};
    return raw;
}

inline SurfaceMap genus1() { return SurfaceMap::build(raw_genus1()); }

// Five parallel edges, same rotation order: one face, genus 2.
inline RawMap raw_genus2() {
    RawMap raw;
    raw.n_vertices = 2;
    raw.edges = {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}};
    raw.rotations = {{0, 2, 4, 6, 8}, {1, 3, 5, 7, 9}};
    return raw;
}

inline SurfaceMap genus2() { return SurfaceMap::build(raw_genus2()); }

inline WeightSystem genus2_weights() {
    WeightSystem ws;
    ws.w = {Rational(1, 2), Rational(2), Rational(3), Rational(5), Rational(7)};
    return ws;
}

// 4x4 square lattice on the torus; vertex (i,j) -> 4i+j, right edges first
// (id 4i+j), then up edges (id 16+4i+j). Rotation east, north, west, south.
inline RawMap raw_torus44() {
    RawMap raw;
    raw.n_vertices = 16;
    auto vid = [](int i, int j) { return 4 * ((i + 4) % 4) + ((j + 4) % 4); };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) raw.edges.emplace_back(vid(i, j), vid(i, j + 1));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) raw.edges.emplace_back(vid(i, j), vid(i + 1, j));
    auto right = [](int i, int j) { return 4 * ((i + 4) % 4) + ((j + 4) % 4); };
    auto up = [](int i, int j) { return 16 + 4 * ((i + 4) % 4) + ((j + 4) % 4); };
    raw.rotations.assign(16, {});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<Dart> rot = {
                2 * right(i, j),          // east, dart at (i,j)
                2 * up(i, j),             // north
                2 * right(i, j - 1) + 1,  // west (other end of left edge)
                2 * up(i - 1, j) + 1,     // south
            };
            raw.rotations[static_cast<std::size_t>(vid(i, j))] = rot;
        }
    return raw;
}

inline SurfaceMap torus44() { return SurfaceMap::build(raw_torus44()); }

// Complete graph K4 embedded in the sphere: triangular faces of odd length.
inline RawMap raw_k4() {
    RawMap raw;
    raw.n_vertices = 4;
    raw.edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}};
    raw.rotations = {
        {0, 6, 5},    // at 0: e0 toward 1, e3 toward 3, e2 toward 2
        {2, 8, 1},    // at 1: e1 toward 2, e4 toward 3, e0 toward 0
        {4, 10, 3},   // at 2: e2 toward 0, e5 toward 3, e1 toward 1
        {11, 7, 9},   // at 3: e5 toward 2, e3 toward 0, e4 toward 1
    };
    return raw;
}

inline SurfaceMap k4() { return SurfaceMap::build(raw_k4()); }

// One vertex, two loops interleaved: the standard torus square. V odd, so
// it has no matchings; used for topology checks only.
inline RawMap raw_torus_one_vertex() {
    RawMap raw;
    raw.n_vertices = 1;
    raw.edges = {{0, 0}, {0, 0}};
    raw.rotations = {{0, 2, 1, 3}};
    return raw;
}

inline SurfaceMap torus_one_vertex() { return SurfaceMap::build(raw_torus_one_vertex()); }

// Star K_{1,3}: even vertex count but no perfect matching.
inline RawMap raw_star3() {
    RawMap raw;
    raw.n_vertices = 4;
    raw.edges = {{0, 1}, {0, 2}, {0, 3}};
    raw.rotations = {{0, 2, 4}, {1}, {3}, {5}};
    return raw;
}

inline SurfaceMap star3() { return SurfaceMap::build(raw_star3()); }

// Triangle: odd vertex count.
inline RawMap raw_triangle() {
    RawMap raw;
    raw.n_vertices = 3;
    raw.edges = {{0, 1}, {1, 2}, {2, 0}};
    raw.rotations = {{0, 5}, {2, 1}, {4, 3}};
    return raw;
}

// Single edge on the sphere.
inline RawMap raw_single_edge() {
    RawMap raw;
    raw.n_vertices = 2;
    raw.edges = {{0, 1}};
    raw.rotations = {{0}, {1}};
    return raw;
}

// Random connected multigraph with a random rotation system; may contain
// loops and parallel edges.
inline RawMap random_map(std::mt19937& rng, int n_vertices, int extra_edges) {
    RawMap raw;
    raw.n_vertices = n_vertices;
    for (int v = 1; v < n_vertices; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        raw.edges.emplace_back(parent(rng), v);
    }
    std::uniform_int_distribution<int> any(0, n_vertices - 1);
    for (int k = 0; k < extra_edges; ++k) raw.edges.emplace_back(any(rng), any(rng));

    raw.rotations.assign(static_cast<std::size_t>(n_vertices), {});
    for (std::size_t e = 0; e < raw.edges.size(); ++e) {
        raw.rotations[static_cast<std::size_t>(raw.edges[e].first)].push_back(
            static_cast<Dart>(2 * e));
        raw.rotations[static_cast<std::size_t>(raw.edges[e].second)].push_back(
            static_cast<Dart>(2 * e + 1));
    }
    for (auto& rot : raw.rotations) std::shuffle(rot.begin(), rot.end(), rng);
    return raw;
}

inline Matching matching_of(std::initializer_list<EdgeId> ids) {
    Matching d;
    d.edges = ids;
    return d;
}

}  // namespace fixtures
