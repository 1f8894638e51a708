#include "dimsurf/surface_map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "dimsurf/errors.hpp"

namespace dimsurf {

SurfaceMap SurfaceMap::build(const RawMap& raw) {
    SurfaceMap m;
    m.n_vertices_ = raw.n_vertices;
    m.n_edges_ = static_cast<int>(raw.edges.size());
    const int n_darts = 2 * m.n_edges_;

    if (raw.n_vertices <= 0) throw NotConnected("map has no vertices");
    if (static_cast<int>(raw.rotations.size()) != raw.n_vertices)
        throw DanglingDart("expected one rotation per vertex");
    for (const auto& [u, v] : raw.edges) {
        if (u < 0 || u >= raw.n_vertices || v < 0 || v >= raw.n_vertices)
            throw BadInvolution("edge endpoint out of range");
    }

    m.vertex_of_.assign(static_cast<std::size_t>(n_darts), -1);
    m.next_ccw_.assign(static_cast<std::size_t>(n_darts), -1);
    m.rotations_ = raw.rotations;

    std::vector<int> seen(static_cast<std::size_t>(n_darts), 0);
    for (VertexId v = 0; v < raw.n_vertices; ++v) {
        const auto& rot = raw.rotations[static_cast<std::size_t>(v)];
        for (Dart d : rot) {
            if (d < 0 || d >= n_darts) throw DanglingDart("dart id out of range");
            if (seen[static_cast<std::size_t>(d)]++)
                throw DanglingDart("dart listed twice in rotations");
            const EdgeId e = edge_of(d);
            const VertexId owner =
                (d & 1) ? raw.edges[static_cast<std::size_t>(e)].second
                        : raw.edges[static_cast<std::size_t>(e)].first;
            if (owner != v) throw BadInvolution("dart listed at a vertex it is not incident to");
            m.vertex_of_[static_cast<std::size_t>(d)] = v;
        }
        const int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i)
            m.next_ccw_[static_cast<std::size_t>(rot[static_cast<std::size_t>(i)])] =
                rot[static_cast<std::size_t>((i + 1) % k)];
    }
    for (Dart d = 0; d < n_darts; ++d)
        if (!seen[static_cast<std::size_t>(d)]) throw DanglingDart("dart missing from rotations");

    // Connectivity over the underlying graph.
    {
        std::vector<char> reached(static_cast<std::size_t>(raw.n_vertices), 0);
        std::queue<VertexId> bfs;
        bfs.push(0);
        reached[0] = 1;
        while (!bfs.empty()) {
            VertexId v = bfs.front();
            bfs.pop();
            for (Dart d : m.rotations_[static_cast<std::size_t>(v)]) {
                VertexId w = m.vertex_of_[static_cast<std::size_t>(opposite(d))];
                if (!reached[static_cast<std::size_t>(w)]) {
                    reached[static_cast<std::size_t>(w)] = 1;
                    bfs.push(w);
                }
            }
        }
        for (char r : reached)
            if (!r) throw NotConnected("underlying graph is not connected");
    }

    // Trace faces as orbits of phi = next_ccw . opposite. An edgeless
    // one-vertex map is the sphere with a single 2-cell.
    if (n_darts == 0) {
        m.faces_.push_back({});
        m.genus_ = 0;
        return m;
    }
    m.face_of_.assign(static_cast<std::size_t>(n_darts), -1);
    for (Dart start = 0; start < n_darts; ++start) {
        if (m.face_of_[static_cast<std::size_t>(start)] >= 0) continue;
        const int f = static_cast<int>(m.faces_.size());
        std::vector<Dart> orbit;
        Dart d = start;
        do {
            m.face_of_[static_cast<std::size_t>(d)] = f;
            orbit.push_back(d);
            d = m.next_ccw_[static_cast<std::size_t>(opposite(d))];
        } while (d != start);
        m.faces_.push_back(std::move(orbit));
    }

    const int chi = m.n_vertices_ - m.n_edges_ + m.face_count();
    // A rotation system always describes a closed oriented surface.
    if (chi % 2 != 0 || chi > 2) throw BadInvolution("inconsistent Euler characteristic");
    m.genus_ = (2 - chi) / 2;
    return m;
}

EdgeChain SurfaceMap::face_boundary_chain(int f) const {
    EdgeChain z(n_edges_);
    for (Dart d : faces_[static_cast<std::size_t>(f)]) z.flip(edge_of(d));
    return z;
}

MapInfo info(const SurfaceMap& m) {
    return {m.vertex_count(), m.edge_count(), m.face_count(), m.genus()};
}

bool is_closed_walk(const SurfaceMap& m, const DartWalk& w) {
    const int k = w.length();
    if (k == 0) return false;
    for (int i = 0; i < k; ++i) {
        Dart cur = w.darts[static_cast<std::size_t>(i)];
        Dart nxt = w.darts[static_cast<std::size_t>((i + 1) % k)];
        if (m.vertex_of(nxt) != m.vertex_of(SurfaceMap::opposite(cur))) return false;
    }
    return true;
}

bool is_simple_walk(const SurfaceMap& m, const DartWalk& w) {
    std::set<VertexId> seen;
    for (Dart d : w.darts)
        if (!seen.insert(m.vertex_of(d)).second) return false;
    return true;
}

EdgeChain chain_of_walk(const SurfaceMap& m, const DartWalk& w) {
    EdgeChain z(m.edge_count());
    for (Dart d : w.darts) z.flip(SurfaceMap::edge_of(d));
    return z;
}

DartWalk reverse_walk(const DartWalk& w) {
    DartWalk r;
    r.darts.reserve(w.darts.size());
    for (auto it = w.darts.rbegin(); it != w.darts.rend(); ++it)
        r.darts.push_back(SurfaceMap::opposite(*it));
    return r;
}

bool is_cycle_chain(const SurfaceMap& m, const EdgeChain& z) {
    std::vector<int> deg(static_cast<std::size_t>(m.vertex_count()), 0);
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        if (!z.get(e)) continue;
        auto [u, v] = m.endpoints(e);
        deg[static_cast<std::size_t>(u)] ^= 1;
        deg[static_cast<std::size_t>(v)] ^= 1;
    }
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0; });
}

std::vector<DartWalk> closed_walks_of_chain(const SurfaceMap& m, const EdgeChain& z) {
    std::vector<char> used(static_cast<std::size_t>(m.edge_count()), 0);
    std::vector<DartWalk> out;
    for (Dart start = 0; start < m.dart_count(); ++start) {
        const EdgeId e0 = SurfaceMap::edge_of(start);
        if (!z.get(e0) || used[static_cast<std::size_t>(e0)]) continue;
        // Hierholzer walk: always leave along the lowest unused chain dart.
        DartWalk walk;
        Dart d = start;
        while (true) {
            used[static_cast<std::size_t>(SurfaceMap::edge_of(d))] = 1;
            walk.darts.push_back(d);
            const VertexId v = m.vertex_of(SurfaceMap::opposite(d));
            Dart next = -1;
            for (Dart cand : m.darts_at(v)) {
                const EdgeId e = SurfaceMap::edge_of(cand);
                if (z.get(e) && !used[static_cast<std::size_t>(e)] &&
                    (next == -1 || cand < next))
                    next = cand;
            }
            if (next == -1) break;
            d = next;
        }
        out.push_back(std::move(walk));
    }
    return out;
}

bool in_ccw_arc(const SurfaceMap& m, Dart from, Dart to, Dart probe) {
    if (from == to) return false;
    Dart d = m.next_ccw(from);
    while (d != to) {
        if (d == probe) return true;
        d = m.next_ccw(d);
    }
    return false;
}

namespace {

// One pass of a walk through a vertex: arrives via `in`, leaves via `out`
// (both darts at the vertex).
struct Passage {
    VertexId v;
    Dart in;
    Dart out;
};

std::vector<Passage> passages_of(const SurfaceMap& m, const DartWalk& w) {
    const int k = w.length();
    std::vector<Passage> ps;
    ps.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        Dart out = w.darts[static_cast<std::size_t>(i)];
        Dart prev = w.darts[static_cast<std::size_t>((i + k - 1) % k)];
        ps.push_back({m.vertex_of(out), SurfaceMap::opposite(prev), out});
    }
    return ps;
}

// Crossing parity contributed by one endpoint of a shared run: 1 when the
// branch of B lies on the left of A's passage.
int side_of(const SurfaceMap& m, Dart a_out, Dart a_in, Dart branch) {
    if (a_in == a_out) return 0;  // spur, degenerate corridor
    return in_ccw_arc(m, a_out, a_in, branch) ? 1 : 0;
}

}  // namespace

int intersection_parity(const SurfaceMap& m, const DartWalk& a, const DartWalk& b) {
    const int p = a.length();
    const int q = b.length();
    if (p == 0 || q == 0) return 0;

    auto amod = [p](int i) { return ((i % p) + p) % p; };
    auto bmod = [q](int j) { return ((j % q) + q) % q; };
    auto adart = [&](int i) { return a.darts[static_cast<std::size_t>(amod(i))]; };
    auto bdart = [&](int j) { return b.darts[static_cast<std::size_t>(bmod(j))]; };

    // Aligned position pairs: dir=+1 when b traverses the same dart, dir=-1
    // when it traverses the opposite dart. Runs chain via (i+1, j+dir).
    std::vector<std::vector<int>> pos_b(static_cast<std::size_t>(m.dart_count()));
    for (int j = 0; j < q; ++j) pos_b[static_cast<std::size_t>(bdart(j))].push_back(j);

    int parity = 0;
    std::set<std::tuple<int, int, int>> visited;  // (i, j, dir)

    for (int i = 0; i < p; ++i) {
        for (int dir : {+1, -1}) {
            const Dart want = dir > 0 ? adart(i) : SurfaceMap::opposite(adart(i));
            for (int j : pos_b[static_cast<std::size_t>(want)]) {
                if (visited.count({i, j, dir})) continue;
                // Walk back to the start of this run.
                int i0 = i, j0 = j;
                bool closed = false;
                for (int steps = 0;; ++steps) {
                    if (steps > p + q) {
                        closed = true;
                        break;
                    }
                    const int ip = amod(i0 - 1);
                    const int jp = bmod(j0 - dir);
                    const Dart prev_want =
                        dir > 0 ? adart(ip) : SurfaceMap::opposite(adart(ip));
                    if (bdart(jp) != prev_want) break;
                    i0 = ip;
                    j0 = jp;
                    if (i0 == i && j0 == j) {
                        closed = true;
                        break;
                    }
                }
                // Walk forward, marking every pair of the run.
                int iL = i0, jL = j0, len = 0;
                {
                    int ic = i0, jc = j0;
                    while (true) {
                        visited.insert({ic, jc, dir});
                        iL = ic;
                        jL = jc;
                        ++len;
                        const int in = amod(ic + 1);
                        const int jn = bmod(jc + dir);
                        const Dart next_want =
                            dir > 0 ? adart(in) : SurfaceMap::opposite(adart(in));
                        if (bdart(jn) != next_want) break;
                        ic = in;
                        jc = jn;
                        if (ic == i0 && jc == j0) {
                            closed = true;
                            break;
                        }
                        if (len > p + q) {
                            closed = true;
                            break;
                        }
                    }
                }
                if (closed) continue;  // the curves coincide along the whole run

                // Tail endpoint: vertex at the start of A's first run edge.
                const Dart a_first = adart(i0);
                const Dart a_in_tail = SurfaceMap::opposite(adart(i0 - 1));
                const Dart a_out_tail = a_first;
                Dart b_branch_tail;
                if (dir > 0)
                    b_branch_tail = SurfaceMap::opposite(bdart(j0 - 1));
                else
                    b_branch_tail = bdart(j0 + 1);
                const int side_tail = side_of(m, a_out_tail, a_in_tail, b_branch_tail);

                // Head endpoint: vertex at the end of A's last run edge.
                const Dart a_last = adart(iL);
                const Dart a_in_head = SurfaceMap::opposite(a_last);
                const Dart a_out_head = adart(iL + 1);
                Dart b_branch_head;
                if (dir > 0)
                    b_branch_head = bdart(jL + 1);
                else
                    b_branch_head = SurfaceMap::opposite(bdart(jL - 1));
                const int side_head = side_of(m, a_out_head, a_in_head, b_branch_head);

                parity ^= side_tail ^ side_head;
            }
        }
    }

    // Isolated meetings: passage pairs at a common vertex with all four
    // darts distinct. Pairs sharing a dart belong to a run above.
    auto pa = passages_of(m, a);
    auto pb = passages_of(m, b);
    std::map<VertexId, std::vector<const Passage*>> at_b;
    for (const auto& pass : pb) at_b[pass.v].push_back(&pass);
    for (const auto& pass_a : pa) {
        auto it = at_b.find(pass_a.v);
        if (it == at_b.end()) continue;
        for (const Passage* pass_b : it->second) {
            if (pass_b->in == pass_a.in || pass_b->in == pass_a.out ||
                pass_b->out == pass_a.in || pass_b->out == pass_a.out)
                continue;
            if (pass_a.in == pass_a.out) continue;  // spur
            const int c = side_of(m, pass_a.out, pass_a.in, pass_b->in) +
                          side_of(m, pass_a.out, pass_a.in, pass_b->out);
            parity ^= (c == 1) ? 1 : 0;
        }
    }
    return parity & 1;
}

int intersection_parity(const SurfaceMap& m, std::span<const DartWalk> as,
                        std::span<const DartWalk> bs) {
    int parity = 0;
    for (const auto& a : as)
        for (const auto& b : bs) parity ^= intersection_parity(m, a, b);
    return parity;
}

bool HomologyBasis::intersect(const gf2::Vec& x, const gf2::Vec& y) const {
    bool r = false;
    for (int i = 0; i < 2 * genus; ++i)
        if (x.get(i) && y.dot(gram[static_cast<std::size_t>(i)])) r = !r;
    return r;
}

namespace {

// Spanning tree of the underlying graph, BFS from vertex 0 with edges
// scanned in rotation order. Returns parent darts (dart pointing from the
// parent toward the vertex) and the set of tree edges.
struct SpanningTree {
    std::vector<Dart> parent_dart;  // per vertex, -1 at the root
    std::vector<char> in_tree;      // per edge
};

SpanningTree spanning_tree(const SurfaceMap& m) {
    SpanningTree t;
    t.parent_dart.assign(static_cast<std::size_t>(m.vertex_count()), -1);
    t.in_tree.assign(static_cast<std::size_t>(m.edge_count()), 0);
    std::vector<char> reached(static_cast<std::size_t>(m.vertex_count()), 0);
    reached[0] = 1;
    std::queue<VertexId> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        for (Dart d : m.darts_at(v)) {
            VertexId w = m.vertex_of(SurfaceMap::opposite(d));
            if (reached[static_cast<std::size_t>(w)]) continue;
            reached[static_cast<std::size_t>(w)] = 1;
            t.parent_dart[static_cast<std::size_t>(w)] = d;
            t.in_tree[static_cast<std::size_t>(SurfaceMap::edge_of(d))] = 1;
            bfs.push(w);
        }
    }
    return t;
}

// Tree path from vertex a up to the root as a dart walk fragment, then
// reversed pieces are assembled by the caller.
std::vector<Dart> path_to_root(const SurfaceMap& m, const SpanningTree& t, VertexId a) {
    std::vector<Dart> up;  // darts pointing from a toward the root
    VertexId v = a;
    while (t.parent_dart[static_cast<std::size_t>(v)] != -1) {
        Dart pd = t.parent_dart[static_cast<std::size_t>(v)];  // parent -> v
        up.push_back(SurfaceMap::opposite(pd));                // v -> parent
        v = m.vertex_of(pd);
    }
    return up;
}

// Fundamental cycle of the non-tree edge e, as a simple closed walk starting
// with dart 2e.
DartWalk fundamental_cycle(const SurfaceMap& m, const SpanningTree& t, EdgeId e) {
    DartWalk w;
    w.darts.push_back(2 * e);
    if (m.is_loop(e)) return w;
    // Path from v back to u through the tree: climb both endpoints to their
    // lowest common ancestor.
    auto up_u = path_to_root(m, t, m.vertex_of(2 * e));
    auto up_v = path_to_root(m, t, m.vertex_of(2 * e + 1));
    // Strip the common tail (edges above the LCA).
    while (!up_u.empty() && !up_v.empty() &&
           SurfaceMap::edge_of(up_u.back()) == SurfaceMap::edge_of(up_v.back())) {
        up_u.pop_back();
        up_v.pop_back();
    }
    for (Dart d : up_v) w.darts.push_back(d);
    for (auto it = up_u.rbegin(); it != up_u.rend(); ++it)
        w.darts.push_back(SurfaceMap::opposite(*it));
    return w;
}

}  // namespace

HomologyBasis homology_basis(const SurfaceMap& m) {
    HomologyBasis basis;
    basis.genus = m.genus();
    for (int f = 0; f < m.face_count(); ++f)
        basis.face_chains.push_back(m.face_boundary_chain(f));

    gf2::Basis reducer;
    for (const auto& fc : basis.face_chains) reducer.insert(fc);

    const SpanningTree tree = spanning_tree(m);
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        if (tree.in_tree[static_cast<std::size_t>(e)]) continue;
        if (static_cast<int>(basis.cycles.size()) == 2 * m.genus()) break;
        DartWalk cyc = fundamental_cycle(m, tree, e);
        EdgeChain chain = chain_of_walk(m, cyc);
        if (!reducer.insert(chain)) continue;
        basis.cycles.push_back(std::move(cyc));
        basis.cycle_chains.push_back(std::move(chain));
    }
    if (static_cast<int>(basis.cycles.size()) != 2 * m.genus())
        throw Error("homology basis construction failed to reach rank 2g");

    const int n = 2 * m.genus();
    basis.gram.assign(static_cast<std::size_t>(n), gf2::Vec(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int x = intersection_parity(m, basis.cycles[static_cast<std::size_t>(i)],
                                        basis.cycles[static_cast<std::size_t>(j)]);
            basis.gram[static_cast<std::size_t>(i)].set(j, x != 0);
            basis.gram[static_cast<std::size_t>(j)].set(i, x != 0);
        }
    if (!gf2::invertible(basis.gram))
        throw Error("intersection form degenerate on computed basis");
    return basis;
}

gf2::Vec class_of(const SurfaceMap& m, const HomologyBasis& basis, const EdgeChain& z) {
    if (!is_cycle_chain(m, z)) throw NotACycle("chain has a vertex of odd degree");
    std::vector<gf2::Vec> cols = basis.cycle_chains;
    for (const auto& fc : basis.face_chains) cols.push_back(fc);
    auto sol = gf2::solve(cols, z);
    if (!sol) throw NotACycle("cycle not in the span of basis and face boundaries");
    gf2::Vec coords(2 * basis.genus);
    for (int i = 0; i < 2 * basis.genus; ++i) coords.set(i, sol->get(i));
    return coords;
}

bool is_cocycle(const SurfaceMap& m, const EdgeChain& z) {
    for (const auto& orbit : m.faces()) {
        int c = 0;
        for (Dart d : orbit) c ^= z.get(SurfaceMap::edge_of(d)) ? 1 : 0;
        if (c) return false;
    }
    return true;
}

CocycleBasis cocycle_basis(const SurfaceMap& m, const HomologyBasis& basis) {
    CocycleBasis out;
    const int E = m.edge_count();
    const int g = m.genus();
    if (g == 0) return out;

    // Vertex-star coboundaries (loops drop out).
    gf2::Basis star_span;
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        EdgeChain star(E);
        for (Dart d : m.darts_at(v))
            if (!m.is_loop(SurfaceMap::edge_of(d))) star.flip(SurfaceMap::edge_of(d));
        star_span.insert(star);
    }

    // Scan single-edge generators first, then sums found by nullspace
    // elimination; keep cocycles independent modulo coboundaries.
    // The cocycle condition is linear, so build the kernel of the
    // face-incidence matrix directly.
    std::vector<gf2::Vec> face_rows;
    for (int f = 0; f < m.face_count(); ++f) face_rows.push_back(m.face_boundary_chain(f));

    // Nullspace via column elimination on the F x E system.
    std::vector<gf2::Vec> rows = face_rows;  // working copies
    std::vector<int> pivot_col;
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(E), -1);
    int r = 0;
    for (int c = 0; c < E && r < static_cast<int>(rows.size()); ++c) {
        int pr = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[static_cast<std::size_t>(i)].get(c)) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[static_cast<std::size_t>(pr)], rows[static_cast<std::size_t>(r)]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (i != r && rows[static_cast<std::size_t>(i)].get(c))
                rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
        pivot_col.push_back(c);
        pivot_row_of_col[static_cast<std::size_t>(c)] = r;
        ++r;
    }
    std::vector<char> is_pivot(static_cast<std::size_t>(E), 0);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;

    // star_span doubles as the accumulator: a kernel vector is kept exactly
    // when it is independent of the stars and the cocycles chosen so far.
    for (int free = 0; free < E && static_cast<int>(out.cocycles.size()) < 2 * g; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        EdgeChain z(E);
        z.set(free, true);
        for (int c : pivot_col) {
            int prow = pivot_row_of_col[static_cast<std::size_t>(c)];
            if (rows[static_cast<std::size_t>(prow)].get(free)) z.set(c, true);
        }
        if (star_span.insert(z)) out.cocycles.push_back(std::move(z));
    }
    if (static_cast<int>(out.cocycles.size()) != 2 * g)
        throw Error("cocycle basis construction failed to reach rank 2g");

    for (const auto& z : out.cocycles) {
        gf2::Vec row(2 * g);
        for (int i = 0; i < 2 * g; ++i)
            row.set(i, z.dot(basis.cycle_chains[static_cast<std::size_t>(i)]));
        out.pairing.push_back(std::move(row));
    }
    if (!gf2::invertible(out.pairing))
        throw Error("cocycle/cycle pairing not invertible");
    return out;
}

}  // namespace dimsurf
