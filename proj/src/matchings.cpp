#include "dimsurf/matchings.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dimsurf/errors.hpp"

namespace dimsurf {

bool Matching::contains(EdgeId e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool is_perfect_matching(const SurfaceMap& m, const Matching& d) {
    std::vector<int> hit(static_cast<std::size_t>(m.vertex_count()), 0);
    for (EdgeId e : d.edges) {
        if (e < 0 || e >= m.edge_count() || m.is_loop(e)) return false;
        auto [u, v] = m.endpoints(e);
        ++hit[static_cast<std::size_t>(u)];
        ++hit[static_cast<std::size_t>(v)];
    }
    return std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
}

namespace {

void backtrack(const SurfaceMap& m, std::vector<char>& used, std::vector<EdgeId>& chosen,
               std::vector<Matching>& out) {
    VertexId v = -1;
    for (VertexId cand = 0; cand < m.vertex_count(); ++cand)
        if (!used[static_cast<std::size_t>(cand)]) {
            v = cand;
            break;
        }
    if (v == -1) {
        Matching d;
        d.edges = chosen;
        std::sort(d.edges.begin(), d.edges.end());
        out.push_back(std::move(d));
        return;
    }
    // Candidate dimers at the lowest unmatched vertex, in edge-id order.
    std::set<EdgeId> cands;
    for (Dart d : m.darts_at(v)) {
        EdgeId e = SurfaceMap::edge_of(d);
        if (!m.is_loop(e)) cands.insert(e);
    }
    for (EdgeId e : cands) {
        auto [a, b] = m.endpoints(e);
        VertexId w = (a == v) ? b : a;
        if (used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = 1;
        chosen.push_back(e);
        backtrack(m, used, chosen, out);
        chosen.pop_back();
        used[static_cast<std::size_t>(v)] = used[static_cast<std::size_t>(w)] = 0;
    }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const SurfaceMap& m) {
    std::vector<Matching> out;
    if (m.vertex_count() % 2 != 0) return out;
    std::vector<char> used(static_cast<std::size_t>(m.vertex_count()), 0);
    std::vector<EdgeId> chosen;
    backtrack(m, used, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_matching(const SurfaceMap& m, const std::function<void(const Matching&)>& cb) {
    for (const auto& d : enumerate_matchings(m)) cb(d);
}

std::optional<Matching> first_matching(const SurfaceMap& m) {
    auto all = enumerate_matchings(m);
    if (all.empty()) return std::nullopt;
    return all.front();
}

Rational weight(const Matching& d, const WeightSystem& ws) {
    Rational r(1);
    for (EdgeId e : d.edges) r *= ws.w[static_cast<std::size_t>(e)];
    return r;
}

double boltzmann_weight(double energy, double temperature) {
    if (!(temperature > 0)) throw NonpositiveTemperature("temperature must be positive");
    return std::exp(-energy / temperature);
}

WeightSystem weights_from_energies(const std::vector<double>& energies, double temperature) {
    WeightSystem ws;
    ws.w.reserve(energies.size());
    for (double en : energies) {
        // mpq_class(double) is the exact binary value of the double.
        ws.w.emplace_back(boltzmann_weight(en, temperature));
    }
    return ws;
}

CompositionCycles composition_delta(const SurfaceMap& m, const HomologyBasis& basis,
                                    const Matching& d, const Matching& d_prime) {
    if (!is_perfect_matching(m, d) || !is_perfect_matching(m, d_prime))
        throw NoMatchingExists("composition cycles need two perfect matchings");
    CompositionCycles out;
    EdgeChain sym(m.edge_count());
    for (EdgeId e : d.edges) sym.flip(e);
    for (EdgeId e : d_prime.edges) sym.flip(e);

    std::vector<char> visited(static_cast<std::size_t>(m.vertex_count()), 0);
    for (VertexId start = 0; start < m.vertex_count(); ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        // Does start lie on a composition cycle?
        bool on_cycle = false;
        for (Dart dd : m.darts_at(start))
            if (sym.get(SurfaceMap::edge_of(dd))) on_cycle = true;
        if (!on_cycle) continue;

        DartWalk walk;
        VertexId v = start;
        bool take_prime = true;  // leave along the D' dimer first
        do {
            visited[static_cast<std::size_t>(v)] = 1;
            const Matching& side = take_prime ? d_prime : d;
            Dart step = -1;
            for (Dart dd : m.darts_at(v)) {
                EdgeId e = SurfaceMap::edge_of(dd);
                if (sym.get(e) && side.contains(e)) {
                    step = dd;
                    break;
                }
            }
            walk.darts.push_back(step);
            v = m.vertex_of(SurfaceMap::opposite(step));
            take_prime = !take_prime;
        } while (v != start);
        out.cycles.push_back(std::move(walk));
    }
    out.delta = class_of(m, basis, sym);
    return out;
}

ClassResolvedPartition partition_bruteforce(const SurfaceMap& m, const HomologyBasis& basis,
                                            const WeightSystem& ws, const Matching& d0) {
    if (!is_perfect_matching(m, d0)) throw NoMatchingExists("D0 is not a perfect matching");
    ClassResolvedPartition table;
    for (const auto& d : enumerate_matchings(m)) {
        auto comp = composition_delta(m, basis, d0, d);
        table.z_alpha[comp.delta.to_mask()] += weight(d, ws);
        table.total += weight(d, ws);
    }
    return table;
}

ClassResolvedPartition partition_bruteforce(const SurfaceMap& m, const HomologyBasis& basis,
                                            const WeightSystem& ws) {
    auto d0 = first_matching(m);
    if (!d0) return {};
    return partition_bruteforce(m, basis, ws, *d0);
}

Rational correlation_bruteforce(const SurfaceMap& m, const WeightSystem& ws,
                                const std::vector<EdgeId>& edges) {
    std::set<VertexId> endpoints;
    bool shared = false;
    for (EdgeId e : edges) {
        auto [u, v] = m.endpoints(e);
        if (u == v || !endpoints.insert(u).second || !endpoints.insert(v).second)
            shared = true;
    }
    Rational z(0), zc(0);
    for (const auto& d : enumerate_matchings(m)) {
        Rational wd = weight(d, ws);
        z += wd;
        bool all = true;
        for (EdgeId e : edges)
            if (!d.contains(e)) all = false;
        if (all) zc += wd;
    }
    if (z == 0) throw EmptyPartition("no perfect matchings, Z = 0");
    if (shared) return Rational(0);
    return zc / z;
}

}  // namespace dimsurf
