#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "dimsurf/rational.hpp"
#include "dimsurf/surface_map.hpp"

namespace dimsurf {

/// Perfect matching as a sorted list of edge ids.
struct Matching {
    std::vector<EdgeId> edges;

    bool contains(EdgeId e) const;
    friend bool operator==(const Matching&, const Matching&) = default;
    friend auto operator<=>(const Matching&, const Matching&) = default;
};

bool is_perfect_matching(const SurfaceMap& m, const Matching& d);

/// Positive exact weight per edge.
struct WeightSystem {
    std::vector<Rational> w;

    static WeightSystem unit(int n_edges) {
        WeightSystem ws;
        ws.w.assign(static_cast<std::size_t>(n_edges), Rational(1));
        return ws;
    }
};

/// All perfect matchings, each exactly once, in lexicographic order of the
/// sorted edge-id lists. Empty when none exist.
std::vector<Matching> enumerate_matchings(const SurfaceMap& m);

void for_each_matching(const SurfaceMap& m, const std::function<void(const Matching&)>& cb);

/// Lexicographically first perfect matching, if any.
std::optional<Matching> first_matching(const SurfaceMap& m);

Rational weight(const Matching& d, const WeightSystem& ws);

/// exp(-energy / temperature); throws NonpositiveTemperature.
double boltzmann_weight(double energy, double temperature);

/// Edge weights exp(-E(e)/T) converted exactly from their binary doubles.
WeightSystem weights_from_energies(const std::vector<double>& energies, double temperature);

/// Composition cycles of two matchings and the homology class of their union.
struct CompositionCycles {
    std::vector<DartWalk> cycles;  // disjoint simple even cycles, D'/D alternating
    gf2::Vec delta;                // class coordinates of the union
};

CompositionCycles composition_delta(const SurfaceMap& m, const HomologyBasis& basis,
                                    const Matching& d, const Matching& d_prime);

/// Z_alpha(D0) tables keyed by packed class coordinates.
struct ClassResolvedPartition {
    std::map<std::uint32_t, Rational> z_alpha;
    Rational total = 0;
};

ClassResolvedPartition partition_bruteforce(const SurfaceMap& m, const HomologyBasis& basis,
                                            const WeightSystem& ws, const Matching& d0);

/// Picks the lexicographically first matching as D0; when no matching
/// exists the table is empty and the total is 0.
ClassResolvedPartition partition_bruteforce(const SurfaceMap& m, const HomologyBasis& basis,
                                            const WeightSystem& ws);

/// <sigma_{e1}...sigma_{ek}> summed over all matchings; exact. Returns 0
/// when two of the edges share a vertex; throws EmptyPartition when Z = 0.
Rational correlation_bruteforce(const SurfaceMap& m, const WeightSystem& ws,
                                const std::vector<EdgeId>& edges);

}  // namespace dimsurf
