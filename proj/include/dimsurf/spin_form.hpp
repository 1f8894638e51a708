#pragma once

#include <vector>

#include "dimsurf/kasteleyn.hpp"
#include "dimsurf/matchings.hpp"
#include "dimsurf/surface_map.hpp"

namespace dimsurf {

/// Quadratic form on H_1(Sigma;Z2) stored by its values on the fixed basis
/// and the intersection Gram matrix; evaluation extends by polarization:
/// q(sum c_i a_i) = sum c_i b_i + sum_{i<j} c_i c_j G_ij.
struct QuadraticForm {
    int genus = 0;
    gf2::Vec b;                   // values on the basis cycles
    std::vector<gf2::Vec> gram;   // 2g x 2g intersection matrix rows

    bool eval(const gf2::Vec& coords) const;
    bool eval_mask(std::uint32_t mask) const;

    friend bool operator==(const QuadraticForm& x, const QuadraticForm& y) {
        return x.genus == y.genus && x.b == y.b;
    }
};

/// Product over the walk of +-1 edge signs: +1 where K agrees with the
/// traversal direction.
int eps_curve(const SurfaceMap& m, const Orientation& k, const DartWalk& c);

/// Number of vertices of the simple closed walk C whose dimer leaves C on
/// its left. Throws NotSimple.
int ell_left(const SurfaceMap& m, const Matching& d, const DartWalk& c);

/// Discrete spin structure q^K_D: basis values from
/// (-1)^{b_i} = (-eps^K(a_i)) * (-1)^{ell_D(a_i)}.
QuadraticForm build_form(const SurfaceMap& m, const HomologyBasis& basis, const Orientation& k,
                         const Matching& d);

/// Sign of sum_alpha (-1)^{q(alpha)} (the sum is +-2^g); throws
/// DegenerateForm otherwise.
int arf(const QuadraticForm& q);

/// Unique Delta with (q + q')(alpha) = Delta . alpha; the forms must share
/// their Gram matrix.
gf2::Vec delta_of_pair(const QuadraticForm& q, const QuadraticForm& q_prime);

}  // namespace dimsurf
