#pragma once

#include <cstdint>

#include "dimsurf/exact_linalg.hpp"
#include "dimsurf/matchings.hpp"
#include "dimsurf/surface_map.hpp"

namespace dimsurf {

/// Element of the exterior algebra on n generators, stored densely as a
/// coefficient per generator subset. Oracle-scale only (n <= 20).
class GrassmannElement {
public:
    explicit GrassmannElement(int n);

    static GrassmannElement scalar(int n, const Rational& c);
    static GrassmannElement generator(int n, int i);

    int generators() const { return n_; }
    const Rational& coeff(std::uint32_t subset) const { return c_[subset]; }
    Rational& coeff(std::uint32_t subset) { return c_[subset]; }
    std::uint32_t subset_count() const { return static_cast<std::uint32_t>(c_.size()); }

    GrassmannElement& operator+=(const GrassmannElement& o);
    GrassmannElement& operator*=(const Rational& s);

private:
    int n_;
    std::vector<Rational> c_;
};

/// Bilinear product with the anticommutation shuffle sign; monomials with a
/// repeated generator vanish. Throws MismatchedAlgebra.
GrassmannElement multiply(const GrassmannElement& a, const GrassmannElement& b);

/// exp of a nilpotent even element by its terminating series.
GrassmannElement exp_nilpotent(const GrassmannElement& a);

/// Berezin integral of exp(1/2 sum a_ij phi_i phi_j): the top coefficient,
/// equal to Pf(A). Throws OddDimension.
Rational integral_neutral(const RatMat& a);

/// Top coefficient of exp(sum psi_i a_ij psi*_j) in the d(psi)d(psi*)
/// ordering; equals (-1)^{k(k-1)/2} Det(A).
Rational integral_charged(const RatMat& a);

/// True iff Pf(A)^2 = Det(A) exactly, with the Pfaffian taken through the
/// Grassmann route.
bool pf_squared_check(const RatMat& a);

/// Partition function evaluated through Berezin integrals, one per
/// orientation class. Desk scale only: throws TooLarge above 12 vertices.
Rational partition_as_grassmann(const SurfaceMap& m, const WeightSystem& ws);

}  // namespace dimsurf
