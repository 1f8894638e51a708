#pragma once

#include <vector>

#include "dimsurf/exact_linalg.hpp"
#include "dimsurf/kasteleyn.hpp"
#include "dimsurf/matchings.hpp"
#include "dimsurf/spin_form.hpp"

namespace dimsurf {

/// Skew-symmetric weighted adjacency matrix of a Kasteleyn orientation:
/// a_ij sums eps_ij(e) w(e) over the edges between i and j; loops drop out.
struct KasteleynMatrix {
    RatMat a;  // V x V
};

KasteleynMatrix kasteleyn_matrix(const SurfaceMap& m, const Orientation& k,
                                 const WeightSystem& ws);

/// Exact Pfaffian by sign-tracked skew elimination; throws OddSize/NotSkew.
Rational pfaffian_exact(RatMat a);

/// eps^K(D): sign of a canonical pair permutation times the product of the
/// per-dimer orientation signs. Representative-independent.
int matching_sign(const SurfaceMap& m, const Orientation& k, const Matching& d);

struct IdentityReport {
    Rational lhs;  // eps^K(D0) Pf(A^K)
    Rational rhs;  // sum_alpha (-1)^{q(alpha)} Z_alpha(D0)
    bool ok = false;
};

/// Checks eps^K(D0) Pf(A^K) = sum_alpha (-1)^{q^K_D0(alpha)} Z_alpha(D0)
/// against the brute-force class-resolved partition.
IdentityReport pfaffian_identity(const SurfaceMap& m, const HomologyBasis& basis,
                                 const Orientation& k, const WeightSystem& ws,
                                 const Matching& d0);

/// Same, throwing IdentityViolated on mismatch.
void require_pfaffian_identity(const SurfaceMap& m, const HomologyBasis& basis,
                               const Orientation& k, const WeightSystem& ws, const Matching& d0);

/// Everything the per-class sum needs, computed once per representative.
struct ClassData {
    Orientation k;
    RatMat a;  // Kasteleyn matrix
    QuadraticForm q;
    int arf_sign = 0;
    int eps_d0 = 0;
    Rational pf;
};

struct ClassFamily {
    HomologyBasis basis;
    CocycleBasis cocycles;
    WeightSystem weights;
    std::vector<Matching> matchings;
    std::vector<ClassData> classes;  // indexed by cocycle-subset bitmask
    bool has_matching = false;
    Matching d0;  // lexicographically first matching when one exists
};

ClassFamily class_family(const SurfaceMap& m, const WeightSystem& ws, int threads = 1);

/// Z = 2^{-g} sum over class representatives of Arf(q) eps^K(D0) Pf(A^K).
Rational partition_pfaffian(const SurfaceMap& m, const HomologyBasis& basis,
                            const WeightSystem& ws, int threads = 1);
Rational partition_pfaffian(const SurfaceMap& m, const ClassFamily& fam);

/// Z_alpha(D0) via the character orthogonality inversion.
Rational z_alpha_pfaffian(const SurfaceMap& m, const HomologyBasis& basis,
                          const WeightSystem& ws, const Matching& d0, const gf2::Vec& alpha);
Rational z_alpha_pfaffian(const SurfaceMap& m, const ClassFamily& fam, const gf2::Vec& alpha);

/// Correlation functions through Pfaffian minors; valid on multigraphs via
/// per-edge factors eps(e) w(e). Returns 0 when edges share a vertex;
/// throws ZeroPartition when Z = 0.
Rational correlation_pfaffian(const SurfaceMap& m, const HomologyBasis& basis,
                              const WeightSystem& ws, const std::vector<EdgeId>& edges,
                              int threads = 1);
Rational correlation_pfaffian(const SurfaceMap& m, const ClassFamily& fam,
                              const std::vector<EdgeId>& edges);

/// Inverse-matrix fast path; requires every class matrix invertible.
/// Returns nullopt when one of them is singular.
std::optional<Rational> correlation_pfaffian_inverse(const SurfaceMap& m, const ClassFamily& fam,
                                                     const std::vector<EdgeId>& edges);

/// Sign of the permutation sending (0..2n-1) to I followed by the rest in
/// order; I lists removed indices in their given order.
int removal_sign(int n, const std::vector<int>& removed);

}  // namespace dimsurf
