#include "dimsurf/pfaffian.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "dimsurf/errors.hpp"
#include "dimsurf/parallel.hpp"

namespace dimsurf {

KasteleynMatrix kasteleyn_matrix(const SurfaceMap& m, const Orientation& k,
                                 const WeightSystem& ws) {
    const int n = m.vertex_count();
    KasteleynMatrix km{RatMat(n, n)};
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        auto [u, v] = m.endpoints(e);
        if (u == v) continue;
        const Rational& w = ws.w[static_cast<std::size_t>(e)];
        if (m.vertex_of(k.tail[static_cast<std::size_t>(e)]) == u) {
            km.a.at(u, v) += w;
            km.a.at(v, u) -= w;
        } else {
            km.a.at(v, u) += w;
            km.a.at(u, v) -= w;
        }
    }
    return km;
}

namespace {

Rational pfaffian_eliminate(RatMat a);

}  // namespace

Rational pfaffian_exact(RatMat a) {
    const int n = a.rows();
    if (n % 2 != 0) throw OddSize("pfaffian needs an even-sized matrix");
    if (!a.is_skew_symmetric()) throw NotSkew("pfaffian needs a skew-symmetric matrix");
    if (n == 0) return Rational(1);
#ifndef NDEBUG
    {
        RatMat copy = a;
        Rational pf = pfaffian_eliminate(std::move(copy));
        assert(pf * pf == determinant_exact(a));
        return pf;
    }
#else
    return pfaffian_eliminate(std::move(a));
#endif
}

namespace {

Rational pfaffian_eliminate(RatMat a) {
    const int n = a.rows();
    Rational result(1);
    int sign = 1;
    for (int k = 0; k < n; k += 2) {
        int p = -1;
        for (int j = k + 1; j < n; ++j)
            if (a.at(k, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) return Rational(0);
        if (p != k + 1) {
            a.swap_rows(p, k + 1);
            a.swap_cols(p, k + 1);
            sign = -sign;
        }
        const Rational pivot = a.at(k, k + 1);
        result *= pivot;
        for (int i = k + 2; i < n; ++i) {
            if (a.at(k, i) == 0) continue;
            Rational f = a.at(k, i) / pivot;
            for (int c = 0; c < n; ++c) a.at(i, c) -= f * a.at(k + 1, c);
            for (int r = 0; r < n; ++r) a.at(r, i) -= f * a.at(r, k + 1);
        }
    }
    return sign < 0 ? -result : result;
}

}  // namespace

int matching_sign(const SurfaceMap& m, const Orientation& k, const Matching& d) {
    // Canonical representative: each pair (i,j) with i < j, pairs sorted by i.
    std::vector<std::pair<int, int>> pairs;
    int eps = 1;
    for (EdgeId e : d.edges) {
        auto [u, v] = m.endpoints(e);
        int i = std::min(u, v), j = std::max(u, v);
        pairs.emplace_back(i, j);
        if (m.vertex_of(k.tail[static_cast<std::size_t>(e)]) != i) eps = -eps;
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> perm;
    perm.reserve(pairs.size() * 2);
    for (auto [i, j] : pairs) {
        perm.push_back(i);
        perm.push_back(j);
    }
    return permutation_sign(perm) * eps;
}

IdentityReport pfaffian_identity(const SurfaceMap& m, const HomologyBasis& basis,
                                 const Orientation& k, const WeightSystem& ws,
                                 const Matching& d0) {
    IdentityReport rep;
    rep.lhs = Rational(matching_sign(m, k, d0)) * pfaffian_exact(kasteleyn_matrix(m, k, ws).a);
    const QuadraticForm q = build_form(m, basis, k, d0);
    const auto table = partition_bruteforce(m, basis, ws, d0);
    rep.rhs = 0;
    for (const auto& [mask, z] : table.z_alpha)
        rep.rhs += q.eval_mask(mask) ? -z : z;
    rep.ok = (rep.lhs == rep.rhs);
    return rep;
}

void require_pfaffian_identity(const SurfaceMap& m, const HomologyBasis& basis,
                               const Orientation& k, const WeightSystem& ws,
                               const Matching& d0) {
    auto rep = pfaffian_identity(m, basis, k, ws, d0);
    if (!rep.ok)
        throw IdentityViolated("eps Pf = " + to_pq_string(rep.lhs) +
                               " but signed class sum = " + to_pq_string(rep.rhs));
}

ClassFamily class_family(const SurfaceMap& m, const WeightSystem& ws, int threads) {
    if (m.vertex_count() % 2 != 0)
        throw OddVertexCount("partition formulas need an even vertex count");
    ClassFamily fam;
    fam.basis = homology_basis(m);
    fam.cocycles = cocycle_basis(m, fam.basis);
    fam.weights = ws;
    fam.matchings = enumerate_matchings(m);
    fam.has_matching = !fam.matchings.empty();
    if (fam.has_matching) fam.d0 = fam.matchings.front();

    const auto reps = class_representatives(m, fam.cocycles);
    fam.classes.resize(reps.size());
    parallel_for(static_cast<int>(reps.size()), threads, [&](int i) {
        ClassData cd;
        cd.k = reps[static_cast<std::size_t>(i)];
        cd.a = kasteleyn_matrix(m, cd.k, ws).a;
        cd.pf = pfaffian_exact(cd.a);
        if (fam.has_matching) {
            cd.q = build_form(m, fam.basis, cd.k, fam.d0);
            cd.arf_sign = arf(cd.q);
            cd.eps_d0 = matching_sign(m, cd.k, fam.d0);
        }
        fam.classes[static_cast<std::size_t>(i)] = std::move(cd);
    });
    return fam;
}

Rational partition_pfaffian(const SurfaceMap& m, const ClassFamily& fam) {
    (void)m;
    if (!fam.has_matching) {
        for (const auto& cd : fam.classes)
            if (cd.pf != 0)
                throw IdentityViolated("matching-free graph with a nonzero class Pfaffian");
        return Rational(0);
    }
    Rational sum(0);
    for (const auto& cd : fam.classes) sum += Rational(cd.arf_sign * cd.eps_d0) * cd.pf;
    return sum / Rational(1L << fam.basis.genus);
}

Rational partition_pfaffian(const SurfaceMap& m, const HomologyBasis& basis,
                            const WeightSystem& ws, int threads) {
    (void)basis;
    return partition_pfaffian(m, class_family(m, ws, threads));
}

Rational z_alpha_pfaffian(const SurfaceMap& m, const ClassFamily& fam, const gf2::Vec& alpha) {
    (void)m;
    if (!fam.has_matching) throw NoMatchingExists("Z_alpha needs a base matching D0");
    Rational sum(0);
    for (const auto& cd : fam.classes) {
        Rational term = Rational(cd.eps_d0) * cd.pf;
        sum += cd.q.eval(alpha) ? -term : term;
    }
    return sum / Rational(1L << (2 * fam.basis.genus));
}

Rational z_alpha_pfaffian(const SurfaceMap& m, const HomologyBasis& basis,
                          const WeightSystem& ws, const Matching& d0, const gf2::Vec& alpha) {
    if (m.vertex_count() % 2 != 0)
        throw OddVertexCount("partition formulas need an even vertex count");
    if (!is_perfect_matching(m, d0)) throw NoMatchingExists("D0 is not a perfect matching");
    const auto cocycles = cocycle_basis(m, basis);
    Rational sum(0);
    for (const auto& k : class_representatives(m, cocycles)) {
        const QuadraticForm q = build_form(m, basis, k, d0);
        Rational term = Rational(matching_sign(m, k, d0)) *
                        pfaffian_exact(kasteleyn_matrix(m, k, ws).a);
        sum += q.eval(alpha) ? -term : term;
    }
    return sum / Rational(1L << (2 * basis.genus));
}

namespace {

struct EdgeIndexSet {
    bool shares_vertex = false;
    std::vector<int> removed;  // i1 j1 i2 j2 ... with i < j, pairs by first
};

EdgeIndexSet index_set(const SurfaceMap& m, const std::vector<EdgeId>& edges) {
    EdgeIndexSet s;
    std::set<VertexId> seen;
    std::vector<std::pair<int, int>> pairs;
    for (EdgeId e : edges) {
        auto [u, v] = m.endpoints(e);
        if (u == v || !seen.insert(u).second || !seen.insert(v).second) s.shares_vertex = true;
        pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [i, j] : pairs) {
        s.removed.push_back(i);
        s.removed.push_back(j);
    }
    return s;
}

// Product over the query edges of eps_ij(e) w(e) for one representative,
// with (i,j) the sorted endpoints.
Rational edge_factor(const SurfaceMap& m, const ClassFamily& fam, const ClassData& cd,
                     const std::vector<EdgeId>& edges) {
    Rational factor(1);
    for (EdgeId e : edges) {
        auto [u, v] = m.endpoints(e);
        const int i = std::min(u, v);
        const int tail = m.vertex_of(cd.k.tail[static_cast<std::size_t>(e)]);
        const Rational& w = fam.weights.w[static_cast<std::size_t>(e)];
        factor *= (tail == i) ? w : -w;
    }
    return factor;
}

}  // namespace

int removal_sign(int n, const std::vector<int>& removed) {
    std::vector<char> drop(static_cast<std::size_t>(n), 0);
    for (int i : removed) drop[static_cast<std::size_t>(i)] = 1;
    std::vector<int> perm = removed;
    for (int i = 0; i < n; ++i)
        if (!drop[static_cast<std::size_t>(i)]) perm.push_back(i);
    return permutation_sign(perm);
}

Rational correlation_pfaffian(const SurfaceMap& m, const ClassFamily& fam,
                              const std::vector<EdgeId>& edges) {
    if (!fam.has_matching) throw ZeroPartition("no perfect matchings, Z = 0");
    Rational denom(0);
    for (const auto& cd : fam.classes) denom += Rational(cd.arf_sign * cd.eps_d0) * cd.pf;
    if (denom == 0) throw ZeroPartition("partition function vanishes");

    std::set<EdgeId> distinct(edges.begin(), edges.end());
    const auto idx = index_set(m, edges);
    if (idx.shares_vertex || distinct.size() != edges.size()) return Rational(0);

    const int sgn_i = removal_sign(m.vertex_count(), idx.removed);
    Rational numer(0);
    for (const auto& cd : fam.classes) {
        const Rational pf_minor = pfaffian_exact(remove_rows_cols(cd.a, idx.removed));
        numer += Rational(cd.arf_sign * cd.eps_d0 * sgn_i) * edge_factor(m, fam, cd, edges) *
                 pf_minor;
    }
    return numer / denom;
}

Rational correlation_pfaffian(const SurfaceMap& m, const HomologyBasis& basis,
                              const WeightSystem& ws, const std::vector<EdgeId>& edges,
                              int threads) {
    (void)basis;
    return correlation_pfaffian(m, class_family(m, ws, threads), edges);
}

std::optional<Rational> correlation_pfaffian_inverse(const SurfaceMap& m, const ClassFamily& fam,
                                                     const std::vector<EdgeId>& edges) {
    if (!fam.has_matching) throw ZeroPartition("no perfect matchings, Z = 0");
    Rational denom(0);
    for (const auto& cd : fam.classes) denom += Rational(cd.arf_sign * cd.eps_d0) * cd.pf;
    if (denom == 0) throw ZeroPartition("partition function vanishes");

    std::set<EdgeId> distinct(edges.begin(), edges.end());
    const auto idx = index_set(m, edges);
    if (idx.shares_vertex || distinct.size() != edges.size()) return Rational(0);

    const int k = static_cast<int>(edges.size());
    Rational numer(0);
    for (const auto& cd : fam.classes) {
        auto inv = inverse_exact(cd.a);
        if (!inv) return std::nullopt;
        const Rational pf_sub = pfaffian_exact(submatrix_on(*inv, idx.removed));
        Rational term = Rational(cd.arf_sign * cd.eps_d0) * cd.pf *
                        edge_factor(m, fam, cd, edges) * pf_sub;
        numer += (k % 2 == 0) ? term : -term;
    }
    return numer / denom;
}

}  // namespace dimsurf
