#include "dimsurf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "dimsurf/errors.hpp"
#include "dimsurf/grassmann.hpp"
#include "dimsurf/pfaffian.hpp"

namespace dimsurf {

namespace {

using Clock = std::chrono::steady_clock;

struct Suite {
    VerifyReport report;
    Clock::time_point mark = Clock::now();

    void add(const std::string& name, bool pass, const std::string& left,
             const std::string& right) {
        auto now = Clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - mark).count();
        mark = now;
        report.checks.push_back({name, pass ? "PASS" : "FAIL", left, right, ms});
    }
    void skip(const std::string& name, const std::string& why) {
        mark = Clock::now();
        report.checks.push_back({name, "SKIP", why, "-", 0.0});
    }
};

std::string itos(long v) { return std::to_string(v); }

// Relabels vertices by a fixed pseudorandom permutation and rebuilds the map.
SurfaceMap relabel(const SurfaceMap& m, const std::vector<int>& perm) {
    RawMap raw;
    raw.n_vertices = m.vertex_count();
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        auto [u, v] = m.endpoints(e);
        raw.edges.emplace_back(perm[static_cast<std::size_t>(u)],
                               perm[static_cast<std::size_t>(v)]);
    }
    raw.rotations.assign(static_cast<std::size_t>(m.vertex_count()), {});
    for (VertexId v = 0; v < m.vertex_count(); ++v)
        raw.rotations[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
            m.darts_at(v);
    return SurfaceMap::build(raw);
}

}  // namespace

VerifyReport run_verify_suite(const SurfaceMap& m, const WeightSystem& ws, int threads) {
    Suite s;
    const int g = m.genus();
    const int n2g = 2 * g;

    s.add("euler_parity", (m.vertex_count() - m.edge_count() + m.face_count()) % 2 == 0,
          itos(m.vertex_count() - m.edge_count() + m.face_count()), "even");
    s.add("genus_nonneg", g >= 0, itos(g), ">=0");
    {
        std::size_t total = 0;
        for (const auto& f : m.faces()) total += f.size();
        s.add("face_orbit_cover", total == static_cast<std::size_t>(2 * m.edge_count()),
              itos(static_cast<long>(total)), itos(2L * m.edge_count()));
    }

    if (m.vertex_count() % 2 != 0) {
        bool threw = false;
        try {
            construct_kasteleyn(m);
        } catch (const OddVertexCount&) {
            threw = true;
        }
        s.add("kasteleyn_existence", threw, "OddVertexCount", "OddVertexCount");
        return s.report;
    }

    const Orientation k0 = construct_kasteleyn(m);
    s.add("kasteleyn_existence", is_kasteleyn(m, k0).ok, "construct", "Kasteleyn");

    const ClassFamily fam = class_family(m, ws, threads);
    const auto& basis = fam.basis;
    const auto& reps = fam.classes;
    const std::size_t n_classes = reps.size();

    s.add("kasteleyn_class_count", n_classes == (std::size_t{1} << n2g),
          itos(static_cast<long>(n_classes)), itos(1L << n2g));
    {
        bool ok = true;
        for (const auto& cd : reps)
            if (!is_kasteleyn(m, cd.k).ok) ok = false;
        s.add("kasteleyn_all_faces", ok, ok ? "all -1" : "violation", "all -1");
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i < n_classes && ok; ++i)
            for (std::size_t j = 0; j < n_classes && ok; ++j) {
                bool eq = equivalence(m, reps[i].k, reps[j].k).equivalent;
                if (eq != (i == j)) ok = false;
            }
        s.add("class_pairwise_inequivalent", ok, ok ? "distinct" : "collision", "distinct");
    }
    {
        // theta(K,K') + theta(K',K'') = theta(K,K'') over sampled triples.
        auto theta = [&](const Orientation& a, const Orientation& b) {
            EdgeChain t(m.edge_count());
            for (EdgeId e = 0; e < m.edge_count(); ++e)
                if (a.tail[static_cast<std::size_t>(e)] != b.tail[static_cast<std::size_t>(e)])
                    t.set(e, true);
            return t;
        };
        bool ok = true;
        for (std::size_t i = 0; i < n_classes && ok; ++i)
            for (std::size_t j = 0; j < n_classes && ok; ++j)
                for (std::size_t l = 0; l < n_classes && ok; ++l) {
                    EdgeChain boths = theta(reps[i].k, reps[j].k) ^ theta(reps[j].k, reps[l].k);
                    if (!(boths == theta(reps[i].k, reps[l].k))) ok = false;
                }
        s.add("theta_additivity", ok, ok ? "additive" : "violation", "additive");
    }
    {
        // Free action: acting by a basis-subset cocycle is trivial only for
        // the empty subset.
        bool ok = true;
        for (std::uint32_t mask = 0; mask < n_classes; ++mask) {
            EdgeChain z(m.edge_count());
            for (int i = 0; i < n2g; ++i)
                if ((mask >> i) & 1) z ^= fam.cocycles.cocycles[static_cast<std::size_t>(i)];
            bool eq = equivalence(m, k0, act_cocycle(m, k0, z)).equivalent;
            if (eq != (mask == 0)) ok = false;
        }
        s.add("h1_action_free", ok, ok ? "free" : "violation", "free");
    }
    {
        bool ok = true;
        Orientation k = k0;
        for (VertexId v = 0; v < m.vertex_count(); ++v) {
            k = flip_vertex(m, k, v);
            if (!is_kasteleyn(m, k).ok) ok = false;
        }
        // All vertices flipped once: every non-loop edge reversed twice.
        if (!(k == k0)) ok = false;
        s.add("flip_preserves_kasteleyn", ok, ok ? "closed" : "violation", "closed");
    }

    if (!fam.has_matching) {
        bool all_zero = true;
        for (const auto& cd : reps)
            if (cd.pf != 0) all_zero = false;
        s.add("no_matching_pfaffians_vanish", all_zero, all_zero ? "all 0" : "nonzero", "all 0");
        Rational z = partition_pfaffian(m, fam);
        s.add("partition_match", z == 0, to_pq_string(z), "0/1");
        return s.report;
    }

    const auto& matchings = fam.matchings;
    {
        bool ok = true;
        for (const auto& cd : reps)
            for (std::uint32_t x = 0; x < n_classes && ok; ++x)
                for (std::uint32_t y = 0; y < n_classes && ok; ++y) {
                    bool lhs = cd.q.eval_mask(x ^ y);
                    bool rhs = cd.q.eval_mask(x) ^ cd.q.eval_mask(y) ^
                               basis.intersect(gf2::Vec::from_mask(n2g, x),
                                               gf2::Vec::from_mask(n2g, y));
                    if (lhs != rhs) ok = false;
                }
        s.add("quadratic_identity", ok, ok ? "holds" : "violation", "holds");
    }
    {
        // Comparing forms across orientation classes: q^K + q^K' acts on basis
        // classes as pairing with the disagreement cocycle theta.
        bool ok = true;
        for (std::size_t i = 0; i < n_classes && ok; ++i)
            for (std::size_t j = 0; j < n_classes && ok; ++j) {
                EdgeChain t(m.edge_count());
                for (EdgeId e = 0; e < m.edge_count(); ++e)
                    if (reps[i].k.tail[static_cast<std::size_t>(e)] !=
                        reps[j].k.tail[static_cast<std::size_t>(e)])
                        t.set(e, true);
                for (int bi = 0; bi < n2g; ++bi) {
                    bool lhs = reps[i].q.b.get(bi) ^ reps[j].q.b.get(bi);
                    bool rhs = t.dot(basis.cycle_chains[static_cast<std::size_t>(bi)]);
                    if (lhs != rhs) ok = false;
                }
            }
        s.add("form_shift_by_theta", ok, ok ? "holds" : "violation", "holds");
    }
    {
        // Comparing forms across matchings (q_D + q_D' = intersection with
        // Delta) and the left-count cross-check, over all matching pairs.
        bool ok = true, ell_ok = true;
        for (const auto& da : matchings)
            for (const auto& db : matchings) {
                auto comp = composition_delta(m, basis, da, db);
                QuadraticForm qa = build_form(m, basis, k0, da);
                QuadraticForm qb = build_form(m, basis, k0, db);
                for (int bi = 0; bi < n2g; ++bi) {
                    gf2::Vec unit(n2g);
                    unit.set(bi, true);
                    bool lhs = qa.b.get(bi) ^ qb.b.get(bi);
                    bool rhs = basis.intersect(unit, comp.delta);
                    if (lhs != rhs) ok = false;
                    const auto& cyc = basis.cycles[static_cast<std::size_t>(bi)];
                    int ells = ell_left(m, da, cyc) + ell_left(m, db, cyc);
                    if ((ells % 2 != 0) != rhs) ell_ok = false;
                }
            }
        s.add("form_shift_by_delta", ok, ok ? "holds" : "violation", "holds");
        s.add("ell_delta_crosscheck", ell_ok, ell_ok ? "holds" : "violation", "holds");
    }
    {
        std::set<gf2::Vec> forms;
        for (const auto& cd : reps) forms.insert(cd.q.b);
        s.add("class_form_bijection", forms.size() == n_classes, itos(static_cast<long>(forms.size())),
              itos(static_cast<long>(n_classes)));
    }
    {
        // Equivalent matchings induce equal forms.
        bool ok = true;
        for (const auto& da : matchings)
            for (const auto& db : matchings) {
                auto comp = composition_delta(m, basis, da, db);
                if (comp.delta.any()) continue;
                if (!(build_form(m, basis, k0, da) == build_form(m, basis, k0, db))) ok = false;
            }
        s.add("form_matching_invariance", ok, ok ? "holds" : "violation", "holds");
    }
    {
        long plus = 0;
        for (std::uint32_t bmask = 0; bmask < (std::uint32_t{1} << n2g); ++bmask) {
            QuadraticForm q{g, gf2::Vec::from_mask(n2g, bmask), basis.gram};
            if (arf(q) == 1) ++plus;
        }
        const long expected = ((1L << (2 * g)) + (1L << g)) / 2;
        s.add("arf_census", plus == expected, itos(plus), itos(expected));
    }
    {
        bool ok = true;
        for (const auto& ca : reps)
            for (const auto& cb : reps) {
                gf2::Vec delta = delta_of_pair(ca.q, cb.q);
                int prod = arf(ca.q) * arf(cb.q);
                int rhs = ca.q.eval(delta) ? -1 : 1;
                if (prod != rhs) ok = false;
            }
        s.add("arf_product_rule", ok, ok ? "holds" : "violation", "holds");
    }
    {
        // delta_of_pair recovers Delta(D,D') from the two forms.
        bool ok = true;
        for (const auto& da : matchings)
            for (const auto& db : matchings) {
                auto comp = composition_delta(m, basis, da, db);
                QuadraticForm qa = build_form(m, basis, k0, da);
                QuadraticForm qb = build_form(m, basis, k0, db);
                if (!(delta_of_pair(qa, qb) == comp.delta)) ok = false;
            }
        s.add("delta_of_pair_matches", ok, ok ? "holds" : "violation", "holds");
    }
    {
        // Well-definedness of the form on available representatives: every
        // simple closed walk in the graph must reproduce its class value.
        bool ok = true;
        long tested = 0;
        for (const auto& cd : reps) {
            for (const auto& cyc : basis.cycles) {
                // also test reversed traversals
                const DartWalk rev = reverse_walk(cyc);
                for (const DartWalk* c : {&cyc, &rev}) {
                    gf2::Vec cls = class_of(m, basis, chain_of_walk(m, *c));
                    int direct = -eps_curve(m, cd.k, *c) *
                                 (ell_left(m, fam.d0, *c) % 2 == 0 ? 1 : -1);
                    int predicted = cd.q.eval(cls) ? -1 : 1;
                    if (direct != predicted) ok = false;
                    ++tested;
                }
            }
        }
        s.add("form_well_defined", ok, itos(tested), ok ? "consistent" : "violation");
    }
    {
        bool ok = true;
        for (const auto& cd : reps) {
            IdentityReport rep = pfaffian_identity(m, basis, cd.k, ws, fam.d0);
            if (!rep.ok) ok = false;
        }
        s.add("pfaffian_identity", ok, itos(static_cast<long>(n_classes)),
              ok ? "all equal" : "violation");
    }
    {
        Rational lhs = pfaffian_exact(kasteleyn_matrix(m, k0, ws).a);
        Rational rhs(0);
        for (const auto& d : matchings) rhs += Rational(matching_sign(m, k0, d)) * weight(d, ws);
        s.add("pf_expansion", lhs == rhs, to_pq_string(lhs), to_pq_string(rhs));
    }
    {
        Rational zp = partition_pfaffian(m, fam);
        Rational zb = partition_bruteforce(m, basis, ws, fam.d0).total;
        s.add("partition_match", zp == zb, to_pq_string(zp), to_pq_string(zb));
    }
    {
        auto table = partition_bruteforce(m, basis, ws, fam.d0);
        bool ok = true;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n2g); ++mask) {
            Rational lhs = z_alpha_pfaffian(m, fam, gf2::Vec::from_mask(n2g, mask));
            auto it = table.z_alpha.find(mask);
            Rational rhs = (it == table.z_alpha.end()) ? Rational(0) : it->second;
            if (lhs != rhs) ok = false;
        }
        s.add("z_alpha_match", ok, ok ? "table equal" : "violation", "table equal");
    }
    {
        bool ok = true;
        for (const auto& cd : reps) {
            int ref = 0;
            for (const auto& d : matchings) {
                int sgn = arf(build_form(m, basis, cd.k, d)) * matching_sign(m, cd.k, d);
                if (ref == 0) ref = sgn;
                if (sgn != ref) ok = false;
            }
        }
        s.add("sign_d0_invariant", ok, ok ? "constant" : "violation", "constant");
    }
    {
        // Relabeling vertices leaves eps(D0) Pf invariant.
        std::vector<int> perm(static_cast<std::size_t>(m.vertex_count()));
        for (int i = 0; i < m.vertex_count(); ++i) perm[static_cast<std::size_t>(i)] = i;
        std::mt19937 rng(12345);
        std::shuffle(perm.begin(), perm.end(), rng);
        SurfaceMap m2 = relabel(m, perm);
        Orientation k2{k0.tail};  // same darts, same tails: the same orientation
        Matching d2;
        for (EdgeId e : fam.d0.edges) d2.edges.push_back(e);
        Rational lhs = Rational(matching_sign(m, k0, fam.d0)) *
                       pfaffian_exact(kasteleyn_matrix(m, k0, ws).a);
        Rational rhs = Rational(matching_sign(m2, k2, d2)) *
                       pfaffian_exact(kasteleyn_matrix(m2, k2, ws).a);
        s.add("relabel_invariance", lhs == rhs, to_pq_string(lhs), to_pq_string(rhs));
    }
    {
        // Flipping a vertex negates eps and Pf and fixes the summand.
        Orientation kf = flip_vertex(m, k0, 0);
        Rational pf0 = pfaffian_exact(kasteleyn_matrix(m, k0, ws).a);
        Rational pff = pfaffian_exact(kasteleyn_matrix(m, kf, ws).a);
        int e0 = matching_sign(m, k0, fam.d0);
        int ef = matching_sign(m, kf, fam.d0);
        bool ok = (pff == -pf0) && (ef == -e0) &&
                  (Rational(e0) * pf0 == Rational(ef) * pff) &&
                  (build_form(m, basis, k0, fam.d0) == build_form(m, basis, kf, fam.d0));
        s.add("flip_covariance", ok, ok ? "covariant" : "violation", "covariant");
    }
    {
        // Correlations: all single edges and all vertex-disjoint pairs.
        bool ok = true;
        long checked = 0;
        for (EdgeId e = 0; e < m.edge_count(); ++e) {
            if (m.is_loop(e)) continue;
            Rational a = correlation_pfaffian(m, fam, {e});
            Rational b = correlation_bruteforce(m, ws, {e});
            if (a != b) ok = false;
            ++checked;
        }
        for (EdgeId e1 = 0; e1 < m.edge_count(); ++e1)
            for (EdgeId e2 = e1 + 1; e2 < m.edge_count(); ++e2) {
                if (m.is_loop(e1) || m.is_loop(e2)) continue;
                auto [a1, b1] = m.endpoints(e1);
                auto [a2, b2] = m.endpoints(e2);
                if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
                Rational a = correlation_pfaffian(m, fam, {e1, e2});
                Rational b = correlation_bruteforce(m, ws, {e1, e2});
                if (a != b) ok = false;
                ++checked;
            }
        s.add("correlations_match", ok, itos(checked), ok ? "equal" : "violation");
    }
    {
        bool ok = true;
        for (const auto& cd : reps)
            if (cd.pf * cd.pf != determinant_exact(cd.a)) ok = false;
        s.add("pf_squared", ok, ok ? "holds" : "violation", "holds");
    }
    if (m.vertex_count() <= 12) {
        Rational zg = partition_as_grassmann(m, ws);
        Rational zp = partition_pfaffian(m, fam);
        s.add("grassmann_partition", zg == zp, to_pq_string(zg), to_pq_string(zp));
    } else {
        s.skip("grassmann_partition", "V>12");
    }

    return s.report;
}

std::string verify_tsv(const VerifyReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks)
        out << c.name << "\t" << c.status << "\t" << c.left << "\t" << c.right << "\n";
    return out.str();
}

}  // namespace dimsurf
