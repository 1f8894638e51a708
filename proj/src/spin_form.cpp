#include "dimsurf/spin_form.hpp"

#include "dimsurf/errors.hpp"

namespace dimsurf {

bool QuadraticForm::eval(const gf2::Vec& coords) const {
    bool r = b.dot(coords);
    const int n = 2 * genus;
    for (int i = 0; i < n; ++i) {
        if (!coords.get(i)) continue;
        for (int j = i + 1; j < n; ++j)
            if (coords.get(j) && gram[static_cast<std::size_t>(i)].get(j)) r = !r;
    }
    return r;
}

bool QuadraticForm::eval_mask(std::uint32_t mask) const {
    return eval(gf2::Vec::from_mask(2 * genus, mask));
}

int eps_curve(const SurfaceMap& m, const Orientation& k, const DartWalk& c) {
    (void)m;
    int sign = 1;
    for (Dart d : c.darts)
        if (!k.oriented_as(d)) sign = -sign;
    return sign;
}

int ell_left(const SurfaceMap& m, const Matching& d, const DartWalk& c) {
    if (!is_simple_walk(m, c)) throw NotSimple("ell_left needs a simple closed walk");
    const EdgeChain c_edges = chain_of_walk(m, c);
    const int len = c.length();
    int count = 0;
    for (int i = 0; i < len; ++i) {
        const Dart out = c.darts[static_cast<std::size_t>(i)];
        const Dart in =
            SurfaceMap::opposite(c.darts[static_cast<std::size_t>((i + len - 1) % len)]);
        const VertexId v = m.vertex_of(out);
        // Dimer at v; skip it when it lies on C itself.
        for (Dart dd : m.darts_at(v)) {
            const EdgeId e = SurfaceMap::edge_of(dd);
            if (!d.contains(e)) continue;
            if (!c_edges.get(e) && in_ccw_arc(m, out, in, dd)) ++count;
            break;
        }
    }
    return count;
}

QuadraticForm build_form(const SurfaceMap& m, const HomologyBasis& basis, const Orientation& k,
                         const Matching& d) {
    QuadraticForm q;
    q.genus = basis.genus;
    q.gram = basis.gram;
    q.b = gf2::Vec(2 * basis.genus);
    for (int i = 0; i < 2 * basis.genus; ++i) {
        const auto& c = basis.cycles[static_cast<std::size_t>(i)];
        const int s = -eps_curve(m, k, c) * (ell_left(m, d, c) % 2 == 0 ? 1 : -1);
        q.b.set(i, s == -1);
    }
    return q;
}

int arf(const QuadraticForm& q) {
    const int n = 2 * q.genus;
    long sum = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        sum += q.eval_mask(mask) ? -1 : 1;
    const long expected = 1L << q.genus;
    if (sum == expected) return 1;
    if (sum == -expected) return -1;
    throw DegenerateForm("character sum is not +-2^g");
}

gf2::Vec delta_of_pair(const QuadraticForm& q, const QuadraticForm& q_prime) {
    // (q + q') is linear; on the basis it is b + b'. Solve G delta = b + b'.
    gf2::Vec rhs = q.b ^ q_prime.b;
    auto sol = gf2::solve(q.gram, rhs);
    if (!sol) throw DegenerateForm("gram matrix is singular");
    return *sol;
}

}  // namespace dimsurf
