#include "dimsurf/grassmann.hpp"

#include <bit>

#include "dimsurf/errors.hpp"
#include "dimsurf/pfaffian.hpp"

namespace dimsurf {

GrassmannElement::GrassmannElement(int n)
    : n_(n), c_(std::size_t{1} << n, Rational(0)) {
    if (n > 20) throw TooLarge("Grassmann algebra capped at 20 generators");
}

GrassmannElement GrassmannElement::scalar(int n, const Rational& c) {
    GrassmannElement e(n);
    e.c_[0] = c;
    return e;
}

GrassmannElement GrassmannElement::generator(int n, int i) {
    GrassmannElement e(n);
    e.c_[std::size_t{1} << i] = 1;
    return e;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
    if (n_ != o.n_) throw MismatchedAlgebra("generator counts differ");
    for (std::size_t s = 0; s < c_.size(); ++s) c_[s] += o.c_[s];
    return *this;
}

GrassmannElement& GrassmannElement::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

namespace {

// Parity of |{(s, t) in S x T : s > t}|: the sign of merging two ordered
// monomials into one.
int shuffle_sign(std::uint32_t s, std::uint32_t t) {
    int inversions = 0;
    while (t) {
        const int low = std::countr_zero(t);
        // generators of s strictly greater than `low`
        inversions += std::popcount(s >> (low + 1) << (low + 1));
        t &= t - 1;
    }
    return (inversions & 1) ? -1 : 1;
}

}  // namespace

GrassmannElement multiply(const GrassmannElement& a, const GrassmannElement& b) {
    if (a.generators() != b.generators())
        throw MismatchedAlgebra("generator counts differ");
    GrassmannElement out(a.generators());
    for (std::uint32_t s = 0; s < a.subset_count(); ++s) {
        if (a.coeff(s) == 0) continue;
        for (std::uint32_t t = 0; t < b.subset_count(); ++t) {
            if (b.coeff(t) == 0 || (s & t)) continue;
            const Rational prod = a.coeff(s) * b.coeff(t);
            if (shuffle_sign(s, t) > 0)
                out.coeff(s | t) += prod;
            else
                out.coeff(s | t) -= prod;
        }
    }
    return out;
}

GrassmannElement exp_nilpotent(const GrassmannElement& a) {
    const int n = a.generators();
    GrassmannElement sum = GrassmannElement::scalar(n, 1);
    GrassmannElement power = GrassmannElement::scalar(n, 1);
    Rational factorial(1);
    for (int k = 1; k <= n; ++k) {
        power = multiply(power, a);
        factorial *= k;
        bool zero = true;
        for (std::uint32_t s = 0; s < power.subset_count(); ++s)
            if (power.coeff(s) != 0) {
                zero = false;
                break;
            }
        if (zero) break;
        GrassmannElement term = power;
        term *= Rational(1) / factorial;
        sum += term;
    }
    return sum;
}

Rational integral_neutral(const RatMat& a) {
    const int n = a.rows();
    if (n % 2 != 0) throw OddDimension("neutral integral needs an even generator count");
    GrassmannElement quad(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            quad.coeff((std::uint32_t{1} << i) | (std::uint32_t{1} << j)) = a.at(i, j);
    const GrassmannElement e = exp_nilpotent(quad);
    return e.coeff((std::uint32_t{1} << n) - 1);
}

Rational integral_charged(const RatMat& a) {
    const int k = a.rows();
    // Generators 0..k-1 are the psi_i, k..2k-1 the psi*_j; the canonical
    // subset order is exactly the d(psi)d(psi*) ordering.
    GrassmannElement quad(2 * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (a.at(i, j) == 0) continue;
            const std::uint32_t s = std::uint32_t{1} << i;
            const std::uint32_t t = std::uint32_t{1} << (k + j);
            quad.coeff(s | t) += a.at(i, j);
        }
    const GrassmannElement e = exp_nilpotent(quad);
    return e.coeff((std::uint32_t{1} << (2 * k)) - 1);
}

bool pf_squared_check(const RatMat& a) {
    return integral_neutral(a) * integral_neutral(a) == determinant_exact(a);
}

Rational partition_as_grassmann(const SurfaceMap& m, const WeightSystem& ws) {
    if (m.vertex_count() > 12) throw TooLarge("Grassmann partition capped at 12 vertices");
    if (m.vertex_count() % 2 != 0)
        throw OddVertexCount("partition formulas need an even vertex count");

    const auto fam = class_family(m, ws, 1);
    if (!fam.has_matching) return Rational(0);
    Rational sum(0);
    for (const auto& cd : fam.classes) {
        const Rational integral = integral_neutral(cd.a);
        sum += Rational(cd.arf_sign * cd.eps_d0) * integral;
    }
    return sum / Rational(1L << fam.basis.genus);
}

}  // namespace dimsurf
