#include <random>

#include "dimsurf/errors.hpp"
#include "dimsurf/grassmann.hpp"
#include "dimsurf/pfaffian.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dimsurf;

namespace {

RatMat random_skew(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    RatMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            a.at(i, j) = r;
            a.at(j, i) = -r;
        }
    return a;
}

RatMat random_square(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    RatMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            a.at(i, j) = r;
        }
    return a;
}

GrassmannElement gen(int n, int i) { return GrassmannElement::generator(n, i); }

}  // namespace

TEST_CASE("multiplication follows the anticommutation rules") {
    const int n = 4;
    SUBCASE("generators anticommute") {
        auto ab = multiply(gen(n, 0), gen(n, 1));
        auto ba = multiply(gen(n, 1), gen(n, 0));
        for (std::uint32_t s = 0; s < ab.subset_count(); ++s)
            CHECK(ab.coeff(s) == -ba.coeff(s));
    }
    SUBCASE("squares vanish") {
        auto aa = multiply(gen(n, 0), gen(n, 0));
        for (std::uint32_t s = 0; s < aa.subset_count(); ++s) CHECK(aa.coeff(s) == Rational(0));
    }
    SUBCASE("(phi1 phi2)(phi3 phi4) carries sign +1") {
        auto left = multiply(gen(n, 0), gen(n, 1));
        auto right = multiply(gen(n, 2), gen(n, 3));
        auto prod = multiply(left, right);
        CHECK(prod.coeff(0b1111) == Rational(1));
    }
    SUBCASE("mismatched algebras are rejected") {
        CHECK_THROWS_AS(multiply(gen(3, 0), gen(4, 0)), MismatchedAlgebra);
    }
    SUBCASE("associativity and anticommutativity on random elements") {
        std::mt19937 rng(77);
        std::uniform_int_distribution<int> coeff(-5, 5);
        const int nn = 6;
        auto random_element = [&] {
            GrassmannElement e(nn);
            for (int t = 0; t < 8; ++t) {
                std::uint32_t s = rng() & ((1u << nn) - 1);
                e.coeff(s) += coeff(rng);
            }
            return e;
        };
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_element();
            auto b = random_element();
            auto c = random_element();
            auto lhs = multiply(multiply(a, b), c);
            auto rhs = multiply(a, multiply(b, c));
            for (std::uint32_t s = 0; s < lhs.subset_count(); ++s)
                CHECK(lhs.coeff(s) == rhs.coeff(s));
        }
        // odd generators anticommute pairwise
        for (int i = 0; i < nn; ++i)
            for (int j = 0; j < nn; ++j) {
                auto ij = multiply(gen(nn, i), gen(nn, j));
                auto ji = multiply(gen(nn, j), gen(nn, i));
                for (std::uint32_t s = 0; s < ij.subset_count(); ++s)
                    CHECK(ij.coeff(s) == -ji.coeff(s));
            }
    }
}

TEST_CASE("neutral Berezin integral equals the Pfaffian") {
    SUBCASE("n = 2") {
        RatMat a(2, 2);
        a.at(0, 1) = Rational(9, 4);
        a.at(1, 0) = Rational(-9, 4);
        CHECK(integral_neutral(a) == Rational(9, 4));
    }
    SUBCASE("n = 4 expansion") {
        std::mt19937 rng(3);
        auto a = random_skew(rng, 4);
        Rational expect =
            a.at(0, 1) * a.at(2, 3) - a.at(0, 2) * a.at(1, 3) + a.at(0, 3) * a.at(1, 2);
        CHECK(integral_neutral(a) == expect);
    }
    SUBCASE("random n = 8 against the elimination Pfaffian") {
        std::mt19937 rng(8);
        for (int t = 0; t < 5; ++t) {
            auto a = random_skew(rng, 8);
            CHECK(integral_neutral(a) == pfaffian_exact(a));
        }
    }
    SUBCASE("odd dimension is rejected") {
        CHECK_THROWS_AS(integral_neutral(RatMat(3, 3)), OddDimension);
    }
}

TEST_CASE("charged Berezin integral equals the signed determinant") {
    SUBCASE("k = 1") {
        RatMat a(1, 1);
        a.at(0, 0) = Rational(4, 7);
        CHECK(integral_charged(a) == Rational(4, 7));
    }
    SUBCASE("k = 2 identity matrix gives -1") {
        CHECK(integral_charged(RatMat::identity(2)) == Rational(-1));
    }
    SUBCASE("random 5x5") {
        std::mt19937 rng(55);
        for (int t = 0; t < 5; ++t) {
            auto a = random_square(rng, 5);
            Rational det = determinant_exact(a);
            Rational expect = ((5 * 4 / 2) % 2 == 0) ? det : -det;
            CHECK(integral_charged(a) == expect);
        }
    }
    SUBCASE("block Pfaffian identity Pf([[0,A],[-A^t,0]]) = (-1)^{k(k-1)/2} Det(A)") {
        std::mt19937 rng(56);
        for (int k = 1; k <= 4; ++k) {
            auto a = random_square(rng, k);
            RatMat block(2 * k, 2 * k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    block.at(i, k + j) = a.at(i, j);
                    block.at(k + j, i) = -a.at(i, j);
                }
            Rational det = determinant_exact(a);
            Rational expect = ((k * (k - 1) / 2) % 2 == 0) ? det : -det;
            CHECK(pfaffian_exact(block) == expect);
        }
    }
}

TEST_CASE("pf_squared_check") {
    SUBCASE("2x2 and the zero matrix") {
        RatMat a(2, 2);
        a.at(0, 1) = Rational(5);
        a.at(1, 0) = Rational(-5);
        CHECK(pf_squared_check(a));
        CHECK(pf_squared_check(RatMat(4, 4)));
    }
    SUBCASE("random 6x6") {
        std::mt19937 rng(66);
        for (int t = 0; t < 10; ++t) CHECK(pf_squared_check(random_skew(rng, 6)));
    }
}

TEST_CASE("partition function through Grassmann integrals") {
    SUBCASE("square = 13") {
        CHECK(partition_as_grassmann(fixtures::square(), fixtures::square_weights()) ==
              Rational(13));
    }
    SUBCASE("genus1 = 3") {
        CHECK(partition_as_grassmann(fixtures::genus1(), WeightSystem::unit(3)) == Rational(3));
    }
    SUBCASE("single edge = its weight") {
        auto m = SurfaceMap::build(fixtures::raw_single_edge());
        WeightSystem ws;
        ws.w = {Rational(6, 5)};
        CHECK(partition_as_grassmann(m, ws) == Rational(6, 5));
    }
    SUBCASE("agreement of all three partition routes") {
        for (const SurfaceMap& m : {fixtures::k4(), fixtures::genus2()}) {
            WeightSystem ws = WeightSystem::unit(m.edge_count());
            auto basis = homology_basis(m);
            Rational zg = partition_as_grassmann(m, ws);
            Rational zp = partition_pfaffian(m, basis, ws);
            Rational zb = partition_bruteforce(m, basis, ws).total;
            CHECK(zg == zp);
            CHECK(zp == zb);
        }
    }
    SUBCASE("too many vertices for the oracle") {
        CHECK_THROWS_AS(partition_as_grassmann(fixtures::torus44(), WeightSystem::unit(32)),
                        TooLarge);
    }
}
