#include <set>

#include "dimsurf/errors.hpp"
#include "dimsurf/surface_map.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dimsurf;

TEST_CASE("build and info on the fixture maps") {
    auto check = [](const SurfaceMap& m, int v, int e, int f, int g) {
        auto i = info(m);
        CHECK(i.vertices == v);
        CHECK(i.edges == e);
        CHECK(i.faces == f);
        CHECK(i.genus == g);
    };
    check(fixtures::square(), 4, 4, 2, 0);
    check(fixtures::genus1(), 2, 3, 1, 1);
    check(fixtures::genus2(), 2, 5, 1, 2);
    check(fixtures::torus44(), 16, 32, 16, 1);
    check(fixtures::k4(), 4, 6, 4, 0);
    check(fixtures::torus_one_vertex(), 1, 2, 1, 1);
    check(fixtures::star3(), 4, 3, 1, 0);
}

TEST_CASE("build rejects malformed rotation data") {
    SUBCASE("missing dart") {
        auto raw = fixtures::raw_square();
        raw.rotations[0] = {0};  // dart 7 dropped
        CHECK_THROWS_AS(SurfaceMap::build(raw), DanglingDart);
    }
    SUBCASE("dart listed twice") {
        auto raw = fixtures::raw_square();
        raw.rotations[0] = {0, 7, 7};
        CHECK_THROWS_AS(SurfaceMap::build(raw), DanglingDart);
    }
    SUBCASE("dart at the wrong vertex") {
        auto raw = fixtures::raw_square();
        std::swap(raw.rotations[0][0], raw.rotations[1][0]);
        CHECK_THROWS_AS(SurfaceMap::build(raw), BadInvolution);
    }
    SUBCASE("disconnected graph") {
        RawMap raw;
        raw.n_vertices = 4;
        raw.edges = {{0, 1}, {2, 3}};
        raw.rotations = {{0}, {1}, {2}, {3}};
        CHECK_THROWS_AS(SurfaceMap::build(raw), NotConnected);
    }
}

TEST_CASE("face orbits partition the darts") {
    for (const SurfaceMap& m :
         {fixtures::square(), fixtures::genus1(), fixtures::genus2(), fixtures::torus44(),
          fixtures::k4(), fixtures::torus_one_vertex()}) {
        std::size_t total = 0;
        std::set<Dart> seen;
        for (const auto& orbit : m.faces()) {
            total += orbit.size();
            for (Dart d : orbit) CHECK(seen.insert(d).second);
        }
        CHECK(total == static_cast<std::size_t>(2 * m.edge_count()));
    }
}

TEST_CASE("homology basis ranks and Gram matrices") {
    SUBCASE("genus 0 has an empty basis") {
        auto basis = homology_basis(fixtures::square());
        CHECK(basis.cycles.empty());
        CHECK(basis.gram.empty());
    }
    SUBCASE("genus 1 fixture") {
        auto m = fixtures::genus1();
        auto basis = homology_basis(m);
        REQUIRE(basis.cycles.size() == 2);
        for (const auto& c : basis.cycles) {
            CHECK(is_closed_walk(m, c));
            CHECK(is_simple_walk(m, c));
        }
        CHECK(basis.gram[0].get(0) == false);
        CHECK(basis.gram[0].get(1) == true);
        CHECK(basis.gram[1].get(0) == true);
        CHECK(basis.gram[1].get(1) == false);
    }
    SUBCASE("genus 2 fixture") {
        auto m = fixtures::genus2();
        auto basis = homology_basis(m);
        REQUIRE(basis.cycles.size() == 4);
        CHECK(gf2::invertible(basis.gram));
    }
    SUBCASE("torus lattice") {
        auto m = fixtures::torus44();
        auto basis = homology_basis(m);
        REQUIRE(basis.cycles.size() == 2);
        CHECK(basis.gram[0].get(1) == true);
        for (const auto& c : basis.cycles) CHECK(is_simple_walk(m, c));
    }
}

TEST_CASE("class_of reduces modulo face boundaries") {
    auto m = fixtures::genus1();
    auto basis = homology_basis(m);

    SUBCASE("face boundaries are null-homologous") {
        for (int f = 0; f < m.face_count(); ++f) {
            auto coords = class_of(m, basis, m.face_boundary_chain(f));
            CHECK(!coords.any());
        }
    }
    SUBCASE("basis cycles map to unit vectors") {
        for (std::size_t i = 0; i < basis.cycles.size(); ++i) {
            auto coords = class_of(m, basis, basis.cycle_chains[i]);
            for (std::size_t j = 0; j < basis.cycles.size(); ++j)
                CHECK(coords.get(static_cast<int>(j)) == (i == j));
        }
    }
    SUBCASE("{e1,e2} is the sum of the two basis classes") {
        EdgeChain z(m.edge_count());
        z.set(1, true);
        z.set(2, true);
        auto coords = class_of(m, basis, z);
        auto expect = class_of(m, basis, basis.cycle_chains[0]) ^
                      class_of(m, basis, basis.cycle_chains[1]);
        CHECK(coords == expect);
    }
    SUBCASE("non-cycles are rejected") {
        EdgeChain z(m.edge_count());
        z.set(0, true);
        CHECK_THROWS_AS(class_of(m, basis, z), NotACycle);
    }
    SUBCASE("adding any face boundary is invisible") {
        for (const SurfaceMap& mm : {fixtures::genus1(), fixtures::genus2(),
                                     fixtures::torus44(), fixtures::k4()}) {
            auto bb = homology_basis(mm);
            for (const auto& cyc : bb.cycle_chains)
                for (int f = 0; f < mm.face_count(); ++f) {
                    EdgeChain z = cyc ^ mm.face_boundary_chain(f);
                    CHECK(class_of(mm, bb, z) == class_of(mm, bb, cyc));
                }
        }
    }
}

TEST_CASE("intersection parity") {
    SUBCASE("meridian and longitude on the one-vertex torus") {
        auto m = fixtures::torus_one_vertex();
        DartWalk meridian{{0}};
        DartWalk longitude{{2}};
        CHECK(intersection_parity(m, meridian, longitude) == 1);
        CHECK(intersection_parity(m, longitude, meridian) == 1);
        CHECK(intersection_parity(m, meridian, meridian) == 0);
        CHECK(intersection_parity(m, longitude, longitude) == 0);
    }
    SUBCASE("self pairs vanish on every fixture basis") {
        for (const SurfaceMap& m :
             {fixtures::genus1(), fixtures::genus2(), fixtures::torus44()}) {
            auto basis = homology_basis(m);
            for (const auto& c : basis.cycles) CHECK(intersection_parity(m, c, c) == 0);
        }
    }
    SUBCASE("symmetry") {
        for (const SurfaceMap& m : {fixtures::genus1(), fixtures::genus2(),
                                    fixtures::torus44()}) {
            auto basis = homology_basis(m);
            for (const auto& a : basis.cycles)
                for (const auto& b : basis.cycles)
                    CHECK(intersection_parity(m, a, b) == intersection_parity(m, b, a));
        }
    }
    SUBCASE("face boundary walks are null pairings") {
        for (const SurfaceMap& m : {fixtures::genus1(), fixtures::genus2(),
                                    fixtures::torus44()}) {
            auto basis = homology_basis(m);
            for (const auto& orbit : m.faces()) {
                DartWalk fw{orbit};
                for (const auto& b : basis.cycles)
                    CHECK(intersection_parity(m, fw, b) == 0);
            }
        }
    }
    SUBCASE("parity descends to homology") {
        // Perturb each basis cycle by each face boundary and re-pair.
        for (const SurfaceMap& m : {fixtures::genus1(), fixtures::torus44()}) {
            auto basis = homology_basis(m);
            for (std::size_t i = 0; i < basis.cycles.size(); ++i)
                for (int f = 0; f < m.face_count(); ++f) {
                    EdgeChain z = basis.cycle_chains[i] ^ m.face_boundary_chain(f);
                    auto walks = closed_walks_of_chain(m, z);
                    for (const auto& w : walks) CHECK(is_closed_walk(m, w));
                    std::vector<DartWalk> lhs = walks;
                    for (std::size_t j = 0; j < basis.cycles.size(); ++j) {
                        std::vector<DartWalk> rhs = {basis.cycles[j]};
                        int perturbed = intersection_parity(
                            m, std::span<const DartWalk>(lhs), std::span<const DartWalk>(rhs));
                        int original =
                            intersection_parity(m, basis.cycles[i], basis.cycles[j]);
                        CHECK(perturbed == original);
                    }
                }
        }
    }
}

TEST_CASE("cocycle basis") {
    SUBCASE("genus 0 is empty") {
        auto m = fixtures::square();
        auto basis = homology_basis(m);
        CHECK(cocycle_basis(m, basis).cocycles.empty());
    }
    SUBCASE("cocycles meet every face evenly and pair invertibly") {
        for (const SurfaceMap& m :
             {fixtures::genus1(), fixtures::genus2(), fixtures::torus44()}) {
            auto basis = homology_basis(m);
            auto cb = cocycle_basis(m, basis);
            CHECK(cb.cocycles.size() == static_cast<std::size_t>(2 * m.genus()));
            for (const auto& z : cb.cocycles) CHECK(is_cocycle(m, z));
            CHECK(gf2::invertible(cb.pairing));
        }
    }
}

TEST_CASE("walk helpers") {
    auto m = fixtures::genus1();
    DartWalk w{{0, 3}};  // e0 out, e1 back
    CHECK(is_closed_walk(m, w));
    CHECK(is_simple_walk(m, w));
    auto rev = reverse_walk(w);
    CHECK(is_closed_walk(m, rev));
    CHECK(chain_of_walk(m, w) == chain_of_walk(m, rev));
    CHECK(is_cycle_chain(m, chain_of_walk(m, w)));
}
