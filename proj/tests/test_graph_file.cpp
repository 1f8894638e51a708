#include <algorithm>
#include <fstream>
#include <sstream>

#include "dimsurf/errors.hpp"
#include "dimsurf/graph_file.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dimsurf;

namespace {

ParsedGraph parse_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_file(in, "<test>");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool same_map(const SurfaceMap& a, const SurfaceMap& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    for (EdgeId e = 0; e < a.edge_count(); ++e)
        if (a.endpoints(e) != b.endpoints(e)) return false;
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        if (a.darts_at(v) != b.darts_at(v)) return false;
    return true;
}

}  // namespace

TEST_CASE("parsing the shipped fixtures") {
    const std::string dir = DIMSURF_DATA_DIR;
    SUBCASE("fix_sq.smg matches the in-code builder") {
        auto pg = parse_graph_file_path(dir + "/fix_sq.smg");
        auto i = info(pg.map);
        CHECK(i.vertices == 4);
        CHECK(i.edges == 4);
        CHECK(i.faces == 2);
        CHECK(i.genus == 0);
        CHECK(same_map(pg.map, fixtures::square()));
        CHECK(pg.weights.w == fixtures::square_weights().w);
    }
    SUBCASE("remaining fixtures match their builders") {
        CHECK(same_map(parse_graph_file_path(dir + "/fix_g1.smg").map, fixtures::genus1()));
        CHECK(same_map(parse_graph_file_path(dir + "/fix_g2.smg").map, fixtures::genus2()));
        CHECK(same_map(parse_graph_file_path(dir + "/fix_t44.smg").map, fixtures::torus44()));
        CHECK(same_map(parse_graph_file_path(dir + "/k4.smg").map, fixtures::k4()));
        CHECK(parse_graph_file_path(dir + "/fix_g2.smg").weights.w ==
              fixtures::genus2_weights().w);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(parse_graph_file_path(dir + "/nope.smg"), SyntaxError);
    }
}

TEST_CASE("the frozen genus-2 rotation is one the F=1 search finds") {
    // Search all rotation orders at the second vertex of the 5-edge dipole
    // for single-face embeddings; the shipped identical-order rotation must
    // be among them.
    std::vector<Dart> tail = {3, 5, 7, 9};
    std::sort(tail.begin(), tail.end());
    bool frozen_found = false;
    int count = 0;
    do {
        RawMap raw;
        raw.n_vertices = 2;
        raw.edges.assign(5, {0, 1});
        raw.rotations = {{0, 2, 4, 6, 8}, {1}};
        for (Dart d : tail) raw.rotations[1].push_back(d);
        auto m = SurfaceMap::build(raw);
        if (m.face_count() == 1) {
            ++count;
            if (raw.rotations[1] == std::vector<Dart>{1, 3, 5, 7, 9}) frozen_found = true;
        }
    } while (std::next_permutation(tail.begin(), tail.end()));
    CHECK(frozen_found);
    CHECK(count > 0);
}

TEST_CASE("round trip: parse after emit is the identity") {
    for (const SurfaceMap& m : {fixtures::square(), fixtures::genus2(), fixtures::torus44(),
                                fixtures::k4()}) {
        WeightSystem ws;
        for (int e = 0; e < m.edge_count(); ++e) ws.w.emplace_back(Rational(e + 1, 3));
        for (auto& w : ws.w) w.canonicalize();
        const std::string text = emit_graph_file(m, ws);
        auto pg = parse_string(text);
        CHECK(same_map(pg.map, m));
        CHECK(pg.weights.w == ws.w);
        CHECK(emit_graph_file(pg.map, pg.weights) == text);
    }
}

TEST_CASE("parse errors") {
    SUBCASE("bad header") {
        CHECK_THROWS_AS(parse_string("smg v2\nvertices 1\nedges 0\nrot 0:\n"), SyntaxError);
    }
    SUBCASE("nonpositive weight") {
        const std::string text =
            "smg v1\nvertices 2\nedges 1\nedge 0 0 1 0/1\nrot 0: 0a\nrot 1: 0b\n";
        CHECK_THROWS_AS(parse_string(text), ValidationError);
    }
    SUBCASE("negative weight") {
        const std::string text =
            "smg v1\nvertices 2\nedges 1\nedge 0 0 1 -2/3\nrot 0: 0a\nrot 1: 0b\n";
        CHECK_THROWS_AS(parse_string(text), ValidationError);
    }
    SUBCASE("duplicate dart token") {
        const std::string text =
            "smg v1\nvertices 2\nedges 1\nedge 0 0 1 1/1\nrot 0: 0a 0a\nrot 1: 0b\n";
        CHECK_THROWS_AS(parse_string(text), ValidationError);
    }
    SUBCASE("dart at the wrong vertex") {
        const std::string text =
            "smg v1\nvertices 2\nedges 1\nedge 0 0 1 1/1\nrot 0: 0b\nrot 1: 0a\n";
        CHECK_THROWS_AS(parse_string(text), ValidationError);
    }
    SUBCASE("missing dart") {
        const std::string text =
            "smg v1\nvertices 2\nedges 1\nedge 0 0 1 1/1\nrot 0: 0a\nrot 1:\n";
        CHECK_THROWS_AS(parse_string(text), ValidationError);
    }
    SUBCASE("edge ids out of order") {
        const std::string text =
            "smg v1\nvertices 2\nedges 2\nedge 1 0 1 1/1\nedge 0 0 1 1/1\nrot 0: 0a 1a\nrot 1: "
            "0b 1b\n";
        CHECK_THROWS_AS(parse_string(text), ValidationError);
    }
    SUBCASE("garbage dart token") {
        const std::string text =
            "smg v1\nvertices 2\nedges 1\nedge 0 0 1 1/1\nrot 0: 0x\nrot 1: 0b\n";
        CHECK_THROWS_AS(parse_string(text), SyntaxError);
    }
    SUBCASE("error messages carry the line number") {
        const std::string text =
            "smg v1\nvertices 2\nedges 1\nedge 0 0 1 0/1\nrot 0: 0a\nrot 1: 0b\n";
        try {
            parse_string(text);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("<test>:4") != std::string::npos);
        }
    }
    SUBCASE("integer weights without a slash are accepted") {
        const std::string text =
            "smg v1\nvertices 2\nedges 1\nedge 0 0 1 7\nrot 0: 0a\nrot 1: 0b\n";
        auto pg = parse_string(text);
        CHECK(pg.weights.w[0] == Rational(7));
    }
}
