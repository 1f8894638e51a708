#pragma once

#include <iosfwd>
#include <string>

#include "dimsurf/matchings.hpp"
#include "dimsurf/surface_map.hpp"

namespace dimsurf {

struct ParsedGraph {
    SurfaceMap map;
    WeightSystem weights;
};

/// Reads the "smg v1" text format:
///   smg v1
///   vertices V
///   edges E
///   edge <id> <u> <v> <p>/<q>        (E lines; line order fixes dart ids)
///   rot <v>: <tok> ...               (V lines; tok = "<edge>a" | "<edge>b")
/// Throws SyntaxError / ValidationError with file:line positions.
ParsedGraph parse_graph_file(std::istream& in, const std::string& filename = "<input>");
ParsedGraph parse_graph_file_path(const std::string& path);

/// Canonical text rendering; parse(emit(x)) reproduces x.
std::string emit_graph_file(const SurfaceMap& m, const WeightSystem& ws);

}  // namespace dimsurf
