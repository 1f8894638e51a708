#include "dimsurf/graph_file.hpp"

#include <fstream>
#include <sstream>

#include "dimsurf/errors.hpp"

namespace dimsurf {

namespace {

struct LineReader {
    std::istream& in;
    std::string filename;
    int lineno = 0;

    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void syntax(const std::string& msg) const {
        throw SyntaxError(filename + ":" + std::to_string(lineno) + ": " + msg);
    }
    [[noreturn]] void invalid(const std::string& msg) const {
        throw ValidationError(filename + ":" + std::to_string(lineno) + ": " + msg);
    }
};

long parse_long(const std::string& tok, LineReader& r) {
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) r.syntax("bad integer '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        r.syntax("bad integer '" + tok + "'");
    }
}

Rational parse_weight(const std::string& tok, LineReader& r) {
    const auto slash = tok.find('/');
    long num, den = 1;
    if (slash == std::string::npos) {
        num = parse_long(tok, r);
    } else {
        num = parse_long(tok.substr(0, slash), r);
        den = parse_long(tok.substr(slash + 1), r);
    }
    if (den <= 0) r.invalid("weight denominator must be positive");
    Rational w(num, den);
    w.canonicalize();
    if (w <= 0) r.invalid("edge weights must be positive");
    return w;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

ParsedGraph parse_graph_file(std::istream& in, const std::string& filename) {
    LineReader r{in, filename};
    std::string line;

    if (!r.next(line) || line != "smg v1") r.syntax("expected header 'smg v1'");

    auto expect_count = [&](const char* key) -> int {
        if (!r.next(line)) r.syntax(std::string("expected '") + key + " <n>'");
        auto toks = split_ws(line);
        if (toks.size() != 2 || toks[0] != key)
            r.syntax(std::string("expected '") + key + " <n>'");
        long n = parse_long(toks[1], r);
        if (n < 0) r.invalid(std::string(key) + " must be nonnegative");
        return static_cast<int>(n);
    };
    const int n_vertices = expect_count("vertices");
    const int n_edges = expect_count("edges");

    RawMap raw;
    raw.n_vertices = n_vertices;
    WeightSystem ws;
    for (int e = 0; e < n_edges; ++e) {
        if (!r.next(line)) r.syntax("expected edge line");
        auto toks = split_ws(line);
        if (toks.size() != 5 || toks[0] != "edge") r.syntax("expected 'edge <id> <u> <v> <p>/<q>'");
        if (parse_long(toks[1], r) != e) r.invalid("edge ids must be dense from 0 in order");
        long u = parse_long(toks[2], r), v = parse_long(toks[3], r);
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
            r.invalid("edge endpoint out of range");
        raw.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        ws.w.push_back(parse_weight(toks[4], r));
    }

    raw.rotations.assign(static_cast<std::size_t>(n_vertices), {});
    std::vector<char> have_rot(static_cast<std::size_t>(n_vertices), 0);
    std::vector<char> dart_seen(static_cast<std::size_t>(2 * n_edges), 0);
    for (int i = 0; i < n_vertices; ++i) {
        if (!r.next(line)) r.syntax("expected rot line");
        auto toks = split_ws(line);
        if (toks.size() < 2 || toks[0] != "rot") r.syntax("expected 'rot <v>: <dart>...'");
        std::string vtok = toks[1];
        if (vtok.empty() || vtok.back() != ':') r.syntax("rot vertex must end with ':'");
        vtok.pop_back();
        long v = parse_long(vtok, r);
        if (v < 0 || v >= n_vertices) r.invalid("rot vertex out of range");
        if (have_rot[static_cast<std::size_t>(v)]) r.invalid("duplicate rot line for vertex");
        have_rot[static_cast<std::size_t>(v)] = 1;
        for (std::size_t t = 2; t < toks.size(); ++t) {
            std::string dtok = toks[t];
            if (dtok.size() < 2) r.syntax("bad dart token '" + dtok + "'");
            const char side = dtok.back();
            if (side != 'a' && side != 'b') r.syntax("dart token must end in 'a' or 'b'");
            dtok.pop_back();
            long e = parse_long(dtok, r);
            if (e < 0 || e >= n_edges) r.invalid("dart token edge id out of range");
            const Dart d = static_cast<Dart>(2 * e + (side == 'b' ? 1 : 0));
            if (dart_seen[static_cast<std::size_t>(d)]) r.invalid("duplicate dart token");
            dart_seen[static_cast<std::size_t>(d)] = 1;
            raw.rotations[static_cast<std::size_t>(v)].push_back(d);
        }
    }
    if (r.next(line)) r.syntax("unexpected trailing line");

    try {
        return ParsedGraph{SurfaceMap::build(raw), std::move(ws)};
    } catch (const NotConnected& err) {
        throw ValidationError(filename + ": " + err.what());
    } catch (const DanglingDart& err) {
        throw ValidationError(filename + ": " + err.what());
    } catch (const BadInvolution& err) {
        throw ValidationError(filename + ": " + err.what());
    }
}

ParsedGraph parse_graph_file_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SyntaxError(path + ": cannot open file");
    return parse_graph_file(in, path);
}

std::string emit_graph_file(const SurfaceMap& m, const WeightSystem& ws) {
    std::ostringstream out;
    out << "smg v1\n";
    out << "vertices " << m.vertex_count() << "\n";
    out << "edges " << m.edge_count() << "\n";
    for (EdgeId e = 0; e < m.edge_count(); ++e) {
        auto [u, v] = m.endpoints(e);
        out << "edge " << e << " " << u << " " << v << " "
            << to_pq_string(ws.w[static_cast<std::size_t>(e)]) << "\n";
    }
    for (VertexId v = 0; v < m.vertex_count(); ++v) {
        out << "rot " << v << ":";
        for (Dart d : m.darts_at(v))
            out << " " << SurfaceMap::edge_of(d) << ((d & 1) ? "b" : "a");
        out << "\n";
    }
    return out.str();
}

}  // namespace dimsurf
