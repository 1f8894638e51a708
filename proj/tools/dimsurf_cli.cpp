// Command-line front end: parses smg files and drives the solver modules.
// TSV results go to stdout, diagnostics and timings to stderr.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dimsurf/errors.hpp"
#include "dimsurf/graph_file.hpp"
#include "dimsurf/grassmann.hpp"
#include "dimsurf/pfaffian.hpp"
#include "dimsurf/spin_form.hpp"
#include "dimsurf/verify.hpp"

namespace {

using namespace dimsurf;

ParsedGraph load(const std::string& path) { return parse_graph_file_path(path); }

std::string mask_string(std::uint32_t mask, int bits) {
    if (bits == 0) return "0";
    std::string s;
    for (int i = 0; i < bits; ++i) s += ((mask >> i) & 1) ? '1' : '0';
    return s;
}

int cmd_validate(const std::string& path) {
    auto pg = load(path);
    std::cout << "valid\n";
    (void)pg;
    return 0;
}

int cmd_info(const std::string& path) {
    auto pg = load(path);
    auto i = info(pg.map);
    std::cout << "V=" << i.vertices << " E=" << i.edges << " F=" << i.faces << " g=" << i.genus
              << "\n";
    return 0;
}

int cmd_partition(const std::string& path, bool oracle, bool per_class, int threads) {
    auto pg = load(path);
    const auto fam = class_family(pg.map, pg.weights, threads);
    const Rational z = partition_pfaffian(pg.map, fam);
    if (per_class) {
        std::cout << "class\tarf\teps\tpf\tsummand\n";
        for (std::size_t i = 0; i < fam.classes.size(); ++i) {
            const auto& cd = fam.classes[i];
            const Rational summand = Rational(cd.arf_sign * cd.eps_d0) * cd.pf;
            std::cout << mask_string(static_cast<std::uint32_t>(i), 2 * fam.basis.genus) << "\t"
                      << cd.arf_sign << "\t" << cd.eps_d0 << "\t" << to_pq_string(cd.pf) << "\t"
                      << to_pq_string(summand) << "\n";
        }
    }
    std::cout << "pfaffian\t" << to_pq_string(z) << "\n";
    if (oracle) {
        const Rational zb = partition_bruteforce(pg.map, fam.basis, pg.weights).total;
        std::cout << "bruteforce\t" << to_pq_string(zb) << "\n";
        std::cout << (z == zb ? "MATCH" : "MISMATCH") << "\n";
        return z == zb ? 0 : 1;
    }
    return 0;
}

int cmd_orientations(const std::string& path, bool emit) {
    auto pg = load(path);
    const auto basis = homology_basis(pg.map);
    const auto cocycles = cocycle_basis(pg.map, basis);
    const auto reps = class_representatives(pg.map, cocycles);
    std::cout << "classes\t" << reps.size() << "\n";
    if (emit) {
        for (std::size_t i = 0; i < reps.size(); ++i)
            std::cout << "orientation\t" << mask_string(static_cast<std::uint32_t>(i),
                                                        2 * pg.map.genus())
                      << "\t" << reps[i].to_bit_string() << "\n";
    }
    if (auto d0 = first_matching(pg.map)) {
        std::string gram;
        for (std::size_t r = 0; r < basis.gram.size(); ++r) {
            if (r) gram += ",";
            gram += basis.gram[r].to_string();
        }
        for (std::size_t i = 0; i < reps.size(); ++i) {
            const auto q = build_form(pg.map, basis, reps[i], *d0);
            std::cout << "form\t" << mask_string(static_cast<std::uint32_t>(i), 2 * pg.map.genus())
                      << "\tb=" << q.b.to_string() << " G=" << gram << " Arf="
                      << (arf(q) > 0 ? "+1" : "-1") << "\n";
        }
    }
    return 0;
}

int cmd_correlate(const std::string& path, const std::string& edge_list, bool oracle,
                  int threads) {
    auto pg = load(path);
    std::vector<EdgeId> edges;
    std::stringstream ss(edge_list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t pos = 0;
            edges.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw ValidationError("bad edge id '" + tok + "'");
        } catch (const std::logic_error&) {
            throw ValidationError("bad edge id '" + tok + "'");
        }
    }
    for (EdgeId e : edges)
        if (e < 0 || e >= pg.map.edge_count()) throw ValidationError("edge id out of range");
    const auto fam = class_family(pg.map, pg.weights, threads);
    const Rational c = correlation_pfaffian(pg.map, fam, edges);
    std::cout << "correlation\t" << to_pq_string(c) << "\n";
    if (oracle) {
        const Rational cb = correlation_bruteforce(pg.map, pg.weights, edges);
        std::cout << "bruteforce\t" << to_pq_string(cb) << "\n";
        std::cout << (c == cb ? "MATCH" : "MISMATCH") << "\n";
        return c == cb ? 0 : 1;
    }
    return 0;
}

int cmd_verify(const std::string& path, int threads) {
    auto pg = load(path);
    const auto report = run_verify_suite(pg.map, pg.weights, threads);
    std::cout << verify_tsv(report);
    for (const auto& c : report.checks)
        std::cerr << c.name << " " << c.ms << " ms\n";
    return report.all_pass() ? 0 : 1;
}

int cmd_grassmann(int size, unsigned seed) {
    if (size <= 0 || size % 2 != 0) throw OddDimension("--size must be positive and even");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    RatMat a(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            Rational r(num(rng), den(rng));
            r.canonicalize();
            a.at(i, j) = r;
            a.at(j, i) = -r;
        }
    const Rational pf_grassmann = integral_neutral(a);
    const Rational pf_direct = pfaffian_exact(a);
    const Rational det = determinant_exact(a);

    RatMat sq(size, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) sq.at(i, j) = a.at(i, j);
    const Rational charged = integral_charged(sq);
    const Rational charged_expect =
        ((size * (size - 1) / 2) % 2 == 0 ? det : -det);

    std::cout << "integral_neutral_eq_pfaffian\t"
              << (pf_grassmann == pf_direct ? "PASS" : "FAIL") << "\t"
              << to_pq_string(pf_grassmann) << "\t" << to_pq_string(pf_direct) << "\n";
    std::cout << "integral_charged_eq_det\t" << (charged == charged_expect ? "PASS" : "FAIL")
              << "\t" << to_pq_string(charged) << "\t" << to_pq_string(charged_expect) << "\n";
    std::cout << "pf_squared_eq_det\t" << (pf_grassmann * pf_grassmann == det ? "PASS" : "FAIL")
              << "\t" << to_pq_string(pf_grassmann * pf_grassmann) << "\t" << to_pq_string(det)
              << "\n";
    const bool ok =
        pf_grassmann == pf_direct && charged == charged_expect && pf_grassmann * pf_grassmann == det;
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimer model solver on surface graphs"};
    app.require_subcommand(1);

    std::string path;
    int threads = 1;
    bool oracle = false, per_class = false, emit = false;
    std::string edge_list;
    int gr_size = 6;
    unsigned gr_seed = 1;

    auto* validate = app.add_subcommand("validate", "parse and validate an smg file");
    validate->add_option("file", path)->required();

    auto* infoc = app.add_subcommand("info", "print V, E, F and genus");
    infoc->add_option("file", path)->required();

    auto* part = app.add_subcommand("partition", "partition function via Pfaffians");
    part->add_option("file", path)->required();
    part->add_flag("--oracle", oracle, "also run the brute-force enumerator");
    part->add_flag("--per-class", per_class, "print the per-class breakdown");
    part->add_option("--threads", threads, "worker threads");

    auto* orient = app.add_subcommand("orientations", "Kasteleyn class representatives");
    orient->add_option("file", path)->required();
    orient->add_flag("--emit", emit, "emit orientation bit strings");

    auto* corr = app.add_subcommand("correlate", "dimer-dimer correlation function");
    corr->add_option("file", path)->required();
    corr->add_option("--edges", edge_list, "comma-separated edge ids")->required();
    corr->add_flag("--oracle", oracle, "also run the brute-force enumerator");
    corr->add_option("--threads", threads, "worker threads");

    auto* verify = app.add_subcommand("verify", "run the full identity suite");
    verify->add_option("file", path)->required();
    verify->add_option("--threads", threads, "worker threads");

    auto* gr = app.add_subcommand("grassmann", "Grassmann-integral identity checks");
    gr->add_option("--size", gr_size, "matrix size (even)");
    gr->add_option("--seed", gr_seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (infoc->parsed()) return cmd_info(path);
        if (part->parsed()) return cmd_partition(path, oracle, per_class, threads);
        if (orient->parsed()) return cmd_orientations(path, emit);
        if (corr->parsed()) return cmd_correlate(path, edge_list, oracle, threads);
        if (verify->parsed()) return cmd_verify(path, threads);
        if (gr->parsed()) return cmd_grassmann(gr_size, gr_seed);
    } catch (const dimsurf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
