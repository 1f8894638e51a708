#pragma once

#include <string>
#include <vector>

#include "dimsurf/matchings.hpp"
#include "dimsurf/surface_map.hpp"

namespace dimsurf {

struct VerifyCheck {
    std::string name;
    std::string status;  // PASS / FAIL / SKIP
    std::string left;
    std::string right;
    double ms = 0.0;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == "FAIL") return false;
        return true;
    }
};

/// Runs the full identity suite (Kasteleyn classes, spin forms, Pfaffian
/// formulas, oracles) against one input. For odd vertex counts the report
/// reduces to the existence check, which passes as an expected failure.
VerifyReport run_verify_suite(const SurfaceMap& m, const WeightSystem& ws, int threads = 1);

/// TSV rows "name<TAB>status<TAB>left<TAB>right"; timing stays off stdout so
/// the rendering is byte-stable across runs and worker counts.
std::string verify_tsv(const VerifyReport& report);

}  // namespace dimsurf
