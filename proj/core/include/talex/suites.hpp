// Experiment suites: the detection-theorem grids, the locus sampling suite,
// single-instance diagnostics, and Riley-polynomial reports.
#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "talex/report.hpp"

namespace talex {

struct RunConfig {
    // Shared tolerances.
    double tol = 1e-7;        // locus membership / closed-form checks
    double precision = 1e-12; // root-finder target
    EngineOptions engine;
    std::uint64_t seed = 42;
    // Orientation selection: 0 = unflipped, 1 = flipped, 2 = both.
    int flip_mode = 0;

    // single / riley subcommands.
    FamilySpec family;
    bool has_z = false;
    std::complex<double> z{0.0, 0.0};
    std::string presentation_path, rep_path;

    // suite dfj grid bounds.
    int m_max = 3, n_max = 3;

    // suite parabolic: odd (m,n,p) grid with m != p up to odd_max, or an
    // explicit case list (m, n, p, flip as 0/1) overriding the grid.
    int odd_max = 9;
    std::vector<std::array<int, 4>> explicit_cases;

    // suite loci: sample count for the single (family.m, family.n) pair.
    int samples = 50;
};

Report suite_dfj(const RunConfig& cfg);
Report suite_parabolic(const RunConfig& cfg);
Report suite_loci(const RunConfig& cfg);
Report compute_single(const RunConfig& cfg);
Report riley_report(const RunConfig& cfg);

// Loads a .rep file: JSON object mapping generator name to a 2x2 matrix of
// [re, im] entries, e.g. {"a": [[[1,0],[1,0]], [[0,0],[1,0]]], ...}.
std::vector<Mat2> load_rep_file(const std::string& path, const Presentation& pres);

} // namespace talex
