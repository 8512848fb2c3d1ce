#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "picard/complex.hpp"
#include "picard/config.hpp"
#include "picard/report.hpp"

namespace picard {

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t samples = 500;      // per sampled cell
    std::size_t random_reps = 50;
    int symn_max = 20;
    double margin = 1e-6;
    std::size_t jobs = 1;
    // Sym^1 .. Sym^symn_max, reused by "properties" when already computed.
    std::vector<CohomologyResult> symn_results;
};

// stabilizers, incidence, qmatrix, strong-admissibility, bounds, flags,
// classification, properties
const std::vector<std::string>& verify_suites();
// Throws std::invalid_argument on an unknown suite.
Report verify_suite(const std::string& suite, const VerifyOptions& opts = {});

// Expected dimensions (h0, h1, h2, h3) of Sym^n cohomology over Q(i), n = 1..20.
const std::vector<std::array<std::size_t, 4>>& reference_symn_table();

// Incidence table entry (row, col): below the diagonal the number of row-type
// cells in the boundary of the col cell, above it the number of row cells
// whose boundary contains the col cell. Negative on the diagonal blocks.
int reference_incidence(ConfigTag row, ConfigTag col);

}  // namespace picard
