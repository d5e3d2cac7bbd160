#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosets/approximation.hpp"
#include "cosets/linear_code.hpp"
#include "cosets/macwilliams.hpp"
#include "cosets/spectra.hpp"

namespace cosets {

inline constexpr std::uint64_t kCosetBudget = 1ull << 24;

struct CosetAverageMode {
    bool monte_carlo = false;
    std::uint64_t samples = 0;       // MC only
    std::uint64_t seed = 0;          // MC only
    int threads = 1;
    std::uint64_t coset_budget = kCosetBudget;
};

struct CosetAverageReport {
    std::string code_descriptor;
    std::size_t n = 0;
    std::size_t k = 0;
    bool monte_carlo = false;
    std::uint64_t samples = 0;  // number of cosets in exact mode
    std::uint64_t seed = 0;
    double avg_l1 = 0, avg_linf = 0, avg_l2sq = 0;
    double stderr_l1 = 0, stderr_linf = 0, stderr_l2sq = 0;  // MC mode only
    std::size_t dual_bilateral_distance = 0;  // certified via the transform
    std::optional<BoundSet> bounds;           // set when d >= 3 (t >= 1)
    bool linf_bound_vacuous = false;          // bound above the trivial 1
    bool l1_bound_vacuous = false;            // bound above the trivial 2
    double certificate = 0;                   // from linf_certificate
    std::vector<Metrics> per_coset;           // exact mode, on request

    std::string to_json() const;
};

/// Average L1/Linf/L2^2 distance between coset spectra and the binomial,
/// either exactly over one representative per coset or by seeded Monte
/// Carlo over uniform translations (sample i drawn from substream i).
CosetAverageReport coset_average(const LinearCode& Q, const CosetAverageMode& mode,
                                 bool keep_per_coset = false);

struct GammaReport {
    std::size_t n = 0;
    std::uint64_t N = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double gamma_hat = 0;  // mean L2^2 distance to the binomial at u = 0
    double p_N = 0;        // (N-1)/(2^n-1)

    std::string to_json() const;
};

/// Random-ensemble estimate of E ||spectrum(Q) - Bin_n||_2^2 over codes
/// of size N = 2^k drawn uniformly (full-rank generators), trial j from
/// substream j.
GammaReport ensemble_gamma(std::size_t n, std::uint64_t N, std::uint64_t trials,
                           std::uint64_t seed, int threads = 1);

/// Fraction of random codes of size ~ n^c whose dual bilateral minimum
/// distance is at least ceil(c) - 1, over `trials` seeded draws.
double gv_fraction(std::size_t n, double c, std::uint64_t trials, std::uint64_t seed,
                   int threads = 1);

}  // namespace cosets
