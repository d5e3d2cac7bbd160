#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosets/bigint.hpp"
#include "cosets/linear_code.hpp"

namespace cosets {

/// Exact weight histogram of a word set plus its normalized real masses.
/// Counts stay exact integers; only the masses are floating point.
struct WeightDistribution {
    std::size_t n = 0;
    std::vector<BigInt> counts;   // counts[w], w in [0, n]
    BigInt total = 0;             // sum of counts
    std::vector<double> masses;   // counts[w] / total

    static WeightDistribution from_counts(std::size_t n, std::vector<BigInt> counts);

    /// CSV rows "w,count,mass" preceded by "# n=<n> total=<total>".
    std::string to_csv() const;
};

/// Histogram over weights |c + shift| of all codewords c; total 2^k.
WeightDistribution weight_distribution(const LinearCode& code,
                                       const std::optional<BitVector>& shift = std::nullopt,
                                       std::uint64_t budget = kEnumerationBudget);

/// Weight distribution of a uniform n-bit string: counts C(n,w), total 2^n.
WeightDistribution binomial_distribution(std::size_t n);

struct Metrics {
    double l1 = 0;
    double linf = 0;
    double l2sq = 0;
};

/// L1 / Linf / squared-L2 distances between two mass vectors of equal length.
Metrics distance_metrics(const WeightDistribution& p, const WeightDistribution& q);

/// c^w - ((c+1)/2)^n with the 0^0 = 1 convention, for c in [-1, 1] and
/// integer 0 <= w <= n. The expectation of this function under the weight
/// distribution of a proper linear code equals the mean squared coset
/// spectrum error at cos(theta) = c.
double h_c_eval(double c, std::size_t n, std::size_t w);

/// x^e by binary exponentiation (exact integer exponent; 0^0 = 1).
double ipow(double x, std::uint64_t e);

}  // namespace cosets
