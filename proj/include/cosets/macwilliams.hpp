#pragma once

#include <string>
#include <vector>

#include "cosets/bigint.hpp"
#include "cosets/spectra.hpp"

namespace cosets {

/// Exact weight enumerator A(0..n) of a word set (A[0] >= 1 for codes).
struct WeightEnumerator {
    std::size_t n = 0;
    std::vector<BigInt> A;

    static WeightEnumerator from_distribution(const WeightDistribution& d) {
        return {d.n, d.counts};
    }
};

/// Dual weight enumerator via the exact transform
///   Adual[w] = (1/|Q|) sum_j A[j] * K_w(j; n),
///   K_w(j; n) = sum_i (-1)^i C(j,i) C(n-j, w-i).
/// All arithmetic is integer; the final division by |Q| must be exact,
/// otherwise the input was not a linear code's enumerator.
WeightEnumerator macwilliams_transform(const WeightEnumerator& A, const BigInt& code_size);

/// Extremes of the nonzero-weight support and the derived quantities
///   d = min(min_w, n - max_w)   (bilateral minimum distance)
///   sigma = max |2w - n| over nonzero weights = n - 2d   (width).
struct BilateralProfile {
    std::size_t n = 0;
    std::size_t d_bilateral = 0;
    long width_sigma = 0;
    std::size_t min_weight = 0;  // over nonzero-weight words
    std::size_t max_weight = 0;
    bool zero_code = false;      // no nonzero words; d = floor(n/2) by convention

    std::string to_json() const;
};

BilateralProfile bilateral_profile(const WeightEnumerator& A);

}  // namespace cosets
