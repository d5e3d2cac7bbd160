#include "cosets/macwilliams.hpp"

#include <sstream>
#include <stdexcept>

namespace cosets {

WeightEnumerator macwilliams_transform(const WeightEnumerator& A, const BigInt& code_size) {
    const std::size_t n = A.n;
    if (n > 4096) throw std::invalid_argument("macwilliams_transform: n must be <= 4096");
    if (A.A.size() != n + 1) throw std::invalid_argument("enumerator must have n+1 entries");
    BigInt sum = 0;
    for (const auto& a : A.A) sum += a;
    if (sum != code_size)
        throw std::invalid_argument("enumerator total does not match the code size");

    PascalRows pascal;
    WeightEnumerator out;
    out.n = n;
    out.A.assign(n + 1, BigInt(0));
    for (std::size_t j = 0; j <= n; ++j) {
        if (A.A[j] == 0) continue;
        const auto& row_j = pascal.row(j);
        const auto& row_nj = pascal.row(n - j);
        for (std::size_t w = 0; w <= n; ++w) {
            // K_w(j; n), i restricted to where both binomials are nonzero
            BigInt kernel = 0;
            const std::size_t lo = w > (n - j) ? w - (n - j) : 0;
            const std::size_t hi = std::min(j, w);
            for (std::size_t i = lo; i <= hi; ++i) {
                const BigInt term = row_j[i] * row_nj[w - i];
                if (i & 1u)
                    kernel -= term;
                else
                    kernel += term;
            }
            out.A[w] += A.A[j] * kernel;
        }
    }
    for (std::size_t w = 0; w <= n; ++w) {
        if (out.A[w] % code_size != 0)
            throw std::invalid_argument("not a linear-code enumerator: transform is not integral");
        out.A[w] /= code_size;
        if (out.A[w] < 0)
            throw std::invalid_argument("not a linear-code enumerator: negative dual count");
    }
    return out;
}

BilateralProfile bilateral_profile(const WeightEnumerator& A) {
    const std::size_t n = A.n;
    if (A.A.empty() || A.A[0] < 1)
        throw std::invalid_argument("bilateral_profile: enumerator must have A[0] >= 1");
    BilateralProfile p;
    p.n = n;
    p.zero_code = true;
    for (std::size_t w = 1; w <= n; ++w) {
        if (A.A[w] > 0) {
            if (p.zero_code) p.min_weight = w;
            p.max_weight = w;
            p.zero_code = false;
        }
    }
    if (p.zero_code) {
        p.d_bilateral = n / 2;
        p.width_sigma = static_cast<long>(n) - 2 * static_cast<long>(p.d_bilateral);
        return p;
    }
    p.d_bilateral = std::min(p.min_weight, n - p.max_weight);
    p.width_sigma = static_cast<long>(n) - 2 * static_cast<long>(p.d_bilateral);
    return p;
}

std::string BilateralProfile::to_json() const {
    std::ostringstream out;
    out << "{\"d_bilateral\":" << d_bilateral << ",\"width\":" << width_sigma
        << ",\"min_w\":" << min_weight << ",\"max_w\":" << max_weight
        << (zero_code ? ",\"zero_code\":true" : "") << "}";
    return out.str();
}

}  // namespace cosets
