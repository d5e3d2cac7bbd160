#include "cosets/codes.hpp"

#include <stdexcept>
#include <string>

#include "cosets/rng.hpp"

namespace cosets {

LinearCode simplex_code(unsigned r) {
    if (r < 2 || r > 20) throw std::invalid_argument("simplex_code: r must be in [2,20]");
    const std::size_t n = (1ull << r) - 1;
    BitMatrix rows(r, BitVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        const std::uint64_t column = j + 1;
        for (unsigned b = 0; b < r; ++b)
            if ((column >> b) & 1u) rows[b].set(j, true);
    }
    return LinearCode(n, std::move(rows));
}

LinearCode hamming_code(unsigned r) {
    return dual_basis(simplex_code(r));
}

BinaryPolynomial bch_generator_polynomial(unsigned t, unsigned r) {
    if (r < 2) throw std::invalid_argument("bch: r must be >= 2");
    if (t < 1) throw std::invalid_argument("bch: t must be >= 1");
    const std::uint64_t m = 2ull * t - 2;
    if (m * m >= (1ull << r))  // 2t - 2 < 2^(r/2)
        throw std::invalid_argument("bch: requires 2t - 2 < 2^(r/2)");

    const GF2m& field = GF2m::instance(r);
    // lcm of the minimal polynomials of alpha^1..alpha^2t. Even powers are
    // conjugate to lower ones, so only odd exponents contribute; distinct
    // irreducibles multiply.
    std::vector<BinaryPolynomial> factors;
    BinaryPolynomial g = BinaryPolynomial::one();
    for (unsigned i = 1; i <= 2 * t; i += 2) {
        BinaryPolynomial m = field.minimal_polynomial(field.alpha_power(i));
        bool seen = false;
        for (const auto& f : factors) seen = seen || f == m;
        if (!seen) {
            factors.push_back(m);
            g = g * m;
        }
    }
    return g;
}

LinearCode bch_code(unsigned t, unsigned r) {
    const BinaryPolynomial g = bch_generator_polynomial(t, r);
    const std::size_t n = (1ull << r) - 1;
    const int deg = g.degree();
    if (deg != static_cast<int>(r * t))
        throw std::invalid_argument("degenerate BCH parameters: deg(g) = " +
                                    std::to_string(deg) + ", expected rt = " +
                                    std::to_string(r * t));
    const std::size_t k = n - static_cast<std::size_t>(deg);
    BitMatrix rows(k, BitVector(n));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j + i < n; ++j)
            if (g.coefficient(j)) rows[i].set(i + j, true);
    LinearCode code(n, std::move(rows));
    if (code.dimension() != k)
        throw std::logic_error("bch: cyclic shifts of g are not independent");
    return code;
}

LinearCode extended_bilateral_code(const LinearCode& D) {
    const std::size_t n = D.length();
    if (n % 2 == 0)
        throw std::invalid_argument("extended_bilateral_code: block length must be odd");
    if (!D.contains_all_ones())
        throw std::invalid_argument("extended_bilateral_code: all-ones vector not in code");
    LinearCode dual = dual_basis(D);
    BitMatrix rows = dual.generator();
    rows.push_back(BitVector::ones(n));
    LinearCode Q(n, std::move(rows));
    // 1^n is not orthogonal to itself at odd n, so it is outside D-dual
    // and the dimension grows by exactly one.
    if (Q.dimension() != dual.dimension() + 1)
        throw std::logic_error("extended_bilateral_code: dimension did not increase");
    return Q;
}

LinearCode random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed,
                              unsigned* attempts_out) {
    if (k > n) throw std::invalid_argument("random_linear_code: k must be <= n");
    std::mt19937_64 eng = substream_engine(seed);
    unsigned attempts = 0;
    for (;;) {
        ++attempts;
        BitMatrix rows;
        rows.reserve(k);
        for (std::size_t i = 0; i < k; ++i) rows.push_back(random_bits(eng, n));
        if (k == 0 || gf2_rank(rows) == k) {
            if (attempts_out) *attempts_out = attempts;
            return LinearCode(n, std::move(rows));
        }
    }
}

}  // namespace cosets
