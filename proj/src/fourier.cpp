#include "cosets/fourier.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "cosets/errors.hpp"
#include "cosets/parallel.hpp"

namespace cosets {

CubeFunction::CubeFunction(std::size_t n_) : n(n_) {
    if (n > 24) throw std::invalid_argument("CubeFunction: n must be <= 24 for dense storage");
    values.assign(1ull << n, Complex(0, 0));
}

CubeFunction walsh_hadamard(const CubeFunction& f) {
    CubeFunction out = f;
    const std::size_t size = out.values.size();
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t block = 0; block < size; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                const Complex a = out.values[i];
                const Complex b = out.values[i + half];
                out.values[i] = a + b;
                out.values[i + half] = a - b;
            }
        }
    }
    const double scale = 1.0 / static_cast<double>(size);
    for (auto& v : out.values) v *= scale;
    return out;
}

Complex exp_transform_closed_form(Complex r, std::size_t n, std::size_t z_weight) {
    if (z_weight > n) throw std::invalid_argument("z weight exceeds n");
    const Complex minus = (1.0 - r) / 2.0;
    const Complex plus = (1.0 + r) / 2.0;
    Complex result(1, 0);
    for (std::size_t i = 0; i < z_weight; ++i) result *= minus;
    for (std::size_t i = 0; i < n - z_weight; ++i) result *= plus;
    return result;
}

double mse_rhs(const WeightDistribution& spectrum, double c) {
    const std::size_t n = spectrum.n;
    double acc = 0;
    for (std::size_t w = 0; w <= n; ++w)
        if (spectrum.masses[w] != 0) acc += spectrum.masses[w] * ipow(c, w);
    const double value = acc - ipow((c + 1.0) / 2.0, n);
    if (value < -1e-12)
        throw verification_error("spectrum is not from a linear code: mean-square value " +
                                 std::to_string(value) + " is negative");
    return value;
}

std::vector<BitVector> coset_representatives(const LinearCode& code, std::uint64_t budget) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::size_t free_count = n - k;
    if (free_count >= 64 || (1ull << free_count) > budget)
        throw std::runtime_error("coset enumeration too large: 2^" + std::to_string(free_count) +
                                 " cosets exceeds budget of " + std::to_string(budget));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : code.pivot_columns()) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    free_cols.reserve(free_count);
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) free_cols.push_back(i);

    std::vector<BitVector> reps;
    reps.reserve(1ull << free_count);
    BitVector cur(n);
    reps.push_back(cur);
    for (std::uint64_t i = 1; i < (1ull << free_count); ++i) {
        const std::size_t flip = free_cols[std::countr_zero(i)];
        cur.set(flip, !cur.get(flip));
        reps.push_back(cur);
    }
    return reps;
}

double mse_lhs_exhaustive(const LinearCode& Q, double c, int threads) {
    const std::size_t n = Q.length();
    if (n > 20) throw std::invalid_argument("mse_lhs_exhaustive: n must be <= 20");
    const double theta = std::acos(std::clamp(c, -1.0, 1.0));

    // e^(i theta w) per weight, and the uniform expectation ((1+e^it)/2)^n.
    std::vector<Complex> phase(n + 1);
    for (std::size_t w = 0; w <= n; ++w)
        phase[w] = std::polar(1.0, theta * static_cast<double>(w));
    Complex uniform_mean(1, 0);
    const Complex base = (1.0 + std::polar(1.0, theta)) / 2.0;
    for (std::size_t i = 0; i < n; ++i) uniform_mean *= base;

    const std::vector<BitVector> reps = coset_representatives(Q);
    const double inv_order = 1.0 / static_cast<double>(1ull << Q.dimension());

    auto chunk_sum = [&](std::size_t lo, std::size_t hi) {
        double acc = 0;
        for (std::size_t rep = lo; rep < hi; ++rep) {
            Complex mean(0, 0);
            for (const BitVector& cw : enumerate_codewords(Q))
                mean += phase[BitVector::xor_weight(cw, reps[rep])];
            mean = mean * inv_order - uniform_mean;
            acc += std::norm(mean);
        }
        return acc;
    };
    const auto partials = chunked_map<double>(reps.size(), threads, chunk_sum);
    double total = 0;
    for (double p : partials) total += p;
    return total / static_cast<double>(reps.size());
}

double bias(const std::vector<double>& masses, std::size_t n) {
    if (n > 24) throw std::invalid_argument("bias: n must be <= 24");
    if (masses.size() != (1ull << n)) throw std::invalid_argument("bias: wrong mass vector size");
    double sum = 0;
    for (double m : masses) sum += m;
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("bias: non-normalized input (masses sum to " +
                                    std::to_string(sum) + ")");
    CubeFunction f(n);
    for (std::size_t i = 0; i < masses.size(); ++i) f.values[i] = masses[i];
    CubeFunction fhat = walsh_hadamard(f);
    const double scale = static_cast<double>(1ull << n);
    double best = 0;
    for (std::size_t z = 1; z < fhat.values.size(); ++z)
        best = std::max(best, std::abs(fhat.values[z]) * scale);
    return best;
}

}  // namespace cosets
