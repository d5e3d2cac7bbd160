#include <doctest.h>

#include <bit>
#include <cmath>

#include "cosets/codes.hpp"
#include "cosets/errors.hpp"
#include "cosets/fourier.hpp"
#include "cosets/rng.hpp"
#include "cosets/spectra.hpp"

using namespace cosets;

namespace {

double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// probability masses of the uniform distribution on a code
std::vector<double> code_masses(const LinearCode& code) {
    std::vector<double> masses(1ull << code.length(), 0.0);
    const double p = 1.0 / static_cast<double>(1ull << code.dimension());
    for (const BitVector& w : enumerate_codewords(code)) masses[w.words()[0]] += p;
    return masses;
}

std::vector<double> random_masses(std::size_t n, std::mt19937_64& eng) {
    std::vector<double> masses(1ull << n);
    double total = 0;
    for (auto& m : masses) {
        m = uniform01(eng);
        total += m;
    }
    for (auto& m : masses) m /= total;
    return masses;
}

// E_mu X_z for all z at once: 2^n * WHT of the mass vector
std::vector<double> character_means(const std::vector<double>& masses, std::size_t n) {
    CubeFunction f(n);
    for (std::size_t i = 0; i < masses.size(); ++i) f.values[i] = masses[i];
    CubeFunction fhat = walsh_hadamard(f);
    std::vector<double> means(masses.size());
    for (std::size_t z = 0; z < masses.size(); ++z)
        means[z] = fhat.values[z].real() * static_cast<double>(1ull << n);
    return means;
}

// E_u |E_{translated mu} f - E_U f|^2 over all 2^n translations, direct
double translation_mse(const std::vector<double>& masses, const CubeFunction& f) {
    const std::size_t size = masses.size();
    Complex uniform_mean(0, 0);
    for (const auto& v : f.values) uniform_mean += v;
    uniform_mean /= static_cast<double>(size);
    double acc = 0;
    for (std::size_t u = 0; u < size; ++u) {
        Complex mean(0, 0);
        for (std::size_t x = 0; x < size; ++x) mean += masses[x ^ u] * f.values[x];
        acc += std::norm(mean - uniform_mean);
    }
    return acc / static_cast<double>(size);
}

}  // namespace

TEST_CASE("walsh-hadamard basics") {
    SUBCASE("a single character transforms to a unit delta") {
        const std::size_t n = 6, z = 0b010110;
        CubeFunction f(n);
        for (std::size_t x = 0; x < f.values.size(); ++x)
            f.values[x] = (std::popcount(x & z) & 1u) ? -1.0 : 1.0;
        CubeFunction fhat = walsh_hadamard(f);
        for (std::size_t i = 0; i < fhat.values.size(); ++i)
            CHECK(std::abs(fhat.values[i] - (i == z ? 1.0 : 0.0)) < 1e-12);
    }
    SUBCASE("constant function transforms to a delta at 0") {
        CubeFunction f(5);
        for (auto& v : f.values) v = 1.0;
        CubeFunction fhat = walsh_hadamard(f);
        CHECK(std::abs(fhat.values[0] - 1.0) < 1e-12);
        for (std::size_t i = 1; i < fhat.values.size(); ++i) CHECK(std::abs(fhat.values[i]) < 1e-12);
    }
    SUBCASE("Parseval at n=8") {
        std::mt19937_64 eng = substream_engine(5);
        CubeFunction f(8);
        for (auto& v : f.values) v = 2.0 * uniform01(eng) - 1.0;
        CubeFunction fhat = walsh_hadamard(f);
        double lhs = 0, rhs = 0;
        for (const auto& v : f.values) lhs += std::norm(v);
        lhs /= static_cast<double>(f.values.size());
        for (const auto& v : fhat.values) rhs += std::norm(v);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
    SUBCASE("size guard") { CHECK_THROWS_AS(CubeFunction(25), std::invalid_argument); }
}

TEST_CASE("closed-form transform of r^|x|") {
    CHECK(std::abs(exp_transform_closed_form(1.0, 9, 0) - 1.0) < 1e-15);
    for (std::size_t w = 1; w <= 9; ++w) CHECK(std::abs(exp_transform_closed_form(1.0, 9, w)) < 1e-15);
    CHECK(std::abs(exp_transform_closed_form(-1.0, 9, 9) - 1.0) < 1e-15);
    for (std::size_t w = 0; w < 9; ++w) CHECK(std::abs(exp_transform_closed_form(-1.0, 9, w)) < 1e-15);
    CHECK(std::abs(exp_transform_closed_form(Complex(0, 1), 2, 1) - Complex(0.5, 0)) < 1e-15);

    // matches the dense transform at every z for random complex r
    std::mt19937_64 eng = substream_engine(17);
    for (int trial = 0; trial < 4; ++trial) {
        const std::size_t n = 7 + trial % 3;
        const Complex r(2.0 * uniform01(eng) - 1.0, 2.0 * uniform01(eng) - 1.0);
        CubeFunction g(n);
        for (std::size_t x = 0; x < g.values.size(); ++x)
            g.values[x] = std::pow(r, static_cast<double>(std::popcount(x)));
        CubeFunction ghat = walsh_hadamard(g);
        for (std::size_t z = 0; z < ghat.values.size(); ++z) {
            const Complex expected =
                exp_transform_closed_form(r, n, static_cast<std::size_t>(std::popcount(z)));
            CHECK(std::abs(ghat.values[z] - expected) < 1e-10);
        }
    }
}

TEST_CASE("spectrum-side mean square error") {
    LinearCode q = extended_bilateral_code(hamming_code(3));
    WeightDistribution spec = weight_distribution(q);
    CHECK(mse_rhs(spec, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mse_rhs(spec, 0.0) == doctest::Approx(7.0 / 128).epsilon(1e-12));
    CHECK(mse_rhs(spec, -1.0) == doctest::Approx(0.0).epsilon(1e-15));

    // nonnegative across the grid for linear-code spectra
    for (const LinearCode& code :
         {simplex_code(4), hamming_code(3), extended_bilateral_code(bch_code(2, 4))}) {
        WeightDistribution s = weight_distribution(code);
        for (int i = 0; i <= 100; ++i) CHECK(mse_rhs(s, -1.0 + i / 50.0) >= -1e-12);
    }

    // a non-code spectrum goes negative and is reported as such
    std::vector<BigInt> fake(5, 0);
    fake[1] = 1;
    WeightDistribution bad = WeightDistribution::from_counts(4, fake);
    CHECK_THROWS_AS(mse_rhs(bad, 0.0), verification_error);
}

TEST_CASE("exhaustive translation average equals the spectrum-side value") {
    SUBCASE("full space: every coset is uniform") {
        BitMatrix rows;
        for (int i = 0; i < 6; ++i) {
            BitVector r(6);
            r.set(i, true);
            rows.push_back(r);
        }
        LinearCode full(6, rows);
        for (double c : {-0.8, 0.0, 0.7}) CHECK(mse_lhs_exhaustive(full, c) < 1e-15);
    }
    SUBCASE("extended Hadamard r=3 at c=0: 7/128") {
        LinearCode q = extended_bilateral_code(hamming_code(3));
        CHECK(mse_lhs_exhaustive(q, 0.0) == doctest::Approx(7.0 / 128).epsilon(1e-10));
    }
    SUBCASE("c=1 vanishes for any code") {
        CHECK(mse_lhs_exhaustive(simplex_code(3), 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("matches mse_rhs on a 33-point grid") {
        LinearCode q = extended_bilateral_code(hamming_code(3));
        WeightDistribution spec = weight_distribution(q);
        for (int i = 0; i <= 32; ++i) {
            const double c = -1.0 + i / 16.0;
            CHECK(mse_lhs_exhaustive(q, c) == doctest::Approx(mse_rhs(spec, c)).epsilon(1e-10));
        }
    }
    SUBCASE("thread count does not change the value") {
        LinearCode q = extended_bilateral_code(hamming_code(3));
        CHECK(mse_lhs_exhaustive(q, 0.37, 1) == mse_lhs_exhaustive(q, 0.37, 4));
    }
}

TEST_CASE("bias") {
    SUBCASE("uniform distribution has bias 0") {
        std::vector<double> uniform(1u << 8, 1.0 / 256);
        CHECK(bias(uniform, 8) == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("proper linear codes have bias 1") {
        for (const LinearCode& code : {simplex_code(3), hamming_code(3), bch_code(2, 4)})
            CHECK(bias(code_masses(code), code.length()) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("point mass at 0 has bias 1") {
        std::vector<double> point(1u << 6, 0.0);
        point[0] = 1.0;
        CHECK(bias(point, 6) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("non-normalized input is rejected") {
        std::vector<double> bad(1u << 4, 1.0);
        CHECK_THROWS_AS(bias(bad, 4), std::invalid_argument);
    }
}

TEST_CASE("translation variance identity for arbitrary distributions") {
    // E_u |E_{translated mu} f - E f|^2 = sum_{z!=0} |fhat(z)|^2 (E_mu X_z)^2
    std::mt19937_64 eng = substream_engine(23);
    for (int trial = 0; trial < 3; ++trial) {
        const std::size_t n = 8 + trial;
        std::vector<double> masses = random_masses(n, eng);
        CubeFunction f(n);
        for (auto& v : f.values) v = Complex(2.0 * uniform01(eng) - 1.0, uniform01(eng));
        const double direct = translation_mse(masses, f);

        CubeFunction fhat = walsh_hadamard(f);
        std::vector<double> means = character_means(masses, n);
        double spectral = 0;
        for (std::size_t z = 1; z < fhat.values.size(); ++z)
            spectral += std::norm(fhat.values[z]) * means[z] * means[z];
        CHECK(direct == doctest::Approx(spectral).epsilon(1e-9));
    }
}

TEST_CASE("biased distributions: translation variance is delta^2-damped") {
    // E_u |E_{translated mu} f - E f|^2 <= bias(mu)^2 (E|f|^2 - |E f|^2)
    std::mt19937_64 eng = substream_engine(29);
    for (int trial = 0; trial < 3; ++trial) {
        const std::size_t n = 9 + trial;
        std::vector<double> masses = random_masses(n, eng);
        const double delta = bias(masses, n);
        CubeFunction f(n);
        for (auto& v : f.values) v = Complex(uniform01(eng), uniform01(eng));
        const double lhs = translation_mse(masses, f);
        double e2 = 0;
        Complex e1(0, 0);
        for (const auto& v : f.values) {
            e2 += std::norm(v);
            e1 += v;
        }
        e2 /= static_cast<double>(f.values.size());
        e1 /= static_cast<double>(f.values.size());
        CHECK(lhs <= delta * delta * (e2 - std::norm(e1)) + 1e-9);
    }
}

TEST_CASE("low-degree expectation invariance under good dual distance") {
    // E_{spectrum(Q)} h = E_Bin h for h(w) = f(w) + (-1)^w g(w),
    // deg f, deg g <= d - 1, whenever dual(Q) has bilateral distance >= d
    std::mt19937_64 eng = substream_engine(31);
    struct Case {
        LinearCode code;
        unsigned d;
    };
    const Case cases[] = {{extended_bilateral_code(hamming_code(3)), 3},
                          {extended_bilateral_code(bch_code(2, 4)), 5}};
    for (const auto& [code, d] : cases) {
        const std::size_t n = code.length();
        WeightDistribution spec = weight_distribution(code);
        WeightDistribution bin = binomial_distribution(n);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<double> f(d), g(d);
            for (auto& x : f) x = 2.0 * uniform01(eng) - 1.0;
            for (auto& x : g) x = 2.0 * uniform01(eng) - 1.0;
            auto h = [&](std::size_t w) {
                double pf = 0, pg = 0;
                for (std::size_t j = d; j-- > 0;) {
                    pf = pf * static_cast<double>(w) + f[j];
                    pg = pg * static_cast<double>(w) + g[j];
                }
                return pf + (w % 2 ? -pg : pg);
            };
            double lhs = 0, rhs = 0;
            for (std::size_t w = 0; w <= n; ++w) {
                lhs += spec.masses[w] * h(w);
                rhs += bin.masses[w] * h(w);
            }
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
        }
    }
}

TEST_CASE("coset representatives cover distinct cosets") {
    LinearCode code = random_linear_code(12, 5, 3);
    std::vector<BitVector> reps = coset_representatives(code);
    REQUIRE(reps.size() == (1u << 7));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(code.contains(reps[i] ^ reps[j]));
}
