#include <doctest.h>

#include <cmath>

#include "cosets/codes.hpp"
#include "cosets/experiments.hpp"
#include "cosets/fourier.hpp"
#include "cosets/rng.hpp"

using namespace cosets;

TEST_CASE("coset average, exact mode") {
    SUBCASE("full space: every coset spectrum is binomial") {
        BitMatrix rows;
        for (int i = 0; i < 7; ++i) {
            BitVector r(7);
            r.set(i, true);
            rows.push_back(r);
        }
        LinearCode full(7, rows);
        CosetAverageReport report = coset_average(full, {});
        CHECK(report.avg_l1 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(report.avg_linf == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(report.samples == 1);
    }
    SUBCASE("extended Hadamard r=3 equals a brute-force sweep over all 128 translations") {
        LinearCode q = extended_bilateral_code(hamming_code(3));
        CosetAverageReport report = coset_average(q, {});
        CHECK(report.samples == 8);

        WeightDistribution bin = binomial_distribution(7);
        double l1 = 0, linf = 0, l2 = 0;
        for (std::uint64_t u = 0; u < 128; ++u) {
            BitVector shift(7);
            for (int b = 0; b < 7; ++b)
                if ((u >> b) & 1u) shift.set(b, true);
            Metrics m = distance_metrics(weight_distribution(q, shift), bin);
            l1 += m.l1;
            linf += m.linf;
            l2 += m.l2sq;
        }
        CHECK(report.avg_l1 == doctest::Approx(l1 / 128).epsilon(1e-12));
        CHECK(report.avg_linf == doctest::Approx(linf / 128).epsilon(1e-12));
        CHECK(report.avg_l2sq == doctest::Approx(l2 / 128).epsilon(1e-12));
    }
    SUBCASE("extended Hadamard r=4: pinned values, certificate and bound ordering") {
        LinearCode q = extended_bilateral_code(hamming_code(4));
        CosetAverageReport report = coset_average(q, {});
        CHECK(report.samples == 1024);
        CHECK(report.avg_l1 == doctest::Approx(0.280670046806).epsilon(1e-9));
        CHECK(report.avg_linf == doctest::Approx(0.046519339085).epsilon(1e-9));
        CHECK(report.avg_l2sq == doctest::Approx(0.0149593800306).epsilon(1e-9));
        CHECK(report.dual_bilateral_distance == 3);
        REQUIRE(report.bounds.has_value());
        CHECK(report.avg_linf <= report.certificate);
        CHECK(report.avg_linf <= std::min(report.bounds->linf_small, report.bounds->linf_large));
        CHECK(report.linf_bound_vacuous);  // min bound 1.2797 > 1 at this size
    }
    SUBCASE("budget errors point at Monte Carlo mode") {
        LinearCode tiny = LinearCode::zero(40);
        CosetAverageMode mode;
        mode.coset_budget = 1u << 10;
        CHECK_THROWS_WITH_AS(coset_average(tiny, mode),
                             doctest::Contains("use Monte Carlo mode"), std::runtime_error);
    }
}

TEST_CASE("coset average, Monte Carlo mode") {
    LinearCode q = extended_bilateral_code(hamming_code(4));
    CosetAverageMode mc;
    mc.monte_carlo = true;
    mc.samples = 4000;
    mc.seed = 7;

    CosetAverageReport a = coset_average(q, mc);
    CosetAverageReport b = coset_average(q, mc);
    CHECK(a.avg_linf == b.avg_linf);  // bit-identical rerun

    mc.threads = 4;
    CosetAverageReport c = coset_average(q, mc);
    CHECK(a.avg_linf == c.avg_linf);  // worker count cannot matter
    CHECK(a.avg_l1 == c.avg_l1);

    CosetAverageReport exact = coset_average(q, {});
    CHECK(std::abs(a.avg_linf - exact.avg_linf) <= 5 * a.stderr_linf);
    CHECK(a.stderr_linf > 0);

    mc.samples = 0;
    CHECK_THROWS_AS(coset_average(q, mc), std::invalid_argument);
}

TEST_CASE("exact mode parallel determinism and per-coset dump") {
    LinearCode q = extended_bilateral_code(hamming_code(4));
    CosetAverageMode serial;
    CosetAverageMode wide;
    wide.threads = 4;
    CosetAverageReport a = coset_average(q, serial, true);
    CosetAverageReport b = coset_average(q, wide, true);
    CHECK(a.avg_l1 == b.avg_l1);
    CHECK(a.avg_l2sq == b.avg_l2sq);
    REQUIRE(a.per_coset.size() == 1024);
    REQUIRE(b.per_coset.size() == 1024);
    for (std::size_t i = 0; i < a.per_coset.size(); ++i)
        CHECK(a.per_coset[i].l1 == b.per_coset[i].l1);
}

TEST_CASE("tail of the per-coset L1 distribution obeys the Markov budget") {
    // d = 7 instance small enough for exact coset enumeration
    LinearCode q = extended_bilateral_code(bch_code(3, 5));
    CosetAverageMode mode;
    mode.threads = 4;
    CosetAverageReport report = coset_average(q, mode, true);
    REQUIRE(report.dual_bilateral_distance >= 7);
    REQUIRE(report.per_coset.size() == (1u << 15));

    for (double xi : {1.0, 2.0}) {
        const auto [threshold, fraction] = tail_fraction_bound(q.length(), 7, xi);
        std::size_t over = 0;
        for (const Metrics& m : report.per_coset)
            if (m.l1 > threshold) ++over;
        const double empirical = static_cast<double>(over) / report.per_coset.size();
        // Markov on the empirical distribution itself, always valid
        CHECK(empirical <= report.avg_l1 / threshold + 1e-12);
        // the closed-form budget applies once the mean bound is nonvacuous
        REQUIRE(report.bounds.has_value());
        const double l1_bound = std::min(report.bounds->l1_small, report.bounds->l1_large);
        if (l1_bound / threshold <= fraction) CHECK(empirical <= fraction + 1e-12);
    }
}

TEST_CASE("random-ensemble mean squared distance") {
    GammaReport report = ensemble_gamma(20, 1024, 60, 5);
    CHECK(report.gamma_hat * 1024 > 0.5);
    CHECK(report.gamma_hat * 1024 < 2.0);
    CHECK(report.p_N == doctest::Approx(1023.0 / (std::pow(2.0, 20) - 1)).epsilon(1e-12));

    GammaReport again = ensemble_gamma(20, 1024, 60, 5);
    CHECK(report.gamma_hat == again.gamma_hat);
    GammaReport wide = ensemble_gamma(20, 1024, 60, 5, 4);
    CHECK(report.gamma_hat == wide.gamma_hat);

    CHECK_THROWS_AS(ensemble_gamma(20, 1000, 60, 5), std::invalid_argument);  // not a power of 2
    CHECK_THROWS_AS(ensemble_gamma(20, 1024, 10, 5), std::invalid_argument);  // too few trials
    CHECK_THROWS_AS(ensemble_gamma(10, 1024, 60, 5), std::invalid_argument);  // N == 2^n
}

TEST_CASE("fraction of random codes with good dual bilateral distance") {
    CHECK(gv_fraction(64, 1.0, 30, 3) == 1.0);
    CHECK(gv_fraction(64, 0.5, 30, 3) == 1.0);

    const double f = gv_fraction(64, 3.0, 30, 9);
    CHECK(f >= 0.9);
    CHECK(gv_fraction(64, 3.0, 30, 9) == f);
    CHECK(gv_fraction(64, 3.0, 30, 9, 4) == f);

    CHECK_THROWS_AS(gv_fraction(64, 3.0, 10, 9), std::invalid_argument);
    CHECK_THROWS_AS(gv_fraction(1024, 2.5, 30, 9), std::invalid_argument);  // 2^25 too large
}
