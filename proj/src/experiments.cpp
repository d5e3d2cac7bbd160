#include "cosets/experiments.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "cosets/codes.hpp"
#include "cosets/fourier.hpp"
#include "cosets/parallel.hpp"
#include "cosets/rng.hpp"

namespace cosets {

namespace {

struct MetricSums {
    double l1 = 0, linf = 0, l2sq = 0;
    double l1_sq = 0, linf_sq = 0, l2sq_sq = 0;
    std::uint64_t count = 0;

    void add(const Metrics& m) {
        l1 += m.l1;
        linf += m.linf;
        l2sq += m.l2sq;
        l1_sq += m.l1 * m.l1;
        linf_sq += m.linf * m.linf;
        l2sq_sq += m.l2sq * m.l2sq;
        ++count;
    }
    MetricSums& operator+=(const MetricSums& o) {
        l1 += o.l1;
        linf += o.linf;
        l2sq += o.l2sq;
        l1_sq += o.l1_sq;
        linf_sq += o.linf_sq;
        l2sq_sq += o.l2sq_sq;
        count += o.count;
        return *this;
    }
};

Metrics metrics_from_hist(const std::vector<std::uint64_t>& hist, double inv,
                          const WeightDistribution& bin) {
    Metrics m;
    for (std::size_t w = 0; w < hist.size(); ++w) {
        const double d = static_cast<double>(hist[w]) * inv - bin.masses[w];
        m.l1 += std::abs(d);
        m.linf = std::max(m.linf, std::abs(d));
        m.l2sq += d * d;
    }
    return m;
}

// Coset spectra dominate the runtime; for single-word block lengths the
// codeword list is materialized once and each coset is a plain
// xor+popcount sweep.
class CosetMetricsEngine {
public:
    CosetMetricsEngine(const LinearCode& Q, const WeightDistribution& bin)
        : Q_(Q), bin_(bin), inv_(1.0 / static_cast<double>(1ull << Q.dimension())) {
        if (Q.length() <= 64 && Q.dimension() <= 24) {
            words_.reserve(1ull << Q.dimension());
            for (const BitVector& cw : enumerate_codewords(Q)) words_.push_back(cw.words()[0]);
        }
    }

    Metrics operator()(const BitVector& u, std::vector<std::uint64_t>& hist) const {
        std::fill(hist.begin(), hist.end(), 0);
        if (!words_.empty()) {
            const std::uint64_t uw = u.words()[0];
            for (std::uint64_t cw : words_) hist[std::popcount(cw ^ uw)]++;
        } else {
            for (const BitVector& cw : enumerate_codewords(Q_)) hist[BitVector::xor_weight(cw, u)]++;
        }
        return metrics_from_hist(hist, inv_, bin_);
    }

private:
    const LinearCode& Q_;
    const WeightDistribution& bin_;
    double inv_;
    std::vector<std::uint64_t> words_;
};

double sample_stderr(double sum, double sum_sq, std::uint64_t n) {
    if (n < 2) return 0;
    const double mean = sum / static_cast<double>(n);
    const double var =
        std::max(0.0, (sum_sq - static_cast<double>(n) * mean * mean) / (static_cast<double>(n) - 1.0));
    return std::sqrt(var / static_cast<double>(n));
}

}  // namespace

CosetAverageReport coset_average(const LinearCode& Q, const CosetAverageMode& mode,
                                 bool keep_per_coset) {
    const std::size_t n = Q.length();
    const std::size_t k = Q.dimension();
    CosetAverageReport report;
    report.n = n;
    report.k = k;
    report.monte_carlo = mode.monte_carlo;
    report.seed = mode.monte_carlo ? mode.seed : 0;

    const WeightDistribution bin = binomial_distribution(n);
    const WeightDistribution spectrum = weight_distribution(Q);

    // Certify the dual bilateral distance through the transform; the dual
    // itself is usually too large to enumerate.
    WeightEnumerator dual =
        macwilliams_transform(WeightEnumerator::from_distribution(spectrum), BigInt(1) << k);
    report.dual_bilateral_distance = bilateral_profile(dual).d_bilateral;
    if (report.dual_bilateral_distance >= 3) {
        const unsigned t = static_cast<unsigned>((report.dual_bilateral_distance - 1) / 2);
        report.bounds = theorem_bounds(n, t);
        report.linf_bound_vacuous =
            std::min(report.bounds->linf_small, report.bounds->linf_large) > 1.0;
        report.l1_bound_vacuous =
            std::min(report.bounds->l1_small, report.bounds->l1_large) > 2.0;
    }
    report.certificate = linf_certificate(spectrum, 256);

    const CosetMetricsEngine engine(Q, bin);
    std::vector<MetricSums> partial;
    if (!mode.monte_carlo) {
        const std::size_t cosets_log2 = n - k;
        if (cosets_log2 >= 64 || (1ull << cosets_log2) > mode.coset_budget)
            throw std::runtime_error(
                "coset budget exceeded: 2^" + std::to_string(cosets_log2) +
                " cosets; use Monte Carlo mode (--mode mc) for a code this small");
        const std::vector<BitVector> reps = coset_representatives(Q, mode.coset_budget);
        report.samples = reps.size();
        if (keep_per_coset) report.per_coset.resize(reps.size());
        partial = chunked_map<MetricSums>(reps.size(), mode.threads,
                                          [&](std::size_t lo, std::size_t hi) {
                                              MetricSums sums;
                                              std::vector<std::uint64_t> hist(n + 1);
                                              for (std::size_t i = lo; i < hi; ++i) {
                                                  Metrics m = engine(reps[i], hist);
                                                  sums.add(m);
                                                  if (keep_per_coset) report.per_coset[i] = m;
                                              }
                                              return sums;
                                          });
    } else {
        if (mode.samples < 1) throw std::invalid_argument("Monte Carlo mode needs samples >= 1");
        report.samples = mode.samples;
        if (keep_per_coset) report.per_coset.resize(mode.samples);
        partial = chunked_map<MetricSums>(
            mode.samples, mode.threads, [&](std::size_t lo, std::size_t hi) {
                MetricSums sums;
                std::vector<std::uint64_t> hist(n + 1);
                for (std::size_t i = lo; i < hi; ++i) {
                    std::mt19937_64 eng = substream_engine(mode.seed, i);
                    const BitVector u = random_bits(eng, n);
                    Metrics m = engine(u, hist);
                    sums.add(m);
                    if (keep_per_coset) report.per_coset[i] = m;
                }
                return sums;
            });
    }

    MetricSums total;
    for (const auto& p : partial) total += p;
    report.avg_l1 = total.l1 / static_cast<double>(total.count);
    report.avg_linf = total.linf / static_cast<double>(total.count);
    report.avg_l2sq = total.l2sq / static_cast<double>(total.count);
    if (mode.monte_carlo) {
        report.stderr_l1 = sample_stderr(total.l1, total.l1_sq, total.count);
        report.stderr_linf = sample_stderr(total.linf, total.linf_sq, total.count);
        report.stderr_l2sq = sample_stderr(total.l2sq, total.l2sq_sq, total.count);
    }
    return report;
}

std::string CosetAverageReport::to_json() const {
    nlohmann::json j;
    j["code"] = code_descriptor;
    j["n"] = n;
    j["k"] = k;
    j["mode"] = monte_carlo ? "monte_carlo" : "exact";
    j["samples"] = samples;
    if (monte_carlo) j["seed"] = seed;
    j["avg_l1"] = avg_l1;
    j["avg_linf"] = avg_linf;
    j["avg_l2sq"] = avg_l2sq;
    if (monte_carlo) {
        j["stderr_l1"] = stderr_l1;
        j["stderr_linf"] = stderr_linf;
        j["stderr_l2sq"] = stderr_l2sq;
    }
    j["dual_bilateral_distance"] = dual_bilateral_distance;
    j["certificate"] = certificate;
    if (bounds) {
        j["bounds"] = {{"t", bounds->t},
                       {"linf_small", bounds->linf_small},
                       {"linf_large", bounds->linf_large},
                       {"l1_small", bounds->l1_small},
                       {"l1_large", bounds->l1_large},
                       {"mse_small", bounds->mse_small},
                       {"mse_large", bounds->mse_large},
                       {"valid_l1", bounds->valid_l1},
                       {"delta_star", bounds->delta_star}};
        j["linf_bound_vacuous"] = linf_bound_vacuous;
        j["l1_bound_vacuous"] = l1_bound_vacuous;
    }
    return j.dump(2);
}

GammaReport ensemble_gamma(std::size_t n, std::uint64_t N, std::uint64_t trials,
                           std::uint64_t seed, int threads) {
    if (N < 2 || (N & (N - 1)) != 0)
        throw std::invalid_argument("ensemble_gamma: N must be a power of 2");
    std::size_t k = 0;
    while ((1ull << k) < N) ++k;
    if (k > 20) throw std::invalid_argument("ensemble_gamma: N must be <= 2^20");
    if (k >= n) throw std::invalid_argument("ensemble_gamma: N must be < 2^n");
    if (trials < 30) throw std::invalid_argument("ensemble_gamma: needs >= 30 trials");

    const WeightDistribution bin = binomial_distribution(n);
    const auto partial =
        chunked_map<double>(trials, threads, [&](std::size_t lo, std::size_t hi) {
            double acc = 0;
            std::vector<std::uint64_t> hist(n + 1);
            for (std::size_t trial = lo; trial < hi; ++trial) {
                const LinearCode Q = random_linear_code(n, k, stream_key(seed, trial));
                std::fill(hist.begin(), hist.end(), 0);
                for (const BitVector& cw : enumerate_codewords(Q)) hist[cw.weight()]++;
                const double inv = 1.0 / static_cast<double>(N);
                double l2 = 0;
                for (std::size_t w = 0; w <= n; ++w) {
                    const double d = static_cast<double>(hist[w]) * inv - bin.masses[w];
                    l2 += d * d;
                }
                acc += l2;
            }
            return acc;
        });
    double sum = 0;
    for (double p : partial) sum += p;

    GammaReport report;
    report.n = n;
    report.N = N;
    report.trials = trials;
    report.seed = seed;
    report.gamma_hat = sum / static_cast<double>(trials);
    report.p_N = static_cast<double>(N - 1) / (std::pow(2.0, static_cast<double>(n)) - 1.0);
    return report;
}

std::string GammaReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["N"] = N;
    j["trials"] = trials;
    j["seed"] = seed;
    j["gamma_hat"] = gamma_hat;
    j["gamma_hat_times_N"] = gamma_hat * static_cast<double>(N);
    j["p_N"] = p_N;
    return j.dump(2);
}

double gv_fraction(std::size_t n, double c, std::uint64_t trials, std::uint64_t seed,
                   int threads) {
    if (trials < 30) throw std::invalid_argument("gv_fraction: needs >= 30 trials");
    const double bits = c * std::log2(static_cast<double>(n));
    const std::size_t k = static_cast<std::size_t>(std::llround(bits));
    if (k > 20) throw std::invalid_argument("gv_fraction: n^c rounds above 2^20");
    const std::size_t required = c <= 1.0 ? 0 : static_cast<std::size_t>(std::ceil(c)) - 1;
    if (required == 0) return 1.0;

    const auto partial =
        chunked_map<std::uint64_t>(trials, threads, [&](std::size_t lo, std::size_t hi) {
            std::uint64_t good = 0;
            for (std::size_t trial = lo; trial < hi; ++trial) {
                const LinearCode Q = random_linear_code(n, k, stream_key(seed, trial));
                const WeightDistribution spectrum = weight_distribution(Q);
                WeightEnumerator dual = macwilliams_transform(
                    WeightEnumerator::from_distribution(spectrum), BigInt(1) << k);
                if (bilateral_profile(dual).d_bilateral >= required) ++good;
            }
            return good;
        });
    std::uint64_t good = 0;
    for (std::uint64_t p : partial) good += p;
    return static_cast<double>(good) / static_cast<double>(trials);
}

}  // namespace cosets
