#include "cosets/spectra.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cosets {

WeightDistribution WeightDistribution::from_counts(std::size_t n, std::vector<BigInt> counts) {
    if (counts.size() != n + 1) throw std::invalid_argument("counts must have n+1 entries");
    WeightDistribution d;
    d.n = n;
    d.counts = std::move(counts);
    for (const auto& c : d.counts) {
        if (c < 0) throw std::invalid_argument("negative weight count");
        d.total += c;
    }
    if (d.total == 0) throw std::invalid_argument("empty distribution");
    d.masses.resize(n + 1);
    double sum = 0;
    for (std::size_t w = 0; w <= n; ++w) {
        d.masses[w] = d.counts[w] == 0 ? 0.0 : ratio_as_double(d.counts[w], d.total);
        sum += d.masses[w];
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::logic_error("weight distribution masses do not normalize");
    return d;
}

std::string WeightDistribution::to_csv() const {
    std::ostringstream out;
    out << "# n=" << n << " total=" << total << "\n";
    out << "w,count,mass\n";
    char buf[40];
    for (std::size_t w = 0; w <= n; ++w) {
        std::snprintf(buf, sizeof buf, "%.17g", masses[w]);
        out << w << ',' << counts[w] << ',' << buf << "\n";
    }
    return out.str();
}

WeightDistribution weight_distribution(const LinearCode& code,
                                       const std::optional<BitVector>& shift,
                                       std::uint64_t budget) {
    const std::size_t n = code.length();
    if (shift && shift->size() != n)
        throw std::invalid_argument("shift length must equal the block length");
    std::vector<std::uint64_t> hist(n + 1, 0);
    CodewordRange range(code, budget);
    if (shift) {
        for (const BitVector& c : range) hist[BitVector::xor_weight(c, *shift)]++;
    } else {
        for (const BitVector& c : range) hist[c.weight()]++;
    }
    std::vector<BigInt> counts(n + 1);
    for (std::size_t w = 0; w <= n; ++w) counts[w] = hist[w];
    return WeightDistribution::from_counts(n, std::move(counts));
}

WeightDistribution binomial_distribution(std::size_t n) {
    if (n < 1 || n > 4096) throw std::invalid_argument("binomial_distribution: n must be in [1,4096]");
    return WeightDistribution::from_counts(n, binomial_row(n));
}

Metrics distance_metrics(const WeightDistribution& p, const WeightDistribution& q) {
    if (p.n != q.n) throw std::invalid_argument("distance_metrics: length mismatch");
    Metrics m;
    for (std::size_t w = 0; w <= p.n; ++w) {
        const double d = p.masses[w] - q.masses[w];
        m.l1 += std::abs(d);
        m.linf = std::max(m.linf, std::abs(d));
        m.l2sq += d * d;
    }
    return m;
}

double ipow(double x, std::uint64_t e) {
    double result = 1.0;
    while (e) {
        if (e & 1u) result *= x;
        x *= x;
        e >>= 1;
    }
    return result;
}

double h_c_eval(double c, std::size_t n, std::size_t w) {
    return ipow(c, w) - ipow((c + 1.0) / 2.0, n);
}

}  // namespace cosets
