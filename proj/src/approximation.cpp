#include "cosets/approximation.hpp"

#include <cmath>
#include <stdexcept>

#include "cosets/errors.hpp"
#include "cosets/fourier.hpp"
#include "cosets/simplex_lp.hpp"

namespace cosets {

namespace {
constexpr double kE = 2.718281828459045235;
}

BoundSet theorem_bounds(std::size_t n, unsigned t) {
    if (t < 1) throw std::invalid_argument("theorem_bounds: t must be >= 1");
    if (n < 2 * (2 * static_cast<std::size_t>(t) + 1))
        throw std::invalid_argument("theorem_bounds: requires n >= 2(2t+1)");
    BoundSet b;
    b.n = n;
    b.t = t;
    // evaluated in log space: the direct product overflows double for
    // t in the hundreds even when the result is representable
    const double logterm = kE * std::log(static_cast<double>(n) / (2.0 * t));
    const double ratio = 2.0 * t / static_cast<double>(n);
    const double log_small = t * std::log(logterm) + (t / 2.0) * std::log(ratio);
    b.linf_small = std::exp(log_small);
    b.linf_large = std::sqrt(2.0) * std::exp(-static_cast<double>(t) / 10.0);
    b.l1_small = (2.0 * t + 1.0) * std::exp(log_small - std::log(ratio));
    b.l1_large = std::sqrt(2.0) * (n + 1.0) * std::exp(-static_cast<double>(t) / 10.0);
    b.mse_small = b.linf_small * b.linf_small;
    b.mse_large = b.linf_large * b.linf_large;
    b.valid_l1 = t >= 3;
    b.delta_star = crossover_delta_star(1e-9);
    return b;
}

double crossover_delta_star(double tolerance) {
    if (tolerance < 1e-12) throw std::invalid_argument("tolerance must be >= 1e-12");
    const double target = std::exp(-0.1);
    auto f = [](double x) { return kE * std::sqrt(x) * std::log(1.0 / x); };
    double lo = 1e-8, hi = 0.01;  // f is increasing here; f(lo) < target < f(hi)
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> tail_fraction_bound(std::size_t n, unsigned d, double xi) {
    if (d < 7 || d % 2 == 0) throw std::invalid_argument("tail_fraction_bound: d must be odd >= 7");
    if (xi <= 0) throw std::invalid_argument("tail_fraction_bound: xi must be > 0");
    const double nn = static_cast<double>(n);
    const double threshold = std::pow(nn, -(static_cast<double>(d) - 5.0 - xi) / 4.0);
    const double fraction = std::pow(nn, -xi / 5.0);
    return {threshold, fraction};
}

double HPolynomial::evaluate(std::size_t w) const {
    const double s = static_cast<double>(w) - static_cast<double>(n) / 2.0;
    double pf = 0;
    for (std::size_t j = f_coeffs.size(); j-- > 0;) pf = pf * s + f_coeffs[j];
    double pg = 0;
    for (std::size_t j = g_coeffs.size(); j-- > 0;) pg = pg * s + g_coeffs[j];
    return (w % 2 == 0) ? pf + pg : pf - pg;
}

namespace {
int coeff_degree(const std::vector<double>& c) {
    for (std::size_t j = c.size(); j-- > 0;)
        if (c[j] != 0.0) return static_cast<int>(j);
    return -1;
}
}  // namespace

int HPolynomial::degree_f() const { return coeff_degree(f_coeffs); }
int HPolynomial::degree_g() const { return coeff_degree(g_coeffs); }

HPolynomial construct_h(std::size_t n, unsigned t, double c, HVariant variant) {
    if (t < 1) throw std::invalid_argument("construct_h: t must be >= 1");
    if (n < 2 * (2 * static_cast<std::size_t>(t) + 1))
        throw std::invalid_argument("construct_h: requires n >= 2(2t+1)");
    if (c < -1.0 || c > 1.0) throw std::invalid_argument("construct_h: c must be in [-1,1]");

    const unsigned k = 2 * t;
    HPolynomial h;
    h.n = n;
    h.t = t;
    h.c = c;
    if (variant == HVariant::PartA) {
        h.beta = std::log(static_cast<double>(n) / k);
        h.gamma = 0.25;
    } else {
        h.gamma = 0.107;
        h.beta = 1.0 / (kE * (1.0 - 2.0 * h.gamma));
    }
    const double c_star = std::exp(-2.0 * k * h.beta / static_cast<double>(n));
    h.f_coeffs.assign(k + 1, 0.0);

    const double unif = ipow((c + 1.0) / 2.0, n);
    if (c >= c_star) {
        // Taylor truncation of c^w = c^(n/2) e^((n/2-w) ln(1/c)) around n/2;
        // the degree-k remainder term is kept with its coefficient rounded
        // up to 1, which preserves domination since k is even.
        h.h_case = HCase::TaylorPos;
        const double L = -std::log(c);
        const double c_half = std::pow(c, static_cast<double>(n) / 2.0);
        double factorial = 1.0;
        for (unsigned i = 0; i < k; ++i) {
            if (i > 0) factorial *= i;
            h.f_coeffs[i] = c_half * ipow(-L, i) / factorial;
        }
        h.f_coeffs[k] = ipow(L, k) / (factorial * k);
        h.f_coeffs[0] -= unif;
    } else if (c <= -c_star) {
        // c^w = (-1)^w |c|^w: same Taylor pieces, with the alternating part
        // carried by g.
        h.h_case = HCase::TaylorNeg;
        h.g_coeffs.assign(k + 1, 0.0);
        const double a = -c;
        const double M = -std::log(a);
        const double a_half = std::pow(a, static_cast<double>(n) / 2.0);
        double factorial = 1.0;
        for (unsigned i = 0; i < k; ++i) {
            if (i > 0) factorial *= i;
            h.g_coeffs[i] = a_half * ipow(-M, i) / factorial;
        }
        h.f_coeffs[k] = ipow(M, k) / (factorial * k);
        h.f_coeffs[0] = -unif;
    } else {
        h.h_case = HCase::Central;
        h.f_coeffs[k] = ipow(1.0 / (1.0 - 2.0 * h.gamma), k) / ipow(static_cast<double>(n) / 2.0, k);
        h.f_coeffs[0] = std::exp(-2.0 * h.beta * h.gamma * k);
    }
    return h;
}

std::pair<bool, double> check_h_feasibility(const HPolynomial& h, double c, std::size_t n) {
    if (h.n != n) throw std::invalid_argument("check_h_feasibility: inconsistent n");
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t w = 0; w <= n; ++w)
        worst = std::min(worst, h.evaluate(w) - h_c_eval(c, n, w));
    return {worst >= -1e-9, worst};
}

double expected_under_binomial(const HPolynomial& h, std::size_t n) {
    if (h.n != n) throw std::invalid_argument("expected_under_binomial: inconsistent n");
    const WeightDistribution bin = binomial_distribution(n);
    double acc = 0;
    for (std::size_t w = 0; w <= n; ++w) acc += bin.masses[w] * h.evaluate(w);
    return acc;
}

ScaledMoment scaled_central_moment(std::size_t n, unsigned k) {
    if (k < 2 || k > 16 || k % 2 != 0)
        throw std::invalid_argument("scaled_central_moment: k must be even in [2,16]");
    if (n < 1 || n > 64) throw std::invalid_argument("scaled_central_moment: n must be in [1,64]");
    const std::vector<BigInt> row = binomial_row(n);
    // sum_w C(n,w) (n-2w)^k  /  (n^k 2^n)
    BigInt numerator = 0;
    for (std::size_t w = 0; w <= n; ++w) {
        BigInt centered = BigInt(static_cast<long>(n) - 2 * static_cast<long>(w));
        BigInt p = 1;
        for (unsigned i = 0; i < k; ++i) p *= centered;
        numerator += row[w] * p;
    }
    BigInt denominator = BigInt(1) << n;
    for (unsigned i = 0; i < k; ++i) denominator *= static_cast<unsigned>(n);
    ScaledMoment result;
    result.moment = BigRational(numerator, denominator);

    BigInt bn = 1, bd = 1;  // (k/n)^(k/2)
    for (unsigned i = 0; i < k / 2; ++i) {
        bn *= k;
        bd *= static_cast<unsigned>(n);
    }
    result.bound = BigRational(bn, bd);
    if (result.moment > result.bound)
        throw verification_error("central moment exceeds (k/n)^(k/2) at n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
    return result;
}

LPResult solve_dual_lp(std::size_t n, unsigned d, double c, LpBasis basis) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("solve_dual_lp: d must be odd >= 3");
    if (n < 2 * static_cast<std::size_t>(d) || n > 512)
        throw std::invalid_argument("solve_dual_lp: requires 2d <= n <= 512");

    // Columns of the constraint matrix: basis values per coefficient of f
    // and g; rows: one inequality h(w) >= H_c(w) per w. Free coefficients
    // are split x = x+ - x- for the nonnegative-variable solver.
    const std::size_t nvars = 2 * d;
    const std::size_t rows = n + 1;
    std::vector<std::vector<double>> basis_vals(rows, std::vector<double>(nvars));
    for (std::size_t w = 0; w <= n; ++w) {
        const double s = basis == LpBasis::Shifted
                             ? static_cast<double>(w) - static_cast<double>(n) / 2.0
                             : static_cast<double>(w);
        const double sign = (w % 2 == 0) ? 1.0 : -1.0;
        double p = 1.0;
        for (unsigned j = 0; j < d; ++j) {
            basis_vals[w][j] = p;
            basis_vals[w][d + j] = sign * p;
            p *= s;
        }
    }
    const WeightDistribution bin = binomial_distribution(n);
    std::vector<double> objective(nvars, 0.0);
    for (std::size_t w = 0; w <= n; ++w)
        for (std::size_t j = 0; j < nvars; ++j) objective[j] += bin.masses[w] * basis_vals[w][j];

    // maximize -obj.(x+ - x-)  s.t.  -(B x+ - B x-) <= -H_c
    std::vector<std::vector<double>> A(rows, std::vector<double>(2 * nvars));
    std::vector<double> b(rows), cost(2 * nvars);
    for (std::size_t w = 0; w <= n; ++w) {
        for (std::size_t j = 0; j < nvars; ++j) {
            A[w][j] = -basis_vals[w][j];
            A[w][nvars + j] = basis_vals[w][j];
        }
        b[w] = -h_c_eval(c, n, w);
    }
    for (std::size_t j = 0; j < nvars; ++j) {
        cost[j] = -objective[j];
        cost[nvars + j] = objective[j];
    }

    SimplexSolver solver(A, b, cost);
    std::vector<double> x;
    const double value = solver.solve(x);

    LPResult result;
    if (std::isinf(value)) {
        result.status = value > 0 ? LpStatus::Unbounded : LpStatus::Infeasible;
        return result;
    }
    if (std::isnan(value)) {
        result.status = LpStatus::PivotBreakdown;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.value = -value;

    HPolynomial h;
    h.n = n;
    h.t = (d - 1) / 2;
    h.c = c;
    h.h_case = HCase::LpWitness;
    h.f_coeffs.assign(d, 0.0);
    h.g_coeffs.assign(d, 0.0);
    for (unsigned j = 0; j < d; ++j) {
        h.f_coeffs[j] = x[j] - x[nvars + j];
        h.g_coeffs[j] = x[d + j] - x[nvars + d + j];
    }
    if (basis == LpBasis::Monomial) {
        // Convert w^j coefficients to the (w - n/2)^j storage basis by
        // shifting: p(w) = q(w - n/2) with q(s) = p(s + n/2).
        auto shift = [&](std::vector<double>& coeffs) {
            const double half = static_cast<double>(n) / 2.0;
            std::vector<double> out(coeffs.size(), 0.0);
            // Horner-style synthetic shift
            for (std::size_t j = coeffs.size(); j-- > 0;) {
                for (std::size_t i = out.size(); i-- > 1;) out[i] = out[i - 1] + half * out[i];
                out[0] = coeffs[j] + half * out[0];
            }
            coeffs = out;
        };
        shift(h.f_coeffs);
        shift(h.g_coeffs);
    }
    result.h = h;

    // Never return a wrong "optimal": the witness must satisfy the
    // constraints it optimized over.
    const double slack = check_h_feasibility(result.h, c, n).second;
    if (slack < -1e-7) result.status = LpStatus::PivotBreakdown;
    return result;
}

double linf_certificate(const WeightDistribution& spectrum, std::size_t grid_size) {
    if (grid_size < 64) throw std::invalid_argument("linf_certificate: grid must have >= 64 points");
    auto sweep = [&](std::size_t points) {
        double best = 0;
        for (std::size_t i = 0; i < points; ++i) {
            const double c = -1.0 + 2.0 * static_cast<double>(i) / (points - 1);
            best = std::max(best, std::sqrt(std::max(0.0, mse_rhs(spectrum, c))));
        }
        return best;
    };
    double prev = sweep(grid_size);
    for (std::size_t points = grid_size * 2; points <= (1u << 20); points *= 2) {
        const double cur = sweep(points);
        if (std::abs(cur - prev) < 1e-6) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace cosets
