#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cosets/bigint.hpp"
#include "cosets/spectra.hpp"

namespace cosets {

/// The six closed-form averages for a code of length n whose dual has
/// bilateral minimum distance 2t + 1:
///   linf_small = (e ln(n/2t))^t (2t/n)^(t/2)       linf_large = sqrt(2) e^(-t/10)
///   l1_small   = (2t+1)(e ln(n/2t))^t (2t/n)^(t/2-1)  l1_large = sqrt(2)(n+1) e^(-t/10)
///   mse_small  = linf_small^2                      mse_large  = linf_large^2 = 2 e^(-t/5)
/// The L1 forms carry information only for t >= 3 (valid_l1).
struct BoundSet {
    std::size_t n = 0;
    unsigned t = 0;
    double linf_small = 0, linf_large = 0;
    double l1_small = 0, l1_large = 0;
    double mse_small = 0, mse_large = 0;
    bool valid_l1 = false;
    double delta_star = 0;
};

/// Requires t >= 1 and n >= 2(2t+1).
BoundSet theorem_bounds(std::size_t n, unsigned t);

/// The crossover density: root of  e sqrt(x) ln(1/x) = e^(-1/10)  on
/// (0, 0.01), by bisection. Below this value of (2t)/n the small-distance
/// form beats the large-distance form (per-t, in the t -> inf limit).
double crossover_delta_star(double tolerance);

/// For odd d >= 7 and xi > 0: (threshold, fraction) = (n^-((d-5-xi)/4), n^-(xi/5)).
/// At most a `fraction` of cosets can exceed `threshold` in L1 once the
/// mean bound applies.
std::pair<double, double> tail_fraction_bound(std::size_t n, unsigned d, double xi);

enum class HCase { TaylorPos, TaylorNeg, Central, LpWitness };
enum class HVariant { PartA, PartB };

/// h(w) = f(w) + (-1)^w g(w) with f, g of degree <= 2t, dominating
/// c^w - ((c+1)/2)^n pointwise on [0:n]. Coefficients are stored in the
/// shifted monomial basis (w - n/2)^j, which both matches the natural
/// center of the constructions and conditions the LP well.
struct HPolynomial {
    std::size_t n = 0;
    unsigned t = 0;
    double c = 0;
    HCase h_case = HCase::Central;
    double beta = 0, gamma = 0;
    std::vector<double> f_coeffs;  // coefficient of (w - n/2)^j
    std::vector<double> g_coeffs;

    double evaluate(std::size_t w) const;
    int degree_f() const;
    int degree_g() const;
};

/// The feasible witness for the dual program: a Taylor truncation of the
/// exponential around n/2 when |c| is large, a scaled even power of
/// (n/2 - w) plus a constant when |c| is small. PartA tunes for the
/// small-dual-distance objective, PartB for the large one.
HPolynomial construct_h(std::size_t n, unsigned t, double c, HVariant variant);

/// worstSlack = min over w in [0:n] of h(w) - H_c(w); feasible iff >= -1e-9.
std::pair<bool, double> check_h_feasibility(const HPolynomial& h, double c, std::size_t n);

/// sum_w Bin_n(w) h(w).
double expected_under_binomial(const HPolynomial& h, std::size_t n);

/// Exact central moment E_(w~Bin_n) ((n/2 - w)/(n/2))^k for even k, as a
/// rational, together with the bound (k/n)^(k/2). Throws if the moment
/// were to exceed the bound.
struct ScaledMoment {
    BigRational moment;
    BigRational bound;
};
ScaledMoment scaled_central_moment(std::size_t n, unsigned k);

enum class LpStatus { Optimal, Infeasible, Unbounded, PivotBreakdown };

struct LPResult {
    LpStatus status = LpStatus::PivotBreakdown;
    double value = 0;
    HPolynomial h;  // optimal witness (h_case = LpWitness)
};

enum class LpBasis { Shifted, Monomial };

/// min E_Bin h over h(w) = f(w) + (-1)^w g(w), deg f, deg g <= d-1,
/// h(w) >= H_c(w) on [0:n]; 2d free coefficient variables, n+1 inequality
/// rows, solved by dense two-phase simplex. Requires odd d >= 3,
/// 2d <= n <= 512.
LPResult solve_dual_lp(std::size_t n, unsigned d, double c, LpBasis basis = LpBasis::Shifted);

/// Certified upper bound on the average Linf coset distance: max over a
/// uniform c-grid of sqrt(mse_rhs(spectrum, c)), with the grid doubled
/// until the max moves by < 1e-6.
double linf_certificate(const WeightDistribution& spectrum, std::size_t grid_size);

}  // namespace cosets
