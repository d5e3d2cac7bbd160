#pragma once

#include <complex>
#include <vector>

#include "cosets/linear_code.hpp"
#include "cosets/spectra.hpp"

namespace cosets {

using Complex = std::complex<double>;

/// Dense function on the hypercube {0,1}^n, n <= 24. Index i encodes the
/// point little-endian (bit b of i = coordinate b).
struct CubeFunction {
    std::size_t n = 0;
    std::vector<Complex> values;  // size 2^n

    explicit CubeFunction(std::size_t n_);
};

/// Character-basis coefficients fhat(z) = 2^-n sum_x f(x) (-1)^<x,z>,
/// computed in place by the usual butterfly.
CubeFunction walsh_hadamard(const CubeFunction& f);

/// Closed-form coefficient at any z of the given weight for the function
/// x -> r^|x|:  ((1-r)/2)^|z| ((1+r)/2)^(n-|z|).
Complex exp_transform_closed_form(Complex r, std::size_t n, std::size_t z_weight);

/// sum_w mass[w] c^w - ((c+1)/2)^n for a proper linear code's spectrum.
/// Equals the average over u of |E_{Q+u} e^(i theta |x|) - E_uniform|^2
/// at c = cos(theta), and so is a sum of squares; a value below -1e-12
/// means the input was not a linear code's spectrum and throws.
double mse_rhs(const WeightDistribution& spectrum, double c);

/// The same average computed exhaustively from the code, one spectrum per
/// coset representative (the integrand depends on u only through its
/// coset). n <= 20.
double mse_lhs_exhaustive(const LinearCode& Q, double c, int threads = 1);

/// max over nonzero z of |sum_x p(x) (-1)^<x,z>| for probability masses p
/// on {0,1}^n (validated to sum to 1 within 1e-9).
double bias(const std::vector<double>& masses, std::size_t n);

/// All 2^(n-k) coset representatives of the code: the vectors supported
/// on the non-pivot columns of the RREF generator, enumerated in Gray
/// order over those free coordinates.
std::vector<BitVector> coset_representatives(const LinearCode& code,
                                             std::uint64_t budget = kEnumerationBudget);

}  // namespace cosets
