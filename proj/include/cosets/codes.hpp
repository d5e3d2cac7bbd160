#pragma once

#include <cstdint>

#include "cosets/field.hpp"
#include "cosets/linear_code.hpp"

namespace cosets {

/// The r x (2^r - 1) code whose generator columns run through all nonzero
/// vectors of F_2^r in increasing integer order (column j is the binary
/// representation of j+1, bit b in row b). Every nonzero codeword has
/// weight 2^(r-1).
LinearCode simplex_code(unsigned r);

/// dual_basis(simplex_code(r)): the (2^r - 1, 2^r - 1 - r, 3) code.
LinearCode hamming_code(unsigned r);

/// Cyclic code of length n = 2^r - 1 whose generator polynomial is the
/// product of the distinct minimal polynomials of alpha, alpha^2, ...,
/// alpha^(2t); designed minimum distance 2t + 1. Requires 2t - 2 < 2^(r/2)
/// and that the t odd-power minimal polynomials are distinct of degree r
/// (dimension 2^r - 1 - rt), else "degenerate BCH parameters".
LinearCode bch_code(unsigned t, unsigned r);

/// Generator polynomial of bch_code(t, r).
BinaryPolynomial bch_generator_polynomial(unsigned t, unsigned r);

/// For odd n and a code D containing the all-ones vector: the code
/// spanned by dual_basis(D) and the all-ones row, i.e. the union of
/// D-dual and its complement coset. Its dual is the even-weight subcode
/// of D, so if D has minimum distance >= d then the result has dual
/// bilateral minimum distance >= d.
LinearCode extended_bilateral_code(const LinearCode& D);

/// Uniform k x n generator matrices, rejection-sampled until full rank.
/// A pure function of (n, k, seed). `attempts_out`, when given, receives
/// the number of matrices drawn (1 = no rejection).
LinearCode random_linear_code(std::size_t n, std::size_t k, std::uint64_t seed,
                              unsigned* attempts_out = nullptr);

}  // namespace cosets
