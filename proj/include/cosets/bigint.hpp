#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace cosets {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// Row n of Pascal's triangle, exact: C(n,0..n).
inline std::vector<BigInt> binomial_row(std::size_t n) {
    std::vector<BigInt> row(n + 1);
    row[0] = 1;
    for (std::size_t w = 0; w < n; ++w) {
        // exact: C(n,w+1) = C(n,w)*(n-w)/(w+1)
        row[w + 1] = row[w] * static_cast<unsigned>(n - w) / static_cast<unsigned>(w + 1);
    }
    return row;
}

/// Lazily materialized rows of Pascal's triangle. A full triangle at
/// n = 4096 would be gigabytes; callers only ever touch a few rows.
class PascalRows {
public:
    const std::vector<BigInt>& row(std::size_t m) {
        auto it = rows_.find(m);
        if (it == rows_.end()) it = rows_.emplace(m, binomial_row(m)).first;
        return it->second;
    }

private:
    std::map<std::size_t, std::vector<BigInt>> rows_;
};

/// num/den as a double, correct even when both operands are far outside
/// double range (the quotient is computed in wide binary floating point
/// first). Quotients below ~1e-300 underflow to 0, which is fine for the
/// metric layer.
inline double ratio_as_double(const BigInt& num, const BigInt& den) {
    BigFloat q = BigFloat(num) / BigFloat(den);
    return q.convert_to<double>();
}

}  // namespace cosets
