#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cosets {

/// Polynomial over GF(2), coefficients bit-packed (bit i = coefficient
/// of x^i). Nonzero polynomials are implicitly monic-normalized since
/// the leading stored bit is 1.
class BinaryPolynomial {
public:
    BinaryPolynomial() = default;
    explicit BinaryPolynomial(std::vector<std::uint64_t> words) : words_(std::move(words)) {
        shrink();
    }
    static BinaryPolynomial one() { return BinaryPolynomial({1}); }
    static BinaryPolynomial from_coefficient_bits(std::uint64_t bits) {
        return BinaryPolynomial({bits});
    }

    bool is_zero() const { return words_.empty(); }
    int degree() const;  // -1 for zero polynomial
    bool coefficient(std::size_t i) const {
        return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1u);
    }
    void set_coefficient(std::size_t i, bool b);

    BinaryPolynomial operator*(const BinaryPolynomial& o) const;
    BinaryPolynomial& operator^=(const BinaryPolynomial& o);
    bool operator==(const BinaryPolynomial& o) const { return words_ == o.words_; }

    /// Coefficient list low-to-high as a "110001..." string.
    std::string to_string() const;

private:
    void shrink();
    std::vector<std::uint64_t> words_;
};

/// Arithmetic tables for GF(2^r) in the polynomial basis modulo a fixed
/// primitive polynomial (table below, r = 2..16). The generator alpha is
/// the class x; primitivity is asserted when the table is built.
class GF2m {
public:
    explicit GF2m(unsigned r);

    unsigned r() const { return r_; }
    std::uint32_t order() const { return order_; }  // 2^r - 1
    std::uint32_t primitive_polynomial() const { return prim_poly_; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t alpha_power(std::uint64_t e) const { return exp_[e % order_]; }

    /// Monic least-degree binary polynomial with root e (the product of
    /// (x - e^(2^i)) over e's conjugacy class). Throws for e = 0.
    BinaryPolynomial minimal_polynomial(std::uint32_t e) const;

    /// Shared table per r.
    static const GF2m& instance(unsigned r);

private:
    unsigned r_;
    std::uint32_t order_;
    std::uint32_t prim_poly_;
    std::vector<std::uint32_t> exp_;  // alpha^i for i in [0, order)
};

/// Element of GF(2^r): an r-bit value in the polynomial basis.
struct FieldElement {
    unsigned r;
    std::uint32_t value;

    FieldElement operator*(const FieldElement& o) const {
        return {r, GF2m::instance(r).mul(value, o.value)};
    }
    FieldElement operator+(const FieldElement& o) const { return {r, value ^ o.value}; }
    bool operator==(const FieldElement& o) const { return r == o.r && value == o.value; }
};

inline BinaryPolynomial minimal_polynomial(const FieldElement& e) {
    return GF2m::instance(e.r).minimal_polynomial(e.value);
}

}  // namespace cosets
