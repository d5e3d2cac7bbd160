#include "cosets/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cosets {

int BinaryPolynomial::degree() const {
    if (words_.empty()) return -1;
    const std::uint64_t top = words_.back();
    int bit = 63;
    while (!((top >> bit) & 1u)) --bit;
    return static_cast<int>((words_.size() - 1) * 64) + bit;
}

void BinaryPolynomial::set_coefficient(std::size_t i, bool b) {
    if (i / 64 >= words_.size()) words_.resize(i / 64 + 1, 0);
    if (b)
        words_[i / 64] |= 1ull << (i % 64);
    else
        words_[i / 64] &= ~(1ull << (i % 64));
    shrink();
}

void BinaryPolynomial::shrink() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial& BinaryPolynomial::operator^=(const BinaryPolynomial& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
    shrink();
    return *this;
}

BinaryPolynomial BinaryPolynomial::operator*(const BinaryPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    const int da = degree(), db = o.degree();
    std::vector<std::uint64_t> out((da + db) / 64 + 1, 0);
    for (int i = 0; i <= da; ++i) {
        if (!coefficient(i)) continue;
        for (std::size_t w = 0; w < o.words_.size(); ++w) {
            const std::uint64_t x = o.words_[w];
            const std::size_t base = w * 64 + static_cast<std::size_t>(i);
            out[base / 64] ^= x << (base % 64);
            if (base % 64) out[base / 64 + 1] ^= x >> (64 - base % 64);
        }
    }
    return BinaryPolynomial(std::move(out));
}

std::string BinaryPolynomial::to_string() const {
    const int d = degree();
    if (d < 0) return "0";
    std::string s(static_cast<std::size_t>(d) + 1, '0');
    for (int i = 0; i <= d; ++i)
        if (coefficient(static_cast<std::size_t>(i))) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

namespace {

// Primitive polynomials for GF(2^r), r = 2..16, in coefficient-bit form
// (bit i = coefficient of x^i). One fixed choice per r so codes are
// reproducible across runs and platforms.
//
//   r :  polynomial
//   2 :  x^2 + x + 1
//   3 :  x^3 + x + 1
//   4 :  x^4 + x + 1
//   5 :  x^5 + x^2 + 1
//   6 :  x^6 + x + 1
//   7 :  x^7 + x^3 + 1
//   8 :  x^8 + x^4 + x^3 + x^2 + 1
//   9 :  x^9 + x^4 + 1
//  10 :  x^10 + x^3 + 1
//  11 :  x^11 + x^2 + 1
//  12 :  x^12 + x^6 + x^4 + x + 1
//  13 :  x^13 + x^4 + x^3 + x + 1
//  14 :  x^14 + x^10 + x^6 + x + 1
//  15 :  x^15 + x + 1
//  16 :  x^16 + x^12 + x^3 + x + 1
constexpr std::uint32_t kPrimitivePolynomials[17] = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,   0x89,  0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};

}  // namespace

GF2m::GF2m(unsigned r) : r_(r) {
    if (r < 2 || r > 16) throw std::invalid_argument("GF(2^r) supported for r in [2,16]");
    order_ = (1u << r) - 1;
    prim_poly_ = kPrimitivePolynomials[r];

    exp_.assign(order_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        if (i > 0 && x == 1)
            throw std::logic_error("polynomial for r=" + std::to_string(r) +
                                   " is not primitive: alpha has order " + std::to_string(i));
        exp_[i] = x;
        x <<= 1;
        if (x >> r) x ^= prim_poly_;
    }
    if (x != 1)
        throw std::logic_error("polynomial for r=" + std::to_string(r) +
                               " is not primitive: alpha^(2^r-1) != 1");
}

std::uint32_t GF2m::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t res = 0;
    while (b) {
        if (b & 1u) res ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> r_) a ^= prim_poly_;
    }
    return res;
}

BinaryPolynomial GF2m::minimal_polynomial(std::uint32_t e) const {
    if (e == 0) throw std::invalid_argument("minimal polynomial of 0 is undefined here");

    // Conjugacy class {e, e^2, e^4, ...}.
    std::vector<std::uint32_t> conj;
    std::uint32_t x = e;
    do {
        conj.push_back(x);
        x = mul(x, x);
    } while (x != e);

    // Multiply out prod (X + c) over GF(2^r)[X]; coefficients must land
    // in GF(2) = {0, 1}.
    std::vector<std::uint32_t> coeffs{1};
    for (std::uint32_t c : conj) {
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= mul(c, coeffs[i]);
        }
        coeffs = std::move(next);
    }
    BinaryPolynomial p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw std::logic_error("conjugate product has a coefficient outside GF(2)");
        if (coeffs[i]) p.set_coefficient(i, true);
    }
    return p;
}

const GF2m& GF2m::instance(unsigned r) {
    static std::mutex mu;
    static std::map<unsigned, GF2m> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(r);
    if (it == tables.end()) it = tables.emplace(r, GF2m(r)).first;
    return it->second;
}

}  // namespace cosets
