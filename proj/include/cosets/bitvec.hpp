#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cosets {

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
/// Bits beyond position n-1 are kept zero so equality and hashing are
/// plain word comparisons.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVector ones(std::size_t n) {
        BitVector v(n);
        for (auto& w : v.words_) w = ~0ull;
        v.trim();
        return v;
    }

    static BitVector from_string(const std::string& bits);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool b) {
        const std::uint64_t mask = 1ull << (i & 63);
        if (b)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t x : words_) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }

    BitVector& operator^=(const BitVector& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool operator==(const BitVector& o) const { return n_ == o.n_ && words_ == o.words_; }

    bool is_zero() const {
        for (std::uint64_t x : words_)
            if (x) return false;
        return true;
    }

    /// |a ^ b| without materializing the sum.
    static std::size_t xor_weight(const BitVector& a, const BitVector& b) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            w += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
        return w;
    }

    /// <x,y> mod 2.
    bool inner_product(const BitVector& o) const {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
        return std::popcount(acc) & 1u;
    }

    /// Position of the lowest set bit; size() if zero.
    std::size_t lowest_set_bit() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return n_;
    }

    std::string to_string() const;

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim() {
        if (n_ & 63) words_.back() &= (~0ull) >> (64 - (n_ & 63));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

using BitMatrix = std::vector<BitVector>;

/// GF(2) row rank. Throws std::invalid_argument on an empty matrix.
std::size_t gf2_rank(const BitMatrix& rows);

/// In-place reduced row echelon form; returns pivot column per surviving row.
/// Zero rows are removed.
std::vector<std::size_t> gf2_rref(BitMatrix& rows);

}  // namespace cosets
