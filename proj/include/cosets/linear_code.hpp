#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "cosets/bitvec.hpp"

namespace cosets {

/// Default cap on exhaustive codeword enumeration (number of codewords).
inline constexpr std::uint64_t kEnumerationBudget = 1ull << 26;

/// Binary linear code given by a full-row-rank generator matrix.
/// The generator is kept in reduced row echelon form, so dimension,
/// membership, and coset representatives are all cheap and every code
/// has one canonical generator per row space.
class LinearCode {
public:
    /// Reduces `rows` (all of length n); zero rows are dropped, so the
    /// resulting dimension is the rank of the input.
    LinearCode(std::size_t n, BitMatrix rows);

    /// The zero code {0^n}.
    static LinearCode zero(std::size_t n) { return LinearCode(n, BitMatrix{}); }

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return rows_.size(); }

    const BitMatrix& generator() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

    bool contains(const BitVector& v) const;
    bool contains_all_ones() const { return contains(BitVector::ones(n_)); }

    /// Text form: "n k" on the first line, then k generator rows of n
    /// '0'/'1' characters (character i = coordinate i).
    std::string to_text() const;
    static LinearCode from_text(std::istream& in);
    static LinearCode from_text(const std::string& text);

private:
    std::size_t n_;
    BitMatrix rows_;
    std::vector<std::size_t> pivots_;
};

/// Basis of the null space of `code`'s generator: the dual code, of
/// dimension n - k.
LinearCode dual_basis(const LinearCode& code);

/// Enumerates all 2^k codewords exactly once, starting from 0^n, in
/// Gray-code order over the message bits: word i differs from word i-1
/// by generator row ctz(i), so each step is one row XOR. A range built
/// from a temporary takes ownership of it, so
/// `for (auto& w : enumerate_codewords(simplex_code(3)))` is safe.
class CodewordRange {
public:
    explicit CodewordRange(const LinearCode& code, std::uint64_t budget = kEnumerationBudget);
    explicit CodewordRange(LinearCode&& code, std::uint64_t budget = kEnumerationBudget);

    class iterator {
    public:
        using value_type = BitVector;

        iterator() = default;  // end
        explicit iterator(const LinearCode* code);

        const BitVector& operator*() const { return current_; }
        iterator& operator++();
        bool operator!=(const iterator& o) const { return remaining_ != o.remaining_; }

    private:
        const LinearCode* code_ = nullptr;
        BitVector current_;
        std::uint64_t index_ = 0;
        std::uint64_t remaining_ = 0;  // 0 marks end
    };

    iterator begin() const { return iterator(&code()); }
    iterator end() const { return iterator(); }
    std::uint64_t count() const { return 1ull << code().dimension(); }

private:
    const LinearCode& code() const { return owned_ ? *owned_ : *code_; }
    static void check_budget(const LinearCode& code, std::uint64_t budget);

    const LinearCode* code_ = nullptr;
    std::optional<LinearCode> owned_;
};

inline CodewordRange enumerate_codewords(const LinearCode& code,
                                         std::uint64_t budget = kEnumerationBudget) {
    return CodewordRange(code, budget);
}
inline CodewordRange enumerate_codewords(LinearCode&& code,
                                         std::uint64_t budget = kEnumerationBudget) {
    return CodewordRange(std::move(code), budget);
}

}  // namespace cosets
