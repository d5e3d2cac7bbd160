#include "cosets/linear_code.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cosets {

LinearCode::LinearCode(std::size_t n, BitMatrix rows) : n_(n), rows_(std::move(rows)) {
    if (n == 0) throw std::invalid_argument("code length must be >= 1");
    for (const auto& r : rows_)
        if (r.size() != n) throw std::invalid_argument("generator row length mismatch");
    pivots_ = gf2_rref(rows_);
}

bool LinearCode::contains(const BitVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length mismatch");
    BitVector r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (r.get(pivots_[i])) r ^= rows_[i];
    return r.is_zero();
}

std::string LinearCode::to_text() const {
    std::ostringstream out;
    out << n_ << ' ' << dimension() << '\n';
    for (const auto& row : rows_) out << row.to_string() << '\n';
    return out.str();
}

LinearCode LinearCode::from_text(std::istream& in) {
    std::size_t n = 0, k = 0;
    if (!(in >> n >> k)) throw std::invalid_argument("code header must be \"n k\"");
    BitMatrix rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::string line;
        if (!(in >> line) || line.size() != n)
            throw std::invalid_argument("generator row " + std::to_string(i) +
                                        " missing or of wrong length");
        rows.push_back(BitVector::from_string(line));
    }
    LinearCode code(n, std::move(rows));
    if (code.dimension() != k)
        throw std::invalid_argument("generator rows are not linearly independent");
    return code;
}

LinearCode LinearCode::from_text(const std::string& text) {
    std::istringstream in(text);
    return from_text(in);
}

LinearCode dual_basis(const LinearCode& code) {
    const std::size_t n = code.length();
    const auto& gen = code.generator();
    const auto& pivots = code.pivot_columns();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    // For each free column f, the dual vector has a 1 at f and copies
    // column f of the RREF generator into the pivot positions.
    BitMatrix out;
    out.reserve(n - gen.size());
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector y(n);
        y.set(f, true);
        for (std::size_t i = 0; i < gen.size(); ++i)
            if (gen[i].get(f)) y.set(pivots[i], true);
        out.push_back(std::move(y));
    }
    return LinearCode(n, std::move(out));
}

void CodewordRange::check_budget(const LinearCode& code, std::uint64_t budget) {
    const std::size_t k = code.dimension();
    if (k >= 64 || (1ull << k) > budget)
        throw std::runtime_error("enumeration too large: 2^" + std::to_string(k) +
                                 " codewords exceeds budget of " + std::to_string(budget));
}

CodewordRange::CodewordRange(const LinearCode& code, std::uint64_t budget) : code_(&code) {
    check_budget(code, budget);
}

CodewordRange::CodewordRange(LinearCode&& code, std::uint64_t budget) : owned_(std::move(code)) {
    check_budget(*owned_, budget);
}

CodewordRange::iterator::iterator(const LinearCode* code)
    : code_(code), current_(code->length()), index_(0),
      remaining_(1ull << code->dimension()) {}

CodewordRange::iterator& CodewordRange::iterator::operator++() {
    ++index_;
    if (--remaining_ > 0)
        current_ ^= code_->generator()[std::countr_zero(index_)];
    return *this;
}

}  // namespace cosets
