#include "cosets/bitvec.hpp"

#include <algorithm>
#include <stdexcept>

namespace cosets {

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string must contain only '0'/'1'");
    }
    return v;
}

std::string BitVector::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::vector<std::size_t> gf2_rref(BitMatrix& rows) {
    std::vector<std::size_t> pivots;
    std::size_t done = 0;  // rows [0, done) are in echelon position
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    for (std::size_t col = 0; col < n && done < rows.size(); ++col) {
        std::size_t pr = done;
        while (pr < rows.size() && !rows[pr].get(col)) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[done], rows[pr]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != done && rows[r].get(col)) rows[r] ^= rows[done];
        pivots.push_back(col);
        ++done;
    }
    rows.resize(done);
    return pivots;
}

std::size_t gf2_rank(const BitMatrix& rows) {
    if (rows.empty()) throw std::invalid_argument("empty input");
    BitMatrix copy = rows;
    return gf2_rref(copy).size();
}

}  // namespace cosets
