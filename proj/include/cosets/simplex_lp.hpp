#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace cosets {

/// Dense two-phase simplex for small LPs:
///   maximize c'x  subject to  Ax <= b, x >= 0.
/// Bland-style tie-breaking on variable indices prevents cycling. Returns
/// +inf for unbounded and -inf for infeasible programs.
class SimplexSolver {
public:
    using Row = std::vector<double>;

    SimplexSolver(const std::vector<Row>& A, const Row& b, const Row& c)
        : m_(b.size()), n_(c.size()), N_(n_ + 1), B_(m_), D_(m_ + 2, Row(n_ + 2)) {
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t j = 0; j < n_; ++j) D_[i][j] = A[i][j];
        for (std::size_t i = 0; i < m_; ++i) {
            B_[i] = static_cast<int>(n_ + i);
            D_[i][n_] = -1;
            D_[i][n_ + 1] = b[i];
        }
        for (std::size_t j = 0; j < n_; ++j) {
            N_[j] = static_cast<int>(j);
            D_[m_][j] = -c[j];
        }
        N_[n_] = -1;
        D_[m_ + 1][n_] = 1;
    }

    double solve(Row& x) {
        std::size_t r = 0;
        for (std::size_t i = 1; i < m_; ++i)
            if (D_[i][n_ + 1] < D_[r][n_ + 1]) r = i;
        if (m_ > 0 && D_[r][n_ + 1] < -kEps) {
            pivot(r, n_);
            if (!run(2) || D_[m_ + 1][n_ + 1] < -kEps)
                return -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m_; ++i) {
                if (B_[i] != -1) continue;
                std::size_t s = 0;
                for (std::size_t j = 1; j <= n_; ++j)
                    if (std::make_pair(D_[i][j], N_[j]) < std::make_pair(D_[i][s], N_[s])) s = j;
                pivot(i, s);
            }
        }
        const bool bounded = run(1);
        x.assign(n_, 0.0);
        for (std::size_t i = 0; i < m_; ++i)
            if (B_[i] >= 0 && B_[i] < static_cast<int>(n_)) x[B_[i]] = D_[i][n_ + 1];
        return bounded ? D_[m_][n_ + 1] : std::numeric_limits<double>::infinity();
    }

private:
    static constexpr double kEps = 1e-9;

    void pivot(std::size_t r, std::size_t s) {
        double* a = D_[r].data();
        const double inv = 1.0 / a[s];
        for (std::size_t i = 0; i < m_ + 2; ++i) {
            if (i == r || std::abs(D_[i][s]) <= kEps) continue;
            double* row = D_[i].data();
            const double factor = row[s] * inv;
            for (std::size_t j = 0; j < n_ + 2; ++j) row[j] -= a[j] * factor;
            row[s] = a[s] * factor;
        }
        for (std::size_t j = 0; j < n_ + 2; ++j)
            if (j != s) D_[r][j] *= inv;
        for (std::size_t i = 0; i < m_ + 2; ++i)
            if (i != r) D_[i][s] *= -inv;
        D_[r][s] = inv;
        std::swap(B_[r], N_[s]);
    }

    bool run(int phase) {
        const std::size_t obj = m_ + static_cast<std::size_t>(phase) - 1;
        for (;;) {
            std::size_t s = n_ + 1;
            for (std::size_t j = 0; j <= n_; ++j) {
                if (N_[j] == -phase) continue;
                if (s == n_ + 1 ||
                    std::make_pair(D_[obj][j], N_[j]) < std::make_pair(D_[obj][s], N_[s]))
                    s = j;
            }
            if (D_[obj][s] >= -kEps) return true;
            std::size_t r = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (D_[i][s] <= kEps) continue;
                if (r == m_ || std::make_pair(D_[i][n_ + 1] / D_[i][s], B_[i]) <
                                   std::make_pair(D_[r][n_ + 1] / D_[r][s], B_[r]))
                    r = i;
            }
            if (r == m_) return false;  // unbounded
            pivot(r, s);
        }
    }

    std::size_t m_, n_;
    std::vector<int> N_, B_;
    std::vector<Row> D_;
};

}  // namespace cosets
