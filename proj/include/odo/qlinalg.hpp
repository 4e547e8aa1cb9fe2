#ifndef ODO_QLINALG_HPP
#define ODO_QLINALG_HPP

// Small dense exact linear algebra over Q: reduced row echelon form and
// affine solution sets. Systems here come from linearized constant-solving,
// so dimensions stay tiny.

#include <optional>
#include <string>
#include <vector>

#include "odo/rational.hpp"

namespace odo {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

struct LinearSystem {
    QMat a;                         // rows x unknowns
    QVec b;                         // right-hand side
    std::vector<std::string> unknowns;
};

struct LinearSolution {
    QVec particular;                // free unknowns set to 0
    std::vector<QVec> nullspace;    // basis of the homogeneous solutions
    bool unique() const { return nullspace.empty(); }
};

// Gauss-Jordan; returns nullopt when the system is inconsistent.
inline std::optional<LinearSolution> solve_linear(const QMat& a, const QVec& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : (b.empty() ? 0 : a.size());
    if (rows == 0) {
        // no constraints at all
        return LinearSolution{QVec(cols, Rational(0)), {}};
    }
    cols = a[0].size();
    QMat m(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
        m[i][cols] = b[i];
    }

    std::vector<int> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c])) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!is_zero(m[i][cols])) return std::nullopt;

    std::vector<int> pivot_row_of_col(cols, -1);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
        pivot_row_of_col[static_cast<std::size_t>(pivot_col_of_row[i])] = static_cast<int>(i);

    LinearSolution sol;
    sol.particular.assign(cols, Rational(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] >= 0)
            sol.particular[c] = m[static_cast<std::size_t>(pivot_row_of_col[c])][cols];

    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (pivot_row_of_col[fc] >= 0) continue;
        QVec v(cols, Rational(0));
        v[fc] = Rational(1);
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_row_of_col[c] >= 0)
                v[c] = -m[static_cast<std::size_t>(pivot_row_of_col[c])][fc];
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

inline std::optional<LinearSolution> solve_linear(const LinearSystem& sys) {
    return solve_linear(sys.a, sys.b);
}

} // namespace odo

#endif
