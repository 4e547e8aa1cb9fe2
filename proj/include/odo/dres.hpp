#ifndef ODO_DRES_HPP
#define ODO_DRES_HPP

// Differential resultants and subresultants. S_k is the coefficient matrix of
// the extended system
//   Xi_k = { D^(m-1-k)(P-la), ..., P-la, D^(n-1-k)(Q-mu), ..., Q-mu }
// with rows in exactly that order and columns D^(n+m-1-k), ..., D^0. The
// determinants are taken fraction-free (Bareiss) over Sigma[la,mu].

#include <string>
#include <vector>

#include "odo/diffop.hpp"
#include "odo/field.hpp"

namespace odo {

template <class F>
struct SylvesterMatrix {
    std::vector<std::vector<MultiPoly<F>>> entries;  // rows x cols
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    int n = 0, m = 0, k = 0;
    RingPtr spectral;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
};

// lift an operator over F to an operator over Sigma[la,mu] and subtract the
// spectral variable at order zero
template <class F>
DiffOp<MultiPoly<F>> minus_spectral(const DiffOp<F>& p, const RingPtr& spectral, int var) {
    using SP = MultiPoly<F>;
    std::vector<SP> cs;
    cs.reserve(static_cast<std::size_t>(p.order()) + 1);
    for (int i = 0; i <= p.order(); ++i)
        cs.push_back(SP::constant(spectral, p.coeff_at(i)));
    if (cs.empty()) cs.push_back(SP(spectral));
    cs[0] -= SP::variable(spectral, var, 1, F(1));
    return DiffOp<SP>::from_coeffs(std::move(cs));
}

template <class F>
SylvesterMatrix<F> sylvester(const DiffOp<F>& p, const DiffOp<F>& q, int k, const RingPtr& spectral) {
    int n = p.order(), m = q.order();
    if (n < 1 || m < 1) fail(Err::KOutOfRange, "both operators must have positive order");
    if (k < 0 || k > std::min(n, m) - 1) fail(Err::KOutOfRange, "subresultant index out of range");

    using SP = MultiPoly<F>;
    SylvesterMatrix<F> s;
    s.n = n;
    s.m = m;
    s.k = k;
    s.spectral = spectral;
    int ncols = n + m - k;
    for (int i = n + m - 1 - k; i >= 0; --i)
        s.col_labels.push_back(i == 0 ? "1" : "D^" + std::to_string(i));

    DiffOp<SP> d = DiffOp<SP>::d_power(1, SP::constant(spectral, F(1)));
    auto push_block = [&](const DiffOp<SP>& base, int top_shift, const std::string& tag) {
        std::vector<DiffOp<SP>> shifted(static_cast<std::size_t>(top_shift) + 1);
        shifted[0] = base;
        for (int j = 1; j <= top_shift; ++j)
            shifted[static_cast<std::size_t>(j)] = d * shifted[static_cast<std::size_t>(j - 1)];
        for (int j = top_shift; j >= 0; --j) {
            const DiffOp<SP>& row_op = shifted[static_cast<std::size_t>(j)];
            std::vector<SP> row;
            row.reserve(static_cast<std::size_t>(ncols));
            for (int c = n + m - 1 - k; c >= 0; --c) row.push_back(row_op.coeff_at(c));
            s.entries.push_back(std::move(row));
            s.row_labels.push_back(j == 0 ? tag : "D^" + std::to_string(j) + "(" + tag + ")");
        }
    };
    push_block(minus_spectral(p, spectral, 0), m - 1 - k, "P-" + spectral->vars[0]);
    push_block(minus_spectral(q, spectral, 1), n - 1 - k, "Q-" + spectral->vars[1]);
    return s;
}

// Fraction-free determinant. Entries must belong to an integral domain with
// exact division (MultiPoly over a field qualifies).
template <class C>
MultiPoly<C> bareiss_det(std::vector<std::vector<MultiPoly<C>>> m) {
    std::size_t n = m.size();
    for (auto& row : m)
        if (row.size() != n) fail(Err::NotSquare, "determinant of a non-square matrix");
    if (n == 0) return MultiPoly<C>(1);

    int sign = 1;
    MultiPoly<C> prev(1);
    for (std::size_t kk = 0; kk + 1 < n; ++kk) {
        std::size_t piv = kk;
        while (piv < n && m[piv][kk].is_zero_poly()) ++piv;
        if (piv == n) return MultiPoly<C>();  // singular
        if (piv != kk) {
            std::swap(m[piv], m[kk]);
            sign = -sign;
        }
        for (std::size_t i = kk + 1; i < n; ++i) {
            for (std::size_t j = kk + 1; j < n; ++j) {
                MultiPoly<C> t = m[kk][kk] * m[i][j] - m[i][kk] * m[kk][j];
                m[i][j] = t.exact_div(prev);
            }
            m[i][kk] = MultiPoly<C>();
        }
        prev = m[kk][kk];
    }
    MultiPoly<C> det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

template <class F>
MultiPoly<F> bareiss_det(const SylvesterMatrix<F>& s) {
    if (s.rows() != s.cols()) fail(Err::NotSquare, "Sylvester matrix is square only for k = 0");
    return bareiss_det(s.entries);
}

// h(la,mu) = det S_0(P-la, Q-mu). For commuting inputs the result must have
// constant coefficients (a Burchnall-Chaundy polynomial); violation raises
// NONCONSTANT_RESULTANT.
inline MultiPoly<FieldElement> diff_resultant(const DiffOp<FieldElement>& p,
                                              const DiffOp<FieldElement>& q,
                                              const RingPtr& spectral) {
    MultiPoly<FieldElement> h = bareiss_det(sylvester(p, q, 0, spectral));
    if (commutator(p, q).is_zero_op()) {
        for (auto& [e, c] : h.terms())
            if (!c.is_constant())
                fail(Err::NonconstantResultant,
                     "resultant of a commuting pair has a nonconstant coefficient");
    }
    return h;
}

// demote a constant-coefficient spectral polynomial to Q coefficients
inline QPoly to_qpoly(const MultiPoly<FieldElement>& p) {
    QPoly q(p.ring());
    for (auto& [e, c] : p.terms()) {
        if (!c.is_rational())
            fail(Err::NonconstantResultant, "polynomial has nonconstant coefficients");
        q.add_term(e, c.rat_value());
    }
    return q;
}

template <class F>
struct Subresultant {
    DiffOp<MultiPoly<F>> op;               // sum_i phi_i D^i
    std::vector<MultiPoly<F>> minors;      // phi_0 ... phi_k
};

// s dRes_k (P-la, Q-mu) = sum_{i<=k} det(S_k^i) D^i, where S_k^i keeps only
// column D^i among the last k+1 columns of S_k.
template <class F>
Subresultant<F> subresultant(const DiffOp<F>& p, const DiffOp<F>& q, int k, const RingPtr& spectral) {
    SylvesterMatrix<F> s = sylvester(p, q, k, spectral);
    std::size_t nrows = s.rows();
    std::size_t ncols = s.cols();
    Subresultant<F> out;
    std::vector<MultiPoly<F>> coeffs;
    for (int i = 0; i <= k; ++i) {
        std::vector<std::vector<MultiPoly<F>>> sq;
        sq.reserve(nrows);
        for (std::size_t r = 0; r < nrows; ++r) {
            std::vector<MultiPoly<F>> row;
            row.reserve(nrows);
            // keep all columns above D^k, plus the column D^i
            for (std::size_t c = 0; c + static_cast<std::size_t>(k) + 1 < ncols; ++c)
                row.push_back(s.entries[r][c]);
            row.push_back(s.entries[r][ncols - 1 - static_cast<std::size_t>(i)]);
            sq.push_back(std::move(row));
        }
        out.minors.push_back(bareiss_det(sq));
        coeffs.push_back(out.minors.back());
    }
    out.op = DiffOp<MultiPoly<F>>::from_coeffs(std::move(coeffs));
    return out;
}

} // namespace odo

#endif
