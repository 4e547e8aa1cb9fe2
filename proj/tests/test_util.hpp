#ifndef ODO_TESTS_UTIL_HPP
#define ODO_TESTS_UTIL_HPP

// Test-side oracles and comparison helpers. These stay independent of the
// implementation paths they check.

#include <optional>
#include <vector>

#include "odo/dres.hpp"
#include "odo/field.hpp"

namespace odo::testutil {

// cofactor expansion along the first row; independent determinant oracle
template <class E>
E cofactor_det(const std::vector<std::vector<E>>& m) {
    std::size_t n = m.size();
    if (n == 0) return E(1);
    if (n == 1) return m[0][0];
    E acc = E(0);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<E>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<E> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            sub.push_back(std::move(row));
        }
        E term = m[0][j] * cofactor_det(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// a == u * b for a nonzero rational unit u; returns u
inline std::optional<Rational> unit_ratio(const MultiPoly<FieldElement>& a,
                                          const MultiPoly<FieldElement>& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return std::nullopt;
    FieldElement u = a.lead_coeff() / b.lead_coeff();
    if (!u.is_rational()) return std::nullopt;
    Rational r = u.rat_value();
    if (is_zero(r)) return std::nullopt;
    MultiPoly<FieldElement> diff = a - b.map_coeffs([&](const FieldElement& c) {
        return c * FieldElement(r);
    });
    if (!diff.is_zero_poly()) return std::nullopt;
    return r;
}

inline std::optional<Rational> unit_ratio(const QPoly& a, const QPoly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return std::nullopt;
    Rational r = a.lead_coeff() / b.lead_coeff();
    if (a != b.scaled(r)) return std::nullopt;
    return r;
}

// operator equality up to one common rational unit across all coefficients
inline std::optional<Rational> unit_ratio(const DiffOp<MultiPoly<FieldElement>>& a,
                                          const DiffOp<MultiPoly<FieldElement>>& b) {
    if (a.is_zero_op() || b.is_zero_op() || a.order() != b.order()) return std::nullopt;
    auto u = unit_ratio(a.lead(), b.lead());
    if (!u) return std::nullopt;
    for (int i = 0; i <= a.order(); ++i) {
        MultiPoly<FieldElement> scaled = b.coeff_at(i).map_coeffs(
            [&](const FieldElement& c) { return c * FieldElement(*u); });
        if (a.coeff_at(i) != scaled) return std::nullopt;
    }
    return u;
}

} // namespace odo::testutil

#endif
