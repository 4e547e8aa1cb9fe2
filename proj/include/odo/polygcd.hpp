#ifndef ODO_POLYGCD_HPP
#define ODO_POLYGCD_HPP

// Multivariate gcd over Q by primitive pseudo-remainder sequences, plus the
// char-0 radical (square-free part). Inputs are normalized to primitive
// integer polynomials before the PRS runs.

#include <vector>

#include "odo/multipoly.hpp"

namespace odo {

namespace detail {

// dense view in one variable: index = exponent of v, entries v-free
inline std::vector<QPoly> univar_view(const QPoly& p, int v) { return p.coeffs_in(v); }

inline int view_degree(const std::vector<QPoly>& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (!f[i].is_zero_poly()) return static_cast<int>(i);
    return -1;
}

inline void view_trim(std::vector<QPoly>& f) {
    while (!f.empty() && f.back().is_zero_poly()) f.pop_back();
}

QPoly pgcd(const QPoly& a, const QPoly& b);

// gcd of integer-coefficient polynomials, numeric content included
inline QPoly true_gcd_int(const QPoly& a, const QPoly& b) {
    if (a.is_zero_poly()) return b;
    if (b.is_zero_poly()) return a;
    Rational c = rat_gcd(poly_content(a), poly_content(b));
    if (a.is_constant() || b.is_constant()) return QPoly::constant(a.ring() ? a.ring() : b.ring(), c);
    QPoly g = pgcd(poly_primitive(a), poly_primitive(b));
    return g.scaled(c);
}

// full content of p with respect to v: gcd (with numeric part) of the
// v-coefficients
inline QPoly content_in(const QPoly& p, int v) {
    auto cs = univar_view(p, v);
    QPoly g(p.ring());
    for (auto& c : cs) {
        if (c.is_zero_poly()) continue;
        g = g.is_zero_poly() ? c : true_gcd_int(g, c);
        if (g.is_constant() && (g.constant_value() == 1 || g.constant_value() == -1)) break;
    }
    if (sgn(g.lead_coeff()) < 0) g = -g;
    return g;
}

// pseudo-remainder of F by G with respect to v; F, G given as dense views
inline std::vector<QPoly> prem_view(std::vector<QPoly> f, const std::vector<QPoly>& g, RingPtr ring) {
    int dg = view_degree(g);
    const QPoly& lcg = g[static_cast<std::size_t>(dg)];
    int df = view_degree(f);
    while (df >= dg && df >= 0) {
        QPoly lcf = f[static_cast<std::size_t>(df)];
        for (auto& c : f) c = c * lcg;
        int shift = df - dg;
        for (int i = 0; i <= dg; ++i)
            f[static_cast<std::size_t>(i + shift)] -= lcf * g[static_cast<std::size_t>(i)];
        view_trim(f);
        int nd = view_degree(f);
        if (nd >= df) fail(Err::Internal, "prem failed to reduce degree");
        df = nd;
        (void)ring;
    }
    return f;
}

// both arguments primitive integer polynomials, nonzero
inline QPoly pgcd(const QPoly& a, const QPoly& b) {
    if (a.is_constant() || b.is_constant()) return QPoly::constant(a.ring() ? a.ring() : b.ring(), Rational(1));
    const RingPtr& ring = a.ring();
    int v = -1;
    for (std::size_t i = 0; i < ring->size(); ++i) {
        if (a.degree_in(static_cast<int>(i)) > 0) {
            v = static_cast<int>(i);
            break;
        }
    }
    if (b.degree_in(v) == 0) return pgcd(poly_primitive(content_in(a, v)), b);

    QPoly ca = content_in(a, v), cb = content_in(b, v);
    QPoly c = true_gcd_int(ca, cb);
    std::vector<QPoly> f = univar_view(a.exact_div(ca), v);
    std::vector<QPoly> g = univar_view(b.exact_div(cb), v);
    if (view_degree(f) < view_degree(g)) std::swap(f, g);

    while (true) {
        std::vector<QPoly> r = prem_view(f, g, ring);
        if (view_degree(r) < 0) break;
        f = std::move(g);
        // primitive part of r with respect to v
        QPoly rp = QPoly::from_coeffs_in(v, r, ring);
        rp = rp.exact_div(content_in(rp, v));
        g = univar_view(rp, v);
        if (view_degree(g) == 0) {
            g = univar_view(QPoly::constant(ring, Rational(1)), v);
            break;
        }
    }
    QPoly gp = QPoly::from_coeffs_in(v, g, ring);
    return poly_primitive(c * gp);
}

} // namespace detail

// gcd in Q[vars], returned primitive with positive leading coefficient;
// poly_gcd(0,0) = 0.
inline QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero_poly()) return poly_primitive(b);
    if (b.is_zero_poly()) return poly_primitive(a);
    // monomial fast path: gcd with a single-term operand
    if (a.term_count() == 1 || b.term_count() == 1) {
        const QPoly& mono = a.term_count() == 1 ? a : b;
        const QPoly& other = a.term_count() == 1 ? b : a;
        Exponents ge = mono.lead_expo();
        for (auto& [e, c] : other.terms())
            for (std::size_t i = 0; i < ge.size(); ++i) ge[i] = std::min(ge[i], e[i]);
        QPoly g(mono.ring() ? mono.ring() : other.ring());
        g.add_term(ge, Rational(1));
        return g;
    }
    return detail::pgcd(poly_primitive(a), poly_primitive(b));
}

inline QPoly poly_gcd_many(const std::vector<QPoly>& ps) {
    QPoly g;
    bool first = true;
    for (auto& p : ps) {
        if (p.is_zero_poly()) continue;
        g = first ? poly_primitive(p) : poly_gcd(g, p);
        first = false;
        if (!first && g.is_constant()) break;
    }
    return g;
}

// char-0 radical: h / gcd(h, all partial derivatives), primitive-normalized.
inline QPoly poly_radical(const QPoly& h) {
    if (h.is_zero_poly()) fail(Err::ZeroInput, "radical of 0");
    std::vector<QPoly> parts{h};
    for (std::size_t v = 0; v < (h.ring() ? h.ring()->size() : 0); ++v)
        parts.push_back(h.partial_derivative(static_cast<int>(v)));
    QPoly g = poly_gcd_many(parts);
    return poly_primitive(h.exact_div(g));
}

} // namespace odo

#endif
