#ifndef ODO_GROEBNER_HPP
#define ODO_GROEBNER_HPP

// Buchberger over Q plus normal-form reduction. Reduction is templated on the
// coefficient type so that polynomials over Sigma reduce against a
// constant-coefficient basis (the leading coefficients are units there).

#include <vector>

#include "odo/multipoly.hpp"

namespace odo {

namespace detail {
inline Exponents expo_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}
inline Exponents expo_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
} // namespace detail

// full normal form of p modulo basis under ord
template <class C>
MultiPoly<C> nf_reduce(const MultiPoly<C>& p, const std::vector<MultiPoly<C>>& basis,
                       const TermOrder& ord) {
    MultiPoly<C> work = p, rest(p.ring());
    while (!work.is_zero_poly()) {
        auto lt = work.lead_term(ord);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero_poly()) continue;
            auto glt = g.lead_term(ord);
            if (!MultiPoly<C>::expo_divides(glt->first, lt->first)) continue;
            MultiPoly<C> t(work.ring());
            t.add_term(detail::expo_sub(lt->first, glt->first), lt->second / glt->second);
            work = work - t * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            rest.add_term(lt->first, lt->second);
            MultiPoly<C> t(work.ring());
            t.add_term(lt->first, lt->second);
            work = work - t;
        }
    }
    return rest;
}

inline QPoly spolynomial(const QPoly& f, const QPoly& g, const TermOrder& ord) {
    auto fl = f.lead_term(ord), gl = g.lead_term(ord);
    Exponents l = detail::expo_lcm(fl->first, gl->first);
    QPoly tf(f.ring()), tg(g.ring());
    tf.add_term(detail::expo_sub(l, fl->first), Rational(1) / fl->second);
    tg.add_term(detail::expo_sub(l, gl->first), Rational(1) / gl->second);
    return tf * f - tg * g;
}

// reduced Groebner basis (monic, pairwise reduced, sorted by leading term)
inline std::vector<QPoly> buchberger(const std::vector<QPoly>& gens, const TermOrder& ord) {
    std::vector<QPoly> g;
    for (auto& p : gens)
        if (!p.is_zero_poly()) g.push_back(p.scaled(Rational(1) / p.lead_term(ord)->second));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        const Exponents &ei = g[i].lead_term(ord)->first, &ej = g[j].lead_term(ord)->first;
        // coprime leading monomials: s-polynomial reduces to zero
        bool coprime = true;
        for (std::size_t v = 0; v < ei.size(); ++v)
            if (ei[v] > 0 && ej[v] > 0) { coprime = false; break; }
        if (coprime) continue;
        QPoly s = nf_reduce(spolynomial(g[i], g[j], ord), g, ord);
        if (s.is_zero_poly()) continue;
        s = s.scaled(Rational(1) / s.lead_term(ord)->second);
        for (std::size_t t = 0; t < g.size(); ++t) pairs.emplace_back(t, g.size());
        g.push_back(s);
    }

    // interreduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::vector<QPoly> others;
            for (std::size_t j = 0; j < g.size(); ++j)
                if (j != i) others.push_back(g[j]);
            QPoly r = nf_reduce(g[i], others, ord);
            if (r != g[i]) {
                changed = true;
                if (r.is_zero_poly()) {
                    g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
                    --i;
                } else {
                    g[i] = r.scaled(Rational(1) / r.lead_term(ord)->second);
                }
            }
        }
    }
    std::sort(g.begin(), g.end(), [&](const QPoly& a, const QPoly& b) {
        return ord.greater(a.lead_term(ord)->first, b.lead_term(ord)->first);
    });
    return g;
}

} // namespace odo

#endif
