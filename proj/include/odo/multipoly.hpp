#ifndef ODO_MULTIPOLY_HPP
#define ODO_MULTIPOLY_HPP

// Sparse multivariate polynomials over an exact coefficient ring.
// Terms are kept in a map ordered by descending deglex, so begin() is the
// deglex leading term; other term orders are applied where needed (Groebner,
// printing) by explicit TermOrder arguments.

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "odo/error.hpp"
#include "odo/rational.hpp"

namespace odo {

using Exponents = std::vector<unsigned>;

inline unsigned long expo_degree(const Exponents& e) {
    unsigned long d = 0;
    for (unsigned x : e) d += x;
    return d;
}

struct PolyRing {
    std::vector<std::string> vars;

    explicit PolyRing(std::vector<std::string> v) : vars(std::move(v)) {}
    std::size_t size() const { return vars.size(); }
    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(std::move(vars));
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars == b->vars;
}

// Descending deglex: begin() of the term map is the leading term.
struct DeglexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        unsigned long da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

struct TermOrder {
    enum class Kind { Lex, DegLex, DegRevLex, WDeg };

    Kind kind = Kind::DegRevLex;
    std::vector<int> priority;  // variable indices, most significant first; empty = identity
    std::vector<long> weights;  // for WDeg

    // strict a < b in the order (b is the "bigger" term)
    bool less(const Exponents& a, const Exponents& b) const {
        Exponents pa = permuted(a), pb = permuted(b);
        switch (kind) {
        case Kind::Lex:
            return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
        case Kind::DegLex: {
            unsigned long da = expo_degree(pa), db = expo_degree(pb);
            if (da != db) return da < db;
            return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
        }
        case Kind::DegRevLex: {
            unsigned long da = expo_degree(pa), db = expo_degree(pb);
            if (da != db) return da < db;
            return revlex_less(pa, pb);
        }
        case Kind::WDeg: {
            long da = wdeg(pa), db = wdeg(pb);
            if (da != db) return da < db;
            return revlex_less(pa, pb);
        }
        }
        return false;
    }
    bool greater(const Exponents& a, const Exponents& b) const { return less(b, a); }

private:
    Exponents permuted(const Exponents& e) const {
        if (priority.empty()) return e;
        Exponents r(e.size(), 0);
        for (std::size_t i = 0; i < priority.size() && i < e.size(); ++i)
            r[i] = e[static_cast<std::size_t>(priority[i])];
        return r;
    }
    long wdeg(const Exponents& e) const {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            d += (i < weights.size() ? weights[i] : 1) * static_cast<long>(e[i]);
        return d;
    }
    static bool revlex_less(const Exponents& a, const Exponents& b) {
        // a < b iff the last nonzero entry of a-b is positive
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
};

template <class C>
class MultiPoly {
public:
    using Terms = std::map<Exponents, C, DeglexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
    MultiPoly(int v) {  // constant in the ring-less sense; coerced on use
        if (v != 0) terms_.emplace(Exponents{}, C(v));
    }

    static MultiPoly zero(RingPtr ring) { return MultiPoly(std::move(ring)); }
    static MultiPoly constant(RingPtr ring, C c) {
        MultiPoly p(std::move(ring));
        if (!is_zero(c)) p.terms_.emplace(p.zero_expo(), std::move(c));
        return p;
    }
    static MultiPoly variable(RingPtr ring, int idx, unsigned exp = 1, C c = C(1)) {
        MultiPoly p(ring);
        Exponents e(ring->size(), 0);
        e[static_cast<std::size_t>(idx)] = exp;
        if (!is_zero(c)) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && expo_degree(terms_.begin()->first) == 0;
    }
    C constant_value() const {
        if (terms_.empty()) return C(0);
        if (!is_constant()) fail(Err::Internal, "constant_value on nonconstant polynomial");
        return terms_.begin()->second;
    }

    unsigned long total_degree() const {
        unsigned long d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, expo_degree(e));
        return d;
    }
    unsigned degree_in(int var) const {
        unsigned d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
        return d;
    }

    // deglex leading data
    const Exponents& lead_expo() const { return terms_.begin()->first; }
    const C& lead_coeff() const { return terms_.begin()->second; }

    // leading term under an explicit order
    typename Terms::const_iterator lead_term(const TermOrder& ord) const {
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.greater(it->first, best->first)) best = it;
        return best;
    }

    void add_term(const Exponents& e, const C& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r(ring_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    MultiPoly operator+(const MultiPoly& o) const {
        MultiPoly r = coerced_pair(*this, o);
        for (auto& [e, c] : coerced_other(o, r.ring_)) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        MultiPoly r = coerced_pair(*this, o);
        for (auto& [e, c] : coerced_other(o, r.ring_)) r.add_term(e, -c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        RingPtr ring = unify(ring_, o.ring_);
        MultiPoly a = with_ring(ring), b = o.with_ring(ring);
        MultiPoly r(ring);
        for (auto& [ea, ca] : a.terms_) {
            for (auto& [eb, cb] : b.terms_) {
                C c = ca * cb;
                if (is_zero(c)) continue;
                Exponents e(ea);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, c);
            }
        }
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const C& c) const {
        MultiPoly r(ring_);
        if (is_zero(c)) return r;
        for (auto& [e, k] : terms_) {
            C v = k * c;
            if (!is_zero(v)) r.terms_.emplace(e, v);
        }
        return r;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r = MultiPoly::constant(ring_, C(1));
        MultiPoly base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            if (e >>= 1u) base = base * base;
        }
        return r;
    }

    bool operator==(const MultiPoly& o) const {
        if (same_ring(ring_, o.ring_)) return terms_ == o.terms_;
        return (*this - o).is_zero_poly();
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Single-divisor division with remainder (leading terms by deglex).
    // Requires a field coefficient type (uses operator/ on C).
    std::pair<MultiPoly, MultiPoly> divmod(const MultiPoly& d) const {
        if (d.is_zero_poly()) fail(Err::DivisionByZero, "polynomial division by zero");
        RingPtr ring = unify(ring_, d.ring_);
        MultiPoly den = d.with_ring(ring);
        MultiPoly q(ring), r = with_ring(ring);
        const Exponents& de = den.lead_expo();
        MultiPoly rest(ring);
        while (!r.is_zero_poly()) {
            const Exponents& re = r.lead_expo();
            if (!expo_divides(de, re)) {
                // move the leading term to the remainder and continue
                rest.add_term(re, r.lead_coeff());
                r.terms_.erase(r.terms_.begin());
                continue;
            }
            Exponents qe(re);
            for (std::size_t i = 0; i < qe.size(); ++i) qe[i] -= de[i];
            C qc = r.lead_coeff() / den.lead_coeff();
            MultiPoly t(ring);
            t.terms_.emplace(qe, qc);
            q.add_term(qe, qc);
            r = r - t * den;
        }
        return {q, rest};
    }

    MultiPoly exact_div(const MultiPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero_poly()) fail(Err::InexactDivision, "polynomial division is not exact");
        return q;
    }

    MultiPoly partial_derivative(int var) const {
        MultiPoly r(ring_);
        for (auto& [e, c] : terms_) {
            unsigned k = e[static_cast<std::size_t>(var)];
            if (k == 0) continue;
            Exponents de(e);
            de[static_cast<std::size_t>(var)] = k - 1;
            r.add_term(de, c * C(static_cast<int>(k)));
        }
        return r;
    }

    // Substitute values[i] for variable i (every variable gets a value).
    // V must multiply with C (e.g. V = MultiPoly<C2>, C convertible into it via map_fn).
    template <class V, class CoeffFn>
    V substituted(const std::vector<V>& values, const V& one, CoeffFn&& coeff_to_value) const {
        V acc = one - one;  // zero of the target
        for (auto& [e, c] : terms_) {
            V t = coeff_to_value(c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                V p = one;
                V b = values[i];
                unsigned k = e[i];
                while (k) {
                    if (k & 1u) p = p * b;
                    if (k >>= 1u) b = b * b;
                }
                t = t * p;
            }
            acc = acc + t;
        }
        return acc;
    }

    // Re-key terms into a superset ring (variables matched by name).
    MultiPoly embedded(const RingPtr& target) const {
        if (same_ring(ring_, target)) return with_ring(target);
        std::vector<int> map_idx;
        if (ring_) {
            for (auto& v : ring_->vars) {
                int j = target->index_of(v);
                if (j < 0) fail(Err::Internal, "embed: variable '" + v + "' missing in target ring");
                map_idx.push_back(j);
            }
        }
        MultiPoly r(target);
        for (auto& [e, c] : terms_) {
            Exponents ne(target->size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) ne[static_cast<std::size_t>(map_idx[i])] = e[i];
            r.add_term(ne, c);
        }
        return r;
    }

    // Dense coefficient list with respect to one variable (index = exponent).
    std::vector<MultiPoly> coeffs_in(int var) const {
        std::vector<MultiPoly> out(degree_in(var) + 1, MultiPoly(ring_));
        if (is_zero_poly()) return {};
        for (auto& [e, c] : terms_) {
            Exponents ne(e);
            unsigned k = ne[static_cast<std::size_t>(var)];
            ne[static_cast<std::size_t>(var)] = 0;
            out[k].add_term(ne, c);
        }
        return out;
    }
    static MultiPoly from_coeffs_in(int var, const std::vector<MultiPoly>& cs, RingPtr ring) {
        MultiPoly r(ring);
        for (std::size_t k = 0; k < cs.size(); ++k) {
            for (auto& [e, c] : cs[k].terms_) {
                Exponents ne(e);
                ne[static_cast<std::size_t>(var)] += static_cast<unsigned>(k);
                r.add_term(ne, c);
            }
        }
        return r;
    }

    template <class Fn>
    auto map_coeffs(Fn&& fn) const -> MultiPoly<std::decay_t<decltype(fn(std::declval<const C&>()))>> {
        using C2 = std::decay_t<decltype(fn(std::declval<const C&>()))>;
        MultiPoly<C2> r(ring_);
        for (auto& [e, c] : terms_) r.add_term(e, fn(c));
        return r;
    }

    static bool expo_divides(const Exponents& d, const Exponents& e) {
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] > e[i]) return false;
        return true;
    }

    MultiPoly with_ring(const RingPtr& ring) const {
        if (ring_ == ring) return *this;
        if (same_ring(ring_, ring)) {
            MultiPoly r = *this;
            r.ring_ = ring;
            return r;
        }
        if (!ring_) {  // ring-less constant
            MultiPoly r(ring);
            for (auto& [e, c] : terms_) r.add_term(Exponents(ring ? ring->size() : 0, 0), c);
            return r;
        }
        return embedded(ring);
    }

private:
    RingPtr ring_;
    Terms terms_;

    Exponents zero_expo() const { return Exponents(ring_ ? ring_->size() : 0, 0); }

    static RingPtr unify(const RingPtr& a, const RingPtr& b) {
        if (a == b || !b) return a;
        if (!a) return b;
        if (same_ring(a, b)) return a;
        fail(Err::Internal, "polynomial rings differ");
    }
    static MultiPoly coerced_pair(const MultiPoly& a, const MultiPoly& b) {
        return a.with_ring(unify(a.ring_, b.ring_));
    }
    static Terms coerced_other(const MultiPoly& o, const RingPtr& ring) {
        return o.with_ring(ring).terms_;
    }

    template <class C2>
    friend class MultiPoly;
};

inline bool is_zero(const MultiPoly<Rational>& p) { return p.is_zero_poly(); }

using QPoly = MultiPoly<Rational>;

// ----- Rational-coefficient helpers (content, normalization) -----

inline Rational poly_content(const QPoly& p) {
    Rational g(0);
    for (auto& [e, c] : p.terms()) g = rat_gcd(g, c);
    return g;
}

// p scaled to integer coefficients, gcd 1, deglex-leading coefficient > 0.
inline QPoly poly_primitive(const QPoly& p) {
    if (p.is_zero_poly()) return p;
    Rational c = poly_content(p);
    if (sgn(p.lead_coeff()) < 0) c = -c;
    return p.scaled(Rational(1) / c);
}

// p scaled so its deglex leading coefficient is 1.
inline QPoly poly_monic(const QPoly& p) {
    if (p.is_zero_poly()) return p;
    return p.scaled(Rational(1) / p.lead_coeff());
}

} // namespace odo

#endif
