#ifndef ODO_FIELD_HPP
#define ODO_FIELD_HPP

// Computable differential coefficient fields: Q, Q(x), the hyperbolic field
// Q(eta)[eta']/(eta'^2 - eta^2 + 1) with eta = cosh x, and any of these with
// adjoined differential constants. Elements are reduced fractions of sparse
// polynomials over Q; in the hyperbolic tower the denominator is kept free of
// eta' (conjugate normalization) and eta'-powers >= 2 are rewritten through
// the defining relation.

#include <memory>
#include <string>
#include <vector>

#include "odo/error.hpp"
#include "odo/multipoly.hpp"
#include "odo/polygcd.hpp"
#include "odo/qlinalg.hpp"

namespace odo {

enum class Tower { Rational, RatFuncX, Hyperbolic };

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

class FieldSpec {
public:
    Tower tower;
    std::vector<std::string> constants;  // adjoined symbols, derivation 0
    RingPtr ring;                        // [constants..., geo vars...]
    int x_idx = -1, eta_idx = -1, etap_idx = -1;

    static FieldSpecPtr make(Tower t, std::vector<std::string> consts = {}) {
        auto s = std::make_shared<FieldSpec>();
        s->tower = t;
        s->constants = std::move(consts);
        std::vector<std::string> vars = s->constants;
        switch (t) {
        case Tower::Rational: break;
        case Tower::RatFuncX:
            s->x_idx = static_cast<int>(vars.size());
            vars.push_back("x");
            break;
        case Tower::Hyperbolic:
            s->eta_idx = static_cast<int>(vars.size());
            vars.push_back("eta");
            s->etap_idx = static_cast<int>(vars.size());
            vars.push_back("eta'");
            break;
        }
        s->ring = make_ring(std::move(vars));
        return s;
    }
    static FieldSpecPtr rationals() {
        static FieldSpecPtr s = make(Tower::Rational);
        return s;
    }
    static FieldSpecPtr ratfunc_x() {
        static FieldSpecPtr s = make(Tower::RatFuncX);
        return s;
    }
    static FieldSpecPtr hyperbolic() {
        static FieldSpecPtr s = make(Tower::Hyperbolic);
        return s;
    }

    std::size_t n_constants() const { return constants.size(); }
    bool same(const FieldSpec& o) const { return tower == o.tower && constants == o.constants; }
    // o embeds into *this by variable-name matching
    bool contains(const FieldSpec& o) const {
        if (o.tower != tower && o.tower != Tower::Rational) return false;
        for (auto& c : o.constants)
            if (std::find(constants.begin(), constants.end(), c) == constants.end()) return false;
        return true;
    }

    FieldSpecPtr extended(std::vector<std::string> extra) const {
        std::vector<std::string> cs = constants;
        for (auto& e : extra) cs.push_back(e);
        return make(tower, std::move(cs));
    }

    // derivative of ring variable v as a polynomial over this ring
    QPoly var_derivative(int v) const {
        if (v == x_idx) return QPoly::constant(ring, Rational(1));
        if (v == eta_idx) return QPoly::variable(ring, etap_idx);
        if (v == etap_idx) return QPoly::variable(ring, eta_idx);
        return QPoly::zero(ring);  // adjoined constants
    }
};

class FieldElement {
public:
    FieldElement() : num_(0), den_(1) {}
    FieldElement(int v) : num_(v), den_(1) {}
    FieldElement(const Rational& r) : num_(QPoly(0)), den_(1) {
        if (!odo::is_zero(r)) num_ = QPoly::constant(nullptr, r);
    }

    static FieldElement from_fraction(FieldSpecPtr spec, QPoly num, QPoly den) {
        FieldElement e;
        e.spec_ = std::move(spec);
        e.num_ = num.with_ring(e.spec_->ring);
        e.den_ = den.with_ring(e.spec_->ring);
        e.reduce();
        return e;
    }
    static FieldElement poly(FieldSpecPtr spec, QPoly num) {
        QPoly one = QPoly::constant(spec->ring, Rational(1));
        return from_fraction(std::move(spec), std::move(num), std::move(one));
    }
    static FieldElement generator(const FieldSpecPtr& spec, int var_idx) {
        return poly(spec, QPoly::variable(spec->ring, var_idx));
    }
    static FieldElement named(const FieldSpecPtr& spec, const std::string& name) {
        int idx = spec->ring->index_of(name);
        if (idx < 0) fail(Err::FieldMismatch, "symbol '" + name + "' is not in this coefficient field");
        return generator(spec, idx);
    }

    const FieldSpecPtr& spec() const { return spec_; }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero_elem() const { return num_.is_zero_poly(); }
    bool is_one() const { return den_.is_constant() && num_.is_constant() && num_.constant_value() == Rational(1); }

    // constant with respect to the derivation (no geometric variable appears)
    bool is_constant() const {
        if (!spec_) return true;
        for (int v : {spec_->x_idx, spec_->eta_idx, spec_->etap_idx})
            if (v >= 0 && (num_.degree_in(v) > 0 || den_.degree_in(v) > 0)) return false;
        return true;
    }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    Rational rat_value() const {
        if (!is_rational()) fail(Err::Internal, "rat_value on non-rational field element");
        if (num_.is_zero_poly()) return Rational(0);
        return num_.constant_value() / den_.constant_value();
    }

    FieldElement operator-() const {
        FieldElement r = *this;
        r.num_ = -r.num_;
        return r;
    }
    FieldElement operator+(const FieldElement& o) const {
        auto [a, b] = aligned(*this, o);
        return make_reduced(a.spec_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    FieldElement operator-(const FieldElement& o) const {
        auto [a, b] = aligned(*this, o);
        return make_reduced(a.spec_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    FieldElement operator*(const FieldElement& o) const {
        auto [a, b] = aligned(*this, o);
        return make_reduced(a.spec_, a.num_ * b.num_, a.den_ * b.den_);
    }
    FieldElement operator/(const FieldElement& o) const {
        if (o.is_zero_elem()) fail(Err::DivisionByZero, "field division by zero");
        auto [a, b] = aligned(*this, o);
        return make_reduced(a.spec_, a.num_ * b.den_, a.den_ * b.num_);
    }
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inv() const { return FieldElement(1) / *this; }

    FieldElement pow(int e) const {
        if (e < 0) return inv().pow(-e);
        FieldElement r(1), b = *this;
        unsigned k = static_cast<unsigned>(e);
        while (k) {
            if (k & 1u) r = r * b;
            if (k >>= 1u) b = b * b;
        }
        return r;
    }

    bool operator==(const FieldElement& o) const { return (*this - o).is_zero_elem(); }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement derived() const {
        if (!spec_ || spec_->tower == Tower::Rational) return FieldElement(0);
        QPoly dn = ring_derivative(num_), dd = ring_derivative(den_);
        return make_reduced(spec_, dn * den_ - num_ * dd, den_ * den_);
    }

    // substitute rational values for adjoined constants; the result lives in
    // the tower with those constants removed
    FieldElement with_constants_substituted(
        const std::vector<std::pair<std::string, Rational>>& subs) const {
        if (!spec_ || spec_->n_constants() == 0) return *this;
        auto value_of = [&](const std::string& name) -> const Rational* {
            for (auto& [n, v] : subs)
                if (n == name) return &v;
            return nullptr;
        };
        std::vector<std::string> remaining;
        for (auto& c : spec_->constants)
            if (!value_of(c)) remaining.push_back(c);
        FieldSpecPtr target = FieldSpec::make(spec_->tower, std::move(remaining));
        auto convert = [&](const QPoly& p) {
            QPoly r(target->ring);
            for (auto& [e, c] : p.terms()) {
                Rational k = c;
                Exponents ne(target->ring->size(), 0);
                for (std::size_t i = 0; i < e.size(); ++i) {
                    const std::string& vn = spec_->ring->vars[i];
                    if (const Rational* v = value_of(vn)) {
                        k *= rat_pow(*v, e[i]);
                    } else {
                        ne[static_cast<std::size_t>(target->ring->index_of(vn))] = e[i];
                    }
                }
                r.add_term(ne, k);
            }
            return r;
        };
        return from_fraction(target, convert(num_), convert(den_));
    }

    // lift into a containing field
    FieldElement lifted(const FieldSpecPtr& target) const {
        if (!spec_) {
            FieldElement r;
            r.spec_ = target;
            r.num_ = num_.with_ring(target->ring);
            r.den_ = den_.with_ring(target->ring);
            return r;
        }
        if (spec_->same(*target)) {
            FieldElement r = *this;
            r.spec_ = target;
            r.num_ = num_.with_ring(target->ring);
            r.den_ = den_.with_ring(target->ring);
            return r;
        }
        if (!target->contains(*spec_)) fail(Err::TowerMismatch, "field element does not embed into target tower");
        FieldElement r;
        r.spec_ = target;
        r.num_ = num_.embedded(target->ring);
        r.den_ = den_.embedded(target->ring);
        return r;
    }

private:
    FieldSpecPtr spec_;  // null = plain rational constant
    QPoly num_, den_;    // reduced; den deglex-monic, eta'-free in the hyperbolic tower

    static FieldElement make_reduced(FieldSpecPtr spec, QPoly num, QPoly den) {
        FieldElement e;
        e.spec_ = std::move(spec);
        e.num_ = std::move(num);
        e.den_ = std::move(den);
        e.reduce();
        return e;
    }

    static std::pair<FieldElement, FieldElement> aligned(const FieldElement& a, const FieldElement& b) {
        if (a.spec_ == b.spec_ || (a.spec_ && b.spec_ && a.spec_->same(*b.spec_)))
            return {a, b.spec_ == a.spec_ ? b : b.lifted(a.spec_)};
        if (!a.spec_) return {b.spec_ ? a.lifted(b.spec_) : a, b};
        if (!b.spec_) return {a, b.lifted(a.spec_)};
        if (a.spec_->contains(*b.spec_)) return {a, b.lifted(a.spec_)};
        if (b.spec_->contains(*a.spec_)) return {a.lifted(b.spec_), b};
        fail(Err::TowerMismatch, "operands live in incompatible coefficient fields");
    }

    // eta'^k -> (eta^2-1)^(k/2) * eta'^(k mod 2)
    QPoly relation_reduced(const QPoly& p) const {
        if (!spec_ || spec_->etap_idx < 0) return p;
        std::size_t ep = static_cast<std::size_t>(spec_->etap_idx);
        bool needed = false;
        for (auto& [e, c] : p.terms())
            if (e[ep] >= 2) { needed = true; break; }
        if (!needed) return p;
        QPoly eta2m1 = QPoly::variable(spec_->ring, spec_->eta_idx, 2) - QPoly::constant(spec_->ring, Rational(1));
        QPoly r(spec_->ring);
        for (auto& [e, c] : p.terms()) {
            unsigned k = e[ep];
            if (k < 2) {
                r.add_term(e, c);
                continue;
            }
            Exponents ne(e);
            ne[ep] = k % 2;
            QPoly t(spec_->ring);
            t.add_term(ne, c);
            r += t * eta2m1.pow(k / 2);
        }
        return r;
    }

    QPoly ring_derivative(const QPoly& p) const {
        QPoly r(spec_->ring);
        for (std::size_t v = 0; v < spec_->ring->size(); ++v) {
            QPoly dv = spec_->var_derivative(static_cast<int>(v));
            if (dv.is_zero_poly()) continue;
            r += p.partial_derivative(static_cast<int>(v)) * dv;
        }
        return relation_reduced(r);
    }

    void reduce() {
        if (spec_) {
            num_ = relation_reduced(num_);
            den_ = relation_reduced(den_);
        }
        if (den_.is_zero_poly()) fail(Err::DivisionByZero, "zero denominator");
        if (num_.is_zero_poly()) {
            den_ = QPoly::constant(spec_ ? spec_->ring : nullptr, Rational(1));
            return;
        }
        if (spec_ && spec_->etap_idx >= 0 && den_.degree_in(spec_->etap_idx) > 0) {
            // conjugate to clear eta' from the denominator
            QPoly conj(spec_->ring);
            std::size_t ep = static_cast<std::size_t>(spec_->etap_idx);
            for (auto& [e, c] : den_.terms()) conj.add_term(e, (e[ep] % 2) ? -c : c);
            num_ = relation_reduced(num_ * conj);
            den_ = relation_reduced(den_ * conj);
            if (den_.degree_in(spec_->etap_idx) > 0) fail(Err::Internal, "conjugate normalization failed");
        }
        QPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        Rational lc = den_.lead_coeff();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
};

inline bool is_zero(const FieldElement& e) { return e.is_zero_elem(); }
inline FieldElement derive(const FieldElement& e) { return e.derived(); }
inline Rational derive(const Rational&) { return Rational(0); }

template <class C>
inline bool is_zero(const MultiPoly<C>& p) { return p.is_zero_poly(); }

template <class C>
inline MultiPoly<C> derive(const MultiPoly<C>& p) {
    return p.map_coeffs([](const C& c) { return derive(c); });
}

// ----- linearize: affine elements in adjoined constants -> linear system over Q -----

// Each element must be affine-linear in `unknowns` (a subset of its adjoined
// constants). Denominators are cleared; one row per residual monomial of the
// canonical basis. Returns A, b with the meaning A*c = b.
inline LinearSystem linearize(const std::vector<FieldElement>& elements,
                              const std::vector<std::string>& unknowns) {
    LinearSystem sys;
    sys.unknowns = unknowns;
    struct RowKey {
        std::size_t elem;
        Exponents residual;
        bool operator<(const RowKey& o) const {
            if (elem != o.elem) return elem < o.elem;
            return residual < o.residual;
        }
    };
    std::map<RowKey, std::pair<QVec, Rational>> rows;

    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
        const FieldElement& e = elements[idx];
        if (e.is_zero_elem()) continue;
        const FieldSpecPtr& spec = e.spec();
        std::vector<int> unk_idx(unknowns.size(), -1);
        if (spec) {
            for (std::size_t j = 0; j < unknowns.size(); ++j)
                unk_idx[j] = spec->ring->index_of(unknowns[j]);
        }
        for (auto& [expo, coeff] : e.num().terms()) {
            int hit = -1;
            unsigned long unk_deg = 0;
            Exponents residual = expo;
            for (std::size_t j = 0; j < unknowns.size(); ++j) {
                if (unk_idx[j] < 0) continue;
                unsigned d = expo[static_cast<std::size_t>(unk_idx[j])];
                unk_deg += d;
                if (d > 0) {
                    hit = static_cast<int>(j);
                    residual[static_cast<std::size_t>(unk_idx[j])] = 0;
                }
            }
            if (unk_deg >= 2)
                fail(Err::NotLinear, "element has degree >= 2 in the unknown constants");
            auto& row = rows[RowKey{idx, residual}];
            if (row.first.empty()) row.first.assign(unknowns.size(), Rational(0));
            if (hit < 0)
                row.second -= coeff;  // moves to the right-hand side
            else
                row.first[static_cast<std::size_t>(hit)] += coeff;
        }
    }
    for (auto& [key, row] : rows) {
        sys.a.push_back(row.first);
        sys.b.push_back(row.second);
    }
    return sys;
}

} // namespace odo

#endif
