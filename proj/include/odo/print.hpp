#ifndef ODO_PRINT_HPP
#define ODO_PRINT_HPP

// Canonical ASCII printing. Everything printed here re-parses to the same
// value through the expression grammar (D, x, eta, eta', s, lambda, mu, mu1,
// mu2; '*', '/', '^', '+', '-').

#include <string>

#include "odo/diffop.hpp"
#include "odo/field.hpp"
#include "odo/multipoly.hpp"

namespace odo {

inline std::string mono_str(const Exponents& e, const std::vector<std::string>& names,
                            const Rational& coeff) {
    std::string s;
    bool have_var = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (have_var || coeff != 1) s += "*";
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
        have_var = true;
    }
    if (coeff != 1 || !have_var) return rat_str(coeff) + s;
    return s;
}

// rational-coefficient polynomial, terms in descending deglex
inline std::string poly_str(const QPoly& p) {
    if (p.is_zero_poly()) return "0";
    const auto& names = p.ring() ? p.ring()->vars : std::vector<std::string>{};
    std::string s;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        bool neg = sgn(c) < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            s += (neg ? "-" : "") + mono_str(e, names, a);
            first = false;
        } else {
            s += (neg ? " - " : " + ") + mono_str(e, names, a);
        }
    }
    return s;
}

// true when the string can be used as a factor of a '*'/'/' chain unchanged
inline bool is_product_safe(const QPoly& p) { return p.term_count() <= 1; }

// single power "v" or "v^k" with unit coefficient
inline bool is_pure_power(const QPoly& p) {
    if (p.term_count() != 1 || p.lead_coeff() != 1) return false;
    unsigned nonzero = 0;
    for (unsigned x : p.lead_expo()) nonzero += (x > 0) ? 1 : 0;
    return nonzero == 1;
}

// field element as a factor usable inside a product chain
inline std::string fe_factor_str(const FieldElement& e) {
    if (e.is_zero_elem()) return "0";
    std::string num = is_product_safe(e.num()) ? poly_str(e.num()) : "(" + poly_str(e.num()) + ")";
    if (e.den().is_constant()) return num;
    std::string den = is_pure_power(e.den()) ? poly_str(e.den()) : "(" + poly_str(e.den()) + ")";
    return num + "/" + den;
}

inline std::string fe_str(const FieldElement& e) { return fe_factor_str(e); }

inline bool fe_is_negative_lead(const FieldElement& e) {
    return !e.is_zero_elem() && sgn(e.num().lead_coeff()) < 0;
}

// polynomial in spectral variables with field-element coefficients
inline std::string spoly_str(const MultiPoly<FieldElement>& p) {
    if (p.is_zero_poly()) return "0";
    const auto& names = p.ring() ? p.ring()->vars : std::vector<std::string>{};
    std::string s;
    bool first = true;
    for (auto& [e, c] : p.terms()) {
        bool neg = fe_is_negative_lead(c);
        FieldElement a = neg ? -c : c;
        std::string body;
        bool unit = a.is_one();
        if (!unit || expo_degree(e) == 0) body = fe_factor_str(a);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += names[i];
            if (e[i] > 1) body += "^" + std::to_string(e[i]);
        }
        if (first) {
            s += (neg ? "-" : "") + body;
            first = false;
        } else {
            s += (neg ? " - " : " + ") + body;
        }
    }
    return s;
}

// ----- operator printing -----

struct CoeffPiece {
    bool negative = false;
    std::string body;       // absolute-value factor string
    bool is_unit = false;   // body would be "1"
};

inline CoeffPiece coeff_piece(const Rational& c) {
    Rational a = sgn(c) < 0 ? Rational(-c) : c;
    return {sgn(c) < 0, rat_str(a), a == 1};
}
inline CoeffPiece coeff_piece(const FieldElement& c) {
    bool neg = fe_is_negative_lead(c);
    FieldElement a = neg ? -c : c;
    return {neg, fe_factor_str(a), a.is_one()};
}
inline CoeffPiece coeff_piece(const MultiPoly<FieldElement>& c) {
    // pull the sign of the deglex-leading coefficient's leading rational
    bool neg = !c.is_zero_poly() && fe_is_negative_lead(c.lead_coeff());
    MultiPoly<FieldElement> a = neg ? -c : c;
    std::string s = spoly_str(a);
    if (a.term_count() > 1) s = "(" + s + ")";
    bool unit = a.term_count() == 1 && expo_degree(a.lead_expo()) == 0 && a.lead_coeff().is_one();
    return {neg, s, unit};
}
inline CoeffPiece coeff_piece(const QPoly& c) {
    bool neg = !c.is_zero_poly() && sgn(c.lead_coeff()) < 0;
    QPoly a = neg ? -c : c;
    std::string s = poly_str(a);
    if (!is_product_safe(a)) s = "(" + s + ")";
    bool unit = a.is_constant() && !a.is_zero_poly() && a.constant_value() == 1;
    return {neg, s, unit};
}

template <class D>
std::string op_str(const DiffOp<D>& p, const std::string& dsym = "D") {
    if (p.is_zero_op()) return "0";
    std::string s;
    bool first = true;
    for (int i = p.order(); i >= 0; --i) {
        D c = p.coeff_at(i);
        if (is_zero(c)) continue;
        CoeffPiece piece = coeff_piece(c);
        std::string body;
        if (i == 0) {
            body = piece.body;
        } else {
            std::string dpart = (i == 1) ? dsym : dsym + "^" + std::to_string(i);
            body = piece.is_unit ? dpart : piece.body + "*" + dpart;
        }
        if (first) {
            s += (piece.negative ? "-" : "") + body;
            first = false;
        } else {
            s += (piece.negative ? " - " : " + ") + body;
        }
    }
    return s;
}

} // namespace odo

#endif
