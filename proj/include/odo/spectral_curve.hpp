#ifndef ODO_SPECTRAL_CURVE_HPP
#define ODO_SPECTRAL_CURVE_HPP

// Burchnall-Chaundy ideals and spectral curves: square-free parts of
// differential resultants, the h = f^r power structure, planar and space
// curve generators, substitution of operators into BC polynomials, and
// normal-form reduction modulo the curve ideal.

#include <optional>
#include <string>
#include <vector>

#include "odo/dres.hpp"
#include "odo/groebner.hpp"

namespace odo {

struct SpectralCurve {
    RingPtr ring;                    // spectral variables (lambda, mu...) over the constants
    std::vector<QPoly> generators;   // 1 generator = planar, 3 = space
    std::vector<QPoly> groebner;
    TermOrder order;
    int rank = 0;
    std::vector<std::string> warnings;

    bool planar() const { return generators.size() == 1; }
};

struct CurvePoint {
    std::vector<Rational> coords;
};

// char-0 square-free part (the radical), deglex-monic
QPoly squarefree_part(const QPoly& h);

// r with unit * f^r = h, if it exists
std::optional<int> detect_power(const QPoly& h, const QPoly& f);

TermOrder term_order_parse(const std::string& text, const PolyRing& ring);
std::string term_order_str(const TermOrder& ord, const PolyRing& ring);

SpectralCurve planar_bc(const DiffOp<FieldElement>& p, const DiffOp<FieldElement>& q,
                        const TermOrder* order = nullptr);

SpectralCurve space_bc(const DiffOp<FieldElement>& l, const DiffOp<FieldElement>& a1,
                       const DiffOp<FieldElement>& a2, const TermOrder* order = nullptr);

// e_A(g): substitute the commuting operators for the spectral variables
DiffOp<FieldElement> operator_substitute(const QPoly& g,
                                         const std::vector<DiffOp<FieldElement>>& ops);

// normal form modulo the curve ideal (extended to Sigma coefficients)
MultiPoly<FieldElement> reduce_mod_curve(const MultiPoly<FieldElement>& p,
                                         const SpectralCurve& curve);
QPoly reduce_mod_curve(const QPoly& p, const SpectralCurve& curve);

bool point_on_curve(const SpectralCurve& curve, const CurvePoint& pt);

// evaluate a constant-coefficient polynomial at a rational point
Rational evaluate_at(const QPoly& p, const CurvePoint& pt);

} // namespace odo

#endif
