#ifndef ODO_PARSE_HPP
#define ODO_PARSE_HPP

// Expression grammar shared by the CLI and the JSON re-ingestion paths:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := rational | 'x' | 'eta' | "eta'" | 's' | 'D'
//           | 'lambda' | 'mu' | 'mu1' | 'mu2' | '(' expr ')'
// Implicit multiplication is a parse error; D may not appear in a
// denominator. Operator parsing rejects spectral variables; fraction parsing
// rejects D.

#include <string>
#include <utility>

#include "odo/diffop.hpp"
#include "odo/field.hpp"

namespace odo {

DiffOp<FieldElement> parse_operator(const std::string& text, const FieldSpecPtr& field);

// fraction of polynomials in the given spectral variables over the field
std::pair<MultiPoly<FieldElement>, MultiPoly<FieldElement>>
parse_spoly_fraction(const std::string& text, const FieldSpecPtr& field, const RingPtr& spectral);

MultiPoly<FieldElement> parse_spoly(const std::string& text, const FieldSpecPtr& field,
                                    const RingPtr& spectral);

// constant-coefficient polynomial (spectral variables only)
QPoly parse_qpoly(const std::string& text, const RingPtr& spectral);

FieldElement parse_field_element(const std::string& text, const FieldSpecPtr& field);

} // namespace odo

#endif
