#ifndef ODO_ERROR_HPP
#define ODO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace odo {

// Stable error codes surfaced through the CLI (exit code 3 + code string).
enum class Err {
    DivisionByZero,
    TowerMismatch,
    NotLinear,
    Inconsistent,
    InexactDivision,
    DomainMismatch,
    DivisionByZeroOperator,
    NoninvertibleLeadingCoeff,
    KOutOfRange,
    NotSquare,
    ZeroInput,
    NotCommuting,
    NonconstantResultant,
    NotApplicable,
    ArityMismatch,
    LeadingCoeffInIdeal,
    RemainderNonzero,
    PointNotOnCurve,
    PointInZ,
    ParamNotOnCurve,
    MMultipleOfN,
    MissingAssignment,
    NotNormalForm,
    UnsupportedTower,
    NotOrder2,
    NotPolynomial,
    ParseError,
    FieldMismatch,
    RankWarning,
    Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const { return code_; }
    const char* code_name() const { return err_name(code_); }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline const char* err_name(Err e) {
    switch (e) {
    case Err::DivisionByZero: return "DIVISION_BY_ZERO";
    case Err::TowerMismatch: return "TOWER_MISMATCH";
    case Err::NotLinear: return "NOT_LINEAR";
    case Err::Inconsistent: return "INCONSISTENT";
    case Err::InexactDivision: return "INEXACT_DIVISION";
    case Err::DomainMismatch: return "DOMAIN_MISMATCH";
    case Err::DivisionByZeroOperator: return "DIVISION_BY_ZERO_OPERATOR";
    case Err::NoninvertibleLeadingCoeff: return "NONINVERTIBLE_LEADING_COEFF";
    case Err::KOutOfRange: return "K_OUT_OF_RANGE";
    case Err::NotSquare: return "NOT_SQUARE";
    case Err::ZeroInput: return "ZERO_INPUT";
    case Err::NotCommuting: return "NOT_COMMUTING";
    case Err::NonconstantResultant: return "NONCONSTANT_RESULTANT";
    case Err::NotApplicable: return "NOT_APPLICABLE";
    case Err::ArityMismatch: return "ARITY_MISMATCH";
    case Err::LeadingCoeffInIdeal: return "LEADING_COEFF_IN_IDEAL";
    case Err::RemainderNonzero: return "REMAINDER_NONZERO";
    case Err::PointNotOnCurve: return "POINT_NOT_ON_CURVE";
    case Err::PointInZ: return "POINT_IN_Z";
    case Err::ParamNotOnCurve: return "PARAM_NOT_ON_CURVE";
    case Err::MMultipleOfN: return "M_MULTIPLE_OF_N";
    case Err::MissingAssignment: return "MISSING_ASSIGNMENT";
    case Err::NotNormalForm: return "NOT_NORMAL_FORM";
    case Err::UnsupportedTower: return "UNSUPPORTED_TOWER";
    case Err::NotOrder2: return "NOT_ORDER_2";
    case Err::NotPolynomial: return "NOT_POLYNOMIAL";
    case Err::ParseError: return "PARSE_ERROR";
    case Err::FieldMismatch: return "FIELD_MISMATCH";
    case Err::RankWarning: return "RANK_WARNING";
    case Err::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

} // namespace odo

#endif
