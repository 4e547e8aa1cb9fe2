#ifndef ODO_BUILTIN_HPP
#define ODO_BUILTIN_HPP

// Named example operators shipped as data files (data/operators.json), so the
// CLI and the golden tests reference identical inputs. The data directory is
// ODO_DATA_DIR when set, otherwise the compiled-in default.

#include <map>
#include <optional>
#include <string>

#include "odo/diffop.hpp"
#include "odo/field.hpp"

namespace odo {

struct NamedOperator {
    std::string field;
    std::string expr;
};

const std::map<std::string, NamedOperator>& builtin_operators();

// "rational", "ratfunc_x", "hyperbolic", each optionally with adjoined
// constants as "+s+c1"; "const_ext(s)" is shorthand for "ratfunc_x+s".
FieldSpecPtr field_spec_by_name(const std::string& name);
std::string field_spec_name(const FieldSpecPtr& spec);

// resolves a builtin name or parses the text as an operator expression
DiffOp<FieldElement> resolve_operator(const std::string& text, const FieldSpecPtr& field);
std::optional<NamedOperator> builtin_lookup(const std::string& name);

} // namespace odo

#endif
