#include "odo/builtin.hpp"

#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "odo/parse.hpp"

namespace odo {

namespace {

std::string data_dir() {
    if (const char* env = std::getenv("ODO_DATA_DIR")) return env;
#ifdef ODO_DEFAULT_DATA_DIR
    return ODO_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

std::map<std::string, NamedOperator> load_operators() {
    std::map<std::string, NamedOperator> out;
    std::string path = data_dir() + "/operators.json";
    std::ifstream in(path);
    if (!in) return out;
    nlohmann::json j;
    in >> j;
    for (auto& [name, entry] : j.items())
        out[name] = NamedOperator{entry.at("field").get<std::string>(),
                                  entry.at("expr").get<std::string>()};
    return out;
}

} // namespace

const std::map<std::string, NamedOperator>& builtin_operators() {
    static const std::map<std::string, NamedOperator> ops = load_operators();
    return ops;
}

std::optional<NamedOperator> builtin_lookup(const std::string& name) {
    auto& ops = builtin_operators();
    auto it = ops.find(name);
    if (it == ops.end()) return std::nullopt;
    return it->second;
}

FieldSpecPtr field_spec_by_name(const std::string& name) {
    std::string base = name;
    std::vector<std::string> consts;
    if (base.rfind("const_ext(", 0) == 0 && base.back() == ')') {
        std::string sym = base.substr(10, base.size() - 11);
        return FieldSpec::make(Tower::RatFuncX, {sym});
    }
    std::size_t plus;
    while ((plus = base.rfind('+')) != std::string::npos) {
        consts.insert(consts.begin(), base.substr(plus + 1));
        base = base.substr(0, plus);
    }
    if (base == "rational") return FieldSpec::make(Tower::Rational, consts);
    if (base == "ratfunc_x") return FieldSpec::make(Tower::RatFuncX, consts);
    if (base == "hyperbolic") return FieldSpec::make(Tower::Hyperbolic, consts);
    fail(Err::FieldMismatch, "unknown coefficient field '" + name + "'");
}

std::string field_spec_name(const FieldSpecPtr& spec) {
    std::string base;
    switch (spec->tower) {
    case Tower::Rational: base = "rational"; break;
    case Tower::RatFuncX: base = "ratfunc_x"; break;
    case Tower::Hyperbolic: base = "hyperbolic"; break;
    }
    for (auto& c : spec->constants) base += "+" + c;
    return base;
}

DiffOp<FieldElement> resolve_operator(const std::string& text, const FieldSpecPtr& field) {
    if (auto named = builtin_lookup(text)) {
        FieldSpecPtr declared = field_spec_by_name(named->field);
        DiffOp<FieldElement> op = parse_operator(named->expr, declared);
        if (field && !field->same(*declared)) {
            if (!field->contains(*declared))
                fail(Err::FieldMismatch, "builtin '" + text + "' lives in field '" + named->field +
                                             "', incompatible with the requested field");
            std::vector<FieldElement> cs;
            for (int i = 0; i <= op.order(); ++i) cs.push_back(op.coeff_at(i).lifted(field));
            op = DiffOp<FieldElement>::from_coeffs(std::move(cs));
        }
        return op;
    }
    return parse_operator(text, field);
}

} // namespace odo
