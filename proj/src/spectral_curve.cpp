#include "odo/spectral_curve.hpp"

#include <numeric>
#include <sstream>

#include "odo/polygcd.hpp"

namespace odo {

QPoly squarefree_part(const QPoly& h) {
    if (h.is_zero_poly()) fail(Err::ZeroInput, "square-free part of 0");
    return poly_monic(poly_radical(h));
}

std::optional<int> detect_power(const QPoly& h, const QPoly& f) {
    if (h.is_zero_poly() || f.is_zero_poly() || f.is_constant()) return std::nullopt;
    unsigned long dh = h.total_degree(), df = f.total_degree();
    if (df == 0 || dh % df != 0) return std::nullopt;
    int r = static_cast<int>(dh / df);
    QPoly fr = f.pow(static_cast<unsigned>(r));
    Rational unit = h.lead_coeff() / fr.lead_coeff();
    if (fr.scaled(unit) != h) return std::nullopt;
    return r;
}

TermOrder term_order_parse(const std::string& text, const PolyRing& ring) {
    TermOrder ord;
    std::string kind = text;
    std::string rest;
    if (auto pos = text.find(':'); pos != std::string::npos) {
        kind = text.substr(0, pos);
        rest = text.substr(pos + 1);
    }
    if (kind == "degrevlex") ord.kind = TermOrder::Kind::DegRevLex;
    else if (kind == "deglex") ord.kind = TermOrder::Kind::DegLex;
    else if (kind == "lex") ord.kind = TermOrder::Kind::Lex;
    else if (kind == "wdeg") ord.kind = TermOrder::Kind::WDeg;
    else fail(Err::ParseError, "unknown term order '" + kind + "'");

    if (!rest.empty()) {
        std::vector<std::string> items;
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ',')) items.push_back(item);
        if (ord.kind == TermOrder::Kind::WDeg) {
            for (auto& it : items) ord.weights.push_back(std::stol(it));
        } else {
            for (auto& it : items) {
                int idx = ring.index_of(it);
                if (idx < 0) fail(Err::ParseError, "unknown variable '" + it + "' in term order");
                ord.priority.push_back(idx);
            }
        }
    }
    return ord;
}

std::string term_order_str(const TermOrder& ord, const PolyRing& ring) {
    std::string s;
    switch (ord.kind) {
    case TermOrder::Kind::DegRevLex: s = "degrevlex"; break;
    case TermOrder::Kind::DegLex: s = "deglex"; break;
    case TermOrder::Kind::Lex: s = "lex"; break;
    case TermOrder::Kind::WDeg: s = "wdeg"; break;
    }
    if (ord.kind == TermOrder::Kind::WDeg && !ord.weights.empty()) {
        s += ":";
        for (std::size_t i = 0; i < ord.weights.size(); ++i)
            s += (i ? "," : "") + std::to_string(ord.weights[i]);
    } else if (!ord.priority.empty()) {
        s += ":";
        for (std::size_t i = 0; i < ord.priority.size(); ++i)
            s += (i ? "," : "") + ring.vars[static_cast<std::size_t>(ord.priority[i])];
    }
    return s;
}

namespace {

bool in_constant_operators(const DiffOp<FieldElement>& p) {
    for (int i = 0; i <= p.order(); ++i)
        if (!p.coeff_at(i).is_constant()) return false;
    return true;
}

QPoly constant_resultant(const DiffOp<FieldElement>& p, const DiffOp<FieldElement>& q,
                         const RingPtr& ring) {
    return to_qpoly(diff_resultant(p, q, ring));
}

} // namespace

SpectralCurve planar_bc(const DiffOp<FieldElement>& p, const DiffOp<FieldElement>& q,
                        const TermOrder* order) {
    if (p.order() < 1 || q.order() < 1)
        fail(Err::NotApplicable, "both operators must have positive order");
    if (p == q)
        fail(Err::NotApplicable, "the pair (L, L) generates no curve");
    if (in_constant_operators(p) && in_constant_operators(q))
        fail(Err::NotApplicable, "constant-coefficient pair lies in C[D]");
    if (!commutator(p, q).is_zero_op())
        fail(Err::NotCommuting, "operators do not commute");

    SpectralCurve c;
    c.ring = make_ring({"lambda", "mu"});
    c.order = order ? *order : TermOrder{};
    QPoly h = constant_resultant(p, q, c.ring);
    QPoly f = squarefree_part(h);
    auto r = detect_power(h, f);
    if (!r) fail(Err::Internal, "resultant is not a power of its square-free part");
    c.rank = *r;
    c.generators = {f};
    c.groebner = buchberger(c.generators, c.order);
    return c;
}

SpectralCurve space_bc(const DiffOp<FieldElement>& l, const DiffOp<FieldElement>& a1,
                       const DiffOp<FieldElement>& a2, const TermOrder* order) {
    for (auto [x, y] : {std::pair{&l, &a1}, {&l, &a2}, {&a1, &a2}})
        if (!commutator(*x, *y).is_zero_op())
            fail(Err::NotCommuting, "operators do not commute pairwise");

    SpectralCurve c;
    c.ring = make_ring({"lambda", "mu1", "mu2"});
    c.order = order ? *order : TermOrder{};

    int g = std::gcd(std::gcd(l.order(), a1.order()), a2.order());
    c.rank = g;
    if (g != 1)
        c.warnings.push_back(std::string(err_name(Err::RankWarning)) +
                             ": gcd of orders is " + std::to_string(g) +
                             ", the three-generator description assumes rank 1");

    QPoly h1 = constant_resultant(l, a1, make_ring({"lambda", "mu1"}));
    QPoly h2 = constant_resultant(l, a2, make_ring({"lambda", "mu2"}));
    QPoly h3 = constant_resultant(a1, a2, make_ring({"mu1", "mu2"}));
    c.generators = {squarefree_part(h1).embedded(c.ring), squarefree_part(h2).embedded(c.ring),
                    squarefree_part(h3).embedded(c.ring)};
    c.groebner = buchberger(c.generators, c.order);
    return c;
}

DiffOp<FieldElement> operator_substitute(const QPoly& g,
                                         const std::vector<DiffOp<FieldElement>>& ops) {
    std::size_t nvars = g.ring() ? g.ring()->size() : 0;
    if (nvars != ops.size())
        fail(Err::ArityMismatch, "polynomial has " + std::to_string(nvars) +
                                     " variables but " + std::to_string(ops.size()) +
                                     " operators were given");
    using Op = DiffOp<FieldElement>;
    // cache operator powers per variable
    std::vector<std::vector<Op>> powers(ops.size());
    for (std::size_t v = 0; v < ops.size(); ++v) powers[v].push_back(Op::constant(FieldElement(1)));
    auto power = [&](std::size_t v, unsigned e) -> const Op& {
        while (powers[v].size() <= e) powers[v].push_back(powers[v].back() * ops[v]);
        return powers[v][e];
    };
    Op acc;
    for (auto& [e, coeff] : g.terms()) {
        Op term = Op::constant(FieldElement(coeff));
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = term * power(v, e[v]);
        acc += term;
    }
    return acc;
}

MultiPoly<FieldElement> reduce_mod_curve(const MultiPoly<FieldElement>& p,
                                         const SpectralCurve& curve) {
    std::vector<MultiPoly<FieldElement>> basis;
    basis.reserve(curve.groebner.size());
    for (auto& g : curve.groebner)
        basis.push_back(g.embedded(p.ring() ? p.ring() : curve.ring)
                            .map_coeffs([](const Rational& r) { return FieldElement(r); }));
    return nf_reduce(p, basis, curve.order);
}

QPoly reduce_mod_curve(const QPoly& p, const SpectralCurve& curve) {
    std::vector<QPoly> basis;
    for (auto& g : curve.groebner) basis.push_back(g.embedded(p.ring() ? p.ring() : curve.ring));
    return nf_reduce(p, basis, curve.order);
}

Rational evaluate_at(const QPoly& p, const CurvePoint& pt) {
    std::size_t nvars = p.ring() ? p.ring()->size() : 0;
    if (pt.coords.size() != nvars) fail(Err::ArityMismatch, "point arity mismatch");
    Rational acc(0);
    for (auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t v = 0; v < e.size(); ++v) t *= rat_pow(pt.coords[v], e[v]);
        acc += t;
    }
    return acc;
}

bool point_on_curve(const SpectralCurve& curve, const CurvePoint& pt) {
    for (auto& g : curve.generators)
        if (!is_zero(evaluate_at(g, pt))) return false;
    return true;
}

} // namespace odo
