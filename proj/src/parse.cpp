#include "odo/parse.hpp"

#include <cctype>
#include <memory>
#include <vector>

namespace odo {
namespace {

struct Token {
    enum Kind { Int, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Int, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            if (i < s.size() && s[i] == '\'') {
                name += '\'';
                ++i;
            }
            out.push_back({Token::Name, name, start});
            continue;
        }
        Token::Kind k;
        switch (c) {
        case '+': k = Token::Plus; break;
        case '-': k = Token::Minus; break;
        case '*': k = Token::Star; break;
        case '/': k = Token::Slash; break;
        case '^': k = Token::Caret; break;
        case '(': k = Token::LParen; break;
        case ')': k = Token::RParen; break;
        default:
            fail(Err::ParseError, "unexpected character '" + std::string(1, c) + "' at position " +
                                      std::to_string(start));
        }
        out.push_back({k, std::string(1, c), start});
        ++i;
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

struct Node {
    enum Kind { Int, Sym, Add, Sub, Mul, Div, Pow, Neg } kind;
    Rational value;
    std::string name;
    std::unique_ptr<Node> a, b;
    unsigned exp = 0;
    std::size_t pos = 0;
};
using NodePtr = std::unique_ptr<Node>;

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    NodePtr parse() {
        NodePtr e = expr();
        expect(Token::End, "end of input");
        return e;
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    const Token& peek() const { return toks_[i_]; }
    Token take() { return toks_[i_++]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            fail(Err::ParseError, "expected " + what + " at position " + std::to_string(peek().pos));
        take();
    }

    NodePtr expr() {
        bool neg = false;
        if (peek().kind == Token::Minus) {
            take();
            neg = true;
        }
        NodePtr acc = term();
        if (neg) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Neg;
            n->a = std::move(acc);
            acc = std::move(n);
        }
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool sub = take().kind == Token::Minus;
            auto n = std::make_unique<Node>();
            n->kind = sub ? Node::Sub : Node::Add;
            n->a = std::move(acc);
            n->b = term();
            acc = std::move(n);
        }
        return acc;
    }
    NodePtr term() {
        NodePtr acc = factor();
        while (peek().kind == Token::Star || peek().kind == Token::Slash) {
            bool div = take().kind == Token::Slash;
            auto n = std::make_unique<Node>();
            n->kind = div ? Node::Div : Node::Mul;
            n->pos = toks_[i_ - 1].pos;
            n->a = std::move(acc);
            n->b = factor();
            acc = std::move(n);
        }
        return acc;
    }
    NodePtr factor() {
        NodePtr b = base();
        if (peek().kind == Token::Caret) {
            std::size_t pos = take().pos;
            if (peek().kind != Token::Int)
                fail(Err::ParseError, "expected exponent at position " + std::to_string(peek().pos));
            auto n = std::make_unique<Node>();
            n->kind = Node::Pow;
            n->a = std::move(b);
            n->exp = static_cast<unsigned>(std::stoul(take().text));
            n->pos = pos;
            return n;
        }
        return b;
    }
    NodePtr base() {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Int: {
            auto n = std::make_unique<Node>();
            n->kind = Node::Int;
            n->value = rat_parse(take().text);
            n->pos = t.pos;
            return n;
        }
        case Token::Name: {
            auto n = std::make_unique<Node>();
            n->kind = Node::Sym;
            n->name = t.text;
            n->pos = t.pos;
            take();
            return n;
        }
        case Token::LParen: {
            take();
            NodePtr e = expr();
            expect(Token::RParen, "')'");
            return e;
        }
        default:
            fail(Err::ParseError, "unexpected token '" + t.text + "' at position " +
                                      std::to_string(t.pos));
        }
    }
};

// ----- operator evaluation: values are DiffOp<FieldElement> -----

DiffOp<FieldElement> eval_op(const Node& n, const FieldSpecPtr& field) {
    using Op = DiffOp<FieldElement>;
    switch (n.kind) {
    case Node::Int: return Op::constant(FieldElement(n.value));
    case Node::Sym: {
        if (n.name == "D") return Op::d_power(1);
        if (n.name == "lambda" || n.name == "mu" || n.name == "mu1" || n.name == "mu2")
            fail(Err::FieldMismatch,
                 "spectral variable '" + n.name + "' is not allowed in an operator expression");
        int idx = field->ring->index_of(n.name);
        if (idx < 0)
            fail(Err::FieldMismatch,
                 "symbol '" + n.name + "' is not available in the selected coefficient field");
        return Op::constant(FieldElement::generator(field, idx));
    }
    case Node::Add: return eval_op(*n.a, field) + eval_op(*n.b, field);
    case Node::Sub: return eval_op(*n.a, field) - eval_op(*n.b, field);
    case Node::Neg: return -eval_op(*n.a, field);
    case Node::Mul: return eval_op(*n.a, field) * eval_op(*n.b, field);
    case Node::Div: {
        Op a = eval_op(*n.a, field), b = eval_op(*n.b, field);
        if (b.is_zero_op()) fail(Err::DivisionByZero, "division by zero in expression");
        if (b.order() > 0)
            fail(Err::ParseError,
                 "operator in a denominator at position " + std::to_string(n.pos));
        return a.scaled(b.coeff_at(0).inv());
    }
    case Node::Pow: return eval_op(*n.a, field).pow(n.exp);
    }
    fail(Err::Internal, "bad AST node");
}

// ----- commutative fraction evaluation over spectral polynomials -----

struct Frac {
    MultiPoly<FieldElement> num, den;
};

Frac eval_frac(const Node& n, const FieldSpecPtr& field, const RingPtr& spectral) {
    using SP = MultiPoly<FieldElement>;
    auto one = SP::constant(spectral, FieldElement(1));
    switch (n.kind) {
    case Node::Int: return {SP::constant(spectral, FieldElement(n.value)), one};
    case Node::Sym: {
        if (n.name == "D")
            fail(Err::ParseError, "'D' is not allowed in a polynomial or fraction expression");
        int sidx = spectral->index_of(n.name);
        if (sidx >= 0) return {SP::variable(spectral, sidx, 1, FieldElement(1)), one};
        int idx = field->ring->index_of(n.name);
        if (idx < 0)
            fail(Err::FieldMismatch,
                 "symbol '" + n.name + "' is not available in the selected coefficient field");
        return {SP::constant(spectral, FieldElement::generator(field, idx)), one};
    }
    case Node::Add: {
        Frac a = eval_frac(*n.a, field, spectral), b = eval_frac(*n.b, field, spectral);
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    case Node::Sub: {
        Frac a = eval_frac(*n.a, field, spectral), b = eval_frac(*n.b, field, spectral);
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    case Node::Neg: {
        Frac a = eval_frac(*n.a, field, spectral);
        return {-a.num, a.den};
    }
    case Node::Mul: {
        Frac a = eval_frac(*n.a, field, spectral), b = eval_frac(*n.b, field, spectral);
        return {a.num * b.num, a.den * b.den};
    }
    case Node::Div: {
        Frac a = eval_frac(*n.a, field, spectral), b = eval_frac(*n.b, field, spectral);
        if (b.num.is_zero_poly()) fail(Err::DivisionByZero, "division by zero in expression");
        return {a.num * b.den, a.den * b.num};
    }
    case Node::Pow: {
        Frac a = eval_frac(*n.a, field, spectral);
        return {a.num.pow(n.exp), a.den.pow(n.exp)};
    }
    }
    fail(Err::Internal, "bad AST node");
}

} // namespace

DiffOp<FieldElement> parse_operator(const std::string& text, const FieldSpecPtr& field) {
    Parser p(text);
    NodePtr ast = p.parse();
    return eval_op(*ast, field);
}

std::pair<MultiPoly<FieldElement>, MultiPoly<FieldElement>>
parse_spoly_fraction(const std::string& text, const FieldSpecPtr& field, const RingPtr& spectral) {
    Parser p(text);
    NodePtr ast = p.parse();
    Frac f = eval_frac(*ast, field, spectral);
    return {std::move(f.num), std::move(f.den)};
}

MultiPoly<FieldElement> parse_spoly(const std::string& text, const FieldSpecPtr& field,
                                    const RingPtr& spectral) {
    auto [num, den] = parse_spoly_fraction(text, field, spectral);
    if (den.is_zero_poly()) fail(Err::DivisionByZero, "zero denominator");
    // a spectral-free denominator folds into the coefficients; anything else
    // is a proper fraction, not a polynomial
    if (!den.is_constant())
        fail(Err::ParseError, "expression is a proper fraction, not a polynomial");
    FieldElement inv = den.constant_value().inv();
    return num.map_coeffs([&](const FieldElement& c) { return c * inv; });
}

QPoly parse_qpoly(const std::string& text, const RingPtr& spectral) {
    MultiPoly<FieldElement> p = parse_spoly(text, FieldSpec::rationals(), spectral);
    QPoly q(spectral);
    for (auto& [e, c] : p.terms()) {
        if (!c.is_rational())
            fail(Err::ParseError, "expected constant coefficients");
        q.add_term(e, c.rat_value());
    }
    return q;
}

FieldElement parse_field_element(const std::string& text, const FieldSpecPtr& field) {
    static const RingPtr empty = make_ring({});
    auto [num, den] = parse_spoly_fraction(text, field, empty);
    FieldElement n = num.is_zero_poly() ? FieldElement(0) : num.constant_value();
    FieldElement d = den.is_zero_poly() ? FieldElement(0) : den.constant_value();
    return n / d;
}

} // namespace odo
